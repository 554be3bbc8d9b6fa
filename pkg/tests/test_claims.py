import json

import pytest

from vfolkman.claims import (
    REGISTRY, SCHEMA, VERDICTS, Check, UnknownClaim, _verdict, claim_ids, verify_claim,
)
from vfolkman.folkman import SearchBudget


def _c(kind, status, **detail):
    return Check("x", kind, status, detail)


def test_verdict_rules():
    req = ("exhaustive", "witness")
    assert _verdict([_c("witness", "pass"), _c("exhaustive", "pass")], req) == "verified"
    assert _verdict([_c("witness", "pass"), _c("exhaustive", "fail")], req) == "refuted"
    assert _verdict([_c("witness", "pass"), _c("exhaustive", "incomplete")], req) == \
        "partially-verified"
    assert _verdict([_c("witness", "pass"), _c("exhaustive", "skipped")], req) == "witness-only"
    assert _verdict([_c("witness", "pass")], req) == "witness-only"
    assert _verdict([_c("exhaustive", "pass"), _c("witness", "skipped")], req) == \
        "partially-verified"
    assert _verdict([_c("witness", "pass"), _c("exhaustive", "fail", informational=True)],
                    ("witness",)) == "verified"


def test_registry_ids():
    ids = claim_ids()
    assert len(ids) == len(set(ids)) == len(REGISTRY)
    for cid in ("thm1.2a", "thm1.4a", "eq1.5", "eq1.8", "eq2.6", "thm3.1", "thm5.2", "table1"):
        assert cid in ids
    with pytest.raises(UnknownClaim):
        verify_claim("thm9.9")


def test_quick_claims_verified():
    for cid in ("thm1.2a", "thm1.5c", "thm3.1", "thm5.2", "remark4", "table1"):
        rec = verify_claim(cid)
        assert rec.verdict == "verified", (cid, rec.as_dict())
        assert rec.verdict in VERDICTS


def test_record_shape_and_determinism():
    a = verify_claim("thm1.2a", max_r=3)
    b = verify_claim("thm1.2a", max_r=3)
    assert a.as_dict(runtime=False) == b.as_dict(runtime=False)
    d = json.loads(a.to_json())
    assert d["schema"] == SCHEMA and d["id"] == "thm1.2a" and "runtime" in d
    assert {c["kind"] for c in d["checks"]} <= {"witness", "exhaustive", "property"}
    assert {c["status"] for c in d["checks"]} <= {"pass", "fail", "incomplete", "skipped"}
    assert "runtime" not in a.as_dict(runtime=False)


def test_budget_exhaustion_is_reported():
    rec = verify_claim("thm1.4a", SearchBudget(node_budget=500))
    assert rec.budget_exhausted
    assert rec.verdict == "partially-verified"
    assert any(c.status == "incomplete" for c in rec.checks)
    assert any(c.kind == "witness" and c.status == "pass" for c in rec.checks)


def test_scale_limit_is_reported():
    rec = verify_claim("thm1.6a", SearchBudget(max_vertices=10))
    assert rec.verdict != "verified"


def test_out_of_scope_claims_stay_partial():
    rec = verify_claim("eq1.8", n_max=9)
    assert rec.verdict in ("witness-only", "partially-verified")
