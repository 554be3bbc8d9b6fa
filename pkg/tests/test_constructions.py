import pytest

from vfolkman.arrowing import ArrowSpec, arrows, in_Hv
from vfolkman.constructions import (
    RAMSEY_SUPPORTED, Q_provenance, derived_witnesses, dirac_extremal, graph_P, graph_Q,
    k4_free_five_chromatic, load_registry, lru_extremal, mycielski, p_tilde, q_tilde,
    ramsey_witness, registry_lookup, save_registry, thm14_extremal, triple_c5,
)
from vfolkman.graph import (
    CapacityError, circulant, complement, complete, cycle, is_isomorphic, parse_graph6, to_graph6,
)
from vfolkman.invariants import chromatic_number, clique_number, independence_number

from conftest import random_graph


def test_graph_P():
    P = graph_P()
    assert P.n == 13 and set(P.degrees()) == {8}
    assert clique_number(P) == 4 and independence_number(P) == 2
    assert chromatic_number(P) == 7
    assert is_isomorphic(P, complement(circulant(13, (1, 5))))


def test_graph_Q():
    Q = graph_Q()
    assert Q.n == 17
    assert (clique_number(Q), independence_number(Q), chromatic_number(Q)) == (5, 2, 9)
    assert in_Hv(Q, ArrowSpec.twos(8), 6)
    assert Q_provenance()
    assert graph_Q() == Q


def test_small_extremal_graphs():
    for r in range(2, 8):
        g = dirac_extremal(r)
        assert (g.n, clique_number(g), chromatic_number(g)) == (r + 3, r, r + 1)
    for r in range(5, 9):
        g = thm14_extremal(r)
        assert (g.n, clique_number(g), chromatic_number(g)) == (r + 5, r - 1, r + 1)
    g = triple_c5()
    assert (g.n, clique_number(g), chromatic_number(g)) == (15, 6, 9)
    with pytest.raises(ValueError):
        dirac_extremal(1)
    with pytest.raises(ValueError):
        thm14_extremal(4)


def test_lru_extremal():
    for a in [(2, 2), (2, 3), (3, 3), (2, 2, 2), (2, 2, 3), (2, 4)]:
        spec = ArrowSpec(a)
        g = lru_extremal(spec)
        m, p = spec.m, spec.p
        assert g.n == m + p and clique_number(g) == m - 1 and arrows(g, spec)
    with pytest.raises(ValueError):
        lru_extremal(ArrowSpec((5,)))


def test_mycielski():
    assert chromatic_number(mycielski(cycle(5))) == 4
    grotzsch = mycielski(cycle(5))
    assert grotzsch.n == 11 and clique_number(grotzsch) == 2 and grotzsch.edge_count == 20
    with pytest.raises(CapacityError):
        mycielski(complete(32))


def test_mycielski_random(rng):
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 7))
        m = mycielski(g)
        assert clique_number(m) == max(clique_number(g), 2) if g.edge_count else clique_number(m) <= 2
        assert chromatic_number(m) == chromatic_number(g) + 1


def test_k4_free_five_chromatic():
    g = k4_free_five_chromatic()
    assert g.n == 11 and clique_number(g) == 3 and chromatic_number(g) == 5
    assert in_Hv(g, ArrowSpec.twos(4), 4)


def test_ramsey_witnesses():
    for (p, q), R in RAMSEY_SUPPORTED.items():
        g = ramsey_witness(p, q)
        assert g.n == R - 1 and clique_number(g) < p and independence_number(g) < q
    with pytest.raises(ValueError):
        ramsey_witness(3, 4)


def test_p_tilde_instances():
    for r, s in [(6, 0), (7, 0), (9, 1), (12, 2)]:
        inst = p_tilde(r, s)
        res = inst.check()
        assert res["ok"], res
        assert inst.n == r + 2 * s + 7 and inst.omega == r - s - 2


def test_q_tilde_instances():
    for r, s in [(8, 0), (11, 1)]:
        inst = q_tilde(r, s)
        res = inst.check()
        assert res["ok"], res
        assert inst.graph.n == r + 2 * s + 9


def test_family_preconditions():
    p_tilde(9, 1)
    with pytest.raises(ValueError):
        p_tilde(8, 1)
    q_tilde(11, 1)
    with pytest.raises(ValueError):
        q_tilde(10, 1)
    with pytest.raises(ValueError):
        p_tilde(6, -1)
    with pytest.raises(CapacityError):
        p_tilde(60, 0)


def test_registry_matches_derivation(tmp_path):
    stored = load_registry()
    assert [r.line() for r in stored] == [r.line() for r in derived_witnesses()]
    path = tmp_path / "w.txt"
    save_registry(stored, path)
    assert load_registry(path) == stored
    assert registry_lookup("P") == parse_graph6(to_graph6(stored[0].graph))
    assert registry_lookup("nope", path=path) is None
    assert load_registry(tmp_path / "missing.txt") == []
    bad = tmp_path / "bad.txt"
    bad.write_text("P only\n")
    with pytest.raises(ValueError):
        load_registry(bad)
