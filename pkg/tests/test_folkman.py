import pytest

from vfolkman.arrowing import ArrowSpec, arrows
from vfolkman.constructions import dirac_extremal, graph_P, lru_extremal, mycielski
from vfolkman.folkman import (
    NonexistenceError, SearchBudget, VerificationFailed, extremal_graphs, folkman_lower_bound,
    folkman_upper_bound, hv_members_up_to, min_degree_bound, small_folkman_number, verify_ramsey,
)
from vfolkman.generation import generate_graphs
from vfolkman.graph import complete, cycle, is_isomorphic, join, parse_graph6, to_graph6
from vfolkman.invariants import (
    chromatic_number, clique_number, independence_number, is_vertex_critical,
)


def test_small_exact_values():
    r = folkman_lower_bound(ArrowSpec.twos(2), 3, 10)
    assert (r.kind, r.value, r.complete) == ("exact", 5, True)
    assert is_isomorphic(cycle(5), parse_graph6(r.evidence["witness"]))
    assert small_folkman_number(ArrowSpec.twos(3), 4) == 6
    assert small_folkman_number(ArrowSpec((2, 3)), 4) == 7


def test_lower_bound_without_member():
    r = folkman_lower_bound(ArrowSpec.twos(3), 3, 10, prune=False)
    assert (r.kind, r.value, r.complete) == ("lower", 11, True)
    assert r.evidence["candidates"][10] == 12172  # triangle-free graphs on 10 vertices
    assert r.evidence["verified_through"] == 10


def test_lower_bound_limits():
    r = folkman_lower_bound(ArrowSpec.twos(3), 3, 10, SearchBudget(max_vertices=7), prune=False)
    assert (r.kind, r.value, r.complete) == ("lower", 8, False)
    r = folkman_lower_bound(ArrowSpec.twos(5), 5, 9, SearchBudget(node_budget=200))
    assert r.kind == "lower" and not r.complete and "budget" in r.evidence
    assert r.value == r.evidence["verified_through"] + 1


def test_pruned_and_unpruned_agree():
    for a, q in [((2, 2), 3), ((2, 2, 2), 4), ((2, 3), 4), ((2, 2, 2), 5), ((3, 3), 5)]:
        spec = ArrowSpec(a)
        fast = folkman_lower_bound(spec, q, 9)
        slow = folkman_lower_bound(spec, q, 9, prune=False)
        assert fast.kind == slow.kind == "exact" and fast.value == slow.value


def test_min_degree_bound_holds_for_extremal_graphs():
    for a, q in [((2, 2), 3), ((2, 2, 2), 4), ((2, 3), 4), ((2, 2, 2, 2), 5)]:
        spec = ArrowSpec(a)
        n = folkman_lower_bound(spec, q, 9, prune=False).value
        for g in extremal_graphs(spec, q, n):
            assert min(g.degrees()) >= min_degree_bound(spec)


def test_unique_extremal_graphs():
    cases = [((2, 2), 3, 5, cycle(5)), ((2, 2, 2), 4, 6, dirac_extremal(3)),
             ((2, 2, 2, 2), 5, 7, dirac_extremal(4)),
             ((2, 3), 4, 7, lru_extremal(ArrowSpec((2, 3))))]
    for a, q, n, want in cases:
        found = extremal_graphs(ArrowSpec(a), q, n)
        assert len(found) == 1 and is_isomorphic(found[0], want)
    assert extremal_graphs(ArrowSpec.twos(2), 3, 4) == []


def test_upper_bound():
    r = folkman_upper_bound(mycielski(cycle(5)), ArrowSpec.twos(3), 3)
    assert (r.kind, r.value) == ("upper", 11)
    assert folkman_upper_bound(join(cycle(5), cycle(5)), ArrowSpec.twos(5), 5).value == 10
    with pytest.raises(VerificationFailed, match="clique"):
        folkman_upper_bound(complete(4), ArrowSpec.twos(3), 4)
    with pytest.raises(VerificationFailed, match="arrowing"):
        folkman_upper_bound(cycle(7), ArrowSpec.twos(3), 3)


def test_nonexistence():
    for a, q in [((2, 3), 3), ((4,), 4), ((2, 2), 2)]:
        with pytest.raises(NonexistenceError):
            folkman_lower_bound(ArrowSpec(a), q, 5)
        with pytest.raises(NonexistenceError):
            folkman_upper_bound(complete(5), ArrowSpec(a), q)


def test_search_budget_validation(monkeypatch):
    with pytest.raises(ValueError):
        SearchBudget(max_vertices=65)
    with pytest.raises(ValueError):
        SearchBudget(workers=0)
    monkeypatch.setenv("VFOLKMAN_NODE_BUDGET", "123")
    assert SearchBudget.from_env().node_budget == 123
    assert SearchBudget.from_env(node_budget=5).node_budget == 5


def test_external_stream(tmp_path):
    src = tmp_path / "g.g6"
    src.write_text(to_graph6(mycielski(cycle(5))) + "\n" + to_graph6(cycle(5)) + "\n")
    spec = ArrowSpec.twos(3)
    plain = folkman_lower_bound(spec, 3, 11, SearchBudget(max_vertices=8, external_source=str(src)),
                                prune=False)
    assert (plain.kind, plain.value, plain.complete) == ("upper", 11, False)
    att = folkman_lower_bound(spec, 3, 11, SearchBudget(max_vertices=8, external_source=str(src),
                                                        attested=True), prune=False)
    assert (att.kind, att.value, att.complete) == ("exact", 11, True)


def test_ramsey():
    r = verify_ramsey(3, 3)
    assert (r.kind, r.value) == ("exact", 6) and r.evidence["counts"][6] == 0
    r = verify_ramsey(4, 3)
    assert (r.kind, r.value) == ("exact", 9) and r.evidence["counts"][8] > 0
    for p, q, v in [(5, 3, 14), (6, 3, 18), (4, 4, 18)]:
        r = verify_ramsey(p, q)
        assert (r.kind, r.value) == ("lower", v)
    with pytest.raises(ValueError):
        verify_ramsey(7, 3)


def test_ramsey_counts_match_brute_filter():
    r = verify_ramsey(4, 3)
    for n in range(1, 9):
        want = sum(1 for g in generate_graphs(n, max_clique=2) if independence_number(g) <= 3)
        assert r.evidence["counts"][n] == want


def test_alpha_property_on_members():
    # |V(G)| >= F_v(2_{r-1}; q) + alpha(G) for members of H_v(2_r; q)
    base = small_folkman_number(ArrowSpec.twos(2), 4)
    assert base == 3
    for g in hv_members_up_to(ArrowSpec.twos(3), 4, 8):
        assert g.n >= base + independence_number(g)


def test_extremal_members_are_critical():
    for r, q, n in [(2, 3, 5), (3, 4, 6), (4, 5, 7)]:
        for g in extremal_graphs(ArrowSpec.twos(r), q, n):
            assert chromatic_number(g) == r + 1 and is_vertex_critical(g)
            assert clique_number(g) == q - 1


def test_P_is_member():
    assert folkman_upper_bound(graph_P(), ArrowSpec.twos(6), 5).value == 13
    assert arrows(graph_P(), ArrowSpec((2, 2, 4)))
