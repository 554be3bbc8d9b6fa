"""Lower and upper bounds for vertex Folkman numbers and small Ramsey numbers."""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .arrowing import ArrowSpec, arrows
from .generation import MAX_GENERATED_ORDER, Constraint, generate_graphs, generate_levels
from .graph import Graph, MAX_VERTICES, canonical_form, read_graph6_lines, to_graph6
from .invariants import Budget, BudgetExhausted, clique_number, has_clique, independence_number

BUILTIN_MAX_ORDER = 13


class NonexistenceError(ValueError):
    """F_v(a; q) is undefined because q does not exceed every threshold."""


class VerificationFailed(ValueError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    """Scale limits for exhaustive searches.

    ``external_source`` names a graph6 file (or ``-``) supplying graphs for
    orders beyond the built-in generator; ``attested`` declares that stream
    complete for the constraints it is used with.
    """

    max_vertices: int = BUILTIN_MAX_ORDER
    node_budget: int | None = None
    workers: int = 1
    external_source: str | None = None
    attested: bool = False

    def __post_init__(self) -> None:
        if not 0 <= self.max_vertices <= MAX_VERTICES:
            raise ValueError(f"max_vertices must lie in 0..{MAX_VERTICES}")
        if self.workers < 1:
            raise ValueError("workers must be positive")

    @classmethod
    def from_env(cls, **kwargs) -> SearchBudget:
        env = os.environ.get("VFOLKMAN_NODE_BUDGET")
        if env and "node_budget" not in kwargs:
            kwargs["node_budget"] = int(env)
        return cls(**kwargs)

    def counter(self) -> Budget:
        return Budget(self.node_budget)


@dataclass
class BoundResult:
    target: str
    kind: str  # "lower" | "upper" | "exact"
    value: int
    evidence: dict = field(default_factory=dict)
    complete: bool = True  # False when a budget cut the search short

    def as_dict(self) -> dict:
        return {"target": self.target, "kind": self.kind, "value": self.value,
                "complete": self.complete, "evidence": self.evidence}


def folkman_target(spec: ArrowSpec, q: int) -> str:
    return f"F_v({spec};{q})"


def _check_exists(spec: ArrowSpec, q: int) -> None:
    if q <= spec.p:
        raise NonexistenceError(f"{folkman_target(spec, q)} does not exist: need q > max a_i = {spec.p}")


_STDIN_GRAPHS: list[Graph] | None = None


def external_graphs(source: str) -> list[Graph]:
    """Graphs from a graph6 file, or from standard input for ``-`` (read once, then reused)."""
    global _STDIN_GRAPHS
    if source == "-":
        if _STDIN_GRAPHS is None:
            _STDIN_GRAPHS = list(read_graph6_lines(sys.stdin))
        return _STDIN_GRAPHS
    return list(read_graph6_lines(Path(source).read_text().splitlines()))


def min_degree_bound(spec: ArrowSpec) -> int:
    """Every minimum-order member of H_v(spec; q) has minimum degree >= m - 1.

    If ``G - v`` has a free colouring that cannot absorb ``v``, then for each
    class i the neighbours of v in class i contain an (a_i - 1)-clique.
    """
    return spec.m - 1


def members(n: int, spec: ArrowSpec, q: int, *, prune: bool, budget: Budget | None,
            workers: int = 1) -> tuple[list[Graph], int]:
    """Members of H_v(spec; q) on n vertices among the generated candidates."""
    c = Constraint(max_clique=q - 1, min_degree=min_degree_bound(spec) if prune else None)
    cands = generate_graphs(n, c, budget=budget, workers=workers)
    return [g for g in cands if arrows(g, spec, budget)], len(cands)


def folkman_lower_bound(spec: ArrowSpec, q: int, n_max: int,
                        budget: SearchBudget | None = None, prune: bool = True, *,
                        counter: Budget | None = None) -> BoundResult:
    """Exhaust K_q-free graphs on at most ``n_max`` vertices.

    Returns ``exact`` with the first (least-order, then least graph6) member
    found, otherwise ``lower`` with value ``n_max + 1``.  With ``prune`` only
    graphs of minimum degree >= m - 1 are examined, which cannot hide the
    minimum order.  A tripped budget yields an incomplete ``lower`` result
    covering the orders finished so far.  ``counter`` lets several searches
    share one node budget.
    """
    _check_exists(spec, q)
    budget = budget or SearchBudget()
    counter = counter if counter is not None else budget.counter()
    target = folkman_target(spec, q)
    limit = min(n_max, budget.max_vertices, MAX_GENERATED_ORDER)
    evidence: dict = {"pruning": f"min_degree>={min_degree_bound(spec)}" if prune else "none",
                      "candidates": {}}
    done = 0
    try:
        if prune:
            for n in range(1, limit + 1):
                found, count = members(n, spec, q, prune=True, budget=counter,
                                       workers=budget.workers)
                evidence["candidates"][n] = count
                if found:
                    evidence["witness"] = to_graph6(found[0])
                    return BoundResult(target, "exact", n, evidence)
                done = n
        else:
            for n, graphs in generate_levels(limit, Constraint(max_clique=q - 1), budget=counter,
                                             workers=budget.workers):
                evidence["candidates"][n] = len(graphs)
                for g in graphs:
                    if arrows(g, spec, counter):
                        evidence["witness"] = to_graph6(g)
                        return BoundResult(target, "exact", n, evidence)
                done = n
    except BudgetExhausted as exc:
        evidence["budget"] = str(exc)
        evidence["verified_through"] = done
        return BoundResult(target, "lower", done + 1, evidence, complete=False)
    evidence["verified_through"] = done
    if done < n_max and budget.external_source:
        ext = [g for g in external_graphs(budget.external_source) if done < g.n <= n_max]
        hits = sorted((g for g in ext if not has_clique(g.rows, g.vertex_mask, q)
                       and arrows(g, spec, counter)), key=lambda g: (g.n, to_graph6(g)))
        evidence["external"] = {"source": budget.external_source, "graphs": len(ext),
                                "attested": budget.attested}
        if hits:
            evidence["witness"] = to_graph6(hits[0])
            return BoundResult(target, "exact" if budget.attested else "upper", hits[0].n,
                               evidence, complete=budget.attested)
        if budget.attested:
            evidence["verified_through"] = n_max
            return BoundResult(target, "lower", n_max + 1, evidence)
        return BoundResult(target, "lower", done + 1, evidence, complete=False)
    return BoundResult(target, "lower", done + 1, evidence, complete=done >= n_max)


def extremal_graphs(spec: ArrowSpec, q: int, n: int, *, assume_minimum: bool = False,
                    budget: SearchBudget | None = None,
                    counter: Budget | None = None) -> list[Graph]:
    """All members of H_v(spec; q) on exactly ``n`` vertices, canonical and sorted.

    ``assume_minimum`` restricts to minimum degree >= m - 1; only valid when
    ``n`` is already known to be the least order of a member.
    """
    _check_exists(spec, q)
    budget = budget or SearchBudget()
    counter = counter if counter is not None else budget.counter()
    found, _ = members(n, spec, q, prune=assume_minimum, budget=counter, workers=budget.workers)
    return sorted((canonical_form(g) for g in found), key=to_graph6)


def folkman_upper_bound(g: Graph, spec: ArrowSpec, q: int,
                        budget: Budget | int | None = None) -> BoundResult:
    _check_exists(spec, q)
    omega = clique_number(g)
    if omega >= q:
        raise VerificationFailed(f"clique condition fails: omega={omega} >= q={q}")
    if not arrows(g, spec, budget):
        raise VerificationFailed(f"arrowing fails: a ({spec})-free colouring exists")
    return BoundResult(folkman_target(spec, q), "upper", g.n,
                       {"witness": to_graph6(g), "omega": omega})


RAMSEY_VALUES = {(3, 3): 6, (4, 3): 9, (5, 3): 14, (6, 3): 18, (4, 4): 18}


def verify_ramsey(p: int, q: int, scale: int = 9, budget: SearchBudget | None = None,
                  counter: Budget | None = None) -> BoundResult:
    """Check R(p, q) from both sides as far as ``scale`` allows.

    Lower side: the witness on R - 1 vertices has clique number < p and
    independence number < q.  Upper side: generating every graph with those
    two hereditary bounds finds none on R vertices.  The upper side runs only
    when ``R <= scale``.  Complementation swaps the two bounds, so growth uses
    the smaller clique bound.
    """
    from .constructions import ramsey_witness
    if (p, q) not in RAMSEY_VALUES:
        raise ValueError(f"unsupported Ramsey pair ({p}, {q})")
    value = RAMSEY_VALUES[p, q]
    target = f"R({p},{q})"
    w = ramsey_witness(p, q)
    omega, alpha = clique_number(w), independence_number(w)
    if not (w.n == value - 1 and omega < p and alpha < q):
        raise VerificationFailed(f"{target} witness fails: n={w.n}, omega={omega}, alpha={alpha}")
    evidence: dict = {"witness": to_graph6(w), "witness_omega": omega, "witness_alpha": alpha}
    if value > min(scale, MAX_GENERATED_ORDER):
        evidence["upper"] = f"not run: needs enumeration at n={value} (scale {scale})"
        return BoundResult(target, "lower", value, evidence)
    budget = budget or SearchBudget()
    counter = counter if counter is not None else budget.counter()
    c = Constraint(max_clique=min(p, q) - 1, max_independent=max(p, q) - 1)
    counts = {}
    try:
        for n, graphs in generate_levels(value, c, budget=counter, workers=budget.workers):
            counts[n] = len(graphs)
    except BudgetExhausted as exc:
        evidence["upper"] = str(exc)
        evidence["counts"] = counts
        return BoundResult(target, "lower", value, evidence, complete=False)
    evidence["counts"] = counts
    if counts[value] != 0 or counts[value - 1] == 0:
        raise VerificationFailed(f"{target}: enumeration disagrees with the tabulated value")
    return BoundResult(target, "exact", value, evidence)


def small_folkman_number(spec: ArrowSpec, q: int, n_max: int = 12,
                         budget: SearchBudget | None = None) -> int:
    """Exact F_v(spec; q) by pruned enumeration; raises if not reached within ``n_max``."""
    res = folkman_lower_bound(spec, q, n_max, budget)
    if res.kind != "exact":
        raise VerificationFailed(f"{res.target} exceeds {n_max} or the budget ran out")
    return res.value


def hv_members_up_to(spec: ArrowSpec, q: int, n_max: int,
                     budget: SearchBudget | None = None) -> Iterable[Graph]:
    """Every member of H_v(spec; q) with at most ``n_max`` vertices (no pruning)."""
    budget = budget or SearchBudget()
    for n, graphs in generate_levels(n_max, Constraint(max_clique=q - 1), budget=budget.counter(),
                                     workers=budget.workers):
        for g in graphs:
            if arrows(g, spec):
                yield g
