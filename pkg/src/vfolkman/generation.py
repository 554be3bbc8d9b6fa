"""Isomorph-free generation of small graphs under hereditary constraints.

Graphs on ``k + 1`` vertices are grown from the canonical representatives on
``k`` vertices by adding one vertex adjacent to a subset ``S``.  Because every
constraint used during growth is hereditary, deleting any vertex of a
qualifying graph leaves a qualifying graph, so every isomorphism class is
reached from some parent.  A child is kept only when the new vertex has the
largest (degree, sorted neighbour degrees) value; each class still has such a
vertex, and its deletion is one of the parents.  Surviving children are
deduplicated by canonical certificate.

A minimum-degree requirement is not hereditary.  It is handled on the
complement side: ``delta(G) >= d`` on ``n`` vertices is ``Delta(~G) <= n-1-d``,
which is hereditary, with the clique and independence bounds swapped.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterator, Sequence

from .graph import Graph, bits, canonical_labeling, canonical_form, complement, to_graph6
from .invariants import Budget, as_budget, has_clique, iter_cliques

MAX_GENERATED_ORDER = 14


@dataclass(frozen=True)
class Constraint:
    """Bounds on the generated graphs; ``None`` means unconstrained.

    ``max_clique``, ``max_independent`` and ``max_degree`` are hereditary and
    are enforced while growing.  ``min_degree`` applies to the final order.
    """

    max_clique: int | None = None
    triangle_free: bool = False
    min_degree: int | None = None
    max_independent: int | None = None
    max_degree: int | None = None

    @property
    def clique_bound(self) -> int | None:
        bounds = [b for b in (self.max_clique, 2 if self.triangle_free else None) if b is not None]
        return min(bounds) if bounds else None

    def describe(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v not in (None, False)}


def _invariant(rows: Sequence[int], v: int, deg: Sequence[int]) -> tuple:
    return tuple(sorted(deg[u] for u in bits(rows[v])))


def _children(args) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Canonical children of one batch of parents: certificate -> rows."""
    parents, kmax, amax, dmax = args
    out: dict[tuple[int, ...], tuple[int, ...]] = {}
    for rows in parents:
        out.update(_expand(rows, kmax, amax, dmax))
    return out


def _expand(rows: Sequence[int], kmax: int | None, amax: int | None,
            dmax: int | None) -> dict[tuple[int, ...], tuple[int, ...]]:
    m = len(rows)
    deg = [r.bit_count() for r in rows]
    top = max(deg, default=0)
    allowed = [v for v in range(m) if dmax is None or deg[v] < dmax]
    hi = len(allowed) if dmax is None else min(dmax, len(allowed))
    if top > hi:
        return {}
    # independent amax-sets of the parent; S must meet every one of them
    blockers: list[int] = []
    if amax is not None:
        full = (1 << m) - 1
        comp = [full & ~r & ~(1 << v) for v, r in enumerate(rows)]
        blockers = [sum(1 << v for v in c) for c in iter_cliques(comp, full, amax)]
        if amax == 0 and m:
            return {}
    if kmax is not None and kmax < 1:
        return {}
    out: dict[tuple[int, ...], tuple[int, ...]] = {}
    new_bit = 1 << m
    for size in range(top, hi + 1):
        for combo in itertools.combinations(allowed, size):
            S = 0
            for v in combo:
                S |= 1 << v
            if size == top and any(deg[v] == top for v in combo):
                continue  # an old vertex would outrank the new one
            if kmax is not None:
                # the new vertex plus a clique of S must stay within kmax
                if kmax == 2:
                    if any(rows[v] & S for v in combo):
                        continue
                elif has_clique(rows, S, kmax):
                    continue
            if blockers and any(not b & S for b in blockers):
                continue
            child = [r | new_bit if r_in else r
                     for r, r_in in zip(rows, ((S >> v) & 1 for v in range(m)))]
            child.append(S)
            cdeg = [d + (S >> v & 1) for v, d in enumerate(deg)] + [size]
            tied = [v for v in range(m) if cdeg[v] == size]
            if tied:
                mine = _invariant(child, m, cdeg)
                if any(_invariant(child, v, cdeg) > mine for v in tied):
                    continue
            g = Graph._trusted(m + 1, child)
            _, cert = canonical_labeling(g)
            if cert not in out:
                out[cert] = cert
    return out


def _grow(n: int, kmax: int | None, amax: int | None, dmax: int | None,
          budget: Budget | None, workers: int = 1) -> Iterator[tuple[int, list[tuple[int, ...]]]]:
    """Yield ``(k, canonical row tuples)`` for k = 0..n."""
    level: list[tuple[int, ...]] = [()]
    yield 0, level
    for k in range(1, n + 1):
        if workers > 1 and len(level) > 4 * workers:
            chunks = [level[i::workers * 4] for i in range(workers * 4)]
            merged: dict = {}
            with ProcessPoolExecutor(workers) as ex:
                for part in ex.map(_children, [(c, kmax, amax, dmax) for c in chunks]):
                    merged.update(part)
        else:
            merged = {}
            for rows in level:
                merged.update(_expand(rows, kmax, amax, dmax))
                if budget is not None:
                    budget.tick()
        level = sorted(merged)
        if budget is not None:
            budget.tick(len(level))
        yield k, level


def _direct(n: int, c: Constraint, budget: Budget | None, workers: int) -> list[Graph]:
    out = []
    for k, level in _grow(n, c.clique_bound, c.max_independent, c.max_degree, budget, workers):
        if k == n:
            for rows in level:
                g = Graph._trusted(n, rows)
                if c.min_degree is None or min(g.degrees(), default=n) >= c.min_degree:
                    out.append(g)
    return out


def generate_graphs(n: int, constraint: Constraint | None = None, *,
                    budget: Budget | int | None = None, workers: int = 1,
                    **kwargs) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Keyword arguments are shorthand for :class:`Constraint` fields.  Results
    are ordered by graph6 string of the canonical form.  Built-in generation
    is documented for ``n <= 12``.
    """
    c = replace(constraint or Constraint(), **kwargs)
    if n < 0:
        raise ValueError("order must be non-negative")
    if n > MAX_GENERATED_ORDER:
        raise ValueError(f"built-in generation stops at n={MAX_GENERATED_ORDER}; "
                         "feed larger orders from an external graph6 stream")
    b = None if budget is None else as_budget(budget)
    if c.min_degree is not None and c.min_degree > 0:
        if c.min_degree > n - 1:
            return []
        dual = Constraint(max_clique=c.max_independent, max_independent=c.clique_bound,
                          max_degree=n - 1 - c.min_degree,
                          min_degree=None if c.max_degree is None else n - 1 - c.max_degree)
        graphs = [canonical_form(complement(h)) for h in _direct(n, dual, b, workers)]
    else:
        graphs = _direct(n, c, b, workers)
    return sorted(graphs, key=to_graph6)


def generate_levels(n_max: int, constraint: Constraint | None = None, *,
                    budget: Budget | int | None = None, workers: int = 1,
                    **kwargs) -> Iterator[tuple[int, list[Graph]]]:
    """``(n, graphs)`` for n = 1..n_max, sharing the growth for hereditary constraints."""
    c = replace(constraint or Constraint(), **kwargs)
    if c.min_degree:
        for n in range(1, n_max + 1):
            yield n, generate_graphs(n, c, budget=budget, workers=workers)
        return
    if n_max > MAX_GENERATED_ORDER:
        raise ValueError(f"built-in generation stops at n={MAX_GENERATED_ORDER}")
    b = None if budget is None else as_budget(budget)
    for k, level in _grow(n_max, c.clique_bound, c.max_independent, c.max_degree, b, workers):
        if k >= 1:
            graphs = [Graph._trusted(k, rows) for rows in level]
            yield k, sorted(graphs, key=to_graph6)


def brute_force_classes(n: int, accept=None) -> set[tuple[int, tuple[int, ...]]]:
    """Isomorphism classes of all labelled graphs on ``n`` vertices (small n only).

    Canonicalises by minimising over all ``n!`` relabellings, independent of
    the refinement-based canonical form.
    """
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    seen = set()
    for m in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if m >> i & 1]
        g = Graph.from_edges(n, edges)
        if accept is not None and not accept(g):
            continue
        key = min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges)) for p in perms)
        seen.add((n, key))
    return seen


def has_clique_graph(g: Graph, k: int) -> bool:
    return has_clique(g.rows, g.vertex_mask, k)
