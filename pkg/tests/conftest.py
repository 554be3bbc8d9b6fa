from __future__ import annotations

import itertools
import random

import pytest

from vfolkman.graph import Graph


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def brute_clique_number(g: Graph) -> int:
    best = 0
    for m in range(1 << g.n):
        vs = [v for v in range(g.n) if m >> v & 1]
        if len(vs) > best and all(g.has_edge(u, v) for u, v in itertools.combinations(vs, 2)):
            best = len(vs)
    return best


def brute_independence_number(g: Graph) -> int:
    best = 0
    for m in range(1 << g.n):
        vs = [v for v in range(g.n) if m >> v & 1]
        if len(vs) > best and not any(g.has_edge(u, v) for u, v in itertools.combinations(vs, 2)):
            best = len(vs)
    return best


def brute_colorable(g: Graph, k: int) -> bool:
    edges = list(g.edges())
    for col in itertools.product(range(k), repeat=g.n):
        if all(col[u] != col[v] for u, v in edges):
            return True
    return g.n == 0


def brute_chromatic_number(g: Graph) -> int:
    k = 0
    while not brute_colorable(g, k):
        k += 1
    return k


def brute_free_colorings(g: Graph, a: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Every labelled assignment (0-based classes) whose class i has no a[i]-clique."""
    out = []
    for col in itertools.product(range(len(a)), repeat=g.n):
        ok = True
        for i, ai in enumerate(a):
            cls = [v for v in range(g.n) if col[v] == i]
            for sub in itertools.combinations(cls, ai):
                if all(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(col)
    return out


def partition_key(col: tuple[int, ...], a: tuple[int, ...]) -> tuple:
    """Assignment modulo permutations of classes with equal thresholds."""
    groups: dict[int, list[frozenset[int]]] = {}
    for i, ai in enumerate(a):
        groups.setdefault(ai, []).append(frozenset(v for v, c in enumerate(col) if c == i))
    return tuple(sorted((ai, tuple(sorted(tuple(sorted(s)) for s in sets)))
                        for ai, sets in groups.items()))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def subset_clique_number(g: Graph) -> int:
    """Largest vertex subset whose members are pairwise adjacent (all 2^n subsets)."""
    rows = g.rows
    best = 0
    for m in range(1 << g.n):
        size = m.bit_count()
        if size <= best:
            continue
        if all((rows[v] | 1 << v) & m == m for v in range(g.n) if m >> v & 1):
            best = size
    return best


def subset_dp_chromatic(g: Graph) -> int:
    """Fewest independent sets covering V, by dynamic programming over vertex subsets."""
    n, rows = g.n, g.rows
    indep = [True] * (1 << n)
    for m in range(1, 1 << n):
        low = (m & -m).bit_length() - 1
        indep[m] = indep[m & (m - 1)] and not rows[low] & m
    dp = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        rest = m ^ low
        best = n
        s = rest
        while True:
            part = s | low
            if indep[part] and dp[m ^ part] + 1 < best:
                best = dp[m ^ part] + 1
            if s == 0:
                break
            s = (s - 1) & rest
        dp[m] = best
    return dp[(1 << n) - 1]
