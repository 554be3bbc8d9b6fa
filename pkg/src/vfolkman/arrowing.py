"""Free vertex colourings and the vertex-arrowing relation.

A colouring ``V = V_1 u ... u V_r`` is *free* for thresholds ``(a_1, ..., a_r)``
when no class ``V_i`` contains an ``a_i``-clique; ``G`` arrows the thresholds
when no free colouring exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import Graph, bits, mask_of, remove, to_graph6
from .invariants import (Budget, as_budget, chromatic_number, has_clique, iter_cliques,
                         k_coloring)

MAX_CLASSES = 16


@dataclass(frozen=True)
class ArrowSpec:
    """Clique thresholds ``a``; ``m`` and ``p`` are always derived from them."""

    a: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if not self.a:
            raise ValueError("need at least one colour class")
        if len(self.a) > MAX_CLASSES:
            raise ValueError(f"at most {MAX_CLASSES} colour classes are supported")
        if any(x < 2 for x in self.a):
            raise ValueError("every clique threshold must be at least 2")

    @classmethod
    def twos(cls, r: int) -> ArrowSpec:
        return cls((2,) * r)

    @classmethod
    def parse(cls, text: str) -> ArrowSpec:
        return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))

    @property
    def r(self) -> int:
        return len(self.a)

    @property
    def m(self) -> int:
        return sum(x - 1 for x in self.a) + 1

    @property
    def p(self) -> int:
        return max(self.a)

    @property
    def all_twos(self) -> bool:
        return all(x == 2 for x in self.a)

    def __str__(self) -> str:
        return ",".join(map(str, self.a))


@dataclass(frozen=True)
class Coloring:
    """Class index (1-based) of every vertex."""

    assignment: tuple[int, ...]

    def classes(self, r: int) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(r)]
        for v, c in enumerate(self.assignment):
            out[c - 1].append(v)
        return out

    def class_masks(self, r: int) -> list[int]:
        return [mask_of(c) for c in self.classes(r)]


def is_free_coloring(g: Graph, spec: ArrowSpec, c: Coloring | Sequence[int]) -> bool:
    assignment = c.assignment if isinstance(c, Coloring) else tuple(c)
    if len(assignment) != g.n:
        raise ValueError(f"colouring covers {len(assignment)} vertices, graph has {g.n}")
    masks = [0] * spec.r
    for v, i in enumerate(assignment):
        if not 1 <= i <= spec.r:
            raise ValueError(f"class index {i} outside 1..{spec.r}")
        masks[i - 1] |= 1 << v
    return not any(has_clique(g.rows, m, a) for m, a in zip(masks, spec.a))


def degeneracy_order(g: Graph) -> list[int]:
    """Reverse smallest-last order: densest core first."""
    left = g.vertex_mask
    out = []
    while left:
        v = min(bits(left), key=lambda u: ((g.rows[u] & left).bit_count(), u))
        out.append(v)
        left &= ~(1 << v)
    return out[::-1]


def _groups(spec: ArrowSpec) -> list[int]:
    """For each class, the previous class with the same threshold (or -1)."""
    prev = []
    last: dict[int, int] = {}
    for i, a in enumerate(spec.a):
        prev.append(last.get(a, -1))
        last[a] = i
    return prev


def _search(g: Graph, spec: ArrowSpec, order: Sequence[int], budget: Budget | None,
            extra_ok=None) -> Iterator[list[int]]:
    """Yield free colourings (0-based class per vertex), one per class-set partition.

    A class may only be opened once the preceding class with the same
    threshold is nonempty, so permutations of interchangeable classes are
    never revisited.
    """
    rows = g.rows
    r = spec.r
    need = [a - 1 for a in spec.a]
    prev = _groups(spec)
    masks = [0] * r
    color = [0] * g.n
    n = len(order)

    def rec(idx: int) -> Iterator[list[int]]:
        if budget is not None:
            budget.tick()
        if idx == n:
            if extra_ok is None or extra_ok(masks):
                yield list(color)
            return
        v = order[idx]
        rv = rows[v]
        for i in range(r):
            if prev[i] >= 0 and not masks[prev[i]]:
                continue
            if has_clique(rows, masks[i] & rv, need[i]):
                continue
            masks[i] |= 1 << v
            color[v] = i
            yield from rec(idx + 1)
            masks[i] &= ~(1 << v)

    yield from rec(0)


def find_free_coloring(g: Graph, spec: ArrowSpec, budget: Budget | int | None = None,
                       method: str = "auto") -> Coloring | None:
    """A free colouring, or None when ``g`` arrows ``spec``.

    ``method`` is ``"search"`` (general clique-avoiding backtracking),
    ``"chromatic"`` (proper r-colouring, all thresholds 2 only) or ``"auto"``.
    """
    b = None if budget is None else as_budget(budget)
    if method not in ("auto", "search", "chromatic"):
        raise ValueError(f"unknown method {method!r}")
    if method == "chromatic" or (method == "auto" and spec.all_twos):
        if not spec.all_twos:
            raise ValueError("the chromatic route needs every threshold equal to 2")
        col = k_coloring(g, spec.r, b)
        return None if col is None else Coloring(tuple(c + 1 for c in col))
    for col in _search(g, spec, degeneracy_order(g), b):
        return Coloring(tuple(c + 1 for c in col))
    return None


def arrows(g: Graph, spec: ArrowSpec, budget: Budget | int | None = None,
           method: str = "auto") -> bool:
    """True iff every r-colouring of ``g`` puts an ``a_i``-clique in some class ``i``."""
    return find_free_coloring(g, spec, budget, method) is None


def enumerate_free_colorings(g: Graph, spec: ArrowSpec, limit: int | None = None,
                             budget: Budget | int | None = None) -> Iterator[Coloring]:
    """Stream distinct free colourings, up to interchange of equal-threshold classes.

    Vertices are assigned in label order, so among equal thresholds the
    classes come out sorted by their least vertex (empty classes last).
    Intended for n <= 14 and r <= 3.
    """
    if limit is not None and limit <= 0:
        return
    b = None if budget is None else as_budget(budget)
    for k, col in enumerate(_search(g, spec, range(g.n), b), 1):
        yield Coloring(tuple(c + 1 for c in col))
        if limit is not None and k >= limit:
            return


def find_free_coloring_where(g: Graph, spec: ArrowSpec, accept,
                             budget: Budget | int | None = None) -> Coloring | None:
    """First free colouring whose class masks satisfy ``accept(masks)``."""
    b = None if budget is None else as_budget(budget)
    for col in _search(g, spec, degeneracy_order(g), b, extra_ok=accept):
        return Coloring(tuple(c + 1 for c in col))
    return None


def in_Hv(g: Graph, spec: ArrowSpec, q: int, budget: Budget | int | None = None,
          method: str = "auto") -> bool:
    """Membership in H_v(spec; q): arrows ``spec`` and has no ``q``-clique."""
    if q < 2:
        raise ValueError("q must be at least 2")
    b = None if budget is None else as_budget(budget)
    if has_clique(g.rows, g.vertex_mask, q):
        return False
    return arrows(g, spec, b, method)


def arrows_by_chromatic_number(g: Graph, r: int, budget: Budget | int | None = None) -> bool:
    """``G -> (2,...,2)`` with r classes decided as ``chi(G) >= r + 1``."""
    return chromatic_number(g, budget) >= r + 1


def reduce_by_independent_set(g: Graph, A: Iterable[int]) -> Graph:
    """``G - A`` for an independent set ``A``."""
    A = list(A)
    m = mask_of(A)
    if m & ~g.vertex_mask:
        raise ValueError("vertex outside the graph")
    if any(g.rows[v] & m for v in A):
        raise ValueError("A is not an independent set")
    return remove(g, m)


class ClauseCapExceeded(RuntimeError):
    pass


def encode_free_coloring_cnf(g: Graph, spec: ArrowSpec, max_clauses: int = 1_000_000) -> str:
    """DIMACS CNF whose models are exactly the free colourings of ``g``.

    Variable ``v * r + i + 1`` means vertex ``v`` is in class ``i`` (0-based).
    """
    r = spec.r

    def var(v: int, i: int) -> int:
        return v * r + i + 1

    clauses: list[list[int]] = []

    def add(cl: list[int]) -> None:
        clauses.append(cl)
        if len(clauses) > max_clauses:
            raise ClauseCapExceeded(f"more than {max_clauses} clauses")

    for v in range(g.n):
        add([var(v, i) for i in range(r)])
        for i in range(r):
            for j in range(i + 1, r):
                add([-var(v, i), -var(v, j)])
    for i, a in enumerate(spec.a):
        for clique in iter_cliques(g.rows, g.vertex_mask, a):
            add([-var(v, i) for v in clique])
    head = [f"c graph6 {to_graph6(g)}", f"c spec {spec}",
            f"p cnf {g.n * r} {len(clauses)}"]
    return "\n".join(head + [" ".join(map(str, cl)) + " 0" for cl in clauses]) + "\n"


def parse_dimacs(text: str) -> tuple[int, list[list[int]]]:
    nvars, clauses = 0, []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            nvars = int(line.split()[2])
            continue
        lits = [int(x) for x in line.split()]
        if lits[-1] != 0:
            raise ValueError("clause line must end with 0")
        clauses.append(lits[:-1])
    return nvars, clauses

