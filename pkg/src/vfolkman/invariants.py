"""Exact clique, independence and chromatic numbers on bit-row graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits, complement, induced, remove


class BudgetExhausted(RuntimeError):
    """A search ran out of nodes before reaching a definite answer."""

    def __init__(self, used: int, limit: int):
        super().__init__(f"node budget exhausted after {used} nodes (limit {limit})")
        self.used = used
        self.limit = limit


class Budget:
    """Shared node counter; ``limit=None`` means unbounded."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.used = 0

    def tick(self, k: int = 1) -> None:
        self.used += k
        if self.limit is not None and self.used > self.limit:
            raise BudgetExhausted(self.used, self.limit)


def as_budget(budget: Budget | int | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)


# --- cliques ----------------------------------------------------------------

def _color_bound(rows: Sequence[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of ``cand``; vertices listed by ascending colour."""
    order: list[int] = []
    colors: list[int] = []
    k = 0
    while cand:
        k += 1
        q = cand
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~rows[v] & ~low
            cand &= ~low
            order.append(v)
            colors.append(k)
    return order, colors


def max_clique_in(rows: Sequence[int], cand: int, target: int | None = None,
                  budget: Budget | None = None) -> tuple[int, int]:
    """Maximum clique inside the vertex mask ``cand`` as ``(size, mask)``.

    With ``target`` set, stops as soon as a clique of that size is found.
    """
    best = [0, 0]
    stop = target if target is not None else 1 << 30

    def expand(size: int, clique: int, cand: int) -> bool:
        if budget is not None:
            budget.tick()
        order, colors = _color_bound(rows, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best[0]:
                return False
            v = order[i]
            new = cand & rows[v]
            if new:
                if expand(size + 1, clique | 1 << v, new):
                    return True
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, clique | 1 << v
                if best[0] >= stop:
                    return True
            cand &= ~(1 << v)
        return False

    if cand:
        expand(0, 0, cand)
    return best[0], best[1]


def has_clique(rows: Sequence[int], cand: int, k: int) -> bool:
    """True when the vertices of ``cand`` contain a ``k``-clique."""
    if k <= 0:
        return True
    if k == 1:
        return cand != 0
    if k == 2:
        return any(rows[v] & cand for v in bits(cand))
    if cand.bit_count() < k:
        return False
    return max_clique_in(rows, cand, target=k)[0] >= k


def iter_cliques(rows: Sequence[int], cand: int, k: int):
    """Yield every ``k``-clique inside ``cand`` as a sorted vertex tuple."""
    def rec(prefix: tuple[int, ...], cand: int, need: int):
        if need == 0:
            yield prefix
            return
        while cand and cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from rec(prefix + (v,), cand & rows[v], need - 1)
    yield from rec((), cand, k)


def clique_number(g: Graph, budget: Budget | int | None = None) -> int:
    b = None if budget is None else as_budget(budget)
    return max_clique_in(g.rows, g.vertex_mask, budget=b)[0]


def max_clique(g: Graph) -> list[int]:
    return list(bits(max_clique_in(g.rows, g.vertex_mask)[1]))


def independence_number(g: Graph, budget: Budget | int | None = None) -> int:
    return clique_number(complement(g), budget)


def max_independent_set(g: Graph) -> list[int]:
    return max_clique(complement(g))


# --- colouring --------------------------------------------------------------

def co_components(g: Graph) -> list[int]:
    """Vertex masks of the connected components of the complement."""
    comp = complement(g).rows
    left = g.vertex_mask
    parts = []
    while left:
        seen = frontier = left & -left
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= comp[v]
            frontier = nxt & ~seen
            seen |= frontier
        parts.append(seen)
        left &= ~seen
    return parts


def dsatur_coloring(g: Graph) -> list[int]:
    """Greedy DSATUR colouring with colours 0..k-1."""
    n = g.n
    rows = g.rows
    color = [-1] * n
    sat = [0] * n  # bitmask of colours seen in the neighbourhood
    deg = g.degrees()
    for _ in range(n):
        v = max((u for u in range(n) if color[u] < 0),
                key=lambda u: (sat[u].bit_count(), deg[u], -u))
        c = 0
        while sat[v] >> c & 1:
            c += 1
        color[v] = c
        for u in bits(rows[v]):
            sat[u] |= 1 << c
    return color


def _colorable(rows: Sequence[int], n: int, k: int, budget: Budget | None) -> list[int] | None:
    """Exact k-colouring by DSATUR-ordered backtracking, or None if none exists.

    Colour symmetry is broken by only ever opening the lowest unused colour.
    """
    if n == 0:
        return []
    if k <= 0:
        return None
    color = [-1] * n
    classes: list[int] = []  # vertex mask per open colour
    deg = [r.bit_count() for r in rows]
    uncolored = (1 << n) - 1

    def pick() -> tuple[int, list[int]]:
        best_v, best_opts, best_key = -1, [], None
        for v in bits(uncolored):
            # available colours among the open ones, plus one fresh colour if allowed
            opts = [c for c, m in enumerate(classes) if not m & rows[v]]
            if len(classes) < k:
                opts.append(len(classes))
            key = (len(opts), -(rows[v] & uncolored).bit_count(), -deg[v])
            if best_key is None or key < best_key:
                best_v, best_opts, best_key = v, opts, key
                if not opts:
                    break
        return best_v, best_opts

    def rec() -> bool:
        nonlocal uncolored
        if not uncolored:
            return True
        if budget is not None:
            budget.tick()
        v, opts = pick()
        for c in opts:
            if c == len(classes):
                classes.append(1 << v)
            else:
                classes[c] |= 1 << v
            color[v] = c
            uncolored &= ~(1 << v)
            if rec():
                return True
            uncolored |= 1 << v
            color[v] = -1
            if classes[c] == 1 << v:
                classes.pop()
            else:
                classes[c] &= ~(1 << v)
        return False

    return color if rec() else None


def k_coloring(g: Graph, k: int, budget: Budget | int | None = None) -> list[int] | None:
    """A proper colouring with colours ``0..k-1``, or None when ``chi(g) > k``."""
    b = None if budget is None else as_budget(budget)
    return _colorable(g.rows, g.n, k, b)


def is_k_colorable(g: Graph, k: int, budget: Budget | int | None = None) -> bool:
    return k_coloring(g, k, budget) is not None


def _chromatic_raw(g: Graph, budget: Budget | None) -> int:
    n = g.n
    if n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    upper = max(dsatur_coloring(g)) + 1
    alpha = independence_number(g)
    lower = max(clique_number(g), -(-n // alpha))
    for k in range(lower, upper):
        if _colorable(g.rows, n, k, budget) is not None:
            return k
    return upper


def chromatic_number(g: Graph, budget: Budget | int | None = None, *,
                     decompose: bool = True) -> int:
    """Exact chromatic number.

    Lower bound ``max(omega, ceil(n/alpha))``, upper bound from DSATUR, then
    exact k-colourability for each k in between.  With ``decompose`` the graph
    is first split into the components of its complement, whose chromatic
    numbers add.  Raises :class:`BudgetExhausted` rather than guessing.
    """
    b = None if budget is None else as_budget(budget)
    if decompose:
        parts = co_components(g)
        if len(parts) > 1:
            return sum(_chromatic_raw(induced(g, m), b) for m in parts)
    return _chromatic_raw(g, b)


def f_value(g: Graph, budget: Budget | int | None = None) -> int:
    return chromatic_number(g, budget) - clique_number(g)


def is_vertex_critical(g: Graph, budget: Budget | int | None = None) -> bool:
    if g.n < 1:
        raise ValueError("vertex criticality needs at least one vertex")
    b = None if budget is None else as_budget(budget)
    chi = chromatic_number(g, b)
    return all(is_k_colorable(remove(g, [v]), chi - 1, b) for v in range(g.n))


def join_decompose(g: Graph) -> tuple[Graph, Graph] | None:
    """Split ``g = G1 + G2`` with both parts nonempty, or None if impossible.

    ``G1`` is the complement component containing vertex 0.
    """
    if g.n < 2:
        raise ValueError("join decomposition needs at least two vertices")
    parts = co_components(g)
    if len(parts) < 2:
        return None
    first = parts[0]
    return induced(g, first), induced(g, g.vertex_mask & ~first)


@dataclass(frozen=True)
class InvariantReport:
    n: int
    omega: int
    alpha: int
    chi: int

    @property
    def f(self) -> int:
        return self.chi - self.omega

    def as_dict(self) -> dict:
        return {"n": self.n, "omega": self.omega, "alpha": self.alpha, "chi": self.chi, "f": self.f}


def invariants(g: Graph, budget: Budget | int | None = None) -> InvariantReport:
    b = None if budget is None else as_budget(budget)
    return InvariantReport(g.n, clique_number(g, b), independence_number(g, b),
                           chromatic_number(g, b))
