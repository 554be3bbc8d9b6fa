"""Small immutable graphs stored as adjacency bit rows.

Vertex ``v`` of a :class:`Graph` is adjacent to ``u`` when bit ``u`` of
``rows[v]`` is set.  Capacity is 64 vertices so every row fits one machine
word; all constructors return fresh values and never mutate their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64
CANON_MAX_VERTICES = 32


class CapacityError(ValueError):
    """Raised when a graph would exceed a documented vertex limit."""


class Graph6Error(ValueError):
    """Raised for malformed graph6 input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graph order {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> Graph:
        # skips validation; callers guarantee the row invariants
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", tuple(rows))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"graph order {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge ({u}, {v}) for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, rows)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, graph6={to_graph6(self)!r})"


def _check_order(n: int) -> None:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")


def edgeless(n: int) -> Graph:
    _check_order(n)
    return Graph._trusted(n, [0] * n)


def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph._trusted(n, [full ^ (1 << v) for v in range(n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    _check_order(n)
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    _check_order(n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


@dataclass(frozen=True)
class CirculantSpec:
    """Order ``n`` and connection set ``S`` with residues in ``1..n//2``."""

    n: int
    S: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "S", frozenset(self.S))
        _check_order(self.n)
        for s in self.S:
            if not 1 <= s <= self.n // 2:
                raise ValueError(f"residue {s} outside 1..{self.n // 2}")


def circulant(spec: CirculantSpec | int, S: Iterable[int] | None = None) -> Graph:
    """Cayley graph on Z_n: ``u ~ v`` iff ``(u - v) mod n`` lies in ``S`` or ``-S``.

    Accepts either a :class:`CirculantSpec` or ``circulant(n, S)``.
    """
    if not isinstance(spec, CirculantSpec):
        spec = CirculantSpec(spec, frozenset(S or ()))
    n = spec.n
    rows = [0] * n
    for u in range(n):
        for s in spec.S:
            rows[u] |= 1 << ((u + s) % n) | 1 << ((u - s) % n)
    return Graph._trusted(n, rows)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)])


def join(g1: Graph, g2: Graph, *more: Graph) -> Graph:
    """Disjoint union of the operands plus every edge between different operands."""
    if more:
        return join(join(g1, g2), *more)
    n1, n = g1.n, g1.n + g2.n
    if n > MAX_VERTICES:
        raise CapacityError(f"join has {n} vertices, capacity is {MAX_VERTICES}")
    low, high = g1.vertex_mask, ((1 << g2.n) - 1) << n1
    rows = [r | high for r in g1.rows] + [(r << n1) | low for r in g2.rows]
    return Graph._trusted(n, rows)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n1, n = g1.n, g1.n + g2.n
    if n > MAX_VERTICES:
        raise CapacityError(f"union has {n} vertices, capacity is {MAX_VERTICES}")
    return Graph._trusted(n, list(g1.rows) + [r << n1 for r in g2.rows])


def induced(g: Graph, vertices: Iterable[int] | int) -> Graph:
    """Subgraph on ``vertices`` (a collection or a bit mask), relabelled 0.. in order."""
    if isinstance(vertices, int):
        mask = vertices
        if mask & ~g.vertex_mask or mask < 0:
            raise ValueError("vertex mask references vertices outside the graph")
        keep = list(bits(mask))
    else:
        keep = sorted(set(vertices))
        if keep and (keep[0] < 0 or keep[-1] >= g.n):
            raise ValueError(f"vertex out of range 0..{g.n - 1}")
    return _relabel_subset(g.rows, keep)


def _relabel_subset(rows: Sequence[int], keep: Sequence[int]) -> Graph:
    pos = {v: i for i, v in enumerate(keep)}
    mask = mask_of(keep)
    new_rows = []
    for v in keep:
        r = 0
        for u in bits(rows[v] & mask):
            r |= 1 << pos[u]
        new_rows.append(r)
    return Graph._trusted(len(keep), new_rows)


def remove(g: Graph, vertices: Iterable[int] | int) -> Graph:
    """``G - V``: the subgraph induced by the vertices not in ``vertices``."""
    mask = vertices if isinstance(vertices, int) else mask_of(vertices)
    if mask & ~g.vertex_mask or mask < 0:
        raise ValueError(f"vertex out of range 0..{g.n - 1}")
    return induced(g, g.vertex_mask & ~mask)


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is vertex ``order[i]`` of ``g``."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    return _relabel_subset(g.rows, order)


# --- graph6 -----------------------------------------------------------------

_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = [chr(126)] + [chr(63 + (n >> shift & 63)) for shift in (12, 6, 0)]
    acc = nbits = 0
    rows = g.rows
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = acc << 1 | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    if s[0] in ":;&":
        raise Graph6Error("sparse6/digraph6 input is not supported")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise Graph6Error("graph6 bytes must lie in 63..126")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 2 and data[1] == 63:
        raise CapacityError("graph6 header declares more than 258047 vertices")
    else:
        if len(data) < 4:
            raise Graph6Error("truncated graph6 size field")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 declares {n} vertices, capacity is {MAX_VERTICES}")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise Graph6Error(f"expected {(need + 5) // 6} data bytes for n={n}, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need % 6 and body[-1] & ((1 << (6 - need % 6)) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph._trusted(n, rows)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# --- canonical labelling ----------------------------------------------------

def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; fragment order depends only on counts."""
    while True:
        masks = [mask_of(c) for c in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                r = rows[v]
                groups.setdefault(tuple((r & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                out.extend(groups[k] for k in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _certificate(rows: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    cert = []
    for v in order:
        r = 0
        for u in bits(rows[v]):
            r |= 1 << pos[u]
        cert.append(r)
    return tuple(cert)


def _orbit_closure(seed: Iterable[int], gens: list[dict[int, int] | list[int]]) -> set[int]:
    seen = set(seed)
    stack = list(seen)
    while stack:
        v = stack.pop()
        for g in gens:
            w = g[v]
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def canonical_labeling(g: Graph) -> tuple[list[int], tuple[int, ...]]:
    """Return ``(order, certificate)``; relabelling by ``order`` gives the canonical rows.

    Individualisation-refinement with pruning by the automorphisms found at
    leaves that reproduce the best certificate.
    """
    n = g.n
    if n > CANON_MAX_VERTICES:
        raise CapacityError(f"canonical form supports n <= {CANON_MAX_VERTICES}")
    rows = g.rows
    if n == 0:
        return [], ()
    degs: dict[int, list[int]] = {}
    for v in range(n):
        degs.setdefault(rows[v].bit_count(), []).append(v)
    root = _refine(rows, [degs[d] for d in sorted(degs)])
    if len(root) == n:
        order = [c[0] for c in root]
        return order, _certificate(rows, order)

    best: list = [None, None]  # certificate, order
    first: list = [None, None, None]  # certificate, order, individualised path
    autos: list[list[int]] = []

    def automorphism(src: list[int], dst: list[int]) -> list[int]:
        perm = [0] * n
        for a, b in zip(src, dst):
            perm[a] = b
        return perm

    def search(cells: list[list[int]], fixed: list[int]) -> int | None:
        # returns a depth to unwind to when a subtree is shown equivalent to the first path
        depth = len(fixed)
        target = next(i for i, c in enumerate(cells) if len(c) > 1)
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if tried:
                gens = [a for a in autos if all(a[x] == x for x in fixed)]
                if gens and v in _orbit_closure(tried, gens):
                    continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            child = _refine(rows, cells[:target] + [[v], rest] + cells[target + 1:])
            path = fixed + [v]
            if len(child) == n:
                order = [c[0] for c in child]
                cert = _certificate(rows, order)
                if first[0] is None:
                    first[:] = [cert, order, path]
                    best[0], best[1] = cert, order
                    continue
                if cert == first[0]:
                    autos.append(automorphism(first[1], order))
                    common = 0
                    while common < len(path) and path[common] == first[2][common]:
                        common += 1
                    if common < depth:
                        return common
                    continue
                if cert > best[0]:
                    best[0], best[1] = cert, order
                elif cert == best[0]:
                    autos.append(automorphism(best[1], order))
            else:
                back = search(child, path)
                if back is not None and back < depth:
                    return back
        return None

    search(root, [])
    return best[1], best[0]


def canonical_form(g: Graph) -> Graph:
    """Canonical representative: isomorphic graphs map to identical values."""
    _, cert = canonical_labeling(g)
    return Graph._trusted(g.n, cert)


def certificate(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable isomorphism invariant that is complete (equal iff isomorphic)."""
    return g.n, canonical_labeling(g)[1]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_labeling(g)[1] == canonical_labeling(h)[1]
