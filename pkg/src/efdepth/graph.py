"""Finite simple graphs stored as per-vertex adjacency bitsets.

Vertices are ``0..n-1``. Every constructor below documents the vertex
numbering it produces, since certificates refer to concrete vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class GraphError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbourhood bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def induced(G: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, renumbered in the given order."""
    vs = list(vertices)
    pos = {v: i for i, v in enumerate(vs)}
    return build(len(vs), [(pos[u], pos[v]) for u, v in combinations(vs, 2) if G.has_edge(u, v)])


def relabel(G: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return build(G.n, [(perm[u], perm[v]) for u, v in G.edges()])


# -- combinators ------------------------------------------------------------

def union(*graphs: Graph) -> Graph:
    """Disjoint union; the vertices of ``graphs[i]`` follow those of ``graphs[i-1]``."""
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return build(offset, edges)


def copies(m: int, A: Graph) -> Graph:
    if m < 0:
        raise GraphError("multiplier must be nonnegative")
    return union(*([A] * m))


def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.adj)))


def apex(G: Graph) -> Graph:
    """Add a new last vertex ``G.n`` adjacent to every vertex of ``G``."""
    return build(G.n + 1, list(G.edges()) + [(v, G.n) for v in range(G.n)])


def combine(kind: str, *args) -> Graph:
    if kind == "union":
        return union(*args)
    if kind == "copies":
        m, A = args
        return copies(m, A)
    if kind == "complement":
        (A,) = args
        return complement(A)
    raise GraphError(f"unknown combinator {kind!r}")


# -- families ---------------------------------------------------------------

def empty(n: int) -> Graph:
    return build(n)


def complete(n: int) -> Graph:
    return build(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    """``P_n`` with edges ``i ~ i+1``."""
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """``C_n`` with edges ``i ~ i+1 (mod n)``; needs ``n >= 3``."""
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(sizes: Iterable[int]) -> Graph:
    """Parts are consecutive vertex blocks in the order given."""
    part = []
    for p, s in enumerate(sizes):
        part.extend([p] * s)
    return build(len(part), [(u, v) for u, v in combinations(range(len(part)), 2) if part[u] != part[v]])


def almost_multipartite_index(i: int, j: int, h: int, ell: int, k: int) -> int:
    """Vertex number of (class i, part j, component h), all 0-based.

    Numbering is lexicographic on ``(h, j, i)``.
    """
    return (h * k + j) * ell + i


def almost_multipartite_coords(v: int, ell: int, k: int) -> tuple[int, int, int]:
    hj, i = divmod(v, ell)
    h, j = divmod(hj, k)
    return i, j, h


def almost_multipartite(ell: int, k: int, m: int) -> Graph:
    """Vertices (i, j, h) for class i < ell, part j < k, component h < m.

    Two vertices are adjacent when they share a component but differ in both
    class and part, or share a class but lie in different components.
    """
    n = ell * k * m
    coords = [almost_multipartite_coords(v, ell, k) for v in range(n)]
    edges = []
    for u, v in combinations(range(n), 2):
        (i1, j1, h1), (i2, j2, h2) = coords[u], coords[v]
        if (h1 == h2 and i1 != i2 and j1 != j2) or (i1 == i2 and h1 != h2):
            edges.append((u, v))
    return build(n, edges)


def sun(n: int) -> Graph:
    """Cycle ``C_n`` on ``0..n-1`` with a pendant vertex ``n+i`` attached to ``i``."""
    C = cycle(n)
    return build(2 * n, list(C.edges()) + [(i, n + i) for i in range(n)])


def matched(A: Graph, B: Graph) -> Graph:
    """``A`` and ``B`` (same order) joined by the perfect matching ``i ~ A.n+i``."""
    if A.n != B.n:
        raise GraphError("matched components need equal vertex counts")
    U = union(A, B)
    return build(U.n, list(U.edges()) + [(i, A.n + i) for i in range(A.n)])


# -- oracles ----------------------------------------------------------------

def _search_order(F: Graph) -> list[int]:
    """Vertices of F so that each one, when possible, touches an earlier one."""
    order, seen = [], 0
    remaining = sorted(range(F.n), key=lambda v: -F.degree(v))
    while remaining:
        pick = next((v for v in remaining if F.adj[v] & seen), remaining[0])
        remaining.remove(pick)
        order.append(pick)
        seen |= 1 << pick
    return order


def contains_induced(G: Graph, F: Graph) -> tuple[bool, dict[int, int] | None]:
    """Search for an induced copy of F in G.

    Returns ``(True, phi)`` with ``phi`` an injective map V(F) -> V(G) that
    preserves adjacency and non-adjacency, or ``(False, None)``.
    """
    if F.n > G.n:
        return False, None
    order = _search_order(F)
    # need[k]: positions < k adjacent to order[k] in F
    need = []
    for k, f in enumerate(order):
        need.append([p for p in range(k) if F.has_edge(f, order[p])])
    fdeg = [F.degree(f) for f in order]
    gdeg = G.degrees()
    img = [0] * F.n

    def extend(k: int, used: int) -> bool:
        if k == F.n:
            return True
        required = 0
        for p in need[k]:
            required |= 1 << img[p]
        for g in range(G.n):
            if (used >> g) & 1 or gdeg[g] < fdeg[k]:
                continue
            if G.adj[g] & used != required:
                continue
            img[k] = g
            if extend(k + 1, used | (1 << g)):
                return True
        return False

    if extend(0, 0):
        return True, {f: img[k] for k, f in enumerate(order)}
    return False, None


def chromatic_number(F: Graph, limit: int = 16) -> int:
    """Exact chromatic number by backtracking over increasing colour counts."""
    if F.n > limit:
        raise GraphError(f"chromatic_number is limited to {limit} vertices")
    if F.n == 0:
        return 0
    order = sorted(range(F.n), key=lambda v: -F.degree(v))
    colour = [-1] * F.n

    def colourable(idx: int, k: int, used: int) -> bool:
        if idx == F.n:
            return True
        v = order[idx]
        taken = {colour[u] for u in _bits(F.adj[v]) if colour[u] >= 0}
        # a fresh colour is interchangeable with any other fresh colour
        for c in range(min(k, used + 1)):
            if c in taken:
                continue
            colour[v] = c
            if colourable(idx + 1, k, max(used, c + 1)):
                return True
        colour[v] = -1
        return False

    k = 1
    while not colourable(0, k, 0):
        k += 1
    return k
