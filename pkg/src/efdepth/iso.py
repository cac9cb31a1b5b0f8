"""Canonical forms, isomorphism, automorphism orbits and small-graph enumeration."""

from __future__ import annotations

import time
from functools import lru_cache
from typing import Iterator

from .formats import decode_graph6, encode_graph6
from .graph import Graph, GraphError, _bits, build

CANON_MAX_N = 10
ENUM_MAX_N = 7


def refine(nbrs: list[list[int]], colours: list[int]) -> list[int]:
    """Colour refinement to the coarsest stable partition.

    Colour names are ranks of sorted signatures, so they are invariant under
    relabelling whenever the initial colours are.
    """
    ranks = {c: i for i, c in enumerate(sorted(set(colours)))}
    colours = [ranks[c] for c in colours]
    count = len(ranks)
    while True:
        sigs = [(colours[v], tuple(sorted(colours[u] for u in nbrs[v]))) for v in range(len(nbrs))]
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colours = [table[s] for s in sigs]
        if len(table) == count:
            return colours
        count = len(table)


def _nbr_lists(G: Graph) -> list[list[int]]:
    return [list(_bits(row)) for row in G.adj]


def canonical_labeling(G: Graph, limit: int = CANON_MAX_N) -> list[int]:
    """Return ``order`` with ``order[p]`` the vertex placed at position ``p``.

    Maximises the upper-triangle bit string in graph6 column order over all
    orderings that list refinement cells in colour order.
    """
    if G.n > limit:
        raise GraphError(f"canonicalize is limited to {limit} vertices")
    n = G.n
    colours = refine(_nbr_lists(G), [0] * n)
    cells = sorted(range(n), key=lambda v: colours[v])
    slot_colour = [colours[v] for v in cells]
    best_cols = [-1] * n
    best_order: list[int] = []
    order: list[int] = []

    def rec(k: int, used: int):
        nonlocal best_order
        if k == n:
            best_order = list(order)
            return
        for v in range(n):
            if (used >> v) & 1 or colours[v] != slot_colour[k]:
                continue
            col = 0
            row = G.adj[v]
            for u in order:
                col = (col << 1) | ((row >> u) & 1)
            if col < best_cols[k]:
                continue
            if col > best_cols[k]:
                best_cols[k] = col
                for t in range(k + 1, n):
                    best_cols[t] = -1
            order.append(v)
            rec(k + 1, used | (1 << v))
            order.pop()

    rec(0, 0)
    return best_order


def canonical_graph(G: Graph, limit: int = CANON_MAX_N) -> Graph:
    order = canonical_labeling(G, limit)
    pos = {v: p for p, v in enumerate(order)}
    return build(G.n, [(pos[u], pos[v]) for u, v in G.edges()])


def canonicalize(G: Graph, limit: int = CANON_MAX_N) -> bytes:
    """graph6 bytes of the canonical relabelling; equal iff isomorphic."""
    return encode_graph6(canonical_graph(G, limit))


class _Timeout(Exception):
    pass


def _iso_search(A: Graph, B: Graph, colours: list[int], deadline: float | None) -> list[int] | None:
    """Individualisation-refinement search on the disjoint union of A and B."""
    nA = A.n
    nbrs = _nbr_lists(A) + [[u + nA for u in row] for row in _nbr_lists(B)]

    def balanced(cs: list[int]) -> bool:
        left, right = {}, {}
        for v in range(nA):
            left[cs[v]] = left.get(cs[v], 0) + 1
        for v in range(nA, 2 * nA):
            right[cs[v]] = right.get(cs[v], 0) + 1
        return left == right

    def rec(cs: list[int]) -> list[int] | None:
        if deadline is not None and time.monotonic() > deadline:
            raise _Timeout
        cs = refine(nbrs, cs)
        if not balanced(cs):
            return None
        size = {}
        for v in range(nA):
            size[cs[v]] = size.get(cs[v], 0) + 1
        if all(s == 1 for s in size.values()):
            where = {cs[v]: v - nA for v in range(nA, 2 * nA)}
            perm = [where[cs[v]] for v in range(nA)]
            ok = all(
                B.adj[perm[v]] == _map_mask(A.adj[v], perm) for v in range(nA)
            )
            return perm if ok else None
        target = min((s, c) for c, s in size.items() if s > 1)[1]
        a = next(v for v in range(nA) if cs[v] == target)
        fresh = max(cs) + 1
        for b in range(nA, 2 * nA):
            if cs[b] != target:
                continue
            trial = list(cs)
            trial[a] = trial[b] = fresh
            found = rec(trial)
            if found is not None:
                return found
        return None

    return rec(colours)


def _map_mask(mask: int, perm: list[int]) -> int:
    out = 0
    for u in _bits(mask):
        out |= 1 << perm[u]
    return out


def find_isomorphism(A: Graph, B: Graph, timeout: float | None = None) -> list[int] | None:
    """A bijection ``perm`` with ``u~v in A  <=>  perm[u]~perm[v] in B``, or None."""
    if A.n != B.n or A.num_edges != B.num_edges or sorted(A.degrees()) != sorted(B.degrees()):
        return None
    deadline = None if timeout is None else time.monotonic() + timeout
    return _iso_search(A, B, [0] * (2 * A.n), deadline)


def is_isomorphic(A: Graph, B: Graph) -> bool:
    return find_isomorphism(A, B) is not None


def automorphism_orbits(G: Graph, time_budget: float = 10.0) -> list[list[int]]:
    """Partition of V(G) into automorphism orbits.

    Falls back to the discrete partition when the budget runs out; that
    fallback is sound for symmetry reduction because it reduces nothing.
    """
    n = G.n
    deadline = time.monotonic() + time_budget
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    colours = refine(_nbr_lists(G), [0] * n)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colours[v], []).append(v)
    try:
        for cell in cells.values():
            reps: list[int] = []
            for v in cell:
                if any(find(v) == find(r) for r in reps):
                    continue
                for r in reps:
                    start = colours + colours
                    fresh = max(colours) + 1
                    start[r] = start[n + v] = fresh
                    perm = _iso_search(G, G, start, deadline)
                    if perm is not None:
                        for x in range(n):
                            a, b = find(x), find(perm[x])
                            if a != b:
                                parent[max(a, b)] = min(a, b)
                        break
                else:
                    reps.append(v)
    except _Timeout:
        return [[v] for v in range(n)]
    orbits: dict[int, list[int]] = {}
    for v in range(n):
        orbits.setdefault(find(v), []).append(v)
    return sorted(orbits.values())


@lru_cache(maxsize=None)
def _representatives(n: int) -> tuple[bytes, ...]:
    if n == 0:
        return (encode_graph6(build(0)),)
    forms = set()
    for code in _representatives(n - 1):
        base = decode_graph6(code)
        edges = list(base.edges())
        for nbhd in range(1 << (n - 1)):
            G = build(n, edges + [(u, n - 1) for u in _bits(nbhd)])
            forms.add(canonicalize(G))
    return tuple(sorted(forms))


def enumerate_up_to_iso(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Representatives come out sorted by canonical form.
    """
    if not 0 <= n <= ENUM_MAX_N:
        raise GraphError(f"enumeration is limited to 0..{ENUM_MAX_N} vertices")
    for code in _representatives(n):
        yield decode_graph6(code)


def all_graphs_up_to(n_max: int) -> Iterator[Graph]:
    for n in range(n_max + 1):
        yield from enumerate_up_to_iso(n)
