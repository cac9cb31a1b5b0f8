"""Brute-force reference computations that share no code with the fast paths.

Graphs on n labelled vertices are coded as integers whose bit ``e`` is the
e-th vertex pair in lexicographic order.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .graph import Graph


def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: e for e, p in enumerate(itertools.combinations(range(n), 2))}


def labelled_code(G: Graph) -> int:
    idx = pair_index(G.n)
    return sum(1 << idx[(u, v)] for u, v in G.edges())


def burnside_count(n: int) -> int:
    """Isomorphism classes on n vertices: average of 2^(pair cycles) over S_n."""
    pairs = list(itertools.combinations(range(n), 2))
    total = 0
    for perm in itertools.permutations(range(n)):
        seen, cycles = set(), 0
        for p in pairs:
            if p in seen:
                continue
            cycles += 1
            q = p
            while q not in seen:
                seen.add(q)
                a, b = perm[q[0]], perm[q[1]]
                q = (a, b) if a < b else (b, a)
        total += 2 ** cycles
    return int(Fraction(total, factorial(n)))


def _act(codes: np.ndarray, n: int, perm: tuple[int, ...]) -> np.ndarray:
    idx = pair_index(n)
    out = np.zeros_like(codes)
    for (u, v), e in idx.items():
        a, b = perm[u], perm[v]
        out |= ((codes >> e) & 1) << idx[(min(a, b), max(a, b))]
    return out


def orbit_labels(n: int) -> np.ndarray:
    """Component id of every labelled graph under relabelling.

    S_n is generated by a transposition and an n-cycle, so orbits are the
    connected components of the graph joining each code to its two images.
    """
    size = 1 << (n * (n - 1) // 2)
    codes = np.arange(size, dtype=np.int64)
    if n < 2:
        return np.zeros(size, dtype=np.int64)
    swap = (1, 0) + tuple(range(2, n))
    shift = tuple((i + 1) % n for i in range(n))
    rows = np.concatenate([codes, codes])
    cols = np.concatenate([_act(codes, n, swap), _act(codes, n, shift)])
    m = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size, size))
    _, labels = connected_components(m, directed=True, connection="weak")
    return labels


def orbit_count(n: int) -> int:
    return int(len(np.unique(orbit_labels(n))))
