import itertools
import random

import pytest
from hypothesis import given

from efdepth import graph as g
from efdepth.iso import (
    automorphism_orbits, canonical_graph, canonicalize, enumerate_up_to_iso, find_isomorphism, is_isomorphic,
)
from efdepth.oracles import burnside_count, labelled_code, orbit_count, orbit_labels

from .strategies import graph_and_perm, graphs

COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044]


def naive_canon(G):
    return min(tuple(G.has_edge(p[u], p[v]) for u, v in itertools.combinations(range(G.n), 2))
               for p in itertools.permutations(range(G.n)))


@pytest.mark.parametrize("n", range(8))
def test_burnside_oracle(n):
    assert burnside_count(n) == COUNTS[n]


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_hits_every_orbit_once(n):
    reps = list(enumerate_up_to_iso(n))
    labels = orbit_labels(n)
    assert len(reps) == COUNTS[n] == orbit_count(n)
    assert len({int(labels[labelled_code(G)]) for G in reps}) == len(reps)


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_against_naive_minimum(n):
    reps = list(enumerate_up_to_iso(n))
    assert len({naive_canon(G) for G in reps}) == len(reps) == COUNTS[n]


@given(graph_and_perm(max_n=7))
def test_canonical_form_is_invariant(data):
    G, perm = data
    H = g.relabel(G, perm)
    assert canonicalize(G) == canonicalize(H)
    assert is_isomorphic(G, H)
    assert canonical_graph(G) == canonical_graph(H)
    iso = find_isomorphism(G, H)
    assert iso is not None
    assert all(H.has_edge(iso[u], iso[v]) for u, v in G.edges())


@given(graphs(max_n=5), graphs(max_n=5))
def test_canonical_form_separates(A, B):
    same = A.n == B.n and naive_canon(A) == naive_canon(B)
    assert (canonicalize(A) == canonicalize(B)) == same
    assert is_isomorphic(A, B) == same


def naive_orbits(G):
    autos = [p for p in itertools.permutations(range(G.n))
             if all(G.has_edge(p[u], p[v]) for u, v in G.edges())]
    return sorted({tuple(sorted({p[v] for p in autos})) for v in range(G.n)})


@given(graphs(max_n=6))
def test_orbits_match_naive(G):
    assert [tuple(o) for o in automorphism_orbits(G)] == naive_orbits(G)


def test_orbit_examples():
    assert automorphism_orbits(g.path(3)) == [[0, 2], [1]]
    assert automorphism_orbits(g.cycle(5)) == [list(range(5))]
    assert automorphism_orbits(g.sun(4)) == [[0, 1, 2, 3], [4, 5, 6, 7]]
    assert len(automorphism_orbits(g.copies(2, g.almost_multipartite(4, 3, 1)))) == 1


def test_isomorphism_on_larger_regular_graphs():
    rng = random.Random(5)
    G = g.copies(2, g.cycle(6))
    perm = list(range(G.n))
    rng.shuffle(perm)
    assert is_isomorphic(G, g.relabel(G, perm))
    assert not is_isomorphic(G, g.union(g.cycle(5), g.cycle(7)))


def test_enumeration_limit():
    with pytest.raises(ValueError):
        list(enumerate_up_to_iso(8))
