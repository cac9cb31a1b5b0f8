import itertools
import random
from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from efdepth import graph as g
from efdepth.game import (
    LEFT, RIGHT, Configuration, EFSolver, IsomorphismPolicy, LowestUnchosenPolicy, NoSpoilerWin, Player,
    PolicyMismatch, SolverBudgetExceeded, Thm12Policy, Thm2Policy, extract_distinguishing, registered_policy,
    partial_iso_check, solve, verify_policy,
)
from efdepth.instances import INSTANCE_NAMES, gen_paper_instance
from efdepth.iso import all_graphs_up_to
from efdepth.logic import CompiledFormula, quantifier_depth, random_sentence

from .strategies import graph_and_perm, graphs


def naive_duplicator_wins(G, H, r):
    """Plain minimax over the no-repeat game, no memo or pruning."""

    def win(pairs, k):
        for (a, b), (c, d) in itertools.combinations(pairs, 2):
            if G.has_edge(a, c) != H.has_edge(b, d):
                return False
        if k == 0:
            return True
        xs, ys = {p[0] for p in pairs}, {p[1] for p in pairs}
        fg = [v for v in range(G.n) if v not in xs]
        fh = [w for w in range(H.n) if w not in ys]
        for v in fg:
            if not any(win(pairs + ((v, w),), k - 1) for w in fh):
                return False
        for w in fh:
            if not any(win(pairs + ((v, w),), k - 1) for v in fg):
                return False
        return True

    return win((), r)


def winner(G, H, r, **kw):
    return solve(G, H, r, **kw).winner


def test_basic_examples():
    assert winner(g.complete(2), g.empty(2), 2) == Player.SPOILER
    assert winner(g.complete(2), g.empty(2), 1) == Player.DUPLICATOR
    assert winner(g.empty(1), g.empty(0), 1) == Player.SPOILER
    assert winner(g.empty(0), g.empty(0), 3) == Player.DUPLICATOR
    assert winner(g.empty(1), g.empty(2), 2) == Player.SPOILER
    assert winner(g.cycle(5), g.cycle(5), 5) == Player.DUPLICATOR


@settings(max_examples=80)
@given(graphs(max_n=4), graphs(max_n=4), st.integers(0, 4))
def test_solver_matches_naive_minimax(G, H, r):
    expected = naive_duplicator_wins(G, H, r)
    assert (winner(G, H, r) == Player.DUPLICATOR) == expected
    assert (winner(G, H, r, orbit_reduction=False) == Player.DUPLICATOR) == expected


def test_monotone_and_symmetric_on_all_small_pairs():
    small = list(all_graphs_up_to(4))
    for G, H in itertools.product(small, repeat=2):
        values = [winner(G, H, r) == Player.DUPLICATOR for r in range(5)]
        assert values == [naive_duplicator_wins(G, H, r) for r in range(5)]
        assert values == sorted(values, reverse=True)
        assert values == [winner(H, G, r) == Player.DUPLICATOR for r in range(5)]


@settings(max_examples=40)
@given(graphs(max_n=5), graphs(max_n=5), st.integers(1, 3))
def test_complement_invariance(G, H, r):
    assert winner(G, H, r) == winner(g.complement(G), g.complement(H), r)


@given(graph_and_perm(max_n=6), st.integers(0, 6))
def test_isomorphic_inputs_duplicator(data, r):
    G, perm = data
    H = g.relabel(G, perm)
    assert winner(G, H, r) == Player.DUPLICATOR
    inverse = [0] * G.n
    for i, p in enumerate(perm):
        inverse[p] = i
    ok, _ = verify_policy(G, H, min(r, 3), IsomorphismPolicy(perm))
    assert ok


def test_budget():
    with pytest.raises(SolverBudgetExceeded):
        solve(g.union(g.cycle(5), g.cycle(6)), g.copies(2, g.cycle(6)), 4, budget=3)


def test_configuration_rules():
    c = Configuration(g.path(3), g.path(3))
    c = c.extend(LEFT, 0, 1)
    assert c.pairs == ((0, 1),)
    assert c.unchosen(LEFT) == [1, 2] and c.unchosen(RIGHT) == [0, 2]
    assert partial_iso_check(c)
    bad = c.extend(LEFT, 2, 0)
    assert not partial_iso_check(bad)
    with pytest.raises(ValueError):
        c.extend(LEFT, 0, 2)


def test_solver_queries():
    s = EFSolver(g.complete(2), g.empty(2))
    assert s.spoiler_move((), 2) is not None
    assert s.duplicator_reply((), LEFT, 0, 1) is not None
    assert s.duplicator_reply(((0, 0),), LEFT, 1, 1) is None


def test_strategy_table():
    out = solve(g.complete(2), g.empty(2), 2, with_strategy=True)
    assert "()|S" in out.strategy
    out = solve(g.path(3), g.path(3), 2, with_strategy=True)
    assert out.winner == Player.DUPLICATOR
    assert all(k.split("|")[1][0] in "GH" for k in out.strategy)


@pytest.mark.parametrize("name", INSTANCE_NAMES)
def test_registered_instances_tight(name):
    params = {"thm1_2": (2,), "thm2": (1, 2, (2, 2))}.get(name, ())
    b = gen_paper_instance(name, *params)
    assert winner(b.G, b.H, b.r) == Player.DUPLICATOR


@pytest.mark.parametrize("m", [1, 2, 3])
def test_thm12_policy(m):
    b = gen_paper_instance("thm1_2", m)
    ok, transcript = verify_policy(b.G, b.H, b.r, Thm12Policy(m))
    assert ok, transcript
    assert winner(b.G, b.H, b.r + 1) == Player.SPOILER


@pytest.mark.parametrize("params", [(1, 2, (2, 2)), (1, 3, (1, 1, 2))])
def test_thm2_policy(params):
    b = gen_paper_instance("thm2", *params)
    ok, transcript = verify_policy(b.G, b.H, b.r, registered_policy("thm2", params))
    assert ok, transcript


def test_policy_checks_instance():
    b = gen_paper_instance("thm1_2", 1)
    with pytest.raises(PolicyMismatch):
        verify_policy(b.G, b.H, b.r, Thm2Policy(4, 2, 1))
    with pytest.raises(PolicyMismatch):
        registered_policy("nope", ())


def test_failing_policy_gives_transcript():
    ok, transcript = verify_policy(g.complete(2), g.empty(2), 2, LowestUnchosenPolicy())
    assert not ok
    assert transcript[-1] == "winner: spoiler"
    assert transcript[0].startswith("round 1:")


def test_extended_policy_beyond_its_range_fails():
    b = gen_paper_instance("thm1_2", 1)
    ok, _ = verify_policy(b.G, b.H, b.r + 1, Thm12Policy(1))
    assert not ok


def test_distinguishing_examples():
    phi = extract_distinguishing(g.complete(2), g.empty(2), 2)
    check = CompiledFormula(phi)
    assert quantifier_depth(phi) <= 2 and check(g.complete(2)) and not check(g.empty(2))
    with pytest.raises(NoSpoilerWin):
        extract_distinguishing(g.complete(2), g.empty(2), 1)


@settings(max_examples=60)
@given(graphs(max_n=5), graphs(max_n=5), st.integers(1, 3), st.integers(0, 10**6))
def test_ehrenfeucht_both_directions(G, H, r, seed):
    s = EFSolver(G, H)
    if s.duplicator_wins((), r):
        rng = random.Random(seed)
        for _ in range(10):
            check = CompiledFormula(random_sentence(rng, r))
            assert check(G) == check(H)
    else:
        phi = extract_distinguishing(G, H, r, s)
        check = CompiledFormula(phi)
        assert quantifier_depth(phi) <= r and check(G) and not check(H)
