"""Separating sentences read off a winning Spoiler strategy."""

from __future__ import annotations

from ..graph import Graph
from ..logic.formula import AtomAdj, AtomEq, Exists, Formula, Not, conj
from .rules import LEFT
from .solver import DEFAULT_BUDGET, EFSolver


class NoSpoilerWin(ValueError):
    pass


def _var(i: int) -> str:
    return f"x{i + 1}"


def extract_distinguishing(G: Graph, H: Graph, r: int, solver: EFSolver | None = None,
                           budget: int = DEFAULT_BUDGET) -> Formula:
    """A sentence of depth <= r that holds in G and fails in H.

    Variable ``x{i}`` stands for the i-th chosen pair. A Spoiler move in G
    becomes ``∃u`` over the separators of all replies; a move in H becomes
    ``¬∃u`` over the negated separators. The conjuncts ``u ≠ x_i`` encode the
    no-repeat rule, so already chosen vertices cannot serve as replies.
    """
    solver = solver or EFSolver(G, H, budget)
    if solver.duplicator_wins((), r):
        raise NoSpoilerWin(f"Duplicator wins the {r}-round game")

    def sep(pairs: tuple, k: int) -> Formula:
        for j, (x, y) in enumerate(pairs):
            for i in range(j):
                a, b = pairs[i]
                if G.has_edge(a, x) != H.has_edge(b, y):
                    atom = AtomAdj(_var(i), _var(j))
                    return atom if G.has_edge(a, x) else Not(atom)
        move = solver.spoiler_move(pairs, k)
        if move is None:
            raise AssertionError("position expected to be a Spoiler win")
        side, v = move
        u = _var(len(pairs))
        parts: list[Formula] = [Not(AtomEq(u, _var(i))) for i in range(len(pairs))]
        if side == LEFT:
            taken = {y for _, y in pairs}
            subs = [sep(pairs + ((v, w),), k - 1) for w in range(H.n) if w not in taken]
        else:
            taken = {x for x, _ in pairs}
            subs = [Not(sep(pairs + ((w, v),), k - 1)) for w in range(G.n) if w not in taken]
        parts.extend(dict.fromkeys(subs))
        body = conj(parts) if parts else AtomEq(u, u)
        return Exists(u, body) if side == LEFT else Not(Exists(u, body))

    return sep((), r)

