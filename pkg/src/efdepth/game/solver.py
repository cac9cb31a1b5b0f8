"""Exact solver for the no-repeat Ehrenfeucht–Fraïssé game on two graphs.

Positions are keyed by the sorted tuple of chosen pairs: pair order does not
change the game value. A position whose pairs are not a partial isomorphism
is a Spoiler win, so the search never enters one.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from enum import Enum

from ..graph import Graph, _bits
from ..iso import automorphism_orbits
from .rules import LEFT, RIGHT, Configuration, consistent, other

DEFAULT_BUDGET = 10**9


class SolverBudgetExceeded(RuntimeError):
    """The node budget ran out before the game value was determined."""


class Player(str, Enum):
    SPOILER = "spoiler"
    DUPLICATOR = "duplicator"


@dataclass
class GameOutcome:
    winner: Player
    rounds: int
    nodes: int
    strategy: dict[str, str] | None = field(default=None, repr=False)


def _pattern(row: int, chosen: tuple[int, ...]) -> int:
    pat = 0
    for i, u in enumerate(chosen):
        pat |= ((row >> u) & 1) << i
    return pat


def _drop_twins(vs: list[int], adj: tuple[int, ...]) -> list[int]:
    """Keep one vertex per twin class.

    Unchosen twins are swapped by an automorphism fixing everything else,
    so they are interchangeable as moves.
    """
    seen, out = set(), []
    for v in vs:
        open_key, closed_key = ("o", adj[v]), ("c", adj[v] | (1 << v))
        if open_key in seen or closed_key in seen:
            continue
        seen.add(open_key)
        seen.add(closed_key)
        out.append(v)
    return out


class EFSolver:
    """Memoised game search on a fixed pair (G, H)."""

    def __init__(self, G: Graph, H: Graph, budget: int = DEFAULT_BUDGET, orbit_reduction: bool = True):
        self.G, self.H = G, H
        self.budget = budget
        self.nodes = 0
        self.memo: dict[tuple, bool] = {}
        self._full = (G.full_mask, H.full_mask)
        self._degG, self._degH = G.degrees(), H.degrees()
        self._orbit_reps = None
        if orbit_reduction:
            self._orbit_reps = (self._reps(G), self._reps(H))

    @staticmethod
    def _reps(g: Graph) -> set[int]:
        return {min(orbit) for orbit in automorphism_orbits(g)}

    # -- core search ---------------------------------------------------------

    def _buckets(self, key, cg: int, ch: int):
        xs = tuple(p[0] for p in key)
        ys = tuple(p[1] for p in key)
        bg: dict[int, list[int]] = {}
        bh: dict[int, list[int]] = {}
        for v in _bits(self._full[0] & ~cg):
            bg.setdefault(_pattern(self.G.adj[v], xs), []).append(v)
        for v in _bits(self._full[1] & ~ch):
            bh.setdefault(_pattern(self.H.adj[v], ys), []).append(v)
        return bg, bh

    def _dup(self, key: tuple, cg: int, ch: int, k: int) -> bool:
        if k == 0:
            return True
        if cg == self._full[0] and ch == self._full[1]:
            return True
        mk = (key, k)
        cached = self.memo.get(mk)
        if cached is not None:
            return cached
        self.nodes += 1
        if self.nodes > self.budget:
            raise SolverBudgetExceeded(f"more than {self.budget} positions visited")
        bg, bh = self._buckets(key, cg, ch)
        if bg.keys() != bh.keys():
            result = False
        elif k == 1:
            result = True
        else:
            result = all(
                self._answerable(key, cg, ch, k, side, v, bg, bh)
                for side, v in self._spoiler_moves(key, bg, bh)
            )
        self.memo[mk] = result
        return result

    def _spoiler_moves(self, key, bg, bh):
        root = not key and self._orbit_reps is not None
        moves = []
        for side, buckets, adj, reps in ((LEFT, bg, self.G.adj, 0), (RIGHT, bh, self.H.adj, 1)):
            other_b = bh if side == LEFT else bg
            for pat, vs in buckets.items():
                vs = _drop_twins(vs, adj)
                if root:
                    vs = [v for v in vs if v in self._orbit_reps[reps]]
                moves.extend((len(other_b[pat]), side, v) for v in vs)
        moves.sort()
        return [(side, v) for _, side, v in moves]

    def _replies(self, key, side: str, v: int, bg, bh) -> list[int]:
        if side == LEFT:
            pat = _pattern(self.G.adj[v], tuple(p[0] for p in key))
            cands, adj, deg, want, reps = bh[pat], self.H.adj, self._degH, self._degG[v], 1
        else:
            pat = _pattern(self.H.adj[v], tuple(p[1] for p in key))
            cands, adj, deg, want, reps = bg[pat], self.G.adj, self._degG, self._degH[v], 0
        cands = _drop_twins(cands, adj)
        if not key and self._orbit_reps is not None:
            cands = [w for w in cands if w in self._orbit_reps[reps]]
        return sorted(cands, key=lambda w: (deg[w] != want, w))

    def _answerable(self, key, cg, ch, k, side, v, bg, bh) -> bool:
        for w in self._replies(key, side, v, bg, bh):
            x, y = (v, w) if side == LEFT else (w, v)
            nk = list(key)
            bisect.insort(nk, (x, y))
            if self._dup(tuple(nk), cg | (1 << x), ch | (1 << y), k - 1):
                return True
        return False

    # -- public queries on arbitrary positions -------------------------------

    def _state(self, pairs):
        key = tuple(sorted(pairs))
        cg = ch = 0
        for x, y in key:
            cg |= 1 << x
            ch |= 1 << y
        return key, cg, ch

    def duplicator_wins(self, pairs=(), k: int = 0) -> bool:
        """Value of the position with ``k`` rounds left (pairs must be legal)."""
        c = Configuration(self.G, self.H, tuple(pairs))
        for i, (x, y) in enumerate(c.pairs):
            if not consistent(self.G, self.H, c.pairs[:i], x, y):
                return False
        return self._dup(*self._state(c.pairs), k)

    def duplicator_reply(self, pairs, side: str, v: int, k: int) -> int | None:
        """A reply to Spoiler's ``v`` on ``side`` that wins the remaining ``k - 1`` rounds."""
        key, cg, ch = self._state(pairs)
        mine = ch if side == LEFT else cg
        g_other = self.G if side == RIGHT else self.H
        for w in range(g_other.n):
            if (mine >> w) & 1:
                continue
            x, y = (v, w) if side == LEFT else (w, v)
            if not consistent(self.G, self.H, key, x, y):
                continue
            if self._dup(*self._state(key + ((x, y),)), k - 1):
                return w
        return None

    def spoiler_move(self, pairs, k: int) -> tuple[str, int] | None:
        """A Spoiler move that wins with ``k`` rounds left, if one exists."""
        if k <= 0:
            return None
        key, cg, ch = self._state(pairs)
        for side, g, chosen in ((LEFT, self.G, cg), (RIGHT, self.H, ch)):
            for v in range(g.n):
                if (chosen >> v) & 1:
                    continue
                if self.duplicator_reply(key, side, v, k) is None:
                    return side, v
        return None

    # -- strategy export -----------------------------------------------------

    def strategy_table(self, r: int, limit: int = 1_000_000) -> dict[str, str]:
        """The winner's moves along every line of play from the empty position.

        Keys are ``"<config>|S"`` for Spoiler to move and ``"<config>|<side> <v>"``
        for Duplicator answering ``v``; values are ``"<side> <vertex>"``.
        """
        table: dict[str, str] = {}
        dup = self.duplicator_wins((), r)

        def put(k, val):
            table[k] = val
            if len(table) > limit:
                raise SolverBudgetExceeded(f"strategy table exceeds {limit} entries")

        def walk(c: Configuration, k: int):
            if k == 0:
                return
            if dup:
                for side in (LEFT, RIGHT):
                    for v in c.unchosen(side):
                        w = self.duplicator_reply(c.pairs, side, v, k)
                        put(f"{c.key()}|{side} {v}", f"{other(side)} {w}")
                        walk(c.extend(side, v, w), k - 1)
                return
            move = self.spoiler_move(c.pairs, k)
            if move is None:
                return
            side, v = move
            put(f"{c.key()}|S", f"{side} {v}")
            for w in c.unchosen(other(side)):
                nxt = c.extend(side, v, w)
                x, y = nxt.pairs[-1]
                if consistent(self.G, self.H, c.pairs, x, y):
                    walk(nxt, k - 1)

        walk(Configuration(self.G, self.H), r)
        return table


def solve(G: Graph, H: Graph, r: int, budget: int = DEFAULT_BUDGET,
          with_strategy: bool = False, orbit_reduction: bool = True) -> GameOutcome:
    """Exact winner of the ``r``-round game on (G, H)."""
    if r < 0:
        raise ValueError("round count must be nonnegative")
    solver = EFSolver(G, H, budget, orbit_reduction)
    dup = solver.duplicator_wins((), r)
    winner = Player.DUPLICATOR if dup else Player.SPOILER
    strategy = solver.strategy_table(r) if with_strategy else None
    return GameOutcome(winner, r, solver.nodes, strategy)
