"""Game positions and the partial-isomorphism test.

A vertex may be picked at most once per graph. Spoiler picks an unchosen
vertex in either graph (the game ends when there is none), Duplicator
answers with an unchosen vertex of the other graph or loses.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import Graph

LEFT, RIGHT = "G", "H"


def other(side: str) -> str:
    return RIGHT if side == LEFT else LEFT


@dataclass(frozen=True)
class Configuration:
    G: Graph
    H: Graph
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        xs = [x for x, _ in self.pairs]
        ys = [y for _, y in self.pairs]
        if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
            raise ValueError("a vertex was chosen twice")
        if any(not 0 <= x < self.G.n for x in xs) or any(not 0 <= y < self.H.n for y in ys):
            raise ValueError("chosen vertex out of range")

    def graph(self, side: str) -> Graph:
        return self.G if side == LEFT else self.H

    def chosen(self, side: str) -> list[int]:
        idx = 0 if side == LEFT else 1
        return [p[idx] for p in self.pairs]

    def unchosen(self, side: str) -> list[int]:
        taken = set(self.chosen(side))
        return [v for v in range(self.graph(side).n) if v not in taken]

    def extend(self, side: str, v: int, w: int) -> "Configuration":
        """Spoiler picked ``v`` on ``side``; Duplicator answered ``w``."""
        pair = (v, w) if side == LEFT else (w, v)
        return Configuration(self.G, self.H, self.pairs + (pair,))

    def key(self) -> str:
        return "(" + ",".join(f"{x}-{y}" for x, y in sorted(self.pairs)) + ")"

    def __len__(self):
        return len(self.pairs)


def consistent(G: Graph, H: Graph, pairs, x: int, y: int) -> bool:
    """Whether adding (x, y) keeps adjacency agreement with every pair in ``pairs``."""
    gx, hy = G.adj[x], H.adj[y]
    for a, b in pairs:
        if ((gx >> a) & 1) != ((hy >> b) & 1):
            return False
    return True


def partial_iso_check(c: Configuration) -> bool:
    ps = c.pairs
    return all(consistent(c.G, c.H, ps[:i], x, y) for i, (x, y) in enumerate(ps))


def adjacency_pattern(g: Graph, v: int, chosen: list[int]) -> int:
    row = g.adj[v]
    pat = 0
    for i, u in enumerate(chosen):
        pat |= ((row >> u) & 1) << i
    return pat


def format_round(t: int, spoiler_side: str, v: int, w: int | None) -> str:
    reply = f"D {other(spoiler_side)} {w}" if w is not None else "D - none"
    return f"round {t}: S {spoiler_side} {v} | {reply}"
