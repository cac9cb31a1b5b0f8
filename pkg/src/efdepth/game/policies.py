"""Scripted Duplicator strategies and their exhaustive verification."""

from __future__ import annotations

from ..graph import Graph, almost_multipartite, almost_multipartite_coords, almost_multipartite_index
from ..instances import thm1_2_host
from .rules import LEFT, RIGHT, Configuration, adjacency_pattern, consistent, format_round, other


class PolicyMismatch(ValueError):
    pass


class DuplicatorPolicy:
    """Deterministic reply rule, possibly with state that evolves during a game.

    ``respond`` returns the reply vertex in the other graph, or None when the
    policy has no legal reply.
    """

    name = "policy"

    def reset(self):
        pass

    def respond(self, c: Configuration, side: str, v: int) -> int | None:
        raise NotImplementedError

    def snapshot(self):
        return None

    def restore(self, state):
        pass

    def memo_key(self, c: Configuration):
        """Hashable summary that fixes all future replies, or None if there is none."""
        return None

    def check_pair(self, G: Graph, H: Graph):
        pass


class LowestUnchosenPolicy(DuplicatorPolicy):
    name = "lowest"

    def respond(self, c, side, v):
        free = c.unchosen(other(side))
        return free[0] if free else None

    def memo_key(self, c):
        return tuple(sorted(c.pairs))


class IsomorphismPolicy(DuplicatorPolicy):
    """Answer through a fixed isomorphism ``perm: V(G) -> V(H)``."""

    name = "isomorphism"

    def __init__(self, perm: list[int]):
        self.perm = list(perm)
        self.inverse = {w: v for v, w in enumerate(self.perm)}

    def respond(self, c, side, v):
        return self.perm[v] if side == LEFT else self.inverse[v]

    def memo_key(self, c):
        return tuple(sorted(c.pairs))


class Thm2Policy(DuplicatorPolicy):
    """Class-renaming strategy on almost-multipartite graphs.

    G has ``ell`` classes and H has ``ell - 1``; part and component are copied.
    ``f`` maps G-classes to H-classes and grows whenever Spoiler opens a class.
    Wins for ``ell - 1`` rounds.
    """

    name = "thm2"

    def __init__(self, ell: int, k: int, m: int):
        self.ell, self.k, self.m = ell, k, m
        self.f: dict[int, int] = {}

    def check_pair(self, G, H):
        if G != almost_multipartite(self.ell, self.k, self.m) or \
                H != almost_multipartite(self.ell - 1, self.k, self.m):
            raise PolicyMismatch("thm2 policy expects the almost-multipartite pair it was built for")

    def reset(self):
        self.f = {}

    def snapshot(self):
        return dict(self.f)

    def restore(self, state):
        self.f = state

    def memo_key(self, c):
        return tuple(sorted(c.pairs)), tuple(sorted(self.f.items()))

    def respond(self, c, side, v):
        sizes = {LEFT: self.ell, RIGHT: self.ell - 1}
        i, j, h = almost_multipartite_coords(v, sizes[side], self.k)
        mine = {almost_multipartite_coords(x, sizes[side], self.k)[0] for x in c.chosen(side)}
        theirs = {almost_multipartite_coords(y, sizes[other(side)], self.k)[0] for y in c.chosen(other(side))}
        if i in mine:
            if side == LEFT:
                target = self.f[i]
            else:
                target = next(a for a, b in self.f.items() if b == i)
        else:
            fresh = [a for a in range(sizes[other(side)]) if a not in theirs]
            if not fresh:
                return None
            target = fresh[0]
            if side == LEFT:
                self.f[i] = target
            else:
                self.f[target] = i
        return almost_multipartite_index(target, j, h, sizes[other(side)], self.k)


class Thm12Policy(DuplicatorPolicy):
    """Strategy on ``P4 ⊔ mP2`` versus ``P4 ⊔ (m-1)P2`` for ``m + 1`` rounds.

    Vertices 0..3 form the path (block B), and ``{4+2s, 5+2s}`` is the
    s-th edge block. Before the last round:

    * a path vertex is answered by the same vertex;
    * a vertex in a block already touched is answered inside the block that
      holds the partner of the earlier pick, so block co-membership is mirrored;
    * a vertex in an untouched block is answered in the lowest untouched
      block of the other graph, and if the smaller graph has none left, by
      path vertex 0 (an end of the path), else by the lowest free path vertex
      that has no chosen neighbour.

    In the last round any reply with the right adjacency to the chosen
    vertices wins, so the lowest such vertex is played.
    """

    name = "thm1_2"

    def __init__(self, m: int):
        self.m = m
        self.rounds = m + 1

    def check_pair(self, G, H):
        if G != thm1_2_host(self.m) or H != thm1_2_host(self.m - 1):
            raise PolicyMismatch("thm1_2 policy expects P4 ⊔ mP2 versus P4 ⊔ (m-1)P2")

    def memo_key(self, c):
        return tuple(sorted(c.pairs))

    @staticmethod
    def _block(v: int) -> int | None:
        return None if v < 4 else (v - 4) // 2

    def _matching(self, c: Configuration, side: str, v: int) -> int | None:
        g, h = c.graph(side), c.graph(other(side))
        pat = adjacency_pattern(g, v, c.chosen(side))
        theirs = c.chosen(other(side))
        for w in c.unchosen(other(side)):
            if adjacency_pattern(h, w, theirs) == pat:
                return w
        return None

    def respond(self, c, side, v):
        if len(c) >= self.rounds - 1:
            return self._matching(c, side, v)
        h = c.graph(other(side))
        free = set(c.unchosen(other(side)))
        blk = self._block(v)
        if blk is None:
            return v if v in free else self._matching(c, side, v)
        mine, theirs = c.chosen(side), c.chosen(other(side))
        for x, y in zip(mine, theirs):
            if self._block(x) == blk:
                if self._block(y) is None:
                    return self._matching(c, side, v)
                partner = y ^ 1 if y >= 4 else None
                return partner if partner in free else self._matching(c, side, v)
        touched = {self._block(y) for y in theirs}
        nblocks = (h.n - 4) // 2
        for s in range(nblocks):
            if s not in touched:
                return 4 + 2 * s
        if 0 in free:
            return 0
        for w in range(4):
            if w in free and not any(h.has_edge(w, y) for y in theirs):
                return w
        return self._matching(c, side, v)


def registered_policy(name: str, params) -> DuplicatorPolicy:
    """``thm2`` takes ``(m, k, sizes)``; ``thm1_2`` takes ``(m,)``."""
    if name == "thm2":
        m, k, sizes = params
        return Thm2Policy(m * sum(sizes), k, m)
    if name == "thm1_2":
        (m,) = params
        return Thm12Policy(m)
    raise PolicyMismatch(f"unknown policy {name!r}")


def verify_policy(G: Graph, H: Graph, r: int, policy: DuplicatorPolicy) -> tuple[bool, list[str] | None]:
    """Play the policy against every Spoiler line for ``r`` rounds.

    Returns ``(True, None)`` when the chosen pairs stay a partial isomorphism
    on every line, else ``(False, transcript)`` of the first losing line.
    """
    policy.check_pair(G, H)
    policy.reset()
    done: set = set()

    def dfs(c: Configuration, k: int, lines: list[str]):
        if k == 0 or (not c.unchosen(LEFT) and not c.unchosen(RIGHT)):
            return None
        key = policy.memo_key(c)
        if key is not None and (key, k) in done:
            return None
        for side in (LEFT, RIGHT):
            for v in c.unchosen(side):
                snap = policy.snapshot()
                w = policy.respond(c, side, v)
                line = format_round(len(c) + 1, side, v, w)
                if w is None or w not in c.unchosen(other(side)):
                    return lines + [line, "winner: spoiler"]
                x, y = (v, w) if side == LEFT else (w, v)
                if not consistent(G, H, c.pairs, x, y):
                    return lines + [line, "winner: spoiler"]
                bad = dfs(c.extend(side, v, w), k - 1, lines + [line])
                policy.restore(snap)
                if bad:
                    return bad
        if key is not None:
            done.add((key, k))
        return None

    bad = dfs(Configuration(G, H), r, [])
    return (True, None) if bad is None else (False, bad)
