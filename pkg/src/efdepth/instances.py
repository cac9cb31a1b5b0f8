"""Graph family specs and the registry of (pattern, positive host, negative host) bundles."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import graph as g
from .graph import Graph, GraphError, contains_induced

FAMILIES = ("path", "cycle", "complete", "empty", "complete_multipartite", "almost_multipartite")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}")
        p = self.params
        if self.family == "empty":
            if len(p) != 1 or p[0] < 0:
                raise GraphError("empty takes one nonnegative size")
        elif self.family in ("path", "cycle", "complete"):
            if len(p) != 1 or p[0] < 1:
                raise GraphError(f"{self.family} takes one positive size")
            if self.family == "cycle" and p[0] < 3:
                raise GraphError("cycle needs at least 3 vertices")
        elif self.family == "complete_multipartite":
            if not p or min(p) < 1:
                raise GraphError("part sizes must be positive")
            if list(p) != sorted(p):
                raise GraphError("part sizes must be sorted ascending")
        else:
            if len(p) != 3 or min(p) < 1:
                raise GraphError("almost_multipartite takes positive (ell, k, m)")


def generate(spec: FamilySpec) -> Graph:
    p = spec.params
    if spec.family == "path":
        return g.path(p[0])
    if spec.family == "cycle":
        return g.cycle(p[0])
    if spec.family == "complete":
        return g.complete(p[0])
    if spec.family == "empty":
        return g.empty(p[0])
    if spec.family == "complete_multipartite":
        return g.complete_multipartite(p)
    return g.almost_multipartite(*p)


@dataclass(frozen=True)
class InstanceBundle:
    """F is induced in G but not in H; Duplicator is expected to win in r rounds."""

    name: str
    F: Graph
    G: Graph
    H: Graph
    r: int
    params: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if not contains_induced(self.G, self.F)[0]:
            raise GraphError(f"{self.name}: pattern is not induced in the positive host")
        if contains_induced(self.H, self.F)[0]:
            raise GraphError(f"{self.name}: pattern is induced in the negative host")


def paw() -> Graph:
    """Triangle 0-1-2 with pendant 3 at vertex 0."""
    return g.build(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def diamond() -> Graph:
    return g.complete_multipartite((2, 1, 1))


def g41() -> Graph:
    """C4 on 0..3 plus pendant 4 at vertex 0."""
    return g.build(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


def g311() -> Graph:
    """Triangle 0-1-2 with disjoint pendants 3 at 0 and 4 at 1."""
    return g.build(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])


def thm1_2_host(m: int) -> Graph:
    """``P4 ⊔ mP2``: path 0-1-2-3, then blocks {4+2s, 5+2s}."""
    return g.union(g.path(4), g.copies(m, g.complete(2)))


def _thm1_2(m: int) -> InstanceBundle:
    if m < 1:
        raise GraphError("thm1_2 needs m >= 1")
    F = g.union(g.path(3), g.empty(m))
    return InstanceBundle(f"thm1_2({m})", F, thm1_2_host(m), thm1_2_host(m - 1), m + 1, (m,))


def _thm2(m: int, k: int, sizes: tuple[int, ...]) -> InstanceBundle:
    sizes = tuple(sizes)
    if len(sizes) != k:
        raise GraphError("thm2 needs exactly k part sizes")
    if k < 2 or max(sizes) <= 1 or m < 1:
        raise GraphError("thm2 is registered only for k >= 2, largest part > 1, m >= 1")
    FamilySpec("complete_multipartite", sizes)
    ell = m * sum(sizes)
    F = g.copies(m, g.complete_multipartite(sizes))
    name = f"thm2({m},{k},({','.join(map(str, sizes))}))"
    return InstanceBundle(name, F, g.almost_multipartite(ell, k, m),
                          g.almost_multipartite(ell - 1, k, m), ell - 1, (m, k, sizes))


def _matched_k4_c4() -> Graph:
    return g.matched(g.complete(4), g.cycle(4))


def _prism() -> Graph:
    return g.matched(g.complete(3), g.complete(3))


def gen_paper_instance(name: str, *params) -> InstanceBundle:
    """Build a registered bundle.

    ``thm1_2(m)`` and ``thm2(m, k, sizes)`` take parameters; the four
    five-vertex cases ``thm3_c5``, ``thm3_g41``, ``thm3_diamond``,
    ``thm3_g311`` take none.
    """
    if name == "thm1_2":
        (m,) = params
        return _thm1_2(int(m))
    if name == "thm2":
        m, k, sizes = params
        return _thm2(int(m), int(k), tuple(sizes))
    if params:
        raise GraphError(f"{name} takes no parameters")
    if name == "thm3_c5":
        return InstanceBundle(name, g.cycle(5), g.union(g.cycle(5), g.cycle(6)),
                              g.copies(2, g.cycle(6)), 3)
    if name == "thm3_g41":
        return InstanceBundle(name, g41(), g.sun(4), g.sun(5), 3)
    if name == "thm3_diamond":
        F = g.union(g.empty(1), diamond())
        return InstanceBundle(name, F, g.copies(2, g.almost_multipartite(4, 3, 1)),
                              g.copies(2, g.almost_multipartite(3, 3, 1)), 3)
    if name == "thm3_g311":
        return InstanceBundle(name, g311(), g.apex(g.copies(2, _matched_k4_c4())),
                              g.apex(g.copies(2, _prism())), 3)
    raise GraphError(f"unknown instance {name!r}")


INSTANCE_NAMES = ("thm1_2", "thm2", "thm3_c5", "thm3_g41", "thm3_diamond", "thm3_g311")


def parse_instance_args(args: list[str]) -> InstanceBundle:
    """``['thm2', '1', '2', '2', '2']`` -> thm2(m=1, k=2, sizes=(2, 2))."""
    name, rest = args[0], [int(a) for a in args[1:]]
    if name == "thm2":
        if len(rest) < 3:
            raise GraphError("thm2 needs m k n_1 .. n_k")
        return gen_paper_instance(name, rest[0], rest[1], tuple(rest[2:]))
    return gen_paper_instance(name, *rest)
