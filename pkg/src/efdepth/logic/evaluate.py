"""Model checking by compiling a formula into nested closures.

Every quantifier owns one environment slot. Quantifiers short-circuit.
"""

from __future__ import annotations

from typing import Callable, Mapping

from ..graph import Graph
from .formula import (
    And, AtomAdj, AtomEq, Exists, Forall, Formula, FormulaError, Implies, Not, Or, free_variables,
)

Compiled = Callable[[tuple, int, list], bool]


def _compile(phi: Formula, slot: dict[str, int], nslots: list[int]) -> Compiled:
    if isinstance(phi, AtomAdj):
        a, b = slot[phi.a], slot[phi.b]
        return lambda adj, n, env: (adj[env[a]] >> env[b]) & 1 == 1
    if isinstance(phi, AtomEq):
        a, b = slot[phi.a], slot[phi.b]
        return lambda adj, n, env: env[a] == env[b]
    if isinstance(phi, Not):
        f = _compile(phi.arg, slot, nslots)
        return lambda adj, n, env: not f(adj, n, env)
    if isinstance(phi, And):
        fs = [_compile(c, slot, nslots) for c in phi.args]

        def conj(adj, n, env):
            for f in fs:
                if not f(adj, n, env):
                    return False
            return True
        return conj
    if isinstance(phi, Or):
        fs = [_compile(c, slot, nslots) for c in phi.args]

        def disj(adj, n, env):
            for f in fs:
                if f(adj, n, env):
                    return True
            return False
        return disj
    if isinstance(phi, Implies):
        f, g = _compile(phi.left, slot, nslots), _compile(phi.right, slot, nslots)
        return lambda adj, n, env: (not f(adj, n, env)) or g(adj, n, env)
    s = nslots[0]
    nslots[0] += 1
    body = _compile(phi.body, {**slot, phi.var: s}, nslots)
    if isinstance(phi, Exists):
        def ex(adj, n, env):
            for v in range(n):
                env[s] = v
                if body(adj, n, env):
                    return True
            return False
        return ex

    def fa(adj, n, env):
        for v in range(n):
            env[s] = v
            if not body(adj, n, env):
                return False
        return True
    return fa


class CompiledFormula:
    """A formula prepared for repeated evaluation on many graphs."""

    def __init__(self, phi: Formula):
        self.formula = phi
        self.free = sorted(free_variables(phi))
        self._slot = {v: i for i, v in enumerate(self.free)}
        nslots = [len(self.free)]
        self._fn = _compile(phi, self._slot, nslots)
        self._size = nslots[0]

    def __call__(self, G: Graph, env: Mapping[str, int] | None = None) -> bool:
        env = env or {}
        values = [0] * self._size
        for v in self.free:
            if v not in env:
                raise FormulaError(f"unbound free variable {v!r}")
        for v, x in env.items():
            if not 0 <= x < G.n:
                raise FormulaError(f"{v!r} is assigned {x}, outside 0..{G.n - 1}")
            if v in self._slot:
                values[self._slot[v]] = x
        return self._fn(G.adj, G.n, values)


def evaluate(phi: Formula, G: Graph, env: Mapping[str, int] | None = None) -> bool:
    return CompiledFormula(phi)(G, env)
