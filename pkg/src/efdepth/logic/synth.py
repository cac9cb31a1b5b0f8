"""Formula builders: induced-pattern predicates, the trivial depth-v(F)
sentence, the depth-(m+3) sentence for P3 ⊔ K1 ⊔ H, and helpers."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Sequence

from ..graph import Graph
from .formula import (
    And, AtomAdj, AtomEq, Exists, Forall, Formula, FormulaError, Implies, Not, Or, conj, exists_block,
)


def _apart(a: str, b: str) -> list[Formula]:
    """``a ≁ b  ∧  a ≠ b`` as two literals."""
    return [Not(AtomAdj(a, b)), Not(AtomEq(a, b))]


def pattern_literals(F: Graph, names: Sequence[str]) -> list[Formula]:
    """Literals saying ``names[i] -> i`` is an induced embedding of F.

    Adjacent pairs carry no distinctness literal: adjacency is irreflexive.
    """
    if len(names) != F.n:
        raise FormulaError(f"pattern has {F.n} vertices but {len(names)} variables were given")
    if len(set(names)) != len(names):
        raise FormulaError("pattern variables must be distinct")
    lits: list[Formula] = []
    for i, j in combinations(range(F.n), 2):
        if F.has_edge(i, j):
            lits.append(AtomAdj(names[i], names[j]))
        else:
            lits.extend(_apart(names[i], names[j]))
    return lits


def synth_pattern_predicate(F: Graph, names: Sequence[str]) -> Formula:
    lits = pattern_literals(F, names)
    if not lits:
        if not names:
            raise FormulaError("the pattern predicate of the empty graph has no variables")
        return AtomEq(names[0], names[0])
    return conj(lits)


def synth_trivial(F: Graph) -> Formula:
    """``∃x1..∃xl`` of the pattern predicate; depth equals v(F)."""
    if F.n == 0:
        raise FormulaError("the empty pattern needs no quantifier; no sentence of depth 0 exists here")
    names = [f"x{i + 1}" for i in range(F.n)]
    return exists_block(names, synth_pattern_predicate(F, names))


def _p0(z: list[str], H: Graph) -> list[Formula]:
    # z = (first three, then the H variables)
    lits = pattern_literals(H, z[3:])
    for i in range(3):
        for j in range(i + 1, len(z)):
            lits.extend(_apart(z[i], z[j]))
    return lits


def _p1(z: list[str], H: Graph) -> list[Formula]:
    lits = pattern_literals(H, z[3:]) + [AtomAdj(z[0], z[1])]
    for j in range(2, len(z)):
        lits.extend(_apart(z[0], z[j]))
    for i in (1, 2):
        for j in range(i + 1, len(z)):
            lits.extend(_apart(z[i], z[j]))
    return lits


def _p2(z: list[str], H: Graph) -> list[Formula]:
    lits = pattern_literals(H, z[3:]) + [AtomAdj(z[0], z[1]), AtomAdj(z[1], z[2])]
    lits.extend(_apart(z[0], z[2]))
    for i in range(3):
        for j in range(3, len(z)):
            lits.extend(_apart(z[i], z[j]))
    return lits


def synth_thm11(H: Graph, drop_p0_literal: int | None = None) -> Formula:
    """Sentence of depth ``v(H) + 3`` expressing an induced ``P3 ⊔ K1 ⊔ H``.

    Variables: ``x1`` carries the isolated vertex and one end of the path
    in turn, ``x2..x4`` the rest of the path, ``x5..x_{m+4}`` the copy of H.

    ``drop_p0_literal`` removes one literal from the first inner predicate;
    it exists only to check that the verification harness notices.
    """
    m = H.n
    hs = [f"x{i}" for i in range(5, m + 5)]
    p0 = _p0(["x1", "x3", "x4"] + hs, H)
    if drop_p0_literal is not None:
        del p0[drop_p0_literal]
    first = exists_block(["x3", "x4"], conj(p0))
    second = Exists("x2", And((
        Exists("x4", conj(_p1(["x1", "x2", "x4"] + hs, H))),
        Exists("x3", conj(_p2(["x1", "x2", "x3"] + hs, H))),
    )))
    return exists_block(hs + ["x1"], And((first, second)))


def complement_transform(phi: Formula) -> Formula:
    """Rewrite adjacency as non-adjacency between distinct vertices.

    ``evaluate(complement_transform(phi), G) == evaluate(phi, complement(G))``.
    """
    if isinstance(phi, AtomAdj):
        return And((Not(AtomAdj(phi.a, phi.b)), Not(AtomEq(phi.a, phi.b))))
    if isinstance(phi, AtomEq):
        return phi
    if isinstance(phi, Not):
        return Not(complement_transform(phi.arg))
    if isinstance(phi, (And, Or)):
        return type(phi)(tuple(complement_transform(c) for c in phi.args))
    if isinstance(phi, Implies):
        return Implies(complement_transform(phi.left), complement_transform(phi.right))
    return type(phi)(phi.var, complement_transform(phi.body))


def random_sentence(rng: random.Random, max_depth: int, max_width: int = 3) -> Formula:
    """A random sentence of quantifier depth between 1 and ``max_depth``."""
    if max_depth < 1:
        raise FormulaError("a sentence needs at least one quantifier")

    def quantified(depth: int, scope: list[str]) -> Formula:
        var = f"v{len(scope) + 1}"
        q = Exists if rng.random() < 0.5 else Forall
        return q(var, build(depth - 1, scope + [var]))

    def build(depth: int, scope: list[str]) -> Formula:
        roll = rng.random()
        if depth > 0 and roll < 0.45:
            return quantified(depth, scope)
        if roll < 0.7 or max_width < 2:
            a, b = rng.choice(scope), rng.choice(scope)
            atom = AtomAdj(a, b) if rng.random() < 0.7 else AtomEq(a, b)
            return Not(atom) if rng.random() < 0.5 else atom
        kind = rng.choice((And, Or, Implies, Not))
        if kind is Not:
            return Not(build(depth, scope))
        if kind is Implies:
            return Implies(build(depth, scope), build(depth, scope))
        return kind(tuple(build(depth, scope) for _ in range(rng.randint(2, max_width))))

    return quantified(rng.randint(1, max_depth), [])
