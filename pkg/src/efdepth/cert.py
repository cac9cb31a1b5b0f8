"""Lower and upper bound certificates for the depth of "contains induced F".

A lower certificate (G, H, r) says F is induced in G, absent from H and
Duplicator wins the r-round game, hence depth >= r + 1. An upper
certificate says a sentence agrees with induced containment on every graph
up to ``n_max`` vertices; that is a finite check, not a proof.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .formats import decode_graph6, encode_graph6
from .graph import Graph, chromatic_number, complement, contains_induced, copies
from .game.solver import DEFAULT_BUDGET, SolverBudgetExceeded, solve
from .iso import ENUM_MAX_N, all_graphs_up_to
from .logic.evaluate import CompiledFormula
from .logic.formula import Formula, FormulaError, free_variables, parse, quantifier_depth, to_text

REJECT_F_IN_H = "F-in-H"
REJECT_F_NOT_IN_G = "F-not-in-G"
REJECT_SPOILER = "Spoiler-wins"
REJECT_BUDGET = "solver-budget-exceeded"


def _bound_terms(F: Graph) -> Fraction:
    ell = F.n
    first = math.floor(ell / 2 - 2 * math.log2(ell) + 3)
    return max(Fraction(first), Fraction(chromatic_number(F)), Fraction(F.num_edges, ell) + 2)


def general_lower_bound(F: Graph, use_complement: bool = False) -> tuple[float, int]:
    """``max(floor(l/2 - 2 log2 l + 3), chi(F), e(F)/v(F) + 2)`` and its ceiling.

    With ``use_complement`` the maximum is also taken over the complement,
    whose depth is the same.
    """
    if F.n < 1:
        raise ValueError("the bound needs at least one vertex")
    value = _bound_terms(F)
    if use_complement:
        value = max(value, _bound_terms(complement(F)))
    return float(value), math.ceil(value)


@dataclass
class BoundCertificate:
    kind: str
    pattern: str
    verified: bool
    left: str | None = None
    right: str | None = None
    rounds: int | None = None
    claimed_bound: int | None = None
    formula: str | None = None
    depth: int | None = None
    n_max: int | None = None
    tool_version: str = __version__
    reasons: list[str] = field(default_factory=list, compare=False)
    counterexample: Graph | None = field(default=None, compare=False)

    _FIELDS = ("kind", "pattern", "left", "right", "rounds", "claimed_bound", "formula",
               "depth", "n_max", "verified", "tool_version")

    def to_json(self) -> str:
        data = {k: getattr(self, k) for k in self._FIELDS if getattr(self, k) is not None}
        return json.dumps(data)

    @classmethod
    def from_json(cls, text: str) -> "BoundCertificate":
        data = json.loads(text)
        unknown = set(data) - set(cls._FIELDS)
        if unknown:
            raise ValueError(f"unknown certificate fields {sorted(unknown)}")
        return cls(**data)


def _g6(G: Graph) -> str:
    return encode_graph6(G).decode("ascii")


def certify_lower(F: Graph, G: Graph, H: Graph, r: int, budget: int = DEFAULT_BUDGET) -> BoundCertificate:
    reasons = []
    if not contains_induced(G, F)[0]:
        reasons.append(REJECT_F_NOT_IN_G)
    if contains_induced(H, F)[0]:
        reasons.append(REJECT_F_IN_H)
    try:
        if solve(G, H, r, budget).winner.value == "spoiler":
            reasons.append(REJECT_SPOILER)
    except SolverBudgetExceeded:
        reasons.append(REJECT_BUDGET)
    return BoundCertificate("lower", _g6(F), not reasons, left=_g6(G), right=_g6(H), rounds=r,
                            claimed_bound=r + 1, reasons=reasons)


def certify_upper(F: Graph, phi: Formula, n_max: int) -> BoundCertificate:
    """Compare ``phi`` with induced containment of F on every graph with <= n_max vertices."""
    if n_max > ENUM_MAX_N:
        raise ValueError(f"upper certificates enumerate at most {ENUM_MAX_N} vertices")
    if free_variables(phi):
        raise FormulaError("an upper certificate needs a sentence")
    check = CompiledFormula(phi)
    bad = None
    for X in all_graphs_up_to(n_max):
        if check(X) != contains_induced(X, F)[0]:
            bad = X
            break
    return BoundCertificate("upper", _g6(F), bad is None, formula=to_text(phi), depth=quantifier_depth(phi),
                            n_max=n_max, counterexample=bad,
                            reasons=[] if bad is None else [f"disagrees on {_g6(bad)}"])


def verify_certificate(cert: BoundCertificate, budget: int = DEFAULT_BUDGET) -> BoundCertificate:
    """Recompute a certificate from its stored inputs."""
    F = decode_graph6(cert.pattern)
    if cert.kind == "lower":
        fresh = certify_lower(F, decode_graph6(cert.left), decode_graph6(cert.right), cert.rounds, budget)
        if cert.claimed_bound != cert.rounds + 1:
            fresh.verified = False
            fresh.reasons.append("claimed bound is not rounds + 1")
        return fresh
    if cert.kind == "upper":
        phi = parse(cert.formula)
        fresh = certify_upper(F, phi, cert.n_max)
        if cert.depth != fresh.depth:
            fresh.verified = False
            fresh.reasons.append(f"stated depth {cert.depth} but formula has depth {fresh.depth}")
        return fresh
    raise ValueError(f"unknown certificate kind {cert.kind!r}")


@dataclass
class SearchResult:
    certificate: BoundCertificate | None
    budget_exhausted: bool
    games_solved: int


def _candidates(n_max: int) -> list[Graph]:
    """Representatives up to ``n_max`` vertices, then doubled ones beyond that size."""
    reps = list(all_graphs_up_to(n_max))
    doubled = [copies(2, A) for A in reps if 0 < A.n and 2 * A.n > n_max]
    return reps + doubled


def search_pair(F: Graph, r: int, n_max: int, budget: int = 10_000,
                node_budget: int = 10**6) -> SearchResult:
    """First (H, G) pair, H before G, that certifies depth >= r + 1.

    ``budget`` caps the number of games solved; a game that exceeds
    ``node_budget`` positions is skipped.
    """
    pool = _candidates(n_max)
    free = [X for X in pool if not contains_induced(X, F)[0]]
    hosts = [X for X in pool if contains_induced(X, F)[0]]
    solved = 0
    for H in free:
        for G in hosts:
            if solved >= budget:
                return SearchResult(None, True, solved)
            solved += 1
            try:
                outcome = solve(G, H, r, node_budget)
            except SolverBudgetExceeded:
                continue
            if outcome.winner.value == "duplicator":
                return SearchResult(certify_lower(F, G, H, r), False, solved)
    return SearchResult(None, False, solved)


__all__ = [
    "BoundCertificate", "SearchResult", "certify_lower", "certify_upper", "general_lower_bound",
    "search_pair", "verify_certificate",
]
