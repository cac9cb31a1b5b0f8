"""First-order formulas over the graph signature {~, =}."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Union


class FormulaError(ValueError):
    pass


class _Node:
    @cached_property
    def bound(self) -> frozenset[str]:
        """Names quantified anywhere in this subtree."""
        return frozenset().union(*(c.bound for c in self.children))

    @property
    def children(self) -> tuple:
        return ()

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class AtomAdj(_Node):
    a: str
    b: str


@dataclass(frozen=True)
class AtomEq(_Node):
    a: str
    b: str


@dataclass(frozen=True)
class Not(_Node):
    arg: Formula

    @property
    def children(self):
        return (self.arg,)


@dataclass(frozen=True)
class And(_Node):
    args: tuple[Formula, ...]

    def __post_init__(self):
        if len(self.args) < 2:
            raise FormulaError("And needs at least two operands; use conj()")

    @property
    def children(self):
        return self.args


@dataclass(frozen=True)
class Or(_Node):
    args: tuple[Formula, ...]

    def __post_init__(self):
        if len(self.args) < 2:
            raise FormulaError("Or needs at least two operands; use disj()")

    @property
    def children(self):
        return self.args


@dataclass(frozen=True)
class Implies(_Node):
    left: Formula
    right: Formula

    @property
    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class _Quantifier(_Node):
    var: str
    body: Formula

    def __post_init__(self):
        if self.var in self.body.bound:
            raise FormulaError(f"quantifier on {self.var!r} shadows an enclosing one")

    @property
    def children(self):
        return (self.body,)

    @cached_property
    def bound(self) -> frozenset[str]:
        return self.body.bound | {self.var}


@dataclass(frozen=True)
class Exists(_Quantifier):
    pass


@dataclass(frozen=True)
class Forall(_Quantifier):
    pass


Formula = Union[AtomAdj, AtomEq, Not, And, Or, Implies, Exists, Forall]
ATOMS = (AtomAdj, AtomEq)
QUANTIFIERS = (Exists, Forall)


def conj(parts) -> Formula:
    """Flat conjunction; a single part is returned as is."""
    parts = tuple(parts)
    if not parts:
        raise FormulaError("empty conjunction")
    return parts[0] if len(parts) == 1 else And(parts)


def disj(parts) -> Formula:
    parts = tuple(parts)
    if not parts:
        raise FormulaError("empty disjunction")
    return parts[0] if len(parts) == 1 else Or(parts)


def exists_block(names, body: Formula) -> Formula:
    for v in reversed(list(names)):
        body = Exists(v, body)
    return body


def quantifier_depth(phi: Formula) -> int:
    inner = max((quantifier_depth(c) for c in phi.children), default=0)
    return inner + 1 if isinstance(phi, QUANTIFIERS) else inner


def free_variables(phi: Formula) -> frozenset[str]:
    if isinstance(phi, ATOMS):
        return frozenset((phi.a, phi.b))
    if isinstance(phi, QUANTIFIERS):
        return free_variables(phi.body) - {phi.var}
    return frozenset().union(*(free_variables(c) for c in phi.children))


def size(phi: Formula) -> int:
    return 1 + sum(size(c) for c in phi.children)


# -- printing ---------------------------------------------------------------

def to_text(phi: Formula) -> str:
    """Fully parenthesised text that parses back to the same tree."""
    if isinstance(phi, AtomAdj):
        return f"{phi.a}~{phi.b}"
    if isinstance(phi, AtomEq):
        return f"{phi.a}={phi.b}"
    if isinstance(phi, Not):
        return f"!({to_text(phi.arg)})"
    if isinstance(phi, QUANTIFIERS):
        q = "E" if isinstance(phi, Exists) else "A"
        body = to_text(phi.body)
        if isinstance(phi.body, (*ATOMS, Not)):
            body = f"({body})"
        return f"{q}{phi.var}.{body}"
    if isinstance(phi, Implies):
        return f"({_operand(phi.left)} -> {_operand(phi.right)})"
    sep = " & " if isinstance(phi, And) else " | "
    return "(" + sep.join(_operand(c) for c in phi.args) + ")"


def _operand(phi: Formula) -> str:
    text = to_text(phi)
    return f"({text})" if isinstance(phi, QUANTIFIERS) else text


# -- parsing ----------------------------------------------------------------

class ParseError(FormulaError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at line {line}, column {col}")
        self.line, self.col = line, col


_PUNCT = ("->", "!~", "!=", "!", "~", "=", "&", "|", "(", ")", ".")


def _tokenize(text: str) -> list[tuple[str, str, int, int]]:
    tokens, i, line, col = [], 0, 1, 1
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        if ch in "EA":
            tokens.append(("Q", ch, line, col))
            i, col = i + 1, col + 1
            continue
        if "a" <= ch <= "z":
            j = i + 1
            while j < len(text) and (text[j].isalnum() or text[j] == "_") and text[j].isascii():
                j += 1
            tokens.append(("VAR", text[i:j], line, col))
            col += j - i
            i = j
            continue
        for p in _PUNCT:
            if text.startswith(p, i):
                tokens.append((p, p, line, col))
                i, col = i + len(p), col + len(p)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str, free: frozenset[str]):
        self.toks = _tokenize(text)
        self.pos = 0
        self.scope = list(free)

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind: str):
        tok = self.toks[self.pos]
        if tok[0] != kind:
            found = tok[1] or "end of input"
            raise ParseError(f"expected {kind!r}, found {found!r}", tok[2], tok[3])
        self.pos += 1
        return tok

    def formula(self) -> Formula:
        tok = self.peek()
        if tok[0] == "Q":
            self.pos += 1
            var = self.take("VAR")
            if var[1] in self.scope:
                raise ParseError(f"quantifier on {var[1]!r} shadows a variable in scope", var[2], var[3])
            self.take(".")
            self.scope.append(var[1])
            body = self.formula()
            self.scope.pop()
            return (Exists if tok[1] == "E" else Forall)(var[1], body)
        left = self.disjunction()
        if self.peek()[0] == "->":
            self.pos += 1
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        parts = [self.conjunction()]
        while self.peek()[0] == "|":
            self.pos += 1
            parts.append(self.conjunction())
        return disj(parts)

    def conjunction(self) -> Formula:
        parts = [self.literal()]
        while self.peek()[0] == "&":
            self.pos += 1
            parts.append(self.literal())
        return conj(parts)

    def literal(self) -> Formula:
        tok = self.peek()
        if tok[0] == "!":
            self.pos += 1
            return Not(self.literal())
        if tok[0] == "Q":
            # an unparenthesised quantifier scopes over the rest of the input
            return self.formula()
        if tok[0] == "(":
            self.pos += 1
            inner = self.formula()
            self.take(")")
            return inner
        return self.atom()

    def atom(self) -> Formula:
        a = self.variable()
        op = self.peek()
        if op[0] not in ("~", "=", "!~", "!="):
            raise ParseError(f"expected a relation after {a!r}, found {op[1] or 'end of input'!r}", op[2], op[3])
        self.pos += 1
        b = self.variable()
        base = AtomAdj(a, b) if op[0] in ("~", "!~") else AtomEq(a, b)
        return Not(base) if op[0].startswith("!") else base

    def variable(self) -> str:
        tok = self.take("VAR")
        if tok[1] not in self.scope:
            raise ParseError(f"unbound variable {tok[1]!r}", tok[2], tok[3])
        return tok[1]


def parse(text: str, free=()) -> Formula:
    """Parse formula text; variables in ``free`` may occur unbound."""
    p = _Parser(text, frozenset(free))
    phi = p.formula()
    p.take("EOF")
    return phi
