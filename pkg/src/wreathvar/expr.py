"""Group expression language.

Grammar (``wr`` binds tighter than ``x``, both left-associative)::

    expr    := product
    product := wreath { "x" wreath }
    wreath  := atom { "wr" atom }
    atom    := "C" int | "C" "(" int "^" int ")" [ "^" card ]
             | "Q8" | "M27" | "1" | "(" expr ")"
    card    := int | "aleph" int | "continuum"

Examples: ``C(3^5)^6 x C(3^3)^aleph0 x C5``, ``(C2 x C2) wr C2``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from sympy import isprime

from . import abelian, groups
from .abelian import AbelianFE
from .cardinals import CONTINUUM, Cardinal, aleph, finite
from .errors import NotAbelian, NotFinite, NotPrime, ParseError, WreathVarError


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class PrimaryPower:
    p: int
    u: int
    card: Optional[Cardinal] = None


@dataclass(frozen=True)
class Named:
    name: str  # "Q8" or "M27"


@dataclass(frozen=True)
class Trivial:
    pass


@dataclass(frozen=True)
class Product:
    left: "GroupExpr"
    right: "GroupExpr"


@dataclass(frozen=True)
class WreathNode:
    left: "GroupExpr"
    right: "GroupExpr"


GroupExpr = Union[Cyclic, PrimaryPower, Named, Trivial, Product, WreathNode]

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<kw>Q8|M27|wr|aleph|continuum)
  | (?P<C>C)
  | (?P<x>x)
  | (?P<int>\d+)
  | (?P<punct>[()^])
""", re.VERBOSE)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos,
                             ["C", "Q8", "M27", "1", "(", "x", "wr"])
        kind = m.lastgroup
        if kind != "ws":
            val = m.group()
            toks.append((val if kind in ("kw", "C", "x", "punct") else kind, val, pos))
        pos = m.end()
    toks.append(("EOF", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0]

    def take(self, *expected: str) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        if tok[0] not in expected:
            what = repr(tok[1]) if tok[0] != "EOF" else "end of input"
            raise ParseError(f"unexpected {what}", tok[2], expected)
        self.i += 1
        return tok

    def parse(self) -> GroupExpr:
        e = self.product()
        kind, val, pos = self.toks[self.i]
        if kind != "EOF":
            raise ParseError(f"unexpected {val!r}", pos, ["x", "wr", "end of input"])
        return e

    def product(self) -> GroupExpr:
        e = self.wreath()
        while self.peek() == "x":
            self.i += 1
            e = Product(e, self.wreath())
        return e

    def wreath(self) -> GroupExpr:
        e = self.atom()
        while self.peek() == "wr":
            self.i += 1
            e = WreathNode(e, self.atom())
        return e

    def atom(self) -> GroupExpr:
        kind, val, pos = self.take("C", "Q8", "M27", "int", "(")
        if kind in ("Q8", "M27"):
            return Named(kind)
        if kind == "int":
            if val != "1":
                raise ParseError("only 1 (the trivial group) may stand alone", pos, ["C", "Q8", "M27", "1", "("])
            return Trivial()
        if kind == "(":
            e = self.product()
            self.take(")")
            return e
        if self.peek() == "int":
            return Cyclic(int(self.take("int")[1]))
        self.take("int", "(")
        p = int(self.take("int")[1])
        self.take("^")
        u = int(self.take("int")[1])
        self.take(")")
        card = None
        if self.peek() == "^":
            self.i += 1
            card = self.card()
        return PrimaryPower(p, u, card)

    def card(self) -> Cardinal:
        kind, val, pos = self.take("int", "aleph", "continuum")
        if kind == "continuum":
            return CONTINUUM
        if kind == "aleph":
            return aleph(int(self.take("int")[1]))
        if int(val) < 1:
            raise ParseError("multiplicity must be at least 1", pos, ["int", "aleph", "continuum"])
        return finite(int(val))


def parse(text: str) -> GroupExpr:
    return _Parser(text).parse()


def render(e: GroupExpr) -> str:
    if isinstance(e, Cyclic):
        return f"C{e.n}"
    if isinstance(e, PrimaryPower):
        s = f"C({e.p}^{e.u})"
        return s if e.card is None else f"{s}^{e.card}"
    if isinstance(e, Named):
        return e.name
    if isinstance(e, Trivial):
        return "1"
    if isinstance(e, Product):
        right = render(e.right)
        if isinstance(e.right, Product):
            right = f"({right})"
        return f"{render(e.left)} x {right}"
    left, right = render(e.left), render(e.right)
    if isinstance(e.left, Product):
        left = f"({left})"
    if isinstance(e.right, (Product, WreathNode)):
        right = f"({right})"
    return f"{left} wr {right}"


def is_symbolic_abelian(e: GroupExpr) -> bool:
    if isinstance(e, (Cyclic, PrimaryPower, Trivial)):
        return True
    if isinstance(e, Product):
        return is_symbolic_abelian(e.left) and is_symbolic_abelian(e.right)
    return False


def to_abelian(e: GroupExpr) -> AbelianFE:
    """Symbolic decomposition; handles infinite multiplicities."""
    if isinstance(e, Cyclic):
        if e.n < 1:
            raise WreathVarError("C0 is not a group")
        return abelian.from_integer(e.n)
    if isinstance(e, PrimaryPower):
        if e.u < 1:
            raise WreathVarError(f"C({e.p}^{e.u}): exponent power must be >= 1")
        return abelian.primary_power(e.p, e.u, e.card or finite(1))
    if isinstance(e, Trivial):
        return abelian.TRIVIAL
    if isinstance(e, Product):
        return abelian.direct_product(to_abelian(e.left), to_abelian(e.right))
    if isinstance(e, Named):
        raise NotAbelian(f"{e.name} is not abelian")
    raise NotAbelian(f"{render(e)} is not given as an abelian group of finite exponent")


def to_group(e: GroupExpr) -> groups.ConcreteGroup:
    """Concrete finite group; infinite multiplicities are rejected."""
    if isinstance(e, Cyclic):
        if e.n < 1:
            raise WreathVarError("C0 is not a group")
        return groups.cyclic(e.n)
    if isinstance(e, PrimaryPower):
        if not isprime(e.p):
            raise NotPrime(f"{e.p} is not prime")
        if e.u < 1:
            raise WreathVarError(f"C({e.p}^{e.u}): exponent power must be >= 1")
        card = e.card or finite(1)
        if not card.is_finite:
            raise NotFinite(f"{render(e)} has infinite multiplicity and cannot be built concretely")
        g = groups.cyclic(e.p ** e.u)
        for _ in range(card.value - 1):
            g = groups.direct(g, groups.cyclic(e.p ** e.u))
        g.label = render(e)
        return g
    if isinstance(e, Named):
        return groups.quaternion8() if e.name == "Q8" else groups.m27()
    if isinstance(e, Trivial):
        return groups.trivial()
    if isinstance(e, Product):
        return groups.direct(to_group(e.left), to_group(e.right))
    return groups.wreath(to_group(e.left), to_group(e.right))


def parse_abelian(text: str) -> AbelianFE:
    return to_abelian(parse(text))


def parse_group(text: str) -> groups.ConcreteGroup:
    return to_group(parse(text))
