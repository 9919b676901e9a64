"""Finite and symbolic infinite cardinals used as factor multiplicities.

Only the cardinals that actually show up in decompositions are modelled:
positive integers, the alephs and the continuum. Comparisons whose answer
depends on the continuum hypothesis (``aleph_k`` vs ``continuum`` for
``k >= 1``) raise :class:`IncomparableCardinals` instead of guessing.

>>> finite(3) + finite(4)
Cardinal(kind='finite', value=7)
>>> str(finite(5) + ALEPH0)
'aleph0'
>>> str(ALEPH0 + CONTINUUM)
'continuum'
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import IncomparableCardinals, WreathVarError

FINITE = "finite"
ALEPH = "aleph"
CONT = "continuum"


@dataclass(frozen=True)
class Cardinal:
    kind: str
    value: int = 0

    def __post_init__(self):
        if self.kind == FINITE:
            if not isinstance(self.value, int) or self.value < 1:
                raise ValueError(f"finite multiplicity must be a positive integer, got {self.value!r}")
        elif self.kind == ALEPH:
            if not isinstance(self.value, int) or self.value < 0:
                raise ValueError(f"aleph index must be a non-negative integer, got {self.value!r}")
        elif self.kind == CONT:
            if self.value != 0:
                raise ValueError("continuum carries no value")
        else:
            raise ValueError(f"unknown cardinal kind {self.kind!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    def __add__(self, other: Cardinal) -> Cardinal:
        return add(self, other)

    def __str__(self) -> str:
        if self.kind == FINITE:
            return str(self.value)
        if self.kind == ALEPH:
            return f"aleph{self.value}"
        return "continuum"


def finite(n: int) -> Cardinal:
    return Cardinal(FINITE, n)


def aleph(k: int) -> Cardinal:
    return Cardinal(ALEPH, k)


ALEPH0 = aleph(0)
CONTINUUM = Cardinal(CONT)


def is_finite(c: Cardinal) -> bool:
    return c.kind == FINITE


def compare(a: Cardinal, b: Cardinal) -> int:
    """Return -1, 0 or 1 as ``a`` is smaller, equal or larger than ``b``."""
    if a == b:
        return 0
    ka, kb = a.kind, b.kind
    if ka == FINITE and kb == FINITE:
        return -1 if a.value < b.value else 1
    if ka == FINITE:
        return -1
    if kb == FINITE:
        return 1
    if ka == ALEPH and kb == ALEPH:
        return -1 if a.value < b.value else 1
    # one aleph, one continuum: only aleph0 < continuum is decidable
    al = a if ka == ALEPH else b
    if al.value != 0:
        raise IncomparableCardinals(f"{a} and {b} are not comparable without the continuum hypothesis")
    return -1 if ka == ALEPH else 1


def add(a: Cardinal, b: Cardinal) -> Cardinal:
    if a.kind == FINITE and b.kind == FINITE:
        return finite(a.value + b.value)
    return a if compare(a, b) >= 0 else b


def eq(a: Cardinal, b: Cardinal) -> bool:
    return a == b


_CARD_RE = re.compile(r"\s*(?:(\d+)|aleph\s*(\d+)|(continuum))\s*\Z")


def parse_cardinal(text: str) -> Cardinal:
    m = _CARD_RE.match(text)
    if not m:
        raise WreathVarError(f"not a cardinal: {text!r}")
    if m.group(1) is not None:
        return finite(int(m.group(1)))
    if m.group(2) is not None:
        return aleph(int(m.group(2)))
    return CONTINUUM
