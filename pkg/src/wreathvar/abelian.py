"""Abelian groups of finite exponent as products of cyclic p-groups.

An abelian group of finite exponent is stored prime by prime. Each primary
component is a list of factors ``C(p^u)^m`` with strictly decreasing ``u``
and a (possibly infinite) multiplicity ``m``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import prod
from typing import Iterable, Optional, Union

from sympy import factorint, isprime

from .cardinals import Cardinal, add, finite
from .errors import NotFinite, NotPrime, PrimeMismatch, WreathVarError

Multiplicity = Union[Cardinal, int]


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or not isprime(p):
        raise NotPrime(f"{p} is not prime")


@dataclass(frozen=True)
class PrimaryFactor:
    exp_power: int
    multiplicity: Cardinal

    def __post_init__(self):
        if not isinstance(self.exp_power, int) or self.exp_power < 1:
            raise WreathVarError(f"exponent power must be >= 1, got {self.exp_power!r}")


@dataclass(frozen=True)
class PrimaryComponent:
    prime: int
    factors: tuple[PrimaryFactor, ...]

    def __post_init__(self):
        _check_prime(self.prime)
        if not self.factors:
            raise WreathVarError("a primary component needs at least one factor")
        us = [f.exp_power for f in self.factors]
        if any(a <= b for a, b in zip(us, us[1:])):
            raise WreathVarError(f"factor exponents must be strictly decreasing, got {us}")

    @property
    def is_finite(self) -> bool:
        return all(f.multiplicity.is_finite for f in self.factors)

    def first_infinite(self) -> Optional[int]:
        """Index of the first factor with infinite multiplicity, if any."""
        for i, f in enumerate(self.factors):
            if not f.multiplicity.is_finite:
                return i
        return None

    @property
    def exponent(self) -> int:
        return self.prime ** self.factors[0].exp_power

    def __str__(self) -> str:
        return " x ".join(_render_factor(self.prime, f) for f in self.factors)


def _render_factor(p: int, f: PrimaryFactor) -> str:
    base = f"C{p}" if f.exp_power == 1 else f"C({p}^{f.exp_power})"
    m = f.multiplicity
    if m.is_finite and m.value == 1:
        return base
    if f.exp_power == 1:
        # C3^4 would not parse back as intended
        base = f"C({p}^1)"
    return f"{base}^{m}"


@dataclass(frozen=True)
class AbelianFE:
    """Abelian group of finite exponent; ``components`` sorted by prime."""

    components: tuple[PrimaryComponent, ...] = ()

    def __post_init__(self):
        ps = [c.prime for c in self.components]
        if ps != sorted(set(ps)):
            raise WreathVarError("components must have distinct primes in increasing order")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(c.prime for c in self.components)

    @property
    def is_trivial(self) -> bool:
        return not self.components

    @property
    def is_finite(self) -> bool:
        return all(c.is_finite for c in self.components)

    def as_dict(self) -> dict[int, PrimaryComponent]:
        return {c.prime: c for c in self.components}

    def raw(self) -> list[tuple[int, int, Cardinal]]:
        return [(c.prime, f.exp_power, f.multiplicity) for c in self.components for f in c.factors]

    def order(self) -> int:
        if not self.is_finite:
            raise NotFinite(f"{self} has infinite order")
        return prod(c.prime ** (f.exp_power * f.multiplicity.value) for c in self.components for f in c.factors)

    def __str__(self) -> str:
        if not self.components:
            return "1"
        return " x ".join(str(c) for c in self.components)


TRIVIAL = AbelianFE()


def normalize(raw: Iterable[tuple[int, int, Multiplicity]]) -> AbelianFE:
    """Group raw ``(prime, exp_power, multiplicity)`` triples into an :class:`AbelianFE`.

    Equal exponents at the same prime are merged by cardinal addition;
    multiplicity 0 entries are dropped.
    """
    merged: dict[int, dict[int, Cardinal]] = defaultdict(dict)
    for p, u, m in raw:
        _check_prime(p)
        if isinstance(m, int):
            if m == 0:
                continue
            m = finite(m)
        if not isinstance(u, int) or u < 1:
            raise WreathVarError(f"exponent power must be >= 1, got {u!r}")
        slot = merged[p]
        slot[u] = add(slot[u], m) if u in slot else m
    comps = []
    for p in sorted(merged):
        factors = tuple(PrimaryFactor(u, merged[p][u]) for u in sorted(merged[p], reverse=True))
        comps.append(PrimaryComponent(p, factors))
    return AbelianFE(tuple(comps))


def exponent(b: AbelianFE) -> int:
    return prod(c.exponent for c in b.components)


def primary_component(b: AbelianFE, p: int) -> Optional[PrimaryComponent]:
    """The p-primary component of ``b``, or None when it is trivial."""
    _check_prime(p)
    return b.as_dict().get(p)


def from_integer(n: int) -> AbelianFE:
    """Decomposition of the cyclic group of order ``n``."""
    if not isinstance(n, int) or n < 1:
        raise WreathVarError(f"cyclic order must be a positive integer, got {n!r}")
    return normalize((p, u, 1) for p, u in factorint(n).items())


def primary_power(p: int, u: int, m: Multiplicity = 1) -> AbelianFE:
    """``C(p^u)^m`` as a one-factor group."""
    return normalize([(p, u, m)])


def direct_product(b1: AbelianFE, b2: AbelianFE) -> AbelianFE:
    return normalize(b1.raw() + b2.raw())


def component_mismatch(x: PrimaryComponent, y: PrimaryComponent) -> Optional[str]:
    """Explain why ``x`` and ``y`` are not equivalent, or return None if they are.

    Finite components are equivalent exactly when their decompositions agree.
    Infinite ones are equivalent when the factors before the first infinite
    factor agree and the first infinite factors have the same exponent;
    whatever follows is ignored. A finite component is never equivalent to
    an infinite one.
    """
    if x.prime != y.prime:
        raise PrimeMismatch(f"components at different primes {x.prime} and {y.prime}")
    p = x.prime
    kx, ky = x.first_infinite(), y.first_infinite()
    if (kx is None) != (ky is None):
        fin = "first" if kx is None else "second"
        return f"the {fin} component is finite and the other is infinite"
    if kx is None:
        for i, (fx, fy) in enumerate(zip(x.factors, y.factors)):
            if fx != fy:
                return f"factor {i + 1} differs: {_render_factor(p, fx)} vs {_render_factor(p, fy)}"
        if len(x.factors) != len(y.factors):
            i = min(len(x.factors), len(y.factors))
            extra = x.factors[i] if len(x.factors) > i else y.factors[i]
            return f"factor {i + 1} present on one side only: {_render_factor(p, extra)}"
        return None
    for i in range(min(kx, ky)):
        fx, fy = x.factors[i], y.factors[i]
        if fx != fy:
            return f"factor {i + 1} differs: {_render_factor(p, fx)} vs {_render_factor(p, fy)}"
    if kx != ky:
        i = min(kx, ky)
        return (f"factor {i + 1} differs: {_render_factor(p, x.factors[i])} vs "
                f"{_render_factor(p, y.factors[i])}")
    ux, uy = x.factors[kx].exp_power, y.factors[ky].exp_power
    if ux != uy:
        return f"exponent of first infinite factor: {p}^{ux} vs {p}^{uy}"
    return None


def equiv_component(x: PrimaryComponent, y: PrimaryComponent) -> bool:
    return component_mismatch(x, y) is None


def group_mismatch(b1: AbelianFE, b2: AbelianFE) -> Optional[tuple[int, str]]:
    """Least prime at which ``b1`` and ``b2`` fail to be equivalent, with a reason."""
    d1, d2 = b1.as_dict(), b2.as_dict()
    for p in sorted(set(d1) | set(d2)):
        if p not in d1 or p not in d2:
            side = "first" if p not in d1 else "second"
            return p, f"the {p}-component of the {side} group is trivial, the other is not"
        why = component_mismatch(d1[p], d2[p])
        if why is not None:
            return p, why
    return None


def equiv_group(b1: AbelianFE, b2: AbelianFE) -> bool:
    return group_mismatch(b1, b2) is None


def iso_finite(b1: AbelianFE, b2: AbelianFE) -> bool:
    for b in (b1, b2):
        if not b.is_finite:
            raise NotFinite(f"{b} has an infinite multiplicity")
    return b1 == b2
