"""Decide whether ``A1 wr B1`` and ``A2 wr B2`` generate the same variety.

The active groups ``A1, A2`` are nilpotent of a common exponent ``m``
generating the same variety; the passive groups ``B1, B2`` are abelian of
a common exponent ``n`` whose primes all divide ``m``. Under these
hypotheses the two wreath products generate the same variety exactly when
``B1(p)`` and ``B2(p)`` are equivalent at every prime ``p`` (see
:func:`wreathvar.abelian.component_mismatch`).

Equality of ``var(A1)`` and ``var(A2)`` cannot be decided in general, so
callers assert it. When both A's are concrete finite groups the assertion
is additionally probed with law-determined invariants and a bounded law
scan; a failed probe refuses the assertion.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from sympy import primefactors

from .abelian import AbelianFE, exponent, group_mismatch, iso_finite
from .errors import BudgetExceeded, CapExceeded, NotFinite, WreathVarError
from .groups import ConcreteGroup
from .laws import invariant_probe, scan_discriminating

EQUAL = "Equal"
NOT_EQUAL = "NotEqual"
VIOLATION = "PreconditionViolation"

# bounds for the law scan run on two concrete active groups
PROBE_RANK = 2
PROBE_LENGTH = 4
PROBE_BUDGET = 10**7


@dataclass(frozen=True)
class NilpotentDescriptor:
    """Active group: a concrete finite nilpotent group, or an asserted abstract one.

    For an abstract descriptor ``nilpotency_class`` is the caller's claim and
    may be None when unknown.
    """

    exponent_m: int
    group: Optional[ConcreteGroup] = None
    nilpotency_class: Optional[int] = None
    label: str = ""

    def __post_init__(self):
        if self.exponent_m < 2:
            raise WreathVarError(f"active group must be non-trivial, got exponent {self.exponent_m}")
        g = self.group
        if g is not None:
            if g.exponent != self.exponent_m:
                raise WreathVarError(f"{g.label} has exponent {g.exponent}, not {self.exponent_m}")
            if g.nilpotency_class is None:
                raise WreathVarError(f"{g.label} is not nilpotent")
            if self.nilpotency_class is not None and self.nilpotency_class != g.nilpotency_class:
                raise WreathVarError(f"{g.label} has class {g.nilpotency_class}, not {self.nilpotency_class}")
            object.__setattr__(self, "nilpotency_class", g.nilpotency_class)
            if not self.label:
                object.__setattr__(self, "label", g.label)
        elif self.nilpotency_class is not None and self.nilpotency_class < 1:
            raise WreathVarError("asserted nilpotency class must be positive")

    @classmethod
    def concrete(cls, g: ConcreteGroup) -> NilpotentDescriptor:
        return cls(g.exponent, g)

    @classmethod
    def abstract(cls, exponent_m: int, nilpotency_class: Optional[int] = None, label: str = "") -> NilpotentDescriptor:
        return cls(exponent_m, None, nilpotency_class, label or f"<abstract, exponent {exponent_m}>")

    @property
    def is_concrete(self) -> bool:
        return self.group is not None

    def describe(self) -> dict:
        return {"label": self.label, "exponent": self.exponent_m,
                "nilpotency_class": self.nilpotency_class,
                "source": "concrete" if self.is_concrete else "abstract"}


@dataclass
class Verdict:
    outcome: str
    witness: Optional[int] = None
    explanation: str = ""
    inputs: dict = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return self.outcome == EQUAL

    def to_record(self) -> dict:
        return {"verdict": self.outcome, "witness": self.witness,
                "explanation": self.explanation, "inputs": self.inputs}

    def __str__(self):
        if self.outcome == NOT_EQUAL:
            return f"NotEqual(p={self.witness})"
        if self.outcome == VIOLATION:
            return f"PreconditionViolation({self.explanation})"
        return self.outcome


def _probe_active(a1: ConcreteGroup, a2: ConcreteGroup) -> Optional[str]:
    probe = invariant_probe(a1, a2)
    if probe.distinct:
        return f"var(A1) != var(A2): {probe.describe()}"
    try:
        scan = scan_discriminating(a1, a2, PROBE_RANK, PROBE_LENGTH, budget=PROBE_BUDGET)
    except (BudgetExceeded, CapExceeded):
        return None
    if scan.found:
        return f"var(A1) != var(A2): {scan.describe()}"
    return None


def check_preconditions(a1: NilpotentDescriptor, a2: NilpotentDescriptor,
                        b1: AbelianFE, b2: AbelianFE, var_a_equal: bool) -> Optional[str]:
    """Return None if the hypotheses hold, else the first failing clause."""
    if a1.exponent_m != a2.exponent_m:
        return f"exponents of A differ: {a1.exponent_m} vs {a2.exponent_m}"
    if b1.is_trivial or b2.is_trivial:
        return "B1 and B2 must be non-trivial"
    n1, n2 = exponent(b1), exponent(b2)
    if n1 != n2:
        return f"exponents of B differ: {n1} vs {n2}"
    m = a1.exponent_m
    for p in primefactors(n1):
        if m % p:
            return f"prime {p} divides n={n1} but not m={m}"
    if (a1.nilpotency_class is not None and a2.nilpotency_class is not None
            and a1.nilpotency_class != a2.nilpotency_class):
        return f"nilpotency classes of A differ: {a1.nilpotency_class} vs {a2.nilpotency_class}"
    if a1.is_concrete and a2.is_concrete:
        return _probe_active(a1.group, a2.group)
    if not var_a_equal:
        return "var(A1) = var(A2) must be asserted when an active group is abstract"
    return None


def _inputs(a1, a2, b1, b2) -> dict:
    return {"a1": a1.describe(), "a2": a2.describe(), "b1": str(b1), "b2": str(b2)}


def decide(a1: NilpotentDescriptor, a2: NilpotentDescriptor, b1: AbelianFE, b2: AbelianFE,
           var_a_equal: bool = False) -> Verdict:
    inputs = _inputs(a1, a2, b1, b2)
    why = check_preconditions(a1, a2, b1, b2, var_a_equal)
    if why is not None:
        return Verdict(VIOLATION, None, why, inputs)
    miss = group_mismatch(b1, b2)
    if miss is None:
        return Verdict(EQUAL, None, "B1(p) and B2(p) are equivalent at every prime p", inputs)
    p, reason = miss
    return Verdict(NOT_EQUAL, p, f"B1({p}) and B2({p}) are not equivalent: {reason}", inputs)


def decide_finite(a1: NilpotentDescriptor, a2: NilpotentDescriptor, b1: AbelianFE, b2: AbelianFE,
                  var_a_equal: bool = False) -> Verdict:
    """Finite passive groups: equality of varieties reduces to ``B1 = B2`` up to isomorphism."""
    if not (b1.is_finite and b2.is_finite):
        raise NotFinite("decide_finite needs finite B1, B2")
    inputs = _inputs(a1, a2, b1, b2)
    why = check_preconditions(a1, a2, b1, b2, var_a_equal)
    if why is not None:
        return Verdict(VIOLATION, None, why, inputs)
    if iso_finite(b1, b2):
        return Verdict(EQUAL, None, "B1 and B2 are isomorphic", inputs)
    d1, d2 = b1.as_dict(), b2.as_dict()
    p = min(q for q in set(d1) | set(d2) if d1.get(q) != d2.get(q))
    return Verdict(NOT_EQUAL, p, f"B1 and B2 are not isomorphic: their {p}-components differ", inputs)
