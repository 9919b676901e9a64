"""Worked examples used by the self-test, the acceptance suite and the scripts."""
from __future__ import annotations

from .decider import NilpotentDescriptor
from .expr import parse_abelian, parse_group

# 3-primary groups compared in the first worked example
EX1_FIRST = "C(3^5)^6 x C(3^4)^8 x C(3^3)^aleph0 x C(3^2)^5 x C(3^1)^4"
EX1_EQUIVALENT = "C(3^5)^6 x C(3^4)^8 x C(3^3)^continuum x C(3^1)^50"
EX1_NOT_EQUIVALENT = "C(3^5)^6 x C(3^4)^8 x C(3^2)^aleph0 x C(3^1)^4"

EX2_A1 = "Q8 x M27 x C25"
# Q8 x Q8 x M27^aleph0 x C25 x C5 x C5 is infinite; only its exponent and class enter
EX2_A2_EXPONENT = 900
EX2_A2_CLASS = 2
EX2_B1 = EX1_FIRST + " x C5"
EX2_B2 = EX1_EQUIVALENT + " x C5"
EX2_B2_WRONG_EXPONENT = EX1_NOT_EQUIVALENT + " x C5"
EX2_B2_EXTRA_C5 = EX2_B2 + " x C5"


def example1_components():
    """The three 3-components: first, an equivalent one, a non-equivalent one."""
    return tuple(parse_abelian(s).as_dict()[3] for s in (EX1_FIRST, EX1_EQUIVALENT, EX1_NOT_EQUIVALENT))


def example2_actives():
    a1 = NilpotentDescriptor.concrete(parse_group(EX2_A1))
    a2 = NilpotentDescriptor.abstract(EX2_A2_EXPONENT, EX2_A2_CLASS,
                                      "Q8 x Q8 x M27^aleph0 x C25 x C5 x C5")
    return a1, a2


def example2_passives():
    return {name: parse_abelian(s) for name, s in [
        ("B1", EX2_B1), ("B2", EX2_B2),
        ("B2_wrong_exponent", EX2_B2_WRONG_EXPONENT), ("B2_extra_C5", EX2_B2_EXTRA_C5)]}
