"""Varieties generated by wreath products of nilpotent and abelian groups.

Symbolic decision procedure for equality of the varieties generated by two
wreath products ``A1 wr B1`` and ``A2 wr B2``, plus a concrete finite-group
engine and a brute-force law oracle to cross-check verdicts on small groups.
"""

__version__ = "0.1.0"

from .cardinals import ALEPH0, CONTINUUM, Cardinal, aleph, finite
from .abelian import (AbelianFE, PrimaryComponent, PrimaryFactor, direct_product,
                      equiv_component, equiv_group, exponent, from_integer, iso_finite,
                      normalize, primary_component)
from .groups import ConcreteGroup, cyclic, direct, m27, quaternion8, wreath
from .decider import NilpotentDescriptor, Verdict, decide, decide_finite
from .laws import Word, enumerate_words, invariant_probe, is_law, scan_discriminating
from .expr import parse, parse_abelian, parse_group, render
