from math import lcm

import pytest
from hypothesis import assume, given, strategies as st

from wreathvar import fixtures
from wreathvar.abelian import (TRIVIAL, AbelianFE, PrimaryComponent, PrimaryFactor, direct_product,
                               equiv_component, equiv_group, exponent, from_integer, iso_finite,
                               normalize, primary_component)
from wreathvar.cardinals import ALEPH0, CONTINUUM, aleph, finite
from wreathvar.errors import IncomparableCardinals, NotFinite, NotPrime, PrimeMismatch
from wreathvar.expr import parse_abelian

from strategies import abelian_groups, all_cardinals, components, raw_triples


def comp(p, *pairs):
    return PrimaryComponent(p, tuple(PrimaryFactor(u, m if not isinstance(m, int) else finite(m)) for u, m in pairs))


def literal_equiv(x, y):
    """Direct transcription of the definition, with an explicit search for k."""
    if x.is_finite and y.is_finite:
        return x.factors == y.factors
    if x.is_finite or y.is_finite:
        return False
    for k in range(min(len(x.factors), len(y.factors))):
        head_ok = all(x.factors[i] == y.factors[i] and x.factors[i].multiplicity.is_finite for i in range(k))
        first_x = not x.factors[k].multiplicity.is_finite and all(f.multiplicity.is_finite for f in x.factors[:k])
        first_y = not y.factors[k].multiplicity.is_finite and all(f.multiplicity.is_finite for f in y.factors[:k])
        if head_ok and first_x and first_y and x.factors[k].exp_power == y.factors[k].exp_power:
            return True
    return False


# normalize

def test_normalize_merges_equal_exponents():
    assert normalize([(2, 1, finite(1)), (2, 1, finite(1))]) == AbelianFE((comp(2, (1, 2)),))


def test_normalize_infinite_absorbs():
    assert normalize([(3, 3, ALEPH0), (3, 3, finite(5))]) == AbelianFE((comp(3, (3, ALEPH0)),))


def test_normalize_sorts_descending():
    assert normalize([(3, 1, finite(4)), (3, 5, finite(6))]) == AbelianFE((comp(3, (5, 6), (1, 4)),))


def test_normalize_drops_zero_and_sorts_primes():
    b = normalize([(5, 1, 1), (2, 2, 0), (2, 1, 3)])
    assert b.primes == (2, 5)
    assert b.as_dict()[2] == comp(2, (1, 3))


def test_normalize_errors():
    with pytest.raises(NotPrime):
        normalize([(4, 1, 1)])
    with pytest.raises(IncomparableCardinals):
        normalize([(2, 1, aleph(1)), (2, 1, CONTINUUM)])


def test_component_invariants_enforced():
    with pytest.raises(Exception):
        comp(3, (1, 1), (2, 1))
    with pytest.raises(NotPrime):
        comp(9, (1, 1))
    with pytest.raises(Exception):
        PrimaryComponent(3, ())


# exponent

def test_exponent_example2_b1():
    b1 = parse_abelian(fixtures.EX2_B1)
    # independent: lcm of every cyclic factor order written in the group
    orders = [3**5, 3**4, 3**3, 3**2, 3, 5]
    assert exponent(b1) == lcm(*orders) == 1215


@pytest.mark.parametrize("b, n", [(TRIVIAL, 1), (direct_product(from_integer(4), from_integer(3)), 12)])
def test_exponent_small(b, n):
    assert exponent(b) == n


# primary_component

def test_primary_component():
    b1 = parse_abelian(fixtures.EX2_B1)
    assert primary_component(b1, 5) == comp(5, (1, 1))
    assert primary_component(b1, 7) is None
    first = parse_abelian(fixtures.EX1_FIRST)
    assert primary_component(first, 3) == comp(3, (5, 6), (4, 8), (3, ALEPH0), (2, 5), (1, 4))
    with pytest.raises(NotPrime):
        primary_component(b1, 6)


# equiv_component / equiv_group

def test_example1():
    first, same, other = fixtures.example1_components()
    assert equiv_component(first, same)
    assert not equiv_component(first, other)
    assert equiv_component(first, first)


def test_prime_mismatch():
    with pytest.raises(PrimeMismatch):
        equiv_component(comp(2, (1, 1)), comp(3, (1, 1)))


@pytest.mark.parametrize("x, y, expected", [
    (comp(2, (2, 1), (1, 1)), comp(2, (2, 1), (1, 1)), True),
    (comp(2, (2, 1), (1, 1)), comp(2, (2, 1), (1, 2)), False),
    (comp(2, (2, 1)), comp(2, (2, ALEPH0)), False),
    (comp(2, (2, ALEPH0), (1, 3)), comp(2, (2, CONTINUUM)), True),
    (comp(2, (3, 1), (2, ALEPH0)), comp(2, (3, 2), (2, ALEPH0)), False),
    (comp(2, (3, 1), (2, ALEPH0)), comp(2, (3, 1), (1, ALEPH0)), False),
    (comp(2, (3, 1), (2, ALEPH0)), comp(2, (3, 1), (2, 4), (1, ALEPH0)), False),
    (comp(2, (3, ALEPH0)), comp(2, (3, aleph(2)), (2, 1)), True),
])
def test_equiv_component_cases(x, y, expected):
    assert equiv_component(x, y) is expected
    assert literal_equiv(x, y) is expected


def test_example2_groups():
    bs = fixtures.example2_passives()
    assert equiv_group(bs["B1"], bs["B2"])
    assert not equiv_group(bs["B1"], bs["B2_extra_C5"])
    assert not equiv_group(bs["B1"], bs["B2_wrong_exponent"])
    assert equiv_group(TRIVIAL, TRIVIAL)


def test_support_mismatch_not_equivalent():
    assert not equiv_group(from_integer(6), from_integer(2))


# iso_finite

@pytest.mark.parametrize("a, b, expected", [
    ("C2 x C4", "C4 x C2", True),
    ("C4", "C2 x C2", False),
    ("C5", "C5 x C5", False),
    ("C6", "C2 x C3", True),
])
def test_iso_finite(a, b, expected):
    assert iso_finite(parse_abelian(a), parse_abelian(b)) is expected


def test_iso_finite_rejects_infinite():
    with pytest.raises(NotFinite):
        iso_finite(parse_abelian("C(2^1)^aleph0"), from_integer(2))


# constructors

def test_from_integer():
    assert from_integer(12) == AbelianFE((comp(2, (2, 1)), comp(3, (1, 1))))
    assert from_integer(1) == TRIVIAL
    assert from_integer(27) == AbelianFE((comp(3, (3, 1)),))


def test_direct_product_examples():
    assert direct_product(from_integer(2), from_integer(2)) == AbelianFE((comp(2, (1, 2)),))
    ex1 = parse_abelian(fixtures.EX1_FIRST)
    assert direct_product(ex1, from_integer(5)) == parse_abelian(fixtures.EX2_B1)
    assert direct_product(ex1, TRIVIAL) == ex1


def test_render():
    assert str(parse_abelian("C(3^5)^6 x C(3^4)^8 x C(3^3)^aleph0")) == "C(3^5)^6 x C(3^4)^8 x C(3^3)^aleph0"
    assert str(parse_abelian("C3 x C3 x C5")) == "C(3^1)^2 x C5"
    assert str(TRIVIAL) == "1"


# properties

@given(raw_triples)
def test_normalize_idempotent(raw):
    b = normalize(raw)
    assert normalize(b.raw()) == b
    assert parse_abelian(str(b)) == b


@given(st.sampled_from([2, 3]).flatmap(lambda p: st.tuples(components(p), components(p), components(p))))
def test_equiv_component_is_equivalence(xyz):
    x, y, z = xyz
    assert equiv_component(x, x)
    assert equiv_component(x, y) == equiv_component(y, x)
    if equiv_component(x, y) and equiv_component(y, z):
        assert equiv_component(x, z)


@given(st.data())
def test_equiv_component_matches_literal_definition(data):
    x = data.draw(components(prime=2, cards=all_cardinals))
    y = data.draw(components(prime=2, cards=all_cardinals))
    assert equiv_component(x, y) == literal_equiv(x, y)


@given(abelian_groups(finite_only=True), abelian_groups(finite_only=True))
def test_finite_equiv_is_iso(b1, b2):
    assert equiv_group(b1, b2) == iso_finite(b1, b2)


@given(abelian_groups(), abelian_groups())
def test_equiv_implies_equal_exponent(b1, b2):
    if equiv_group(b1, b2):
        assert exponent(b1) == exponent(b2)


@given(abelian_groups(), abelian_groups(), abelian_groups())
def test_direct_product_laws(a, b, c):
    assert direct_product(a, b) == direct_product(b, a)
    assert direct_product(direct_product(a, b), c) == direct_product(a, direct_product(b, c))
    assert direct_product(a, TRIVIAL) == a


@given(components(), st.sampled_from([ALEPH0, CONTINUUM, aleph(1), aleph(5)]))
def test_swapping_infinite_multiplicity_keeps_equivalence(x, card):
    k = x.first_infinite()
    assume(k is not None)
    factors = list(x.factors)
    factors[k] = PrimaryFactor(factors[k].exp_power, card)
    y = PrimaryComponent(x.prime, tuple(factors))
    assert equiv_component(x, y)
    for other in (x, y):
        assert equiv_group(AbelianFE((x,)), AbelianFE((other,)))
