import itertools

import pytest
from hypothesis import given, settings, strategies as st

from wreathvar.errors import BudgetExceeded, ParseError
from wreathvar.expr import parse_group
from wreathvar.groups import TableGroup, cyclic, dihedral, direct, quaternion8, subgroup, wreath
from wreathvar.laws import (Word, commutator_word, count_words, enumerate_words, free_reduce,
                            invariant_probe, is_law, is_law_naive, parse_word, power_word,
                            scan_discriminating)


def brute_words(r, L):
    alpha = [(v, s) for v in range(1, r + 1) for s in (1, -1)]
    out = []
    for length in range(1, L + 1):
        for letters in itertools.product(alpha, repeat=length):
            if all(a != (b[0], -b[1]) for a, b in zip(letters, letters[1:])):
                out.append(letters)
    return out


def test_enumerate_rank1():
    assert [str(w) for w in enumerate_words(1, 2)] == ["x1", "x1^-1", "x1^2", "x1^-2"]


@pytest.mark.parametrize("r, L", [(2, 1), (2, 2), (2, 4), (3, 3), (1, 6)])
def test_enumerate_matches_brute_force(r, L):
    words = [w.letters for w in enumerate_words(r, L)]
    assert words == brute_words(r, L)
    assert len(words) == sum(count_words(r, k) for k in range(1, L + 1))


def test_enumerate_counts():
    assert len(list(enumerate_words(2, 1))) == 4
    assert len(list(enumerate_words(2, 2))) == 4 + 12


def test_word_must_be_reduced():
    with pytest.raises(ValueError):
        Word(((1, 1), (1, -1)), 1)


@pytest.mark.parametrize("text, rendered", [
    ("x1^2 x2^-1 x1^-1", "x1^2 x2^-1 x1^-1"),
    ("x1 x1 x1", "x1^3"),
    ("x1 x2 x2^-1 x1^-1", "1"),
    ("x1^-1x2^-1x1x2", "x1^-1 x2^-1 x1 x2"),
])
def test_parse_word(text, rendered):
    w = parse_word(text)
    assert str(w) == rendered
    assert parse_word(str(w), w.rank) == w


def test_parse_word_errors():
    with pytest.raises(ParseError):
        parse_word("x1 y2")
    with pytest.raises(ParseError):
        parse_word("x3", rank=2)


def test_is_law_examples():
    assert is_law(wreath(cyclic(2), cyclic(2)), power_word(4))
    assert not is_law(wreath(cyclic(2), cyclic(4)), power_word(4))
    for g in (cyclic(6), direct(cyclic(2), cyclic(4))):
        assert is_law(g, commutator_word())
    assert not is_law(quaternion8(), commutator_word())


def test_c2_wr_c4_order8_witness():
    # (f, b) with b a generator of C4 and f of odd support has order 8
    g = wreath(cyclic(2), cyclic(4))
    x = g.encode([1, 0, 0, 0], 1)
    assert g.element_order(x) == 8


@pytest.mark.parametrize("expr", ["C2 wr C2", "Q8", "M27", "C2 wr C4", "C3 x C3"])
def test_power_laws(expr):
    g = parse_group(expr)
    assert is_law(g, power_word(g.exponent))
    for k in range(1, g.exponent):
        assert not is_law(g, power_word(k))


def test_budget():
    g = wreath(cyclic(2), cyclic(4))
    with pytest.raises(BudgetExceeded):
        is_law(g, commutator_word(), budget=100)
    with pytest.raises(BudgetExceeded):
        scan_discriminating(g, g, 2, 6, budget=10**5)


def test_scan_finds_fourth_power():
    rep = scan_discriminating(wreath(cyclic(2), cyclic(2)), wreath(cyclic(2), cyclic(4)), 1, 4)
    assert rep.discriminating_word == power_word(4)
    assert rep.law_of == 1
    assert rep.words_checked == 7


def test_scan_identical_groups():
    g = quaternion8()
    rep = scan_discriminating(g, g, 2, 4)
    assert not rep.found
    assert rep.words_checked == sum(count_words(2, k) for k in range(1, 5))
    assert "no discriminating law" in rep.describe()


def test_scan_finds_commutator_between_abelian_and_not():
    rep = scan_discriminating(direct(cyclic(2), cyclic(4)), dihedral(4), 2, 4)
    w = rep.discriminating_word
    assert w is not None
    assert is_law_naive(direct(cyclic(2), cyclic(4)), w) != is_law_naive(dihedral(4), w)


def test_scan_none_agrees_with_naive_evaluator():
    # a None must mean no word up to the bound separates the groups
    g1, g2 = wreath(cyclic(2), cyclic(2)), dihedral(4)
    assert not scan_discriminating(g1, g2, 2, 4).found
    for w in enumerate_words(2, 4):
        assert is_law_naive(g1, w) == is_law_naive(g2, w)


def test_scan_relabeling_invariance():
    # the same group with its elements permuted gives the same scan
    g = wreath(cyclic(2), cyclic(2))
    perm = [0, 5, 3, 7, 1, 6, 2, 4]
    inv = {p: i for i, p in enumerate(perm)}
    t = [[perm[g.mul(inv[x], inv[y])] for y in range(8)] for x in range(8)]
    h = TableGroup(t, [perm[x] for x in g.gens], "relabelled")
    other = wreath(cyclic(2), cyclic(4))
    a, b = scan_discriminating(g, other, 2, 4), scan_discriminating(h, other, 2, 4)
    assert (a.discriminating_word, a.law_of, a.words_checked) == (b.discriminating_word, b.law_of, b.words_checked)


def test_invariant_probe():
    w22, w24 = wreath(cyclic(2), cyclic(2)), wreath(cyclic(2), cyclic(4))
    assert ("exponent", 4, 8) in invariant_probe(w22, w24).mismatches
    assert ("exponent", 4, 9) in invariant_probe(quaternion8(), parse_group("M27")).mismatches
    assert not invariant_probe(w22, dihedral(4)).distinct


word_strategy = st.integers(1, 2).flatmap(
    lambda r: st.lists(st.tuples(st.integers(1, r), st.sampled_from([1, -1])), max_size=8)
    .map(lambda ls: Word(free_reduce(ls), r)))


@settings(max_examples=60)
@given(word_strategy, st.sampled_from(["Q8", "C2 wr C2", "C3 x C3", "M27"]))
def test_laws_pass_to_subgroups(w, expr):
    g = parse_group(expr)
    if is_law(g, w):
        for gens in ([g.gens[0]], [g.gens[-1]], list(g.gens)):
            assert is_law(subgroup(g, gens), w)


@settings(max_examples=60)
@given(word_strategy, st.sampled_from(["Q8", "C2 wr C2", "C6", "C2 wr C3"]))
def test_is_law_matches_naive(w, expr):
    g = parse_group(expr)
    assert is_law(g, w) == is_law_naive(g, w)
