"""Group laws: reduced words in a free group and exhaustive law checking.

A word is a law of a finite group when it evaluates to the identity under
every substitution of group elements for its variables. Two groups with a
word that is a law of exactly one of them generate different varieties.
The converse does not hold for bounded scans, so a scan that finds nothing
only reports that no discriminating law exists within its bounds.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .errors import BudgetExceeded, ParseError
from .groups import ConcreteGroup

DEFAULT_BUDGET = 10**8

Letter = tuple[int, int]


@dataclass(frozen=True)
class Word:
    """Reduced word; ``letters`` are ``(variable, sign)`` pairs, variables 1-based."""

    letters: tuple[Letter, ...]
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        for v, s in self.letters:
            if not 1 <= v <= self.rank or s not in (1, -1):
                raise ValueError(f"bad letter {(v, s)} for rank {self.rank}")
        for (v, s), (w, t) in zip(self.letters, self.letters[1:]):
            if v == w and s == -t:
                raise ValueError(f"word is not reduced: {self.letters}")

    def __len__(self):
        return len(self.letters)

    def syllables(self) -> list[tuple[int, int]]:
        """Maximal runs of one variable as ``(variable, exponent)``."""
        out: list[tuple[int, int]] = []
        for v, s in self.letters:
            if out and out[-1][0] == v:
                out[-1] = (v, out[-1][1] + s)
            else:
                out.append((v, s))
        return out

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in self.syllables())


def power_word(k: int, rank: int = 1) -> Word:
    return Word(((1, 1 if k > 0 else -1),) * abs(k), rank)


def commutator_word() -> Word:
    """``x1^-1 x2^-1 x1 x2``."""
    return Word(((1, -1), (2, -1), (1, 1), (2, 1)), 2)


def free_reduce(letters) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for v, s in letters:
        if out and out[-1] == (v, -s):
            out.pop()
        else:
            out.append((v, s))
    return tuple(out)


_SYLLABLE = re.compile(r"\s*x(\d+)(?:\s*\^\s*(-?\d+))?")


def parse_word(text: str, rank: Optional[int] = None) -> Word:
    """Parse ``x1^2 x2^-1 x1^-1`` (also ``1`` for the empty word) and freely reduce it."""
    letters: list[Letter] = []
    pos = 0
    if text.strip() == "1":
        return Word((), rank or 1)
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _SYLLABLE.match(text, pos)
        if not m:
            raise ParseError("expected a syllable like x1 or x2^-3", pos, ["x<n>"])
        v = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if v < 1:
            raise ParseError("variables are numbered from 1", m.start(1), ["x<n>"])
        letters.extend([(v, 1 if e > 0 else -1)] * abs(e))
        pos = m.end()
    top = max((v for v, _ in letters), default=1)
    if rank is None:
        rank = top
    elif top > rank:
        raise ParseError(f"variable x{top} exceeds rank {rank}", 0, [])
    return Word(free_reduce(letters), rank)


def _alphabet(r: int) -> list[Letter]:
    # x1 < x1^-1 < x2 < x2^-1 < ...
    return [(v, s) for v in range(1, r + 1) for s in (1, -1)]


def count_words(r: int, length: int) -> int:
    """Number of reduced words of exactly ``length`` letters in rank ``r``."""
    return 2 * r * (2 * r - 1) ** (length - 1)


def _words_of_length(r: int, length: int) -> Iterator[tuple[Letter, ...]]:
    alpha = _alphabet(r)

    def extend(prefix):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for v, s in alpha:
            if prefix and prefix[-1] == (v, -s):
                continue
            prefix.append((v, s))
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


def enumerate_words(r: int, L: int) -> Iterator[Word]:
    """All reduced words of length 1..L, by length and then lexicographically."""
    if r < 1 or L < 1:
        raise ValueError("rank and length bound must be positive")
    for length in range(1, L + 1):
        for letters in _words_of_length(r, length):
            yield Word(letters, r)


class _Assignments:
    """All ``|g|**r`` substitutions of ``g`` for ``x1..xr``, as parallel index arrays."""

    def __init__(self, g: ConcreteGroup, r: int, budget: int):
        n = g.order
        if n ** r > budget:
            raise BudgetExceeded(f"{n}^{r} assignments exceed budget {budget}")
        self.g = g
        self.table = g.table
        self.inverses = g.inverses
        self.grid = np.indices((n,) * r).reshape(r, -1)
        self.size = self.grid.shape[1]
        self._letters = {}
        for v in range(1, r + 1):
            col = self.grid[v - 1]
            self._letters[(v, 1)] = col
            self._letters[(v, -1)] = self.inverses[col]
        self._powers: dict[int, np.ndarray] = {1: np.arange(n), -1: self.inverses}

    def letter(self, letter: Letter) -> np.ndarray:
        return self._letters[letter]

    def power_map(self, k: int) -> np.ndarray:
        """``x -> x**k`` on all elements, memoized by ``k``."""
        if k not in self._powers:
            if k == 0:
                self._powers[0] = np.zeros(self.g.order, dtype=np.int64)
            elif k < 0:
                self._powers[k] = self.inverses[self.power_map(-k)]
            else:
                half = self.power_map(k // 2)
                sq = self.table[half, half]
                self._powers[k] = self.table[sq, np.arange(self.g.order)] if k % 2 else sq
        return self._powers[k]

    def evaluate(self, w: Word) -> np.ndarray:
        vals = np.zeros(self.size, dtype=np.int64)
        for v, e in w.syllables():
            vals = self.table[vals, self.power_map(e)[self.grid[v - 1]]]
        return vals


def is_law(g: ConcreteGroup, w: Word, budget: int = DEFAULT_BUDGET) -> bool:
    """Exhaustively decide whether ``w`` is a law of ``g``."""
    return not _Assignments(g, w.rank, budget).evaluate(w).any()


def is_law_naive(g: ConcreteGroup, w: Word) -> bool:
    """Independent reference evaluator: scalar loops, no caching or vectorization."""
    for assignment in itertools.product(range(g.order), repeat=w.rank):
        value = g.identity
        for v, s in w.letters:
            x = assignment[v - 1]
            value = g.mul(value, x if s == 1 else g.inv(x))
        if value != g.identity:
            return False
    return True


@dataclass
class ScanReport:
    discriminating_word: Optional[Word]
    words_checked: int
    bounds: tuple[int, int]
    law_of: Optional[int] = None  # 1 or 2: which group satisfies the word

    @property
    def found(self) -> bool:
        return self.discriminating_word is not None

    def describe(self) -> str:
        r, L = self.bounds
        if self.discriminating_word is None:
            return f"no discriminating law within rank {r}, length {L} ({self.words_checked} words checked)"
        return (f"{self.discriminating_word} is a law of group {self.law_of} only "
                f"({self.words_checked} words checked)")


def scan_discriminating(g1: ConcreteGroup, g2: ConcreteGroup, r: int, L: int,
                        budget: int = DEFAULT_BUDGET) -> ScanReport:
    """Find the first word (by length, then lexicographically) that is a law of exactly one group."""
    total = sum(count_words(r, k) for k in range(1, L + 1)) * (g1.order ** r + g2.order ** r)
    if total > budget:
        raise BudgetExceeded(f"scan needs {total} word evaluations, budget is {budget}")
    ev1 = _Assignments(g1, r, budget)
    ev2 = _Assignments(g2, r, budget)
    alpha = _alphabet(r)
    checked = 0

    def search(prefix, v1, v2, length):
        nonlocal checked
        if len(prefix) == length:
            checked += 1
            l1, l2 = not v1.any(), not v2.any()
            return tuple(prefix) if l1 != l2 else None
        for letter in alpha:
            if prefix and prefix[-1] == (letter[0], -letter[1]):
                continue
            prefix.append(letter)
            hit = search(prefix, ev1.table[v1, ev1.letter(letter)], ev2.table[v2, ev2.letter(letter)], length)
            prefix.pop()
            if hit is not None:
                return hit
        return None

    for length in range(1, L + 1):
        hit = search([], np.zeros(ev1.size, dtype=np.int64), np.zeros(ev2.size, dtype=np.int64), length)
        if hit is not None:
            w = Word(hit, r)
            # re-check through the syllable evaluator before reporting
            l1, l2 = not ev1.evaluate(w).any(), not ev2.evaluate(w).any()
            if l1 == l2:
                raise AssertionError(f"evaluators disagree on {w}")
            return ScanReport(w, checked, (r, L), 1 if l1 else 2)
    return ScanReport(None, checked, (r, L))


@dataclass
class ProbeReport:
    """Comparison of law-determined invariants; any mismatch certifies distinct varieties."""

    values: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)

    @property
    def distinct(self) -> bool:
        return bool(self.mismatches)

    def describe(self) -> str:
        if not self.mismatches:
            return "no mismatch in exponent, nilpotency class, derived length"
        return "; ".join(f"{name} mismatch {a} vs {b}" for name, a, b in self.mismatches)


def invariant_probe(g1: ConcreteGroup, g2: ConcreteGroup) -> ProbeReport:
    report = ProbeReport()
    for name in ("exponent", "nilpotency_class", "derived_length"):
        a, b = getattr(g1, name), getattr(g2, name)
        report.values[name] = (a, b)
        if a != b:
            report.mismatches.append((name, a, b))
    return report
