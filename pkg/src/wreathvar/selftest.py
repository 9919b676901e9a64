"""Golden checks on the worked examples and the wreath engine, runnable from the CLI."""
from __future__ import annotations

import time
from typing import Callable

from . import fixtures
from .abelian import equiv_component
from .decider import EQUAL, NOT_EQUAL, decide
from .expr import parse_group
from .laws import invariant_probe, power_word, scan_discriminating

AXIOM_FIXTURES = [
    "C2 wr C2", "C2 wr C4", "(C2 x C2) wr C2", "Q8", "M27", "Q8 x C25",
    "C3 wr C3", "Q8 wr C2", "C2 wr (C2 x C2)", "C2 wr C2 x C2 wr C4",
]


def _best_time(fn: Callable, repeat: int = 200) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def check_example1() -> tuple[bool, str]:
    first, same, other = fixtures.example1_components()
    ok = equiv_component(first, same) and not equiv_component(first, other)
    elapsed = _best_time(lambda: (equiv_component(first, same), equiv_component(first, other)))
    return ok and elapsed < 1e-3, f"verdicts {'match' if ok else 'WRONG'}, {elapsed * 1e6:.0f} us"


def check_example2() -> tuple[bool, str]:
    a1, a2 = fixtures.example2_actives()
    bs = fixtures.example2_passives()
    runs = {
        "B2": (bs["B2"], EQUAL, None),
        "B2_wrong_exponent": (bs["B2_wrong_exponent"], NOT_EQUAL, 3),
        "B2_extra_C5": (bs["B2_extra_C5"], NOT_EQUAL, 5),
    }
    ok = True
    worst = 0.0
    for b2, outcome, witness in runs.values():
        v = decide(a1, a2, bs["B1"], b2, var_a_equal=True)
        ok &= v.outcome == outcome and v.witness == witness
        worst = max(worst, _best_time(lambda: decide(a1, a2, bs["B1"], b2, var_a_equal=True)))
    return ok and worst < 1e-3, f"verdicts {'match' if ok else 'WRONG'}, slowest {worst * 1e6:.0f} us"


def check_wreath_engine() -> tuple[bool, str]:
    t = time.perf_counter()
    w22 = parse_group("C2 wr C2").invariants()
    w24 = parse_group("C2 wr C4").invariants()
    ok = (w22.order, w22.exponent, w22.nilpotency_class, w22.derived_length) == (8, 4, 2, 2)
    ok &= (w24.order, w24.exponent) == (64, 8)
    for text in AXIOM_FIXTURES:
        g = parse_group(text)
        if g.order <= 512:
            g.check_axioms()
    elapsed = time.perf_counter() - t
    return ok and elapsed < 10, f"invariants {'match' if ok else 'WRONG'}, {elapsed:.2f} s"


def check_oracle_inequality() -> tuple[bool, str]:
    t = time.perf_counter()
    g1, g2 = parse_group("C2 wr C2"), parse_group("C2 wr C4")
    probe = invariant_probe(g1, g2)
    scan = scan_discriminating(g1, g2, 1, 4)
    elapsed = time.perf_counter() - t
    ok = ("exponent", 4, 8) in probe.mismatches and scan.discriminating_word == power_word(4)
    return ok and elapsed < 1, f"{probe.describe()}; scan: {scan.describe()}; {elapsed:.3f} s"


CHECKS = [
    ("example 1 equivalences", check_example1),
    ("example 2 verdicts", check_example2),
    ("wreath engine", check_wreath_engine),
    ("oracle inequality direction", check_oracle_inequality),
]


def run() -> list[tuple[str, bool, str]]:
    results = []
    for name, check in CHECKS:
        try:
            ok, detail = check()
        except Exception as exc:  # a crash is a failed check, reported as such
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, ok, detail))
    return results
