"""Compare decider verdicts with the law oracle on small finite wreath products.

For each case the decider's verdict on (A1, A2, B1, B2) is printed next to
what the brute-force oracle sees for A1 wr B1 vs A2 wr B2: a mismatch in
exponent / class / derived length, a discriminating law, or nothing within
the scan bounds. A NotEqual verdict without an oracle witness only means
the bounds were too small to see the difference.

    python scripts/concordance.py --length 6
"""
import argparse
import time

from wreathvar.decider import NilpotentDescriptor, decide
from wreathvar.errors import BudgetExceeded, CapExceeded
from wreathvar.expr import parse_abelian, parse_group
from wreathvar.groups import wreath
from wreathvar.laws import invariant_probe, scan_discriminating

CASES = [
    # A1, A2, B1, B2
    ("C2", "C2 x C2", "C2", "C2"),
    ("C2", "C2", "C2", "C4"),
    ("C2", "C2", "C4", "C2 x C4"),
    ("C2", "C2", "C2", "C2 x C2"),
    ("C4", "C2 x C4", "C2", "C2"),
    ("Q8", "Q8 x C2", "C2", "C2"),
    ("C3", "C3 x C3", "C3", "C3"),
    ("C3", "C3", "C3", "C3 x C3"),
    ("C6", "C2 x C3", "C2", "C2"),
]


def oracle(g1, g2, rank, length, budget):
    probe = invariant_probe(g1, g2)
    if probe.distinct:
        return "distinct: " + probe.describe()
    for r in range(1, rank + 1):
        try:
            rep = scan_discriminating(g1, g2, r, length, budget=budget)
        except (BudgetExceeded, CapExceeded) as exc:
            return f"scan skipped at rank {r} ({exc.kind})"
        if rep.found:
            return "distinct: " + rep.describe()
    return f"no witness up to rank {rank}, length {length}"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rank", type=int, default=2)
    ap.add_argument("--length", type=int, default=6)
    ap.add_argument("--budget", type=int, default=10**8)
    args = ap.parse_args()

    for a1s, a2s, b1s, b2s in CASES:
        t = time.perf_counter()
        a1g, a2g = parse_group(a1s), parse_group(a2s)
        verdict = decide(NilpotentDescriptor.concrete(a1g), NilpotentDescriptor.concrete(a2g),
                         parse_abelian(b1s), parse_abelian(b2s), var_a_equal=True)
        try:
            w1, w2 = wreath(a1g, parse_group(b1s)), wreath(a2g, parse_group(b2s))
            seen = oracle(w1, w2, args.rank, args.length, args.budget)
        except CapExceeded as exc:
            seen = f"not built ({exc})"
        print(f"({a1s}) wr ({b1s})  vs  ({a2s}) wr ({b2s})")
        print(f"    decider: {verdict}")
        print(f"    oracle:  {seen}  [{time.perf_counter() - t:.2f} s]")


if __name__ == "__main__":
    main()
