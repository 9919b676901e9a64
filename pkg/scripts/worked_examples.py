"""Print the verdicts for the two worked examples, with explanations."""
from wreathvar import fixtures
from wreathvar.abelian import component_mismatch
from wreathvar.decider import decide


def main():
    first, same, other = fixtures.example1_components()
    print("3-components")
    for label, comp in [("first", first), ("second", same), ("third", other)]:
        print(f"  {label:7s} {comp}")
    for label, comp in [("second", same), ("third", other)]:
        why = component_mismatch(first, comp)
        print(f"  first vs {label}: {'equivalent' if why is None else 'not equivalent, ' + why}")

    a1, a2 = fixtures.example2_actives()
    bs = fixtures.example2_passives()
    print(f"\nA1 = {a1.label} (exponent {a1.exponent_m}, class {a1.nilpotency_class})")
    print(f"A2 = {a2.label} (asserted exponent {a2.exponent_m}, class {a2.nilpotency_class})")
    print(f"B1 = {bs['B1']}")
    for name in ("B2", "B2_wrong_exponent", "B2_extra_C5"):
        v = decide(a1, a2, bs["B1"], bs[name], var_a_equal=True)
        print(f"  {name} = {bs[name]}\n      {v}: {v.explanation}")


if __name__ == "__main__":
    main()
