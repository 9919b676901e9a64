"""Command-line front end.

Exit status is 0 on success, 1 on a domain error (bad group, failed
precondition check, budget exceeded, ...) and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__, groups, selftest
from .abelian import exponent, group_mismatch
from .decider import NilpotentDescriptor, decide
from .errors import WreathVarError
from .expr import is_symbolic_abelian, parse, to_abelian, to_group
from .laws import DEFAULT_BUDGET, invariant_probe, is_law, parse_word, scan_discriminating


def _record(command: str, inputs: dict, explanation: str, *, verdict=None, report=None, witness=None) -> dict:
    rec = {"command": command, "inputs": inputs}
    if verdict is not None:
        rec["verdict"] = verdict
    else:
        rec["report"] = report
    rec["witness"] = witness
    rec["explanation"] = explanation
    rec["version"] = __version__
    return rec


def _abelian_of(text: str):
    e = parse(text)
    if is_symbolic_abelian(e):
        return to_abelian(e)
    return groups.abelian_decomposition(to_group(e))


def cmd_decompose(args) -> tuple[dict, str]:
    b = _abelian_of(args.expr)
    comps = {str(c.prime): str(c) for c in b.components}
    text = "\n".join([f"{args.expr}", f"  = {b}", f"  exponent {exponent(b)}"]
                     + [f"  {p}-component: {c}" for p, c in comps.items()])
    rec = _record("decompose", {"expr": args.expr},
                  f"{b}", report={"canonical": str(b), "exponent": exponent(b), "components": comps})
    return rec, text


def cmd_equiv(args) -> tuple[dict, str]:
    b1, b2 = _abelian_of(args.left), _abelian_of(args.right)
    miss = group_mismatch(b1, b2)
    if miss is None:
        text = "equivalent"
        rec = _record("equiv", {"left": str(b1), "right": str(b2)}, "equivalent at every prime",
                      verdict="equivalent")
    else:
        p, why = miss
        text = f"not equivalent ({why})"
        rec = _record("equiv", {"left": str(b1), "right": str(b2)}, why, verdict="not equivalent", witness=p)
    return rec, text


def _descriptor(args, side: str) -> NilpotentDescriptor:
    expr = getattr(args, side)
    if getattr(args, f"{side}_abstract"):
        m = getattr(args, f"{side}_exponent")
        if m is None:
            raise UsageError(f"--{side}-abstract needs --{side}-exponent")
        return NilpotentDescriptor.abstract(m, getattr(args, f"{side}_class"))
    if expr is None:
        raise UsageError(f"give --{side} EXPR or --{side}-abstract")
    return NilpotentDescriptor.concrete(to_group(parse(expr)))


def cmd_decide(args) -> tuple[dict, str]:
    a1, a2 = _descriptor(args, "a1"), _descriptor(args, "a2")
    b1, b2 = to_abelian(parse(args.b1)), to_abelian(parse(args.b2))
    v = decide(a1, a2, b1, b2, var_a_equal=args.assume_var_equal)
    rec = _record("decide", v.inputs, v.explanation, verdict=v.outcome, witness=v.witness)
    text = str(v) if v.outcome != "PreconditionViolation" else f"PreconditionViolation: {v.explanation}"
    if v.outcome != "PreconditionViolation":
        text += f"\n  {v.explanation}"
    return rec, text


def cmd_group_info(args) -> tuple[dict, str]:
    g = to_group(parse(args.expr))
    inv = g.invariants()
    fields = {
        "order": inv.order, "exponent": inv.exponent,
        "nilpotency_class": inv.nilpotency_class if inv.nilpotency_class is not None else "not nilpotent",
        "derived_length": inv.derived_length if inv.derived_length is not None else "not soluble",
        "is_abelian": inv.is_abelian,
    }
    text = "\n".join([g.label] + [f"  {k.replace('_', ' ')}: {v}" for k, v in fields.items()])
    return _record("group info", {"expr": args.expr}, g.label, report=fields), text


def cmd_is_law(args) -> tuple[dict, str]:
    g = to_group(parse(args.group))
    w = parse_word(args.word, args.rank)
    ok = is_law(g, w, budget=args.budget)
    text = f"{w} is {'a law' if ok else 'not a law'} of {g.label}"
    return _record("is-law", {"group": g.label, "word": str(w)}, text, verdict=ok), text


def cmd_scan_laws(args) -> tuple[dict, str]:
    g1, g2 = to_group(parse(args.left)), to_group(parse(args.right))
    probe = invariant_probe(g1, g2)
    scan = scan_discriminating(g1, g2, args.rank, args.length, budget=args.budget)
    report = {
        "discriminating_word": str(scan.discriminating_word) if scan.found else None,
        "law_of": scan.law_of, "words_checked": scan.words_checked,
        "bounds": {"rank": args.rank, "length": args.length},
        "probe": {k: list(v) for k, v in probe.values.items()},
    }
    text = f"invariants: {probe.describe()}\nscan: {scan.describe()}"
    inputs = {"left": g1.label, "right": g2.label}
    return _record("scan-laws", inputs, text, report=report,
                   witness=str(scan.discriminating_word) if scan.found else None), text


def cmd_selftest(args) -> tuple[dict, str]:
    results = selftest.run()
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}: {detail}" for name, ok, detail in results]
    passed = all(ok for _, ok, _ in results)
    rec = _record("selftest", {}, "all checks passed" if passed else "some checks failed",
                  report=[{"check": n, "passed": ok, "detail": d} for n, ok, d in results])
    if not passed:
        raise SelftestFailed(rec, "\n".join(lines))
    return rec, "\n".join(lines)


class UsageError(Exception):
    pass


class SelftestFailed(Exception):
    def __init__(self, record, text):
        super().__init__(text)
        self.record, self.text = record, text


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wreathvar", description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=["text", "json"], default="text")
    ap.add_argument("--order-cap", type=int, help="largest group order built concretely")
    ap.add_argument("--table-cap", type=int, help="largest order with a materialized multiplication table")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="cyclic p-group decomposition of an abelian group")
    p.add_argument("expr")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("equiv", help="compare two abelian groups prime by prime")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("decide", help="do A1 wr B1 and A2 wr B2 generate the same variety?")
    for side in ("a1", "a2"):
        p.add_argument(f"--{side}", metavar="EXPR")
        p.add_argument(f"--{side}-abstract", action="store_true")
        p.add_argument(f"--{side}-exponent", type=int, metavar="M")
        p.add_argument(f"--{side}-class", type=int, metavar="C")
    p.add_argument("--b1", required=True, metavar="EXPR")
    p.add_argument("--b2", required=True, metavar="EXPR")
    p.add_argument("--assume-var-equal", action="store_true", help="assert var(A1) = var(A2)")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("group", help="finite group commands")
    gsub = p.add_subparsers(dest="group_command", required=True)
    q = gsub.add_parser("info", help="order, exponent, nilpotency class, derived length")
    q.add_argument("expr")
    q.set_defaults(func=cmd_group_info)

    p = sub.add_parser("is-law", help="is WORD a law of GROUP?")
    p.add_argument("group")
    p.add_argument("word")
    p.add_argument("--rank", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_is_law)

    p = sub.add_parser("scan-laws", help="search for a law of exactly one of two groups")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--length", type=int, default=6)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_scan_laws)

    p = sub.add_parser("selftest", help="run the worked-example golden checks")
    p.set_defaults(func=cmd_selftest)
    return ap


def _emit(args, rec: dict, text: str, stream) -> None:
    if args.format == "json":
        print(json.dumps(rec, indent=2, default=str), file=stream)
    else:
        print(text, file=stream)


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.order_cap is not None:
        groups.CAPS.order = args.order_cap
    if args.table_cap is not None:
        groups.CAPS.table = args.table_cap
    try:
        rec, text = args.func(args)
    except UsageError as exc:
        ap.error(str(exc))
    except SelftestFailed as exc:
        _emit(args, exc.record, exc.text, sys.stdout)
        return 1
    except WreathVarError as exc:
        err = exc.to_record()
        rec = {"command": args.command, "error": err, "version": __version__}
        hint = f" (expected one of: {', '.join(err['expected'])})" if err.get("expected") else ""
        _emit(args, rec, f"error: {err['kind']}: {exc}{hint}", sys.stderr)
        return 1
    _emit(args, rec, text, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
