import json
import subprocess
import sys

import pytest

from wreathvar import fixtures
from wreathvar.cli import main

JSON_KEYS = {"command", "inputs", "witness", "explanation", "version"}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--format", "json", *argv)
    return code, json.loads(out or err)


def test_decide_example2(capsys):
    code, out, _ = run(capsys, "decide", "--a1", fixtures.EX2_A1, "--a2-abstract", "--a2-exponent", "900",
                       "--assume-var-equal", "--b1", fixtures.EX2_B1, "--b2", fixtures.EX2_B2)
    assert code == 0
    assert out.splitlines()[0] == "Equal"


def test_decide_json(capsys):
    code, rec = run_json(capsys, "decide", "--a1", fixtures.EX2_A1, "--a2-abstract", "--a2-exponent", "900",
                         "--a2-class", "2", "--assume-var-equal", "--b1", fixtures.EX2_B1,
                         "--b2", fixtures.EX2_B2_EXTRA_C5)
    assert code == 0
    assert JSON_KEYS | {"verdict"} == set(rec)
    assert (rec["verdict"], rec["witness"]) == ("NotEqual", 5)


def test_decide_precondition_violation(capsys):
    code, out, _ = run(capsys, "decide", "--a1", "C2", "--a2", "C2", "--b1", "C3", "--b2", "C3")
    assert code == 0
    assert out.startswith("PreconditionViolation") and "prime 3" in out


def test_equiv_example1(capsys):
    code, out, _ = run(capsys, "equiv", "C(3^3)^aleph0", "C(3^2)^aleph0")
    assert code == 0
    assert out.strip() == "not equivalent (exponent of first infinite factor: 3^3 vs 3^2)"
    code, out, _ = run(capsys, "equiv", fixtures.EX1_FIRST, fixtures.EX1_EQUIVALENT)
    assert out.strip() == "equivalent"


def test_group_info(capsys):
    code, out, _ = run(capsys, "group", "info", "C2 wr C2")
    assert code == 0
    assert "order: 8" in out and "exponent: 4" in out
    assert "nilpotency class: 2" in out and "derived length: 2" in out
    code, rec = run_json(capsys, "group", "info", "C2 wr C4")
    assert rec["report"]["order"] == 64 and rec["report"]["exponent"] == 8
    assert JSON_KEYS | {"report"} == set(rec)


def test_decompose(capsys):
    code, rec = run_json(capsys, "decompose", "C12 x C2")
    assert code == 0
    assert rec["report"]["canonical"] == "C(2^2) x C2 x C3"
    assert rec["report"]["exponent"] == 12
    code, rec = run_json(capsys, "decompose", "C2 wr 1")
    assert rec["report"]["canonical"] == "C2"


def test_is_law(capsys):
    code, out, _ = run(capsys, "is-law", "C2 wr C2", "x1^4")
    assert code == 0 and "is a law" in out
    code, rec = run_json(capsys, "is-law", "Q8", "x1^-1 x2^-1 x1 x2")
    assert rec["verdict"] is False


def test_scan_laws(capsys):
    code, rec = run_json(capsys, "scan-laws", "C2 wr C2", "C2 wr C4", "--rank", "1", "--length", "4")
    assert code == 0
    assert rec["witness"] == "x1^4"
    assert rec["report"]["probe"]["exponent"] == [4, 8]


@pytest.mark.parametrize("argv, kind", [
    (["decompose", "C(4^2)"], "NotPrime"),
    (["decompose", "C2 x"], "SyntaxError"),
    (["decompose", "Q8"], "NotAbelian"),
    (["group", "info", "C(2^1)^aleph0"], "NotFinite"),
    (["scan-laws", "C2 wr C4", "C2 wr C4", "--budget", "10"], "BudgetExceeded"),
    (["--order-cap", "50", "group", "info", "C2 wr C8"], "CapExceeded"),
])
def test_domain_errors_are_structured(capsys, argv, kind, monkeypatch):
    from wreathvar import groups
    monkeypatch.setattr(groups.CAPS, "order", groups.CAPS.order)
    code, rec = run_json(capsys, *argv)
    assert code == 1
    assert rec["error"]["kind"] == kind
    assert set(rec["error"]) >= {"kind", "message", "location"}


def test_syntax_error_location(capsys):
    code, rec = run_json(capsys, "equiv", "C2 x", "C2")
    assert rec["error"]["location"] == 4


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["decide", "--b1", "C2", "--b2", "C2"])
    assert info.value.code == 2


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.count("PASS") == 4


def test_entry_point_and_env_cap():
    r = subprocess.run([sys.executable, "-m", "wreathvar.cli", "group", "info", "C2 wr C4"],
                       capture_output=True, text=True, env={"WREATHVAR_ORDER_CAP": "10", "PATH": ""})
    assert r.returncode == 1
    assert "CapExceeded" in r.stderr
