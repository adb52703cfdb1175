import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from bsgroup import cli, decision

GOLDEN = json.loads((Path(__file__).parent / "golden" / "cli_cases.json").read_text())


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def last_line(text):
    return text.rstrip("\n").split("\n")[-1] if text else ""


@pytest.mark.parametrize("case", GOLDEN, ids=lambda c: " ".join(c["argv"]))
def test_golden(case):
    code, out, err = invoke(case["argv"])
    assert out == case["stdout"]
    assert code == case["exit"]
    assert last_line(err) == case["stderr_last"]


def test_golden_covers_every_subcommand():
    used = {arg for case in GOLDEN for arg in case["argv"]}
    commands = set(cli.build_parser()._subparsers._group_actions[0].choices)
    assert commands <= used
    assert len(GOLDEN) == 30


def test_cap_exit_code(monkeypatch):
    real = decision.coset_contains_unit
    monkeypatch.setattr(decision, "coset_contains_unit", lambda a, d, cap: real(a, d, 1))
    code, out, _ = invoke(["--n", "2", "od", "a^3 t^3", "a t^3"])
    assert code == 4
    assert out == "yes\nwitness: omitted (search cap exceeded)\n"


def test_exponent_overflow_exit_code():
    code, _, err = invoke(["--n", "2", "normalize", "t^70000"])
    assert code == 4 and err.startswith("error:")


def test_failed_check_exit_code(monkeypatch):
    monkeypatch.setattr(cli.oracles, "verify_conjugator", lambda u, v, g: False)
    code, out, err = invoke(["--n", "2", "--check", "cp", "a", "a^2"])
    assert code == 70
    assert out == "yes\nwitness: t\nchecked: false\n"
    assert "verification" in err


def test_bad_automorphism():
    code, _, err = invoke(["--n", "2", "tcp", "a", "a", "--aut", "phi(3; 0)"])
    assert code == 2 and "unit" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bsgroup", "--n", "2", "cp", "a t^2", "a^2 t^2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "yes\nwitness: t\n"
