import json
import subprocess
import sys

import pytest

from verma_lc import hw_characters
from verma_lc.cli import main

K3 = json.dumps({"n_plus_1": 3, "edges": [[1, 2, 1], [1, 3, 1], [2, 3, 1]]})
VERMA = json.dumps({"algebra": [2], "lambda": {"blocks": [{"n": 2, "h": ["1", "0"]}]}, "kind": "verma"})
PARABOLIC = json.dumps(
    {"algebra": [2], "lambda": {"blocks": [{"n": 2, "h": ["1", "0"]}]}, "kind": "parabolic", "J": [[1, 1]]}
)
W20 = json.dumps({"blocks": [{"n": 2, "h": ["2", "0"]}]})


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_kpf(capsys):
    assert run(capsys, "kpf", "--graph", K3, "--target", "2,0,-2")[:2] == (0, "3\n")
    code, out, _ = run(capsys, "kpf", "--g2", "--target", "4,4", "--json")
    assert code == 0 and json.loads(out) == {"value": 13}
    code, out, _ = run(capsys, "kpf", "--graph", K3, "--target", "1,0,-1", "--enumerate")
    assert out.splitlines() == ["2", "1 1 0", "0 0 1"]
    assert run(capsys, "kpf", "--g2", "--target", "4,4", "--enumerate", "--limit", "5")[0] == 2


def test_char(capsys):
    assert run(capsys, "char", "mult", "--module", VERMA, "--coords", "1,1")[:2] == (0, "2\n")
    code, out, _ = run(capsys, "char", "poly", "--module", PARABOLIC, "--delta", "1,1,1", "--certify")
    assert code == 0 and out.endswith("normalized Lorentzian: true\n")
    assert run(capsys, "char", "mult", "--module", VERMA, "--coords", "1")[0] == 2


def test_cert_verdicts_and_expect(capsys):
    sq = "1 x1^2\n2 x1 x2\n1 x2^2"
    assert run(capsys, "cert", "lorentzian", "--poly", sq)[:2] == (0, "verdict: true\n")
    bad = "1 x1^2\n3 x1 x2\n1 x2^2"
    assert run(capsys, "cert", "dlc", "--poly", bad, "--expect", "false")[0] == 1
    code, out, _ = run(capsys, "cert", "lorentzian", "--poly", "1 x1^2\n-1/2 x2")
    assert code == 1 and "negative coefficient" in out
    assert run(capsys, "cert", "lorentzian", "--poly", "1 x1^2\n-1/2 x2", "--expect", "false")[0] == 0


def test_flow(capsys):
    code, out, _ = run(capsys, "flow", "lidskii", "--graph", K3, "--netflow", "2,1")
    assert code == 0 and out.splitlines()[-1] == "value: 2"
    assert run(capsys, "flow", "points", "--graph", K3, "--netflow", "2,1")[:2] == (0, "3\n")
    assert run(capsys, "flow", "mixed", "--graph", K3, "--r", "1,0")[:2] == (0, "1\n")
    assert run(capsys, "flow", "af", "--graph", K3, "--r", "1,0", "--i", "1", "--j", "2")[0] == 2
    assert run(capsys, "flow", "points", "--graph", K3, "--netflow", "1/2,0")[0] == 2


def test_sym(capsys):
    code, out, _ = run(capsys, "sym", "hl", "--shape", "2,0", "--t", "1/2", "--lc")
    assert code == 1 and '"c": "1/2"' in out
    code, out, _ = run(capsys, "sym", "okounkov", "--family", "jack", "--tau", "1/2", "--triple", "(3,0),(1,0),(2,0)", "--json")
    payload = json.loads(out)
    assert code == 0 and {"coeff": "-4/15", "exp": [1, 3]} in payload["difference"]["terms"]
    assert run(capsys, "sym", "jack", "--shape", "3,0", "--tau=-1")[0] == 2


def test_lie(capsys):
    assert run(capsys, "lie", "jantzen", "--weight", W20, "--J", "1,2")[:2] == (0, "M(lambda, J) simple: true\n")
    assert run(capsys, "lie", "jantzen", "--weight", W20, "--J", "1")[0] == 1
    assert run(capsys, "lie", "jlambda", "--weight", W20)[1] == "1:1 1:2\n"
    code, out, _ = run(capsys, "lie", "gj", "--n", "3", "--J", "1,3", "--json")
    assert json.loads(out)["edges"] == [[1, 3, 1], [1, 4, 1], [2, 3, 1], [2, 4, 1]]


def test_repro_all(capsys):
    code, out, _ = run(capsys, "repro", "--all")
    assert code == 0 and out and all(line.startswith("PASS") for line in out.splitlines())
    assert run(capsys, "repro", "no-such-case")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["sym", "jack", "--tau=1/2x"],
        ["lie", "jantzen", "--weight", json.dumps({"blocks": [{"n": 2, "h": ["2", "0"]}], "eps": [["5", "1", "0"]]}), "--J", "1"],
        ["kpf", "--graph", json.dumps({"n_plus_1": 3, "edges": [[3, 2, 1]]}), "--target", "1,0,-1"],
        ["kpf", "--graph", "{not json", "--target", "0,0,0"],
        ["bogus"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_negative_rational_parses(capsys):
    assert run(capsys, "sym", "jack", "--shape", "2,0", "--tau=-1/2")[:2] == (0, "1 x2^2\n-2 x1^1 x2^1\n1 x1^2\n")


def test_pipeline_mismatch_exits_3(capsys, monkeypatch):
    monkeypatch.setattr(hw_characters, "parabolic_mult_alternating", lambda *a: -1)
    code, _, err = run(capsys, "char", "mult", "--module", PARABOLIC, "--coords", "1,1")
    assert code == 3 and "internal error" in err


def test_json_output_is_byte_stable():
    argv = [sys.executable, "-m", "verma_lc.cli", "sym", "mac", "--shape", "3,1", "--q", "1/2", "--t", "1/3", "--json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["polynomial"]["num_vars"] == 2
