import json
import subprocess
import sys

import pytest

from magnus_pbw.cli import main
from magnus_pbw.free.serialize import lie_from_json
from magnus_pbw.mu import mu_dynkin


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mu_examples(capsys):
    assert run(capsys, "mu", "--n", "2", "--construction", "dynkin")[1].strip() == "mu_2 = 1/2 [X1,X2]"
    assert run(capsys, "mu", "--n", "1", "--construction", "lieperm")[1].strip() == "mu_1 = X1"


def test_mu_json_round_trips(capsys):
    code, out, _ = run(capsys, "mu", "--n", "4", "--construction", "magnus-C", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["construction"] == "magnus_C"
    assert lie_from_json(data["value"]) == mu_dynkin(4).value


def test_mu_latex_and_pivot(capsys):
    code, out, _ = run(capsys, "mu", "--n", "3", "--pivot", "averaged", "--format", "latex")
    assert code == 0 and out.startswith("\\mu_{3} = \\frac{1}{3}")


def test_coeffs(capsys):
    assert run(capsys, "coeffs", "--beta", "--max", "5")[1].strip() == "1, -1/2, 1/12, 0, -1/720, 0"
    assert run(capsys, "coeffs", "--beta", "--max", "0")[1].strip() == "1"
    rows = run(capsys, "coeffs", "--alpha", "--max", "4")[1].strip().splitlines()
    assert len(rows) == 5 and rows[4].endswith("1/34560")
    data = json.loads(run(capsys, "coeffs", "--beta-tilde", "--max", "2", "--format", "json")[1])
    assert data["values"] == ["1/1", "1/2", "1/12"]


def test_bch(capsys):
    assert run(capsys, "bch", "--order", "1")[1].strip() == "BCH_1 = X + Y"
    assert run(capsys, "bch", "--order", "2")[1].strip().splitlines()[-1] == "BCH_2 = 1/2 [X,Y]"
    out = run(capsys, "bch", "--order", "3", "--format", "latex")[1]
    assert "\\frac{1}{12} [X,[X,Y]]" in out


def test_verify_examples(capsys):
    assert run(capsys, "verify", "--suite", "cross-construction", "--max-n", "5")[0] == 0
    assert run(capsys, "verify", "--suite", "pbw", "--d", "2", "--k", "3", "--degree", "3")[0] == 0
    code, out, _ = run(capsys, "verify", "--suite", "mu-identities", "--max-n", "2", "--format", "json")
    assert code == 0 and json.loads(out)["passed"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    from magnus_pbw import verify
    from magnus_pbw.pbw import Report

    def broken(cfg):
        r = Report("forced")
        r.record(False, "witness")
        return [r]

    monkeypatch.setitem(verify.RUNNERS, "oracle", broken)
    code, out, _ = run(capsys, "verify", "--suite", "oracle")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["mu", "--n", "0"],
        ["mu", "--n", "3", "--construction", "hall"],
        ["mu", "--n", "3", "--pivot", "9"],
        ["mu", "--n", "3", "--pivot", "x"],
        ["mu", "--n", "3", "--construction", "lieperm", "--pivot", "1"],
        ["coeffs", "--max", "-1"],
        ["coeffs", "--alpha", "--beta"],
        ["bch", "--order", "0"],
        ["verify", "--suite", "nope"],
        ["verify", "--max-n", "0"],
        ["pbw", "--d", "0", "--k", "2"],
        ["mu", "--n", "3", "--format", "xml"],
        [],
    ],
)
def test_bad_arguments_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_pbw_and_lieperm(capsys):
    data = json.loads(run(capsys, "pbw", "--d", "2", "--k", "2", "--format", "json")[1])
    assert data["dim"] == 3
    out = run(capsys, "pbw", "--d", "2", "--k", "2")[1]
    assert "[e0,e1] = e2" in out
    data = json.loads(run(capsys, "lieperm", "--n", "4", "--format", "json")[1])
    assert data["count"] == 24 and len(data["lie_permutations"]) == 24


def test_output_file(tmp_path, capsys):
    target = tmp_path / "mu.json"
    assert main(["--output", str(target), "mu", "--n", "3", "--format", "json"]) == 0
    assert json.loads(target.read_text())["n"] == 3


def test_byte_identical_output():
    cmd = [sys.executable, "-m", "magnus_pbw", "--seed", "5", "verify", "--suite", "coshuffle",
           "--cases", "20", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    mu = [sys.executable, "-m", "magnus_pbw", "mu", "--n", "5", "--construction", "lieperm"]
    assert subprocess.run(mu, capture_output=True).stdout == subprocess.run(mu, capture_output=True).stdout
