import csv
import io
import subprocess
import sys

import pytest

from conftest import FIXTURES
from subfield_codes.cli import main


def run(*args):
    out = io.StringIO()
    code = main([str(a) for a in args], out=out)
    return code, out.getvalue()


def test_mindist_example1():
    rc, out = run("mindist", FIXTURES / "example1.code", "--lambda", "2")
    assert rc == 0
    assert out.splitlines()[0] == "d_lambda = 9; minima = {(3,3),(0,6)}"
    assert "mlambda_d = no" in out


def test_mindist_threads_and_fraction():
    rc, out = run("--threads", "3", "mindist", FIXTURES / "example2.code", "--lambda", "3/2")
    assert rc == 0
    assert out.splitlines()[0] == "d_lambda = 5/2; minima = {(3,0),(1,1),(0,2)}"


def test_ball():
    rc, out = run("ball", "--n", 7, "--r", 0, "--lambda", 2, "--q", 2, "--m", 2)
    assert rc == 0 and out.splitlines()[0] == "1"
    rc, out = run("ball", "--n", 3, "--r", 2, "--lambda", 2, "--q", 2, "--m", 2)
    assert out.splitlines()[0] == "13"


def test_weight():
    rc, out = run("weight", "1 1 1 a a a", "--field", FIXTURES / "example1.code", "--lambda", 2)
    assert rc == 0
    assert "br_weight = (3,3)" in out and "lambda_weight[2] = 9" in out
    rc, out = run("weight", "a 1", "--p", 2, "--m", 2, "--lambda", "3/2")
    assert "lambda_weight[3/2] = 5/2" in out


def test_bounds_csv(tmp_path):
    target = tmp_path / "b.csv"
    rc, _ = run("bounds", "--q", 4, "--m", 2, "--lambda", 4, "--d", 7, "--n-from", 2, "--n-to", 9,
                "--out", target)
    assert rc == 0
    rows = list(csv.DictReader(target.open()))
    assert len(rows) == 8 and rows[0]["n"] == "2"
    assert all(float(r["gv"]) <= float(r["best_upper"]) + 1e-9 for r in rows)


def test_macwilliams_on_dual_file():
    rc, out = run("macwilliams", FIXTURES / "gf2_17_dual.code", "--csv")
    assert rc == 0
    assert "5,2,68" in out.splitlines()


def test_enumerator_text():
    rc, out = run("enumerator", FIXTURES / "example1.code")
    assert out.strip() == "Y0^6 + 2*Y1^3*Y2^3 + Y2^6"


def test_dual_regenerates_fixture():
    rc, out = run("dual", FIXTURES / "gf2_17.code")
    assert rc == 0
    assert out == (FIXTURES / "gf2_17_dual.code").read_text()


def test_decode():
    rc, out = run("decode", FIXTURES / "example2.code", "0 1 1", "--lambda", 2)
    assert out.splitlines() == ["codeword = (1,1,1)", "distance = 1", "unique = true", "ties = 1"]
    rc, out = run("decode", FIXTURES / "example2.code", "0 1 1", "--lambda", 1)
    assert "unique = false" in out


def test_simulate_requires_seed():
    rc, _ = run("simulate", FIXTURES / "example2.code", "--lambda", 2, "--p-base", 0.1,
                "--p-roof", 0, "--trials", 10)
    assert rc == 1
    args = ("simulate", FIXTURES / "example2.code", "--lambda", 2, "--p-base", 0.1,
            "--p-roof", 0.05, "--trials", 300, "--seed", 8)
    rc, a = run(*args)
    _, b = run(*args)
    assert rc == 0 and a == b and "word_error_rate" in a


@pytest.mark.parametrize("args, expected", [
    (["frobnicate"], 1),
    (["mindist", str(FIXTURES / "example1.code"), "--lambda", "1/3"], 1),
    (["decode", str(FIXTURES / "example2.code"), "0 1", "--lambda", "2"], 1),
    (["decode", str(FIXTURES / "example2.code"), "0 1 b", "--lambda", "2"], 2),
    (["mindist", str(FIXTURES / "mds16.code"), "--lambda", "2"], 3),
    (["simulate", str(FIXTURES / "example2.code"), "--lambda", "2", "--p-base", "0.9",
      "--p-roof", "0.9", "--trials", "5", "--seed", "1"], 1),
])
def test_exit_codes(args, expected):
    assert run(*args)[0] == expected


def test_parse_error_exit(tmp_path):
    bad = tmp_path / "bad.code"
    bad.write_text("p=2\ne=1\nm=2\nwhat=1\n")
    assert run("mindist", bad, "--lambda", 2)[0] == 2


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "subfield_codes.cli", "ball", "--n", "2", "--r", "1",
                          "--lambda", "2", "--q", "2", "--m", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.splitlines()[0] == "3"
