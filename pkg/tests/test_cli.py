import json
import subprocess
import sys
from fractions import Fraction

import pytest

from hankelforge.cli import main, run
from hankelforge.hankel import coeffs_a, matrix_window
from hankelforge.parser import parse_poly
from hankelforge.serialize import rational_from_json, window_from_csv


def ok(argv):
    code, out, err = run(argv)
    assert code == 0, err
    return out


def test_matrix_csv_matches_golden(golden):
    out = ok(["matrix", "--s", "1", "--symbol", "z^3+z^4+z^5+z^6", "--format", "csv", "--paper-orientation"])
    assert out == (golden / "b2_paper.csv").read_text()


def test_csv_round_trip():
    x = parse_poly("z^3 - 1/2 z^5 + 2z^7")
    for paper in (False, True):
        argv = ["matrix", "--s", "2", "--symbol", "z^3 - 1/2 z^5 + 2z^7", "--rows", "5", "--cols", "4", "--format", "csv"]
        out = ok(argv + (["--paper-orientation"] if paper else []))
        back = window_from_csv(out, 2, paper_orientation=paper)
        assert back.entries == matrix_window(2, x, 5, 4).entries


def test_matrix_json():
    d = json.loads(ok(["matrix", "--s", "0", "--symbol", "z + 2z^2", "--rows", "2", "--cols", "2"]))
    assert d["kind"] == "matrix" and d["s"] == 0 and d["orientation"] == "row0-first"
    assert [[rational_from_json(v) for v in r] for r in d["entries"]] == [[1, 2], [2, 0]]


def test_apply():
    d = json.loads(ok(["apply", "--s", "1", "--symbol", "z^4", "--input", "z^-1"]))
    assert d["kind"] == "apply" and d["text"] == "2*z^2"


def test_section():
    d = json.loads(ok(["section", "--s", "2"]))
    assert d["kind"] == "v"
    got = {tuple(e["key"]): rational_from_json(e["value"]) for e in d["entries"]}
    assert got == {(5, 0): Fraction(-4, 5), (4, 1): 4, (3, 2): -8}
    d = json.loads(ok(["section", "--s", "1", "--p", "0"]))
    assert d["kind"] == "sigma" and d["p"] == 0


def test_lowest():
    d = json.loads(ok(["lowest", "--s", "1"]))
    assert [(e["key"], rational_from_json(e["value"])) for e in d["entries"]] == [([1, 0], 1), ([0, 1], -1)]
    d2 = json.loads(ok(["lowest", "--s", "1", "--symbol", "z^3"]))
    assert d2["entries"] == d["entries"] and d2["kind"] == "operator_tensor"


def test_transvect():
    d = json.loads(ok(["transvect", "--s", "1", "--f", "z^2", "--g", "z^3"]))
    assert d["text"] == "-z^4"


def test_adjoint_exit_codes():
    code, out, _ = run(["adjoint", "--s", "3"])
    assert code == 0
    assert json.loads(out)["lambda"] == {"num": "1", "den": "6"}
    code, out, _ = run(["adjoint", "--s", "0", "--start", "1"])
    assert code == 1
    assert json.loads(out)["lambda"] == "undefined"


def test_identity_lines():
    code, out, _ = run(["identity", "--family", "A", "--max-s", "2", "--k-span", "3"])
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows and all(r["equal"] for r in rows)
    assert run(["identity", "--family", "B", "--max-s", "2", "--ij-max", "4"])[0] == 0
    assert run(["identity", "--family", "B", "--max-s", "2", "--ij-max", "4", "--verbatim"])[0] == 1


def test_solve_a():
    d = json.loads(ok(["solve-a", "--s", "2"]))
    assert [rational_from_json(v) for v in d["entries"]] == coeffs_a(2)
    assert "after_lower" in d and "after_upper" in d


def test_verify_small():
    d = json.loads(ok(["verify", "--suite", "algebra,hankel", "--max-s", "2"]))
    assert d["passed"] is True
    assert {e["suite"] for e in d["entries"]} == {"algebra", "hankel"}


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["matrix", "--s", "1"],
        ["matrix", "--s", "-1", "--symbol", "z^3"],
        ["matrix", "--s", "1", "--symbol", "z^"],
        ["apply", "--s", "1", "--symbol", "z^3", "--input", "z"],
        ["apply", "--s", "1", "--symbol", "z^-1", "--input", "z^-1"],
        ["verify", "--suite", "nope"],
        ["identity", "--family", "C"],
    ],
)
def test_usage_errors_exit_2(argv):
    code, out, err = run(argv)
    assert code == 2
    assert out == "" and err


def test_deterministic_output():
    argv = ["section", "--s", "4"]
    assert run(argv) == run(argv)
    m = ["matrix", "--s", "3", "--symbol", "z^7 + 1/3 z^9", "--format", "csv"]
    assert run(m) == run(m)


def test_main_writes_streams(capsys):
    assert main(["transvect", "--s", "0", "--f", "z", "--g", "z"]) == 0
    assert '"text": "z^2"' in capsys.readouterr().out
    assert main(["matrix", "--s", "1"]) == 2
    assert "required" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hankelforge", "solve-a", "--s", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["kind"] == "solve_a"
