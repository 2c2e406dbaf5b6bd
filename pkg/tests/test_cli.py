import json
import subprocess
import sys

import pytest

from weightsys.cli import main
from weightsys.poly import Polynomial


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_permutation(capsys):
    assert run(capsys, "eval", "so", "2 1")[:2] == (0, "C2\n")


def test_eval_diagrams(capsys):
    assert run(capsys, "eval", "gl", "--diagram", "1 2 1 2")[1] == "C1^2 + C2^2 - C0*C2\n"
    assert run(capsys, "eval", "so", "--diagram", "(1,3)(2,4)")[1] == "C2^2 - 2*C0*C2 + 4*C2\n"


def test_eval_json_round_trip(capsys):
    code, out, _ = run(capsys, "eval", "so", "2 3 1", "--format", "json")
    data = json.loads(out)
    assert str(Polynomial.from_json(data["value"])) == data["text"] == "1/2*C0*C2 - C2"


def test_eval_from_file(tmp_path, capsys):
    f = tmp_path / "d.txt"
    f.write_text("1 2 1 2\n")
    assert run(capsys, "eval", "gl", "--file", str(f), "--diagram-file")[1] == "C1^2 + C2^2 - C0*C2\n"


def test_parse_error_names_token(capsys):
    code, out, err = run(capsys, "eval", "so", "2 z")
    assert code == 2 and "'z'" in err and out == ""


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "eval", "so")[0] == 2
    assert run(capsys, "dims", "--max-n", "9")[0] == 2
    assert run(capsys, "verify", "odd-casimirs", "--max", "4")[0] == 2


def test_text_is_deterministic(capsys):
    first = run(capsys, "eval", "so", "3 4 5 6 1 2")[1]
    assert run(capsys, "eval", "so", "3 4 5 6 1 2", "--canonical")[1] == first


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "--max-n", "5", "--format", "json")
    data = json.loads(out)
    assert [r["dim_A"] for r in data] == [1, 2, 3, 6, 10]
    assert all(r["ker_gl"] == r["ker_joint"] == 0 for r in data)


def test_verify_odd(capsys):
    code, out, _ = run(capsys, "verify", "odd-casimirs", "--max", "7")
    assert code == 0 and out.rstrip().endswith("PASS")


def test_verify_oracle(capsys):
    assert run(capsys, "verify", "oracle", "--family", "so", "--N", "3", "--max-size", "3")[0] == 0
    assert run(capsys, "oracle", "--family", "sp", "--M", "1", "--max-size", "3")[0] == 0


def test_verify_pp(capsys):
    code, out, _ = run(capsys, "pp-verify", "--order", "8", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["pass"] and len(data["details"]) == 6


def test_progress_goes_to_stderr(capsys):
    code, out, err = run(capsys, "-v", "kernels", "--n", "3")
    assert code == 0 and "dim_A" in out and "INFO" not in out


def test_console_script():
    r = subprocess.run(
        [sys.executable, "-m", "weightsys.cli", "eval", "gl", "1"], capture_output=True, text=True
    )
    assert r.returncode == 0 and r.stdout == "C1\n"
