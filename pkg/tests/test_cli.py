import io
import json
import subprocess
import sys

import pytest

from secantdeg.cli import load_golden, main, run_golden
from secantdeg.numeric import to_rational
from secantdeg.xring import AmbientClass


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_sigma3_curve():
    assert run("sigma3", "--curve", "6", "0") == (0, "4\n", "")


def test_coeffs():
    code, out, _ = run("coeffs", "--n", "2")
    assert (code, out) == (0, "30 15 3\n")


def test_check_passes():
    code, out, _ = run("check")
    assert code == 0
    lines = out.splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)
    assert len(lines) == len(load_golden()) + 24


def test_check_failure_exit_code(monkeypatch):
    bad = [{"id": "wrong", "quantity": "deg_sigma3", "descriptor": {"curve": [6, 0]}, "expected": "5"}]
    monkeypatch.setattr("secantdeg.cli.load_golden", lambda: bad)
    code, out, _ = run("check")
    assert code == 3 and "FAIL wrong" in out


def test_golden_items_run_through_cross_validation():
    assert all(ok for _, ok, _ in run_golden())


@pytest.mark.parametrize("argv", [
    ("sigma3",),
    ("sigma3", "--curve", "6", "0", "--veronese", "2", "3"),
    ("coeffs",),
    ("bogus",),
    ("sigma2", "--veronese", "two", "3"),
    ("coeffs", "--n", "0"),
])
def test_flag_errors(argv):
    assert run(*argv)[0] == 2


def test_computation_error_exit(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"n":1, "table":{"0,0":"0", "0,1":"1"}}')
    code, out, err = run("sigma3", "--table", str(path))
    assert code == 1 and out == "" and "zero" in err


def test_missing_file():
    assert run("sigma2", "--table", "/nonexistent/file.json")[0] == 1


def test_table_input(tmp_path):
    path = tmp_path / "sextic.json"
    path.write_text('{"n":1, "name":"rational sextic", "table":{"0,0":"6", "0,1":"-2"}}')
    assert run("sigma2", "--table", str(path))[:2] == (0, "10\n")


def test_warnings_go_to_stderr():
    code, out, err = run("sigma3", "--veronese", "2", "3")
    assert code == 0 and "warning" in err and "warning" not in out


def test_paper_example_note():
    code, out, err = run("sigma3", "--curve", "6", "0", "--show-paper-example")
    assert out == "4\n"
    assert "8(1 - g) = 8" in err and "= 12" in err


def test_surface_and_mult():
    assert run("sigma3", "--surface", "25", "-15", "9", "3")[1] == "859\n"
    assert run("mult", "--veronese", "2", "5")[1] == "21\n"


def test_segre_text():
    code, out, _ = run("segre", "--curve", "6", "0")
    assert out.splitlines() == ["s(X, sigma_2): 4 - 4*s1 - 12*h", "s(Delta, X x sigma_2): 4 - 12*h"]


@pytest.mark.parametrize("argv", [
    ("derive", "--veronese", "2", "5"),
    ("derive", "--curve", "7", "1"),
    ("derive", "--surface", "9", "-9", "9", "3"),
])
def test_structured_derive_round_trip(argv):
    code, out, _ = run(*argv, "--format", "structured")
    doc = json.loads(out)
    n = doc["n"]
    for key in ("d", "A", "B", "deg_sigma2", "deg_sigma3", "mult_X"):
        to_rational(doc[key])
    for key in ("segre_X_sigma2", "segre_diag"):
        cls = AmbientClass.from_json(n, doc[key]["terms"])
        assert cls.render() == doc[key]["render"]
    for entry in doc["pushforwards"].values():
        AmbientClass.from_json(n, entry["terms"])
    assert doc["method"] == "pipeline"


@pytest.mark.parametrize("desc", [("--curve", "8", "0"), ("--veronese", "2", "5"), ("--surface", "16", "-12", "9", "3")])
def test_derive_and_sigma3_agree(desc):
    _, derived, _ = run("derive", *desc, "--format", "structured")
    _, plain, _ = run("sigma3", *desc, "--format", "structured")
    assert json.loads(derived)["deg_sigma3"] == json.loads(plain)["deg_sigma3"]


def test_structured_check_and_coeffs():
    doc = json.loads(run("check", "--format", "structured")[1])
    assert all(r["pass"] for r in doc["results"])
    assert json.loads(run("coeffs", "--n", "1", "--format", "structured")[1]) == {"n": 1, "coeffs": ["9", "3"]}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "secantdeg", "sigma3", "--curve", "7", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "10\n"
