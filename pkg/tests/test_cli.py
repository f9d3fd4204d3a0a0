import json

import pytest

from su3sph.cli import main, parse_range, UsageError


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_params_json(capsys):
    status, out, _ = run(capsys, "params", "--n", "0", "--ell", "1", "--w", "0", "--k", "1")
    data = json.loads(out)
    assert status == 0
    assert data["scaled"] == {"lambda": "-2", "mu": "-10"}
    assert data["radial"] == {"lambda": "-8", "mu": "-40"}


def test_params_from_restriction(capsys):
    status, out, _ = run(capsys, "params", "--p", "2", "--q", "2", "--k1", "3", "--k2", "1")
    assert status == 0
    assert json.loads(out)["index"] == {"n": -1, "ell": 2, "w": 1, "k": 1}


def test_inadmissible_index_exits_2(capsys):
    status, out, err = run(capsys, "series", "--n", "-3", "--ell", "1", "--w", "0", "--k", "0")
    assert status == 2 and out == "" and "inadmissible" in err


def test_series_json_and_csv(capsys):
    argv = ["series", "--n", "0", "--ell", "0", "--w", "1", "--k", "0"]
    _, out, _ = run(capsys, *argv)
    assert json.loads(out)["series"]["coefficients"][:2] == [["1"], ["-3"]]
    _, csv_out, _ = run(capsys, *argv, "--format", "csv")
    lines = csv_out.splitlines()
    assert lines[0] == "j,i,num,den"
    assert lines[1:3] == ["0,0,1,1", "1,0,-3,1"]


def test_output_is_deterministic(capsys):
    argv = ["series", "--n", "-1", "--ell", "2", "--w", "2", "--k", "1"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_output_file(tmp_path, capsys):
    target = tmp_path / "gram.json"
    status, out, _ = run(capsys, "gram", "--n", "0", "--ell", "0", "--wmax", "3", "--output", str(target))
    assert status == 0 and out == ""
    assert json.loads(target.read_text())["norms"] == ["1/2", "1/16", "1/54", "1/128"]


def test_verify_statuses(capsys):
    status, out, _ = run(capsys, "verify", "--suite", "structure,casimir", "--n", "0..1", "--ell", "0..1", "--w", "0..2")
    data = json.loads(out)
    assert status == 0 and data["passed"]
    assert [s["status"] for s in data["suites"]] == ["skipped", "pass"]


def test_unknown_suite_exits_2(capsys):
    assert run(capsys, "verify", "--suite", "nope")[0] == 2


def test_probe_carries_disclaimer(capsys):
    status, out, _ = run(capsys, "probe", "--n", "0", "--ell", "3", "--w", "1", "--k", "2")
    data = json.loads(out)
    assert status == 0
    assert "conjecture-level" in data["disclaimer"]


def test_closed_form_and_psi(capsys):
    _, out, _ = run(capsys, "closed-form", "--n", "0", "--ell", "1", "--w", "1", "--k", "0")
    assert [c["a"] for c in json.loads(out)["components"]] == ["-1", "-1"]
    assert run(capsys, "closed-form", "--n", "0", "--ell", "3", "--w", "0", "--k", "0")[0] == 2
    _, out, _ = run(capsys, "psi", "--n", "-1", "--ell", "1")
    assert json.loads(out)["components"][0] == {"alpha": -1, "coeffs_in_r2": ["1", "-1"]}


def test_eval_exact_and_approx(capsys):
    base = ["eval", "--n", "0", "--ell", "0", "--w", "1", "--k", "0", "--t", "1/2,1"]
    exact = json.loads(run(capsys, *base)[1])
    assert exact["exact"] is True
    approx = json.loads(run(capsys, *base, "--approx")[1])
    assert approx["exact"] is False


def test_bispectral_command(capsys):
    status, out, _ = run(capsys, "bispectral", "--n", "0", "--w", "1")
    data = json.loads(out)
    assert status == 0 and data["A"][0][0] == "1/15"


def test_parse_range():
    assert parse_range("-2..1") == [-2, -1, 0, 1]
    assert parse_range("3") == [3]
    assert parse_range("0,2,5") == [0, 2, 5]
    with pytest.raises(UsageError):
        parse_range("a..b")
