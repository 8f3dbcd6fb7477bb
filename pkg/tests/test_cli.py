import csv
import io
import json
import math

import pytest

from relaxed_green import cli

FIG4 = {"dimensionless": {"g1": 1.2, "g2": 3.0, "g3": 5.0, "g4": 3.0}}


@pytest.fixture
def params(tmp_path):
    def write(data=FIG4, name="p.json"):
        f = tmp_path / name
        f.write_text(json.dumps(data))
        return str(f)
    return write


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_eval_grid(capsys, params):
    code, out, _ = run(capsys, "eval", "--params", params(), "--nx", "3", "--ny", "3",
                       "--x-range", "-1", "1", "--y-range", "-1", "1")
    assert code == 0
    assert "\r" not in out
    r = rows(out)
    assert len(r) == 9
    assert list(r[0]) == ["x1", "x2", "u1", "u2", "P11", "P12", "P21", "P22", "theta3"]
    origin = r[4]
    assert (origin["x1"], origin["x2"]) == ("0", "0") and origin["u1"] == "nan"
    t = float(r[0]["theta3"])
    assert t == pytest.approx(0.5 * (float(r[0]["P21"]) - float(r[0]["P12"])), rel=1e-12)


def test_eval_threads_deterministic(capsys, params):
    args = ("eval", "--params", params(), "--nx", "4", "--ny", "5", "--load", "couple")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args, "--threads", "4")
    assert a == b


def test_eval_gauge_columns(capsys, params):
    code, out, _ = run(capsys, "eval", "--params", params(), "--model", "GaugeDislocation",
                       "--load", "couple", "--nx", "2", "--ny", "2")
    assert code == 0
    assert out.splitlines()[0] == "x1,x2,e11,e12,e21,e22"


def test_eval_normalization(capsys, params, tmp_path):
    # fields in --normalize none are the raw ones; ell2 scales the grid and u by mu_M
    from relaxed_green import eval_force, load_params

    p = load_params(params())
    _, out, _ = run(capsys, "eval", "--params", params(), "--nx", "2", "--ny", "2",
                    "--x-range", "0.5", "1", "--y-range", "0.5", "1")
    first = rows(out)[0]
    ref = eval_force(p, "RelaxedMicromorphic", (0.5 * p.ell_2, 0.5 * p.ell_2))
    assert float(first["u1"]) == pytest.approx(ref.u1 * p.mu_M, rel=1e-15)
    assert float(first["P12"]) == pytest.approx(ref.P12 * p.mu_M * p.ell_2, rel=1e-15)


def test_out_file(capsys, params, tmp_path):
    dest = tmp_path / "grid.csv"
    code, out, _ = run(capsys, "eval", "--params", params(), "--nx", "2", "--ny", "2",
                       "--out", str(dest))
    assert code == 0 and out == ""
    assert dest.read_text().startswith("x1,x2")


def test_profile(capsys, params):
    code, out, _ = run(capsys, "profile", "--params", params(), "--models",
                       "Micropolar,CoupleStress", "--r-values", "0.5,1", "--quantity", "u2")
    assert code == 0
    assert out.splitlines()[0] == "r,Micropolar,CoupleStress"
    assert len(rows(out)) == 2


def test_profile_figure(capsys):
    code, out, _ = run(capsys, "profile", "--figure", "7")
    assert code == 0
    r = rows(out)
    ratio = float(r[0]["norm_u_ClassicalMicro"]) / float(r[0]["norm_u_ClassicalMacro"])
    assert ratio == pytest.approx(2 / 3, rel=1e-12)


def test_verify_pass_and_report(capsys, params, tmp_path):
    dest = tmp_path / "rep.json"
    code, _, err = run(capsys, "verify", "--params", params(), "--suite", "determinant",
                       "--suite", "transcription", "--out", str(dest))
    assert code == 0 and err == ""
    rep = json.loads(dest.read_text())
    assert rep["passed"] and rep["suites"] == ["determinant", "transcription"]
    assert list(rep["checks"][0]) == ["check", "params", "result", "tolerance", "pass"]


def test_verify_failure_exit(capsys, monkeypatch, params):
    from relaxed_green import suites

    monkeypatch.setitem(suites.SUITES, "determinant",
                        lambda p, label: [suites._record("determinant", label, 1.0, 1e-10, False)])
    code, _, err = run(capsys, "verify", "--params", params(), "--suite", "determinant")
    assert code == 1 and "FAIL determinant" in err


def test_params_table(capsys, params):
    code, out, _ = run(capsys, "params", "--params", params())
    assert code == 0
    table = dict(line.split(",", 1) for line in out.splitlines()[1:])
    assert float(table["mu_M"]) == pytest.approx(1.0)
    assert table["admissible"] == "yes"


def test_params_mu_c_zero_prints_inf(capsys, params):
    data = {"dimensionless": {"g1": 1.2, "g2": 0.0, "g3": 5.0, "g4": 3.0}}
    code, out, _ = run(capsys, "params", "--params", params(data))
    assert code == 0
    assert "ell_2,inf" in out.splitlines()


@pytest.mark.parametrize("argv", [
    ("eval", "--params", "{p}", "--model", "Nope"),
    ("eval", "--params", "{p}", "--load", "torque"),
    ("eval", "--params", "{p}", "--model", "GaugeDislocation"),
    ("eval", "--params", "{p}", "--nx", "1"),
    ("eval", "--params", "/does/not/exist.json"),
    ("profile", "--params", "{p}", "--r-values", "1,0.5"),
    ("verify", "--params", "{p}", "--suite", "nope"),
])
def test_usage_errors(capsys, params, argv):
    p = params()
    code, _, err = run(capsys, *[a.replace("{p}", p) for a in argv])
    assert code == 2 and err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["eval"])
    assert exc.value.code == 2


def test_bad_schema_exit_2(capsys, params):
    code, _, _ = run(capsys, "eval", "--params", params({"raw": {"mu_e": 1}}))
    assert code == 2


def test_inadmissible_exit_3(capsys, params):
    bad = {"raw": {"mu_e": 1, "lambda_e": 1, "mu_m": -0.5, "lambda_m": 1, "mu_c": 1,
                   "L_c": 1, "a1": 1, "a2": 1}}
    code, _, err = run(capsys, "eval", "--params", params(bad))
    assert code == 3 and "mu_m" in err
    # the params command still reports, it does not refuse
    code, out, _ = run(capsys, "params", "--params", params(bad))
    assert code == 0 and "admissible,no" in out


def test_ell2_normalization_needs_mu_c(capsys, params):
    data = {"dimensionless": {"g1": 1.2, "g2": 0.0, "g3": 5.0, "g4": 3.0}}
    code, _, err = run(capsys, "eval", "--params", params(data), "--nx", "2", "--ny", "2")
    assert code == 2 and "ell_2" in err
    code, _, _ = run(capsys, "eval", "--params", params(data), "--nx", "2", "--ny", "2",
                     "--normalize", "lc")
    assert code == 0


def test_fmt():
    assert cli._fmt(math.inf) == "inf"
    assert float(cli._fmt(0.1)) == 0.1
