import io
import json
import subprocess
import sys

import pytest

from fdzeta.cli import main, parse_complex
from fdzeta.identity_catalog import known_ids, report_from_json


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_parse_complex():
    assert parse_complex("2") == 2 + 0j
    assert parse_complex("0.5,14.1") == complex(0.5, 14.1)
    with pytest.raises(Exception):
        parse_complex("1,2,3")


def test_eval_zeta_two():
    code, out = run("eval", "riemann-zeta", "--s", "2")
    assert code == 0
    assert out.startswith("value: 1.64493406684822")
    assert "abs_err:" in out and "method: series" in out


def test_eval_complex_argument_format():
    code, out = run("eval", "riemann-zeta", "--s", "0.5,14.134725")
    assert code == 0
    assert " - i·1.11020" in out


def test_eval_ebe():
    code, out = run("eval", "ebe", "--s", "2", "--x", "1", "--nu", "0")
    assert code == 0
    assert "0.40875428734889" in out


def test_eval_pole_is_a_domain_error(capsys):
    code, _ = run("eval", "riemann-zeta", "--s", "1")
    assert code == 2
    assert "pole" in capsys.readouterr().err


def test_eval_domain_message_names_condition(capsys):
    code, _ = run("eval", "be", "--s", "2", "--mu", "0.5")
    assert code == 2
    assert "mu <= 0" in capsys.readouterr().err


def test_eval_strip_band():
    assert run("eval", "riemann-zeta-strip", "--s", "0.5")[0] == 0
    assert run("eval", "riemann-zeta-strip", "--s", "1.5")[0] == 2


@pytest.mark.parametrize("argv", [
    ("eval", "nope", "--s", "2"),
    ("eval", "riemann-zeta"),
    ("eval", "riemann-zeta", "--s", "a,b"),
    ("check", "NOPE"),
    ("check",),
    ("frobnicate",),
    ("--format", "xml", "list"),
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 64


def test_list():
    code, out = run("list")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == len(known_ids())
    assert any(l.startswith("F01 Eq.(2.1)") for l in lines)
    marked = {l.split()[0] for l in lines if " erratum " in l}
    assert {"F03", "F07", "X01"} <= marked
    assert "F01" not in marked


def test_check_f03_erratum(tmp_path):
    path = tmp_path / "r.json"
    code, out = run("check", "F03", "--out", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert data["identities"][0]["erratum"] == {"printed_passes": False, "derived_passes": True}
    assert data["seed"] == 42 and data["tolerances"] == {"rel": 1e-6, "abs": 1e-9}
    assert "F03" in out


def test_check_global_flags_before_or_after(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run("--seed", "5", "--samples", "2", "check", "F01", "--out", str(a))[0] == 0
    assert run("check", "F01", "--seed", "5", "--samples", "2", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["seed"] == 5
    assert len(data["identities"][0]["samples"]) == len(
        report_from_json(data).identities[0].samples)


def test_check_formats(tmp_path):
    csv_path = tmp_path / "r.csv"
    assert run("check", "F09", "--format", "csv", "--out", str(csv_path))[0] == 0
    assert csv_path.read_text().startswith("id,equation,form,params")
    code, out = run("check", "F09", "--format", "md", "--samples", "0")
    assert code == 0 and out.startswith("# Identity check")


def test_check_failure_exit_code():
    # at an unattainable tolerance the line-integral identities fail
    assert run("check", "P12", "--tol-rel", "1e-30", "--tol-abs", "1e-300", "--samples", "0")[0] == 1


def test_fourier_examples():
    code, out = run("fourier", "riemann-zeta", "--sigma", "2", "--omega", "0")
    assert code == 0 and "closed_form: 1.4587992686" in out
    code, out = run("fourier", "riemann-zeta-strip", "--sigma", "0.5", "--omega", "0")
    assert code == 0 and "closed_form: -1.0478290060" in out
    code, out = run("fourier", "efd", "--sigma", "1", "--x", "0", "--nu", "0", "--omega", "1")
    assert code == 0
    resid = float(out.split("residual:")[1])
    assert resid <= 1e-6


def test_fourier_band_violation():
    assert run("fourier", "riemann-zeta", "--sigma", "-0.5")[0] == 2
    assert run("fourier", "be", "--sigma", "2", "--mu", "1")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fdzeta", "eval", "gamma", "--s", "0.5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "1.7724538509055" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "fdzeta", "check", "NOPE"],
                          capture_output=True, text=True)
    assert proc.returncode == 64
