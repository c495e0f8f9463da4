"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import json
import math
import subprocess
import sys
import time

import pytest

from fdzeta import transform_engine as te
from fdzeta import zeta_kernel as zk
from fdzeta.identity_catalog import SamplePlan, evaluate_identity, get, run_checks
from fdzeta.numerics import Tolerance
from fdzeta.zeta_kernel import FunctionParams as FP
from dualpath import SAMPLERS, disagreements
from oracles import E, ORACLE

TOL = Tolerance(rel=1e-6, abs=1e-9)


@pytest.fixture
def verdict(capsys):
    """Print one PASS/FAIL line (uncaptured) and assert."""
    def report(number, title, ok, detail, elapsed, limit):
        within = elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        with capsys.disabled():
            print(f"\n[acceptance {number}] {status}: {title} ({detail}; "
                  f"{elapsed:.1f}s of {limit:g}s)")
        assert ok, detail
        assert within, f"took {elapsed:.1f}s, limit {limit}s"
    return report


def rel(a, b):
    return abs(a - b) / abs(b)


def test_1_kernel_golden_values(verdict):
    t0 = time.perf_counter()
    checks = {
        "zeta(2)": rel(zk.riemann_zeta(2).value, math.pi ** 2 / 6),
        "zeta(3)": rel(zk.riemann_zeta(3).value, 1.2020569032),
        "zeta(0.5)": rel(zk.riemann_zeta(0.5).value, -1.4603545088),
        "Gamma(1/2)": rel(zk.gamma(0.5).value, math.sqrt(math.pi)),
        "Li2(1/2)": rel(zk.polylog(0.5, 2).value, 0.5822405265),
        "Theta0(1;0)": rel(zk.efd_theta(1, 0, 0).value, math.log(2)),
    }
    worst = max(checks, key=checks.get)
    verdict(1, "kernel golden values", checks[worst] <= 1e-9,
            f"worst {worst} rel {checks[worst]:.1e}", time.perf_counter() - t0, 1.0)


def test_2_dual_path_suite(verdict):
    t0 = time.perf_counter()
    bad = {name: len(disagreements(name)) for name in SAMPLERS}
    failing = {k: v for k, v in bad.items() if v}
    verdict(2, "series vs integral, 200 samples x 9 functions", not failing,
            f"disagreements {failing or 'none'}", time.perf_counter() - t0, 60.0)


def test_3_squared_kernel_identities(verdict):
    t0 = time.perf_counter()
    ids = [f"F0{i}" for i in range(1, 10)]
    report = run_checks(ids, SamplePlan(random_count=0), Tolerance(rel=1e-8, abs=1e-12))
    problems = []
    for ident in report.identities:
        derived = [r for r in ident.samples if r.form != "printed" and r.verdict != "skipped_domain"]
        if not derived or any(r.verdict != "pass" or r.rel_resid > 1e-8 for r in derived):
            problems.append(ident.id)
        if ident.id in ("F03", "F07") and ident.erratum != {"printed_passes": False,
                                                             "derived_passes": True}:
            problems.append(ident.id + " erratum")
    worst = max(r.max_resid for r in report.identities if r.erratum is None)
    verdict(3, "squared-kernel identities F01-F09", not problems,
            f"problems {problems or 'none'}, worst plain rel {worst:.1e}",
            time.perf_counter() - t0, 30.0)


def test_4_parseval_suite(verdict):
    t0 = time.perf_counter()
    problems = []
    for sigma, key in ((1.25, "parseval_zeta_125"), (1.5, "parseval_zeta_15"), (2.0, "parseval_zeta_2")):
        rec = evaluate_identity(get("P12"), {"sigma": sigma}, TOL)
        if rec.verdict != "pass" or rel(rec.lhs, ORACLE[key]) > 1e-6:
            problems.append(f"zeta sigma={sigma}")
    rec = evaluate_identity(get("P14"), {"sigma": 1.0, "nu": 1.0, "x": 0.5}, TOL)
    if rec.verdict != "pass" or rel(rec.lhs, ORACLE["parseval_efd"]) > 1e-6:
        problems.append("eFD")
    report = run_checks(["P17", "P18"], SamplePlan(random_count=10), TOL)
    for ident in report.identities:
        if ident.erratum != {"printed_passes": False, "derived_passes": True}:
            problems.append(ident.id)
    verdict(4, "Parseval line integrals", not problems, f"problems {problems or 'none'}",
            time.perf_counter() - t0, 180.0)


OMEGA_ZERO_POINTS = [
    ("D01", {"sigma": 1.5, "nu": 0.5, "x": 0.5}, 2 * math.pi * math.exp(-0.75) / math.expm1(1.5)),
    ("D02", {"sigma": 1.5, "nu": 0.5, "x": 0.5}, 2 * math.pi * math.exp(-0.75) / (math.exp(1.5) + 1)),
    ("D03", {"sigma": 1.5, "nu": 1.5, "z": 0.5}, 2 * math.pi * math.exp(-0.5) / (E - 0.5)),
    ("D04", {"sigma": 1.5, "z": 0.5}, math.pi / (E - 0.5)),
    ("D05", {"sigma": 2.0, "x": 0.5}, 2 * math.pi / math.expm1(1.5)),
    ("D06", {"sigma": 1.5, "x": 0.5}, 2 * math.pi / (math.exp(0.5) + 1)),
    ("D07", {"sigma": 2.0, "nu": 1.5}, 2 * math.pi * math.exp(-0.5) / (E - 1)),
    ("D08", {"sigma": 0.5}, 2 * math.pi / (E + 1)),
    ("D09", {"sigma": 1.5}, 2 * math.pi / (E - 1)),
]


def test_5_omega_zero_integrals(verdict):
    t0 = time.perf_counter()
    problems = []
    for identity, params, closed in OMEGA_ZERO_POINTS:
        rec = evaluate_identity(get(identity), params, TOL, form="derived" if get(identity).erratum else None)
        if rec.verdict != "pass" or rel(rec.lhs, closed) > 1e-6:
            problems.append(identity)
    strip = run_checks(["D10"], SamplePlan(random_count=10), TOL).identities[0]
    if strip.erratum != {"printed_passes": False, "derived_passes": True}:
        problems.append("D10 erratum")
    rec = evaluate_identity(get("D10"), {"sigma": 0.5}, TOL, form="derived")
    if rel(rec.lhs, ORACLE["strip_integral"]) > 1e-6:
        problems.append("D10 value")
    verdict(5, "omega = 0 integral formulas", not problems,
            f"problems {problems or 'none'}; strip integral {rec.lhs.real:.10f}",
            time.perf_counter() - t0, 120.0)


def test_6_closing_identities(verdict):
    t0 = time.perf_counter()
    problems = []
    for nu in (1.0, 2.0, 3.0):
        for s in (1.5, 2.0, 3.5):
            for x in (0.0, 0.5, 2.0):
                rec = evaluate_identity(get("X02"), {"nu": nu, "s": s, "x": x}, TOL)
                if rec.verdict != "pass" or rec.abs_resid > 1e-10 * abs(rec.rhs):
                    problems.append(f"X02 {nu},{s},{x}")
        rec = evaluate_identity(get("X03"), {"sigma": 2.0, "nu": nu}, TOL)
        if rec.verdict != "pass" or rel(rec.lhs, 2 * math.pi * math.exp(-nu)) > 1e-7:
            problems.append(f"X03 nu={nu}")
    x01 = run_checks(["X01"], SamplePlan(grid=({"sigma": 1.5, "rho": 1.5},), random_count=0),
                     TOL).identities[0]
    derived = [r for r in x01.samples if r.form == "derived"][0]
    brute = te.parseval_integral("riemann_zeta", FP(s=1.5), "gamma", FP(s=1.5)).value
    if x01.erratum != {"printed_passes": False, "derived_passes": True}:
        problems.append("X01 erratum")
    if rel(derived.rhs, ORACLE["gamma_zeta_parseval"]) > 1e-12 or rel(brute, derived.rhs) > 1e-6:
        problems.append("X01 value")
    verdict(6, "closing identities", not problems,
            f"problems {problems or 'none'}; gamma-zeta Parseval {derived.rhs.real:.10f}",
            time.perf_counter() - t0, 60.0)


def test_7_transform_pairs(verdict):
    t0 = time.perf_counter()
    worst, problems = 0.0, []
    for i in range(1, 11):
        ident = run_checks([f"T{i:02d}"], SamplePlan(random_count=0), Tolerance(rel=1e-7, abs=1e-9)).identities[0]
        worst = max(worst, ident.max_resid)
        if ident.verdict != "pass" or len(ident.samples) != 3:
            problems.append(ident.id)
    verdict(7, "Fourier representations on the 3-point tau grid", not problems and worst <= 1e-7,
            f"problems {problems or 'none'}, worst residual {worst:.1e}",
            time.perf_counter() - t0, 120.0)


def test_8_determinism(verdict, tmp_path):
    t0 = time.perf_counter()
    outputs, codes = [], []
    for k in range(2):
        path = tmp_path / f"run{k}.json"
        proc = subprocess.run([sys.executable, "-m", "fdzeta", "check", "--all", "--seed", "42",
                               "--out", str(path)], capture_output=True, text=True)
        codes.append(proc.returncode)
        outputs.append(path.read_bytes())
    n = len(json.loads(outputs[0])["identities"])
    ok = outputs[0] == outputs[1] and codes == [0, 0] and n >= 30
    verdict(8, "check --all --seed 42 twice is byte-identical", ok,
            f"exit codes {codes}, {n} identities, identical={outputs[0] == outputs[1]}",
            time.perf_counter() - t0, 1200.0)
