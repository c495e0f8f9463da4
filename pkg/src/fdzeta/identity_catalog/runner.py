"""Sampling, per-sample evaluation, aggregation and report serialisation."""

from __future__ import annotations

import csv
import io
import json
import math
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from statistics import median
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import DomainError
from ..numerics import EvalResult, Tolerance
from .registry import IdentitySpec, Params, get

REPORT_VERSION = "1.0"
PASS, FAIL, SKIPPED, NOT_CONVERGED = "pass", "fail", "skipped_domain", "not_converged"
ERRATUM_CONFIRMED = "erratum_confirmed"
ERRATUM_REJECTED = "erratum_rejected"
ERRATUM_AMBIGUOUS = "erratum_ambiguous"


@dataclass(frozen=True)
class SamplePlan:
    """Explicit grid (None: each identity's default grid) plus seeded draws."""

    grid: Optional[Tuple[Params, ...]] = None
    random_count: int = 10
    seed: int = 42

    def __post_init__(self):
        if self.random_count < 0:
            raise ValueError("random_count must be >= 0")

    def samples(self, spec: IdentitySpec) -> List[Params]:
        points = [dict(p) for p in self.grid] if self.grid is not None else spec.default_grid()
        base = points[0] if points else {}
        for i in range(self.random_count):
            points.append(random_sample(spec, self.seed, i, base))
        return points


def sample_rng(seed: int, identity_id: str, index: int) -> np.random.Generator:
    """Generator that depends on (seed, id, index) only."""
    return np.random.default_rng([seed & (2**64 - 1), zlib.crc32(identity_id.encode()), index])


def random_sample(spec: IdentitySpec, seed: int, index: int, base: Params) -> Params:
    """Uniform draw over each axis' range, snapped to 6 decimals.

    Draws are repeated (from the same generator) until the point lies in
    the identity's domain, at most ``MAX_DRAWS`` times.  Entries of
    ``base`` that are not axes are kept.
    """
    rng = sample_rng(seed, spec.id, index)
    for _ in range(MAX_DRAWS):
        point = _draw(spec, rng, base)
        if spec.check_domain(point) is None:
            break
    return point


MAX_DRAWS = 100


def _draw(spec: IdentitySpec, rng: np.random.Generator, base: Params) -> Params:
    point = dict(base)
    for axis in spec.axes:
        lo, hi = axis.random_range()
        if axis.integer:
            v = float(rng.integers(int(math.ceil(lo)), int(math.floor(hi)) + 1))
        elif axis.values is not None and axis.span is None:
            v = float(rng.choice(np.asarray(axis.values, dtype=float)))
        else:
            v = round(float(rng.uniform(lo, hi)), 6)
            if axis.lower is not None and axis.strict:
                v = max(v, axis.lower + 0.25)
        point[axis.name] = v
    return point


@dataclass
class ResidualRecord:
    params: Params
    lhs: Optional[complex]
    rhs: Optional[complex]
    abs_resid: float
    rel_resid: float
    verdict: str
    form: Optional[str] = None
    diagnostics: str = ""

    def to_json(self) -> dict:
        out = {
            "params": {k: _num(v) for k, v in self.params.items()},
            "lhs": _pair(self.lhs),
            "rhs": _pair(self.rhs),
            "abs_resid": _num(self.abs_resid),
            "rel_resid": _num(self.rel_resid),
            "verdict": self.verdict,
        }
        if self.form is not None:
            out["form"] = self.form
        return out


@dataclass
class IdentityReport:
    id: str
    equation: str
    samples: List[ResidualRecord]
    erratum: Optional[Dict[str, bool]]
    verdict: str

    @property
    def max_resid(self) -> float:
        vals = [r.rel_resid for r in self.samples if math.isfinite(r.rel_resid)]
        return max(vals) if vals else float("nan")

    @property
    def median_resid(self) -> float:
        vals = [r.rel_resid for r in self.samples if math.isfinite(r.rel_resid)]
        return median(vals) if vals else float("nan")

    @property
    def ok(self) -> bool:
        """Pass for plain identities; exactly one passing form for errata."""
        if self.erratum is None:
            return self.verdict == PASS
        return self.erratum["printed_passes"] != self.erratum["derived_passes"]

    def to_json(self) -> dict:
        return {"id": self.id, "equation": self.equation,
                "samples": [r.to_json() for r in self.samples],
                "erratum": self.erratum, "verdict": self.verdict}


@dataclass
class CheckReport:
    seed: int
    tolerance: Tolerance
    identities: List[IdentityReport] = field(default_factory=list)
    version: str = REPORT_VERSION

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.identities)

    def to_json(self) -> dict:
        return {"version": self.version, "seed": self.seed,
                "tolerances": {"rel": self.tolerance.rel, "abs": self.tolerance.abs},
                "identities": [r.to_json() for r in self.identities]}

    def dumps(self, fmt: str = "json") -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2) + "\n"
        if fmt == "csv":
            return _to_csv(self)
        if fmt == "md":
            return _to_md(self)
        raise ValueError(f"unknown format {fmt!r}")


def _num(v):
    if v is None:
        return None
    v = float(v)
    return v if math.isfinite(v) else None


def _pair(z):
    if z is None:
        return None
    return [_num(z.real), _num(z.imag)]


def _resid(lhs: complex, rhs: complex) -> Tuple[float, float]:
    a = abs(lhs - rhs)
    return a, a / max(1.0, abs(lhs))


def effective_tol(spec: IdentitySpec, tol: Tolerance) -> Tolerance:
    """The tighter of the requested tolerance and the identity's budget."""
    b = spec.tol_budget
    return Tolerance(rel=min(tol.rel, b.rel), abs=min(tol.abs, b.abs))


def _side_ok(r: EvalResult, tol: Tolerance) -> bool:
    # a side that ran out of budget but whose error is far below the
    # residual tolerance still counts
    return r.converged or r.abs_err <= 0.1 * tol.target(abs(r.value))


def evaluate_identity(spec: IdentitySpec, params: Params, tol: Tolerance,
                      form: Optional[str] = None) -> ResidualRecord:
    """One sample.  ``form`` selects 'printed' or 'derived' for errata."""
    if spec.check_domain(params) is not None:
        return ResidualRecord(params, None, None, math.nan, math.nan, SKIPPED, form,
                              spec.check_domain(params))
    tol = effective_tol(spec, tol)
    lhs_eval, rhs_eval = spec.lhs, spec.rhs
    if form == "printed" and spec.erratum is not None:
        lhs_eval = spec.erratum.printed_lhs or lhs_eval
        rhs_eval = spec.erratum.printed_rhs or rhs_eval
    try:
        lhs = lhs_eval(params, tol)
        rhs = rhs_eval(params, tol)
    except DomainError as exc:
        return ResidualRecord(params, None, None, math.nan, math.nan, FAIL, form, str(exc))
    except (ArithmeticError, ValueError, RuntimeError) as exc:
        return ResidualRecord(params, None, None, math.nan, math.nan, NOT_CONVERGED, form,
                              f"{type(exc).__name__}: {exc}")
    a, r = _resid(lhs.value, rhs.value)
    if not (math.isfinite(a) and _side_ok(lhs, tol) and _side_ok(rhs, tol)):
        verdict = NOT_CONVERGED
        diag = f"lhs err {lhs.abs_err:.3g} ({lhs.method}), rhs err {rhs.abs_err:.3g} ({rhs.method})"
    else:
        verdict = PASS if a <= tol.abs + tol.rel * max(1.0, abs(lhs.value)) else FAIL
        diag = ""
    return ResidualRecord(params, lhs.value, rhs.value, a, r, verdict, form, diag)


def _aggregate(verdicts: Sequence[str]) -> str:
    active = [v for v in verdicts if v != SKIPPED]
    if not active:
        return SKIPPED
    if all(v == PASS for v in active):
        return PASS
    if any(v == FAIL for v in active):
        return FAIL
    return NOT_CONVERGED


def _jobs(spec: IdentitySpec, plan: SamplePlan):
    forms = ("printed", "derived") if spec.erratum is not None else (None,)
    return [(spec, p, f) for p in plan.samples(spec) for f in forms]


def run_checks(ids: Sequence[str], plan: SamplePlan = SamplePlan(),
               tol: Tolerance = Tolerance(rel=1e-6, abs=1e-9),
               workers: int = 1) -> CheckReport:
    """Evaluate every listed identity over ``plan``.

    Jobs may run on a thread pool; results are collected in (id, sample,
    form) order so the report does not depend on scheduling.
    """
    specs = [get(i) for i in ids]
    jobs = [job for spec in specs for job in _jobs(spec, plan)]

    def run(job):
        spec, params, form = job
        return evaluate_identity(spec, params, tol, form)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(run, jobs))
    else:
        records = [run(j) for j in jobs]

    report = CheckReport(seed=plan.seed, tolerance=tol)
    k = 0
    for spec in specs:
        n = len(_jobs(spec, plan))
        recs, k = records[k:k + n], k + n
        if spec.erratum is None:
            report.identities.append(IdentityReport(spec.id, spec.equation, recs, None,
                                                    _aggregate([r.verdict for r in recs])))
            continue
        printed = _aggregate([r.verdict for r in recs if r.form == "printed"]) == PASS
        derived = _aggregate([r.verdict for r in recs if r.form == "derived"]) == PASS
        if derived and not printed:
            verdict = ERRATUM_CONFIRMED
        elif printed and not derived:
            verdict = ERRATUM_REJECTED
        else:
            verdict = ERRATUM_AMBIGUOUS
        report.identities.append(IdentityReport(
            spec.id, spec.equation, recs,
            {"printed_passes": printed, "derived_passes": derived}, verdict))
    return report


# ---------------------------------------------------------------------------
# serialisation
# ---------------------------------------------------------------------------

CSV_FIELDS = ("id", "equation", "form", "params", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
              "abs_resid", "rel_resid", "verdict")


def _to_csv(report: CheckReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for ident in report.identities:
        for r in ident.samples:
            lhs, rhs = _pair(r.lhs) or [None, None], _pair(r.rhs) or [None, None]
            w.writerow([ident.id, ident.equation, r.form or "",
                        json.dumps(r.to_json()["params"], sort_keys=True),
                        *("" if v is None else repr(v) for v in (*lhs, *rhs)),
                        *("" if v is None else repr(v) for v in (_num(r.abs_resid), _num(r.rel_resid))),
                        r.verdict])
    return buf.getvalue()


def _to_md(report: CheckReport) -> str:
    lines = [f"# Identity check (seed {report.seed}, rel {report.tolerance.rel:g}, "
             f"abs {report.tolerance.abs:g})", "",
             "| id | equation | samples | max rel resid | median rel resid | erratum | verdict |",
             "|---|---|---|---|---|---|---|"]
    for r in report.identities:
        err = "" if r.erratum is None else (
            f"printed {'pass' if r.erratum['printed_passes'] else 'fail'}, "
            f"derived {'pass' if r.erratum['derived_passes'] else 'fail'}")
        lines.append(f"| {r.id} | {r.equation} | {len(r.samples)} | {r.max_resid:.3g} | "
                     f"{r.median_resid:.3g} | {err} | {r.verdict} |")
    return "\n".join(lines) + "\n"


def report_from_json(data: dict) -> CheckReport:
    """Inverse of ``CheckReport.to_json`` (non-finite numbers come back as NaN)."""
    def num(v):
        return math.nan if v is None else float(v)

    def cplx(v):
        return None if v is None else complex(num(v[0]), num(v[1]))

    idents = []
    for d in data["identities"]:
        recs = [ResidualRecord(dict(s["params"]), cplx(s["lhs"]), cplx(s["rhs"]),
                               num(s["abs_resid"]), num(s["rel_resid"]), s["verdict"],
                               s.get("form")) for s in d["samples"]]
        idents.append(IdentityReport(d["id"], d["equation"], recs, d["erratum"], d["verdict"]))
    tol = Tolerance(rel=data["tolerances"]["rel"], abs=data["tolerances"]["abs"])
    return CheckReport(data["seed"], tol, idents, data["version"])
