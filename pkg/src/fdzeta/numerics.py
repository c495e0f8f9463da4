"""Floating-point substrate: series summation and quadrature.

Everything here is a pure function of its inputs.  Integrands are expected
to be numpy-vectorised: they receive a 1-D array of abscissae and return an
array whose last axis matches it.  Leading axes, if any, are treated as
independent components of a vector-valued integral (used to integrate a
whole batch of Mellin integrals sharing one set of nodes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .errors import DomainError

EPS = np.finfo(float).eps

# Flags carried by EvalResult.
CONVERGED = "converged"
TRUNCATED = "truncated"
NEAR_SINGULARITY = "near_singularity"
DOMAIN_BOUNDARY = "domain_boundary"

METHODS = ("series", "quadrature", "closed_form")


@dataclass(frozen=True)
class Tolerance:
    """Accuracy target.  A candidate error ``e`` for value ``v`` is accepted
    when ``e <= abs + rel * |v|``."""

    rel: float = 1e-10
    abs: float = 1e-12
    max_subdivisions: int = 4000
    max_terms: int = 200_000

    def __post_init__(self):
        if not (self.rel > 0 and self.abs > 0):
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1 or self.max_terms < 1:
            raise ValueError("budgets must be positive integers")

    def accepts(self, err, value) -> bool:
        return err <= self.abs + self.rel * abs(value)

    def target(self, value) -> float:
        return self.abs + self.rel * abs(value)

    def tightened(self, factor=0.5) -> "Tolerance":
        return replace(self, rel=self.rel * factor, abs=self.abs * factor)


FUNCTION_TOL = Tolerance()
LINE_TOL = Tolerance(rel=1e-8, abs=1e-12)


@dataclass(frozen=True)
class EvalResult:
    value: complex
    abs_err: float
    method: str
    flags: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "abs_err", float(self.abs_err))
        object.__setattr__(self, "flags", frozenset(self.flags))

    @property
    def converged(self) -> bool:
        return CONVERGED in self.flags

    @property
    def real(self) -> float:
        return self.value.real

    def __complex__(self):
        return self.value

    def scaled(self, factor, extra_err=0.0) -> "EvalResult":
        """Multiply by an exact (or nearly exact) factor."""
        factor = complex(factor)
        return replace(self, value=self.value * factor,
                       abs_err=self.abs_err * abs(factor) + extra_err)


def _flags(converged, *extra):
    out = set(f for f in extra if f)
    if converged:
        out.add(CONVERGED)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Series
# ---------------------------------------------------------------------------

class _CompensatedSum:
    """Neumaier summation for complex terms (real and imaginary parts
    compensated independently)."""

    __slots__ = ("re", "im", "cre", "cim", "absum")

    def __init__(self):
        self.re = self.im = self.cre = self.cim = 0.0
        self.absum = 0.0

    @staticmethod
    def _add(s, c, x):
        t = s + x
        if abs(s) >= abs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        return t, c

    def add(self, z):
        self.re, self.cre = self._add(self.re, self.cre, z.real)
        self.im, self.cim = self._add(self.im, self.cim, z.imag)
        self.absum += abs(z)

    @property
    def value(self):
        return complex(self.re + self.cre, self.im + self.cim)


@lru_cache(maxsize=64)
def cvz_weights(n: int) -> np.ndarray:
    """Weights ``w_k = 1 - d_k/d_n`` (k < n) of the Chebyshev-averaged
    partial sums for alternating series.

    ``sum(w[k] * t[k])`` is a convex combination of the partial sums of
    ``sum(t)``; for alternating terms whose magnitudes are moments of a
    positive measure the error decays like ``(3 + sqrt 8) ** -n``.
    """
    if n < 1:
        raise ValueError("depth must be positive")
    d = np.empty(n + 1)
    term = 1.0
    acc = 1.0
    d[0] = acc
    for i in range(n):
        term *= 4.0 * (n + i) * (n - i) / ((2 * i + 1) * (2 * i + 2))
        acc += term
        d[i + 1] = acc
    w = 1.0 - d[:n] / d[n]
    w.flags.writeable = False
    return w


_MAX_CVZ_DEPTH = 256


def sum_series(term: Callable[[int], complex], tol: Tolerance = FUNCTION_TOL,
               mode: str = "direct", start: int = 0,
               tail: Optional[Callable[[int], tuple]] = None) -> EvalResult:
    """Sum ``term(n)`` for ``n = start, start+1, ...``.

    Parameters
    ----------
    term : callable
        Index to complex term.
    tol : Tolerance
    mode : {"direct", "alternating_accelerated"}
        ``direct`` adds terms with compensated summation and stops once a
        geometric tail bound is below the target.  Series with only
        algebraic decay never satisfy that bound; for those pass ``tail``.
        ``alternating_accelerated`` averages partial sums with Chebyshev
        weights, doubling the depth until successive estimates agree; the
        last increment is reported as the error.
    tail : callable, optional
        ``tail(N) -> (estimate, error)`` for the remainder ``sum_{n>=N}``.
        Consulted by ``direct`` mode at power-of-two checkpoints.

    Returns
    -------
    EvalResult
        Flagged not-converged (with the best estimate) when ``max_terms``
        is exhausted.
    """
    if mode == "direct":
        return _sum_direct(term, tol, start, tail)
    if mode == "alternating_accelerated":
        return _sum_alternating(term, tol, start)
    raise ValueError(f"unknown summation mode {mode!r}")


def _sum_direct(term, tol, start, tail):
    acc = _CompensatedSum()
    prev_mag = None
    ratios = []
    checkpoint = 16
    for k in range(tol.max_terms):
        t = complex(term(start + k))
        acc.add(t)
        mag = abs(t)
        if not math.isfinite(mag):
            return EvalResult(acc.value, math.inf, "series", _flags(False, TRUNCATED))
        if prev_mag is not None:
            ratios.append(mag / prev_mag if prev_mag > 0 else 0.0)
            del ratios[:-3]
        prev_mag = mag
        s = acc.value
        roundoff = 4 * EPS * acc.absum
        if mag == 0.0 and len(ratios) == 3 and max(ratios) == 0.0:
            return EvalResult(s, roundoff, "series", _flags(True))
        if len(ratios) == 3:
            r = max(ratios)
            if r < 1.0:
                bound = mag * r / (1.0 - r)
                if bound <= tol.target(s):
                    return EvalResult(s, bound + roundoff, "series", _flags(True))
        if tail is not None and k + 1 == checkpoint:
            checkpoint *= 2
            est, err = tail(start + k + 1)
            total = s + complex(est)
            if err <= tol.target(total):
                return EvalResult(total, err + roundoff, "series", _flags(True))
    s = acc.value
    est_err = prev_mag * tol.max_terms if prev_mag is not None else math.inf
    return EvalResult(s, est_err, "series", _flags(False, TRUNCATED))


def _sum_alternating(term, tol, start):
    terms = []

    def ensure(n):
        while len(terms) < n:
            terms.append(complex(term(start + len(terms))))

    def estimate(n):
        ensure(n)
        t = np.asarray(terms[:n])
        w = cvz_weights(n)
        return complex(np.dot(w, t)), float(np.dot(w, np.abs(t)))

    n = 8
    s_prev, _ = estimate(n)
    while True:
        n2 = 2 * n
        if n2 > min(_MAX_CVZ_DEPTH, tol.max_terms):
            return EvalResult(s_prev, math.inf, "series", _flags(False, TRUNCATED))
        s_next, absum = estimate(n2)
        inc = abs(s_next - s_prev)
        roundoff = 4 * EPS * absum
        if inc <= tol.target(s_next):
            return EvalResult(s_next, inc + roundoff, "series", _flags(True))
        s_prev, n = s_next, n2


# ---------------------------------------------------------------------------
# Gauss-Kronrod (10/21 point) adaptive quadrature
# ---------------------------------------------------------------------------

# QUADPACK qk21 constants.
_XK = np.array([
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0,
    -0.148874338981631210884826001129720, -0.294392862701460198131126603103866,
    -0.433395394129247190799265943165784, -0.562757134668604683339000099272694,
    -0.679409568299024406234327365114874, -0.780817726586416897063717578345042,
    -0.865063366688984510732096688423493, -0.930157491355708226001207180059508,
    -0.973906528517171720077964012084452, -0.995657163025808080735527280689003])
_WG = np.array([
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338, 0.295524224714752870173892994651338,
    0.269266719309996355091226921569469, 0.219086362515982043995534934228163,
    0.149451349150580593145776339657697, 0.066671344308688137593568809893332])
_WK = np.array([
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
    0.147739104901338491374841515972068, 0.142775938577060080797094273138717,
    0.134709217311473325928054001771707, 0.123491976262065851077958109831074,
    0.109387158802297641899210590325805, 0.093125454583697605535065465083366,
    0.075039674810919952767043140916190, 0.054755896574351996031381300244580,
    0.032558162307964727478818972459390, 0.011694638867371874278064396062192])


def _gk_panels(f, lo, hi):
    c = 0.5 * (lo + hi)
    h = 0.5 * (hi - lo)
    x = c[:, None] + h[:, None] * _XK[None, :]
    m = lo.size
    with np.errstate(over="ignore", invalid="ignore", under="ignore", divide="ignore"):
        fx = np.asarray(f(x.ravel()))
    fx = fx.reshape(fx.shape[:-1] + (m, 21))
    kron = (fx @ _WK) * h
    gauss = (fx[..., 1::2] @ _WG) * h
    absint = (np.abs(fx) @ _WK) * h
    err = np.abs(kron - gauss)
    if err.ndim > 1:
        err = err.reshape(-1, m).max(axis=0)
        absint = absint.reshape(-1, m).max(axis=0)
    err = np.where(np.isfinite(err), err, np.inf)
    return kron, err, absint


@dataclass
class QuadOutcome:
    value: object          # complex scalar or array of components
    abs_err: float
    converged: bool
    intervals: int
    abs_integral: float    # estimate of the integral of |f| (max over components)


def adaptive_quad(f, a: float, b: float, tol: Tolerance = FUNCTION_TOL,
                  panels: int = 8) -> QuadOutcome:
    """Globally adaptive G10/K21 rule on ``[a, b]``.

    Each refinement round bisects every interval whose error exceeds its
    even share of the target, and evaluates all new panels in one
    vectorised call.  The reported error is the sum of ``|K21 - G10|``
    over intervals plus a rounding floor.
    """
    edges = np.linspace(a, b, max(1, panels) + 1)
    lo, hi = edges[:-1].copy(), edges[1:].copy()
    kron, err, absint = _gk_panels(f, lo, hi)
    while True:
        total = kron.sum(axis=-1)
        mag = float(np.max(np.abs(total))) if np.ndim(total) else abs(total)
        total_err = float(err.sum())
        floor = 50 * EPS * float(absint.sum())
        target = max(tol.target(mag), floor)
        if total_err <= target:
            return QuadOutcome(_as_value(total), total_err + floor, True, lo.size,
                               float(absint.sum()))
        room = tol.max_subdivisions - lo.size
        width = hi - lo
        splittable = width > 64 * EPS * np.maximum(np.abs(lo), np.abs(hi)) + 1e-300
        share = target / lo.size
        pick = (err > share) & splittable
        if not pick.any() or room <= 0:
            return QuadOutcome(_as_value(total), total_err + floor, False, lo.size,
                               float(absint.sum()))
        idx = np.flatnonzero(pick)
        if idx.size > room:
            idx = idx[np.argsort(-err[idx])[:room]]
        mid = 0.5 * (lo[idx] + hi[idx])
        new_lo = np.concatenate([lo[idx], mid])
        new_hi = np.concatenate([mid, hi[idx]])
        k2, e2, a2 = _gk_panels(f, new_lo, new_hi)
        keep = np.ones(lo.size, dtype=bool)
        keep[idx] = False
        lo = np.concatenate([lo[keep], new_lo])
        hi = np.concatenate([hi[keep], new_hi])
        kron = np.concatenate([kron[..., keep], k2], axis=-1)
        err = np.concatenate([err[keep], e2])
        absint = np.concatenate([absint[keep], a2])


def _as_value(total):
    if np.ndim(total) == 0:
        return complex(total)
    return np.asarray(total, dtype=complex)


# ---------------------------------------------------------------------------
# Semi-infinite integrals via t = e^y
# ---------------------------------------------------------------------------

_LEFT_PROBES = (-0.5, -1.0, -2.0, -4.0, -8.0, -16.0, -32.0, -64.0, -128.0,
                -256.0, -512.0, -740.0)
_RIGHT_PROBES = (0.5, 1.0, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0, 24.0, 32.0,
                 48.0, 64.0, 128.0, 256.0, 512.0, 700.0)


def _magnitude(g, y):
    with np.errstate(over="ignore", invalid="ignore", under="ignore", divide="ignore"):
        v = np.asarray(g(np.array([y])))
    m = np.abs(v)
    if not np.all(np.isfinite(m)):
        return math.inf
    return float(m.max())


def _find_cut(g, probes, thresh, side):
    """Walk outward until |g| drops below ``thresh`` while decreasing.

    Returns ``(cut, tail_estimate, ok)``; raises DomainError when the
    integrand stops decaying (non-integrable endpoint).
    """
    prev_y, prev_m = 0.0, _magnitude(g, 0.0)
    for y in probes:
        m = _magnitude(g, y)
        if not math.isfinite(m):
            raise DomainError(f"finite integrand near t={side}", f"non-finite value at y={y}")
        if m == 0.0:
            return y, 0.0, True
        decreasing = m < prev_m
        if m < thresh and decreasing:
            rate = math.log(prev_m / m) / abs(y - prev_y)
            return y, m / rate, True
        if abs(y) >= 16 and not decreasing and prev_m > 0:
            raise DomainError(f"integrable behaviour at t={side}",
                              "integrand not decaying after t = e^y")
        prev_y, prev_m = y, m
    rate = 0.0
    return prev_y, (prev_m / rate if rate > 0 else math.inf), False


def integrate_log_variable(g, tol: Tolerance = FUNCTION_TOL, panel_width: float = 2.0):
    """Integrate ``g(y)`` over the real line where ``g`` decays at both ends
    (the image of a semi-infinite Mellin integral under ``t = e^y``).

    Returns ``(QuadOutcome, truncation_error)``.
    """
    thresh = tol.abs / 100.0
    lo, tail_lo, ok_lo = _find_cut(g, _LEFT_PROBES, thresh, "0")
    hi, tail_hi, ok_hi = _find_cut(g, _RIGHT_PROBES, thresh, "infinity")
    panels = max(8, int(math.ceil((hi - lo) / panel_width)))
    out = adaptive_quad(g, lo, hi, tol, panels)
    trunc = tail_lo + tail_hi
    out.converged = out.converged and ok_lo and ok_hi
    return out, trunc


def integrate_semi_infinite(kernel: Callable, tol: Tolerance = FUNCTION_TOL) -> EvalResult:
    """Compute ``int_0^inf kernel(t) dt``.

    The substitution ``t = e^y`` maps an integrable power singularity
    ``t^(sigma-1)`` at the origin to exponential decay ``e^(sigma*y)`` as
    ``y -> -inf``; the line is then cut where ``|integrand|`` drops below
    ``tol.abs / 100`` and the remainder integrated adaptively.

    Raises
    ------
    DomainError
        When the transformed integrand does not decay at one end.
    """
    def g(y):
        t = np.exp(y)
        return np.asarray(kernel(t)) * t

    out, trunc = integrate_log_variable(g, tol)
    return _to_result(out, trunc, tol, "quadrature")


def _to_result(out, trunc, tol, method):
    flags = _flags(out.converged, None if out.converged else TRUNCATED)
    return EvalResult(out.value, out.abs_err + trunc, method, flags)


# ---------------------------------------------------------------------------
# Whole real line with caller-supplied tail bound
# ---------------------------------------------------------------------------

T_CAP = 400.0


def choose_cutoff(decay_bound: Callable[[float], float], threshold: float,
                  t_cap: float = T_CAP):
    """Smallest T (to bisection accuracy) with ``decay_bound(T) <= threshold``.

    Returns ``(T, reached)``.
    """
    t = 1.0
    while not decay_bound(t) <= threshold:  # NaN counts as not reached
        if t >= t_cap:
            return t_cap, False
        t = min(2.0 * t, t_cap)
    lo, hi = t / 2.0, t
    if decay_bound(lo) <= threshold:
        return lo, True
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        if decay_bound(mid) <= threshold:
            hi = mid
        else:
            lo = mid
        if hi - lo < 1e-3 * hi:
            break
    return hi, True


def integrate_real_line(f: Callable, decay_bound: Callable[[float], float],
                        tol: Tolerance = LINE_TOL, t_cap: float = T_CAP,
                        panel_width: float = 1.0) -> EvalResult:
    """Compute ``int_{-inf}^{inf} f(tau) d tau``.

    ``decay_bound(T)`` must bound ``int_{|tau|>T} |f|`` and be monotone.
    T is the smallest value with ``decay_bound(T) <= tol.abs / 10``; the
    reported error is the quadrature estimate on ``[-T, T]`` plus
    ``decay_bound(T)``.  If the cap on T is hit first the result carries
    the achieved tail bound and is flagged not-converged.
    """
    cut, reached = choose_cutoff(decay_bound, tol.abs / 10.0, t_cap)
    panels = max(8, int(math.ceil(2 * cut / panel_width)))
    out = adaptive_quad(f, -cut, cut, tol, panels)
    tail = float(decay_bound(cut))
    conv = out.converged and reached
    flags = _flags(conv, None if reached else TRUNCATED)
    return EvalResult(out.value, out.abs_err + tail, "quadrature", flags)
