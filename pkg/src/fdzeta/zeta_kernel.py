"""Gamma, the zeta family, and the extended Fermi-Dirac / Bose-Einstein functions.

Each function has a series path and a Mellin-integral path so the two can
be compared.  The public functions take scalars and return
:class:`~fdzeta.numerics.EvalResult`; the ``*_array`` helpers evaluate a
whole vector of orders ``s`` at once (used for integrals along vertical
lines) and skip per-point domain checks, so callers validate first with
:func:`check_domain`.

Complex powers always use the principal logarithm.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import NamedTuple, Optional

import numpy as np

from .errors import DomainError, PoleError
from .numerics import (CONVERGED, EPS, FUNCTION_TOL, NEAR_SINGULARITY, TRUNCATED,
                       EvalResult, Tolerance, cvz_weights, integrate_log_variable)

LOG_2 = math.log(2.0)
HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

#: Lerch series/quadrature switch: direct series when |z| <= 1 - DELTA.
DELTA = 0.05
#: Refuse zeta evaluations this close to s = 1.
ZETA_POLE_RADIUS = 1e-4
#: |1 - 2^(1-s)| below this marks the eta route as ill-conditioned.
ETA_FACTOR_FLOOR = 1e-6


class FunctionId(str, Enum):
    gamma = "gamma"
    riemann_zeta = "riemann_zeta"
    dirichlet_eta_factor = "dirichlet_eta_factor"
    hurwitz_zeta = "hurwitz_zeta"
    lerch_phi = "lerch_phi"
    polylog = "polylog"
    fermi_dirac = "fermi_dirac"
    bose_einstein = "bose_einstein"
    efd_theta = "efd_theta"
    ebe_psi = "ebe_psi"


class _Vec(NamedTuple):
    val: np.ndarray
    err: np.ndarray
    method: str
    converged: bool
    near_singular: bool = False


def _carr(s):
    return np.atleast_1d(np.asarray(s, dtype=complex))


# ---------------------------------------------------------------------------
# Gamma: shifted Stirling series, reflection for Re(s) < 1/2
# ---------------------------------------------------------------------------

# B_2k for k = 1..15
_B2K = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6, -3617 / 510,
        43867 / 798, -174611 / 330, 854513 / 138, -236364091 / 2730, 8553103 / 6,
        -23749461029 / 870, 8615841276005 / 14322)
_STIRLING_COEF = tuple(b / ((2 * k) * (2 * k - 1)) for k, b in enumerate(_B2K[:10], 1))
_STIRLING_MIN_RE = 12.0


def _loggamma_stirling(z):
    lg = (z - 0.5) * np.log(z) - z + HALF_LOG_2PI
    zinv = 1.0 / z
    z2 = zinv * zinv
    power = zinv
    for c in _STIRLING_COEF:
        lg = lg + c * power
        power = power * z2
    return lg


def loggamma_array(s):
    """log Gamma(s) up to an additive multiple of 2*pi*i (Re(s) >= 1/2)."""
    z = _carr(s)
    shift = np.maximum(0, np.ceil(_STIRLING_MIN_RE - z.real)).astype(int)
    prod = np.ones_like(z)
    for k in range(int(shift.max(initial=0))):
        prod = np.where(k < shift, prod * (z + k), prod)
    return _loggamma_stirling(z + shift) - np.log(prod), shift


def gamma_array(s):
    """Gamma over an array; returns ``(values, abs_err)``."""
    s = _carr(s)
    reflect = s.real < 0.5
    z = np.where(reflect, 1.0 - s, s)
    lg, shift = loggamma_array(z)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        g = np.exp(lg)
        g = np.where(reflect, math.pi / (np.sin(math.pi * s) * g), g)
    rel = 4 * EPS * (np.abs(lg) + np.where(reflect, np.abs(math.pi * s), 0.0) + shift + 10)
    return g, rel * np.abs(g)


def _check_gamma_pole(s):
    if s.imag == 0 and s.real <= 0 and abs(s.real - round(s.real)) < 1e-14:
        raise PoleError(f"s = {int(round(s.real))}", "Gamma has poles at non-positive integers")


# ---------------------------------------------------------------------------
# Hurwitz zeta: Euler-Maclaurin
# ---------------------------------------------------------------------------

_EM_TERMS = 12
_EM_COEF = []
_fact = 1.0
for _k in range(1, _EM_TERMS + 1):
    _fact *= (2 * _k - 1) * (2 * _k)
    _EM_COEF.append(_B2K[_k - 1] / _fact)
del _k, _fact


def hurwitz_em_array(s, a):
    """sum_{n>=0} (n+a)^(-s) by Euler-Maclaurin.

    Valid as the analytic continuation for every s != 1 with Re(a) > 0.
    The cut-off N exceeds |s| + 2m so that the correction terms shrink by
    at least 1/(4 pi^2) each.
    """
    s = _carr(s)
    a = complex(a)
    n_head = int(math.ceil(np.max(np.abs(s)) + 2 * _EM_TERMS + max(0.0, 4.0 - a.real)))
    n = np.arange(n_head, dtype=float)
    logs = np.log(n + a)
    with np.errstate(over="ignore", under="ignore"):
        head_terms = np.exp(-np.outer(s, logs))
    head = head_terms.sum(axis=1)
    w = n_head + a
    logw = cmath.log(w)
    w_s = np.exp(-s * logw)
    tail = w * w_s / (s - 1.0) + 0.5 * w_s
    poch = s.copy()
    wpow = w_s / w
    corr = np.zeros_like(s)
    last = np.zeros(s.shape)
    for k, c in enumerate(_EM_COEF, 1):
        term = c * poch * wpow
        corr += term
        last = np.abs(term)
        poch = poch * (s + 2 * k - 1) * (s + 2 * k)
        wpow = wpow / (w * w)
    val = head + tail + corr
    err = 2 * last + 8 * EPS * (np.abs(head_terms).sum(axis=1) + np.abs(tail))
    return val, err


# ---------------------------------------------------------------------------
# Hurwitz-Lerch Phi
# ---------------------------------------------------------------------------

def _snap(z):
    z = complex(z)
    re, im = z.real, z.imag
    scale = 8 * EPS * max(1.0, abs(z))
    if abs(im) < scale:
        im = 0.0
    if abs(re) < scale:
        re = 0.0
    if abs(abs(re) - 1.0) < scale and im == 0.0:
        re = math.copysign(1.0, re)
    return complex(re, im)


def _lerch_direct(z, s, a, max_terms):
    """Direct series, |z| < 1.  Geometric tail bound on each component."""
    logz = cmath.log(z)
    total = np.zeros_like(s)
    absum = np.zeros(s.shape)
    chunk = 64
    start = 0
    prev_last = None
    while True:
        n = np.arange(start, start + chunk, dtype=float)
        with np.errstate(over="ignore", under="ignore"):
            terms = np.exp(n[None, :] * logz - np.outer(s, np.log(n + a)))
        total += terms.sum(axis=1)
        mags = np.abs(terms)
        absum += mags.sum(axis=1)
        last = mags[:, -1]
        r = abs(z)
        tail = last * r / (1.0 - r)
        done = (tail <= 0.25 * EPS * np.abs(total)) | (tail == 0.0)
        decreasing = last <= mags[:, -2]
        start += chunk
        if np.all(done & decreasing):
            return total, tail + 4 * EPS * absum, True
        if start >= max_terms:
            return total, tail + 4 * EPS * absum, False
        prev_last = last  # noqa: F841  (kept for debugging growth)


def _lerch_alternating(z, s, a, max_depth=256):
    """Chebyshev-averaged partial sums for real z in [-1, 0)."""
    r = -z.real
    logr = math.log(r)
    depth = 16
    s_prev = None
    while True:
        n = np.arange(2 * depth, dtype=float)
        with np.errstate(over="ignore", under="ignore"):
            terms = np.exp(n[None, :] * logr - np.outer(s, np.log(n + a)))
        terms[:, 1::2] *= -1.0
        if s_prev is None:
            s_prev = terms[:, :depth] @ cvz_weights(depth)
        w2 = cvz_weights(2 * depth)
        s_next = terms @ w2
        inc = np.abs(s_next - s_prev)
        roundoff = 4 * EPS * (np.abs(terms) @ w2)
        if np.all(inc <= np.maximum(1e-13 * np.abs(s_next), 16 * roundoff)):
            return s_next, inc + roundoff, True
        if 2 * depth >= max_depth:
            return s_next, inc + roundoff, False
        s_prev = s_next
        depth *= 2


def mellin_array(s, logh, tol: Tolerance = FUNCTION_TOL, divides: bool = False):
    """``int_R exp(s*y + logh(y)) dy`` for every s (one shared node set).

    ``logh`` returns the complex log of the s-independent factor of the
    Mellin integrand after ``t = e^y`` (so it may be ``-inf``).  With
    ``divides`` the result will be divided by Gamma(s), so the absolute
    target is scaled down by ``min |Gamma(s)|`` (floored at 1e-8).
    Returns ``(values, abs_err, converged)``.
    """
    s = _carr(s)
    if divides:
        gmin = float(np.min(np.abs(gamma_array(s)[0])))
        if gmin < 1.0:
            tol = replace(tol, abs=tol.abs * max(gmin, 1e-8))

    def g(y):
        with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
            lh = np.asarray(logh(y), dtype=complex)
            out = np.exp(np.outer(s, y) + lh[None, :])
        return out

    out, trunc = integrate_log_variable(g, tol)
    val = np.atleast_1d(out.value)
    return val, np.full(s.shape, out.abs_err + trunc), out.converged


def _lerch_logh(z, a):
    z = complex(z)

    def logh(y):
        t = np.exp(y)
        if z == 1:
            den = -np.expm1(-t)
        else:
            den = (1.0 - z) - z * np.expm1(-t)
        return -a * t - np.log(den.astype(complex))
    return logh


def _finish(integral, ierr, s, weighted=False):
    """Mellin integral -> function value (or keep Gamma(s) f(s) if weighted)."""
    if weighted:
        return integral, ierr
    g, gerr = gamma_array(s)
    val = integral / g
    err = ierr / np.abs(g) + np.abs(val) * gerr / np.abs(g)
    return val, err


def lerch_array(z, s, a, path: Optional[str] = None, tol: Tolerance = FUNCTION_TOL,
                delta: float = DELTA, weighted: bool = False) -> _Vec:
    """Phi(z, s, a) for an array of s (no domain checks)."""
    s = _carr(s)
    z = _snap(z)
    a = complex(a)
    if path is None:
        if z == 0:
            path = "series"
        elif z == 1:
            path = "series"
        elif abs(z) <= 1 - delta:
            path = "series"
        elif z.imag == 0 and -1 <= z.real < 0:
            path = "series"
        else:
            path = "quadrature"
    if path == "series":
        if z == 0:
            val = np.exp(-s * cmath.log(a))
            return _Vec(val, 4 * EPS * np.abs(val), "series", True)
        if z == 1:
            val, err = hurwitz_em_array(s, a)
            return _Vec(val, err, "series", True)
        if z.imag == 0 and z.real < 0 and abs(z) > 1 - delta:
            val, err, conv = _lerch_alternating(z, s, a)
            return _Vec(val, err, "series", conv)
        if abs(z) < 1:
            val, err, conv = _lerch_direct(z, s, a, tol.max_terms)
            return _Vec(val, err, "series", conv)
        raise DomainError("|z| <= 1 - delta, z = 1 or real z in [-1, 0) for the series path")
    if path == "quadrature":
        if np.min(s.real) <= 0 or (z == 1 and np.min(s.real) <= 1):
            raise DomainError("Re(s) > 0 (Re(s) > 1 at z = 1) for the integral representation")
        integral, ierr, conv = mellin_array(s, _lerch_logh(z, a), tol, not weighted)
        val, err = _finish(integral, ierr, s, weighted)
        return _Vec(val, err, "quadrature", conv)
    raise ValueError(f"unknown path {path!r}")


# ---------------------------------------------------------------------------
# Riemann zeta and eta
# ---------------------------------------------------------------------------

def eta_array(s) -> _Vec:
    """Dirichlet eta (1 - 2^(1-s)) zeta(s) = Phi(-1, s, 1)."""
    return lerch_array(-1.0, s, 1.0)


def zeta_array(s) -> _Vec:
    """Riemann zeta for Re(s) > 0, s away from 1 (no checks)."""
    s = _carr(s)
    val = np.empty_like(s)
    err = np.empty(s.shape)
    conv = True
    near = False
    right = s.real > 1
    if right.any():
        v, e = hurwitz_em_array(s[right], 1.0)
        val[right], err[right] = v, e
    left = ~right
    if left.any():
        sl = s[left]
        factor = 1.0 - np.exp((1.0 - sl) * LOG_2)
        eta = eta_array(sl)
        conv = conv and eta.converged
        with np.errstate(divide="ignore", invalid="ignore"):
            v = eta.val / factor
            e = eta.err / np.abs(factor) + np.abs(v) * 4 * EPS / np.abs(factor)
        bad = np.abs(factor) < ETA_FACTOR_FLOOR
        if bad.any():
            near = True
            v2, e2 = hurwitz_em_array(sl[bad], 1.0)
            v[bad], e[bad] = v2, e2
        val[left], err[left] = v, e
    return _Vec(val, err, "series", conv, near)


def zeta_quadrature_array(s, tol: Tolerance = FUNCTION_TOL) -> _Vec:
    """Mellin-integral route: 1/(e^t - 1) for Re(s) >= 5/4, the subtracted
    kernel 1/(e^t - 1) - 1/t for Re(s) <= 3/4, and 1/(e^t + 1) in between."""
    s = _carr(s)
    sig = s.real
    val = np.empty_like(s)
    err = np.empty(s.shape)
    conv = True
    # near sigma = 1 both one-sided kernels decay too slowly at one end
    groups = ((sig >= 1.25, _zeta_logh_plain), (sig <= 0.75, _zeta_logh_strip),
              ((sig > 0.75) & (sig < 1.25), _zeta_logh_alt))
    for mask, logh in groups:
        if not mask.any():
            continue
        integral, ierr, c = mellin_array(s[mask], logh, tol, True)
        v, e = _finish(integral, ierr, s[mask])
        if logh is _zeta_logh_alt:
            factor = 1.0 - np.exp((1.0 - s[mask]) * LOG_2)
            v, e = v / factor, e / np.abs(factor)
        val[mask], err[mask] = v, e
        conv = conv and c
    return _Vec(val, err, "quadrature", conv)


def _zeta_logh_plain(y):
    t = np.exp(y)
    return -t - np.log(-np.expm1(-t))


def _zeta_logh_alt(y):
    t = np.exp(y)
    return -t - np.log1p(np.exp(-t))


def _zeta_logh_strip(y):
    t = np.exp(y)
    small = t < 1e-2
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        direct = 1.0 / np.expm1(t) - 1.0 / t
    ts = np.where(small, t, 0.0)
    t2 = ts * ts
    series = -0.5 + ts * (1 / 12 + t2 * (-1 / 720 + t2 * (1 / 30240 - t2 / 1209600)))
    h = np.where(small, series, direct)
    return np.log(h.astype(complex))


# ---------------------------------------------------------------------------
# Extended FD/BE and the classical FD/BE, polylog
# ---------------------------------------------------------------------------

def efd_array(s, x, nu, path=None, tol=FUNCTION_TOL, weighted=False) -> _Vec:
    s = _carr(s)
    nu = complex(nu)
    pref = cmath.exp(-(nu + 1) * x)
    if path == "quadrature":
        c = math.exp(-x)

        def logh(y):
            t = np.exp(y)
            return -(nu + 1) * t - np.log1p(c * np.exp(-t))
        integral, ierr, conv = mellin_array(s, logh, tol, not weighted)
        val, err = _finish(integral, ierr, s, weighted)
        return _Vec(pref * val, abs(pref) * err, "quadrature", conv)
    r = lerch_array(-math.exp(-x), s, nu + 1, path, tol, weighted=weighted)
    return _Vec(pref * r.val, abs(pref) * r.err, r.method, r.converged)


def ebe_array(s, x, nu, path=None, tol=FUNCTION_TOL, weighted=False) -> _Vec:
    """Psi_nu(s; x); ``x`` may be complex (used by the eFD/eBE bridge)."""
    s = _carr(s)
    nu = complex(nu)
    x = complex(x)
    pref = cmath.exp(-(nu + 1) * x)
    if path == "quadrature":
        if x.imag != 0:
            raise DomainError("real x for the integral representation")
        xr = x.real

        def logh(y):
            t = np.exp(y)
            den = -math.expm1(-xr) - math.exp(-xr) * np.expm1(-t)
            return -(nu + 1) * t - np.log(den.astype(complex))
        integral, ierr, conv = mellin_array(s, logh, tol, not weighted)
        val, err = _finish(integral, ierr, s, weighted)
        return _Vec(pref * val, abs(pref) * err, "quadrature", conv)
    r = lerch_array(cmath.exp(-x), s, nu + 1, path, tol, weighted=weighted)
    return _Vec(pref * r.val, abs(pref) * r.err, r.method, r.converged)


def fd_array(s, mu, path=None, tol=FUNCTION_TOL, weighted=False) -> _Vec:
    """Fermi-Dirac F_{s-1}(mu) for any real mu."""
    s = _carr(s)
    if mu <= 0 and path != "quadrature":
        return efd_array(s, -mu, 0.0, path, tol, weighted)

    def logh(y):
        t = np.exp(y)
        return -np.logaddexp(0.0, t - mu)
    integral, ierr, conv = mellin_array(s, logh, tol, not weighted)
    val, err = _finish(integral, ierr, s, weighted)
    return _Vec(val, err, "quadrature", conv)


def be_array(s, mu, path=None, tol=FUNCTION_TOL, weighted=False) -> _Vec:
    """Bose-Einstein B_{s-1}(mu) for mu <= 0."""
    s = _carr(s)
    if path == "quadrature":
        def logh(y):
            u = np.exp(y) - mu
            return -u - np.log(-np.expm1(-u))
        integral, ierr, conv = mellin_array(s, logh, tol, not weighted)
        val, err = _finish(integral, ierr, s, weighted)
        return _Vec(val, err, "quadrature", conv)
    return ebe_array(s, -mu, 0.0, path, tol, weighted)


def polylog_array(z, s, path=None, tol=FUNCTION_TOL, weighted=False) -> _Vec:
    z = _snap(z)
    if z == 1 and path != "quadrature":
        return zeta_array(s)
    r = lerch_array(z, s, 1.0, path, tol, weighted=weighted)
    return _Vec(z * r.val, abs(z) * r.err, r.method, r.converged, r.near_singular)


def hurwitz_array(s, nu, path=None, tol=FUNCTION_TOL, weighted=False) -> _Vec:
    return lerch_array(1.0, s, nu, path, tol, weighted=weighted)


def eta_zeta_product_array(s) -> np.ndarray:
    """C(s) zeta(s) = Gamma(s) (1 - 2^(1-s)) zeta(s), computed without division."""
    g, _ = gamma_array(s)
    return g * eta_array(s).val


# ---------------------------------------------------------------------------
# Domain predicates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FunctionParams:
    """Parameters of a zeta-family function.

    ``x`` is the eFD/eBE shift (x >= 0); ``mu`` is the argument of the
    classical FD/BE functions; ``nu`` the extension parameter (or the
    Hurwitz shift for ``hurwitz_zeta``); ``z`` and ``a`` the Lerch
    argument and shift.
    """

    s: complex
    x: float = 0.0
    nu: complex = 0.0
    z: complex = 0.0
    a: complex = 1.0
    mu: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "s", complex(self.s))
        object.__setattr__(self, "nu", complex(self.nu))
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "mu", float(self.mu))
        for v in (self.s, self.nu, self.z, self.a, self.x, self.mu):
            if not cmath.isfinite(v):
                raise DomainError("finite parameters")

    def check(self, fid: "FunctionId"):
        """Raise DomainError naming the violated condition, if any."""
        check_domain(fid, sigma_min=self.s.real, s=self.s, x=self.x, nu=self.nu,
                     z=self.z, a=self.a, mu=self.mu)
        return self


def _lerch_domain(z, sigma, a, delta=DELTA):
    z = _snap(z)
    if not complex(a).real > 0:
        raise DomainError("Re(a) > 0")
    if z.imag == 0 and z.real > 1:
        raise DomainError("z off the cut [1, inf)", f"z = {z.real}")
    if abs(z) > 1:
        raise DomainError("|z| <= 1")
    if z == 1:
        if not sigma > 1:
            raise DomainError("Re(s) > 1 when z = 1")
    elif abs(z) > 1 - delta:
        if not sigma > 0:
            raise DomainError("Re(s) > 0 when |z| > 1 - delta")


def check_domain(fid, sigma_min, s=None, x=0.0, nu=0.0, z=0.0, a=1.0, mu=0.0,
                 sigma_max=None):
    """Validate a function's parameters for every order with
    ``Re(s) >= sigma_min`` (a whole vertical line when ``s`` is None)."""
    fid = FunctionId(fid)
    nu = complex(nu)
    if fid is FunctionId.gamma or fid is FunctionId.dirichlet_eta_factor:
        if s is not None:
            _check_gamma_pole(complex(s))
        elif sigma_min <= 0:
            raise DomainError("Re(s) > 0 on the integration line")
        return
    if fid is FunctionId.riemann_zeta:
        if not sigma_min > 0:
            raise DomainError("Re(s) > 0")
        if s is not None and abs(complex(s) - 1) < ZETA_POLE_RADIUS:
            raise PoleError("s = 1", f"|s - 1| < {ZETA_POLE_RADIUS}")
        if s is None and sigma_max is not None and sigma_min <= 1 <= sigma_max:
            raise PoleError("s = 1", "line passes through the pole")
        return
    if fid is FunctionId.hurwitz_zeta:
        if not nu.real > 0:
            raise DomainError("Re(nu) > 0")
        if not sigma_min > 1:
            raise DomainError("Re(s) > 1")
        return
    if fid is FunctionId.lerch_phi:
        _lerch_domain(z, sigma_min, a)
        return
    if fid is FunctionId.polylog:
        _lerch_domain(z, sigma_min, 1.0)
        return
    if fid is FunctionId.efd_theta:
        if not nu.real > -1:
            raise DomainError("Re(nu) > -1")
        if not sigma_min > 0:
            raise DomainError("Re(s) > 0")
        if not x >= 0:
            raise DomainError("x >= 0")
        return
    if fid is FunctionId.ebe_psi:
        if not nu.real > -1:
            raise DomainError("Re(nu) > -1")
        if not x >= 0:
            raise DomainError("x >= 0")
        if x == 0 and not sigma_min > 1:
            raise DomainError("Re(s) > 1 when x = 0")
        if not sigma_min > 0:
            raise DomainError("Re(s) > 0 when x > 0")
        return
    if fid is FunctionId.fermi_dirac:
        if not sigma_min > 0:
            raise DomainError("Re(s) > 0")
        return
    if fid is FunctionId.bose_einstein:
        if not mu <= 0:
            raise DomainError("mu <= 0", f"pole on integration path at t = {mu}")
        if mu == 0 and not sigma_min > 1:
            raise DomainError("Re(s) > 1 when mu = 0")
        if not sigma_min > 0:
            raise DomainError("Re(s) > 0")
        return
    raise ValueError(f"unhandled function {fid}")


# ---------------------------------------------------------------------------
# Public scalar API
# ---------------------------------------------------------------------------

def _result(vec: _Vec, tol: Tolerance = FUNCTION_TOL) -> EvalResult:
    flags = set()
    value = complex(vec.val[0])
    err = float(vec.err[0])
    met = math.isfinite(err) and err <= tol.target(abs(value))
    if vec.converged and met and cmath.isfinite(value):
        flags.add(CONVERGED)
    else:
        flags.add(TRUNCATED)
    if vec.near_singular:
        flags.add(NEAR_SINGULARITY)
    return EvalResult(value, err, vec.method, frozenset(flags))


def gamma(s) -> EvalResult:
    """Gamma(s), relative accuracy about 1e-14 for moderate |s|.

    Raises
    ------
    PoleError
        At s = 0, -1, -2, ...
    """
    s = complex(s)
    _check_gamma_pole(s)
    v, e = gamma_array(s)
    return _result(_Vec(v, e, "series", True))


def gamma_quadrature(s, tol: Tolerance = FUNCTION_TOL) -> EvalResult:
    """Euler's integral int_0^inf t^(s-1) e^(-t) dt, Re(s) > 0."""
    s = complex(s)
    if not s.real > 0:
        raise DomainError("Re(s) > 0")
    val, err, conv = mellin_array(s, lambda y: -np.exp(y), tol)
    return _result(_Vec(val, err, "quadrature", conv), tol)


def riemann_zeta(s, path: Optional[str] = None, tol: Tolerance = FUNCTION_TOL) -> EvalResult:
    """zeta(s) for Re(s) > 0, s != 1.

    The series path uses Euler-Maclaurin for Re(s) > 1 and the accelerated
    alternating (eta) series divided by 1 - 2^(1-s) otherwise.
    """
    s = complex(s)
    check_domain(FunctionId.riemann_zeta, s.real, s=s)
    if path == "quadrature":
        return _result(zeta_quadrature_array(s, tol), tol)
    return _result(zeta_array(s), tol)


def dirichlet_eta(s) -> EvalResult:
    s = complex(s)
    if not s.real > 0:
        raise DomainError("Re(s) > 0")
    return _result(eta_array(s))


def eta_factor(s) -> EvalResult:
    """C(s) = Gamma(s) (1 - 2^(1-s)), principal branch of 2^(1-s)."""
    s = complex(s)
    _check_gamma_pole(s)
    g, gerr = gamma_array(s)
    factor = 1.0 - cmath.exp((1.0 - s) * LOG_2)
    val = g * factor
    err = gerr * abs(factor) + np.abs(g) * 4 * EPS
    return EvalResult(complex(val[0]), float(err[0]), "closed_form", {CONVERGED})


def lerch_phi(z, s, a, path: Optional[str] = None, tol: Tolerance = FUNCTION_TOL,
              delta: float = DELTA) -> EvalResult:
    """Hurwitz-Lerch Phi(z, s, a) = sum_{n>=0} z^n / (n+a)^s.

    Series for |z| <= 1 - delta (and for z = 1, real z in [-1, 0));
    the Mellin integral otherwise.
    """
    s = complex(s)
    _lerch_domain(z, s.real, a, delta)
    return _result(lerch_array(z, s, a, path, tol, delta), tol)


def polylog(z, s, path: Optional[str] = None, tol: Tolerance = FUNCTION_TOL) -> EvalResult:
    """phi(z, s) = sum_{n>=1} z^n / n^s = z Phi(z, s, 1)."""
    s = complex(s)
    _lerch_domain(z, s.real, 1.0)
    return _result(polylog_array(z, s, path, tol), tol)


def hurwitz_zeta(s, nu, path: Optional[str] = None, tol: Tolerance = FUNCTION_TOL) -> EvalResult:
    s = complex(s)
    check_domain(FunctionId.hurwitz_zeta, s.real, s=s, nu=nu)
    return _result(hurwitz_array(s, nu, path, tol), tol)


def efd_theta(s, x, nu, path: Optional[str] = None, tol: Tolerance = FUNCTION_TOL) -> EvalResult:
    """Extended Fermi-Dirac Theta_nu(s; x) = e^{-(nu+1)x} Phi(-e^{-x}, s, nu+1)."""
    s = complex(s)
    check_domain(FunctionId.efd_theta, s.real, s=s, x=x, nu=nu)
    return _result(efd_array(s, x, nu, path, tol), tol)


def ebe_psi(s, x, nu, path: Optional[str] = None, tol: Tolerance = FUNCTION_TOL) -> EvalResult:
    """Extended Bose-Einstein Psi_nu(s; x) = e^{-(nu+1)x} Phi(e^{-x}, s, nu+1)."""
    s = complex(s)
    check_domain(FunctionId.ebe_psi, s.real, s=s, x=x, nu=nu)
    return _result(ebe_array(s, x, nu, path, tol), tol)


def fermi_dirac(s, mu, path: Optional[str] = None, tol: Tolerance = FUNCTION_TOL) -> EvalResult:
    """F_{s-1}(mu) = Gamma(s)^-1 int t^(s-1) / (e^(t-mu) + 1) dt.

    ``s`` is the order plus one.  For mu <= 0 the series of Theta_0(s; -mu)
    is used; for mu > 0 the integral is evaluated directly.
    """
    s = complex(s)
    check_domain(FunctionId.fermi_dirac, s.real, s=s, mu=mu)
    return _result(fd_array(s, float(mu), path, tol), tol)


def bose_einstein(s, mu, path: Optional[str] = None, tol: Tolerance = FUNCTION_TOL) -> EvalResult:
    """B_{s-1}(mu) for mu <= 0, equal to Psi_0(s; -mu) = phi(e^mu, s).

    Raises
    ------
    DomainError
        For mu > 0, where the integrand has a pole at t = mu.
    """
    s = complex(s)
    check_domain(FunctionId.bose_einstein, s.real, s=s, mu=mu)
    return _result(be_array(s, float(mu), path, tol), tol)


def efd_via_bridge(s, x, nu, convention: str = "integer") -> EvalResult:
    """Theta_nu(s; x) through Psi_nu at the shifted argument x + i*pi.

    ``convention="integer"`` uses (-1)^(nu+1) and needs integer nu;
    ``"exponential"`` uses e^{i pi (nu+1)} for any real nu (experimental).
    """
    s = complex(s)
    nu_c = complex(nu)
    if convention == "integer":
        if nu_c.imag != 0 or nu_c.real != round(nu_c.real):
            raise DomainError("integer nu for the (-1)^(nu+1) factor")
        factor = -1.0 if int(round(nu_c.real)) % 2 == 0 else 1.0
    elif convention == "exponential":
        factor = cmath.exp(1j * math.pi * (nu_c + 1))
    else:
        raise ValueError(f"unknown convention {convention!r}")
    check_domain(FunctionId.efd_theta, s.real, s=s, x=x, nu=nu)
    r = ebe_array(s, complex(x, math.pi), nu_c)
    return _result(_Vec(factor * r.val, r.err, r.method, r.converged))


_DISPATCH = {
    FunctionId.gamma: lambda p, path, tol: gamma(p.s) if path != "quadrature" else gamma_quadrature(p.s, tol),
    FunctionId.riemann_zeta: lambda p, path, tol: riemann_zeta(p.s, path, tol),
    FunctionId.dirichlet_eta_factor: lambda p, path, tol: eta_factor(p.s),
    FunctionId.hurwitz_zeta: lambda p, path, tol: hurwitz_zeta(p.s, p.nu, path, tol),
    FunctionId.lerch_phi: lambda p, path, tol: lerch_phi(p.z, p.s, p.a, path, tol),
    FunctionId.polylog: lambda p, path, tol: polylog(p.z, p.s, path, tol),
    FunctionId.fermi_dirac: lambda p, path, tol: fermi_dirac(p.s, p.mu, path, tol),
    FunctionId.bose_einstein: lambda p, path, tol: bose_einstein(p.s, p.mu, path, tol),
    FunctionId.efd_theta: lambda p, path, tol: efd_theta(p.s, p.x, p.nu, path, tol),
    FunctionId.ebe_psi: lambda p, path, tol: ebe_psi(p.s, p.x, p.nu, path, tol),
}


def evaluate(fid, params: FunctionParams, path: Optional[str] = None,
             tol: Tolerance = FUNCTION_TOL) -> EvalResult:
    """Evaluate any catalogued function by id."""
    return _DISPATCH[FunctionId(fid)](params, path, tol)


def line_values(fid, s, x=0.0, nu=0.0, z=0.0, a=1.0, mu=0.0,
                tol: Tolerance = FUNCTION_TOL) -> np.ndarray:
    """Vectorised values of a function over an array of orders ``s``.

    For ``dirichlet_eta_factor`` this returns C(s) zeta(s) (the product
    that appears in the integral identities), not C(s) alone.
    """
    fid = FunctionId(fid)
    s = _carr(s)
    if fid is FunctionId.gamma:
        return gamma_array(s)[0]
    if fid is FunctionId.riemann_zeta:
        return zeta_array(s).val
    if fid is FunctionId.dirichlet_eta_factor:
        return eta_zeta_product_array(s)
    if fid is FunctionId.hurwitz_zeta:
        return hurwitz_array(s, nu, None, tol).val
    if fid is FunctionId.lerch_phi:
        return lerch_array(z, s, a, None, tol).val
    if fid is FunctionId.polylog:
        return polylog_array(z, s, None, tol).val
    if fid is FunctionId.fermi_dirac:
        return fd_array(s, mu, None, tol).val
    if fid is FunctionId.bose_einstein:
        return be_array(s, mu, None, tol).val
    if fid is FunctionId.efd_theta:
        return efd_array(s, x, nu, None, tol).val
    if fid is FunctionId.ebe_psi:
        return ebe_array(s, x, nu, None, tol).val
    raise ValueError(fid)


def weighted_line_values(fid, s, x=0.0, nu=0.0, z=0.0, a=1.0, mu=0.0,
                         tol: Tolerance = FUNCTION_TOL) -> np.ndarray:
    """Gamma(s) f(s) over an array of orders (no domain checks).

    Where the default path is the Mellin integral, the integral itself is
    returned so nothing is divided by a tiny Gamma far up the line.  For
    ``dirichlet_eta_factor`` the product is C(s) zeta(s); for ``gamma``
    it is Gamma(s).
    """
    fid = FunctionId(fid)
    s = _carr(s)
    if fid is FunctionId.gamma:
        return gamma_array(s)[0]
    if fid is FunctionId.dirichlet_eta_factor:
        return eta_zeta_product_array(s)
    if fid is FunctionId.riemann_zeta:
        r = zeta_array(s)
    elif fid is FunctionId.hurwitz_zeta:
        r = hurwitz_array(s, nu, None, tol, weighted=True)
    elif fid is FunctionId.lerch_phi:
        r = lerch_array(z, s, a, None, tol, weighted=True)
    elif fid is FunctionId.polylog:
        r = polylog_array(z, s, None, tol, weighted=True)
    elif fid is FunctionId.fermi_dirac:
        r = fd_array(s, mu, None, tol, weighted=True)
    elif fid is FunctionId.bose_einstein:
        r = be_array(s, mu, None, tol, weighted=True)
    elif fid is FunctionId.efd_theta:
        r = efd_array(s, x, nu, None, tol, weighted=True)
    elif fid is FunctionId.ebe_psi:
        r = ebe_array(s, x, nu, None, tol, weighted=True)
    else:
        raise ValueError(fid)
    if r.method == "quadrature":
        return r.val
    return gamma_array(s)[0] * r.val
