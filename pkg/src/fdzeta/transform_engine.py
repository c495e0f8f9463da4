"""Fourier-side representations of the Gamma-weighted zeta family.

With ``t = e^y`` a Mellin integral ``int_0^inf t^(s-1) h(t) dt`` becomes
``int e^{i tau y} e^{sigma y} h(e^y) dy``, so with the convention

    F[phi; tau] = (2 pi)^(-1/2) int e^{i y tau} phi(y) dy

every function here satisfies ``Gamma(s) f(s) = A sqrt(2 pi) F[k; tau]`` for
an explicit kernel ``k`` and constant ``A``.  Two consequences used by the
identity checks:

* duality: ``F[Gamma f; omega] = A sqrt(2 pi) k(-omega)``;
* ``int Gamma(s) f(s) d tau = 2 pi A k(0)`` and Parseval for products.

Kernels are evaluated in log form, so ``exp(e^{-omega})`` never overflows.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

import numpy as np
from scipy.special import gamma as gamma_fn, gammaincc

from .errors import DomainError
from .numerics import (CONVERGED, EPS, LINE_TOL, TRUNCATED, EvalResult, Tolerance,
                       integrate_real_line)
from .zeta_kernel import (FunctionId, FunctionParams, _snap, _zeta_logh_strip,
                          gamma_array, weighted_line_values)

SQRT_2PI = math.sqrt(2.0 * math.pi)
TWO_PI = 2.0 * math.pi

#: Kernel name for the zeta function inside the critical strip.
ZETA_STRIP = "riemann_zeta_strip"

#: tau used to calibrate the constant in the Stirling-type decay bound.
CALIBRATION_TAU = 20.0
SAFETY = 10.0
#: Companion factors are sampled on [-COMPANION_SPAN, COMPANION_SPAN].
COMPANION_SPAN = 20.0


@dataclass(frozen=True)
class FourierPoint:
    sigma: float
    omega: float = 0.0
    tau: float = 0.0


# ---------------------------------------------------------------------------
# Kernels
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Kernel:
    """``y -> e^{sigma y} h(e^y)`` together with its constant ``A``.

    ``log_h(t)`` is the complex log of ``h``; ``pole`` is 1 when ``h``
    behaves like 1/t at the origin.  Right-hand decay is super-exponential
    (``h ~ e^{-c t}``) unless ``right_rate`` is given, in which case
    ``|k| ~ e^{-right_rate * y}``.
    """

    function: str
    sigma: float
    prefactor: complex
    log_h: Callable = field(repr=False)
    pole: int = 0
    c: float = 1.0
    right_rate: Optional[float] = None

    def __call__(self, y):
        y = np.asarray(y, dtype=float)
        with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
            t = np.exp(y)
            lk = self.sigma * y + np.asarray(self.log_h(t), dtype=complex)
            out = np.exp(lk)
        return np.where(np.isneginf(lk.real), 0.0, out)

    def log_value(self, y):
        """Complex log of the kernel (without the prefactor) at scalar y."""
        t = math.exp(y) if y < 709 else math.inf
        with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
            return self.sigma * y + complex(np.asarray(self.log_h(np.array([t])))[0])

    # tails ---------------------------------------------------------------
    def _left_rate(self):
        return self.sigma - self.pole

    def _left_const(self):
        lam = self._left_rate()
        y = np.linspace(-60.0, 0.0, 241)
        return 2.0 * float(np.max(np.abs(self(y)) * np.exp(-lam * y)))

    def _right_const(self):
        if self.right_rate is not None:
            y = np.linspace(0.0, 40.0, 161)
            return 2.0 * float(np.max(np.abs(self(y)) * np.exp(self.right_rate * y)))
        y = np.linspace(0.0, 6.0, 121)
        logk = np.array([self.log_value(v).real for v in y])
        return 2.0 * math.exp(float(np.max(logk - self.sigma * y + self.c * np.exp(y))))

    def tail_bound(self) -> Callable[[float], float]:
        """Monotone bound on ``int_{|y|>T} |k(y)| dy``."""
        lam = self._left_rate()
        m_left = self._left_const()
        m_right = self._right_const()
        sigma, c, rate = self.sigma, self.c, self.right_rate

        def bound(T):
            left = m_left * math.exp(-lam * T) / lam
            if rate is not None:
                right = m_right * math.exp(-rate * T) / rate
            else:
                ct = c * math.exp(min(T, 700.0))
                if ct <= sigma + 1.0:
                    right = m_right * math.exp(sigma * T) / max(c, 1e-300) * 1e6
                else:
                    right = m_right * math.exp(sigma * T - ct) / (ct - sigma)
            return left + right
        return bound


def _band(condition, ok, detail):
    if not ok:
        raise DomainError(condition, detail)


def kernel_of(function: Union[FunctionId, str], params: FunctionParams) -> Kernel:
    """Explicit kernel of the Fourier representation at ``sigma = Re(params.s)``.

    For ``riemann_zeta`` a real part in (0, 1) selects the critical-strip
    kernel ``e^{sigma y}[1/(exp(e^y) - 1) - e^{-y}]``.  ``gamma`` gives the
    plain Euler kernel ``e^{sigma y} exp(-e^y)`` (with ``params.nu`` > 0 as
    a scale when non-zero).

    Raises
    ------
    DomainError
        When ``sigma`` or the parameters leave the band of validity.
    """
    sigma = params.s.real
    x, mu = params.x, params.mu
    nu = params.nu
    name = function.value if isinstance(function, FunctionId) else str(function)

    if name == FunctionId.ebe_psi.value:
        _band("Re(nu) > -1", nu.real > -1, "eBE kernel")
        _band("x >= 0", x >= 0, "eBE kernel")
        _band("sigma > 1 when x = 0, sigma > 0 when x > 0",
              sigma > (1 if x == 0 else 0), "eBE kernel")
        ex = math.exp(-x)
        em = -math.expm1(-x)

        def log_h(t):
            return -(nu + 1) * t - np.log((em - ex * np.expm1(-t)).astype(complex))
        return Kernel(name, sigma, cmath.exp(-(nu + 1) * x), log_h,
                      pole=int(x == 0), c=(nu + 1).real)

    if name == FunctionId.efd_theta.value:
        _band("Re(nu) > -1", nu.real > -1, "eFD kernel")
        _band("x >= 0", x >= 0, "eFD kernel")
        _band("sigma > 0", sigma > 0, "eFD kernel")
        ex = math.exp(-x)

        def log_h(t):
            return -(nu + 1) * t - np.log1p(ex * np.exp(-t))
        return Kernel(name, sigma, cmath.exp(-(nu + 1) * x), log_h, c=(nu + 1).real)

    if name in (FunctionId.lerch_phi.value, FunctionId.polylog.value):
        z = _snap(params.z)
        a = params.a if name == FunctionId.lerch_phi.value else 1.0 + 0j
        _band("Re(a) > 0", a.real > 0, "Hurwitz-Lerch kernel")
        _band("z off the cut [1, inf)", not (z.imag == 0 and z.real > 1), f"z = {z}")
        _band("|z| <= 1", abs(z) <= 1, f"z = {z}")
        _band("sigma > 1 when z = 1, sigma > 0 otherwise", sigma > (1 if z == 1 else 0),
              "Hurwitz-Lerch kernel")

        def log_h(t):
            if z == 1:
                den = -np.expm1(-t)
            else:
                den = (1.0 - z) - z * np.expm1(-t)
            return -a * t - np.log(den.astype(complex))
        pref = z if name == FunctionId.polylog.value else 1.0
        return Kernel(name, sigma, complex(pref), log_h, pole=int(z == 1), c=a.real)

    if name == FunctionId.hurwitz_zeta.value:
        _band("Re(nu) > 0", nu.real > 0, "Hurwitz kernel")
        _band("sigma > 1", sigma > 1, "Hurwitz kernel")

        def log_h(t):
            return -nu * t - np.log(-np.expm1(-t))
        return Kernel(name, sigma, 1.0, log_h, pole=1, c=nu.real)

    if name == FunctionId.riemann_zeta.value and sigma > 1:
        def log_h(t):
            return -t - np.log(-np.expm1(-t))
        return Kernel(name, sigma, 1.0, log_h, pole=1)

    if name in (FunctionId.riemann_zeta.value, ZETA_STRIP):
        _band("0 < sigma < 1", 0 < sigma < 1, "critical-strip zeta kernel")
        return Kernel(ZETA_STRIP, sigma, 1.0, lambda t: _zeta_logh_strip(np.log(t)),
                      right_rate=1.0 - sigma)

    if name == FunctionId.dirichlet_eta_factor.value:
        _band("sigma > 0", sigma > 0, "C(s) zeta(s) kernel")

        def log_h(t):
            return -t - np.log1p(np.exp(-t))
        return Kernel(name, sigma, 1.0, log_h)

    if name == FunctionId.fermi_dirac.value:
        _band("sigma > 0", sigma > 0, "FD kernel")

        def log_h(t):
            return -np.logaddexp(t, mu) + 0j
        return Kernel(name, sigma, math.exp(mu), log_h)

    if name == FunctionId.bose_einstein.value:
        _band("mu <= 0", mu <= 0, "pole on integration path")
        _band("sigma > 1 when mu = 0, sigma > 0 when mu < 0",
              sigma > (1 if mu == 0 else 0), "BE kernel")

        def log_h(t):
            return -t - np.log(-np.expm1(mu - t) + 0j)
        return Kernel(name, sigma, math.exp(mu), log_h, pole=int(mu == 0))

    if name == FunctionId.gamma.value:
        _band("sigma > 0", sigma > 0, "gamma kernel")
        scale = params.nu.real if params.nu != 0 else 1.0
        _band("nu > 0", scale > 0, "scaled gamma kernel")
        return Kernel(name, sigma, 1.0, lambda t: -scale * t + 0j, c=scale)

    raise ValueError(f"no Fourier kernel for {name!r}")


def line_side(function: Union[FunctionId, str], params: FunctionParams):
    """``tau -> Gamma(s) f(s)`` on ``s = sigma + i tau`` (vectorised).

    ``dirichlet_eta_factor`` gives C(s) zeta(s); a scaled gamma kernel
    (``nu != 0``) gives ``nu^(-s) Gamma(s)``.
    """
    name = function.value if isinstance(function, FunctionId) else str(function)
    sigma = params.s.real
    if name == ZETA_STRIP:
        name = FunctionId.riemann_zeta.value
    fid = FunctionId(name)
    kw = dict(x=params.x, nu=params.nu, z=params.z, a=params.a, mu=params.mu)
    if fid is FunctionId.gamma and params.nu != 0:
        lognu = cmath.log(params.nu)

        def scaled(tau):
            s = sigma + 1j * np.asarray(tau, dtype=float)
            return gamma_array(s)[0] * np.exp(-s * lognu)
        return scaled

    def side(tau):
        s = sigma + 1j * np.asarray(tau, dtype=float)
        return weighted_line_values(fid, s, **kw)
    return side


@dataclass(frozen=True)
class TransformPair:
    """A Gamma-weighted function and the kernel of its Fourier representation."""

    function: str
    params: FunctionParams

    @property
    def kernel(self) -> Kernel:
        return kernel_of(self.function, self.params)

    def lhs(self, tau):
        return line_side(self.function, self.params)(tau)

    def rhs(self, y):
        k = self.kernel
        return k.prefactor * k(y)


def fourier_of_kernel(kernel: Kernel, tau: float, tol: Tolerance = LINE_TOL) -> EvalResult:
    """``A sqrt(2 pi) F[k; tau] = A int e^{i y tau} k(y) dy``."""
    bound = kernel.tail_bound()

    def f(y):
        return np.exp(1j * tau * y) * kernel(y)
    r = integrate_real_line(f, bound, tol, panel_width=2.0)
    return r.scaled(kernel.prefactor)


def verify_transform_pair(pair: TransformPair, tau: float,
                          tol: Tolerance = LINE_TOL) -> float:
    """Residual ``|lhs - rhs| / max(1, |lhs|)`` at one tau."""
    lhs = complex(pair.lhs(np.array([tau]))[0])
    rhs = fourier_of_kernel(pair.kernel, tau, tol).value
    return abs(lhs - rhs) / max(1.0, abs(lhs))


# ---------------------------------------------------------------------------
# Line integrals over tau
# ---------------------------------------------------------------------------

def gamma_decay_bound(sigma: float, G: float, rho: Optional[float] = None):
    """Tail bound ``T -> bound on int_{|tau|>T} |Gamma(sigma+i tau)| G d tau``.

    Uses ``|Gamma(sigma + i tau)| <= C (1+|tau|)^(sigma-1/2) e^{-pi|tau|/2}``
    with C fixed by matching at ``|tau| = 20``, times a safety factor of 10.
    With ``rho`` the integrand is ``Gamma(sigma+i tau) Gamma(rho-i tau) G``
    (exponent ``sigma+rho-1``, rate ``pi``).
    """
    if not sigma > 0 or (rho is not None and not rho > 0):
        raise DomainError("sigma > 0", "gamma decay bound")
    t0 = CALIBRATION_TAU
    if rho is None:
        alpha, b = sigma - 0.5, 0.5 * math.pi
        mag = abs(complex(gamma_array(sigma + 1j * t0)[0][0]))
    else:
        alpha, b = sigma + rho - 1.0, math.pi
        mag = abs(complex(gamma_array(sigma + 1j * t0)[0][0])
                  * complex(gamma_array(rho - 1j * t0)[0][0]))
    log_c = math.log(mag) - alpha * math.log1p(t0) + b * t0
    a1 = alpha + 1.0
    scale = SAFETY * G * 2.0

    def bound(T):
        T = max(float(T), 0.0)
        upper = float(gammaincc(a1, b * (1.0 + T)) * gamma_fn(a1))
        if upper == 0.0:
            return 0.0
        return scale * math.exp(log_c + b - a1 * math.log(b)) * upper
    return bound


def companion_sup(companion: Callable, span: float = COMPANION_SPAN, n: int = 81) -> float:
    """``SAFETY * max |companion(tau)|`` over a tau grid on [-span, span]."""
    tau = np.linspace(-span, span, n)
    vals = np.abs(np.asarray(companion(tau)))
    vals = vals[np.isfinite(vals)]
    return SAFETY * float(vals.max()) if vals.size else math.inf


def _companion_of(side, sigma, sign=1.0):
    def comp(tau):
        s = sigma + sign * 1j * np.asarray(tau, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            return side(tau) / gamma_array(s)[0]
    return comp


def line_integral(integrand: Callable, sigma: float, G: float, rho: Optional[float] = None,
                  tol: Tolerance = LINE_TOL) -> EvalResult:
    """``int integrand(tau) d tau`` for Gamma-weighted integrands.

    ``G`` bounds the non-gamma part of the integrand (see
    :func:`companion_sup`); the tail bound comes from
    :func:`gamma_decay_bound`.
    """
    return integrate_real_line(integrand, gamma_decay_bound(sigma, G, rho), tol)


def weighted_integral(function, params: FunctionParams, omega: float = 0.0,
                      tol: Tolerance = LINE_TOL) -> EvalResult:
    """``int e^{i omega tau} Gamma(s) f(s) d tau`` along ``Re(s) = sigma``."""
    kernel_of(function, params)  # band check
    sigma = params.s.real
    side = line_side(function, params)
    G = companion_sup(_companion_of(side, sigma))

    def f(tau):
        return np.exp(1j * omega * tau) * side(tau)
    return line_integral(f, sigma, G, tol=tol)


def parseval_integral(f_function, f_params: FunctionParams, g_function,
                      g_params: FunctionParams, tol: Tolerance = LINE_TOL) -> EvalResult:
    """``int Gamma(sigma+i tau) f(sigma+i tau) Gamma(rho-i tau) g(rho-i tau) d tau``
    with ``sigma = Re(f_params.s)`` and ``rho = Re(g_params.s)``."""
    kernel_of(f_function, f_params)
    kernel_of(g_function, g_params)
    sigma, rho = f_params.s.real, g_params.s.real
    fs = line_side(f_function, f_params)
    gs = line_side(g_function, g_params)

    def f(tau):
        tau = np.asarray(tau, dtype=float)
        return fs(tau) * gs(-tau)

    def comp(tau):
        tau = np.asarray(tau, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            return f(tau) / (gamma_array(sigma + 1j * tau)[0] * gamma_array(rho - 1j * tau)[0])
    G = companion_sup(comp)
    return line_integral(f, sigma, G, rho, tol)


# ---------------------------------------------------------------------------
# Duality
# ---------------------------------------------------------------------------

def duality_value(function, params: FunctionParams, sigma: Optional[float] = None,
                  omega: float = 0.0) -> EvalResult:
    """Closed form of ``F[Gamma f; omega] = A sqrt(2 pi) k(-omega)``.

    If ``e^{-omega}`` is so large that ``exp(e^{-omega})`` would overflow,
    the (underflowed) value is returned with the ``truncated`` flag.
    """
    if sigma is not None:
        params = FunctionParams(s=complex(sigma, params.s.imag), x=params.x, nu=params.nu,
                                z=params.z, a=params.a, mu=params.mu)
    k = kernel_of(function, params)
    logv = k.log_value(-omega)
    flags = {CONVERGED}
    if -omega > math.log(709.0):
        flags = {TRUNCATED}
    value = k.prefactor * SQRT_2PI * (cmath.exp(logv) if logv.real > -745 else 0.0)
    return EvalResult(value, 8 * EPS * (1 + abs(logv)) * abs(value), "closed_form", flags)


def duality_line_integral(function, params: FunctionParams, omega: float,
                          tol: Tolerance = LINE_TOL) -> EvalResult:
    """``F[Gamma f; omega] = (2 pi)^(-1/2) int e^{i omega tau} Gamma f d tau``."""
    r = weighted_integral(function, params, omega, tol)
    return r.scaled(1.0 / SQRT_2PI)
