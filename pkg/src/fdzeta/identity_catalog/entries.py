"""The identity catalog.

Groups: F (Mellin identities for squared kernels), P (Parseval line
integrals), D (duality transforms and their omega = 0 specialisations),
X (closing identities), R (relations among the functions), T (Fourier
representations).  Each entry evaluates its two sides by different
routes, e.g. a series on one side and a quadrature on the other.

Where a printed constant or domain differs from the derivable one the
entry carries an :class:`Erratum` and both forms are checked.  Domains
are the printed constraints, tightened where a side would otherwise be
evaluated outside the region where it is defined (for instance a
doubled index ``2 nu`` that must still exceed -1).
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import DomainError
from ..numerics import CONVERGED, EPS, FUNCTION_TOL, TRUNCATED, EvalResult, integrate_semi_infinite
from ..transform_engine import (SQRT_2PI, TWO_PI, TransformPair, duality_line_integral,
                                fourier_of_kernel, parseval_integral, weighted_integral)
from ..zeta_kernel import (FunctionParams as FP, bose_einstein, dirichlet_eta,
                           ebe_psi, efd_theta, efd_via_bridge, fermi_dirac, gamma,
                           hurwitz_zeta, lerch_phi, polylog, riemann_zeta)
from .registry import (LINE_BUDGET, MELLIN_TOL, POINTWISE_TOL, Erratum, IdentitySpec,
                       ParamAxis, register, requires)

E = math.e


# ---------------------------------------------------------------------------
# small helpers
# ---------------------------------------------------------------------------

def _lin(*terms) -> EvalResult:
    """Linear combination of EvalResults with exact coefficients."""
    value, err, ok = 0j, 0.0, True
    for c, r in terms:
        value += c * r.value
        err += abs(c) * r.abs_err
        ok = ok and r.converged
    return EvalResult(value, err, "closed_form", {CONVERGED if ok else TRUNCATED})


def _exact(value) -> EvalResult:
    value = complex(value)
    return EvalResult(value, 16 * EPS * abs(value), "closed_form", {CONVERGED})


def _times(factor, r: EvalResult) -> EvalResult:
    return r.scaled(factor)


def _mellin(eta, log_h) -> EvalResult:
    """int_0^inf t^(eta-1) exp(log_h(t)) dt."""
    def kernel(t):
        with np.errstate(divide="ignore", over="ignore", under="ignore", invalid="ignore"):
            return np.exp((eta - 1) * np.log(t) + log_h(t))
    return integrate_semi_infinite(kernel, FUNCTION_TOL)


def _nm1(v):
    """-expm1(-v): the stable 1 - e^{-v}."""
    return -np.expm1(-v)


def _pos(p, *names):
    return tuple(p[n] for n in names)


# common axes
SIGMA_POS = ParamAxis("sigma", 1.5, lower=0.0)
RHO_POS = ParamAxis("rho", 1.5, lower=0.0)
SIGMA_GT1 = ParamAxis("sigma", 1.5, lower=1.0)
RHO_GT1 = ParamAxis("rho", 1.5, lower=1.0)
X_AXIS = ParamAxis("x", 0.5, lower=0.0, strict=False)
NU_GT_M1 = ParamAxis("nu", 0.5, lower=-1.0)
NU_GT_MHALF = ParamAxis("nu", 0.5, lower=-0.5)
NU_POS = ParamAxis("nu", 1.0, lower=0.0)
NU_GT_HALF = ParamAxis("nu", 1.0, lower=0.5)
Z_UNIT = ParamAxis("z", 0.5, lower=0.0, upper=1.0, upper_strict=False)
Z_CLOSED = ParamAxis("z", 0.5, lower=-1.0, strict=False, upper=1.0, upper_strict=False)
ETA_GT1 = ParamAxis("eta", 2.5, lower=1.0)
ETA_GT2 = ParamAxis("eta", 3.0, lower=2.0)
OMEGA = ParamAxis("omega", 0.5, values=(-1.0, 0.5, 2.0), span=(-3.0, 3.0))
TAU = ParamAxis("tau", 1.5, values=(0.0, 1.5, 4.0), span=(-5.0, 5.0))


def _s(p):
    return complex(p["sigma"], p.get("tau", 0.0))


def _line_ok(x, sigma, strict_at_zero=1.0):
    """Real part needed on a line of a function that has a pole at t = 0 iff x = 0."""
    return sigma > (strict_at_zero if x == 0 else 0.0)


# ---------------------------------------------------------------------------
# F: Mellin identities
# ---------------------------------------------------------------------------

def _f01_lhs(p, tol):
    nu, x, eta = _pos(p, "nu", "x", "eta")
    c = math.exp((nu + 2) * x) * gamma(eta).real
    return _lin((c * (nu + 1), efd_theta(eta, x, nu)), (-c, efd_theta(eta - 1, x, nu)))


def _f01_rhs(p, tol):
    nu, x, eta = _pos(p, "nu", "x", "eta")
    return _mellin(eta, lambda t: -(nu + 2) * t - 2 * np.log1p(np.exp(-x - t)))


register(IdentitySpec(
    "F01", "Eq.(2.1)", "eFD squared-kernel identity",
    (NU_GT_M1, X_AXIS, ETA_GT1),
    lambda p: requires((p["nu"] > -1, "Re(nu) > -1"), (p["x"] >= 0, "x >= 0"),
                       (p["eta"] > 1, "eta > 1")),
    _f01_lhs, _f01_rhs, MELLIN_TOL, constraint="Re(nu) > -1; x >= 0; eta > 1"))


def _f02_lhs(p, tol):
    x, eta = _pos(p, "x", "eta")
    c = math.exp(-2 * x) * gamma(eta).real
    return _lin((c, fermi_dirac(eta, x)), (-c, fermi_dirac(eta - 1, x)))


def _f02_rhs(p, tol):
    x, eta = _pos(p, "x", "eta")
    return _mellin(eta, lambda t: -2 * np.logaddexp(t, x))


register(IdentitySpec(
    "F02", "Eq.(2.8)", "FD squared-kernel identity",
    (X_AXIS, ETA_GT1),
    lambda p: requires((p["x"] >= 0, "x >= 0"), (p["eta"] > 1, "eta > 1")),
    _f02_lhs, _f02_rhs, MELLIN_TOL, constraint="eta > 1; x >= 0"))


def _f03_rhs(p, tol):
    eta = p["eta"]
    return _mellin(eta, lambda t: -2 * t - 2 * np.log1p(np.exp(-t)))


def _f03_lhs(p, tol):
    # (1 - 2^{1-s}) zeta(s) is the eta function, also at s = 1
    eta = p["eta"]
    g = gamma(eta).real
    return _lin((g, dirichlet_eta(eta)), (-g, dirichlet_eta(eta - 1)))


def _f03_printed(p, tol):
    eta = p["eta"]
    g = gamma(eta).real
    return _lin((g * (1 - 2.0 ** (1 - eta)), riemann_zeta(eta)),
                (-g * (1 - 2.0 ** (-eta)), riemann_zeta(eta - 1)))


register(IdentitySpec(
    "F03", "Eq.(2.9)", "Riemann zeta squared FD kernel",
    (ETA_GT1,),
    lambda p: requires((p["eta"] > 1, "eta > 1")),
    _f03_lhs, _f03_rhs, MELLIN_TOL, constraint="eta > 1",
    erratum=Erratum(
        "Gamma(eta)[(1-2^(1-eta)) zeta(eta) - (1-2^(-eta)) zeta(eta-1)]",
        "Gamma(eta)[(1-2^(1-eta)) zeta(eta) - (1-2^(2-eta)) zeta(eta-1)]",
        "coefficient of zeta(eta-1) follows from Theta_0(s;0) = (1-2^(1-s)) zeta(s) at s = eta-1",
        printed_lhs=_f03_printed)))


def _f04_lhs(p, tol):
    nu, x, eta = _pos(p, "nu", "x", "eta")
    c = math.exp((nu + 2) * x) * gamma(eta).real
    return _lin((c, ebe_psi(eta - 1, x, nu)), (-c * (nu + 1), ebe_psi(eta, x, nu)))


def _f04_rhs(p, tol):
    nu, x, eta = _pos(p, "nu", "x", "eta")
    return _mellin(eta, lambda t: -(nu + 2) * t - 2 * np.log(_nm1(x + t)))


register(IdentitySpec(
    "F04", "Eq.(2.10)", "eBE squared-kernel identity",
    (NU_GT_M1, X_AXIS, ETA_GT1),
    lambda p: requires((p["nu"] > -1, "Re(nu) > -1"), (p["x"] >= 0, "x >= 0"),
                       (p["eta"] > (2 if p["x"] == 0 else 1),
                        "eta > 1 when x > 0; eta > 2 when x = 0")),
    _f04_lhs, _f04_rhs, MELLIN_TOL,
    constraint="Re(nu) > -1; eta > 1 when x > 0; eta > 2 when x = 0"))


def _lerch_sq(nu, z, eta):
    return _mellin(eta, lambda t: -(nu + 1) * t - 2 * np.log((1 - z) - z * np.expm1(-t)))


def _f05_lhs(p, tol):
    nu, z, eta = _pos(p, "nu", "z", "eta")
    c = gamma(eta).real / z
    return _lin((c, lerch_phi(z, eta - 1, nu)), (-c * nu, lerch_phi(z, eta, nu)))


def _zeta_like_domain(p):
    return (p["eta"] > (2 if p["z"] == 1 else 1), "eta > 1 when 0 < z < 1; eta > 2 when z = 1")


register(IdentitySpec(
    "F05", "Eq.(2.12)", "Hurwitz-Lerch squared kernel",
    (NU_POS, Z_UNIT, ETA_GT1),
    lambda p: requires((p["nu"] > 0, "Re(nu) > 0"), (0 < p["z"] <= 1, "0 < z <= 1"),
                       _zeta_like_domain(p)),
    _f05_lhs, lambda p, tol: _lerch_sq(p["nu"], p["z"], p["eta"]), MELLIN_TOL,
    constraint="Re(nu) > 0; eta > 1 when 0 < z < 1; eta > 2 when z = 1"))


def _f06_lhs(p, tol):
    z, eta = _pos(p, "z", "eta")
    c = gamma(eta).real / z ** 2
    return _lin((c, polylog(z, eta - 1)), (-c, polylog(z, eta)))


register(IdentitySpec(
    "F06", "Eq.(2.13)", "polylogarithm squared kernel",
    (Z_UNIT, ETA_GT1),
    lambda p: requires((0 < p["z"] <= 1, "0 < z <= 1"), _zeta_like_domain(p)),
    _f06_lhs, lambda p, tol: _lerch_sq(1.0, p["z"], p["eta"]), MELLIN_TOL,
    constraint="eta > 1 when 0 < z < 1; eta > 2 when z = 1"))


def _f07_lhs(p, tol):
    x, eta = _pos(p, "x", "eta")
    c = math.exp(2 * x) * gamma(eta).real
    return _lin((c, bose_einstein(eta - 1, -x)), (-c, bose_einstein(eta, -x)))


def _f07_rhs(p, tol):
    x, eta = _pos(p, "x", "eta")
    return _mellin(eta, lambda t: -2 * t - 2 * np.log(_nm1(x + t)))


def _f07_printed_lhs(p, tol):
    x, eta = _pos(p, "x", "eta")
    c = math.exp(-2 * x) * gamma(eta).real
    return _lin((c, bose_einstein(eta - 1, x)), (-c, bose_einstein(eta, x)))


def _f07_printed_rhs(p, tol):
    x, eta = _pos(p, "x", "eta")
    if x > 0:
        raise DomainError("x <= 0", "1/(e^t - e^x)^2 has a non-integrable pole at t = x")
    return _f07_rhs(p, tol)


register(IdentitySpec(
    "F07", "Eq.(2.14)", "BE squared kernel",
    (X_AXIS, ETA_GT1),
    lambda p: requires((p["x"] >= 0, "x >= 0"),
                       (p["eta"] > (2 if p["x"] == 0 else 1),
                        "eta > 1 when x > 0; eta > 2 when x = 0")),
    _f07_lhs, _f07_rhs, MELLIN_TOL, constraint="eta > 1, x >= 0 (printed)",
    erratum=Erratum(
        "Gamma(eta) e^(-2x)[B_(eta-2)(x) - B_(eta-1)(x)] = int t^(eta-1)/(e^t - e^x)^2 dt, x >= 0",
        "Gamma(eta) e^(2x)[B_(eta-2)(-x) - B_(eta-1)(-x)] = int t^(eta-1)/(e^t - e^(-x))^2 dt, x >= 0",
        "the BE integrand has a pole at t = x for x > 0; the identity holds at argument -x",
        printed_lhs=_f07_printed_lhs, printed_rhs=_f07_printed_rhs)))


def _f08_lhs(p, tol):
    nu, eta = _pos(p, "nu", "eta")
    g = gamma(eta).real
    return _lin((g, hurwitz_zeta(eta - 1, nu)), (-g * nu, hurwitz_zeta(eta, nu)))


register(IdentitySpec(
    "F08", "Eq.(2.15)", "Hurwitz zeta squared kernel",
    (NU_POS, ETA_GT2),
    lambda p: requires((p["nu"] > 0, "Re(nu) > 0"), (p["eta"] > 2, "eta > 2")),
    _f08_lhs,
    lambda p, tol: _mellin(p["eta"], lambda t: -(p["nu"] + 1) * t - 2 * np.log(_nm1(t))),
    MELLIN_TOL, constraint="Re(nu) > 0; eta > 2"))


def _f09_lhs(p, tol):
    eta = p["eta"]
    g = gamma(eta).real
    return _lin((g, riemann_zeta(eta - 1)), (-g, riemann_zeta(eta)))


register(IdentitySpec(
    "F09", "Eq.(2.16)", "Riemann zeta squared BE kernel",
    (ETA_GT2,),
    lambda p: requires((p["eta"] > 2, "eta > 2")),
    _f09_lhs, lambda p, tol: _mellin(p["eta"], lambda t: -2 * t - 2 * np.log(_nm1(t))),
    MELLIN_TOL, constraint="eta > 2"))


# ---------------------------------------------------------------------------
# P: Parseval line integrals
# ---------------------------------------------------------------------------

def _pv(f_id, f_kw, g_id, g_kw, sigma, rho):
    return parseval_integral(f_id, FP(s=sigma, **f_kw), g_id, FP(s=rho, **g_kw))


def _rho(p):
    return p.get("rho", p["sigma"])


def _parseval_pair(ids, anchors, title, axes, f_id, f_kw, g_id, g_kw, rhs,
                   dom_general, dom_square, constraints, errata=(None, None), notes=""):
    """Register the general (sigma, rho) identity and its rho = sigma case."""
    def lhs(p, tol):
        return _pv(f_id, f_kw(p), g_id, g_kw(p), p["sigma"], _rho(p))

    def rhs_eval(p, tol):
        return rhs(p, p["sigma"] + _rho(p))

    rho_axis = RHO_GT1 if any(a is SIGMA_GT1 for a in axes) else RHO_POS
    general_axes = tuple(axes[:1]) + (rho_axis,) + tuple(axes[1:])
    register(IdentitySpec(ids[0], anchors[0], title, general_axes, dom_general, lhs, rhs_eval,
                          LINE_BUDGET, errata[0], constraints[0], notes=notes))
    register(IdentitySpec(ids[1], anchors[1], title + " (rho = sigma)", tuple(axes),
                          lambda p: dom_square(dict(p, rho=p["sigma"])), lhs, rhs_eval,
                          LINE_BUDGET, errata[1], constraints[1], notes=notes))


def _pair_lines(p, threshold_at_zero_x=1.0, key="x"):
    x = p.get(key, 1.0)
    need = threshold_at_zero_x if x == 0 else 0.0
    return (p["sigma"] > need and _rho(p) > need,
            f"sigma, rho > {need:g}" + (" when x = 0" if x == 0 else ""))


def _sum_cond(p, at_zero, positive, key="x", zero_value=0.0):
    eta = p["sigma"] + _rho(p)
    at_bound = p.get(key) == zero_value
    need = at_zero if at_bound else positive
    return (eta > need, f"sigma + rho > {need:g}")


# P01/P02 eBE
def _p01_rhs(p, eta):
    nu, x = p["nu"], p["x"]
    c = TWO_PI * gamma(eta).real
    return _lin((c, ebe_psi(eta - 1, x, 2 * nu)), (-c * (2 * nu + 1), ebe_psi(eta, x, 2 * nu)))


def _p01_dom(p):
    return requires((p["nu"] > -0.5, "Re(nu) > -1/2 (doubled index 2 nu > -1)"),
                    (p["x"] >= 0, "x >= 0"), _pair_lines(p),
                    _sum_cond(p, 2, 1))


_parseval_pair(
    ("P01", "P02"), ("Eq.(4.3)", "Eq.(4.4)"), "eBE Parseval",
    (SIGMA_POS, NU_GT_MHALF, X_AXIS),
    "ebe_psi", lambda p: dict(x=p["x"], nu=p["nu"]), "ebe_psi", lambda p: dict(x=p["x"], nu=p["nu"]),
    _p01_rhs, _p01_dom, _p01_dom,
    ("Re(nu) > -1; sigma + rho > 1 when x > 0; sigma + rho > 2 when x = 0",
     "Re(nu) > -1; sigma > 1/2 when x > 0; sigma > 1 when x = 0"),
    notes="printed Re(nu) > -1 is tightened to Re(nu) > -1/2 so that Psi_{2 nu} is defined")


# P03/P04 Hurwitz-Lerch
def _p03_rhs(p, eta):
    nu, z = p["nu"], p["z"]
    c = TWO_PI * gamma(eta).real / z
    return _lin((c, lerch_phi(z, eta - 1, 2 * nu - 1)),
                (-c * (2 * nu - 1), lerch_phi(z, eta, 2 * nu - 1)))


def _p03_dom(p):
    return requires((p["nu"] > 0.5, "Re(nu) > 1/2 (shift 2 nu - 1 > 0)"),
                    (0 < p["z"] <= 1, "0 < z <= 1"),
                    _pair_lines(p, 1.0, key="zc"),
                    _sum_cond(p, 2, 1, key="z", zero_value=1.0))


def _zc(p):
    # 'zc' = 0 marks the z = 1 case for the shared line-threshold helper
    return dict(p, zc=0.0 if p["z"] == 1 else 1.0)


_parseval_pair(
    ("P03", "P04"), ("Eq.(4.5)", "Eq.(4.6)"), "Hurwitz-Lerch Parseval",
    (SIGMA_POS, NU_GT_HALF, Z_UNIT),
    "lerch_phi", lambda p: dict(z=p["z"], a=p["nu"]), "lerch_phi", lambda p: dict(z=p["z"], a=p["nu"]),
    _p03_rhs, lambda p: _p03_dom(_zc(p)), lambda p: _p03_dom(_zc(p)),
    ("Re(nu) > 0; sigma + rho > 1 when 0 < z < 1; sigma + rho > 2 when z = 1",
     "Re(nu) > 1/2; sigma > 1/2 when 0 < z < 1; sigma > 1 when z = 1"),
    notes="printed Re(nu) > 0 is tightened to Re(nu) > 1/2 so that Phi(., ., 2 nu - 1) is defined")


# P05/P06 polylog
def _p05_rhs(p, eta):
    z = p["z"]
    c = TWO_PI * gamma(eta).real
    return _lin((c, polylog(z, eta - 1)), (-c, polylog(z, eta)))


def _p05_dom(p):
    return requires((0 < p["z"] <= 1, "0 < z <= 1"), _pair_lines(p, 1.0, key="zc"),
                    _sum_cond(p, 2, 1, key="z", zero_value=1.0))


_parseval_pair(
    ("P05", "P06"), ("Eq.(4.7)", "Eq.(4.8)"), "polylogarithm Parseval",
    (SIGMA_POS, Z_UNIT),
    "polylog", lambda p: dict(z=p["z"]), "polylog", lambda p: dict(z=p["z"]),
    _p05_rhs, lambda p: _p05_dom(_zc(p)), lambda p: _p05_dom(_zc(p)),
    ("sigma + rho > 1 when 0 < z < 1; sigma + rho > 2 when z = 1",
     "sigma > 1/2 when 0 < z < 1; sigma > 1 when z = 1"))


# P07/P08 BE
def _p07_rhs_at(mu_sign):
    def rhs(p, eta):
        mu = mu_sign * p["x"]
        c = TWO_PI * gamma(eta).real
        return _lin((c, bose_einstein(eta - 1, mu)), (-c, bose_einstein(eta, mu)))
    return rhs


def _p07_dom(p):
    return requires((p["x"] >= 0, "x >= 0"), _pair_lines(p), _sum_cond(p, 2, 1))


def _p07_printed_lhs(p, tol):
    return _pv("bose_einstein", dict(mu=p["x"]), "bose_einstein", dict(mu=p["x"]),
               p["sigma"], _rho(p))


def _p07_printed_rhs(p, tol):
    return _p07_rhs_at(+1)(p, p["sigma"] + _rho(p))


_be_note = "the BE function of argument x > 0 is undefined (pole on the path); derived form uses -x"
_parseval_pair(
    ("P07", "P08"), ("Eq.(4.9)", "Eq.(4.10)"), "BE Parseval",
    (SIGMA_POS, X_AXIS),
    "bose_einstein", lambda p: dict(mu=-p["x"]), "bose_einstein", lambda p: dict(mu=-p["x"]),
    _p07_rhs_at(-1), _p07_dom, _p07_dom,
    ("x >= 0; sigma + rho > 2 (printed)", "x >= 0; sigma > 1 (printed)"),
    errata=tuple(Erratum("... B_(s-1)(x) ... = 2 pi Gamma(sigma+rho)[B_(sigma+rho-2)(x) - B_(sigma+rho-1)(x)]",
                         "... B_(s-1)(-x) ... = 2 pi Gamma(sigma+rho)[B_(sigma+rho-2)(-x) - B_(sigma+rho-1)(-x)]",
                         _be_note, printed_lhs=_p07_printed_lhs, printed_rhs=_p07_printed_rhs)
                 for _ in range(2)))


# P09/P10 Hurwitz
def _p09_rhs(p, eta):
    nu = p["nu"]
    c = TWO_PI * gamma(eta).real
    return _lin((c, hurwitz_zeta(eta - 1, 2 * nu - 1)),
                (-c * (2 * nu - 1), hurwitz_zeta(eta, 2 * nu - 1)))


def _p09_dom(p):
    return requires((p["nu"] > 0.5, "Re(nu) > 1/2"),
                    (p["sigma"] > 1 and _rho(p) > 1, "sigma, rho > 1"),
                    (p["sigma"] + _rho(p) > 2, "sigma + rho > 2"))


_parseval_pair(
    ("P09", "P10"), ("Eq.(4.11)", "Eq.(4.12)"), "Hurwitz zeta Parseval",
    (SIGMA_GT1, NU_GT_HALF),
    "hurwitz_zeta", lambda p: dict(nu=p["nu"]), "hurwitz_zeta", lambda p: dict(nu=p["nu"]),
    _p09_rhs, _p09_dom, _p09_dom,
    ("Re(nu) > 1/2; sigma + rho > 2", "Re(nu) > 1/2; sigma > 1"))


# P11/P12 Riemann
def _p11_rhs(p, eta):
    c = TWO_PI * gamma(eta).real
    return _lin((c, riemann_zeta(eta - 1)), (-c, riemann_zeta(eta)))


def _p11_dom(p):
    return requires((p["sigma"] > 1 and _rho(p) > 1, "sigma, rho > 1"),
                    (p["sigma"] + _rho(p) > 2, "sigma + rho > 2"))


_parseval_pair(
    ("P11", "P12"), ("Eq.(4.13)", "Eq.(4.14)"), "Riemann zeta Parseval",
    (SIGMA_GT1,),
    "riemann_zeta", lambda p: {}, "riemann_zeta", lambda p: {},
    _p11_rhs, _p11_dom, _p11_dom, ("sigma + rho > 2", "sigma > 1"))


# P13/P14 eFD
def _p13_rhs(p, eta):
    nu, x = p["nu"], p["x"]
    c = TWO_PI * gamma(eta).real
    return _lin((c * (2 * nu + 1), efd_theta(eta, x, 2 * nu)), (-c, efd_theta(eta - 1, x, 2 * nu)))


def _p13_dom(p):
    return requires((p["nu"] > 0, "Re(nu) > 0"), (p["x"] >= 0, "x >= 0"),
                    (p["sigma"] > 0 and _rho(p) > 0, "sigma, rho > 0"),
                    (p["sigma"] + _rho(p) > 1, "sigma + rho > 1"))


_parseval_pair(
    ("P13", "P14"), ("Eq.(4.16)", "Eq.(4.17)"), "eFD Parseval",
    (SIGMA_POS, NU_POS, X_AXIS),
    "efd_theta", lambda p: dict(x=p["x"], nu=p["nu"]), "efd_theta", lambda p: dict(x=p["x"], nu=p["nu"]),
    _p13_rhs, _p13_dom, _p13_dom,
    ("Re(nu) > 0; x >= 0; sigma + rho > 1", "Re(nu) > 0; x >= 0; sigma > 1/2"))


# P15/P16 FD
def _p15_rhs(p, eta):
    x = p["x"]
    c = TWO_PI * gamma(eta).real
    return _lin((c, fermi_dirac(eta, x)), (-c, fermi_dirac(eta - 1, x)))


def _p15_dom(p):
    return requires((p["x"] >= 0, "x >= 0"),
                    (p["sigma"] > 0 and _rho(p) > 0, "sigma, rho > 0"),
                    (p["sigma"] + _rho(p) > 1, "sigma + rho > 1"))


_parseval_pair(
    ("P15", "P16"), ("Eq.(4.18)", "Eq.(4.19)"), "FD Parseval",
    (SIGMA_POS, X_AXIS),
    "fermi_dirac", lambda p: dict(mu=p["x"]), "fermi_dirac", lambda p: dict(mu=p["x"]),
    _p15_rhs, _p15_dom, _p15_dom, ("x >= 0; sigma + rho > 1", "x >= 0; sigma > 1/2"))


# P17/P18 C(s) zeta(s)
def _p17_rhs(p, eta):
    c = TWO_PI * gamma(eta).real
    return _lin((c, dirichlet_eta(eta)), (-c, dirichlet_eta(eta - 1)))


def _p17_printed_rhs(p, tol):
    eta = p["sigma"] + _rho(p)
    c = TWO_PI * gamma(eta).real
    return _lin((c * (1 - 2.0 ** (1 - eta)), riemann_zeta(eta)),
                (-c * (1 - 2.0 ** (-eta)), riemann_zeta(eta - 1)))


def _p17_dom(p):
    return requires((p["sigma"] > 0 and _rho(p) > 0, "sigma, rho > 0"),
                    (p["sigma"] + _rho(p) > 1, "sigma + rho > 1"))


_parseval_pair(
    ("P17", "P18"), ("Eq.(4.20)", "Eq.(4.21)"), "C(s) zeta(s) Parseval",
    (SIGMA_POS,),
    "dirichlet_eta_factor", lambda p: {}, "dirichlet_eta_factor", lambda p: {},
    _p17_rhs, _p17_dom, _p17_dom, ("sigma + rho > 1", "sigma > 1/2"),
    errata=tuple(Erratum(
        "2 pi Gamma(eta)[(1-2^(1-eta)) zeta(eta) - (1-2^(-eta)) zeta(eta-1)], eta = sigma+rho",
        "2 pi Gamma(eta)[(1-2^(1-eta)) zeta(eta) - (1-2^(2-eta)) zeta(eta-1)], eta = sigma+rho",
        "same coefficient as the squared FD kernel identity for zeta",
        printed_rhs=_p17_printed_rhs) for _ in range(2)))


def _p19_lhs(p, tol):
    x = p["x"]
    return _pv("lerch_phi", dict(z=math.exp(-x), a=p["nu"]), "bose_einstein", dict(mu=-x),
               p["sigma"], p["rho"])


def _p19_rhs(p, tol):
    x, nu = p["x"], p["nu"]
    eta = p["sigma"] + p["rho"]
    z = math.exp(-x)
    c = TWO_PI * gamma(eta).real
    return _lin((c, lerch_phi(z, eta - 1, nu)), (-c * nu, lerch_phi(z, eta, nu)))


def _cross_dom(p, nu_cond):
    return requires(nu_cond, (p["x"] >= 0, "x >= 0"), _pair_lines(p), _sum_cond(p, 2, 1))


register(IdentitySpec(
    "P19", "Eq.(4.22)", "Hurwitz-Lerch x BE cross Parseval",
    (SIGMA_POS, RHO_POS, NU_POS, X_AXIS),
    lambda p: _cross_dom(p, (p["nu"] > 0, "Re(nu) > 0")),
    _p19_lhs, _p19_rhs, LINE_BUDGET,
    constraint="Re(nu) > 0; sigma + rho > 1 when x > 0; sigma + rho > 2 when x = 0"))


def _p20_lhs(p, tol):
    x = p["x"]
    return _pv("bose_einstein", dict(mu=-x), "polylog", dict(z=math.exp(-x)), p["sigma"], p["rho"])


register(IdentitySpec(
    "P20", "Eq.(4.23)", "BE x polylogarithm cross Parseval",
    (SIGMA_POS, RHO_POS, X_AXIS),
    lambda p: _cross_dom(p, (True, "")),
    _p20_lhs, lambda p, tol: _p07_rhs_at(-1)(p, p["sigma"] + p["rho"]), LINE_BUDGET,
    constraint="sigma + rho > 1 when x > 0; sigma + rho > 2 when x = 0"))


def _p21_lhs(p, tol):
    return _pv("hurwitz_zeta", dict(nu=p["nu"]), "riemann_zeta", {}, p["sigma"], p["rho"])


def _p21_rhs(p, tol):
    nu = p["nu"]
    eta = p["sigma"] + p["rho"]
    c = TWO_PI * gamma(eta).real
    return _lin((c, hurwitz_zeta(eta - 1, nu)), (-c * nu, hurwitz_zeta(eta, nu)))


register(IdentitySpec(
    "P21", "Eq.(4.24)", "Hurwitz x Riemann cross Parseval",
    (SIGMA_GT1, RHO_GT1, NU_POS),
    lambda p: requires((p["nu"] > 0, "Re(nu) > 0"),
                       (p["sigma"] > 1 and p["rho"] > 1, "sigma, rho > 1"),
                       (p["sigma"] + p["rho"] > 2, "sigma + rho > 2")),
    _p21_lhs, _p21_rhs, LINE_BUDGET, constraint="Re(nu) > 0; sigma + rho > 2"))


def _p22_lhs(p, tol):
    x = p["x"]
    return _pv("efd_theta", dict(x=x, nu=p["nu"]), "fermi_dirac", dict(mu=-x), p["sigma"], p["rho"])


def _p22_rhs(p, tol):
    nu, x = p["nu"], p["x"]
    eta = p["sigma"] + p["rho"]
    c = TWO_PI * gamma(eta).real
    return _lin((c * (nu + 1), efd_theta(eta, x, nu)), (-c, efd_theta(eta - 1, x, nu)))


register(IdentitySpec(
    "P22", "Eq.(4.25)", "eFD x FD cross Parseval",
    (SIGMA_POS, RHO_POS, NU_GT_M1, X_AXIS),
    lambda p: requires((p["nu"] > -1, "Re(nu) > -1"), (p["x"] >= 0, "x >= 0"),
                       (p["sigma"] > 0 and p["rho"] > 0, "sigma, rho > 0"),
                       (p["sigma"] + p["rho"] > 1, "sigma + rho > 1")),
    _p22_lhs, _p22_rhs, LINE_BUDGET, constraint="Re(nu) > -1; x >= 0; sigma + rho > 1"))


# ---------------------------------------------------------------------------
# D: omega = 0 integrals and duality transforms
# ---------------------------------------------------------------------------

def _wi(fid, **kw):
    def lhs(p, tol):
        params = {k: (v(p) if callable(v) else v) for k, v in kw.items()}
        return weighted_integral(fid, FP(s=p["sigma"], **params))
    return lhs


def _closed(fn):
    return lambda p, tol: _exact(fn(p))


def _ebe_dom(p, key_nu=-1.0):
    return requires((p["nu"] > key_nu, f"Re(nu) > {key_nu:g}"), (p["x"] >= 0, "x >= 0"),
                    (_line_ok(p["x"], p["sigma"]), "sigma > 0 when x > 0; sigma > 1 when x = 0"))


def _lerch_line_dom(p):
    z = p["z"]
    return requires((p["nu"] > 0, "Re(nu) > 0"), (-1 <= z <= 1, "|z| <= 1"),
                    (p["sigma"] > (1 if z == 1 else 0),
                     "sigma > 0 when z != 1; sigma > 1 when z = 1"))


def _polylog_line_dom(p):
    z = p["z"]
    return requires((-1 <= z <= 1, "|z| <= 1"),
                    (p["sigma"] > (1 if z == 1 else 0),
                     "sigma > 0 when z != 1; sigma > 1 when z = 1"))


def _be_line_dom(p):
    return requires((p["x"] >= 0, "x >= 0"), (p["sigma"] > 1, "sigma > 1"))


register(IdentitySpec(
    "D01", "Eq.(5.14)", "integral of Gamma Psi_nu",
    (SIGMA_POS, NU_GT_M1, X_AXIS), _ebe_dom,
    _wi("ebe_psi", x=lambda p: p["x"], nu=lambda p: p["nu"]),
    _closed(lambda p: TWO_PI * math.exp(-p["nu"] * (p["x"] + 1)) / math.expm1(p["x"] + 1)),
    constraint="Re(nu) > -1; sigma > 0 when x > 0; sigma > 1 when x = 0"))

register(IdentitySpec(
    "D02", "Eq.(5.15)", "integral of Gamma Theta_nu",
    (SIGMA_POS, NU_GT_M1, X_AXIS), _ebe_dom,
    _wi("efd_theta", x=lambda p: p["x"], nu=lambda p: p["nu"]),
    _closed(lambda p: TWO_PI * math.exp(-p["nu"] * (p["x"] + 1)) / (math.exp(p["x"] + 1) + 1)),
    constraint="Re(nu) > -1; sigma > 0 when x > 0; sigma > 1 when x = 0"))

register(IdentitySpec(
    "D03", "Eq.(5.16)", "integral of Gamma Phi",
    (SIGMA_POS, NU_POS, Z_CLOSED), _lerch_line_dom,
    _wi("lerch_phi", z=lambda p: p["z"], a=lambda p: p["nu"]),
    _closed(lambda p: TWO_PI * math.exp(1 - p["nu"]) / (E - p["z"])),
    constraint="Re(nu) > 0; |z| <= 1, z != 1, sigma > 0 or z = 1, sigma > 1"))

register(IdentitySpec(
    "D04", "Eq.(5.17)", "integral of Gamma phi",
    (SIGMA_POS, Z_CLOSED),
    _polylog_line_dom,
    _wi("polylog", z=lambda p: p["z"]),
    _closed(lambda p: TWO_PI * p["z"] / (E - p["z"])),
    constraint="|z| <= 1, z != 1, sigma > 0 or z = 1, sigma > 1"))


def _d05_printed_lhs(p, tol):
    return weighted_integral("bose_einstein", FP(s=p["sigma"], mu=p["x"]))


register(IdentitySpec(
    "D05", "Eq.(5.18)", "integral of Gamma B",
    (SIGMA_GT1, X_AXIS), _be_line_dom,
    _wi("bose_einstein", mu=lambda p: -p["x"]),
    _closed(lambda p: TWO_PI / math.expm1(1 + p["x"])),
    constraint="x >= 0; sigma > 1",
    erratum=Erratum("int Gamma B_(s-1)(x) d tau = 2 pi/(e^(1-x) - 1)",
                    "int Gamma B_(s-1)(-x) d tau = 2 pi/(e^(1+x) - 1)", _be_note,
                    printed_lhs=_d05_printed_lhs,
                    printed_rhs=_closed(lambda p: TWO_PI / math.expm1(1 - p["x"])))))

register(IdentitySpec(
    "D06", "Eq.(5.19)", "integral of Gamma F",
    (SIGMA_POS, X_AXIS),
    lambda p: requires((p["x"] >= 0, "x >= 0"), (p["sigma"] > 0, "sigma > 0")),
    _wi("fermi_dirac", mu=lambda p: p["x"]),
    _closed(lambda p: TWO_PI / (math.exp(1 - p["x"]) + 1)),
    constraint="x >= 0; sigma > 0"))

register(IdentitySpec(
    "D07", "Eq.(5.20)", "integral of Gamma zeta(s, nu)",
    (SIGMA_GT1, NU_POS),
    lambda p: requires((p["nu"] > 0, "Re(nu) > 0"), (p["sigma"] > 1, "sigma > 1")),
    _wi("hurwitz_zeta", nu=lambda p: p["nu"]),
    _closed(lambda p: TWO_PI * math.exp(1 - p["nu"]) / (E - 1)),
    constraint="Re(nu) > 0; sigma > 1"))

register(IdentitySpec(
    "D08", "Eq.(5.21)", "integral of C zeta",
    (SIGMA_POS,), lambda p: requires((p["sigma"] > 0, "sigma > 0")),
    _wi("dirichlet_eta_factor"), _closed(lambda p: TWO_PI / (E + 1)), constraint="sigma > 0"))

register(IdentitySpec(
    "D09", "Eq.(5.22)", "integral of Gamma zeta",
    (SIGMA_GT1,), lambda p: requires((p["sigma"] > 1, "sigma > 1")),
    _wi("riemann_zeta"), _closed(lambda p: TWO_PI / (E - 1)), constraint="sigma > 1"))

register(IdentitySpec(
    "D10", "Eq.(5.23)", "integral of Gamma zeta in the critical strip",
    (ParamAxis("sigma", 0.5, lower=0.0, upper=1.0),),
    lambda p: requires((0 < p["sigma"] < 1, "0 < sigma < 1")),
    _wi("riemann_zeta"), _closed(lambda p: TWO_PI / (E - 1) - TWO_PI),
    constraint="0 < sigma < 1",
    erratum=Erratum("2 pi/(e - 1) - 2 pi e", "2 pi/(e - 1) - 2 pi",
                    "the subtracted term is 2 pi times the kernel correction e^{-y} at y = 0",
                    printed_rhs=_closed(lambda p: TWO_PI / (E - 1) - TWO_PI * E))))


# duality transforms on an omega grid
def _dual(fid, **kw):
    def lhs(p, tol):
        params = {k: (v(p) if callable(v) else v) for k, v in kw.items()}
        return duality_line_integral(fid, FP(s=p["sigma"], **params), p["omega"])
    return lhs


def _u(p):
    return math.exp(-p["omega"])


def _d11(p):
    nu, x, s, u = p["nu"], p["x"], p["sigma"], _u(p)
    return (SQRT_2PI * math.exp(-(nu + 1) * x - s * p["omega"] - (nu + 1) * u)
            / -math.expm1(-x - u))


def _d12(p):
    nu, x, s, u = p["nu"], p["x"], p["sigma"], _u(p)
    return SQRT_2PI * math.exp(-(nu + 1) * x - s * p["omega"] - (nu + 1) * u) / (1 + math.exp(-x - u))


def _d13(p):
    nu, z, s, u = p["nu"], p["z"], p["sigma"], _u(p)
    return SQRT_2PI * math.exp(-s * p["omega"] - nu * u) / (1 - z * math.exp(-u))


def _d14(p):
    z, s, u = p["z"], p["sigma"], _u(p)
    return SQRT_2PI * z * math.exp(-s * p["omega"] - u) / (1 - z * math.exp(-u))


def _d15(sign):
    def f(p):
        x, s, u = sign * p["x"], p["sigma"], _u(p)
        return SQRT_2PI * math.exp(x - s * p["omega"] - u) / (1 - math.exp(x - u))
    return f


def _d16(p):
    x, s, u = p["x"], p["sigma"], _u(p)
    return SQRT_2PI * math.exp(x - s * p["omega"] - np.logaddexp(u, x))


def _d17(p):
    nu, s, u = p["nu"], p["sigma"], _u(p)
    return SQRT_2PI * math.exp(-s * p["omega"] - nu * u) / -math.expm1(-u)


def _d18(p):
    s, u = p["sigma"], _u(p)
    return SQRT_2PI * math.exp(-s * p["omega"] - u) / -math.expm1(-u)


def _d19(p):
    s, u = p["sigma"], _u(p)
    return SQRT_2PI * math.exp(-s * p["omega"] - u) / (1 + math.exp(-u))


def _d20(p):
    s, w = p["sigma"], p["omega"]
    return _d18(p) - SQRT_2PI * math.exp((1 - s) * w)


register(IdentitySpec(
    "D11", "Eq.(5.2)", "Fourier transform of Gamma Psi_nu",
    (SIGMA_POS, NU_GT_M1, X_AXIS, OMEGA), _ebe_dom,
    _dual("ebe_psi", x=lambda p: p["x"], nu=lambda p: p["nu"]), _closed(_d11),
    constraint="Re(nu) > -1; sigma > 0 when x > 0; sigma > 1 when x = 0"))

register(IdentitySpec(
    "D12", "Eq.(5.3)", "Fourier transform of Gamma Theta_nu",
    (SIGMA_POS, NU_GT_M1, X_AXIS, OMEGA),
    lambda p: requires((p["nu"] > -1, "Re(nu) > -1"), (p["x"] >= 0, "x >= 0"),
                       (p["sigma"] > 0, "sigma > 0")),
    _dual("efd_theta", x=lambda p: p["x"], nu=lambda p: p["nu"]), _closed(_d12),
    constraint="Re(nu) > -1; x >= 0; sigma > 0"))

register(IdentitySpec(
    "D13", "Eq.(5.4)", "Fourier transform of Gamma Phi",
    (SIGMA_POS, NU_POS, Z_CLOSED, OMEGA), _lerch_line_dom,
    _dual("lerch_phi", z=lambda p: p["z"], a=lambda p: p["nu"]), _closed(_d13),
    constraint="Re(nu) > 0; |z| <= 1, z != 1, sigma > 0 or z = 1, sigma > 1"))

register(IdentitySpec(
    "D14", "Eq.(5.5)", "Fourier transform of Gamma phi",
    (SIGMA_POS, Z_CLOSED,
     OMEGA),
    _polylog_line_dom, _dual("polylog", z=lambda p: p["z"]), _closed(_d14),
    constraint="|z| <= 1, z != 1, sigma > 0 or z = 1, sigma > 1"))


def _d15_printed_lhs(p, tol):
    return duality_line_integral("bose_einstein", FP(s=p["sigma"], mu=p["x"]), p["omega"])


register(IdentitySpec(
    "D15", "Eq.(5.6)", "Fourier transform of Gamma B",
    (SIGMA_GT1, X_AXIS, OMEGA), _be_line_dom,
    _dual("bose_einstein", mu=lambda p: -p["x"]), _closed(_d15(-1)),
    constraint="x >= 0; sigma > 1",
    erratum=Erratum("sqrt(2 pi) e^x e^(-sigma omega)/(exp(e^(-omega)) - e^x)",
                    "sqrt(2 pi) e^(-x) e^(-sigma omega)/(exp(e^(-omega)) - e^(-x))", _be_note,
                    printed_lhs=_d15_printed_lhs, printed_rhs=_closed(_d15(+1)))))

register(IdentitySpec(
    "D16", "Eq.(5.7)", "Fourier transform of Gamma F",
    (SIGMA_POS, X_AXIS, OMEGA),
    lambda p: requires((p["x"] >= 0, "x >= 0"), (p["sigma"] > 0, "sigma > 0")),
    _dual("fermi_dirac", mu=lambda p: p["x"]), _closed(_d16), constraint="x >= 0; sigma > 0"))

register(IdentitySpec(
    "D17", "Eq.(5.8)", "Fourier transform of Gamma zeta(s, nu)",
    (SIGMA_GT1, NU_POS, OMEGA),
    lambda p: requires((p["nu"] > 0, "Re(nu) > 0"), (p["sigma"] > 1, "sigma > 1")),
    _dual("hurwitz_zeta", nu=lambda p: p["nu"]), _closed(_d17), constraint="Re(nu) > 0; sigma > 1"))

register(IdentitySpec(
    "D18", "Eq.(5.9)", "Fourier transform of Gamma zeta",
    (SIGMA_GT1, OMEGA), lambda p: requires((p["sigma"] > 1, "sigma > 1")),
    _dual("riemann_zeta"), _closed(_d18), constraint="sigma > 1"))

register(IdentitySpec(
    "D19", "Eq.(5.10)", "Fourier transform of C zeta",
    (SIGMA_POS, OMEGA), lambda p: requires((p["sigma"] > 0, "sigma > 0")),
    _dual("dirichlet_eta_factor"), _closed(_d19), constraint="sigma > 0"))

register(IdentitySpec(
    "D20", "Eq.(5.13)", "Fourier transform of Gamma zeta in the critical strip",
    (ParamAxis("sigma", 0.5, lower=0.0, upper=1.0), OMEGA),
    lambda p: requires((0 < p["sigma"] < 1, "0 < sigma < 1")),
    _dual("riemann_zeta"), _closed(_d20), constraint="0 < sigma < 1"))


# ---------------------------------------------------------------------------
# X: closing identities
# ---------------------------------------------------------------------------

def _x01_lhs(p, tol):
    return _pv("riemann_zeta", {}, "gamma", {}, p["sigma"], p["rho"])


def _x01_rhs(p, tol):
    eta = p["sigma"] + p["rho"]
    return _times(TWO_PI * gamma(eta).real, hurwitz_zeta(eta, 2.0))


register(IdentitySpec(
    "X01", "Eq.(6.1)", "Gamma x Gamma zeta Parseval",
    (SIGMA_GT1, RHO_GT1),
    lambda p: requires((p["sigma"] > 1 and p["rho"] > 1, "rho, sigma > 1")),
    _x01_lhs, _x01_rhs, LINE_BUDGET, constraint="rho, sigma > 1",
    erratum=Erratum("zeta(sigma + rho, 2)", "2 pi Gamma(sigma + rho) zeta(sigma + rho, 2)",
                    "Parseval on the zeta and gamma kernels gives 2 pi int t^(eta-1) e^(-t)/(e^t - 1) dt",
                    printed_rhs=lambda p, tol: hurwitz_zeta(p["sigma"] + p["rho"], 2.0))))


def _x02_lhs(p, tol):
    nu, x, s = p["nu"], p["x"], p["s"]
    return _lin((1.0, efd_theta(s, x, nu)), (1.0, efd_theta(s, x, nu - 1)))


register(IdentitySpec(
    "X02", "Eq.(6.2)", "eFD recurrence in nu",
    (ParamAxis("nu", 2.0, values=(1.0, 2.0, 3.0), span=(1.0, 3.0)),
     ParamAxis("s", 2.0, values=(1.5, 2.0, 3.5), span=(0.5, 4.0)),
     ParamAxis("x", 0.5, values=(0.0, 0.5, 2.0), span=(0.0, 2.0))),
    lambda p: requires((p["x"] >= 0, "x >= 0"), (p["nu"] >= 1, "nu >= 1"), (p["s"] > 0, "Re(s) > 0")),
    _x02_lhs, _closed(lambda p: p["nu"] ** (-p["s"]) * math.exp(-p["nu"] * p["x"])),
    POINTWISE_TOL, constraint="x >= 0, nu >= 1"))

register(IdentitySpec(
    "X03", "Eq.(6.3)", "Cahen-Mellin integral",
    (SIGMA_POS, ParamAxis("nu", 2.0, values=(1.0, 2.0, 3.0), span=(1.0, 3.0))),
    lambda p: requires((p["nu"] >= 1, "nu >= 1"), (p["sigma"] > 0, "sigma > 0")),
    lambda p, tol: weighted_integral("gamma", FP(s=p["sigma"], nu=p["nu"])),
    _closed(lambda p: TWO_PI * math.exp(-p["nu"])),
    type(LINE_BUDGET)(rel=1e-7, abs=1e-9), constraint="nu >= 1, sigma > 0"))


# ---------------------------------------------------------------------------
# R: relations among the functions (independent paths on the two sides)
# ---------------------------------------------------------------------------

def _r_dom_ebe(p, nu_bound=None):
    conds = [(p["x"] >= 0, "x >= 0"),
             (_line_ok(p["x"], p["sigma"]), "Re(s) > 0 when x > 0; Re(s) > 1 when x = 0")]
    if nu_bound is not None:
        conds.insert(0, (p["nu"] > nu_bound, f"Re(nu) > {nu_bound:g}"))
    return requires(*conds)


register(IdentitySpec(
    "R01", "Eq.(1.5)", "eFD / eBE bridge at x + i pi",
    (ParamAxis("nu", 1.0, values=(0.0, 1.0, 2.0), span=(0.0, 3.0), integer=True),
     SIGMA_POS, TAU, X_AXIS),
    lambda p: requires((float(p["nu"]).is_integer() and p["nu"] >= 0, "integer nu >= 0"),
                       (p["x"] >= 0, "x >= 0"), (p["sigma"] > 0, "Re(s) > 0")),
    lambda p, tol: efd_theta(_s(p), p["x"], p["nu"]),
    lambda p, tol: efd_via_bridge(_s(p), p["x"], p["nu"]),
    POINTWISE_TOL, constraint="integer nu"))

register(IdentitySpec(
    "R02", "Eq.(1.6)", "FD of negative argument is Theta_0",
    (SIGMA_POS, TAU, X_AXIS),
    lambda p: requires((p["x"] >= 0, "x >= 0"), (p["sigma"] > 0, "Re(s) > 0")),
    lambda p, tol: fermi_dirac(_s(p), -p["x"], path="quadrature"),
    lambda p, tol: efd_theta(_s(p), p["x"], 0.0),
    POINTWISE_TOL, constraint="Re(s) > 0; x >= 0"))

register(IdentitySpec(
    "R03", "Eq.(1.7)", "BE of negative argument is Psi_0",
    (SIGMA_POS, TAU, X_AXIS), _r_dom_ebe,
    lambda p, tol: bose_einstein(_s(p), -p["x"], path="quadrature"),
    lambda p, tol: ebe_psi(_s(p), p["x"], 0.0),
    POINTWISE_TOL, constraint="Re(s) > 0 when x > 0; Re(s) > 1 when x = 0"))

register(IdentitySpec(
    "R04", "Eq.(1.10)", "zeta is Psi_0 at x = 0",
    (SIGMA_GT1, TAU), lambda p: requires((p["sigma"] > 1, "sigma > 1")),
    lambda p, tol: riemann_zeta(_s(p)),
    lambda p, tol: ebe_psi(_s(p), 0.0, 0.0, path="quadrature"),
    POINTWISE_TOL, constraint="sigma > 1"))


def _eta_factor(s):
    return 1 - 2.0 ** (1 - s)


register(IdentitySpec(
    "R05", "Eq.(1.11)", "zeta and Theta_0 at x = 0",
    (SIGMA_POS, TAU),
    lambda p: requires((p["sigma"] > 0, "sigma > 0"),
                       (abs(_s(p) - 1) >= 1e-4, "s away from the pole at 1")),
    lambda p, tol: riemann_zeta(_s(p)),
    lambda p, tol: _times(1 / _eta_factor(_s(p)), efd_theta(_s(p), 0.0, 0.0, path="quadrature")),
    POINTWISE_TOL, constraint="sigma > 0",
    erratum=Erratum("zeta(s) = (1 - 2^(1-s)) Theta_0(s; 0)",
                    "Theta_0(s; 0) = (1 - 2^(1-s)) zeta(s)",
                    "Theta_0(s; 0) = Phi(-1, s, 1) is the alternating zeta series",
                    printed_rhs=lambda p, tol: _times(
                        _eta_factor(_s(p)), efd_theta(_s(p), 0.0, 0.0, path="quadrature")))))

register(IdentitySpec(
    "R06", "Eq.(1.13)", "Hurwitz zeta is Psi_nu at x = 0",
    (SIGMA_GT1, TAU, NU_GT_M1),
    lambda p: requires((p["nu"] > -1, "Re(nu) > -1"), (p["sigma"] > 1, "sigma > 1")),
    lambda p, tol: hurwitz_zeta(_s(p), p["nu"] + 1),
    lambda p, tol: ebe_psi(_s(p), 0.0, p["nu"], path="quadrature"),
    POINTWISE_TOL, constraint="Re(nu) > -1; sigma > 1"))

register(IdentitySpec(
    "R07", "Eq.(1.16)", "Psi_0 is the polylogarithm at e^-x",
    (SIGMA_POS, TAU, X_AXIS), _r_dom_ebe,
    lambda p, tol: ebe_psi(_s(p), p["x"], 0.0, path="quadrature"),
    lambda p, tol: polylog(math.exp(-p["x"]), _s(p)),
    POINTWISE_TOL, constraint="Re(s) > 0 when x > 0; Re(s) > 1 when x = 0"))


# ---------------------------------------------------------------------------
# T: Fourier representations on a tau grid
# ---------------------------------------------------------------------------

_T_TOL = type(LINE_BUDGET)(rel=1e-7, abs=1e-9)
_T_TAUS = (0.0, 0.7, 2.3)


def _transform_entry(tid, anchor, title, fid, base, to_params, band):
    def pair(p):
        return TransformPair(fid, FP(s=p["sigma"], **to_params(p)))

    def lhs(p, tol):
        v = complex(pair(p).lhs([p["tau"]])[0])
        return _exact(v)

    def rhs(p, tol):
        pr = pair(p)
        return fourier_of_kernel(pr.kernel, p["tau"])

    register(IdentitySpec(
        tid, anchor, title, (ParamAxis("tau", 0.7, span=(-3.0, 3.0)),),
        lambda p: requires(*band(p)), lhs, rhs, _T_TOL,
        grid_override=tuple(dict(base, tau=t) for t in _T_TAUS),
        constraint="; ".join(text for _, text in band(dict(base, tau=0.0)))))


_transform_entry("T01", "Eq.(3.1)", "eBE Fourier representation", "ebe_psi",
                 dict(sigma=2.0, x=1.0, nu=0.0), lambda p: dict(x=p["x"], nu=p["nu"]),
                 lambda p: [(p["nu"] > -1, "Re(nu) > -1"),
                            (_line_ok(p["x"], p["sigma"]), "sigma > 1 when x = 0; sigma > 0 when x > 0")])
_transform_entry("T02", "Eq.(3.2)", "Hurwitz-Lerch Fourier representation", "lerch_phi",
                 dict(sigma=1.5, z=0.5, nu=1.5), lambda p: dict(z=p["z"], a=p["nu"]),
                 lambda p: [(p["nu"] > 0, "Re(nu) > 0"), (abs(p["z"]) <= 1, "|z| <= 1"),
                            (p["sigma"] > (1 if p["z"] == 1 else 0), "sigma > 0 (z != 1)")])
_transform_entry("T03", "Eq.(3.3)", "polylogarithm Fourier representation", "polylog",
                 dict(sigma=1.5, z=0.5), lambda p: dict(z=p["z"]),
                 lambda p: [(abs(p["z"]) <= 1, "|z| <= 1"), (p["sigma"] > (1 if p["z"] == 1 else 0), "sigma > 0 (z != 1)")])
_transform_entry("T04", "Eq.(3.4)", "BE Fourier representation (argument -x)", "bose_einstein",
                 dict(sigma=2.0, x=0.5), lambda p: dict(mu=-p["x"]),
                 lambda p: [(p["x"] >= 0, "x >= 0"), (p["sigma"] > 1, "sigma > 1")])
_transform_entry("T05", "Eq.(3.5)", "Hurwitz zeta Fourier representation", "hurwitz_zeta",
                 dict(sigma=2.0, nu=1.5), lambda p: dict(nu=p["nu"]),
                 lambda p: [(p["nu"] > 0, "Re(nu) > 0"), (p["sigma"] > 1, "sigma > 1")])
_transform_entry("T06", "Eq.(3.6)", "Riemann zeta Fourier representation", "riemann_zeta",
                 dict(sigma=2.0), lambda p: {}, lambda p: [(p["sigma"] > 1, "sigma > 1")])
_transform_entry("T07", "Eq.(3.7)", "eFD Fourier representation", "efd_theta",
                 dict(sigma=1.5, x=0.5, nu=1.0), lambda p: dict(x=p["x"], nu=p["nu"]),
                 lambda p: [(p["nu"] > -1, "Re(nu) > -1"), (p["x"] >= 0, "x >= 0"),
                            (p["sigma"] > 0, "sigma > 0")])
_transform_entry("T08", "Eq.(3.8)", "FD Fourier representation", "fermi_dirac",
                 dict(sigma=1.5, x=0.0), lambda p: dict(mu=p["x"]),
                 lambda p: [(p["x"] >= 0, "x >= 0"), (p["sigma"] > 1, "sigma > 1")])
_transform_entry("T09", "Eq.(3.9)", "C(s) zeta(s) Fourier representation", "dirichlet_eta_factor",
                 dict(sigma=0.7), lambda p: {}, lambda p: [(p["sigma"] > 0, "sigma > 0")])
_transform_entry("T10", "Eq.(5.12)", "critical-strip zeta Fourier representation", "riemann_zeta",
                 dict(sigma=0.5), lambda p: {}, lambda p: [(0 < p["sigma"] < 1, "0 < sigma < 1")])
