import math

import numpy as np
import pytest

from fdzeta import transform_engine as te
from fdzeta.errors import DomainError
from fdzeta.numerics import TRUNCATED
from fdzeta.zeta_kernel import FunctionParams as FP, gamma_array
from oracles import E, SQRT_2PI

PAIRS = [
    ("ebe_psi", FP(s=2.0, x=1.0, nu=0.0)),
    ("lerch_phi", FP(s=1.5, z=0.5, a=1.5)),
    ("polylog", FP(s=1.5, z=0.5)),
    ("bose_einstein", FP(s=2.0, mu=-0.5)),
    ("hurwitz_zeta", FP(s=2.0, nu=1.5)),
    ("riemann_zeta", FP(s=2.0)),
    ("efd_theta", FP(s=1.5, x=0.5, nu=1.0)),
    ("fermi_dirac", FP(s=1.5, mu=0.0)),
    ("dirichlet_eta_factor", FP(s=0.7)),
    (te.ZETA_STRIP, FP(s=0.5)),
]


@pytest.mark.parametrize("function, params, expected", [
    ("riemann_zeta", FP(s=2.0), 1 / (E - 1)),
    ("efd_theta", FP(s=1.0, x=0.0, nu=0.0), 1 / (E + 1)),
    (te.ZETA_STRIP, FP(s=0.5), 1 / (E - 1) - 1),
    ("ebe_psi", FP(s=2.0, x=1.0, nu=0.5), math.exp(-1.5) * math.exp(-0.5) / (E - math.exp(-1))),
])
def test_kernel_at_origin(function, params, expected):
    k = te.kernel_of(function, params)
    assert abs(k.prefactor * complex(k(np.array([0.0]))[0]) - expected) < 1e-15


def test_kernel_pullback_form():
    # e^{sigma y} exp(-nu e^y) / (exp(e^y) - e^{-x}) for eBE
    k = te.kernel_of("ebe_psi", FP(s=1.3, x=0.7, nu=0.4))
    for y in (-3.0, -0.5, 0.8, 2.0):
        t = math.exp(y)
        direct = math.exp(1.3 * y) * math.exp(-0.4 * t) / (math.exp(t) - math.exp(-0.7))
        got = k.prefactor * complex(k(np.array([y]))[0]) * math.exp(1.4 * 0.7)
        assert abs(got - direct) <= 1e-14 * direct


@pytest.mark.parametrize("function, params, condition", [
    ("riemann_zeta", FP(s=-0.2), "sigma"),
    (te.ZETA_STRIP, FP(s=1.2), "0 < sigma < 1"),
    ("bose_einstein", FP(s=2.0, mu=0.5), "mu <= 0"),
    ("hurwitz_zeta", FP(s=2.0, nu=-0.5), "Re(nu) > 0"),
    ("lerch_phi", FP(s=1.5, z=1.5, a=1.0), "cut"),
    ("efd_theta", FP(s=-0.5, x=0.5, nu=0.0), "sigma > 0"),
])
def test_band_violations(function, params, condition):
    with pytest.raises(DomainError) as info:
        te.kernel_of(function, params)
    assert condition in str(info.value)


@pytest.mark.parametrize("function, params", PAIRS, ids=[p[0] for p in PAIRS])
@pytest.mark.parametrize("tau", [0.0, 0.7, 2.3])
def test_transform_pair_consistency(function, params, tau):
    assert te.verify_transform_pair(te.TransformPair(function, params), tau) <= 1e-7


def test_zeta_pair_at_zero_is_basel():
    pair = te.TransformPair("riemann_zeta", FP(s=2.0))
    assert abs(pair.lhs(np.array([0.0]))[0] - math.pi ** 2 / 6) < 1e-13
    assert te.verify_transform_pair(pair, 0.0) <= 1e-8


def test_ebe_and_fd_pairs_at_spot_points():
    assert te.verify_transform_pair(te.TransformPair("ebe_psi", FP(s=2, x=1, nu=0)), 0.7) <= 1e-7
    assert te.verify_transform_pair(te.TransformPair("fermi_dirac", FP(s=1.5, mu=0)), 1.0) <= 1e-7


def test_pair_rhs_is_prefactored_kernel():
    pair = te.TransformPair("efd_theta", FP(s=1.0, x=0.5, nu=1.0))
    y = np.array([0.0])
    k = pair.kernel
    assert pair.rhs(y)[0] == k.prefactor * k(y)[0]


@pytest.mark.parametrize("sigma, omega, expected", [
    (2.0, 0.0, SQRT_2PI / (E - 1)),
])
def test_zeta_duality_value(sigma, omega, expected):
    r = te.duality_value("riemann_zeta", FP(s=sigma), omega=omega)
    assert abs(r.value - expected) < 1e-14


def test_strip_and_efd_duality_values():
    strip = te.duality_value(te.ZETA_STRIP, FP(s=0.5)).value
    assert abs(strip - SQRT_2PI * (1 / (E - 1) - 1)) < 1e-14
    efd = te.duality_value("efd_theta", FP(s=1.0)).value
    assert abs(efd - SQRT_2PI / (E + 1)) < 1e-14


def test_ebe_duality_closed_form():
    sigma, x, nu, w = 1.5, 0.3, 0.7, -0.4
    got = te.duality_value("ebe_psi", FP(s=sigma, x=x, nu=nu), omega=w).value
    u = math.exp(-w)
    want = SQRT_2PI * math.exp(-(nu + 1) * x - sigma * w - nu * u) / (math.exp(u) - math.exp(-x))
    assert abs(got - want) <= 1e-14 * want


@pytest.mark.parametrize("omega", [0.0, 0.5, -0.5])
def test_duality_round_trip(omega):
    params = FP(s=2.0)
    line = te.duality_line_integral("riemann_zeta", params, omega)
    closed = te.duality_value("riemann_zeta", params, omega=omega)
    assert abs(line.value - closed.value) <= 1e-6 * abs(closed.value)


def test_efd_duality_round_trip():
    params = FP(s=1.0, x=0.0, nu=0.0)
    line = te.duality_line_integral("efd_theta", params, 1.0)
    closed = te.duality_value("efd_theta", params, omega=1.0)
    assert abs(line.value - closed.value) <= 1e-6


@pytest.mark.parametrize("function, params, integral", [
    ("ebe_psi", FP(s=1.5, x=0.5, nu=0.5), 2 * math.pi * math.exp(-0.75) / math.expm1(1.5)),
    ("efd_theta", FP(s=1.5, x=0.5, nu=0.5), 2 * math.pi * math.exp(-0.75) / (math.exp(1.5) + 1)),
    ("lerch_phi", FP(s=1.5, z=0.5, a=1.5), 2 * math.pi * math.exp(-0.5) / (E - 0.5)),
    ("polylog", FP(s=1.5, z=0.5), 2 * math.pi * 0.5 / (E - 0.5)),
    ("bose_einstein", FP(s=2.0, mu=-0.5), 2 * math.pi / math.expm1(1.5)),
    ("fermi_dirac", FP(s=1.5, mu=0.5), 2 * math.pi / (math.exp(0.5) + 1)),
    ("hurwitz_zeta", FP(s=2.0, nu=1.5), 2 * math.pi * math.exp(-0.5) / (E - 1)),
    ("dirichlet_eta_factor", FP(s=0.5), 2 * math.pi / (E + 1)),
    ("riemann_zeta", FP(s=1.5), 2 * math.pi / (E - 1)),
    ("riemann_zeta", FP(s=0.5), 2 * math.pi / (E - 1) - 2 * math.pi),
])
def test_omega_zero_reduction(function, params, integral):
    closed = te.duality_value(function if params.s.real > 1 or function != "riemann_zeta"
                              else te.ZETA_STRIP, params).value
    assert abs(SQRT_2PI * closed - integral) <= 1e-13 * abs(integral)
    line = te.weighted_integral(function, params).value
    assert abs(line - integral) <= 1e-8 * abs(integral)


def test_duality_overflow_is_flagged():
    r = te.duality_value("riemann_zeta", FP(s=2.0), omega=-7.0)
    assert TRUNCATED in r.flags
    assert r.value == 0


def test_gamma_decay_bound_examples():
    b = te.gamma_decay_bound(2.0, 2.0)
    assert b(40) < 1e-20
    assert b(10) > b(20) > b(40)
    taus = np.linspace(40, 80, 400)
    sampled = np.trapezoid(2 * np.abs(gamma_array(2.0 + 1j * taus)[0]), taus) * 2
    assert sampled < b(40)
    b5 = te.gamma_decay_bound(0.5, 1.0)
    vals = [b5(T) for T in np.linspace(0.5, 60, 120)]
    assert all(u > v for u, v in zip(vals, vals[1:]))


def test_gamma_decay_bound_product():
    b = te.gamma_decay_bound(1.5, 1.0, rho=1.5)
    taus = np.linspace(10, 60, 2000)
    g = np.abs(gamma_array(1.5 + 1j * taus)[0]) ** 2
    assert 2 * np.trapezoid(g, taus) < b(10)


def test_parseval_zeta():
    r = te.parseval_integral("riemann_zeta", FP(s=1.5), "riemann_zeta", FP(s=1.5))
    want = 2 * math.pi * 2 * (math.pi ** 2 / 6 - 1.2020569031595943)
    assert abs(r.value - want) <= 1e-8 * want


def test_fourier_point_defaults():
    p = te.FourierPoint(sigma=1.5)
    assert (p.omega, p.tau) == (0.0, 0.0)


def test_companion_sup_samples_symmetric_range():
    assert te.companion_sup(lambda t: np.abs(np.asarray(t)), span=5.0) == pytest.approx(te.SAFETY * 5.0)
