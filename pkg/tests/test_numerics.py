import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fdzeta.numerics import (CONVERGED, TRUNCATED, EvalResult, Tolerance, adaptive_quad,
                             choose_cutoff, cvz_weights, integrate_real_line,
                             integrate_semi_infinite, sum_series)
from fdzeta.transform_engine import gamma_decay_bound
from fdzeta.zeta_kernel import gamma, gamma_array
from oracles import ORACLE

TIGHT = Tolerance(rel=1e-13, abs=1e-15)


def test_tolerance_acceptance_predicate():
    tol = Tolerance(rel=1e-6, abs=1e-9)
    assert tol.accepts(1e-9 + 1e-6 * 3.0, 3.0)
    assert not tol.accepts(2e-9 + 1e-6 * 3.0, 3.0)
    assert tol.target(0.0) == 1e-9


def test_evalresult_converged_flag():
    r = EvalResult(1.0, 0.0, "series", frozenset({CONVERGED}))
    assert r.converged
    assert not EvalResult(1.0, 0.0, "series", frozenset({TRUNCATED})).converged


def test_geometric_series_direct():
    r = sum_series(lambda n: 0.5 ** n, TIGHT)
    assert r.converged
    assert abs(r.value - 2.0) <= r.abs_err


def test_alternating_harmonic_accelerated():
    r = sum_series(lambda n: (-1) ** (n - 1) / n, TIGHT, mode="alternating_accelerated", start=1)
    assert r.converged
    assert abs(r.value - math.log(2)) <= 1e-12


def test_basel_direct_with_tail():
    def tail(n):
        m = n + 1
        return 1 / m + 1 / (2 * m * m) + 1 / (6 * m ** 3), 1 / (30 * m ** 5)

    r = sum_series(lambda n: 1 / (n + 1) ** 2, Tolerance(rel=1e-12, abs=1e-14), tail=tail)
    assert abs(r.value - ORACLE["zeta_2"]) <= max(r.abs_err, 1e-12)


def test_unknown_summation_mode():
    with pytest.raises(ValueError):
        sum_series(lambda n: 1.0, mode="levin")


def test_non_convergent_series_is_flagged():
    r = sum_series(lambda n: 1 / (n + 1), Tolerance(max_terms=2000))
    assert not r.converged
    assert math.isfinite(r.value.real)


def test_cvz_weights_shape():
    w = cvz_weights(32)
    assert len(w) == 32
    assert np.all(np.diff(w) <= 0) and w[0] <= 1.0 and w[-1] > 0


def test_adaptive_quad_polynomial_and_vector():
    out = adaptive_quad(lambda x: x ** 3 - x, 0.0, 2.0)
    assert abs(out.value - 2.0) < 1e-14
    vec = adaptive_quad(lambda x: np.vstack([np.sin(x), np.cos(x)]), 0.0, math.pi)
    assert np.allclose(vec.value, [2.0, 0.0], atol=1e-13)


@pytest.mark.parametrize("kernel, expected", [
    (lambda t: np.exp(-t), 1.0),
    (lambda t: t ** -0.5 * np.exp(-t), math.sqrt(math.pi)),
    (lambda t: t ** 2 / np.expm1(t) ** 2 * np.exp(0 * t), 2 * (ORACLE["zeta_2"] - ORACLE["zeta_3"])),
])
def test_semi_infinite_examples(kernel, expected):
    r = integrate_semi_infinite(kernel)
    assert r.converged
    assert abs(r.value - expected) <= 1e-10 * abs(expected)


def test_bose_square_kernel_value():
    r = integrate_semi_infinite(lambda t: t ** 2 / np.expm1(t) ** 2)
    assert abs(r.value - 0.8857543273) < 1e-9


def test_semi_infinite_detects_growth():
    from fdzeta.errors import DomainError
    with pytest.raises(DomainError):
        integrate_semi_infinite(lambda t: t ** -1.5 * np.exp(-t))


@pytest.mark.parametrize("sigma", [0.5, 1.0, 2.5, 4.0])
def test_semi_infinite_matches_gamma(sigma):
    r = integrate_semi_infinite(lambda t: t ** (sigma - 1) * np.exp(-t))
    g = gamma(sigma).value.real
    assert abs(r.value - g) <= 1e-10 * g


@given(st.floats(0.3, 4.0), st.floats(-6.0, 6.0))
def test_semi_infinite_conjugate_symmetry(sigma, tau):
    s = complex(sigma, tau)
    a = integrate_semi_infinite(lambda t: t ** (s - 1) / (np.exp(t) + 1))
    b = integrate_semi_infinite(lambda t: t ** (s.conjugate() - 1) / (np.exp(t) + 1))
    assert abs(a.value - b.value.conjugate()) <= a.abs_err + b.abs_err + 1e-15


def test_tolerance_monotonicity():
    kernels = [lambda t: t ** 0.3 / (np.exp(t) + 1), lambda t: t ** 1.5 * np.exp(-t) / np.expm1(t)]
    for k in kernels:
        loose = integrate_semi_infinite(k, Tolerance(rel=1e-8, abs=1e-10))
        tight = integrate_semi_infinite(k, Tolerance(rel=5e-9, abs=5e-11))
        assert tight.abs_err <= loose.abs_err
        assert abs(tight.value - loose.value) <= 10 * loose.abs_err


def test_real_line_gaussian():
    r = integrate_real_line(lambda t: np.exp(-t * t),
                            lambda T: math.sqrt(math.pi) * math.erfc(T))
    assert r.converged
    assert abs(r.value - math.sqrt(math.pi)) < 1e-12


def _gamma_line(sigma, companion=lambda s: 1.0, G=1.0):
    def f(tau):
        s = sigma + 1j * np.asarray(tau)
        return gamma_array(s)[0] * companion(s)
    return integrate_real_line(f, gamma_decay_bound(sigma, G))


def test_real_line_gamma_weighted():
    # int Gamma(2 + i tau) d tau = 2 pi / e
    r = _gamma_line(2.0)
    assert r.converged
    assert abs(r.value - 2 * math.pi / math.e) <= 1e-10


def test_real_line_gamma_zeta():
    from fdzeta.zeta_kernel import zeta_array
    r = _gamma_line(1.5, lambda s: zeta_array(s).val, G=30.0)
    assert abs(r.value - 2 * math.pi / (math.e - 1)) <= 1e-9


def test_real_line_truncation_soundness():
    bound = gamma_decay_bound(1.5, 1.0)

    def f(tau):
        return gamma_array(1.5 + 1j * np.asarray(tau))[0]

    tol = Tolerance(rel=1e-8, abs=1e-9)
    cut, _ = choose_cutoff(bound, tol.abs / 10)
    short = adaptive_quad(f, -cut, cut, tol).value
    long = adaptive_quad(f, -2 * cut, 2 * cut, tol).value
    assert abs(long - short) <= bound(cut)


def test_real_line_cap_flags_truncation():
    r = integrate_real_line(lambda t: 1 / (1 + t * t), lambda T: 2 / T, t_cap=50.0)
    assert not r.converged
    assert TRUNCATED in r.flags
    assert r.abs_err >= 2 / 50.0


def test_cutoff_treats_nan_as_unreached():
    cut, reached = choose_cutoff(lambda T: float("nan") if T < 8 else 1e-20, 1e-12)
    assert reached and cut >= 4
