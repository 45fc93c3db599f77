import math

import pytest

from kerrspin.errors import ToleranceNotMetError
from kerrspin.quadrature import adaptive_quad, gauss_kronrod_panel


def test_panel_exact_for_kronrod_degree():
    # K15 integrates polynomials up to degree 22 exactly
    val, _ = gauss_kronrod_panel(lambda x: x ** 22, 0.0, 1.0)
    assert abs(val - 1.0 / 23.0) < 1e-14


def test_panel_smooth_function():
    val, err = gauss_kronrod_panel(math.exp, 0.0, 1.0)
    assert abs(val - (math.e - 1.0)) < 1e-13
    assert err < 1e-12


def test_adaptive_integrable_endpoint_singularity():
    # int_0^1 log(x) dx = -1; endpoint is never sampled
    val, err = adaptive_quad(lambda x: math.log(x), 0.0, 1.0, tol=1e-9)
    assert abs(val + 1.0) < 1e-8
    assert err < 1e-9


def test_adaptive_oscillatory():
    val, err = adaptive_quad(lambda x: math.cos(50.0 * x), 0.0, 3.0, tol=1e-11)
    assert abs(val - math.sin(150.0) / 50.0) < 1e-10
    assert err < 1e-11


def test_adaptive_error_estimate_is_bound():
    val, err = adaptive_quad(lambda x: math.sqrt(abs(x - 1.0 / 3.0)), 0.0, 1.0, tol=1e-10)
    exact = ((1.0 / 3.0) ** 1.5 + (2.0 / 3.0) ** 1.5) * 2.0 / 3.0
    assert abs(val - exact) <= err + 1e-12


def test_adaptive_empty_interval():
    assert adaptive_quad(math.exp, 2.0, 2.0, tol=1e-12) == (0.0, 0.0)


def test_adaptive_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        adaptive_quad(math.exp, 0.0, 1.0, tol=0.0)


def test_tolerance_not_met_carries_best_estimate():
    with pytest.raises(ToleranceNotMetError) as exc_info:
        adaptive_quad(lambda x: math.sqrt(abs(x - 1.0 / 3.0)), 0.0, 1.0,
                      tol=1e-14, max_panels=8)
    exc = exc_info.value
    exact = ((1.0 / 3.0) ** 1.5 + (2.0 / 3.0) ** 1.5) * 2.0 / 3.0
    assert exc.err_estimate >= 1e-14
    assert abs(exc.best_estimate - exact) < 1e-3
