import math

import numpy as np
import pytest

from kerrspin.errors import CensorshipError, DomainError
from kerrspin.geometry import (
    CensorshipVerdict,
    GravitationalSource,
    horizons,
    metric_inverse,
    metric_scalars,
    metric_tensor,
    validate_censorship,
)

PI_2 = math.pi / 2.0


def test_censorship_verdicts():
    assert validate_censorship(1.0, 0.0) is CensorshipVerdict.OK
    assert validate_censorship(1.0, 0.5) is CensorshipVerdict.EXTREMAL
    assert validate_censorship(1.0, 0.6) is CensorshipVerdict.VIOLATION
    assert validate_censorship(1.0, -0.5) is CensorshipVerdict.EXTREMAL
    assert validate_censorship(1.0, 0.5 + 1e-13) is CensorshipVerdict.EXTREMAL


def test_censorship_rejects_bad_radius():
    with pytest.raises(DomainError):
        validate_censorship(0.0, 0.2)


def test_source_refuses_naked_singularity():
    with pytest.raises(CensorshipError):
        GravitationalSource(rs=1.0, chi=0.7)


def test_source_spin_is_derived():
    src = GravitationalSource(rs=2.0, chi=0.25)
    assert src.a == 0.5
    assert not src.is_extremal
    assert GravitationalSource(1.0, 0.5).is_extremal
    assert GravitationalSource.from_angular_momentum(2.0, 0.5).chi == 0.25


def test_scalars_schwarzschild_point():
    sc = metric_scalars(GravitationalSource(1.0, 0.0), 2.0, PI_2)
    assert sc.delta == pytest.approx(2.0, abs=1e-15)
    assert sc.f == pytest.approx(0.5, abs=1e-15)
    assert sc.omega == 0.0


def test_scalars_spinning_point():
    sc = metric_scalars(GravitationalSource(1.0, 0.5), 2.0, PI_2)
    assert sc.delta == pytest.approx(2.25, abs=1e-15)
    assert sc.sigma2 == pytest.approx(17.5, abs=1e-12)
    assert sc.omega == pytest.approx(1.0 / 17.5, abs=1e-15)


def test_scalars_at_equatorial_stationary_limit():
    sc = metric_scalars(GravitationalSource(1.0, 0.5), 1.0, PI_2)
    assert sc.f == pytest.approx(0.0, abs=1e-15)
    assert sc.delta == pytest.approx(0.25, abs=1e-15)


def test_scalars_equatorial_identities():
    rng = np.random.default_rng(7)
    for _ in range(100):
        src = GravitationalSource(1.0, float(rng.uniform(-0.5, 0.5)))
        r = 1.0 / float(rng.uniform(0.05, 0.95))
        sc = metric_scalars(src, r, PI_2)
        assert sc.rho2 == pytest.approx(r * r, rel=1e-15)
        assert sc.w ** 2 == pytest.approx(sc.f, abs=1e-12)
        # definition closure and the division-free a/omega
        assert sc.omega * sc.sigma2 == pytest.approx(src.rs * r * src.a, rel=1e-12)
        assert sc.omega * sc.a_over_omega == pytest.approx(src.a, abs=1e-12)


def test_scalars_reject_bad_radius():
    with pytest.raises(DomainError):
        metric_scalars(GravitationalSource(1.0, 0.3), 0.0, PI_2)


def test_metric_schwarzschild_closed_forms():
    src = GravitationalSource(1.0, 0.0)
    for r, theta in [(2.0, PI_2), (3.0, 0.7), (10.0, 2.1)]:
        g = metric_tensor(src, r, theta)
        f = 1.0 - 1.0 / r
        assert g[0, 0] == pytest.approx(-f, abs=1e-15)
        assert g[1, 1] == pytest.approx(1.0 / f, abs=1e-15)
        assert g[2, 2] == pytest.approx(r * r, abs=1e-15)
        assert g[3, 3] == pytest.approx(r * r * math.sin(theta) ** 2, rel=1e-15)
        assert g[0, 3] == 0.0


def test_metric_spinning_gphiphi():
    g = metric_tensor(GravitationalSource(1.0, 0.5), 2.0, PI_2)
    assert g[3, 3] == pytest.approx(17.5 / 4.0, rel=1e-14)
    assert g[0, 3] != 0.0


def test_metric_symmetry_bit_exact():
    g = metric_tensor(GravitationalSource(1.0, 0.41), 2.3, 0.9)
    assert np.array_equal(g, g.T)


def test_metric_inverse_identity():
    rng = np.random.default_rng(11)
    for _ in range(50):
        src = GravitationalSource(1.0, float(rng.uniform(-0.5, 0.5)))
        r = 1.0 / float(rng.uniform(0.05, 0.95))
        g = metric_tensor(src, r, PI_2)
        ginv = metric_inverse(src, r, PI_2)
        assert np.abs(g @ ginv - np.eye(4)).max() < 1e-12


def test_frame_drag_asymptote():
    # omega -> rs*a/r^3 for large r
    for chi in (0.1, 0.5, -0.3):
        src = GravitationalSource(1.0, chi)
        r = 1e3
        omega = metric_scalars(src, r, PI_2).omega
        assert abs(omega * r ** 3 / (src.rs * src.a) - 1.0) < 1e-2


def test_horizons_schwarzschild():
    h = horizons(GravitationalSource(1.0, 0.0), PI_2)
    assert (h.r_minus, h.r_plus) == (0.0, 1.0)
    assert (h.s_minus, h.s_plus) == (0.0, 1.0)


def test_horizons_spinning_pole():
    h = horizons(GravitationalSource(1.0, 0.3), 0.0)  # cos(theta) = 1
    assert h.r_plus == pytest.approx(0.9, abs=1e-15)
    assert h.r_minus == pytest.approx(0.1, abs=1e-15)


def test_stationary_limit_equator_equals_rs():
    for chi in (0.1, 0.3, 0.5):
        h = horizons(GravitationalSource(1.0, chi), PI_2)
        assert h.s_plus == pytest.approx(1.0, abs=1e-12)


def test_horizon_ordering():
    # Full chain including rs holds on theta in [pi/2, pi]; the chain without
    # rs holds for every theta.
    for chi in np.linspace(-0.5, 0.5, 11):
        src = GravitationalSource(1.0, float(chi))
        for theta in np.linspace(0.0, math.pi, 21):
            h = horizons(src, float(theta))
            assert h.s_minus <= h.r_minus + 1e-12
            assert h.r_minus <= h.r_plus
            assert h.r_plus <= h.s_plus + 1e-12
            assert h.r_plus <= src.rs
            if theta >= PI_2:
                assert src.rs <= h.s_plus + 1e-12
