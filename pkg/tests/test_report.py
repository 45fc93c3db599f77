import math

import pytest

from kerrspin.geometry import GravitationalSource
from kerrspin.report import THETA_REL_TOL, compatibility_report
from kerrspin.wigner import theta13_radial_closed_form, theta13_transport


@pytest.fixture(scope="module")
def report():
    return compatibility_report(samples=12, seed=99)


def test_connection_forms_agree(report):
    assert report.connection_rows
    assert report.connection_ok


def test_lorentz_generators_agree(report):
    assert report.lorentz_rows
    assert report.lorentz_ok


def test_theta_deviations_are_enumerated(report):
    # the closed-form rate and the transport rate differ for spinning
    # sources; every out-of-tolerance comparison must surface as a deviation
    assert report.theta_rows
    deviating = [r for r in report.theta_rows if not r.within]
    assert deviating, "spinning-source comparisons should deviate"
    assert set(deviating) <= set(report.deviations())
    for row in deviating:
        assert row.rel_diff > THETA_REL_TOL
        assert abs(row.chi) > 1e-3


def test_near_zero_spin_rows_agree(report):
    for row in report.theta_rows:
        if abs(row.chi) < 1e-6:
            assert row.within


def test_report_text_lists_every_deviation(report):
    text = report.format_text()
    assert text.count("DEVIATION") == len(report.deviations())
    assert "compatibility report" in text


def test_rotation_level_comparison_row_values(report):
    radial = {row.chi: row for row in report.rotation_rows if row.quantity.startswith("omega.radial")}
    assert radial[0.0].within  # both routes give zero for chi = 0
    assert not radial[0.5].within
    assert radial[0.5].reference == pytest.approx(3.18278, abs=1e-4)
    assert radial[0.5].transport == pytest.approx(math.pi / 2.0, abs=1e-6)


def test_pointwise_routes_differ_for_spinning_source():
    src = GravitationalSource(1.0, 0.3)
    closed = theta13_radial_closed_form(src, 3.0)
    transport = theta13_transport(src, 3.0, "radial_fall")
    assert abs(closed - transport) / abs(closed) > 0.1
