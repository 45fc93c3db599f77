"""Spin rotation induced by frame transport along equatorial geodesics.

Two evaluations of the rotation rate theta^1_3 (about the local 2-axis) are
provided and deliberately kept side by side:

* ``theta13_transport`` composes the rate from first principles: hovering
  tetrad -> connection forms -> local Lorentz generator lambda = -u.omega ->
  Wigner generator.  This route is exact for every Lorentz-generator
  component and reproduces the textbook geodetic limit for non-spinning
  sources.
* ``theta13_radial_closed_form`` / ``theta13_circular_closed_form`` are the
  closed-form rate expressions that the published sweep curves are built on.

The two routes coincide at chi = 0 and for all Lorentz-generator components
but differ for spinning sources.  The scenario operations
(``radial_fall_rotation``, ``per_orbit_rotation``) report the closed-form
route, which is what the reference curves quote; ``kerrspin.report``
quantifies the transport-vs-closed-form difference point by point instead of
absorbing it silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ToleranceNotMetError
from .frames import ETA, ConnectionForms, Tetrad, connection_forms, tetrad
from .geodesics import (
    FourVelocity,
    OrbitSense,
    circular_constants,
    circular_velocity,
    radial_fall_velocity,
)
from .geometry import GravitationalSource, metric_scalars
from .quadrature import adaptive_quad

#: x = rs/r above which the integrable 1/sqrt(1-x) endpoint behaviour is
#: absorbed by the substitution x = 1 - s^2.
SUBSTITUTION_X = 0.875

DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class LorentzGenerator:
    """Local Lorentz generator lambda^a_b (boosts and rotations)."""

    lam: np.ndarray

    def lowered(self) -> np.ndarray:
        """lambda_{ab}; antisymmetric for a pure boost+rotation generator."""
        return ETA @ self.lam


@dataclass(frozen=True)
class WignerGenerator:
    """Infinitesimal Wigner rotation theta^a_b and its 1-3 component."""

    theta: np.ndarray
    theta13: float


@dataclass(frozen=True)
class SpinRotation:
    """A finite spin rotation about the local 2-axis.

    ``delta_omega`` and ``orbit_count`` are populated for circular orbits
    only; ``err_estimate`` is the quadrature error bound for integrated
    rotations and zero for the closed per-orbit results.
    """

    omega_total: float
    err_estimate: float
    r_start: float
    r_end: float
    scenario: str
    delta_omega: float | None = None
    orbit_count: int = 1


@dataclass(frozen=True)
class SpinBounds:
    """Magnitudes of the admissible-spin bounds at radius r (symmetric in sign).

    ``dynamics`` is the raw orbit-existence bound (1 - 3rs/2r)sqrt(r^3/2rs),
    negative below the marginal radius; ``effective`` clamps it to [0, rs/2].
    """

    a_censorship: float
    a_dynamics: float
    a_effective: float


def lorentz_generator(u: FourVelocity, forms: ConnectionForms) -> LorentzGenerator:
    """lambda^a_b = -u^nu omega_nu^a_b for force-free (geodesic) motion."""
    lam = -np.einsum("n,nab->ab", u.as_array(), forms.as_array())
    return LorentzGenerator(lam=lam)


def wigner_generator(gen: LorentzGenerator, u: FourVelocity, tet: Tetrad) -> WignerGenerator:
    """Wigner generator theta^a_b from the Lorentz generator.

    theta^a_b = lambda^a_b + (lambda^a_0 u_b - lambda_{b0} u^a)/(u^0 + 1)
    with local components u^a = e^a_mu u^mu and u_a = eta_ab u^b.
    """
    ua = tet.to_local(u.as_array())
    if ua[0] + 1.0 <= 0.0:
        raise DomainError(
            f"u^0 + 1 = {ua[0] + 1.0:.3e} <= 0: frame is degenerate for this velocity"
        )
    ul = ETA @ ua
    lam = gen.lam
    lam_b0 = (ETA @ lam)[:, 0]
    theta = lam + (np.outer(lam[:, 0], ul) - np.outer(ua, lam_b0)) / (ua[0] + 1.0)
    return WignerGenerator(theta=theta, theta13=float(theta[1, 3]))


def theta13_transport(
    source: GravitationalSource,
    r: float,
    scenario: str,
    sense: OrbitSense | None = None,
) -> float:
    """First-principles theta^1_3 at radius r for the given scenario."""
    if scenario == "radial_fall":
        u = radial_fall_velocity(source, r)
    elif scenario == "circular":
        if sense is None:
            raise ValueError("sense is required for the circular scenario")
        u = circular_velocity(source, r, sense)
    else:
        raise ValueError(f"unknown scenario {scenario!r}")
    gen = lorentz_generator(u, connection_forms(source, r))
    return wigner_generator(gen, u, tetrad(source, r)).theta13


# --------------------------------------------------------------------------
# Closed forms.  Every occurrence of a/omega is carried as
# a_over_omega = Sigma^2/(rs*r) so chi = 0 is a regular point.
# --------------------------------------------------------------------------


def lorentz_radial_closed_form(source: GravitationalSource, r: float) -> np.ndarray:
    """Closed-form lambda^a_b for the radial fall (boosts on 1 and 3, rotation about 2)."""
    rs, a = source.rs, source.a
    sc = metric_scalars(source, r)
    sf, sd = math.sqrt(sc.f), math.sqrt(sc.delta)
    r4 = r ** 4
    l01 = rs * rs * (a * a - sc.a_over_omega) / (2.0 * sc.delta * r4) * sd / sf
    l03 = a * rs / (2.0 * r * r * sc.f * sd) * math.sqrt(rs / r * (1.0 + a * a / (r * r)))
    l13 = rs * rs * (a * sc.a_over_omega - a ** 3) / (2.0 * sc.delta * r4 * sf) \
        + a * rs * sf / (sc.delta * r)
    lam = np.zeros((4, 4))
    lam[0, 1] = lam[1, 0] = l01
    lam[0, 3] = lam[3, 0] = l03
    lam[1, 3] = l13
    lam[3, 1] = -l13
    return lam


def lorentz_circular_closed_form(
    source: GravitationalSource, r: float, sense: OrbitSense
) -> np.ndarray:
    """Closed-form lambda^a_b for circular orbits (boost on 1, rotation about 2)."""
    K, J = circular_constants(source, r, sense)
    rs, a = source.rs, source.a
    sc = metric_scalars(source, r)
    sf = math.sqrt(sc.f)
    r4 = r ** 4
    ab1 = a * J - K * sc.a_over_omega + a * a * K + a * sc.f * J * r / rs
    l01 = rs * rs * ab1 / (2.0 * r4 * math.sqrt(sc.delta * sc.f))
    uphi = (a * K * rs / r + sc.f * J) / sc.delta
    l13 = rs * rs * (K * a * sc.a_over_omega - a * a * J) / (2.0 * sc.delta * r4 * sf) \
        - uphi * (a * a * rs / (2.0 * r ** 3 * sf) - sf)
    lam = np.zeros((4, 4))
    lam[0, 1] = lam[1, 0] = l01
    lam[1, 3] = l13
    lam[3, 1] = -l13
    return lam


def theta13_radial_closed_form(source: GravitationalSource, r: float) -> float:
    """Closed-form radial-fall rotation rate theta^1_3 (reference-curve route)."""
    rs = source.rs
    f = 1.0 - rs / r
    if f <= 0.0:
        raise DomainError(f"rotation rate undefined at r={r} (f={f:.3e})")
    return _theta13_radial_from_xf(source, rs / r, f)


def _theta13_radial_from_xf(source: GravitationalSource, x: float, f: float) -> float:
    """Radial-fall rate from x = rs/r with f supplied exactly.

    Near the stationary limit the substituted integration variable gives
    f = s^2 without the cancellation of 1 - rs/r, so the 1/sqrt(f) pieces
    stay accurate arbitrarily close to x = 1.
    """
    rs, a = source.rs, source.a
    r = rs / x
    delta = r * rs * f / x + a * a  # r(r - rs) + a^2, cancellation-free
    sigma2 = (r * r + a * a) ** 2 - a * a * delta
    aow = sigma2 / (rs * r)
    sf = math.sqrt(f)
    r4 = r ** 4
    t1 = rs * rs * (a * aow - a ** 3) / (2.0 * delta * r4 * sf)
    t2 = a * rs * sf / (delta * r)
    t3 = rs * rs * (a ** 3 * f + a * r * r + a * rs * aow / r) \
        / (2.0 * delta * r4 * (f + sf))
    return t1 + t2 + t3


def _theta13_circular_from_kj(source, r, K, J, boost_den):
    """Closed-form circular (theta13, u^phi) for given conserved charges.

    ``boost_den`` is K + sqrt(f) for a regular orbit; the marginal-orbit
    limit replaces it (and K, J) by the radicand-free numerators.
    """
    rs, a = source.rs, source.a
    sc = metric_scalars(source, r)
    sf = math.sqrt(sc.f)
    r4 = r ** 4
    ab1 = a * J - K * sc.a_over_omega + a * a * K + a * sc.f * J * r / rs
    br2 = -a * K / sc.f + a * K + J
    t1 = rs * rs * sf * ab1 * br2 / (2.0 * r4 * sc.delta * boost_den)
    t2 = rs * rs * (K * a * sc.a_over_omega - a * a * J) / (2.0 * sc.delta * r4 * sf)
    uphi = (a * K * rs / r + sc.f * J) / sc.delta
    t3 = -uphi * (a * a * rs / (2.0 * r ** 3 * sf) - sf)
    return t1 + t2 + t3, uphi


def theta13_circular_closed_form(
    source: GravitationalSource, r: float, sense: OrbitSense
) -> float:
    """Closed-form circular-orbit rotation rate theta^1_3 (reference-curve route)."""
    K, J = circular_constants(source, r, sense)
    sc = metric_scalars(source, r)
    theta13, _ = _theta13_circular_from_kj(source, r, K, J, K + math.sqrt(sc.f))
    return theta13


# --------------------------------------------------------------------------
# Finite rotations.
# --------------------------------------------------------------------------


def radial_fall_rotation(
    source: GravitationalSource,
    x_start: float = 0.0,
    x_end: float = 1.0,
    tol: float = DEFAULT_TOL,
) -> SpinRotation:
    """Accumulated rotation angle for the radial fall from x_start to x_end.

    x = rs/r, so x_start = 0 encodes a drop from rest at infinity and
    x_end = 1 reaches the equatorial stationary limit surface.  The integral
    of theta^1_3/u^r is taken in x; above ``SUBSTITUTION_X`` the variable
    change x = 1 - s^2 bounds the integrand through the 1/sqrt(1-x)
    endpoint.  Positive chi gives a positive angle.
    """
    if not 0.0 <= x_start < x_end <= 1.0:
        raise DomainError(f"need 0 <= x_start < x_end <= 1, got [{x_start}, {x_end}]")
    if tol <= 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    rs, chi = source.rs, source.chi

    def rate_over_speed(x, f):
        th = _theta13_radial_from_xf(source, x, f)
        return th * rs / (x * x * math.sqrt(x + chi * chi * x ** 3))

    x_cut = min(x_end, SUBSTITUTION_X)
    pieces = []
    if x_start < x_cut:
        pieces.append((lambda x: rate_over_speed(x, 1.0 - x), x_start, x_cut))
    if x_end > x_cut:
        s_lo = math.sqrt(1.0 - x_end)
        s_hi = math.sqrt(1.0 - max(x_start, x_cut))
        pieces.append((lambda s: 2.0 * s * rate_over_speed(1.0 - s * s, s * s), s_lo, s_hi))
    part_tol = tol / len(pieces)
    omega = 0.0
    err = 0.0
    failed = None
    for fn, lo, hi in pieces:
        try:
            val, e = adaptive_quad(fn, lo, hi, tol=part_tol)
        except ToleranceNotMetError as exc:
            val, e = exc.best_estimate, exc.err_estimate
            failed = exc
        omega += val
        err += e
    if failed is not None:
        raise ToleranceNotMetError(
            f"rotation integral error estimate {err:.3e} exceeds tolerance {tol:.3e}",
            best_estimate=omega,
            err_estimate=err,
        )
    return SpinRotation(
        omega_total=omega,
        err_estimate=err,
        r_start=math.inf if x_start == 0.0 else rs / x_start,
        r_end=rs / x_end,
        scenario="radial_fall",
    )


def per_orbit_rotation(source: GravitationalSource, r: float, sense: OrbitSense) -> SpinRotation:
    """Rotation per circular orbit: total angle and the gravitational part.

    The rate and u^phi are constants of the orbit, so the angle per orbit is
    exactly 2*pi*theta13/u^phi and delta_omega = 1 - theta13/u^phi isolates
    the part due to gravity after removing the trivial revolution.
    """
    K, J = circular_constants(source, r, sense)
    sc = metric_scalars(source, r)
    theta13, uphi = _theta13_circular_from_kj(source, r, K, J, K + math.sqrt(sc.f))
    ratio = theta13 / uphi
    return SpinRotation(
        omega_total=2.0 * math.pi * ratio,
        err_estimate=0.0,
        r_start=r,
        r_end=r,
        scenario="circular",
        delta_omega=1.0 - ratio,
        orbit_count=1,
    )


def marginal_orbit_rotation(source: GravitationalSource, r: float, sense: OrbitSense) -> SpinRotation:
    """Limit of per_orbit_rotation as the orbit becomes marginal.

    On the orbit-existence boundary the conserved charges diverge like
    1/sqrt(radicand) while the ratio theta13/u^phi stays finite; the limit
    is obtained by replacing (K, J) with their radicand-free numerators and
    the boost denominator K + sqrt(f) with K's numerator.
    """
    rs, a = source.rs, source.a
    sgn = sense.sign
    s = math.sqrt(rs / (2.0 * r ** 3))
    f = 1.0 - rs / r
    kappa = f - sgn * a * s
    iota = -sgn * (1.0 + a * a / (r * r) + sgn * 2.0 * a * s) * math.sqrt(r * rs / 2.0)
    theta13, uphi = _theta13_circular_from_kj(source, r, kappa, iota, kappa)
    ratio = theta13 / uphi
    return SpinRotation(
        omega_total=2.0 * math.pi * ratio,
        err_estimate=0.0,
        r_start=r,
        r_end=r,
        scenario="circular",
        delta_omega=1.0 - ratio,
        orbit_count=1,
    )


def n_orbit_rotation(per_orbit: SpinRotation, n: int) -> SpinRotation:
    """Rotation after n completed orbits; additivity is exact arithmetic."""
    if per_orbit.scenario != "circular" or per_orbit.delta_omega is None:
        raise ValueError("n_orbit_rotation requires a circular per-orbit rotation")
    if n < 0 or n != int(n):
        raise ValueError(f"orbit count must be a non-negative integer, got {n}")
    return SpinRotation(
        omega_total=n * per_orbit.omega_total,
        err_estimate=n * per_orbit.err_estimate,
        r_start=per_orbit.r_start,
        r_end=per_orbit.r_end,
        scenario="circular",
        delta_omega=n * per_orbit.delta_omega,
        orbit_count=n * per_orbit.orbit_count,
    )


def spin_bound_curves(rs: float, r: float) -> SpinBounds:
    """Admissible-spin bound magnitudes at radius r (bounds come in +- pairs).

    The censorship bound rs/2 is radius-independent; the dynamics bound is
    the largest |a| with a circular orbit at r for the adverse sense.
    """
    if rs <= 0.0:
        raise DomainError(f"Schwarzschild radius must be positive, got rs={rs}")
    dynamics = (1.0 - 1.5 * rs / r) * math.sqrt(r ** 3 / (2.0 * rs))
    censorship = rs / 2.0
    return SpinBounds(
        a_censorship=censorship,
        a_dynamics=dynamics,
        a_effective=min(censorship, max(0.0, dynamics)),
    )
