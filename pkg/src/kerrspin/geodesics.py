"""Equatorial geodesics: radial fall with zero angular momentum and circular orbits.

Conserved charges are the covariant momentum components K (energy, p_t) and
J (angular momentum, p_phi).  The orbit sense fixes the sign branch of the
circular-orbit constants: counter-rotating takes the upper signs,
co-rotating the lower.  A source with chi and an orbit of one sense is
physically the mirror of (-chi, other sense); both knobs are exposed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, NoCircularOrbitError
from .geometry import GravitationalSource, metric_scalars

#: Regime bounds on coordinate-time rates.
RADIAL_DR_DT_BOUND = 0.4
RADIAL_R_DPHI_DT_BOUND = 1.0 / 3.0
CIRCULAR_R_DPHI_DT_BOUND = 0.7

#: Largest rs/r at which circular orbits are admitted (existence window
#: combined with the spin bound; see circular_orbit_exists).
CIRCULAR_X_MAX = 2.0 / 3.0


class OrbitSense(Enum):
    CO_ROTATING = "co"
    COUNTER_ROTATING = "counter"

    @property
    def sign(self) -> float:
        """+1 for the upper-sign (counter-rotating) branch, -1 for the lower."""
        return 1.0 if self is OrbitSense.COUNTER_ROTATING else -1.0


@dataclass(frozen=True)
class FourVelocity:
    """Geodesic 4-velocity in coordinate components (per proper time)."""

    ut: float
    ur: float
    utheta: float
    uphi: float
    K: float
    J: float
    scenario: str
    sense: OrbitSense | None = None

    def as_array(self) -> np.ndarray:
        return np.array([self.ut, self.ur, self.utheta, self.uphi])


@dataclass(frozen=True)
class RegimeReport:
    """Coordinate-time rates at a point and whether they sit in the
    non-ultra-relativistic window where geodesic motion is trustworthy."""

    scenario: str
    dr_dt: float
    r_dphi_dt: float
    within_bounds: bool


def radial_fall_velocity(source: GravitationalSource, r: float) -> FourVelocity:
    """4-velocity of a particle dropped from rest at infinity with J = 0.

    The infall branch u^r <= 0 is selected.  Defined for r >= rs with
    Delta > 0; the corner (chi = 0, r = rs) is the degenerate horizon point.
    """
    rs, a = source.rs, source.a
    if r < rs:
        raise DomainError(f"r = {r} is inside the equatorial stationary limit rs = {rs}")
    sc = metric_scalars(source, r)
    if sc.delta <= 0.0:
        raise DomainError(f"Delta = {sc.delta:.3e} <= 0 at r={r}")
    ut = sc.a_over_omega * rs / (sc.delta * r)
    uphi = a * rs / (sc.delta * r)
    ur = -math.sqrt(rs / r + a * a * rs / r ** 3)
    return FourVelocity(ut=ut, ur=ur, utheta=0.0, uphi=uphi, K=1.0, J=0.0,
                        scenario="radial_fall")


def circular_orbit_radicand(source: GravitationalSource, r: float, sense: OrbitSense) -> float:
    """Existence radicand 1 - 3rs/2r -+ 2a*sqrt(rs/2r^3); orbits need it positive."""
    rs, a = source.rs, source.a
    s = math.sqrt(rs / (2.0 * r ** 3))
    return 1.0 - 1.5 * rs / r - sense.sign * 2.0 * a * s


def circular_orbit_exists(source: GravitationalSource, r: float, sense: OrbitSense) -> bool:
    """Whether a circular geodesic of the given sense exists at radius r.

    Requires the sense-appropriate radicand 1 - 3rs/2r -+ 2a*sqrt(rs/2r^3)
    to be positive and rs/r <= 2/3, the window obtained by combining the
    orbit-existence bound on |a| with the horizon-existence bound.
    """
    if source.rs / r > CIRCULAR_X_MAX:
        return False
    return circular_orbit_radicand(source, r, sense) > 0.0


def circular_constants(source: GravitationalSource, r: float, sense: OrbitSense) -> tuple[float, float]:
    """Conserved (K, J) of the circular orbit at radius r."""
    if not circular_orbit_exists(source, r, sense):
        raise NoCircularOrbitError(
            f"no {sense.value}-rotating circular orbit at rs/r = {source.rs / r:.6f} "
            f"with chi = {source.chi:.6f}"
        )
    rs, a = source.rs, source.a
    sgn = sense.sign
    s = math.sqrt(rs / (2.0 * r ** 3))
    f = 1.0 - rs / r
    root = math.sqrt(circular_orbit_radicand(source, r, sense))
    K = (f - sgn * a * s) / root
    J = -sgn * (1.0 + a * a / (r * r) + sgn * 2.0 * a * s) / root * math.sqrt(r * rs / 2.0)
    return K, J


def circular_velocity(source: GravitationalSource, r: float, sense: OrbitSense) -> FourVelocity:
    """4-velocity of the circular orbit at radius r."""
    K, J = circular_constants(source, r, sense)
    rs, a = source.rs, source.a
    sc = metric_scalars(source, r)
    ut = rs / (sc.delta * r) * (K * sc.a_over_omega - a * J)
    uphi = (a * K * rs / r + sc.f * J) / sc.delta
    return FourVelocity(ut=ut, ur=0.0, utheta=0.0, uphi=uphi, K=K, J=J,
                        scenario="circular", sense=sense)


def frame_drag_rate(source: GravitationalSource, r: float) -> float:
    """Angular velocity omega = rs*r*a/Sigma^2 induced on zero-J infall."""
    return metric_scalars(source, r).omega


def regime_check(
    source: GravitationalSource,
    r: float,
    scenario: str,
    sense: OrbitSense | None = None,
) -> RegimeReport:
    """Coordinate-time rates |dr/dt| and |r dphi/dt| at radius r.

    Bounds: 0.4 and 1/3 for radial fall, 0.7 on |r dphi/dt| for circular
    orbits (dr/dt is identically zero there).
    """
    if scenario == "radial_fall":
        u = radial_fall_velocity(source, r)
        dr_dt = abs(u.ur / u.ut)
        r_dphi_dt = abs(r * u.uphi / u.ut)
        within = dr_dt <= RADIAL_DR_DT_BOUND and r_dphi_dt <= RADIAL_R_DPHI_DT_BOUND
    elif scenario == "circular":
        if sense is None:
            raise ValueError("sense is required for the circular scenario")
        u = circular_velocity(source, r, sense)
        dr_dt = 0.0
        r_dphi_dt = abs(r * u.uphi / u.ut)
        within = r_dphi_dt <= CIRCULAR_R_DPHI_DT_BOUND
    else:
        raise ValueError(f"unknown scenario {scenario!r}")
    return RegimeReport(scenario=scenario, dr_dt=dr_dt, r_dphi_dt=r_dphi_dt,
                        within_bounds=within)
