"""Kerr geometry in Boyer-Lindquist coordinates.

All quantities are expressed in geometric units (G = c = 1).  The rotating
source is described by its Schwarzschild radius ``rs`` and the dimensionless
spin ratio ``chi = a/rs``; every formula below is regular at ``chi = 0`` so
the Schwarzschild case needs no special branch.  In particular the ratio
``a/omega``, which appears in several geodesic expressions and naively reads
0/0 at zero spin, is always carried as ``sigma2 / (rs * r)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import CensorshipError, DomainError

#: |chi| above which no event horizon exists.
SPIN_LIMIT = 0.5

#: Absolute tolerance for "at the boundary" comparisons on dimensionless values.
EXTREMAL_TOL = 1e-12


class CensorshipVerdict(Enum):
    OK = "ok"
    EXTREMAL = "extremal"
    VIOLATION = "violation"


def validate_censorship(rs: float, chi: float) -> CensorshipVerdict:
    """Classify a (rs, chi) pair against the horizon-existence bound |chi| < 1/2.

    ``extremal`` is returned for |chi| within ``EXTREMAL_TOL`` of 1/2: the
    boundary itself is admitted because the bound curves of the sweeps are
    evaluated exactly there.
    """
    if rs <= 0.0:
        raise DomainError(f"Schwarzschild radius must be positive, got rs={rs}")
    if abs(abs(chi) - SPIN_LIMIT) <= EXTREMAL_TOL:
        return CensorshipVerdict.EXTREMAL
    if abs(chi) < SPIN_LIMIT:
        return CensorshipVerdict.OK
    return CensorshipVerdict.VIOLATION


@dataclass(frozen=True)
class GravitationalSource:
    """A rotating gravitational source.

    Parameters
    ----------
    rs : float
        Schwarzschild radius (rs = 2M), the unit of length for the problem.
    chi : float
        Dimensionless spin ratio a/rs.  Sources with |chi| > 1/2 are refused;
        |chi| = 1/2 is accepted but flagged extremal.
    """

    rs: float
    chi: float

    def __post_init__(self):
        verdict = validate_censorship(self.rs, self.chi)
        if verdict is CensorshipVerdict.VIOLATION:
            raise CensorshipError(
                f"|chi| = {abs(self.chi)} exceeds the horizon-existence bound 1/2 "
                "(naked singularity)"
            )

    @property
    def a(self) -> float:
        """Angular momentum per unit mass, derived from (rs, chi)."""
        return self.chi * self.rs

    @property
    def is_extremal(self) -> bool:
        return validate_censorship(self.rs, self.chi) is CensorshipVerdict.EXTREMAL

    @classmethod
    def from_angular_momentum(cls, rs: float, a: float) -> "GravitationalSource":
        if rs <= 0.0:
            raise DomainError(f"Schwarzschild radius must be positive, got rs={rs}")
        return cls(rs=rs, chi=a / rs)


@dataclass(frozen=True)
class GeometryScalars:
    """Pointwise metric functions at (r, theta).

    ``w`` is NaN inside the stationary-limit region where 1 - r*rs/rho2 < 0;
    the hovering frame does not exist there.  ``a_over_omega`` is the
    cancellation-safe form sigma2/(rs*r) of a/omega, finite for all chi.
    """

    rho2: float
    delta: float
    sigma2: float
    f: float
    w: float
    omega: float
    a_over_omega: float


@dataclass(frozen=True)
class HorizonStructure:
    """Horizon radii r-+ and stationary-limit radii S-+ at a fixed theta."""

    r_minus: float
    r_plus: float
    s_minus: float
    s_plus: float


def metric_scalars(source: GravitationalSource, r: float, theta: float = math.pi / 2) -> GeometryScalars:
    """Evaluate rho2, Delta, Sigma2, f, W, omega and a/omega at (r, theta)."""
    if r <= 0.0:
        raise DomainError(f"radius must be positive, got r={r}")
    rs, a = source.rs, source.a
    cos_t, sin_t = math.cos(theta), math.sin(theta)
    rho2 = r * r + (a * cos_t) ** 2
    if rho2 <= 0.0:
        raise DomainError(f"rho^2 = 0 at (r={r}, theta={theta}): true singularity")
    delta = r * r - r * rs + a * a
    sigma2 = (r * r + a * a) ** 2 - a * a * delta * sin_t * sin_t
    f = 1.0 - rs / r
    w2 = 1.0 - r * rs / rho2
    w = math.sqrt(w2) if w2 > 0.0 else float("nan")
    omega = rs * r * a / sigma2
    a_over_omega = sigma2 / (rs * r)
    return GeometryScalars(rho2=rho2, delta=delta, sigma2=sigma2, f=f, w=w,
                           omega=omega, a_over_omega=a_over_omega)


def metric_tensor(source: GravitationalSource, r: float, theta: float = math.pi / 2) -> np.ndarray:
    """Covariant metric g_{mu nu} at (r, theta), coordinate order (t, r, theta, phi).

    Signature (-,+,+,+); the t-phi component is nonzero exactly when the
    source spins.  Not defined where Delta = 0 (coordinate horizons).
    """
    sc = metric_scalars(source, r, theta)
    if sc.delta == 0.0:
        raise DomainError(f"Delta = 0 at r={r}: Boyer-Lindquist chart breaks down")
    sin2 = math.sin(theta) ** 2
    g = np.zeros((4, 4))
    g[0, 0] = -sc.rho2 * sc.delta / sc.sigma2 + sc.sigma2 * sin2 / sc.rho2 * sc.omega ** 2
    g[0, 3] = g[3, 0] = -sc.sigma2 * sin2 * sc.omega / sc.rho2
    g[1, 1] = sc.rho2 / sc.delta
    g[2, 2] = sc.rho2
    g[3, 3] = sc.sigma2 * sin2 / sc.rho2
    return g


def metric_inverse(source: GravitationalSource, r: float, theta: float = math.pi / 2) -> np.ndarray:
    """Contravariant metric g^{mu nu} at (r, theta)."""
    return np.linalg.inv(metric_tensor(source, r, theta))


def horizons(source: GravitationalSource, theta: float = math.pi / 2) -> HorizonStructure:
    """Horizon radii and stationary-limit radii at the given theta.

    The stationary-limit radicand is rs^2/4 - a^2*cos(theta); with
    |chi| <= 1/2 it is non-negative for every theta.
    """
    rs, a = source.rs, source.a
    rad_h = max(0.0, rs * rs / 4.0 - a * a)
    rad_s = max(0.0, rs * rs / 4.0 - a * a * math.cos(theta))
    sq_h, sq_s = math.sqrt(rad_h), math.sqrt(rad_s)
    return HorizonStructure(
        r_minus=rs / 2.0 - sq_h,
        r_plus=rs / 2.0 + sq_h,
        s_minus=rs / 2.0 - sq_s,
        s_plus=rs / 2.0 + sq_s,
    )
