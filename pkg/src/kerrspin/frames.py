"""Hovering-observer tetrad and its connection 1-forms.

The tetrad attaches a local inertial frame to each point outside the
stationary limit surface.  Its six independent equatorial connection
components are available in closed form; ``connection_forms_numeric``
rebuilds them from first principles (finite-difference Christoffel symbols
and tetrad derivatives) and serves as the oracle for the closed forms.

Index conventions: local (Lorentz) indices a, b run 0..3 with metric
eta = diag(-1, 1, 1, 1); coordinate indices follow the (t, r, theta, phi)
order.  ``Tetrad.e_inv[a, mu]`` stores e_a^mu, ``Tetrad.e[a, mu]`` stores
the dual e^a_mu.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .geometry import GravitationalSource, metric_scalars, metric_tensor

ETA = np.diag([-1.0, 1.0, 1.0, 1.0])


@dataclass(frozen=True)
class Tetrad:
    """Orthonormal frame at one spacetime point.

    e_inv holds the frame vectors e_a^mu (rows a, columns mu); e holds the
    dual e^a_mu, the matrix inverse in the sense e^a_mu e_b^mu = delta^a_b.
    """

    e: np.ndarray
    e_inv: np.ndarray

    def to_local(self, u: np.ndarray) -> np.ndarray:
        """Local-frame components u^a = e^a_mu u^mu of a coordinate vector."""
        return self.e @ np.asarray(u, dtype=float)


@dataclass(frozen=True)
class ConnectionForms:
    """The six independent equatorial connection components.

    Boost components are symmetric in their local indices, rotation
    components antisymmetric; ``as_array`` fills in the partners.
    """

    t_0_1: float
    phi_0_1: float
    r_0_3: float
    theta_1_2: float
    t_1_3: float
    phi_1_3: float

    def as_array(self) -> np.ndarray:
        """Full omega[nu, a, b] array with index-symmetry partners."""
        w = np.zeros((4, 4, 4))
        w[0, 0, 1] = w[0, 1, 0] = self.t_0_1
        w[3, 0, 1] = w[3, 1, 0] = self.phi_0_1
        w[1, 0, 3] = w[1, 3, 0] = self.r_0_3
        w[2, 1, 2] = self.theta_1_2
        w[2, 2, 1] = -self.theta_1_2
        w[0, 1, 3] = self.t_1_3
        w[0, 3, 1] = -self.t_1_3
        w[3, 1, 3] = self.phi_1_3
        w[3, 3, 1] = -self.phi_1_3
        return w


def tetrad(source: GravitationalSource, r: float, theta: float = math.pi / 2) -> Tetrad:
    """Hovering-observer tetrad at (r, theta).

    Defined where W^2 = 1 - r*rs/rho2 > 0 (outside the stationary limit
    surface) and Delta > 0 (outside the outer horizon), away from the axis.
    """
    sc = metric_scalars(source, r, theta)
    sin_t = math.sin(theta)
    w2 = 1.0 - r * source.rs / sc.rho2
    if w2 <= 0.0:
        raise DomainError(
            f"W^2 = {w2:.3e} <= 0 at (r={r}, theta={theta}): "
            "inside the stationary limit surface"
        )
    if sc.delta <= 0.0:
        raise DomainError(f"Delta = {sc.delta:.3e} <= 0 at r={r}")
    if sin_t == 0.0:
        raise DomainError("tetrad is singular on the rotation axis (sin(theta) = 0)")
    w = math.sqrt(w2)
    rho = math.sqrt(sc.rho2)
    sqrt_delta = math.sqrt(sc.delta)
    e_inv = np.zeros((4, 4))
    e_inv[0, 0] = 1.0 / w
    e_inv[1, 1] = sqrt_delta / rho
    e_inv[2, 2] = 1.0 / rho
    e_inv[3, 3] = w / (sqrt_delta * sin_t)
    e_inv[3, 0] = source.a * sin_t / sqrt_delta * (w - 1.0 / w)
    e = np.linalg.inv(e_inv).T
    return Tetrad(e=e, e_inv=e_inv)


def connection_forms(source: GravitationalSource, r: float) -> ConnectionForms:
    """Closed-form equatorial connection components of the hovering tetrad.

    Valid for f > 0 and Delta > 0.  All spin-dependent components vanish
    identically at chi = 0.
    """
    rs, a = source.rs, source.a
    sc = metric_scalars(source, r)
    if sc.f <= 0.0:
        raise DomainError(f"f = {sc.f:.3e} <= 0 at r={r}: at or inside the equatorial S+")
    if sc.delta <= 0.0:
        raise DomainError(f"Delta = {sc.delta:.3e} <= 0 at r={r}")
    sqrt_delta = math.sqrt(sc.delta)
    sqrt_f = math.sqrt(sc.f)
    r3 = r ** 3
    return ConnectionForms(
        t_0_1=rs / (2.0 * r3) * sqrt_delta / sqrt_f,
        phi_0_1=-a * rs / (2.0 * r3) * sqrt_delta / sqrt_f,
        r_0_3=a * rs / (2.0 * r * r * sc.f * sqrt_delta),
        theta_1_2=-sqrt_delta / r,
        t_1_3=-a * rs / (2.0 * r3 * sqrt_f),
        phi_1_3=a * a * rs / (2.0 * r3 * sqrt_f) - sqrt_f,
    )


def connection_array_numeric(
    source: GravitationalSource,
    r: float,
    theta: float = math.pi / 2,
    step: float | None = None,
    richardson: bool = True,
) -> np.ndarray:
    """Connection components omega[nu, a, b] rebuilt from first principles.

    Christoffel symbols are assembled from central finite differences of the
    metric, combined with finite-difference tetrad derivatives into covariant
    derivatives, and contracted with the dual tetrad.  One Richardson pass
    (default) cancels the leading O(step^2) error.
    """
    if step is None:
        step = 1e-5 * source.rs
    if step <= 0.0:
        raise ValueError(f"finite-difference step must be positive, got {step}")
    if richardson:
        w_h = _connection_array_fd(source, r, theta, step)
        w_h2 = _connection_array_fd(source, r, theta, step / 2.0)
        return (4.0 * w_h2 - w_h) / 3.0
    return _connection_array_fd(source, r, theta, step)


def connection_forms_numeric(
    source: GravitationalSource, r: float, step: float | None = None
) -> ConnectionForms:
    """Equatorial connection components from the finite-difference oracle."""
    w = connection_array_numeric(source, r, math.pi / 2, step)
    return ConnectionForms(
        t_0_1=w[0, 0, 1],
        phi_0_1=w[3, 0, 1],
        r_0_3=w[1, 0, 3],
        theta_1_2=w[2, 1, 2],
        t_1_3=w[0, 1, 3],
        phi_1_3=w[3, 1, 3],
    )


def _connection_array_fd(source, r, theta, h):
    h_r = h
    h_t = h / r  # comparable proper-length steps in r and theta
    dg = np.zeros((4, 4, 4))
    dg[1] = (metric_tensor(source, r + h_r, theta) - metric_tensor(source, r - h_r, theta)) / (2.0 * h_r)
    dg[2] = (metric_tensor(source, r, theta + h_t) - metric_tensor(source, r, theta - h_t)) / (2.0 * h_t)
    g_inv = np.linalg.inv(metric_tensor(source, r, theta))
    # Gamma^lam_{mu nu} = g^{lam s}(d_mu g_{s nu} + d_nu g_{s mu} - d_s g_{mu nu})/2
    gamma = 0.5 * (
        np.einsum("ls,msn->lmn", g_inv, dg)
        + np.einsum("ls,nsm->lmn", g_inv, dg)
        - np.einsum("ls,smn->lmn", g_inv, dg)
    )
    de = np.zeros((4, 4, 4))  # de[mu, b, nu] = d_mu e_b^nu
    de[1] = (tetrad(source, r + h_r, theta).e_inv - tetrad(source, r - h_r, theta).e_inv) / (2.0 * h_r)
    de[2] = (tetrad(source, r, theta + h_t).e_inv - tetrad(source, r, theta - h_t).e_inv) / (2.0 * h_t)
    tet = tetrad(source, r, theta)
    w = np.zeros((4, 4, 4))
    for mu in range(4):
        cov = de[mu] + np.einsum("ns,bs->bn", gamma[:, mu, :], tet.e_inv)
        w[mu] = np.einsum("an,bn->ab", tet.e, cov)
    return w
