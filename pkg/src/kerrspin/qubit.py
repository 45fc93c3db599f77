"""Qubit-level observables of a finite spin rotation about the local 2-axis.

The finite angle acts on sigma_z-basis amplitudes through the real rotation
matrix [[cos O/2, -sin O/2], [sin O/2, cos O/2]].  The global phase is kept
(a 2*pi rotation is -identity), but the observables below are insensitive
to it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NormalizationError

NORM_TOL = 1e-12

TWO_SQRT2 = 2.0 * math.sqrt(2.0)


@dataclass(frozen=True)
class QubitState:
    """Amplitudes (alpha, beta) in the sigma_z basis; must be unit norm."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise NormalizationError(f"|alpha|^2 + |beta|^2 = {norm!r}, expected 1")

    def as_array(self) -> np.ndarray:
        return np.array([self.alpha, self.beta], dtype=complex)


@dataclass(frozen=True)
class SpinHalfRotation:
    """Spin-1/2 representation of the rotation: a 2x2 unitary."""

    matrix: np.ndarray


def rotation_operator(omega: float) -> SpinHalfRotation:
    """Rotation by omega about the 2-axis: |0> -> cos(O/2)|0> + sin(O/2)|1>."""
    c, s = math.cos(omega / 2.0), math.sin(omega / 2.0)
    return SpinHalfRotation(matrix=np.array([[c, -s], [s, c]], dtype=complex))


def apply_rotation(state: QubitState, omega: float) -> QubitState:
    """Rotate a state: amplitudes (a cos - b sin, a sin + b cos) at half angle."""
    c, s = math.cos(omega / 2.0), math.sin(omega / 2.0)
    return QubitState(alpha=state.alpha * c - state.beta * s,
                      beta=state.alpha * s + state.beta * c)


def orthogonal_error(state: QubitState, omega: float) -> float:
    """Probability of measuring the orthogonal state after the rotation.

    Computed from the general overlap 1 - |<psi|D|psi>|^2; for real
    amplitudes this reduces to sin^2(omega/2).
    """
    psi = state.as_array()
    d = rotation_operator(omega).matrix
    overlap = np.vdot(psi, d @ psi)
    eps = 1.0 - abs(overlap) ** 2
    return min(1.0, max(0.0, float(eps)))


def bell_chsh(omega: float) -> float:
    """CHSH combination for the unadjusted direction set: 2*sqrt(2)*cos^2(omega)."""
    return TWO_SQRT2 * math.cos(omega) ** 2
