"""Frame-dragging-induced spin rotation of qubits on equatorial Kerr geodesics.

The package evaluates the Kerr geometry, the hovering-observer tetrad and
its connection forms, equatorial geodesics (zero-angular-momentum radial
fall and circular orbits), the induced Wigner rotation of a co-moving
spin-1/2, and the qubit-level observables that follow (measurement error
and CHSH value).  See ``kerrspin.cli`` for the command-line interface.
"""

from .errors import (
    CensorshipError,
    DomainError,
    KerrSpinError,
    NoCircularOrbitError,
    NormalizationError,
    ToleranceNotMetError,
)
from .frames import ConnectionForms, Tetrad, connection_forms, connection_forms_numeric, tetrad
from .geodesics import (
    FourVelocity,
    OrbitSense,
    RegimeReport,
    circular_constants,
    circular_orbit_exists,
    circular_velocity,
    frame_drag_rate,
    radial_fall_velocity,
    regime_check,
)
from .geometry import (
    CensorshipVerdict,
    GeometryScalars,
    GravitationalSource,
    HorizonStructure,
    horizons,
    metric_inverse,
    metric_scalars,
    metric_tensor,
    validate_censorship,
)
from .qubit import QubitState, SpinHalfRotation, apply_rotation, bell_chsh, orthogonal_error, rotation_operator
from .report import CompatibilityReport, compatibility_report
from .wigner import (
    LorentzGenerator,
    SpinBounds,
    SpinRotation,
    WignerGenerator,
    lorentz_generator,
    marginal_orbit_rotation,
    n_orbit_rotation,
    per_orbit_rotation,
    radial_fall_rotation,
    spin_bound_curves,
    theta13_circular_closed_form,
    theta13_radial_closed_form,
    theta13_transport,
    wigner_generator,
)

__version__ = "0.1.0"

__all__ = [
    "CensorshipError",
    "CensorshipVerdict",
    "CompatibilityReport",
    "ConnectionForms",
    "DomainError",
    "FourVelocity",
    "GeometryScalars",
    "GravitationalSource",
    "HorizonStructure",
    "KerrSpinError",
    "LorentzGenerator",
    "NoCircularOrbitError",
    "NormalizationError",
    "OrbitSense",
    "QubitState",
    "RegimeReport",
    "SpinBounds",
    "SpinHalfRotation",
    "SpinRotation",
    "Tetrad",
    "ToleranceNotMetError",
    "WignerGenerator",
    "apply_rotation",
    "bell_chsh",
    "circular_constants",
    "circular_orbit_exists",
    "circular_velocity",
    "compatibility_report",
    "connection_forms",
    "connection_forms_numeric",
    "frame_drag_rate",
    "horizons",
    "lorentz_generator",
    "marginal_orbit_rotation",
    "metric_inverse",
    "metric_scalars",
    "metric_tensor",
    "n_orbit_rotation",
    "orthogonal_error",
    "per_orbit_rotation",
    "radial_fall_rotation",
    "radial_fall_velocity",
    "regime_check",
    "rotation_operator",
    "spin_bound_curves",
    "tetrad",
    "theta13_circular_closed_form",
    "theta13_radial_closed_form",
    "theta13_transport",
    "validate_censorship",
    "wigner_generator",
]
