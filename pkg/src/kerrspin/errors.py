"""Exception types shared across the package."""


class KerrSpinError(Exception):
    """Base class for all package errors."""


class DomainError(KerrSpinError, ValueError):
    """Evaluation requested outside the mathematical domain of a quantity."""


class CensorshipError(DomainError):
    """Spin ratio |a|/rs exceeds 1/2, so no horizon covers the singularity."""


class NoCircularOrbitError(KerrSpinError, ValueError):
    """No circular geodesic exists at the requested radius and sense."""


class NormalizationError(KerrSpinError, ValueError):
    """Qubit amplitudes do not form a unit-norm state."""


class ToleranceNotMetError(KerrSpinError, RuntimeError):
    """Adaptive quadrature exhausted its panel budget above the tolerance.

    Carries the best estimate computed so far and its error bound.
    """

    def __init__(self, message, best_estimate, err_estimate):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.err_estimate = err_estimate
