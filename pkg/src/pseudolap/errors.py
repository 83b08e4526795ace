"""Exception and warning types shared across the package."""


class PseudolapError(Exception):
    """Base class for all library errors."""


class DomainError(PseudolapError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class ResolutionError(DomainError):
    """Sampled data too coarse for the requested Fourier mode."""


class GridError(DomainError):
    """Grid too small or malformed for finite differencing."""


class InvalidTopology(PseudolapError):
    """Surface data with non-negative Euler characteristic."""


class TruncationBelowBase(PseudolapError):
    """Truncation heights not strictly above the cusp base heights.

    ``indices`` lists the offending cusps, 1-based.
    """

    def __init__(self, indices):
        self.indices = tuple(indices)
        super().__init__(f"truncation height not above base at cusp(s) {self.indices}")


class InvalidMixing(PseudolapError):
    """Mixing matrix of a synthetic scattering model is not orthogonal."""


class StructureViolation(PseudolapError):
    """Scattering data violating Hermiticity, unitarity or pole structure.

    ``site`` describes where the check failed.
    """

    def __init__(self, message, site=None):
        self.site = site
        super().__init__(message if site is None else f"{message} (at {site})")


class NotAPole(PseudolapError):
    """A declared pole was expected at the given spectral parameter."""


class AtPole(PseudolapError):
    """Evaluation requested at a pole of the relevant generalized eigenfunction."""


class NotInEigenspace(PseudolapError):
    """Vector not in the required eigenspace of the scattering matrix at 1/2."""


class DegenerateNullspace(PseudolapError):
    """Secular nullspace supported entirely on the singular cusps."""


class PhaseTrackingLost(PseudolapError):
    """Eigenphase continuation failed even after grid refinement."""


class BranchJump(PseudolapError):
    """Eigenvalue-branch continuation lost the branch between samples."""


class MissingSystole(PseudolapError):
    """Surface model lacks the systole hint required by the report."""


class ConvergenceError(PseudolapError):
    """Series or iteration failed to reach the requested accuracy."""


class QuadratureError(PseudolapError):
    """Numerical quadrature failed to converge under refinement."""


class ModelFileError(PseudolapError):
    """Malformed model definition file."""


class WindowTouchesPole(UserWarning):
    """A root-search window contains scattering poles; they are handled
    separately (mixed systems or barriers) and recorded here."""

    def __init__(self, poles):
        self.poles = tuple(poles)
        super().__init__(f"search window contains scattering pole(s) at s = {self.poles}")


class MissingCuspidalData(UserWarning):
    """No cuspidal eigenvalues supplied; counts assume there are none."""
