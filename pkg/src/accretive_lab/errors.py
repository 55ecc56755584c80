"""Exception and warning types shared across the package."""


class AccretiveLabError(Exception):
    """Base class for the domain errors raised by this package.

    Malformed arguments (wrong shapes, NaNs, out-of-range scalars) raise
    plain ``ValueError``; subclasses of this error signal that the inputs
    were well-formed but violate a mathematical precondition.
    """


class NotAccretiveError(AccretiveLabError):
    """The Hermitian (real) part of the matrix is not positive definite."""


class NotPositiveDefiniteError(AccretiveLabError):
    """A Hermitian positive-definite matrix was required."""


class SingularMatrixError(AccretiveLabError):
    """Matrix is singular to working precision (smallest singular value
    below ``1e-12`` times the largest)."""


class EigenvalueOnCutError(AccretiveLabError):
    """An eigenvalue lies on (or numerically too close to) the closed
    negative real axis, where the principal branch is undefined."""


class SchurConvergenceError(AccretiveLabError):
    """The QR iteration for the Schur form did not converge."""


class QuadratureNotConvergedError(AccretiveLabError):
    """Doubling the quadrature node count kept moving the result by more
    than the requested tolerance."""


class LoewnerOrderError(AccretiveLabError):
    """Two Hermitian matrices were required to be Loewner-comparable but
    neither ``A <= B`` nor ``B <= A`` holds."""


class ClusteredSpectrumWarning(UserWarning):
    """A matrix function was evaluated through a slightly perturbed
    triangular diagonal because eigenvalues were too clustered for the
    divided-difference recurrence; the result is approximate (error on
    the order of the perturbation, ``~1e-8`` relative)."""
