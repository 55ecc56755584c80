"""Dense complex linear algebra: Hermitian/skew parts, complex Schur
form, principal matrix functions, operator norms, and inverses.

Everything accepts whatever ``np.asarray`` turns into a square complex
matrix and returns ``complex128`` arrays (real results are returned as
complex matrices with vanishing imaginary part, except where a float is
the natural type). Tolerances are relative to ``max(1, ||.||_F)`` so the
behavior is scale-free.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from . import _kernels
from .errors import (
    AccretiveLabError,
    ClusteredSpectrumWarning,
    EigenvalueOnCutError,
    SchurConvergenceError,
    SingularMatrixError,
)

HERMITIAN_RTOL = 1e-12
CUT_RTOL = 1e-12
CLUSTER_GAP_RTOL = 1e-10
CLUSTER_SHIFT_RTOL = 1e-8
SINGULAR_RTOL = 1e-12


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Validate and convert to a square complex128 matrix."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValueError(f"{name} must be a square matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError(f"{name} has non-finite entries")
    return m


def frobenius(a) -> float:
    return float(np.linalg.norm(a))


def _scale(a) -> float:
    return max(1.0, frobenius(a))


def is_hermitian(a, rtol: float = HERMITIAN_RTOL) -> bool:
    a = np.asarray(a)
    return frobenius(a - a.conj().T) <= rtol * _scale(a)


def hermitian_part(a) -> np.ndarray:
    """Hermitian (real) part (A + A*)/2."""
    a = as_matrix(a)
    return 0.5 * (a + a.conj().T)


def imaginary_part(a) -> np.ndarray:
    """Skew (imaginary) part (A - A*)/(2i); Hermitian by construction."""
    a = as_matrix(a)
    return (a - a.conj().T) / 2j


@dataclass(frozen=True)
class SchurForm:
    """Complex Schur factorization A = U T U* with U unitary, T upper triangular."""

    unitary: np.ndarray
    upper_triangular: np.ndarray

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.diag(self.upper_triangular)


def schur(a) -> SchurForm:
    """Complex Schur form; eigenvalues are the diagonal of the triangular factor."""
    a = as_matrix(a)
    try:
        t, u = scipy.linalg.schur(a, output="complex")
    except np.linalg.LinAlgError as exc:
        raise SchurConvergenceError(f"QR iteration failed to converge: {exc}") from exc
    return SchurForm(unitary=u, upper_triangular=t)


def _min_diag_gap(d: np.ndarray) -> float:
    if d.size < 2:
        return np.inf
    diff = np.abs(d[:, None] - d[None, :])
    np.fill_diagonal(diff, np.inf)
    return float(diff.min())


def _separate_clustered(d: np.ndarray, scale: float) -> np.ndarray:
    """Shift diagonal entries apart so divided differences stay well posed."""
    n = d.size
    offsets = np.arange(1, n + 1, dtype=np.float64) / n
    delta = CLUSTER_SHIFT_RTOL * scale
    for _ in range(8):
        shifted = d + delta * offsets
        if _min_diag_gap(shifted) >= CLUSTER_GAP_RTOL * scale:
            warnings.warn(
                f"eigenvalues closer than {CLUSTER_GAP_RTOL * scale:.1e}; "
                f"evaluating through a diagonal perturbed by {delta:.1e} "
                "(result is approximate)",
                ClusteredSpectrumWarning,
                stacklevel=3,
            )
            return shifted
        delta *= 3.0
    raise AccretiveLabError("could not separate clustered eigenvalues")


def _function_of_schur(form: SchurForm, f) -> np.ndarray:
    t = form.upper_triangular
    n = t.shape[0]
    scale = _scale(t)
    d = np.diag(t).copy()
    if n > 1 and _min_diag_gap(d) < CLUSTER_GAP_RTOL * scale:
        d = _separate_clustered(d, scale)
        t = t.copy()
        np.fill_diagonal(t, d)
    fd = np.asarray(f(d), dtype=np.complex128)
    if not np.isfinite(fd).all():
        raise ValueError("function produced non-finite values on the spectrum")
    ft = _kernels.parlett_recurrence(t, fd)
    u = form.unitary
    return u @ ft @ u.conj().T


def matrix_function(x, f) -> np.ndarray:
    """Evaluate a scalar analytic function on a matrix.

    ``f`` must accept a 1-D complex ndarray and return same-shape values
    (NumPy ufuncs qualify). Hermitian input goes through the eigendecomposition;
    everything else through the complex Schur form with the Parlett
    recurrence on the triangular factor. Eigenvalues clustered below
    ``1e-10`` (relative) are pushed apart by a ``1e-8``-relative diagonal
    perturbation and the result is flagged with
    :class:`ClusteredSpectrumWarning`.

    Analyticity of ``f`` near the spectrum is the caller's responsibility;
    use :func:`principal_power` for branch-cut-aware powers.
    """
    x = as_matrix(x)
    if is_hermitian(x):
        w, v = _kernels.eigh_factor(hermitian_part(x))
        fw = np.asarray(f(w.astype(np.complex128)), dtype=np.complex128)
        if not np.isfinite(fw).all():
            raise ValueError("function produced non-finite values on the spectrum")
        return (v * fw) @ v.conj().T
    return _function_of_schur(schur(x), f)


def _require_off_cut(eigs: np.ndarray, scale: float) -> None:
    dist = np.where(eigs.real > 0.0, np.abs(eigs), np.abs(eigs.imag))
    worst = int(np.argmin(dist))
    if dist[worst] < CUT_RTOL * scale:
        raise EigenvalueOnCutError(
            f"eigenvalue {eigs[worst]:.6g} lies within {CUT_RTOL * scale:.1e} "
            "of the closed negative real axis"
        )


def principal_power(x, s: float) -> np.ndarray:
    """Principal branch of X**s (exp(s Log X) with Log the principal logarithm).

    Requires the spectrum to stay off the closed negative real axis;
    ``s = 0`` returns the identity and ``s = 1`` returns X exactly.
    """
    x = as_matrix(x)
    s = float(s)
    if s == 1.0:
        return x.copy()
    if s == 0.0:
        return np.eye(x.shape[0], dtype=np.complex128)
    scale = _scale(x)
    if is_hermitian(x):
        w, v = _kernels.eigh_factor(hermitian_part(x))
        wc = w.astype(np.complex128)
        _require_off_cut(wc, scale)
        return (v * np.power(wc, s)) @ v.conj().T
    form = schur(x)
    _require_off_cut(form.eigenvalues, scale)
    return _function_of_schur(form, lambda z: np.power(z, s))


def sqrt_and_inverse_sqrt(x) -> tuple[np.ndarray, np.ndarray]:
    """(X^{1/2}, X^{-1/2}) from a single factorization, principal branches."""
    x = as_matrix(x)
    scale = _scale(x)
    if is_hermitian(x):
        w, v = _kernels.eigh_factor(hermitian_part(x))
        wc = w.astype(np.complex128)
        _require_off_cut(wc, scale)
        root = np.sqrt(wc)
        return (v * root) @ v.conj().T, (v * (1.0 / root)) @ v.conj().T
    form = schur(x)
    _require_off_cut(form.eigenvalues, scale)
    return (
        _function_of_schur(form, np.sqrt),
        _function_of_schur(form, lambda z: 1.0 / np.sqrt(z)),
    )


def abs_op(a) -> np.ndarray:
    """Positive-semidefinite |A| = (A*A)^{1/2}; roundoff-negative eigenvalues clamp to 0."""
    a = as_matrix(a)
    w, v = _kernels.eigh_factor(hermitian_part(a.conj().T @ a))
    root = np.sqrt(np.clip(w, 0.0, None))
    m = (v * root) @ v.conj().T
    return 0.5 * (m + m.conj().T)


def op_norm(a) -> float:
    """Largest singular value (spectral norm)."""
    a = as_matrix(a)
    w = _kernels.eigh_values(hermitian_part(a.conj().T @ a))
    return float(np.sqrt(max(float(w[-1]), 0.0)))


def inverse(a) -> np.ndarray:
    """Matrix inverse; raises :class:`SingularMatrixError` when the
    smallest singular value drops below ``1e-12`` times the largest."""
    a = as_matrix(a)
    sv = np.linalg.svd(a, compute_uv=False)
    if sv[-1] < SINGULAR_RTOL * max(float(sv[0]), np.finfo(np.float64).tiny):
        raise SingularMatrixError(
            f"singular to working precision (sigma_min/sigma_max = "
            f"{float(sv[-1]) / max(float(sv[0]), np.finfo(np.float64).tiny):.2e})"
        )
    return np.linalg.solve(a, np.eye(a.shape[0], dtype=np.complex128))
