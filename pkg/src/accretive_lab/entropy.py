"""Deformed logarithm, Tsallis relative operator entropy, and the
relative operator entropy, with margin checks for their order relations.

For Hermitian positive-definite A, B and 0 < t <= 1:

    ln_t(x)   = (x^t - 1) / t                       (t -> 0 gives log x)
    T_t(A|B)  = (A #_t B - A) / t
              = A^{1/2} ln_t(A^{-1/2} B A^{-1/2}) A^{1/2}
    S(A|B)    = A^{1/2} log(A^{-1/2} B A^{-1/2}) A^{1/2} = lim_{t->0} T_t.

Margin-style checks return raw smallest eigenvalues of the difference
matrices (callers normalize by scale); all entropy operations require
Hermitian positive-definite inputs.
"""

from __future__ import annotations

import numpy as np

from . import _kernels, linalg
from .errors import LoewnerOrderError, NotPositiveDefiniteError
from .means import Weight, geom_mean

ORDER_TOL_RTOL = 1e-10


def _require_pd(a, name: str = "matrix") -> np.ndarray:
    a = linalg.as_matrix(a, name)
    if not linalg.is_hermitian(a):
        raise NotPositiveDefiniteError(f"{name} must be Hermitian")
    smallest = float(_kernels.eigh_values(linalg.hermitian_part(a))[0])
    if smallest <= 0.0:
        raise NotPositiveDefiniteError(
            f"{name} must be positive definite (smallest eigenvalue {smallest:.6g})"
        )
    return a


def _validate_t(t: float) -> float:
    t = float(t)
    if not 0.0 < t <= 1.0:
        raise ValueError(f"entropy parameter must lie in (0, 1], got {t!r}")
    return t


def ln_t(x, t: float):
    """Deformed logarithm (x^t - 1)/t for x > 0; t = 0 falls back to log."""
    x = np.asarray(x, dtype=np.float64)
    if np.any(x <= 0.0):
        raise ValueError("ln_t is defined for positive arguments only")
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"ln_t parameter must lie in [0, 1], got {t!r}")
    if t == 0.0:
        out = np.log(x)
    else:
        out = (np.power(x, t) - 1.0) / t
    return out if out.ndim else float(out)


def _herm(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + m.conj().T)


def tsallis(a, b, t: float) -> np.ndarray:
    """Tsallis relative operator entropy (A #_t B - A)/t."""
    a = _require_pd(a, "A")
    b = _require_pd(b, "B")
    t = _validate_t(t)
    return _herm((geom_mean(a, b, t) - a) / t)


def relative_entropy(a, b) -> np.ndarray:
    """Relative operator entropy A^{1/2} log(A^{-1/2} B A^{-1/2}) A^{1/2}."""
    a = _require_pd(a, "A")
    b = _require_pd(b, "B")
    wa, va = _kernels.eigh_factor(linalg.hermitian_part(a))
    root = (va * np.sqrt(wa)) @ va.conj().T
    inv_root = (va * (1.0 / np.sqrt(wa))) @ va.conj().T
    inner = _herm(inv_root @ b @ inv_root)
    wi, vi = _kernels.eigh_factor(inner)
    if float(wi[0]) <= 0.0:
        raise NotPositiveDefiniteError("A^{-1/2} B A^{-1/2} is not positive definite")
    log_inner = (vi * np.log(wi)) @ vi.conj().T
    return _herm(root @ log_inner @ root)


def check_lnt_convexity(x: float, grid) -> tuple[float, np.ndarray]:
    """Midpoint second differences of t -> ln_t(x) over adjacent grid pairs.

    Margins are signed so that nonnegative means "as expected": convex in
    t for x >= 1, concave for x <= 1. Returns (min margin, all margins).
    """
    x = float(x)
    if x <= 0.0:
        raise ValueError("ln_t is defined for positive arguments only")
    grid = np.sort(np.asarray(grid, dtype=np.float64))
    if np.any(grid <= 0.0) or np.any(grid > 1.0):
        raise ValueError("grid values must lie in (0, 1]")
    lo, hi = grid[:-1], grid[1:]

    def _lnt_at(ts):
        return (np.power(x, ts) - 1.0) / ts

    second = 0.5 * (_lnt_at(lo) + _lnt_at(hi)) - _lnt_at(0.5 * (lo + hi))
    sign = 1.0 if x >= 1.0 else -1.0
    margins = sign * second
    if margins.size == 0:
        return 0.0, margins
    return float(margins.min()), margins


def check_tsallis_param_convexity(a, b, ta: float, tb: float, t: float) -> float:
    """Convexity of the entropy parameter on an ordered pair.

    For A <= B the map u -> T_u(A|B) is midpoint convex (concave when
    B <= A); returns the raw smallest eigenvalue of the favorable side
    minus the other. The pair must be Loewner-comparable.
    """
    a = _require_pd(a, "A")
    b = _require_pd(b, "B")
    ta = _validate_t(ta)
    tb = _validate_t(tb)
    w = Weight(t)
    tol = ORDER_TOL_RTOL * max(1.0, linalg.op_norm(a) + linalg.op_norm(b))
    forward = float(_kernels.eigh_values(_herm(b - a))[0]) >= -tol
    reverse = float(_kernels.eigh_values(_herm(a - b))[0]) >= -tol
    if not (forward or reverse):
        raise LoewnerOrderError("parameter convexity needs A <= B or B <= A")
    mixed = tsallis(a, b, (1.0 - w.t) * ta + w.t * tb)
    combo = (1.0 - w.t) * tsallis(a, b, ta) + w.t * tsallis(a, b, tb)
    diff = combo - mixed if forward else mixed - combo
    return float(_kernels.eigh_values(_herm(diff))[0])


def check_tsallis_sandwich(a, b, t: float) -> tuple[float, float]:
    """Two-sided bound on (1-t) S(A|B) + t (B-A) - T_t(A|B).

    The pivot D = (B - A + S(A|B))/2 - 2(A # B - A) bounds the middle
    expression between 2 min{t,1-t} D and 2 max{t,1-t} D whenever the
    spectrum of A^{-1/2} B A^{-1/2} stays at or above 1 (A <= B); returns
    the raw smallest eigenvalues of (middle - lower, upper - middle).
    """
    a = _require_pd(a, "A")
    b = _require_pd(b, "B")
    w = Weight(_validate_t(t))
    ent = relative_entropy(a, b)
    pivot = 0.5 * (b - a + ent) - 2.0 * (geom_mean(a, b, 0.5) - a)
    middle = (1.0 - w.t) * ent + w.t * (b - a) - tsallis(a, b, w.t)
    lower = float(_kernels.eigh_values(_herm(middle - 2.0 * w.r * pivot))[0])
    upper = float(_kernels.eigh_values(_herm(2.0 * w.R * pivot - middle))[0])
    return lower, upper


def check_tsallis_monotone(a, b, t_grid) -> float:
    """Smallest eigenvalue of T_s - T_t over consecutive grid pairs (t <= s)."""
    a = _require_pd(a, "A")
    b = _require_pd(b, "B")
    grid = [_validate_t(t) for t in t_grid]
    if sorted(grid) != grid:
        raise ValueError("t grid must be increasing")
    values = [tsallis(a, b, t) for t in grid]
    worst = np.inf
    for lo, hi in zip(values[:-1], values[1:]):
        worst = min(worst, float(_kernels.eigh_values(_herm(hi - lo))[0]))
    return float(worst)
