"""Numerical radius and its upper bounds.

The radius ``w(A) = sup_{|x|=1} |<Ax, x>|`` equals the maximum over
rotations theta of the largest eigenvalue of the Hermitian part of
``exp(i theta) A``; a 720-point grid plus golden-section refinement of
the best brackets gives reproducible error control at n <= 16.

Bounds implemented, for p >= 1 and a weight t in [0, 1]:

    kittaneh_bound   0.5 || |A*| + |A| ||
    power_bound      || (1-t) |A*|^{2p} + t |A|^{2p} ||^{1/2p}
    refined_bound    power bound with the correction
                     2 min{t,1-t} ((|A|^{2p} + |A*|^{2p})/2
                                   - ((|A|^p + |A*|^p)/2)^2)
                     subtracted inside the norm.

Since the correction equals min{t,1-t}/2 * (|A|^p - |A*|^p)^2 it is PSD,
so the refined bound never exceeds the power bound; at t = 1/2, p = 1 it
collapses to the Kittaneh bound exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels, linalg
from .means import Weight

GRID_POINTS = 720
BRACKET_TARGET = 1e-10
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_MAX_REFINED_BRACKETS = 8


@dataclass(frozen=True)
class RadiusResult:
    """Numerical radius with the rotation that attains it."""

    omega: float
    theta_star: float
    grid_points: int
    refined: bool


def _top_eig_at(a: np.ndarray, theta: float) -> float:
    return float(_kernels.rotated_max_eig(a, np.array([theta]))[0])


def _golden_max(a: np.ndarray, lo: float, hi: float) -> tuple[float, float]:
    """Golden-section maximization; returns (theta, value) at the best probe."""
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1 = _top_eig_at(a, x1)
    f2 = _top_eig_at(a, x2)
    best_theta, best_val = (x1, f1) if f1 >= f2 else (x2, f2)
    while hi - lo > BRACKET_TARGET:
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = _top_eig_at(a, x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = _top_eig_at(a, x2)
        probe_theta, probe_val = (x1, f1) if f1 >= f2 else (x2, f2)
        if probe_val > best_val:
            best_theta, best_val = probe_theta, probe_val
    return best_theta, best_val


def numerical_radius(a) -> RadiusResult:
    """Numerical radius via the rotated-Hermitian-part maximization."""
    a = linalg.as_matrix(a)
    norm = linalg.op_norm(a)
    if norm == 0.0:
        return RadiusResult(omega=0.0, theta_star=0.0, grid_points=GRID_POINTS, refined=False)
    step = 2.0 * math.pi / GRID_POINTS
    thetas = np.arange(GRID_POINTS) * step
    vals = _kernels.rotated_max_eig(a, thetas)
    if float(vals.max() - vals.min()) <= 1e-13 * max(1.0, norm):
        # rotation-invariant profile (e.g. nilpotent 2x2): any angle attains it
        return RadiusResult(
            omega=float(vals.max()), theta_star=0.0, grid_points=GRID_POINTS, refined=False
        )
    left = np.roll(vals, 1)
    right = np.roll(vals, -1)
    local_max = np.flatnonzero((vals >= left) & (vals >= right))
    ranked = local_max[np.argsort(vals[local_max], kind="stable")][::-1]
    best_theta = float(thetas[int(ranked[0])])
    best_val = float(vals[int(ranked[0])])
    for idx in ranked[:_MAX_REFINED_BRACKETS]:
        center = float(thetas[int(idx)])
        theta, val = _golden_max(a, center - step, center + step)
        if val > best_val or (val == best_val and theta % (2.0 * math.pi) < best_theta):
            best_theta, best_val = theta, val
    return RadiusResult(
        omega=best_val,
        theta_star=best_theta % (2.0 * math.pi),
        grid_points=GRID_POINTS,
        refined=True,
    )


def _herm_op_norm(h: np.ndarray) -> float:
    w = _kernels.eigh_values(h)
    return max(abs(float(w[0])), abs(float(w[-1])))


def _abs_powers(a: np.ndarray, exponents) -> list[np.ndarray]:
    """|A|^e for each exponent e, from one eigendecomposition of A*A."""
    w, v = _kernels.eigh_factor(linalg.hermitian_part(a.conj().T @ a))
    w = np.clip(w, 0.0, None)
    out = []
    for e in exponents:
        m = (v * np.power(w, e / 2.0)) @ v.conj().T
        out.append(0.5 * (m + m.conj().T))
    return out


def kittaneh_bound(a) -> float:
    """Upper bound 0.5 || |A*| + |A| ||; tight for normal matrices."""
    a = linalg.as_matrix(a)
    (abs_a,) = _abs_powers(a, [1.0])
    (abs_astar,) = _abs_powers(a.conj().T, [1.0])
    return 0.5 * _herm_op_norm(abs_a + abs_astar)


def power_bound(a, p: float, t: float) -> float:
    """Upper bound || (1-t) |A*|^{2p} + t |A|^{2p} ||^{1/2p} for p >= 1."""
    a = linalg.as_matrix(a)
    p = float(p)
    if p < 1.0:
        raise ValueError(f"power bound needs p >= 1, got {p!r}")
    w = Weight(t)
    (a2p,) = _abs_powers(a, [2.0 * p])
    (astar2p,) = _abs_powers(a.conj().T, [2.0 * p])
    m = (1.0 - w.t) * astar2p + w.t * a2p
    return _herm_op_norm(m) ** (1.0 / (2.0 * p))


def refined_bound(a, p: float, t: float) -> float:
    """Power bound with the PSD square-difference correction subtracted."""
    a = linalg.as_matrix(a)
    p = float(p)
    if p < 1.0:
        raise ValueError(f"refined bound needs p >= 1, got {p!r}")
    w = Weight(t)
    a_p, a_2p = _abs_powers(a, [p, 2.0 * p])
    astar_p, astar_2p = _abs_powers(a.conj().T, [p, 2.0 * p])
    half_sum = 0.5 * (a_p + astar_p)
    correction = 0.5 * (a_2p + astar_2p) - half_sum @ half_sum
    m = (1.0 - w.t) * astar_2p + w.t * a_2p - 2.0 * w.r * correction
    m = 0.5 * (m + m.conj().T)
    return _herm_op_norm(m) ** (1.0 / (2.0 * p))
