"""Two-matrix means of accretive matrices.

The three interpolational families are

    arithmetic   (1-t) A + t B
    geometric    A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}   (principal powers)
    harmonic     ((1-t) A^{-1} + t B^{-1})^{-1}

plus general means built from a probability measure on [0, 1]: the
mixture of weighted harmonic means ``integral of (A !_t B) d nu(t)``.
The built-in ``power_density(alpha)`` measure, with density
``sin(alpha pi)/pi * t^(alpha-1) (1-t)^(-alpha)``, reproduces the
weighted geometric mean of exponent alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np
from scipy.special import roots_jacobi

from . import _kernels, linalg
from .errors import NotAccretiveError, QuadratureNotConvergedError

MASS_TOL = 1e-10
QUAD_RTOL = 1e-7
QUAD_START_NODES = 64
QUAD_MAX_NODES = 1024


@dataclass(frozen=True)
class Weight:
    """Interpolation weight t in [0, 1] with derived r = min{t, 1-t}, R = max{t, 1-t}."""

    t: float

    def __post_init__(self):
        t = float(self.t)
        if not np.isfinite(t) or not 0.0 <= t <= 1.0:
            raise ValueError(f"weight must lie in [0, 1], got {self.t!r}")
        object.__setattr__(self, "t", t)

    @property
    def r(self) -> float:
        """min{t, 1-t}"""
        return min(self.t, 1.0 - self.t)

    @property
    def R(self) -> float:
        """max{t, 1-t}"""
        return max(self.t, 1.0 - self.t)


@dataclass(frozen=True)
class RepresentingMeasure:
    """Probability measure on [0, 1] mixing weighted harmonic means into a mean.

    Construct through :meth:`point_mass`, :meth:`discrete`, or
    :meth:`power_density`; the ``power_density(alpha)`` weights carry both
    endpoint singularities, so quadrature uses Gauss-Jacobi nodes with the
    singular factors absorbed into the rule.
    """

    kind: str
    point: float | None = None
    nodes: tuple[tuple[float, float], ...] | None = None
    alpha: float | None = None

    @classmethod
    def point_mass(cls, t: float) -> "RepresentingMeasure":
        return cls(kind="point_mass", point=Weight(t).t)

    @classmethod
    def discrete(cls, nodes) -> "RepresentingMeasure":
        cleaned = tuple((Weight(t).t, float(w)) for t, w in nodes)
        if not cleaned:
            raise ValueError("discrete measure needs at least one node")
        if any(w < 0.0 for _, w in cleaned):
            raise ValueError("discrete measure weights must be nonnegative")
        mass = sum(w for _, w in cleaned)
        if abs(mass - 1.0) > MASS_TOL:
            raise ValueError(f"discrete measure mass is {mass!r}, expected 1")
        return cls(kind="discrete", nodes=cleaned)

    @classmethod
    def power_density(cls, alpha: float) -> "RepresentingMeasure":
        alpha = float(alpha)
        if not 0.0 < alpha < 1.0:
            raise ValueError(f"power density exponent must lie in (0, 1), got {alpha!r}")
        return cls(kind="power_density", alpha=alpha)

    def quadrature(self, count: int, split: bool = False) -> tuple[np.ndarray, np.ndarray]:
        """Nodes and weights integrating against this measure (power_density only).

        The plain rule is Gauss-Jacobi on [-1, 1] with exponents
        (-alpha, alpha-1); the map to [0, 1] has unit Jacobian factor, so
        the weights only pick up the normalization sin(alpha pi)/pi.

        ``split=True`` returns a composite rule with ``count`` nodes on
        each of [0, 1/2] and [1/2, 1], each half absorbing its own
        endpoint singularity; use it for integrands with a kink at 1/2
        (anything driven by min{t, 1-t}), where the plain rule converges
        only algebraically.
        """
        if self.kind != "power_density":
            raise ValueError("quadrature nodes are only generated for power_density")
        norm = np.sin(np.pi * self.alpha) / np.pi
        if not split:
            # exponents sum to -1, which trips a guarded 0/0 inside scipy's
            # weight formula; the returned values are fine
            with np.errstate(invalid="ignore"):
                x, w = roots_jacobi(count, -self.alpha, self.alpha - 1.0)
            return (x + 1.0) / 2.0, w * norm
        # left half: weight t^(alpha-1) absorbed, (1-t)^(-alpha) smooth
        xl, wl = roots_jacobi(count, 0.0, self.alpha - 1.0)
        tl = (xl + 1.0) / 4.0
        wl = norm * 4.0**-self.alpha * wl * np.power(1.0 - tl, -self.alpha)
        # right half: weight (1-t)^(-alpha) absorbed, t^(alpha-1) smooth
        xr, wr = roots_jacobi(count, -self.alpha, 0.0)
        tr = (xr + 3.0) / 4.0
        wr = norm * 4.0 ** (self.alpha - 1.0) * wr * np.power(tr, self.alpha - 1.0)
        return np.concatenate([tl, tr]), np.concatenate([wl, wr])

    def total_mass(self, count: int = QUAD_START_NODES) -> float:
        if self.kind == "point_mass":
            return 1.0
        if self.kind == "discrete":
            return float(sum(w for _, w in self.nodes))
        return float(self.quadrature(count)[1].sum())


MeanKind = Union[str, RepresentingMeasure]


def integrate_measure(measure: RepresentingMeasure, fn: Callable[[float], np.ndarray],
                      rtol: float = QUAD_RTOL, kink_at_half: bool = False) -> np.ndarray:
    """Integrate an array-valued function of t against the measure.

    For ``power_density`` the node count starts at 64 and doubles until the
    result moves by less than ``rtol`` in relative Frobenius norm; raises
    :class:`QuadratureNotConvergedError` past 1024 nodes. Pass
    ``kink_at_half=True`` for integrands that are only piecewise smooth at
    t = 1/2 (see :meth:`RepresentingMeasure.quadrature`).
    """
    if measure.kind == "point_mass":
        return fn(measure.point)
    if measure.kind == "discrete":
        return sum(w * fn(t) for t, w in measure.nodes)
    previous = None
    count = QUAD_START_NODES
    while count <= QUAD_MAX_NODES:
        ts, ws = measure.quadrature(count, split=kink_at_half)
        value = sum(w * fn(t) for t, w in zip(ts, ws))
        if previous is not None:
            drift = float(np.linalg.norm(value - previous))
            if drift <= rtol * max(1.0, float(np.linalg.norm(value))):
                return value
        previous = value
        count *= 2
    raise QuadratureNotConvergedError(
        f"power_density quadrature still moving after {QUAD_MAX_NODES} nodes"
    )


def accretivity_margin(a) -> float:
    """Smallest eigenvalue of the Hermitian part."""
    h = linalg.hermitian_part(a)
    return float(_kernels.eigh_values(h)[0])


def require_accretive(a, name: str = "matrix") -> np.ndarray:
    a = linalg.as_matrix(a, name)
    margin = accretivity_margin(a)
    if margin <= 0.0:
        raise NotAccretiveError(
            f"{name} is not accretive: smallest eigenvalue of the real part is {margin:.6g}"
        )
    return a


def _pair(a, b) -> tuple[np.ndarray, np.ndarray]:
    a = linalg.as_matrix(a, "A")
    b = linalg.as_matrix(b, "B")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: A is {a.shape}, B is {b.shape}")
    return a, b


def arith_mean(a, b, t: float) -> np.ndarray:
    """Weighted arithmetic mean (1-t) A + t B."""
    a, b = _pair(a, b)
    w = Weight(t)
    return (1.0 - w.t) * a + w.t * b


def geom_mean(a, b, t: float) -> np.ndarray:
    """Weighted geometric mean of two accretive matrices, principal branches."""
    a, b = _pair(a, b)
    w = Weight(t)
    require_accretive(a, "A")
    require_accretive(b, "B")
    root, inv_root = linalg.sqrt_and_inverse_sqrt(a)
    inner = inv_root @ b @ inv_root
    return root @ linalg.principal_power(inner, w.t) @ root


def harm_mean(a, b, t: float) -> np.ndarray:
    """Weighted harmonic mean ((1-t) A^{-1} + t B^{-1})^{-1} of accretive matrices."""
    a, b = _pair(a, b)
    w = Weight(t)
    require_accretive(a, "A")
    require_accretive(b, "B")
    return linalg.inverse((1.0 - w.t) * linalg.inverse(a) + w.t * linalg.inverse(b))


def mean_from_measure(a, b, measure: RepresentingMeasure) -> np.ndarray:
    """Mean defined by a representing measure: integral of A !_t B d nu(t)."""
    a, b = _pair(a, b)
    require_accretive(a, "A")
    require_accretive(b, "B")
    inv_a = linalg.inverse(a)
    inv_b = linalg.inverse(b)
    return integrate_measure(
        measure, lambda t: linalg.inverse((1.0 - t) * inv_a + t * inv_b)
    )


_MEAN_DISPATCH = {
    "arith": arith_mean,
    "geom": geom_mean,
    "harm": harm_mean,
}


def mean(kind: MeanKind, a, b, t: float = 0.5) -> np.ndarray:
    """Dispatch to one of the mean families; measure kinds ignore ``t``."""
    if isinstance(kind, RepresentingMeasure):
        return mean_from_measure(a, b, kind)
    try:
        fn = _MEAN_DISPATCH[kind]
    except KeyError:
        raise ValueError(
            f"unknown mean kind {kind!r}; expected one of {sorted(_MEAN_DISPATCH)} "
            "or a RepresentingMeasure"
        ) from None
    return fn(a, b, t)
