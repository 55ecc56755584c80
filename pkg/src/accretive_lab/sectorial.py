"""Accretivity and sector-membership predicates, plus the seeded random
matrix ensembles the verification harness draws from.

A matrix is accretive when its Hermitian part is positive definite, and
sectorial with half-angle ``alpha`` when its numerical range sits inside
the cone ``|Im z| <= tan(alpha) Re z``. With ``H`` the Hermitian part and
``K`` the skew part, the least such angle is
``arctan(rho(H^{-1/2} K H^{-1/2}))`` — two small eigenvalue problems, no
numerical-range boundary sampling.

Generators are pure functions of a counter-based (Philox) stream keyed on
the seed, so draws are reproducible and independent trials can be keyed
as ``derive_seed(root, trial)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels, linalg
from .errors import NotAccretiveError

CERT_MARGIN_RTOL = 1e-10
SECTOR_FILL = 0.95  # generated matrices stay strictly inside the target cone

MATRIX_CLASSES = (
    "positive_definite",
    "accretive",
    "sectorial",
    "loewner_pair",
    "positive_pair",
    "general",
    "normal",
)
_PAIR_CLASSES = {"loewner_pair", "positive_pair"}


def is_accretive(a) -> tuple[bool, float]:
    """(verdict, margin) where margin is the smallest eigenvalue of the real part."""
    h = linalg.hermitian_part(a)
    margin = float(_kernels.eigh_values(h)[0])
    return margin > 0.0, margin


def sectorial_index(a) -> float:
    """Least half-angle alpha with the numerical range inside the sector cone."""
    a = linalg.as_matrix(a)
    accretive, margin = is_accretive(a)
    if not accretive:
        raise NotAccretiveError(
            f"sectorial index needs an accretive matrix (real-part margin {margin:.6g})"
        )
    h = linalg.hermitian_part(a)
    k = linalg.imaginary_part(a)
    w, v = _kernels.eigh_factor(h)
    inv_root = (v * (1.0 / np.sqrt(w))) @ v.conj().T
    m = inv_root @ k @ inv_root
    m = 0.5 * (m + m.conj().T)
    vals = _kernels.eigh_values(m)
    rho = max(abs(float(vals[0])), abs(float(vals[-1])))
    return math.atan(rho)


@dataclass(frozen=True)
class SectorialCert:
    """A matrix paired with a verified sector half-angle."""

    matrix: np.ndarray
    alpha: float

    @classmethod
    def certify(cls, matrix, alpha: float) -> "SectorialCert":
        """Check the cone membership ``tan(alpha) H +/- K >= 0`` and wrap."""
        matrix = linalg.as_matrix(matrix)
        alpha = float(alpha)
        if not 0.0 <= alpha < math.pi / 2:
            raise ValueError(f"sector half-angle must lie in [0, pi/2), got {alpha!r}")
        accretive, margin = is_accretive(matrix)
        if not accretive:
            raise NotAccretiveError(
                f"cannot certify a non-accretive matrix (margin {margin:.6g})"
            )
        h = linalg.hermitian_part(matrix)
        k = linalg.imaginary_part(matrix)
        tol = -CERT_MARGIN_RTOL * max(1.0, linalg.frobenius(matrix))
        cone = math.tan(alpha) * h
        for sign in (1.0, -1.0):
            cone_margin = float(_kernels.eigh_values(cone + sign * k)[0])
            if cone_margin < tol:
                raise ValueError(
                    f"numerical range leaves the sector of half-angle {alpha:.6g} "
                    f"(cone margin {cone_margin:.6g})"
                )
        return cls(matrix=matrix, alpha=alpha)


@dataclass(frozen=True)
class EnsembleSpec:
    """Deterministic recipe for one random draw."""

    dim: int
    matrix_class: str
    seed: int
    scale: float = 1.0
    alpha: float | None = None

    def __post_init__(self):
        if not 1 <= int(self.dim) <= 16:
            raise ValueError(f"dim must lie in [1, 16], got {self.dim!r}")
        if self.matrix_class not in MATRIX_CLASSES:
            raise ValueError(
                f"unknown matrix class {self.matrix_class!r}; expected one of {MATRIX_CLASSES}"
            )
        if not float(self.scale) > 0.0:
            raise ValueError(f"scale must be positive, got {self.scale!r}")
        if self.matrix_class == "sectorial":
            if self.alpha is None or not 0.0 < float(self.alpha) < math.pi / 2:
                raise ValueError("sectorial draws need alpha in (0, pi/2)")


def rng_from_seed(seed: int) -> np.random.Generator:
    """Counter-based stream keyed directly on the seed."""
    return np.random.Generator(np.random.Philox(key=int(seed) & ((1 << 128) - 1)))


def derive_seed(root: int, *branch: int) -> int:
    """Stable 64-bit sub-seed for (root, branch...) — used for per-trial streams."""
    ss = np.random.SeedSequence(entropy=int(root), spawn_key=tuple(int(b) for b in branch))
    return int(ss.generate_state(1, np.uint64)[0])


def _ginibre(rng: np.random.Generator, n: int) -> np.ndarray:
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(_ginibre(rng, n))
    d = np.diag(r)
    return q * (d / np.abs(d))


def unit_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return x / np.linalg.norm(x)


def _positive_definite(rng, n, scale):
    u = random_unitary(rng, n)
    eigs = rng.uniform(0.1, 1.0, n) * scale
    h = (u * eigs) @ u.conj().T
    return 0.5 * (h + h.conj().T)


def _random_hermitian(rng, n):
    g = _ginibre(rng, n)
    return 0.5 * (g + g.conj().T)


def _accretive(rng, n, scale):
    h = _positive_definite(rng, n, scale)
    k = _random_hermitian(rng, n)
    knorm = linalg.op_norm(k)
    ratio = rng.uniform(0.0, SECTOR_FILL)
    k = k * (ratio * linalg.op_norm(h) / knorm)
    return h + 1j * k


def _sectorial(rng, n, scale, alpha):
    h = _positive_definite(rng, n, scale)
    k = _random_hermitian(rng, n)
    w, v = _kernels.eigh_factor(h)
    inv_root = (v * (1.0 / np.sqrt(w))) @ v.conj().T
    m = inv_root @ k @ inv_root
    vals = _kernels.eigh_values(0.5 * (m + m.conj().T))
    rho = max(abs(float(vals[0])), abs(float(vals[-1])))
    k = k * (SECTOR_FILL * math.tan(alpha) / rho)
    return h + 1j * k


def _psd(rng, n, scale):
    u = random_unitary(rng, n)
    eigs = rng.uniform(0.0, 0.9, n) * scale
    q = (u * eigs) @ u.conj().T
    return 0.5 * (q + q.conj().T)


def _normal(rng, n, scale):
    u = random_unitary(rng, n)
    moduli = rng.uniform(0.1, 1.0, n) * scale
    phases = rng.uniform(0.0, 2.0 * np.pi, n)
    eigs = moduli * np.exp(1j * phases)
    return (u * eigs) @ u.conj().T


def draw_matrix(rng: np.random.Generator, matrix_class: str, dim: int,
                scale: float = 1.0, alpha: float | None = None):
    """One draw from the named class out of an existing stream.

    Class contracts: ``positive_definite`` has spectrum in [0.1, 1]*scale;
    ``accretive`` is H + iK with ||K|| <= 0.95 ||H||; ``sectorial`` fills
    95% of the target cone so its index stays strictly below alpha;
    ``loewner_pair`` returns (A, A + Q) with Q PSD; ``positive_pair`` two
    independent positive-definite draws; ``general`` a complex Ginibre
    matrix; ``normal`` a unitary conjugation of a random diagonal.
    """
    n = int(dim)
    scale = float(scale)
    if matrix_class == "positive_definite":
        return _positive_definite(rng, n, scale)
    if matrix_class == "accretive":
        return _accretive(rng, n, scale)
    if matrix_class == "sectorial":
        return _sectorial(rng, n, scale, float(alpha))
    if matrix_class == "loewner_pair":
        a = _positive_definite(rng, n, scale)
        return a, a + _psd(rng, n, scale)
    if matrix_class == "positive_pair":
        return _positive_definite(rng, n, scale), _positive_definite(rng, n, scale)
    if matrix_class == "general":
        return _ginibre(rng, n) * scale
    if matrix_class == "normal":
        return _normal(rng, n, scale)
    raise ValueError(f"unknown matrix class {matrix_class!r}")


def generate(spec: EnsembleSpec):
    """Deterministic draw for the recipe: a matrix, or a pair for pair classes."""
    rng = rng_from_seed(spec.seed)
    return draw_matrix(rng, spec.matrix_class, spec.dim, spec.scale, spec.alpha)
