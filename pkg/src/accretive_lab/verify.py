"""Named inequality checks and the randomized Loewner-margin trial loop.

Every matrix inequality is certified through one scalar: the smallest
eigenvalue of the difference of the two (Hermitian) sides, normalized by
``max(1, ||X|| + ||Y||)``. A check passes when its margin stays above
``-tol``. ``run_suite`` draws fresh seeded ensembles per trial, cycles
the parameter grids deterministically, and aggregates per-case reports
that are byte-reproducible for a fixed configuration.

The README carries the table mapping each case id to the inequality it
exercises.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels, entropy, linalg, radius, sectorial
from .errors import QuadratureNotConvergedError
from .means import (
    RepresentingMeasure,
    Weight,
    arith_mean,
    integrate_measure,
    mean,
    require_accretive,
)

HH_QUAD_RTOL = 1e-8
HH_QUAD_START = 16
HH_QUAD_MAX = 256

# Scalar convex-function library for the two-sided refinement lemma checks.
SCALAR_CONVEX_LIBRARY = (
    ("exp", np.exp),
    ("square", np.square),
    ("quartic", lambda x: np.power(x, 4)),
    ("neg_log", lambda x: -np.log(x)),
    ("reciprocal", lambda x: 1.0 / np.asarray(x, dtype=np.float64)),
)


def _herm(m):
    return 0.5 * (m + np.conj(np.swapaxes(m, -1, -2)))


def _lambda_min(h) -> float:
    return float(_kernels.eigh_values(_herm(h))[0])


def loewner_margin(x, y) -> float:
    """Signed order margin: lambda_min(X - Y) / max(1, ||X|| + ||Y||).

    Nonnegative means X >= Y in the Loewner order. Both inputs must be
    Hermitian (within the standard tolerance); the difference is
    symmetrized before the eigenvalue solve to kill roundoff drift.
    """
    x = linalg.as_matrix(x, "X")
    y = linalg.as_matrix(y, "Y")
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.shape} vs {y.shape}")
    if not linalg.is_hermitian(x) or not linalg.is_hermitian(y):
        raise ValueError("Loewner margins are defined for Hermitian matrices")
    lam = _lambda_min(x - y)
    return lam / max(1.0, linalg.op_norm(x) + linalg.op_norm(y))


def check_lemma_scalar(f, a: float, b: float, t: float) -> tuple[float, float]:
    """Two-sided convexity refinement for a scalar convex function.

    Returns RHS - LHS for both directions of

        f((1-t)a + tb) + 2r gap <= (1-t)f(a) + tf(b)
                                <= f((1-t)a + tb) + 2R gap,

    with gap = (f(a)+f(b))/2 - f((a+b)/2), r = min{t,1-t}, R = max{t,1-t};
    both margins are nonnegative for convex f.
    """
    w = Weight(t)
    fa, fb = float(f(a)), float(f(b))
    chord = (1.0 - w.t) * fa + w.t * fb
    f_path = float(f((1.0 - w.t) * a + w.t * b))
    gap = 0.5 * (fa + fb) - float(f(0.5 * (a + b)))
    margin_lower = chord - (f_path + 2.0 * w.r * gap)
    margin_upper = (f_path + 2.0 * w.R * gap) - chord
    return margin_lower, margin_upper


def check_path_convexity(a, b, kind: str, x, t_grid) -> tuple[float, float | None]:
    """Midpoint convexity of t -> <(A sigma_t B) x, x> along a mean path.

    Returns (min convexity margin, min log-convexity margin); the log part
    is computed for the geometric and harmonic paths (both sit below the
    geometric mean, so the quadratic form is log-convex) and is None for
    the arithmetic path.
    """
    x = np.asarray(x, dtype=np.complex128)
    grid = np.sort(np.asarray(t_grid, dtype=np.float64))

    def form(t):
        m = mean(kind, a, b, float(t))
        return float(np.real(np.vdot(x, m @ x)))

    cache = {}

    def g(t):
        key = round(float(t), 15)
        if key not in cache:
            cache[key] = form(t)
        return cache[key]

    conv = np.inf
    logconv = np.inf if kind in ("geom", "harm") else None
    for lo, hi in zip(grid[:-1], grid[1:]):
        mid = 0.5 * (lo + hi)
        conv = min(conv, 0.5 * (g(lo) + g(hi)) - g(mid))
        if logconv is not None:
            logconv = min(
                logconv,
                0.5 * (math.log(g(lo)) + math.log(g(hi))) - math.log(g(mid)),
            )
    return float(conv), None if logconv is None else float(logconv)


def check_mccarthy(b, x, t: float) -> tuple[float, float]:
    """Multiplicative refinements of the power quadratic-form inequalities.

    For positive-definite B, a unit vector x, and t in [0, 1], with
    q = <Bx,x>, qh = <B^{1/2}x,x>, qt = <B^t x,x>:

        qt <= (qh / q^{1/2})^{2r} q^t      and
        q^t <= (q^{1/2} / qh)^{2R} qt.

    Returns both RHS - LHS margins (raw).
    """
    b = linalg.as_matrix(b, "B")
    x = np.asarray(x, dtype=np.complex128)
    w = Weight(t)
    wv, vv = _kernels.eigh_factor(linalg.hermitian_part(b))
    if float(wv[0]) <= 0.0:
        raise ValueError("McCarthy margins need a positive-definite matrix")
    y = vv.conj().T @ x
    weights = np.abs(y) ** 2

    def q_power(exponent):
        return float(weights @ np.power(wv, exponent))

    q = q_power(1.0)
    qh = q_power(0.5)
    qt = q_power(w.t)
    lower = (qh / math.sqrt(q)) ** (2.0 * w.r) * q**w.t - qt
    upper = (math.sqrt(q) / qh) ** (2.0 * w.R) * qt - q**w.t
    return lower, upper


def _half_gap(a, b, kind: str):
    """Arithmetic-minus-sigma gap at the symmetric point, on the real parts."""
    ha = linalg.hermitian_part(a)
    hb = linalg.hermitian_part(b)
    return 0.5 * (ha + hb) - _herm(mean(kind, ha, hb, 0.5))


def check_thm_nabla_vs_sigma(a, b, kind: str, t: float) -> float:
    """Re(A nabla_t B) <= Re(A sigma_t B) + 2R (Re(A nabla B) - Re A sigma Re B)."""
    a = require_accretive(a, "A")
    b = require_accretive(b, "B")
    w = Weight(t)
    lhs = linalg.hermitian_part(arith_mean(a, b, w.t))
    rhs = _herm(mean(kind, a, b, w.t)) + 2.0 * w.R * _half_gap(a, b, kind)
    return loewner_margin(rhs, lhs)


def _shared_alpha(cert_a: sectorial.SectorialCert, cert_b: sectorial.SectorialCert) -> float:
    if not math.isclose(cert_a.alpha, cert_b.alpha, rel_tol=0.0, abs_tol=1e-12):
        raise ValueError(
            f"certificates carry different sector angles: {cert_a.alpha} vs {cert_b.alpha}"
        )
    return cert_a.alpha


def check_thm_sec2_reverse(cert_a, cert_b, kind: str, t: float) -> float:
    """Re(A sigma_t B) <= sec^2(alpha) (Re(A nabla_t B) - 2r (Re(A nabla B) - Re A sigma Re B))."""
    alpha = _shared_alpha(cert_a, cert_b)
    a, b = cert_a.matrix, cert_b.matrix
    w = Weight(t)
    sec2 = 1.0 / math.cos(alpha) ** 2
    lhs = _herm(mean(kind, a, b, w.t))
    rhs = sec2 * (
        linalg.hermitian_part(arith_mean(a, b, w.t)) - 2.0 * w.r * _half_gap(a, b, kind)
    )
    return loewner_margin(rhs, lhs)


def check_remark_sandwich(a, b, kind: str, t: float) -> tuple[float, float]:
    """2r (A nabla B - A sigma B) <= A nabla_t B - A sigma_t B <= 2R (...), A, B > 0."""
    w = Weight(t)
    diff_t = _herm(arith_mean(a, b, w.t) - mean(kind, a, b, w.t))
    gap = _herm(arith_mean(a, b, 0.5) - mean(kind, a, b, 0.5))
    lower = loewner_margin(diff_t, 2.0 * w.r * gap)
    upper = loewner_margin(2.0 * w.R * gap, diff_t)
    return lower, upper


def _harmonic_middle_pieces(a, b):
    """Shared precomputation for the harmonic refinement chain."""
    a = require_accretive(a, "A")
    b = require_accretive(b, "B")
    ha = linalg.hermitian_part(a)
    hb = linalg.hermitian_part(b)
    inv_a, inv_b = linalg.inverse(a), linalg.inverse(b)
    inv_ha, inv_hb = linalg.inverse(ha), linalg.inverse(hb)
    # (Re A ! Re B)^{-1} is available without inverting: it is the mean of the
    # inverted real parts; (Re(A ! B))^{-1} needs one inversion.
    sym_real = linalg.hermitian_part(linalg.inverse(0.5 * inv_a + 0.5 * inv_b))
    pivot = _herm(0.5 * inv_ha + 0.5 * inv_hb) - _herm(linalg.inverse(sym_real))
    return a, b, inv_a, inv_b, inv_ha, inv_hb, pivot


def check_harmonic_refine(a, b, t: float) -> tuple[float, float]:
    """Refined harmonic chain

        Re(A !_t B) >= ((Re A !_t Re B)^{-1}
                        - 2r ((Re A ! Re B)^{-1} - (Re(A ! B))^{-1}))^{-1}
                    >= Re A !_t Re B.

    Returns both chain links as Loewner margins.
    """
    a, b, inv_a, inv_b, inv_ha, inv_hb, pivot = _harmonic_middle_pieces(a, b)
    w = Weight(t)
    real_harm_t = linalg.hermitian_part(
        linalg.inverse((1.0 - w.t) * inv_a + w.t * inv_b)
    )
    pre = _herm((1.0 - w.t) * inv_ha + w.t * inv_hb)
    harm_real_t = _herm(linalg.inverse(pre))
    middle = _herm(linalg.inverse(_herm(pre - 2.0 * w.r * pivot)))
    return loewner_margin(real_harm_t, middle), loewner_margin(middle, harm_real_t)


def check_cor_integral(a, b, measure: RepresentingMeasure) -> tuple[float, float]:
    """Integrated harmonic refinement:

        Re(A sigma_f B) >= integral of middle(t) d nu_f(t) >= Re A sigma_f Re B,

    where middle is the refined term from :func:`check_harmonic_refine`.
    All three integrands share one node set so quadrature noise cancels
    from the margins.
    """
    a, b, inv_a, inv_b, inv_ha, inv_hb, pivot = _harmonic_middle_pieces(a, b)

    def stack(t):
        w = Weight(t)
        real_harm = linalg.hermitian_part(
            linalg.inverse((1.0 - w.t) * inv_a + w.t * inv_b)
        )
        pre = _herm((1.0 - w.t) * inv_ha + w.t * inv_hb)
        middle = _herm(linalg.inverse(_herm(pre - 2.0 * w.r * pivot)))
        harm_real = _herm(linalg.inverse(pre))
        return np.stack([real_harm, middle, harm_real])

    # min{t, 1-t} kinks the integrand at 1/2, so integrate piecewise
    integral = integrate_measure(measure, stack, kink_at_half=True)
    upper = loewner_margin(_herm(integral[0]), _herm(integral[1]))
    lower = loewner_margin(_herm(integral[1]), _herm(integral[2]))
    return upper, lower


def check_concave_sec2(cert_a, cert_b, s: float, t: float) -> float:
    """Concavity transfer through the real part, f(x) = x^s with s in (0, 1]:

        Re(f(A) nabla_t f(B)) + 2r sec^2(alpha) (f(Re(A nabla B)) - f(Re A) nabla f(Re B))
            <= sec^2(alpha) Re f(A nabla_t B).
    """
    alpha = _shared_alpha(cert_a, cert_b)
    s = float(s)
    if not 0.0 < s <= 1.0:
        raise ValueError(f"concavity checks need s in (0, 1], got {s!r}")
    a, b = cert_a.matrix, cert_b.matrix
    w = Weight(t)
    sec2 = 1.0 / math.cos(alpha) ** 2
    ha = linalg.hermitian_part(a)
    hb = linalg.hermitian_part(b)
    fa = linalg.principal_power(a, s)
    fb = linalg.principal_power(b, s)
    f_mid = _herm(linalg.principal_power(0.5 * (ha + hb), s))
    f_real_avg = 0.5 * (
        _herm(linalg.principal_power(ha, s)) + _herm(linalg.principal_power(hb, s))
    )
    lhs = linalg.hermitian_part(arith_mean(fa, fb, w.t)) + (
        2.0 * w.r * sec2
    ) * (f_mid - f_real_avg)
    rhs = sec2 * linalg.hermitian_part(linalg.principal_power(arith_mean(a, b, w.t), s))
    return loewner_margin(rhs, _herm(lhs))


def _gauss_legendre_01(fn, rtol=HH_QUAD_RTOL):
    """Adaptive fixed-rule Gauss-Legendre integral of a matrix-valued map on [0, 1]."""
    previous = None
    count = HH_QUAD_START
    while count <= HH_QUAD_MAX:
        xs, ws = np.polynomial.legendre.leggauss(count)
        ts = 0.5 * (xs + 1.0)
        value = sum(0.5 * w * fn(t) for t, w in zip(ts, ws))
        if previous is not None:
            drift = float(np.linalg.norm(value - previous))
            if drift <= rtol * max(1.0, float(np.linalg.norm(value))):
                return value
        previous = value
        count *= 2
    raise QuadratureNotConvergedError(
        f"Gauss-Legendre path integral still moving after {HH_QUAD_MAX} nodes"
    )


def check_hermite_hadamard(cert_a, cert_b, s: float) -> tuple[float, float]:
    """Averaged concavity chain, f(x) = x^s with s in (0, 1]:

        Re((f(A) + f(B))/2) <= sec^2(alpha) integral of Re f((1-t)A + tB) dt
                            <= sec^4(alpha) Re f((A+B)/2).
    """
    alpha = _shared_alpha(cert_a, cert_b)
    s = float(s)
    if not 0.0 < s <= 1.0:
        raise ValueError(f"Hermite-Hadamard checks need s in (0, 1], got {s!r}")
    a, b = cert_a.matrix, cert_b.matrix
    sec2 = 1.0 / math.cos(alpha) ** 2
    left = 0.5 * (
        linalg.hermitian_part(linalg.principal_power(a, s))
        + linalg.hermitian_part(linalg.principal_power(b, s))
    )
    middle = _gauss_legendre_01(
        lambda t: linalg.hermitian_part(
            linalg.principal_power((1.0 - t) * a + t * b, s)
        )
    )
    right = linalg.hermitian_part(linalg.principal_power(0.5 * (a + b), s))
    return (
        loewner_margin(sec2 * middle, left),
        loewner_margin(sec2 * sec2 * right, sec2 * middle),
    )


def check_baseline_real_lower(a, b, kind: str, t: float) -> float:
    """Re(A sigma_t B) >= Re A sigma_t Re B for accretive pairs."""
    a = require_accretive(a, "A")
    b = require_accretive(b, "B")
    w = Weight(t)
    lhs = _herm(mean(kind, a, b, w.t))
    rhs = _herm(mean(kind, linalg.hermitian_part(a), linalg.hermitian_part(b), w.t))
    return loewner_margin(lhs, rhs)


def check_baseline_sec2_upper(cert_a, cert_b, kind: str, t: float) -> float:
    """Re(A sigma_t B) <= sec^2(alpha) (Re A sigma_t Re B) for sectorial pairs."""
    alpha = _shared_alpha(cert_a, cert_b)
    a, b = cert_a.matrix, cert_b.matrix
    w = Weight(t)
    sec2 = 1.0 / math.cos(alpha) ** 2
    lhs = _herm(mean(kind, a, b, w.t))
    rhs = sec2 * _herm(
        mean(kind, linalg.hermitian_part(a), linalg.hermitian_part(b), w.t)
    )
    return loewner_margin(rhs, lhs)


# --------------------------------------------------------------------------
# Trial loop


@dataclass(frozen=True)
class SuiteConfig:
    """Configuration of one harness run; see the CLI for file/flag loading."""

    cases: tuple[str, ...] = ("all",)
    trials: int = 500
    dim_min: int = 2
    dim_max: int = 8
    alpha_grid: tuple[float, ...] = (0.2, 0.5, 0.9, 1.2)
    t_grid: tuple[float, ...] = (0.1, 0.25, 0.5, 0.75, 0.9)
    p_grid: tuple[float, ...] = (1.0, 2.0)
    s_grid: tuple[float, ...] = (0.25, 0.5, 1.0)
    measure_alpha_grid: tuple[float, ...] = (0.2, 0.5, 0.8)
    seed: int = 42
    tol: float = 1e-8
    out: str | None = None

    def __post_init__(self):
        for name in ("cases", "alpha_grid", "t_grid", "p_grid", "s_grid", "measure_alpha_grid"):
            value = getattr(self, name)
            if not isinstance(value, tuple):
                object.__setattr__(self, name, tuple(value))
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")
        if not 1 <= self.dim_min <= self.dim_max <= 16:
            raise ValueError("dims must satisfy 1 <= dim_min <= dim_max <= 16")
        if any(not 0.0 <= t <= 1.0 for t in self.t_grid):
            raise ValueError("t grid values must lie in [0, 1]")
        if any(not 0.0 < a < math.pi / 2 for a in self.alpha_grid):
            raise ValueError("alpha grid values must lie in (0, pi/2)")
        if any(p < 1.0 for p in self.p_grid):
            raise ValueError("p grid values must be >= 1")
        if any(not 0.0 < s <= 1.0 for s in self.s_grid):
            raise ValueError("s grid values must lie in (0, 1]")
        if any(not 0.0 < a < 1.0 for a in self.measure_alpha_grid):
            raise ValueError("measure alpha grid values must lie in (0, 1)")
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")

    def resolved_cases(self) -> tuple[str, ...]:
        if "all" in self.cases:
            return CASE_IDS
        unknown = [c for c in self.cases if c not in CASE_IDS]
        if unknown:
            raise ValueError(f"unknown case ids {unknown}; known: {list(CASE_IDS)}")
        return tuple(self.cases)


@dataclass
class InequalityReport:
    """Aggregated margins of one case over the trial loop."""

    case: str
    trials: int
    dim_min: int
    dim_max: int
    seed: int
    tol: float
    min_margin: float
    margins: list[float] = field(default_factory=list)  # sorted ascending
    failures: list[tuple[int, int]] = field(default_factory=list)  # (seed, trial)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.min_margin >= -self.tol

    def to_dict(self) -> dict:
        if self.margins:
            lo, hi = self.margins[0], self.margins[-1]
            if hi <= lo:
                edges = [lo, hi if hi > lo else lo + 1.0]
                counts = [len(self.margins)]
            else:
                hist, bin_edges = np.histogram(self.margins, bins=20, range=(lo, hi))
                edges = [float(e) for e in bin_edges]
                counts = [int(c) for c in hist]
        else:
            edges, counts = [], []
        return {
            "case": self.case,
            "trials": self.trials,
            "dims": [self.dim_min, self.dim_max],
            "seed": self.seed,
            "tol": self.tol,
            "min_margin": self.min_margin,
            "margins": list(self.margins),
            "margins_histogram": {"edges": edges, "counts": counts},
            "failures": [[s, i] for s, i in self.failures],
            "wall_time": self.wall_time,
            "pass": self.passed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "InequalityReport":
        return cls(
            case=data["case"],
            trials=int(data["trials"]),
            dim_min=int(data["dims"][0]),
            dim_max=int(data["dims"][1]),
            seed=int(data["seed"]),
            tol=float(data["tol"]),
            min_margin=float(data["min_margin"]),
            margins=[float(m) for m in data["margins"]],
            failures=[(int(s), int(i)) for s, i in data["failures"]],
            wall_time=float(data["wall_time"]),
        )


def _pick(grid, trial: int, stride: int = 1):
    return grid[(trial // stride) % len(grid)]


def _scale_of(*mats) -> float:
    return max(1.0, sum(linalg.op_norm(m) for m in mats))


_MEAN_KINDS = ("geom", "harm", "arith")
_SYMMETRIC_KINDS = ("geom", "harm")


def _case_lemma_scalar(rng, dim, trial, cfg):
    name, f = _pick(SCALAR_CONVEX_LIBRARY, trial)
    a, b = rng.uniform(0.1, 3.0, 2)
    t = float(rng.uniform(0.0, 1.0))
    m_lo, m_hi = check_lemma_scalar(f, float(a), float(b), t)
    norm = max(1.0, abs(float(f(a))), abs(float(f(b))))
    return [m_lo / norm, m_hi / norm]


def _case_prop_path_convex(rng, dim, trial, cfg):
    a, b = sectorial.draw_matrix(rng, "positive_pair", dim)
    x = sectorial.unit_vector(rng, dim)
    kind = _pick(_MEAN_KINDS, trial)
    conv, _ = check_path_convexity(a, b, kind, x, np.linspace(0.0, 1.0, 11))
    return [conv / _scale_of(a, b)]


def _case_prop_path_logconvex(rng, dim, trial, cfg):
    a, b = sectorial.draw_matrix(rng, "positive_pair", dim)
    x = sectorial.unit_vector(rng, dim)
    kind = _pick(_SYMMETRIC_KINDS, trial)
    _, logconv = check_path_convexity(a, b, kind, x, np.linspace(0.0, 1.0, 11))
    return [logconv]


def _case_mccarthy(rng, dim, trial, cfg):
    b = sectorial.draw_matrix(rng, "positive_definite", dim)
    x = sectorial.unit_vector(rng, dim)
    t = float(rng.uniform(0.0, 1.0))
    lower, upper = check_mccarthy(b, x, t)
    norm = max(1.0, linalg.op_norm(b))
    return lower / norm, upper / norm


def _case_mccarthy_lower(rng, dim, trial, cfg):
    return [_case_mccarthy(rng, dim, trial, cfg)[0]]


def _case_mccarthy_upper(rng, dim, trial, cfg):
    return [_case_mccarthy(rng, dim, trial, cfg)[1]]


def _case_thm_nabla_vs_sigma(rng, dim, trial, cfg):
    a = sectorial.draw_matrix(rng, "accretive", dim)
    b = sectorial.draw_matrix(rng, "accretive", dim)
    t = _pick(cfg.t_grid, trial)
    kind = _pick(_MEAN_KINDS, trial, stride=len(cfg.t_grid))
    return [check_thm_nabla_vs_sigma(a, b, kind, t)]


def _sectorial_cert_pair(rng, dim, alpha):
    cert_a = sectorial.SectorialCert.certify(
        sectorial.draw_matrix(rng, "sectorial", dim, alpha=alpha), alpha
    )
    cert_b = sectorial.SectorialCert.certify(
        sectorial.draw_matrix(rng, "sectorial", dim, alpha=alpha), alpha
    )
    return cert_a, cert_b


def _case_thm_sec2_reverse(rng, dim, trial, cfg):
    alpha = _pick(cfg.alpha_grid, trial)
    cert_a, cert_b = _sectorial_cert_pair(rng, dim, alpha)
    t = _pick(cfg.t_grid, trial, stride=len(cfg.alpha_grid))
    kind = _pick(_MEAN_KINDS, trial, stride=len(cfg.alpha_grid) * len(cfg.t_grid))
    return [check_thm_sec2_reverse(cert_a, cert_b, kind, t)]


def _case_remark_positive_sandwich(rng, dim, trial, cfg):
    a, b = sectorial.draw_matrix(rng, "positive_pair", dim)
    t = _pick(cfg.t_grid, trial)
    kind = _pick(_SYMMETRIC_KINDS, trial, stride=len(cfg.t_grid))
    return list(check_remark_sandwich(a, b, kind, t))


def _case_thm_harmonic_refine(rng, dim, trial, cfg):
    a = sectorial.draw_matrix(rng, "accretive", dim)
    b = sectorial.draw_matrix(rng, "accretive", dim)
    t = _pick(cfg.t_grid, trial)
    return list(check_harmonic_refine(a, b, t))


_FIXED_DISCRETE = (((0.25, 0.3), (0.5, 0.4), (0.75, 0.3)),)


def _case_cor_integral_refine(rng, dim, trial, cfg):
    a = sectorial.draw_matrix(rng, "accretive", dim)
    b = sectorial.draw_matrix(rng, "accretive", dim)
    measures = [RepresentingMeasure.power_density(al) for al in cfg.measure_alpha_grid]
    measures.append(RepresentingMeasure.discrete(_FIXED_DISCRETE[0]))
    measure = _pick(measures, trial)
    return list(check_cor_integral(a, b, measure))


def _case_thm_concave_sec2(rng, dim, trial, cfg):
    alpha = _pick(cfg.alpha_grid, trial)
    cert_a, cert_b = _sectorial_cert_pair(rng, dim, alpha)
    t = _pick(cfg.t_grid, trial, stride=len(cfg.alpha_grid))
    s = _pick(cfg.s_grid, trial, stride=len(cfg.alpha_grid) * len(cfg.t_grid))
    return [check_concave_sec2(cert_a, cert_b, s, t)]


def _case_thm_hermite_hadamard(rng, dim, trial, cfg):
    alpha = _pick(cfg.alpha_grid, trial)
    cert_a, cert_b = _sectorial_cert_pair(rng, dim, alpha)
    s = _pick(cfg.s_grid, trial, stride=len(cfg.alpha_grid))
    return list(check_hermite_hadamard(cert_a, cert_b, s))


def _case_radius_refine(rng, dim, trial, cfg):
    matrix_class = "normal" if trial % 4 == 3 else "general"
    a = sectorial.draw_matrix(rng, matrix_class, dim)
    p = _pick(cfg.p_grid, trial)
    t = _pick(cfg.t_grid, trial, stride=len(cfg.p_grid))
    scale = max(1.0, linalg.op_norm(a))
    omega = radius.numerical_radius(a).omega
    refined = radius.refined_bound(a, p, t)
    power = radius.power_bound(a, p, t)
    margins = [(refined - omega) / scale, (power - refined) / scale]
    # the t = 1/2, p = 1 refinement reproduces the Kittaneh value
    margins.append((radius.kittaneh_bound(a) - radius.refined_bound(a, 1.0, 0.5)) / scale)
    return margins


def _case_tsallis_sandwich(rng, dim, trial, cfg):
    # the two-sided bound needs the ordered hypothesis A <= B (see README)
    a, b = sectorial.draw_matrix(rng, "loewner_pair", dim)
    t = _pick(cfg.t_grid, trial)
    lower, upper = entropy.check_tsallis_sandwich(a, b, t)
    scale = _scale_of(a, b)
    return [lower / scale, upper / scale]


def _case_tsallis_param_convex(rng, dim, trial, cfg):
    a, b = sectorial.draw_matrix(rng, "loewner_pair", dim)
    ta, tb = rng.uniform(0.05, 1.0, 2)
    t = float(rng.uniform(0.0, 1.0))
    margin = entropy.check_tsallis_param_convexity(a, b, float(ta), float(tb), t)
    return [margin / _scale_of(a, b)]


def _case_tsallis_monotone(rng, dim, trial, cfg):
    a, b = sectorial.draw_matrix(rng, "positive_pair", dim)
    margin = entropy.check_tsallis_monotone(a, b, np.linspace(0.1, 0.9, 9))
    return [margin / _scale_of(a, b)]


def _case_lnt_convexity(rng, dim, trial, cfg):
    x = float(np.exp(rng.uniform(np.log(0.05), np.log(20.0))))
    margin, _ = entropy.check_lnt_convexity(x, np.arange(0.05, 1.0001, 0.05))
    return [margin / max(1.0, x)]


def _case_baseline_real_lower(rng, dim, trial, cfg):
    a = sectorial.draw_matrix(rng, "accretive", dim)
    b = sectorial.draw_matrix(rng, "accretive", dim)
    t = _pick(cfg.t_grid, trial)
    kind = _pick(_SYMMETRIC_KINDS, trial, stride=len(cfg.t_grid))
    return [check_baseline_real_lower(a, b, kind, t)]


def _case_baseline_sec2_upper(rng, dim, trial, cfg):
    alpha = _pick(cfg.alpha_grid, trial)
    cert_a, cert_b = _sectorial_cert_pair(rng, dim, alpha)
    t = _pick(cfg.t_grid, trial, stride=len(cfg.alpha_grid))
    kind = _pick(_MEAN_KINDS, trial, stride=len(cfg.alpha_grid) * len(cfg.t_grid))
    return [check_baseline_sec2_upper(cert_a, cert_b, kind, t)]


_RUNNERS = {
    "lemma_scalar": _case_lemma_scalar,
    "prop_path_convex": _case_prop_path_convex,
    "prop_path_logconvex": _case_prop_path_logconvex,
    "mccarthy_lower": _case_mccarthy_lower,
    "mccarthy_upper": _case_mccarthy_upper,
    "thm_nabla_vs_sigma": _case_thm_nabla_vs_sigma,
    "thm_sec2_reverse": _case_thm_sec2_reverse,
    "remark_positive_sandwich": _case_remark_positive_sandwich,
    "thm_harmonic_refine": _case_thm_harmonic_refine,
    "cor_integral_refine": _case_cor_integral_refine,
    "thm_concave_sec2": _case_thm_concave_sec2,
    "thm_hermite_hadamard": _case_thm_hermite_hadamard,
    "radius_refine": _case_radius_refine,
    "tsallis_sandwich": _case_tsallis_sandwich,
    "tsallis_param_convex": _case_tsallis_param_convex,
    "tsallis_monotone": _case_tsallis_monotone,
    "lnt_convexity": _case_lnt_convexity,
    "baseline_real_lower": _case_baseline_real_lower,
    "baseline_sec2_upper": _case_baseline_sec2_upper,
}

CASE_IDS = tuple(_RUNNERS)

# Quadrature-bearing cases cannot certify margins below the quadrature
# tolerance; their pass threshold is floored accordingly.
CASE_TOL_FLOOR = {
    "cor_integral_refine": 1e-6,
    "thm_hermite_hadamard": 1e-6,
}


@dataclass(frozen=True)
class CheckCase:
    """One resolved trial: the case id plus the parameters it will use."""

    id: str
    trial: int
    seed: int
    dim: int

    @classmethod
    def resolve(cls, case_id: str, cfg: SuiteConfig, trial: int) -> "CheckCase":
        span = cfg.dim_max - cfg.dim_min + 1
        return cls(
            id=case_id,
            trial=trial,
            seed=sectorial.derive_seed(cfg.seed, trial),
            dim=cfg.dim_min + trial % span,
        )


def run_trial(case_id: str, cfg: SuiteConfig, trial: int) -> list[float]:
    """Margins of one trial (normalized); deterministic in (cfg.seed, trial)."""
    resolved = CheckCase.resolve(case_id, cfg, trial)
    rng = sectorial.rng_from_seed(resolved.seed)
    return [float(m) for m in _RUNNERS[case_id](rng, resolved.dim, trial, cfg)]


def _run_case(case_id: str, cfg: SuiteConfig) -> InequalityReport:
    started = time.perf_counter()
    tol = max(cfg.tol, CASE_TOL_FLOOR.get(case_id, 0.0))
    margins: list[float] = []
    failures: list[tuple[int, int]] = []
    for trial in range(cfg.trials):
        trial_margins = run_trial(case_id, cfg, trial)
        worst = min(trial_margins) if trial_margins else 0.0
        margins.append(worst)
        if worst < -tol:
            failures.append((cfg.seed, trial))
    margins.sort()
    return InequalityReport(
        case=case_id,
        trials=cfg.trials,
        dim_min=cfg.dim_min,
        dim_max=cfg.dim_max,
        seed=cfg.seed,
        tol=tol,
        min_margin=margins[0] if margins else 0.0,
        margins=margins,
        failures=failures,
        wall_time=time.perf_counter() - started,
    )


def run_suite(cfg: SuiteConfig) -> list[InequalityReport]:
    """Run every selected case; deterministic given the configuration."""
    return [_run_case(case_id, cfg) for case_id in cfg.resolved_cases()]
