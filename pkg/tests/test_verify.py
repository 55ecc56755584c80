"""Inequality checks and the trial loop: margins, endpoints, determinism."""

import numpy as np
import pytest

from accretive_lab import linalg
from accretive_lab.means import RepresentingMeasure
from accretive_lab.sectorial import SectorialCert, draw_matrix, rng_from_seed
from accretive_lab.verify import (
    CASE_IDS,
    InequalityReport,
    SuiteConfig,
    check_baseline_real_lower,
    check_baseline_sec2_upper,
    check_concave_sec2,
    check_cor_integral,
    check_harmonic_refine,
    check_hermite_hadamard,
    check_lemma_scalar,
    check_mccarthy,
    check_path_convexity,
    check_remark_sandwich,
    check_thm_nabla_vs_sigma,
    check_thm_sec2_reverse,
    loewner_margin,
    run_suite,
    run_trial,
)


def sector_pair(seed, dim, alpha):
    rng = rng_from_seed(seed)
    return (
        SectorialCert.certify(draw_matrix(rng, "sectorial", dim, alpha=alpha), alpha),
        SectorialCert.certify(draw_matrix(rng, "sectorial", dim, alpha=alpha), alpha),
    )


class TestLoewnerMargin:
    def test_identity_vs_zero(self):
        assert loewner_margin(np.eye(2), np.zeros((2, 2))) == pytest.approx(1.0)

    def test_equal_inputs(self):
        assert loewner_margin(np.diag([1.0, 2.0]), np.diag([1.0, 2.0])) == 0.0

    def test_incomparable(self):
        assert loewner_margin(np.diag([1.0, 2.0]), np.diag([2.0, 1.0])) < 0.0

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match="Hermitian"):
            loewner_margin([[0.0, 1.0], [0.0, 0.0]], np.eye(2))


class TestLemmaScalar:
    def test_frozen_square_example(self):
        lower, upper = check_lemma_scalar(np.square, 0.0, 1.0, 0.25)
        assert lower == pytest.approx(0.0625, abs=1e-15)
        assert upper == pytest.approx(0.1875, abs=1e-15)

    def test_midpoint_is_equality_both_sides(self):
        for f in (np.exp, np.square, lambda x: 1.0 / x):
            lower, upper = check_lemma_scalar(f, 0.7, 2.3, 0.5)
            assert abs(lower) <= 1e-12 and abs(upper) <= 1e-12

    @pytest.mark.parametrize("t", [0.0, 1.0])
    def test_endpoints_collapse_the_tight_side(self, t):
        lower, upper = check_lemma_scalar(np.exp, 0.4, 1.9, t)
        assert abs(lower) <= 1e-12
        assert upper >= -1e-12  # slack side carries the full midpoint gap

    def test_random_exponentials(self):
        rng = np.random.default_rng(0)
        for _ in range(200):
            a, b = rng.uniform(0.0, 3.0, 2)
            t = float(rng.uniform(0.0, 1.0))
            lower, upper = check_lemma_scalar(np.exp, float(a), float(b), t)
            assert lower >= -1e-12 and upper >= -1e-12


class TestPathConvexity:
    def test_constant_path(self):
        a = np.diag([1.0, 2.0])
        x = np.array([1.0, 1.0]) / np.sqrt(2.0)
        conv, logconv = check_path_convexity(a, a, "geom", x, np.linspace(0, 1, 11))
        assert abs(conv) <= 1e-12 and abs(logconv) <= 1e-12

    def test_arithmetic_path_is_affine(self):
        rng = rng_from_seed(1)
        a, b = draw_matrix(rng, "positive_pair", 4)
        x = np.zeros(4)
        x[0] = 1.0
        conv, logconv = check_path_convexity(a, b, "arith", x, np.linspace(0, 1, 11))
        assert abs(conv) <= 1e-12
        assert logconv is None

    @pytest.mark.parametrize("kind", ["geom", "harm"])
    def test_log_convexity_on_random_pairs(self, kind):
        rng = rng_from_seed(2)
        for _ in range(10):
            n = int(rng.integers(2, 6))
            a, b = draw_matrix(rng, "positive_pair", n)
            x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            x /= np.linalg.norm(x)
            conv, logconv = check_path_convexity(a, b, kind, x, np.linspace(0, 1, 11))
            assert conv >= -1e-10
            assert logconv >= -1e-10


class TestMcCarthy:
    def test_identity_matrix(self):
        x = np.array([0.6, 0.8])
        lower, upper = check_mccarthy(np.eye(2), x, 0.3)
        assert abs(lower) <= 1e-14 and abs(upper) <= 1e-14

    @pytest.mark.parametrize("t", [0.0, 1.0])
    def test_classical_reduction_at_endpoints(self, t):
        rng = rng_from_seed(3)
        b = draw_matrix(rng, "positive_definite", 3)
        x = np.array([1.0, 0.0, 0.0])
        lower, upper = check_mccarthy(b, x, t)
        assert lower >= -1e-12 and upper >= -1e-12

    def test_diagonal_example_against_scalar_oracle(self):
        b = np.diag([1.0, 4.0])
        x = np.array([1.0, 1.0]) / np.sqrt(2.0)
        t = 0.3
        lower, upper = check_mccarthy(b, x, t)
        q = 0.5 * (1.0 + 4.0)
        qh = 0.5 * (1.0 + 2.0)
        qt = 0.5 * (1.0 + 4.0**t)
        r, big_r = min(t, 1 - t), max(t, 1 - t)
        assert lower == pytest.approx((qh / np.sqrt(q)) ** (2 * r) * q**t - qt, abs=1e-12)
        assert upper == pytest.approx((np.sqrt(q) / qh) ** (2 * big_r) * qt - q**t, abs=1e-12)
        assert lower >= 0.0 and upper >= 0.0


class TestAccretiveTheorems:
    def test_nabla_vs_sigma_same_input(self):
        a = np.array([[2 + 1j, 0.4], [0.2, 1.5 - 0.3j]])
        for kind in ("geom", "harm", "arith"):
            assert check_thm_nabla_vs_sigma(a, a, kind, 0.3) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("t", [0.0, 1.0])
    def test_nabla_vs_sigma_endpoints(self, t):
        rng = rng_from_seed(4)
        a = draw_matrix(rng, "accretive", 3)
        b = draw_matrix(rng, "accretive", 3)
        assert check_thm_nabla_vs_sigma(a, b, "geom", t) >= -1e-12

    def test_nabla_vs_sigma_random_sectorial(self):
        rng = rng_from_seed(5)
        for _ in range(10):
            a = draw_matrix(rng, "sectorial", 4, alpha=0.6)
            b = draw_matrix(rng, "sectorial", 4, alpha=0.6)
            assert check_thm_nabla_vs_sigma(a, b, "geom", 0.3) >= -1e-8

    def test_sec2_reverse_hermitian_collapse(self):
        a = np.diag([1.0, 3.0])
        cert = SectorialCert.certify(a, 0.0)
        for t in (0.1, 0.5, 0.8):
            assert check_thm_sec2_reverse(cert, cert, "geom", t) == pytest.approx(
                0.0, abs=1e-12
            )

    def test_sec2_reverse_endpoints(self):
        cert_a, cert_b = sector_pair(6, 3, 0.5)
        for t in (0.0, 1.0):
            assert check_thm_sec2_reverse(cert_a, cert_b, "geom", t) >= -1e-12

    def test_sec2_reverse_random(self):
        for seed in range(5):
            cert_a, cert_b = sector_pair(100 + seed, 4, 0.5)
            assert check_thm_sec2_reverse(cert_a, cert_b, "geom", 0.4) >= -1e-8

    def test_sec2_reverse_rejects_mismatched_angles(self):
        cert_a, _ = sector_pair(7, 3, 0.5)
        _, cert_b = sector_pair(7, 3, 0.7)
        with pytest.raises(ValueError, match="different sector angles"):
            check_thm_sec2_reverse(cert_a, cert_b, "geom", 0.5)

    def test_remark_sandwich_midpoint_identity(self):
        rng = rng_from_seed(8)
        a, b = draw_matrix(rng, "positive_pair", 4)
        lower, upper = check_remark_sandwich(a, b, "geom", 0.5)
        assert abs(lower) <= 1e-12 and abs(upper) <= 1e-12

    def test_remark_sandwich_same_input(self):
        a = np.diag([1.0, 2.0])
        lower, upper = check_remark_sandwich(a, a, "harm", 0.2)
        assert abs(lower) <= 1e-14 and abs(upper) <= 1e-14

    def test_remark_sandwich_random(self):
        rng = rng_from_seed(9)
        for _ in range(10):
            a, b = draw_matrix(rng, "positive_pair", 3)
            lower, upper = check_remark_sandwich(a, b, "geom", 0.2)
            assert lower >= -1e-9 and upper >= -1e-9


class TestHarmonicRefinement:
    def test_same_input(self):
        a = np.array([[2 + 0.5j, 0.1], [0.3, 1.5 - 0.2j]])
        refine, baseline = check_harmonic_refine(a, a, 0.4)
        assert abs(refine) <= 1e-12 and abs(baseline) <= 1e-12

    def test_hermitian_collapse(self):
        rng = rng_from_seed(10)
        a, b = draw_matrix(rng, "positive_pair", 3)
        refine, baseline = check_harmonic_refine(a, b, 0.3)
        assert abs(refine) <= 1e-11 and abs(baseline) <= 1e-11

    def test_random_accretive(self):
        rng = rng_from_seed(11)
        for _ in range(10):
            a = draw_matrix(rng, "accretive", 4)
            b = draw_matrix(rng, "accretive", 4)
            refine, baseline = check_harmonic_refine(a, b, 0.3)
            assert refine >= -1e-8 and baseline >= -1e-8

    def test_point_mass_reduces_to_pointwise_check(self):
        rng = rng_from_seed(12)
        a = draw_matrix(rng, "accretive", 3)
        b = draw_matrix(rng, "accretive", 3)
        upper, lower = check_cor_integral(a, b, RepresentingMeasure.point_mass(0.3))
        refine, baseline = check_harmonic_refine(a, b, 0.3)
        assert upper == pytest.approx(refine, abs=1e-12)
        assert lower == pytest.approx(baseline, abs=1e-12)

    def test_integral_same_input(self):
        a = np.array([[2 + 0.5j, 0.1], [0.3, 1.5 - 0.2j]])
        upper, lower = check_cor_integral(a, a, RepresentingMeasure.power_density(0.5))
        assert abs(upper) <= 1e-10 and abs(lower) <= 1e-10

    def test_integral_on_sectorial_draws(self):
        rng = rng_from_seed(13)
        for alpha in (0.5,):
            a = draw_matrix(rng, "sectorial", 3, alpha=0.4)
            b = draw_matrix(rng, "sectorial", 3, alpha=0.4)
            upper, lower = check_cor_integral(a, b, RepresentingMeasure.power_density(alpha))
            assert upper >= -1e-6 and lower >= -1e-6


class TestConcaveAndHermiteHadamard:
    def test_identity_exponent_is_trivial(self):
        cert_a, cert_b = sector_pair(14, 3, 0.5)
        assert check_concave_sec2(cert_a, cert_b, 1.0, 0.3) >= 0.0

    def test_hermitian_collapse(self):
        a = np.diag([1.0, 2.0])
        cert = SectorialCert.certify(a, 0.0)
        assert check_concave_sec2(cert, cert, 0.5, 0.3) == pytest.approx(0.0, abs=1e-12)

    def test_random_sectorial(self):
        for seed in range(5):
            cert_a, cert_b = sector_pair(200 + seed, 3, 0.5)
            assert check_concave_sec2(cert_a, cert_b, 0.5, 0.3) >= -1e-8

    def test_hh_same_input_margins(self):
        cert_a, cert_b = sector_pair(15, 3, 0.6)
        cert_b = cert_a
        left, right = check_hermite_hadamard(cert_a, cert_b, 0.5)
        assert left >= -1e-7 and right >= -1e-7

    def test_hh_hermitian_affine_case(self):
        rng = rng_from_seed(16)
        a, b = draw_matrix(rng, "positive_pair", 3)
        certs = (SectorialCert.certify(a, 0.0), SectorialCert.certify(b, 0.0))
        left, right = check_hermite_hadamard(*certs, 1.0)
        assert abs(left) <= 1e-9 and abs(right) <= 1e-9

    def test_hh_random_sectorial(self):
        for seed in range(4):
            cert_a, cert_b = sector_pair(300 + seed, 3, 0.6)
            left, right = check_hermite_hadamard(cert_a, cert_b, 0.5)
            assert left >= -1e-7 and right >= -1e-7


class TestBaselines:
    def test_real_lower_on_accretive_draws(self):
        rng = rng_from_seed(17)
        for _ in range(8):
            a = draw_matrix(rng, "accretive", 3)
            b = draw_matrix(rng, "accretive", 3)
            for kind in ("geom", "harm"):
                assert check_baseline_real_lower(a, b, kind, 0.35) >= -1e-9

    def test_sec2_upper_on_sectorial_draws(self):
        for seed in range(4):
            cert_a, cert_b = sector_pair(400 + seed, 3, 0.9)
            for kind in ("geom", "harm", "arith"):
                assert check_baseline_sec2_upper(cert_a, cert_b, kind, 0.6) >= -1e-9


class TestChainConsistency:
    def test_harmonic_refinement_implies_baseline(self):
        # with X >= Y >= Z the raw floor of X - Z can only sit above the
        # floor of X - Y minus the (tiny) violation of Y - Z
        rng = rng_from_seed(20)
        for _ in range(8):
            a = draw_matrix(rng, "accretive", 4)
            b = draw_matrix(rng, "accretive", 4)
            t = float(rng.uniform(0.0, 1.0))
            inv = np.linalg.inv
            herm = lambda m: 0.5 * (m + m.conj().T)  # noqa: E731
            ha, hb = herm(a), herm(b)
            x = herm(inv((1 - t) * inv(a) + t * inv(b)))
            pre = herm((1 - t) * inv(ha) + t * inv(hb))
            r = min(t, 1 - t)
            pivot = herm(0.5 * inv(ha) + 0.5 * inv(hb)) - inv(
                herm(inv(0.5 * inv(a) + 0.5 * inv(b)))
            )
            y = herm(inv(pre - 2 * r * herm(pivot)))
            z = herm(inv(pre))
            scale = np.linalg.norm(a) + np.linalg.norm(b)
            lam_xz = np.linalg.eigvalsh(x - z).min()
            lam_xy = np.linalg.eigvalsh(x - y).min()
            lam_yz = np.linalg.eigvalsh(y - z).min()
            assert lam_yz >= -1e-10 * scale
            assert lam_xz >= lam_xy - 1e-10 * scale

    def test_sandwich_refinement_implies_baseline(self):
        # on ordered pairs the pivot is PSD, so the refined floor implies
        # the unrefined chord-above-path statement
        rng = rng_from_seed(21)
        from accretive_lab.entropy import relative_entropy, tsallis
        from accretive_lab.means import geom_mean

        for _ in range(8):
            a, b = draw_matrix(rng, "loewner_pair", 3)
            t = float(rng.uniform(0.05, 0.95))
            r = min(t, 1 - t)
            ent = relative_entropy(a, b)
            pivot = 0.5 * (b - a + ent) - 2.0 * (geom_mean(a, b, 0.5) - a)
            mid = (1 - t) * ent + t * (b - a) - tsallis(a, b, t)
            scale = np.linalg.norm(a) + np.linalg.norm(b)
            assert np.linalg.eigvalsh(0.5 * (pivot + pivot.conj().T)).min() >= -1e-10 * scale
            lam_baseline = np.linalg.eigvalsh(0.5 * (mid + mid.conj().T)).min()
            refined = mid - 2 * r * pivot
            lam_refined = np.linalg.eigvalsh(0.5 * (refined + refined.conj().T)).min()
            assert lam_baseline >= lam_refined - 1e-10 * scale


class TestEndpointDegeneration:
    @pytest.mark.parametrize("t", [0.0, 1.0])
    def test_matrix_checks_at_endpoints(self, t):
        rng = rng_from_seed(22)
        a = draw_matrix(rng, "accretive", 3)
        b = draw_matrix(rng, "accretive", 3)
        pa, pb = draw_matrix(rng, "positive_pair", 3)
        for kind in ("geom", "harm"):
            assert check_thm_nabla_vs_sigma(a, b, kind, t) >= -1e-12
            lower, upper = check_remark_sandwich(pa, pb, kind, t)
            assert lower >= -1e-12 and upper >= -1e-12
        refine, baseline = check_harmonic_refine(a, b, t)
        assert refine >= -1e-12 and baseline >= -1e-12


class TestScaleBehavior:
    def test_one_homogeneous_margins_are_stable(self):
        # mean-based checks are 1-homogeneous: normalized margins are
        # unchanged when both inputs scale, once the normalizer is active
        rng = rng_from_seed(18)
        a = draw_matrix(rng, "accretive", 3, scale=2.0)
        b = draw_matrix(rng, "accretive", 3, scale=2.0)
        base = check_thm_nabla_vs_sigma(a, b, "geom", 0.3)
        scaled_up = check_thm_nabla_vs_sigma(1e3 * a, 1e3 * b, "geom", 0.3)
        assert scaled_up == pytest.approx(base, rel=1e-6, abs=1e-12)

    @pytest.mark.parametrize("c", [1e-3, 1e3])
    def test_pass_verdicts_stable_under_scaling(self, c):
        rng = rng_from_seed(19)
        a = draw_matrix(rng, "accretive", 3)
        b = draw_matrix(rng, "accretive", 3)
        assert check_thm_nabla_vs_sigma(c * a, c * b, "geom", 0.3) >= -1e-8
        refine, baseline = check_harmonic_refine(c * a, c * b, 0.25)
        assert refine >= -1e-8 and baseline >= -1e-8


class TestSuite:
    def test_zero_trials_pass(self):
        cfg = SuiteConfig(cases=("lemma_scalar",), trials=0)
        reports = run_suite(cfg)
        assert len(reports) == 1
        assert reports[0].passed and reports[0].margins == []

    def test_all_cases_resolve(self):
        cfg = SuiteConfig()
        assert cfg.resolved_cases() == CASE_IDS
        with pytest.raises(ValueError, match="unknown case"):
            SuiteConfig(cases=("not_a_case",)).resolved_cases()

    def test_run_trial_deterministic(self):
        cfg = SuiteConfig(cases=("thm_nabla_vs_sigma",), trials=3)
        assert run_trial("thm_nabla_vs_sigma", cfg, 1) == run_trial(
            "thm_nabla_vs_sigma", cfg, 1
        )

    def test_repeat_runs_are_identical(self):
        cfg = SuiteConfig(cases=("tsallis_monotone", "radius_refine"), trials=6, seed=5)
        first = [r.to_dict() for r in run_suite(cfg)]
        second = [r.to_dict() for r in run_suite(cfg)]
        for one, two in zip(first, second):
            one.pop("wall_time")
            two.pop("wall_time")
            assert one == two

    def test_margins_are_sorted_and_failures_recorded(self):
        # the equality sub-checks of this case leave roundoff-negative
        # margins, which an absurd tolerance must flag
        cfg = SuiteConfig(cases=("radius_refine",), trials=12, tol=1e-30)
        report = run_suite(cfg)[0]
        assert report.margins == sorted(report.margins)
        assert report.failures
        assert not report.passed
        assert all(seed == cfg.seed for seed, _ in report.failures)

    def test_report_dict_roundtrip(self):
        cfg = SuiteConfig(cases=("mccarthy_lower",), trials=4)
        report = run_suite(cfg)[0]
        clone = InequalityReport.from_dict(report.to_dict())
        assert clone == report

    def test_config_validation(self):
        with pytest.raises(ValueError):
            SuiteConfig(t_grid=(1.5,))
        with pytest.raises(ValueError):
            SuiteConfig(alpha_grid=(2.0,))
        with pytest.raises(ValueError):
            SuiteConfig(p_grid=(0.5,))
        with pytest.raises(ValueError):
            SuiteConfig(s_grid=(0.0,))
        with pytest.raises(ValueError):
            SuiteConfig(dim_min=3, dim_max=2)
        with pytest.raises(ValueError):
            SuiteConfig(trials=-1)

    def test_quadrature_cases_get_floored_tolerance(self):
        cfg = SuiteConfig(cases=("cor_integral_refine",), trials=2)
        report = run_suite(cfg)[0]
        assert report.tol == pytest.approx(1e-6)
