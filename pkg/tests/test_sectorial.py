"""Accretivity predicates, the sector half-angle, and ensemble contracts."""

import math

import numpy as np
import pytest

from accretive_lab import linalg
from accretive_lab.errors import NotAccretiveError
from accretive_lab.sectorial import (
    EnsembleSpec,
    SectorialCert,
    derive_seed,
    draw_matrix,
    generate,
    is_accretive,
    rng_from_seed,
    sectorial_index,
    unit_vector,
)


class TestIsAccretive:
    def test_identity(self):
        ok, margin = is_accretive(np.eye(3))
        assert ok and margin == pytest.approx(1.0)

    def test_purely_imaginary_scalar(self):
        ok, margin = is_accretive([[1j]])
        assert not ok and margin == pytest.approx(0.0, abs=1e-15)

    def test_large_off_diagonal(self):
        ok, margin = is_accretive([[1.0, 10.0], [0.0, 1.0]])
        assert not ok and margin == pytest.approx(-4.0, abs=1e-12)


class TestSectorialIndex:
    def test_hermitian_positive_definite(self):
        assert sectorial_index(np.diag([1.0, 2.0])) == pytest.approx(0.0, abs=1e-14)

    def test_diagonal_ray(self):
        assert sectorial_index((1 + 1j) * np.eye(3)) == pytest.approx(np.pi / 4, abs=1e-12)

    def test_two_by_two(self):
        assert sectorial_index([[1.0, 1j], [1j, 1.0]]) == pytest.approx(np.pi / 4, abs=1e-12)

    def test_cone_is_scale_invariant(self):
        rng = rng_from_seed(11)
        a = draw_matrix(rng, "sectorial", 4, alpha=0.8)
        for c in (1e-3, 7.0, 1e3):
            assert sectorial_index(c * a) == pytest.approx(sectorial_index(a), abs=1e-10)

    def test_requires_accretive(self):
        with pytest.raises(NotAccretiveError):
            sectorial_index([[-1.0]])


class TestGenerate:
    def test_deterministic_in_seed(self):
        spec = EnsembleSpec(dim=3, matrix_class="positive_definite", seed=7)
        a = generate(spec)
        b = generate(spec)
        assert np.array_equal(a, b)
        other = generate(EnsembleSpec(dim=3, matrix_class="positive_definite", seed=8))
        assert not np.allclose(a, other)

    @pytest.mark.parametrize("scale", [1.0, 50.0])
    def test_positive_definite_spectrum_window(self, scale):
        a = generate(EnsembleSpec(dim=5, matrix_class="positive_definite", seed=3, scale=scale))
        w = np.linalg.eigvalsh(a)
        assert w.min() >= 0.1 * scale - 1e-12 and w.max() <= 1.0 * scale + 1e-12

    def test_accretive_contract(self):
        a = generate(EnsembleSpec(dim=4, matrix_class="accretive", seed=5))
        ok, margin = is_accretive(a)
        assert ok and margin > 0.0
        h = linalg.hermitian_part(a)
        k = linalg.imaginary_part(a)
        assert linalg.op_norm(k) <= linalg.op_norm(h) + 1e-12

    def test_sectorial_contract(self):
        alpha = 0.5
        a = generate(EnsembleSpec(dim=4, matrix_class="sectorial", seed=9, alpha=alpha))
        assert sectorial_index(a) <= alpha - 1e-6
        cert = SectorialCert.certify(a, alpha)
        h = linalg.hermitian_part(a)
        k = linalg.imaginary_part(a)
        for sign in (1.0, -1.0):
            cone = math.tan(cert.alpha) * h + sign * k
            assert np.linalg.eigvalsh(cone).min() > 0.0

    def test_loewner_pair_contract(self):
        a, b = generate(EnsembleSpec(dim=5, matrix_class="loewner_pair", seed=13))
        assert np.linalg.eigvalsh(b - a).min() >= -1e-12

    def test_positive_pair_is_independent(self):
        a, b = generate(EnsembleSpec(dim=4, matrix_class="positive_pair", seed=17))
        assert not np.allclose(a, b)
        assert np.linalg.eigvalsh(a).min() > 0 and np.linalg.eigvalsh(b).min() > 0

    def test_normal_class_is_normal(self):
        a = generate(EnsembleSpec(dim=4, matrix_class="normal", seed=19))
        assert np.linalg.norm(a @ a.conj().T - a.conj().T @ a) <= 1e-12

    def test_general_class_shape(self):
        a = generate(EnsembleSpec(dim=6, matrix_class="general", seed=23))
        assert a.shape == (6, 6) and np.iscomplexobj(a)

    def test_accretive_draws_have_accretive_inverses(self):
        for seed in range(8):
            a = generate(EnsembleSpec(dim=4, matrix_class="accretive", seed=seed))
            ok, _ = is_accretive(a)
            ok_inv, _ = is_accretive(linalg.inverse(a))
            assert ok and ok_inv

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            EnsembleSpec(dim=0, matrix_class="general", seed=1)
        with pytest.raises(ValueError):
            EnsembleSpec(dim=17, matrix_class="general", seed=1)
        with pytest.raises(ValueError):
            EnsembleSpec(dim=3, matrix_class="wishart", seed=1)
        with pytest.raises(ValueError):
            EnsembleSpec(dim=3, matrix_class="sectorial", seed=1)  # missing alpha
        with pytest.raises(ValueError):
            EnsembleSpec(dim=3, matrix_class="general", seed=1, scale=0.0)


class TestSeedPlumbing:
    def test_derive_seed_deterministic_and_branching(self):
        assert derive_seed(42, 0) == derive_seed(42, 0)
        assert derive_seed(42, 0) != derive_seed(42, 1)
        assert derive_seed(42, 0) != derive_seed(43, 0)

    def test_unit_vector(self):
        x = unit_vector(rng_from_seed(1), 5)
        assert np.linalg.norm(x) == pytest.approx(1.0)

    def test_certify_rejects_leaky_cone(self):
        with pytest.raises(ValueError, match="sector"):
            SectorialCert.certify((1 + 1j) * np.eye(2), 0.3)  # needs at least pi/4
        with pytest.raises(NotAccretiveError):
            SectorialCert.certify([[1j]], 0.3)
