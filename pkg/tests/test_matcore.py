import json

import numpy as np
import pytest

from opentropy import (
    DomainError,
    HermitianMatrix,
    NotPositiveDefiniteError,
    PositiveDefiniteMatrix,
    ShapeError,
    apply_function,
    congruence,
    eig,
    half_powers,
    identity,
    loewner_leq,
    sandwich_bounds,
)
from opentropy.functions import IDENTITY, LOG, custom, power
from opentropy.matcore import matrix_from_json, matrix_to_json

from conftest import random_hermitian, random_pd


class TestHermitianMatrix:
    def test_symmetrization_absorbs_drift(self, rng):
        g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        h = HermitianMatrix(g)
        np.testing.assert_allclose(h.array, h.array.conj().T, atol=1e-12)
        np.testing.assert_allclose(h.array, (g + g.conj().T) / 2)

    def test_rejects_nonsquare(self):
        with pytest.raises(ShapeError):
            HermitianMatrix(np.ones((2, 3)))

    def test_array_is_readonly(self):
        h = identity(3)
        with pytest.raises(ValueError):
            h.array[0, 0] = 5.0

    def test_json_round_trip(self, rng):
        h = random_hermitian(rng, 5)
        back = matrix_from_json(json.loads(json.dumps(matrix_to_json(h))))
        np.testing.assert_array_equal(back.array, h.array)

    def test_json_shape_mismatch(self):
        with pytest.raises(ShapeError):
            matrix_from_json({"dim": 3, "re": [[1.0]], "im": [[0.0]]})


class TestEig:
    def test_diagonal_is_already_sorted(self):
        d = eig(HermitianMatrix(np.diag([3.0, 1.0])))
        np.testing.assert_array_equal(d.eigenvalues, [1.0, 3.0])
        # columns are identity columns up to permutation
        np.testing.assert_array_equal(np.abs(d.eigenvectors), np.eye(2)[:, [1, 0]])

    def test_symmetry_forced_spectrum(self):
        d = eig(HermitianMatrix([[0.0, 1.0], [1.0, 0.0]]))
        np.testing.assert_allclose(d.eigenvalues, [-1.0, 1.0], atol=1e-15)

    def test_reconstruction_and_orthonormality(self, rng):
        # 200 here; the acceptance suite runs the full 1000-matrix sweep.
        for _ in range(200):
            dim = int(rng.integers(1, 17))
            h = random_hermitian(rng, dim, scale=10.0 ** rng.uniform(-2, 2))
            d = eig(h)
            hnorm = float(np.linalg.norm(h.array))
            assert np.linalg.norm(d.reconstruct() - h.array) <= 1e-10 * max(1.0, hnorm)
            assert np.linalg.norm(d.eigenvectors.conj().T @ d.eigenvectors - np.eye(dim)) <= 1e-11
            assert np.all(np.diff(d.eigenvalues) >= 0)


class TestPositiveDefinite:
    def test_rejects_relative_floor(self):
        with pytest.raises(NotPositiveDefiniteError):
            PositiveDefiniteMatrix(np.diag([1.0, 1e-13]))
        PositiveDefiniteMatrix(np.diag([1.0, 1e-10]))  # above the floor

    def test_rejects_indefinite(self):
        with pytest.raises(NotPositiveDefiniteError):
            PositiveDefiniteMatrix(np.diag([1.0, -0.5]))

    def test_scaled_reuses_eigenbasis(self, rng):
        a = random_pd(rng, 4)
        b = a.scaled(2.5)
        np.testing.assert_allclose(b.array, 2.5 * a.array, rtol=1e-14)
        with pytest.raises(NotPositiveDefiniteError):
            a.scaled(-1.0)


class TestApplyFunction:
    def test_identity_function(self, rng):
        a = random_pd(rng, 4)
        np.testing.assert_allclose(apply_function(a, IDENTITY).array, a.array, atol=1e-13)

    def test_log_on_diagonal(self):
        a = PositiveDefiniteMatrix(np.diag([1.0, np.e]))
        np.testing.assert_allclose(apply_function(a, LOG).array, np.diag([0.0, 1.0]), atol=1e-15)

    def test_sqrt_on_diagonal(self):
        a = PositiveDefiniteMatrix(np.diag([4.0, 9.0]))
        np.testing.assert_allclose(apply_function(a, power(0.5)).array, np.diag([2.0, 3.0]), atol=1e-14)

    def test_commutes_with_argument(self, rng):
        for _ in range(50):
            a = random_pd(rng, 5)
            fa = apply_function(a, LOG).array
            comm = fa @ a.array - a.array @ fa
            scale = max(1.0, np.linalg.norm(fa) * np.linalg.norm(a.array))
            assert np.linalg.norm(comm) <= 1e-10 * scale

    def test_domain_error_names_eigenvalue(self):
        shifted_log = custom(np.log, name="shifted_log", domain_low=1.0)
        a = PositiveDefiniteMatrix(np.diag([0.5, 2.0]))
        with pytest.raises(DomainError, match="5"):
            apply_function(a, shifted_log)

    def test_composition_on_diagonal_is_entrywise(self):
        entries = np.array([1.7, 0.3, 2.9])
        a = PositiveDefiniteMatrix(np.diag(entries))
        g_of_a = PositiveDefiniteMatrix(apply_function(a, power(0.5)).array)
        composed = apply_function(g_of_a, LOG).array
        np.testing.assert_array_equal(np.diag(composed).real, np.log(np.sqrt(entries)))


class TestHalfPowers:
    def test_identity(self):
        s, isq, inv = half_powers(PositiveDefiniteMatrix(np.eye(3)))
        for m in (s, isq, inv):
            np.testing.assert_allclose(m.array, np.eye(3), atol=1e-14)

    def test_diagonal(self):
        s, isq, inv = half_powers(PositiveDefiniteMatrix(np.diag([4.0, 16.0])))
        np.testing.assert_allclose(s.array, np.diag([2.0, 4.0]), atol=1e-14)
        np.testing.assert_allclose(isq.array, np.diag([0.5, 0.25]), atol=1e-14)
        np.testing.assert_allclose(inv.array, np.diag([0.25, 0.0625]), atol=1e-14)

    def test_residuals_random(self, rng):
        for _ in range(25):
            a = random_pd(rng, 4)
            s, isq, _ = half_powers(a)
            anorm = np.linalg.norm(a.array)
            assert np.linalg.norm(s.array @ s.array - a.array) <= 1e-10 * max(1.0, anorm)
            assert np.linalg.norm(s.array @ isq.array - np.eye(4)) <= 1e-10


class TestCongruence:
    def test_identity_and_scaling(self, rng):
        x = random_hermitian(rng, 3)
        np.testing.assert_allclose(congruence(np.eye(3), x).array, x.array, atol=1e-14)
        np.testing.assert_allclose(congruence(2.0 * np.eye(3), x).array, 4.0 * x.array, atol=1e-13)

    def test_unitary_preserves_spectrum(self, rng):
        g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        u, _ = np.linalg.qr(g)
        out = congruence(u, HermitianMatrix(np.diag([1.0, 2.0])))
        np.testing.assert_allclose(eig(out).eigenvalues, [1.0, 2.0], atol=1e-12)

    def test_preserves_psd(self, rng):
        for _ in range(50):
            g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            x = HermitianMatrix(g @ g.conj().T)  # PSD
            c = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            w = eig(congruence(c, x)).eigenvalues
            assert w[0] >= -1e-10 * max(1.0, abs(w[-1]))

    def test_shape_mismatch(self, rng):
        with pytest.raises(ShapeError):
            congruence(np.eye(3), random_hermitian(rng, 2))


class TestLoewner:
    def test_strict_order(self):
        holds, margin = loewner_leq(identity(2), 2.0 * identity(2))
        assert holds and abs(margin - 1.0) <= 1e-14

    def test_incomparable_pair(self):
        holds, margin = loewner_leq(
            HermitianMatrix(np.diag([1.0, 3.0])), HermitianMatrix(np.diag([2.0, 2.0]))
        )
        assert not holds and abs(margin + 1.0) <= 1e-14

    def test_reflexive(self, rng):
        a = random_hermitian(rng, 4)
        holds, margin = loewner_leq(a, a)
        assert holds and abs(margin) <= 1e-14

    def test_gelfand_order_preservation(self, rng):
        # f >= g pointwise on the spectrum forces f(A) >= g(A); 100 here,
        # the acceptance suite drives 500.
        for _ in range(100):
            a = random_pd(rng, int(rng.integers(2, 7)))
            holds, _ = loewner_leq(apply_function(a, LOG), apply_function(a, IDENTITY), 1e-9)
            assert holds


class TestSandwich:
    def test_examples(self):
        m, M = sandwich_bounds(
            PositiveDefiniteMatrix(np.eye(2)), PositiveDefiniteMatrix(np.diag([0.5, 2.0]))
        )
        assert abs(m - 0.5) <= 1e-14 and abs(M - 2.0) <= 1e-14

        a = PositiveDefiniteMatrix(np.diag([1.0, 4.0]))
        m, M = sandwich_bounds(a, a)
        assert abs(m - 1.0) <= 1e-12 and abs(M - 1.0) <= 1e-12

        m, M = sandwich_bounds(
            PositiveDefiniteMatrix(np.diag([1.0, 4.0])), PositiveDefiniteMatrix(np.diag([2.0, 4.0]))
        )
        assert abs(m - 1.0) <= 1e-14 and abs(M - 2.0) <= 1e-14

    def test_constants_actually_sandwich(self, rng):
        for _ in range(50):
            a, b = random_pd(rng, 4), random_pd(rng, 4)
            m, M = sandwich_bounds(a, b)
            assert loewner_leq(a.scaled(m), b, 1e-10)[0]
            assert loewner_leq(b, a.scaled(M), 1e-10)[0]
