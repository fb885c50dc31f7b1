import json
import math

import numpy as np
import pytest

from opentropy import (
    OperatorField,
    PositiveDefiniteMatrix,
    PreconditionError,
    ShapeError,
    field_integral,
    generalized_entropy,
    loewner_leq,
    mean_field,
    natural_power,
    relative_entropy,
    variational_form,
)
from opentropy.entropy import field_from_json, field_to_json
from opentropy.functions import LOG, NEG_T_LOG_T, power

from conftest import random_pd
from scalar_oracle import entropy_term, power_mean


def diag_pd(*entries):
    return PositiveDefiniteMatrix(np.diag(np.asarray(entries, dtype=float)))


def random_field(rng, dim, k, unit_weights=False):
    weights = np.ones(k) if unit_weights else rng.uniform(0.5, 2.0, size=k)
    return OperatorField.from_matrices(weights, [random_pd(rng, dim) for _ in range(k)])


def random_pair(rng, dim, k):
    weights = rng.uniform(0.5, 2.0, size=k)
    make = lambda: OperatorField.from_matrices(weights, [random_pd(rng, dim) for _ in range(k)])
    return make(), make()


class TestNaturalPower:
    def test_endpoint_exponents(self, rng):
        x, y = random_pd(rng, 3), random_pd(rng, 3)
        np.testing.assert_allclose(natural_power(x, y, 0.0).array, x.array, atol=1e-12)
        np.testing.assert_allclose(natural_power(x, y, 1.0).array, y.array, atol=1e-11)

    def test_identity_base(self):
        y = diag_pd(4.0, 9.0)
        out = natural_power(PositiveDefiniteMatrix(np.eye(2)), y, 0.5)
        np.testing.assert_allclose(out.array, np.diag([2.0, 3.0]), atol=1e-13)

    def test_commuting_scalar_formula(self):
        out = natural_power(diag_pd(1.0, 4.0), diag_pd(2.0, 8.0), 0.5)
        np.testing.assert_allclose(
            out.array, np.diag([math.sqrt(2.0), math.sqrt(32.0)]), atol=1e-13
        )

    def test_result_is_pd_for_any_exponent(self, rng):
        x, y = random_pd(rng, 4), random_pd(rng, 4)
        for q in (-1.5, -0.5, 0.3, 1.7, 2.0):
            assert natural_power(x, y, q).lambda_min > 0


class TestRelativeEntropy:
    def test_equal_pair_is_zero(self, rng):
        a = random_pd(rng, 4)
        assert np.linalg.norm(relative_entropy(a, a, 0.0, LOG).array) <= 1e-12

    def test_diagonal_log_case(self):
        out = relative_entropy(PositiveDefiniteMatrix(np.eye(2)), diag_pd(math.e, math.e ** 2), 0.0, LOG)
        np.testing.assert_allclose(out.array, np.diag([1.0, 2.0]), atol=1e-13)

    def test_commuting_formula(self):
        out = relative_entropy(diag_pd(1.0, 2.0), diag_pd(2.0, 2.0), 1.0, LOG)
        np.testing.assert_allclose(out.array, np.diag([2.0 * math.log(2.0), 0.0]), atol=1e-13)

    def test_scalar_oracle_on_diagonals(self, rng):
        for _ in range(50):
            a = rng.uniform(0.3, 3.0, size=3)
            b = rng.uniform(0.3, 3.0, size=3)
            q = float(rng.uniform(-1.5, 2.0))
            got = np.diag(relative_entropy(diag_pd(*a), diag_pd(*b), q, LOG).array).real
            want = [entropy_term(ai, bi, q, math.log) for ai, bi in zip(a, b)]
            np.testing.assert_allclose(got, want, atol=1e-12, rtol=1e-12)


class TestVariationalForm:
    @pytest.mark.parametrize("q", [-1.0, -0.5, 0.0, 0.5, 1.0, 2.0])
    @pytest.mark.parametrize("f", [LOG, power(0.5)], ids=["log", "sqrt"])
    def test_matches_direct_form(self, rng, q, f):
        for _ in range(30):
            dim = int(rng.integers(2, 9))
            a, b = random_pd(rng, dim), random_pd(rng, dim)
            direct = relative_entropy(a, b, q, f).array
            flipped = variational_form(a, b, q, f).array
            err = np.linalg.norm(direct - flipped) / max(1.0, np.linalg.norm(direct))
            assert err <= 1e-9

    def test_zero_exponent_special_identity(self, rng):
        # S(A,B;0,f) = A * S(B^{-1},A^{-1};0,f) * B, an asymmetric product that
        # nevertheless lands on the Hermitian entropy.
        for _ in range(20):
            a, b = random_pd(rng, 4), random_pd(rng, 4)
            direct = relative_entropy(a, b, 0.0, LOG).array
            inner = relative_entropy(b.inv(), a.inv(), 0.0, LOG).array
            raw = a.array @ inner @ b.array
            err = np.linalg.norm(direct - raw) / max(1.0, np.linalg.norm(direct))
            assert err <= 1e-9

    def test_identity_pair(self):
        eye = PositiveDefiniteMatrix(np.eye(3))
        assert np.linalg.norm(variational_form(eye, eye, 0.0, LOG).array) <= 1e-12


class TestFields:
    def test_field_validation(self, rng):
        with pytest.raises(PreconditionError):
            OperatorField([])
        with pytest.raises(PreconditionError):
            OperatorField([(0.0, random_pd(rng, 2))])
        with pytest.raises(ShapeError):
            OperatorField([(1.0, random_pd(rng, 2)), (1.0, random_pd(rng, 3))])

    def test_field_integral(self, rng):
        a = random_pd(rng, 3)
        single = OperatorField([(1.0, a)])
        np.testing.assert_allclose(field_integral(single).array, a.array, atol=1e-14)
        eye = PositiveDefiniteMatrix(np.eye(3))
        halves = OperatorField([(0.5, eye), (0.5, eye)])
        np.testing.assert_allclose(field_integral(halves).array, np.eye(3), atol=1e-14)
        assert halves.is_normalized()

    def test_json_round_trip(self, rng):
        f = random_field(rng, 3, 2)
        back = field_from_json(json.loads(json.dumps(field_to_json(f))))
        np.testing.assert_array_equal(back.weights, f.weights)
        for m1, m2 in zip(back.matrices, f.matrices):
            np.testing.assert_array_equal(m1.array, m2.array)


class TestGeneralizedEntropy:
    def test_single_node_equal_pair(self, rng):
        a = random_pd(rng, 3)
        fa = OperatorField([(1.0, a)])
        assert np.linalg.norm(generalized_entropy(fa, fa, 0.0, LOG).array) <= 1e-12

    def test_weight_mismatch_rejected(self, rng):
        fa = OperatorField([(1.0, random_pd(rng, 2)), (1.0, random_pd(rng, 2))])
        fb = OperatorField([(1.0, random_pd(rng, 2)), (2.0, random_pd(rng, 2))])
        with pytest.raises(PreconditionError):
            generalized_entropy(fa, fb, 0.0, LOG)
        short = OperatorField([(1.0, random_pd(rng, 2))])
        with pytest.raises(ShapeError):
            generalized_entropy(fa, short, 0.0, LOG)

    def test_two_node_diagonal_scalar_sum(self, rng):
        a1, a2 = rng.uniform(0.3, 3.0, size=2), rng.uniform(0.3, 3.0, size=2)
        b1, b2 = rng.uniform(0.3, 3.0, size=2), rng.uniform(0.3, 3.0, size=2)
        w = rng.uniform(0.5, 2.0, size=2)
        fa = OperatorField.from_matrices(w, [diag_pd(*a1), diag_pd(*a2)])
        fb = OperatorField.from_matrices(w, [diag_pd(*b1), diag_pd(*b2)])
        got = np.diag(generalized_entropy(fa, fb, 0.5, LOG).array).real
        want = [
            w[0] * entropy_term(a1[i], b1[i], 0.5, math.log)
            + w[1] * entropy_term(a2[i], b2[i], 0.5, math.log)
            for i in range(2)
        ]
        np.testing.assert_allclose(got, want, atol=1e-12, rtol=1e-12)

    def test_nonnegative_when_f_is(self, rng):
        for _ in range(25):
            fa, fb = random_field(rng, 3, 2, True), random_field(rng, 3, 2, True)  # unit weights align
            s = generalized_entropy(fa, fb, float(rng.uniform(-1, 2)), power(0.5))
            assert np.linalg.eigvalsh(s.array)[0] >= -1e-9

    @pytest.mark.parametrize("alpha", [0.5, 2.0, 5.0])
    def test_homogeneity(self, rng, alpha):
        fa, fb = random_pair(rng, 3, 2)
        for q, f in [(0.0, LOG), (0.7, power(0.5)), (-0.5, NEG_T_LOG_T)]:
            base = generalized_entropy(fa, fb, q, f).array
            scaled = generalized_entropy(fa.scaled(alpha), fb.scaled(alpha), q, f).array
            err = np.linalg.norm(scaled - alpha * base) / max(1.0, np.linalg.norm(base))
            assert err <= 1e-10

    def test_subadditive_for_concave_f(self, rng):
        for f in (LOG, power(0.5), NEG_T_LOG_T):
            for _ in range(10):
                w = rng.uniform(0.5, 2.0, size=2)
                fields = [
                    OperatorField.from_matrices(w, [random_pd(rng, 3) for _ in range(2)])
                    for _ in range(4)
                ]
                fa, fb, fc, fd = fields
                lhs = generalized_entropy(fa.nodewise_sum(fb), fc.nodewise_sum(fd), 0.0, f)
                rhs = generalized_entropy(fa, fc, 0.0, f) + generalized_entropy(fb, fd, 0.0, f)
                assert loewner_leq(rhs, lhs, 1e-9)[0]

    def test_jointly_concave_for_concave_f(self, rng):
        for _ in range(10):
            alpha = float(rng.uniform(0.2, 0.8))
            beta = 1.0 - alpha
            w = rng.uniform(0.5, 2.0, size=2)
            make = lambda: OperatorField.from_matrices(w, [random_pd(rng, 3) for _ in range(2)])
            fa1, fb1, fa2, fb2 = make(), make(), make(), make()
            lhs = generalized_entropy(fa1.blend(fa2, alpha, beta), fb1.blend(fb2, alpha, beta), 0.0, LOG)
            rhs = alpha * generalized_entropy(fa1, fb1, 0.0, LOG) + beta * generalized_entropy(
                fa2, fb2, 0.0, LOG
            )
            assert loewner_leq(rhs, lhs, 1e-9)[0]

    def test_upper_bound_when_f_below_t_minus_1(self, rng):
        # log t <= t - 1, so the entropy sits below sum w (A #_{q+1} B - A #_q B).
        for q in (0.0, 0.5, 1.0):
            fa, fb = random_pair(rng, 3, 2)
            s = generalized_entropy(fa, fb, q, LOG)
            rhs = np.zeros((3, 3), dtype=complex)
            for (w, a), (_, b) in zip(fa, fb):
                rhs += w * (natural_power(a, b, q + 1.0).array - natural_power(a, b, q).array)
            assert loewner_leq(s, rhs, 1e-9)[0]
            if q == 0.0:
                direct = sum(w * (b.array - a.array) for (w, a), (_, b) in zip(fa, fb))
                assert loewner_leq(s, direct, 1e-9)[0]
            if q == 1.0:
                direct = sum(
                    w * (b.array @ a.inv().array @ b.array - b.array)
                    for (w, a), (_, b) in zip(fa, fb)
                )
                assert loewner_leq(s, direct, 1e-9)[0]


class TestMeanField:
    def test_exponent_precondition(self, rng):
        fa, fb = random_field(rng, 2, 2, True), random_field(rng, 2, 2, True)
        with pytest.raises(PreconditionError):
            mean_field(fa, fb, 1.5)
        with pytest.raises(PreconditionError):
            mean_field(fa, fb, -0.1)

    def test_endpoints(self, rng):
        fa, fb = random_pair(rng, 3, 2)
        np.testing.assert_allclose(mean_field(fa, fb, 0.0).array, field_integral(fa).array, atol=1e-11)
        np.testing.assert_allclose(mean_field(fa, fb, 1.0).array, field_integral(fb).array, atol=1e-10)

    def test_commuting_scalar_formula(self, rng):
        a1, b1 = rng.uniform(0.3, 3.0, size=2), rng.uniform(0.3, 3.0, size=2)
        a2, b2 = rng.uniform(0.3, 3.0, size=2), rng.uniform(0.3, 3.0, size=2)
        w = rng.uniform(0.5, 2.0, size=2)
        fa = OperatorField.from_matrices(w, [diag_pd(*a1), diag_pd(*a2)])
        fb = OperatorField.from_matrices(w, [diag_pd(*b1), diag_pd(*b2)])
        got = np.diag(mean_field(fa, fb, 0.75).array).real
        want = [
            w[0] * power_mean(a1[i], b1[i], 0.75) + w[1] * power_mean(a2[i], b2[i], 0.75)
            for i in range(2)
        ]
        np.testing.assert_allclose(got, want, atol=1e-12, rtol=1e-12)

    @pytest.mark.parametrize("p", [0.0, 0.25, 0.5, 0.75, 1.0])
    def test_mean_integral_inequality(self, rng, p):
        for _ in range(10):
            fa, fb = random_pair(rng, 3, 3)
            lhs = mean_field(fa, fb, p)
            rhs = natural_power(
                PositiveDefiniteMatrix(field_integral(fa).array),
                PositiveDefiniteMatrix(field_integral(fb).array),
                p,
            )
            assert loewner_leq(lhs, rhs, 1e-9)[0]
