import math

import numpy as np
import pytest

from opentropy import (
    ConsistencyError,
    DomainError,
    PreconditionError,
    UndefinedRatioError,
    chord_gap_bound,
    chord_ratio_bound,
    identric_mean,
    logarithmic_mean,
    secant_coeffs,
    secant_data,
    zeta_closed_forms,
)
from opentropy.bounds import _gap_bound, _ratio_bound
from opentropy.functions import IDENTITY, LOG, NEG_T_LOG_T, constant, custom, power


def dense_scan_max(obj, m, M, n=1_000_000):
    ts = np.linspace(m, M, n)
    return float(np.max(obj(ts)))


class TestSecantCoeffs:
    def test_identity_chord(self):
        assert secant_coeffs(IDENTITY, 1.0, 2.0) == (1.0, 0.0)

    def test_log_chord(self):
        mu, nu = secant_coeffs(LOG, 1.0, math.e)
        assert abs(mu - 1.0 / (math.e - 1.0)) <= 1e-15
        assert abs(nu + 1.0 / (math.e - 1.0)) <= 1e-15

    def test_sqrt_chord(self):
        mu, nu = secant_coeffs(power(0.5), 1.0, 4.0)
        assert abs(mu - 1.0 / 3.0) <= 1e-15
        assert abs(nu - 2.0 / 3.0) <= 1e-15

    def test_interpolates_endpoints(self):
        for f, m, M in [(LOG, 1.0, 7.3), (power(0.25), 0.2, 9.0), (NEG_T_LOG_T, 0.3, 2.0)]:
            mu, nu = secant_coeffs(f, m, M)
            assert abs(mu * m + nu - f(m)) <= 1e-12 * max(1.0, abs(f(m)))
            assert abs(mu * M + nu - f(M)) <= 1e-12 * max(1.0, abs(f(M)))

    def test_degenerate_interval_rejected(self):
        with pytest.raises(PreconditionError):
            secant_coeffs(LOG, 2.0, 1.0)
        with pytest.raises(PreconditionError):
            secant_coeffs(LOG, 2.0, 2.0)


class TestRatioBound:
    def test_identity_is_one(self):
        assert abs(chord_ratio_bound(IDENTITY, 0.5, 7.0) - 1.0) <= 1e-12
        assert abs(chord_ratio_bound(constant(2.0), 0.5, 7.0) - 1.0) <= 1e-12

    def test_sqrt_on_1_4(self):
        t, v = _ratio_bound(power(0.5), 1.0, 4.0)
        assert abs(v - 3.0 * math.sqrt(2.0) / 4.0) <= 1e-10
        assert abs(t - 2.0) <= 1e-5

    def test_log_against_dense_scan(self):
        # Non-degenerate interval: the maximum is attained, so a brute-force
        # scan and the grid+refinement optimizer agree tightly.
        m, M = 1.1, math.e ** 2
        mu, nu = secant_coeffs(LOG, m, M)
        scanned = dense_scan_max(lambda t: np.log(t) / (mu * t + nu), m, M)
        assert abs(chord_ratio_bound(LOG, m, M) - scanned) <= 1e-8

    def test_log_from_one_hits_endpoint_limit(self):
        # On [1, M] the chord vanishes at t = 1 together with log, and the
        # ratio climbs to the limit value (M - 1)/log M there.
        M = math.e ** 2
        assert abs(chord_ratio_bound(LOG, 1.0, M) - (M - 1.0) / math.log(M)) <= 1e-10

    def test_nonpositive_chord_rejected(self):
        with pytest.raises(UndefinedRatioError):
            chord_ratio_bound(LOG, 0.5, 2.0)

    def test_negative_f_rejected(self):
        dip = custom(lambda t: (t - 1.0) ** 4 - 0.05, name="dip")
        with pytest.raises(PreconditionError):
            chord_ratio_bound(dip, 0.5, 1.5)

    def test_at_least_one_for_concave(self):
        for f, m, M in [(power(0.5), 0.3, 5.0), (power(0.25), 1.0, 9.0)]:
            assert chord_ratio_bound(f, m, M) >= 1.0 - 1e-12


class TestGapBound:
    def test_identity_is_zero(self):
        assert abs(chord_gap_bound(IDENTITY, 1.0, 5.0)) <= 1e-12

    def test_sqrt_on_1_4(self):
        t, v = _gap_bound(power(0.5), 1.0, 4.0)
        assert abs(v - 1.0 / 12.0) <= 1e-10
        assert abs(t - 9.0 / 4.0) <= 1e-9

    def test_log_matches_closed_form(self):
        for m, M in [(0.5, 2.0), (0.1, 9.0), (0.9, 1.1)]:
            zeta_log, _ = zeta_closed_forms(m, M)
            assert abs(chord_gap_bound(LOG, m, M) - zeta_log) <= 1e-10

    def test_neg_t_log_t_matches_closed_form(self):
        for m, M in [(0.5, 2.0), (0.2, 4.0)]:
            _, zeta_neg = zeta_closed_forms(m, M)
            assert abs(chord_gap_bound(NEG_T_LOG_T, m, M) - zeta_neg) <= 1e-10

    def test_against_dense_scan(self):
        for f, m, M in [(LOG, 0.3, 6.0), (power(0.5), 0.5, 8.0), (NEG_T_LOG_T, 0.4, 3.0)]:
            mu, nu = secant_coeffs(f, m, M)
            scanned = dense_scan_max(lambda t: f.fn(t) - (mu * t + nu), m, M)
            assert abs(chord_gap_bound(f, m, M) - scanned) <= 1e-8

    def test_nonnegative_always(self):
        for f, m, M in [(IDENTITY, 1.0, 2.0), (LOG, 0.5, 4.0), (power(0.7), 0.2, 2.0)]:
            assert chord_gap_bound(f, m, M) >= -1e-12

    def test_stationarity_cross_check_disagreement_raises(self):
        # A derivative that lies about the function sends the stationarity
        # route far from the grid optimum.
        liar = custom(np.log, name="liar", deriv=lambda t: 1.0 / t + 0.3)
        with pytest.raises(ConsistencyError):
            chord_gap_bound(liar, 0.5, 4.0)

    def test_derivative_free_function_uses_grid_only(self):
        plain = custom(np.log, name="plain_log")
        assert abs(chord_gap_bound(plain, 0.5, 2.0) - chord_gap_bound(LOG, 0.5, 2.0)) <= 1e-9


class TestScalarSandwich:
    # The defining maxima are attained, never exceeded, on the whole grid.
    @pytest.mark.parametrize("f,m,M", [(power(0.5), 0.5, 4.0), (power(0.25), 1.0, 9.0)])
    def test_ratio_and_gap_dominate_f(self, f, m, M):
        mu, nu = secant_coeffs(f, m, M)
        gamma = chord_ratio_bound(f, m, M)
        zeta = chord_gap_bound(f, m, M)
        ts = np.linspace(m, M, 4096)
        vals = f.evaluate_array(ts)
        chord = mu * ts + nu
        assert np.all(vals <= gamma * chord + 1e-10)
        assert np.all(vals <= chord + zeta + 1e-10)

    @pytest.mark.parametrize("f,m,M", [(LOG, 0.5, 4.0), (NEG_T_LOG_T, 0.3, 2.0), (power(0.5), 0.5, 4.0)])
    def test_chord_below_concave_function(self, f, m, M):
        mu, nu = secant_coeffs(f, m, M)
        ts = np.linspace(m, M, 4096)
        assert np.all(f.evaluate_array(ts) >= mu * ts + nu - 1e-10)


class TestMeans:
    def test_diagonal_values(self):
        assert logarithmic_mean(1.0, 1.0) == 1.0
        assert identric_mean(1.0, 1.0) == 1.0

    def test_known_values(self):
        assert abs(logarithmic_mean(1.0, math.e) - (math.e - 1.0)) <= 1e-14
        expected = (1.0 / math.e) * (math.e ** math.e) ** (1.0 / (math.e - 1.0))
        assert abs(identric_mean(1.0, math.e) - expected) <= 1e-13

    def test_nonpositive_rejected(self):
        with pytest.raises(DomainError):
            logarithmic_mean(0.0, 1.0)
        with pytest.raises(DomainError):
            identric_mean(1.0, -2.0)

    def test_mean_chain(self, rng):
        # geometric <= logarithmic <= identric <= arithmetic, and both sit
        # between min and max.
        for _ in range(1000):
            a, b = rng.uniform(0.05, 20.0, size=2)
            lm, im = logarithmic_mean(a, b), identric_mean(a, b)
            assert min(a, b) - 1e-12 <= lm <= max(a, b) + 1e-12
            assert min(a, b) - 1e-12 <= im <= max(a, b) + 1e-12
            assert math.sqrt(a * b) <= lm + 1e-12
            assert lm <= im + 1e-12
            assert im <= (a + b) / 2.0 + 1e-12

    def test_near_diagonal_continuity(self):
        a = 3.0
        for eps in (1e-13, 1e-10, 1e-8):
            assert abs(logarithmic_mean(a, a * (1 + eps)) - a) <= 1e-6
            assert abs(identric_mean(a, a * (1 + eps)) - a) <= 1e-6


class TestZetaClosedForms:
    def test_hypothesis_gate(self):
        with pytest.raises(PreconditionError):
            zeta_closed_forms(1.5, 2.0)
        with pytest.raises(PreconditionError):
            zeta_closed_forms(0.5, 0.9)

    def test_matches_optimizer(self, rng):
        for _ in range(25):
            m = float(rng.uniform(0.05, 0.95))
            M = float(rng.uniform(1.05, 10.0))
            zeta_log, zeta_neg = zeta_closed_forms(m, M)
            assert zeta_log >= -1e-12 and zeta_neg >= -1e-12
            assert abs(zeta_log - chord_gap_bound(LOG, m, M)) <= 1e-8
            assert abs(zeta_neg - chord_gap_bound(NEG_T_LOG_T, m, M)) <= 1e-8

    def test_degenerate_interval_limit(self):
        zeta_log, zeta_neg = zeta_closed_forms(1.0 - 1e-6, 1.0 + 1e-6)
        assert 0.0 <= zeta_log <= 1e-9
        assert 0.0 <= zeta_neg <= 1e-9


class TestSecantData:
    def test_fields_and_argmax_ranges(self):
        data = secant_data(power(0.5), 1.0, 4.0)
        assert data.gamma is not None and 1.0 <= data.argmax_gamma <= 4.0
        assert 1.0 <= data.argmax_zeta <= 4.0
        assert abs(data.mu - 1.0 / 3.0) <= 1e-15

    def test_gamma_none_when_undefined(self):
        data = secant_data(LOG, 0.5, 2.0)
        assert data.gamma is None and data.argmax_gamma is None
        assert data.zeta > 0.0

    def test_json_has_wire_keys(self):
        payload = secant_data(IDENTITY, 1.0, 2.0).to_json()
        assert set(payload) == {"m", "M", "mu", "nu", "gamma", "zeta", "argmax_gamma", "argmax_zeta"}
