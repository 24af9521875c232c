"""Series engine: exact rationals, the limit oracle, Euler-Maclaurin
tails, and the binomial (alternating and non-alternating) machinery."""

from fractions import Fraction

import pytest
from mpmath import mp, mpf

from stieltjes.precision import DEFAULT_CONTEXT as CTX
from stieltjes.precision import agreed_digits
from stieltjes import series

# literature values, 40+ digits, used as frozen references
GAMMA_STR = "0.5772156649015328606065120900824024310421593359399"
GAMMA1_STR = "-0.0728158454836767248605863758749013191377363383343"
GAMMA2_STR = "-0.0096903631928723184845303860352125293590658061013"
ZETA3_STR = "1.2020569031595942853997381615114499907649862923405"


def tol(k=45):
    return mpf(10) ** -k


# ---------------------------------------------------------------------------
# exact rational layer
# ---------------------------------------------------------------------------

def test_bernoulli_numbers_exact():
    assert series.bernoulli_number(0) == Fraction(1)
    assert series.bernoulli_number(1) == Fraction(-1, 2)
    assert series.bernoulli_number(2) == Fraction(1, 6)
    assert series.bernoulli_number(3) == 0
    assert series.bernoulli_number(10) == Fraction(5, 66)
    assert series.bernoulli_number(12) == Fraction(-691, 2730)


def test_bernoulli_poly_exact():
    # B_2(x) = x^2 - x + 1/6, B_3(x) = x^3 - 3x^2/2 + x/2
    assert series.bernoulli_poly(2, Fraction(1, 4)) == \
        Fraction(1, 16) - Fraction(1, 4) + Fraction(1, 6)
    assert series.bernoulli_poly(3, Fraction(1, 2)) == 0
    assert series.bernoulli_poly(0, Fraction(7, 3)) == 1


def test_harmonic_numbers():
    assert series.harmonic(1) == 1
    assert series.harmonic(5) == Fraction(137, 60)


# ---------------------------------------------------------------------------
# limit oracle
# ---------------------------------------------------------------------------

class TestOracle:
    def test_gamma0_literature(self):
        with CTX.working():
            v = series.limit_stieltjes_oracle(0, 1, CTX)
            assert abs(v - mpf(GAMMA_STR)) < tol()

    def test_gamma1_literature(self):
        with CTX.working():
            v = series.limit_stieltjes_oracle(1, 1, CTX)
            assert abs(v - mpf(GAMMA1_STR)) < tol()

    def test_gamma2_literature(self):
        with CTX.working():
            v = series.limit_stieltjes_oracle(2, 1, CTX)
            assert abs(v - mpf(GAMMA2_STR)) < tol()

    def test_gamma0_at_half_closed_form(self):
        # gamma_0(1/2) = gamma + 2 log 2
        with CTX.working():
            v = series.limit_stieltjes_oracle(0, mpf("0.5"), CTX)
            ref = mpf(GAMMA_STR) + 2 * mp.log(2)
            assert abs(v - ref) < tol()

    def test_table_is_memoized(self):
        a = series.stieltjes_oracle_table(3, 1, CTX)
        b = series.stieltjes_oracle_table(3, 1, CTX)
        assert a == b

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            series.stieltjes_oracle_table(-1, 1, CTX)
        with pytest.raises(ValueError):
            series.limit_stieltjes_oracle(0, -2, CTX)


# ---------------------------------------------------------------------------
# Euler-Maclaurin zeta and tails
# ---------------------------------------------------------------------------

class TestZetaEm:
    def test_zeta2_closed_form(self):
        with CTX.working():
            assert abs(series.riemann_zeta_em(2, 0, CTX)
                       - mp.pi ** 2 / 6) < tol()

    def test_zeta_minus1(self):
        with CTX.working():
            assert abs(series.riemann_zeta_em(-1, 0, CTX)
                       + mpf(1) / 12) < tol()

    def test_zeta3_literature(self):
        with CTX.working():
            assert abs(series.riemann_zeta_em(3, 0, CTX)
                       - mpf(ZETA3_STR)) < tol()

    def test_first_derivative_by_finite_difference(self):
        with CTX.working():
            s = mpf("2.5")
            h = mpf("1e-12")
            fd = (series.riemann_zeta_em(s + h, 0, CTX)
                  - series.riemann_zeta_em(s - h, 0, CTX)) / (2 * h)
            dv = series.riemann_zeta_em(s, 1, CTX)
            assert abs(fd - dv) < mpf(10) ** -20

    def test_second_derivative_by_finite_difference(self):
        with CTX.working():
            s = mpf("1.5")
            h = mpf("1e-8")
            fd = (series.riemann_zeta_em(s + h, 1, CTX)
                  - series.riemann_zeta_em(s - h, 1, CTX)) / (2 * h)
            dv = series.riemann_zeta_em(s, 2, CTX)
            assert abs(fd - dv) < mpf(10) ** -12


class TestLogPowerTails:
    def test_plain_tail_matches_zeta_minus_partial(self):
        with CTX.working():
            N = 50
            partial = sum(mpf(1) / k ** 2 for k in range(1, N + 1))
            tail = series.em_log_power_tail(2, 0, N, 0, CTX)
            assert abs(partial + tail - mp.pi ** 2 / 6) < tol(40)

    def test_log_tail_matches_zeta_derivative(self):
        with CTX.working():
            N = 60
            partial = sum(mp.log(k) / k ** 2 for k in range(1, N + 1))
            tail = series.em_log_power_tail(2, 1, N, 0, CTX)
            ref = -series.riemann_zeta_em(2, 1, CTX)
            assert abs(partial + tail - ref) < tol(40)

    def test_shifted_tail(self):
        # sum_{k>N} 1/(k+1/2)^2 = zeta(2, N+3/2)
        with CTX.working():
            N = 30
            half = mpf("0.5")
            total = sum(1 / (k + half) ** 2 for k in range(1, N + 1))
            tail = series.em_log_power_tail(2, 0, N, half, CTX)
            # zeta(2, 3/2) = pi^2/2 - 4
            assert abs(total + tail - (mp.pi ** 2 / 2 - 4)) < tol(40)


# ---------------------------------------------------------------------------
# digamma asymptotics
# ---------------------------------------------------------------------------

def test_psi_asymptotic_at_one():
    with CTX.working():
        assert abs(series.psi_asymptotic(1, CTX) + mpf(GAMMA_STR)) < tol()


def test_psi_asymptotic_recurrence():
    with CTX.working():
        x = mpf("3.25")
        lhs = series.psi_asymptotic(x + 1, CTX)
        rhs = series.psi_asymptotic(x, CTX) + 1 / x
        assert abs(lhs - rhs) < tol()


def test_trigamma_asymptotic_at_one():
    with CTX.working():
        assert abs(series.trigamma_asymptotic(1, CTX)
                   - mp.pi ** 2 / 6) < tol()


# ---------------------------------------------------------------------------
# binomial machinery
# ---------------------------------------------------------------------------

class TestAltZeta:
    def test_value_at_one_is_log2(self):
        with CTX.working():
            assert abs(series.alt_zeta_hasse(1, 1, CTX) - mp.log(2)) \
                < tol(40)

    def test_value_at_two(self):
        # eta(2) = pi^2/12
        with CTX.working():
            assert abs(series.alt_zeta_hasse(2, 1, CTX)
                       - mp.pi ** 2 / 12) < tol(40)

    def test_moment_zero_is_log2(self):
        with CTX.working():
            assert abs(series.alt_zeta_log_moment(0, CTX) - mp.log(2)) \
                < tol(40)

    def test_stieltjes_from_altzeta_low_orders(self):
        with CTX.working():
            for n, ref in ((0, GAMMA_STR), (1, GAMMA1_STR),
                           (2, GAMMA2_STR)):
                v = series.stieltjes_from_altzeta(n, CTX)
                assert abs(v - mpf(ref)) < tol(40)

    def test_rejects_bad_u(self):
        with pytest.raises(ValueError):
            series.alt_zeta_hasse(1, 0, CTX)


class TestHasse:
    def test_tracks_oracle_within_own_tail_estimate(self):
        with CTX.working():
            for u in (mpf("0.5"), mpf(1), mpf(2)):
                v, diag = series.hasse_stieltjes(1, u, CTX)
                ref = series.limit_stieltjes_oracle(1, u, CTX)
                assert diag.tail_estimate is not None
                assert abs(v - ref) <= 5 * mpf(diag.tail_estimate)

    def test_reaches_target_minus_two_digits(self):
        # Contract check, kept in its stated form.  The outer terms of the
        # double sum decay like 1/(i^2 log i), so the truncation tail at
        # the depth cap is ~1/(I log I): about 2e-3 at I = 64, and no
        # feasible depth reaches 28 digits (that would need I ~ 1e23).
        # This test states the contract and fails honestly.
        with CTX.working():
            v, _ = series.hasse_stieltjes(0, 1, CTX)
            ref = series.limit_stieltjes_oracle(0, 1, CTX)
            assert agreed_digits(v, ref, CTX) >= CTX.target_digits - 2


# ---------------------------------------------------------------------------
# closed-sum evaluators
# ---------------------------------------------------------------------------

def test_kanemitsu_sum_depth_stable():
    with CTX.working():
        a = series.kanemitsu_sum(CTX, N=40)
        b = series.kanemitsu_sum(CTX, N=80)
        assert abs(a - b) < mpf(10) ** -40


def test_plouffe_zeta3_matches_em():
    with CTX.working():
        assert abs(series.plouffe_zeta3(CTX)
                   - series.riemann_zeta_em(3, 0, CTX)) < tol(40)
