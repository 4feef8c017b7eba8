import math
from fractions import Fraction

import pytest

from opzeta.exactnum import (
    PI,
    PiPolynomial,
    PiXPolynomial,
    bernoulli_number,
    bernoulli_polynomial,
    cot_half_regular,
    euler_number,
    half_sec_series,
    inv_one_minus_cos_regular,
    log_sec_plus_tan_half_series,
    pipoly_eval,
)
from oracles import (
    bernoulli_akiyama_tanigawa,
    bernoulli_from_generating_function,
    bernoulli_poly_coeffs,
    euler_from_generating_function,
)


class TestBernoulliNumbers:
    def test_minus_half_convention(self):
        assert bernoulli_number(1) == Fraction(-1, 2)

    def test_b0(self):
        assert bernoulli_number(0) == 1

    def test_b2_akiyama_tanigawa(self):
        assert bernoulli_number(2) == bernoulli_akiyama_tanigawa(2)[2] == Fraction(1, 6)

    def test_against_akiyama_tanigawa(self):
        oracle = bernoulli_akiyama_tanigawa(30)
        for n in range(31):
            assert bernoulli_number(n) == oracle[n], n

    def test_generating_function_k40(self):
        # sum_{k<=40} B_k t^k/k! must be the exact Taylor expansion of t/(e^t - 1)
        oracle = bernoulli_from_generating_function(40)
        for k in range(41):
            assert bernoulli_number(k) == oracle[k], k

    def test_odd_vanish_up_to_51(self):
        for n in range(3, 52, 2):
            assert bernoulli_number(n) == 0

    def test_b12(self):
        assert bernoulli_number(12) == Fraction(-691, 2730)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            bernoulli_number(-1)


class TestBernoulliPolynomials:
    def test_b1(self):
        assert bernoulli_polynomial(1) == PiXPolynomial([Fraction(-1, 2), 1])

    def test_b0(self):
        assert bernoulli_polynomial(0) == PiXPolynomial([1])

    def test_b2(self):
        assert bernoulli_polynomial(2) == PiXPolynomial([Fraction(1, 6), -1, 1])

    @pytest.mark.parametrize("m", range(13))
    def test_binomial_sum_oracle(self, m):
        got = bernoulli_polynomial(m)
        want = bernoulli_poly_coeffs(m)
        for j in range(m + 1):
            assert got.coeff(j).as_rational() == want[j]

    @pytest.mark.parametrize("m", range(13))
    def test_endpoint_values(self, m):
        p = bernoulli_polynomial(m)
        assert p.coeff(0).as_rational() == bernoulli_number(m)
        at_one = sum(p.coeff(j).as_rational() for j in range(m + 1))
        assert at_one == (-1) ** m * bernoulli_number(m)

    def test_monic(self):
        for m in range(1, 9):
            assert bernoulli_polynomial(m).coeff(m).as_rational() == 1


class TestEulerNumbers:
    def test_small_values(self):
        assert euler_number(0) == 1
        assert euler_number(1) == 0
        assert euler_number(2) == -1
        assert euler_number(4) == 5
        assert euler_number(6) == -61

    def test_against_generating_function(self):
        oracle = euler_from_generating_function(24)
        for n in range(25):
            assert euler_number(n) == oracle[n], n

    def test_odd_vanish_up_to_51(self):
        for n in range(1, 52, 2):
            assert euler_number(n) == 0


class TestPiPolynomial:
    def test_trim_and_zero(self):
        assert PiPolynomial([0, 0]).is_zero()
        assert PiPolynomial([1, 0]).degree == 0

    def test_arithmetic(self):
        p = PI * Fraction(1, 2) + PiPolynomial([Fraction(1, 3)])
        q = p - PI * Fraction(1, 2)
        assert q == PiPolynomial([Fraction(1, 3)])
        assert (PI * PI).coeffs == (Fraction(0), Fraction(0), Fraction(1))

    def test_rational_comparison(self):
        assert PiPolynomial([Fraction(2, 3)]) == Fraction(2, 3)
        assert PiPolynomial() == 0

    def test_division(self):
        assert PI / 2 == PiPolynomial([0, Fraction(1, 2)])


class TestPiXPolynomialEval:
    def test_root_by_construction(self):
        # (pi - x)/2 at x = pi
        p = PiXPolynomial([PI * Fraction(1, 2), Fraction(-1, 2)])
        assert abs(pipoly_eval(p, math.pi)) < 5e-16

    def test_constant_term(self):
        p = PiXPolynomial([PI * Fraction(1, 2), Fraction(-1, 2)])
        assert pipoly_eval(p, 0.0) == pytest.approx(math.pi / 2, abs=1e-15)

    def test_quadratic_constant_is_zeta2(self):
        p = PiXPolynomial([PI * PI * Fraction(1, 6), PI * Fraction(-1, 2), Fraction(1, 4)])
        assert pipoly_eval(p, 0.0) == pytest.approx(1.6449340668482264, abs=1e-14)

    def test_min_digits_enforced(self):
        with pytest.raises(ValueError):
            pipoly_eval(PiXPolynomial([1]), 0.0, pi_digits=10)

    def test_fraction_argument(self):
        p = PiXPolynomial([0, 1, 1])  # x + x^2
        assert pipoly_eval(p, Fraction(1, 2)) == pytest.approx(0.75, abs=1e-15)


class TestTaylorGenerators:
    def test_cot_half_leading_term(self):
        p = cot_half_regular(4)
        assert p.coeff(1).as_rational() == Fraction(-1, 12)

    def test_cot_half_matches_closed_form(self):
        p = cot_half_regular(12)
        for x in (0.2, 0.7, 1.3):
            closed = math.sin(x) / (2 * (1 - math.cos(x))) - 1 / x
            assert pipoly_eval(p, x) == pytest.approx(closed, abs=1e-10)

    def test_inv_one_minus_cos_is_derivative(self):
        # derivative of the regular cot series must equal the regular csc^2 series
        p = cot_half_regular(10)
        q = inv_one_minus_cos_regular(10)
        for j in range(1, p.degree + 1):
            assert p.coeff(j).as_rational() * j == q.coeff(j - 1).as_rational()

    def test_inv_one_minus_cos_matches_closed_form(self):
        p = inv_one_minus_cos_regular(12)
        for x in (0.2, 0.9):
            closed = -1 / (2 * (1 - math.cos(x))) + 1 / x ** 2
            assert pipoly_eval(p, x) == pytest.approx(closed, abs=1e-10)

    def test_half_sec_matches_closed_form(self):
        # radius of convergence is pi/2, so x=1.0 needs the longer truncation
        p = half_sec_series(30)
        for x in (0.3, 1.0):
            assert pipoly_eval(p, x) == pytest.approx(1 / (2 * math.cos(x)), abs=1e-9)

    def test_log_sec_tan_matches_closed_form(self):
        p = log_sec_plus_tan_half_series(30)
        for x in (0.3, 0.9):
            closed = 0.5 * math.log((1 + math.sin(x)) / math.cos(x))
            assert pipoly_eval(p, x) == pytest.approx(closed, abs=1e-9)
