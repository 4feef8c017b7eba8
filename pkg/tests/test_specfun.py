import cmath
import math
from fractions import Fraction

import pytest

from opzeta.errors import ContourClipped, PoleAtOne
from opzeta.exactnum import PiPolynomial, PiXPolynomial, bernoulli_number, euler_number
from opzeta.specfun import (
    beta_nonpos_int,
    beta_odd_pi_form,
    clausen_closed_form,
    dirichlet_beta,
    functional_equation_residual,
    hankel_zeta,
    hurwitz_zeta,
    lerch_hankel,
    recip_gamma,
    zeta_em,
    zeta_even_pi_form,
    zeta_neg_int,
)
from oracles import euler_summed_alternating

PI = math.pi

# zeta(1/2) recorded before the build from the Euler-Maclaurin scratch oracle
ZETA_HALF = -1.4603545088095868
# eta(1/2) = sum (-1)^(n-1) n^(-1/2), frozen from the alternating oracle
ETA_HALF = 0.6048986434216304


class TestZetaEM:
    def test_at_two(self):
        r = zeta_em(2)
        assert abs(r.value - PI * PI / 6) <= 1e-12
        assert r.abs_error_estimate <= 1e-10

    def test_at_zero(self):
        assert zeta_em(0).value == pytest.approx(-0.5, abs=1e-13)

    def test_at_minus_one(self):
        # zeta(-n) = (-1)^n B_{n+1}/(n+1) with exact B_2 = 1/6
        expect = float(Fraction(-1) * bernoulli_number(2) / 2)
        assert zeta_em(-1).value == pytest.approx(expect, abs=1e-13)
        assert expect == pytest.approx(-1 / 12)

    def test_pole_raises(self):
        with pytest.raises(PoleAtOne):
            zeta_em(1)
        with pytest.raises(PoleAtOne):
            zeta_em(1 + 1e-14)

    def test_near_pole_still_evaluates(self):
        r = zeta_em(1 + 1e-6)
        assert abs(r.value) > 9e5  # ~ 1/(s-1)

    @pytest.mark.parametrize("s", [-10.5, -25, 0.25, 3.7, complex(0.5, 30), complex(-20, 40)])
    def test_error_estimates_in_validated_domain(self, s):
        r = zeta_em(s)
        # 1e-10 absolute wherever a double can express it; ulp-scale beyond
        assert r.abs_error_estimate <= max(1e-10, abs(r.value) * 1e-14)

    def test_complex_conjugate_symmetry(self):
        a = zeta_em(complex(0.5, 14.0)).value
        b = zeta_em(complex(0.5, -14.0)).value
        assert a == pytest.approx(b.conjugate(), abs=1e-12)


class TestZetaNegInt:
    def test_trivial_zeros(self):
        for n in (2, 4, 6, 8, 10):
            assert zeta_neg_int(n) == 0

    def test_minus_one(self):
        assert zeta_neg_int(1) == Fraction(-1, 12)

    def test_minus_three(self):
        # continuation formula with B_4 = -1/30, cross-checked numerically
        assert zeta_neg_int(3) == Fraction(1, 120)
        assert abs(zeta_em(-3).value - 1 / 120) < 1e-10

    def test_matches_euler_maclaurin(self):
        for n in range(1, 16):
            assert abs(zeta_em(-n).value - float(zeta_neg_int(n))) < 1e-10


class TestZetaEvenPiForm:
    def test_zeta2(self):
        assert zeta_even_pi_form(2) == PiPolynomial.pi_power(Fraction(1, 6), 2)

    def test_zeta4(self):
        assert zeta_even_pi_form(4) == PiPolynomial.pi_power(Fraction(1, 90), 4)

    def test_numeric_agreement(self):
        for n in (2, 4, 6, 8):
            v = float(zeta_even_pi_form(n).evaluate(PI))
            assert v == pytest.approx(zeta_em(n).value.real, abs=1e-12)


class TestHurwitz:
    def test_reduces_to_zeta(self):
        assert hurwitz_zeta(2, 1).value == pytest.approx(PI * PI / 6, abs=1e-12)

    def test_linear_identity_at_zero(self):
        # zeta(0, a) = 1/2 - a
        for a in (0.25, 0.5, 0.75, 1.0):
            assert hurwitz_zeta(0, a).value == pytest.approx(0.5 - a, abs=1e-12)
        assert hurwitz_zeta(0, 0.5).value == pytest.approx(0.0, abs=1e-12)

    def test_half_argument_identity(self):
        # zeta(s, 1/2) = (2^s - 1) zeta(s)
        for s in (2.0, 3.0, -1.5, 0.25):
            lhs = hurwitz_zeta(s, 0.5).value
            rhs = (2 ** s - 1) * zeta_em(s).value
            assert lhs == pytest.approx(rhs, abs=1e-11)
        assert hurwitz_zeta(2, 0.5).value == pytest.approx(PI * PI / 2, abs=1e-12)

    def test_domain_validation(self):
        with pytest.raises(ValueError):
            hurwitz_zeta(2, 0.0)
        with pytest.raises(ValueError):
            hurwitz_zeta(2, 1.5)

    def test_pole(self):
        with pytest.raises(PoleAtOne):
            hurwitz_zeta(1, 0.5)


class TestDirichletBeta:
    def test_odd_negative_zeros(self):
        for n in (1, 3, 5):
            assert abs(dirichlet_beta(-n).value) < 1e-11

    def test_even_negative_euler_values(self):
        for n in (2, 4, 6, 8):
            expect = euler_number(n) / 2
            assert dirichlet_beta(-n).value.real == pytest.approx(expect, abs=1e-9)

    def test_at_one_alternating_oracle(self):
        oracle = euler_summed_alternating(lambda k: 1.0 / (2 * k + 1))
        assert oracle == pytest.approx(PI / 4, abs=1e-12)
        assert dirichlet_beta(1).value == pytest.approx(oracle, abs=1e-12)

    def test_exact_value_tables(self):
        assert beta_nonpos_int(0) == Fraction(1, 2)
        assert beta_nonpos_int(2) == Fraction(-1, 2)
        assert beta_nonpos_int(4) == Fraction(5, 2)
        assert beta_nonpos_int(1) == 0
        assert beta_odd_pi_form(1) == PiPolynomial.pi_power(Fraction(1, 4), 1)
        assert beta_odd_pi_form(3) == PiPolynomial.pi_power(Fraction(1, 32), 3)

    def test_pi_form_numeric_agreement(self):
        for n in (1, 3, 5):
            v = float(beta_odd_pi_form(n).evaluate(PI))
            assert v == pytest.approx(dirichlet_beta(n).value.real, abs=1e-11)


class TestRecipGamma:
    def test_at_one(self):
        assert recip_gamma(1) == pytest.approx(1.0, abs=1e-14)

    def test_annihilation_is_exact_zero(self):
        for k in range(0, 31):
            assert recip_gamma(-k) == 0

    def test_at_half(self):
        # reflection oracle: Gamma(1/2) = sqrt(pi)
        assert recip_gamma(0.5) == pytest.approx(1 / math.sqrt(PI), abs=1e-14)

    def test_against_stdlib_gamma(self):
        for s in (0.3, 1.7, 4.25, 9.5):
            assert recip_gamma(s) == pytest.approx(1 / math.gamma(s), rel=1e-13)

    def test_accuracy_split(self):
        # absolute 1e-12 where the value is order one, relative 1e-12 beyond
        v = recip_gamma(-3.5)
        expect = 1 / math.gamma(-3.5)
        assert abs(v - expect) <= max(1e-12, abs(expect) * 1e-12)
        v = recip_gamma(-20.5)
        expect = 1 / math.gamma(-20.5)
        assert abs(v - expect) <= abs(expect) * 1e-12

    def test_complex_point(self):
        # |1/Gamma(conj s)| = |1/Gamma(s)| and conjugate symmetry
        v = recip_gamma(complex(2.0, 3.0))
        w = recip_gamma(complex(2.0, -3.0))
        assert v == pytest.approx(w.conjugate(), rel=1e-12)


class TestHankelZeta:
    def test_at_zero(self):
        r = hankel_zeta(0)
        assert abs(r.value - (-0.5)) <= 1e-8

    def test_at_half_prerecorded(self):
        r = hankel_zeta(0.5)
        assert abs(r.value - ZETA_HALF) <= 1e-8
        em = zeta_em(0.5)
        assert abs(r.value - em.value) <= 1e-8

    def test_at_minus_one(self):
        assert abs(hankel_zeta(-1).value - float(zeta_neg_int(1))) <= 1e-8

    def test_contour_clipped(self):
        with pytest.raises(ContourClipped):
            hankel_zeta(0.5, rho=2 * PI)
        with pytest.raises(ContourClipped):
            hankel_zeta(0.5, rho=7.0)

    def test_requires_re_below_one(self):
        with pytest.raises(ValueError):
            hankel_zeta(1.5)

    def test_rho_independence(self):
        a = hankel_zeta(0.3, rho=PI).value
        b = hankel_zeta(0.3, rho=1.5).value
        assert a == pytest.approx(b, abs=1e-10)

    @pytest.mark.parametrize(
        "s", [-3, -2, -1, 0, 0.5, complex(-0.5, 1.0), complex(-0.5, -1.0)]
    )
    def test_oracle_triangle(self, s):
        h = hankel_zeta(s)
        e = zeta_em(s)
        assert abs(h.value - e.value) <= h.abs_error_estimate + e.abs_error_estimate
        assert abs(h.value - e.value) <= 1e-7

    def test_integer_points_exact_within_1e8(self):
        assert abs(hankel_zeta(0).value + 0.5) <= 1e-8
        for n in (1, 2, 3):
            assert abs(hankel_zeta(-n).value - float(zeta_neg_int(n))) <= 1e-8


class TestLerchHankel:
    def test_residue_at_s0_quarter_turn(self):
        r = lerch_hankel(0, PI / 2)
        assert r.value == pytest.approx(complex(-0.5, 0.5), abs=1e-10)

    def test_residue_at_s0_half_turn(self):
        assert lerch_hankel(0, PI).value == pytest.approx(-0.5 + 0j, abs=1e-10)

    def test_matches_geometric_closed_form(self):
        for x in (0.5, 2.0, 4.5):
            expect = 1 / (cmath.exp(-1j * x) - 1)
            assert lerch_hankel(0, x).value == pytest.approx(expect, abs=1e-9)

    def test_alternating_oracle_at_half(self):
        # sum (-1)^n n^(-1/2) = -eta(1/2), via the Euler-summed oracle
        oracle = euler_summed_alternating(lambda k: 1.0 / math.sqrt(k + 1))
        assert oracle == pytest.approx(ETA_HALF, abs=1e-10)
        r = lerch_hankel(0.5, PI)
        assert abs(r.value - (-oracle)) <= 1e-6

    def test_domain_checks(self):
        with pytest.raises(ValueError):
            lerch_hankel(0, 0.0)
        with pytest.raises(ValueError):
            lerch_hankel(0, 2 * PI)
        with pytest.raises(ValueError):
            lerch_hankel(1.2, PI)
        with pytest.raises(ContourClipped):
            lerch_hankel(0, 0.5, rho=0.6)


class TestClausenClosedForm:
    def test_sin_m1_is_sawtooth(self):
        p = clausen_closed_form("sin", 1)
        assert p == PiXPolynomial([PiPolynomial.pi_power(Fraction(1, 2), 1), Fraction(-1, 2)])

    def test_cos_m1(self):
        p = clausen_closed_form("cos", 1)
        assert p == PiXPolynomial(
            [PiPolynomial.pi_power(Fraction(1, 6), 2), PiPolynomial.pi_power(Fraction(-1, 2), 1), Fraction(1, 4)]
        )

    def test_sin_m2(self):
        p = clausen_closed_form("sin", 2)
        assert p == PiXPolynomial(
            [
                PiPolynomial(),
                PiPolynomial.pi_power(Fraction(1, 6), 2),
                PiPolynomial.pi_power(Fraction(-1, 4), 1),
                Fraction(1, 12),
            ]
        )

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            clausen_closed_form("tan", 1)
        with pytest.raises(ValueError):
            clausen_closed_form("sin", 0)


class TestFunctionalEquation:
    @pytest.mark.parametrize("s", [-0.5, -1.5, 0.25])
    def test_residual_small(self, s):
        assert functional_equation_residual(s) <= 1e-8


class TestConcurrentUse:
    def test_numeric_kernels_under_threads(self):
        # the numeric kernels serialize the precision context internally;
        # results must be identical regardless of interleaving
        from concurrent.futures import ThreadPoolExecutor

        points = [2.0, 0.5, -1.0, -3.0, 0.25, -0.5] * 4
        expect = [zeta_em(s).value for s in points]
        with ThreadPoolExecutor(max_workers=8) as pool:
            got = list(pool.map(lambda s: zeta_em(s).value, points))
        assert got == expect
        with ThreadPoolExecutor(max_workers=8) as pool:
            betas = list(pool.map(lambda n: dirichlet_beta(n).value, [-2] * 16))
        assert all(abs(b - (-0.5)) < 1e-9 for b in betas)


class TestPrecisionLossWarnings:
    def test_zeta_em_outside_validated_domain(self):
        from opzeta.errors import PrecisionLoss

        with pytest.warns(PrecisionLoss):
            r = zeta_em(-30.0)  # Re s below the validated -25
        assert r.value == r.value  # best-effort value still returned

    def test_dirichlet_beta_outside_validated_domain(self):
        from opzeta.errors import PrecisionLoss

        with pytest.warns(PrecisionLoss):
            dirichlet_beta(complex(0.5, 80.0))

    def test_lerch_near_contour_pole(self):
        from opzeta.errors import PrecisionLoss

        with pytest.warns(PrecisionLoss):
            r = lerch_hankel(0, 0.03)
        assert r.abs_error_estimate >= 1e-8
