"""Engine tests: Dedekind zeta, Gamma factor, completed values, pole model."""

import cmath
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from globalzeta import (
    PoleError,
    completed_zeta,
    gamma_factor,
    make_curve_function_field,
    make_quadratic,
    make_rational_function_field,
    make_rationals,
    pole_distance,
    pole_set,
    truncated_euler_product,
    zeta,
)

import oracles

Q = make_rationals()
QI = make_quadratic(-1)
Q_SQRT5 = make_quadratic(5)
Q_SQRT2 = make_quadratic(2)
Q_SQRTM3 = make_quadratic(-3)
F5 = make_rational_function_field(5)
CURVE_5_1 = make_curve_function_field(5, [1, 3, 5])

# zeta(2) * L(2, chi_-4), frozen from dedekind_zeta_qi_series(2.0, 20000)
ZETA_QI_2_ORACLE, ZETA_QI_2_BOUND = 1.50670300992302, 7.1e-14


class TestZeta:
    def test_rationals_basel(self):
        v, bound = oracles.zeta_series(2.0, 4000)
        assert abs(zeta(Q, 2) - v) <= bound + 1e-12

    def test_gaussian_product(self):
        value = zeta(QI, 2)
        assert abs(value - ZETA_QI_2_ORACLE) <= ZETA_QI_2_BOUND + 1e-11
        v, bound = oracles.dedekind_zeta_qi_series(2.0, 20000)
        assert abs(value - v) <= bound + 1e-11

    def test_function_field_closed_form(self):
        value = zeta(F5, 2)
        assert abs(value - 125.0 / 96.0) < 1e-14
        # cross-check against the truncated Euler product
        trunc = truncated_euler_product(F5, 2, 25)
        assert abs(value - trunc) < 5e-3

    def test_pole_errors(self):
        with pytest.raises(PoleError):
            zeta(Q, 1)
        with pytest.raises(PoleError):
            zeta(Q, 5e-4)
        with pytest.raises(PoleError):
            zeta(F5, complex(1.0, 2.0 * math.pi / math.log(5.0)))

    def test_reality_on_real_axis(self):
        for field in (Q, QI, Q_SQRT5, F5, CURVE_5_1):
            for x in (-2.5, -0.7, 0.3, 0.5, 0.9, 2.0, 6.0):
                if pole_distance(field, x) < 1e-3:
                    continue
                assert abs(zeta(field, x).imag) < 1e-12
                assert abs(completed_zeta(field, x).completed_value.imag) < 1e-12

    @settings(max_examples=60, deadline=None)
    @given(re=st.floats(-1.5, 6.0), im=st.floats(0.01, 20.0))
    def test_conjugation_symmetry(self, re, im):
        s = complex(re, im)
        for field in (Q, QI, F5):
            if pole_distance(field, s) < 0.01:
                continue
            a = zeta(field, s.conjugate())
            b = zeta(field, s).conjugate()
            assert abs(a - b) <= 1e-12 * max(abs(b), 1e-30)

    @settings(max_examples=40, deadline=None)
    @given(re=st.floats(-2.0, 3.0), im=st.floats(-10.0, 10.0))
    def test_function_field_periodicity(self, re, im):
        s = complex(re, im)
        for field in (F5, make_rational_function_field(3)):
            period = 2.0 * math.pi / math.log(field.q)
            if pole_distance(field, s) < 0.01:
                continue
            a = zeta(field, s + complex(0.0, period))
            b = zeta(field, s)
            assert abs(a - b) <= 1e-12 * max(abs(b), 1e-30)

    def test_factorization_against_truncated_product(self):
        rng = random.Random(314159)
        for field in (Q, QI, Q_SQRT5, Q_SQRT2, Q_SQRTM3):
            for _ in range(10):
                s = complex(rng.uniform(1.05, 3.0), rng.uniform(-5.0, 5.0))
                sigma = s.real
                gap = abs(zeta(field, s) - truncated_euler_product(field, s, 2000))
                envelope = 4.0 * 2000.0 ** (1.0 - sigma) / (sigma - 1.0)
                assert gap <= envelope


class TestGammaFactor:
    def test_rationals_at_two(self):
        assert abs(gamma_factor(Q, 2) - 1.0 / math.pi) < 1e-14

    def test_gaussian_at_one(self):
        assert abs(gamma_factor(QI, 1) - 1.0) < 1e-14

    def test_function_field_is_one(self):
        assert gamma_factor(F5, 2 + 3j) == 1.0
        assert gamma_factor(CURVE_5_1, -1.5) == 1.0

    def test_pole_errors(self):
        with pytest.raises(PoleError):
            gamma_factor(Q, -2)
        with pytest.raises(PoleError):
            gamma_factor(Q, 0)
        with pytest.raises(PoleError):
            gamma_factor(QI, -1)
        with pytest.raises(PoleError):
            gamma_factor(Q_SQRT5, -4 + 5e-4j)
        # odd negative integers are not Gamma poles for real signatures
        assert abs(gamma_factor(Q, -1)) > 0
        assert abs(gamma_factor(Q_SQRT5, -3)) > 0

    def test_closed_form_points(self):
        # Gamma(2) = 1, Gamma(3/2) = sqrt(pi)/2 give closed products
        assert abs(gamma_factor(QI, 2) - 1.0 / (2.0 * math.pi)) < 1e-14
        assert abs(gamma_factor(Q_SQRT5, 3) - 1.0 / (4.0 * math.pi ** 2)) < 1e-14

    def test_exponent_multiplicity(self):
        # the r1 = 2 factor is the square of the r1 = 1 factor
        s = 0.75 + 6.0j
        single = gamma_factor(Q, s)
        double = gamma_factor(Q_SQRT5, s)
        assert abs(double - single * single) <= 1e-13 * abs(double)


class TestCompletedZeta:
    def test_rationals_at_two(self):
        rec = completed_zeta(Q, 2)
        assert abs(rec.completed_value - math.pi / 6.0) <= 1e-12 * (math.pi / 6.0)
        assert rec.completed_value == rec.gamma_factor_value * rec.zeta_value
        assert not rec.precision_cliff

    def test_rationals_at_minus_one(self):
        # pi^(1/2) Gamma(-1/2) zeta(-1) = sqrt(pi) (-2 sqrt(pi)) (-1/12) = pi/6
        rec = completed_zeta(Q, -1)
        assert abs(rec.completed_value - math.pi / 6.0) <= 1e-12 * (math.pi / 6.0)
        assert not rec.precision_cliff

    def test_function_field(self):
        rec = completed_zeta(F5, 2)
        assert rec.gamma_factor_value == 1.0
        assert abs(rec.completed_value - 125.0 / 96.0) < 1e-14
        assert rec.completed_value == rec.gamma_factor_value * rec.zeta_value

    def test_record_product_is_bitwise(self):
        pts = [0.3, 0.5 + 4j, 2.0, -1.0, -1.003, -2.5, 0.9 + 10j]
        for field in (Q, QI, Q_SQRT5, F5):
            for s in pts:
                if pole_distance(field, s) < 1e-3:
                    continue
                rec = completed_zeta(field, s)
                assert rec.completed_value == rec.gamma_factor_value * rec.zeta_value

    def test_pole_distance_recorded(self):
        rec = completed_zeta(Q, 2)
        assert rec.pole_distance == 1.0

    def test_gaussian_cancelled_pole_value(self):
        # Z(-1) is finite: the Gamma pole at -1 cancels the trivial zero
        # of L(chi_-4).  Oracle: even-order Richardson extrapolation of
        # the plain product from outside the deflation zone.
        rec = completed_zeta(QI, -1)
        assert rec.precision_cliff

        def plain_avg(h):
            a = completed_zeta(QI, -1.0 + h).completed_value
            b = completed_zeta(QI, -1.0 - h).completed_value
            return 0.5 * (a + b)

        f1, f2, f3 = plain_avg(0.04), plain_avg(0.02), plain_avg(0.01)
        r1 = (4.0 * f2 - f1) / 3.0
        r2 = (4.0 * f3 - f2) / 3.0
        limit = (16.0 * r2 - r1) / 15.0
        assert abs(rec.completed_value - limit) <= 1e-9 * abs(limit)

    def test_cliff_flag_zones(self):
        assert completed_zeta(QI, -1.0 + 0.005).precision_cliff
        assert not completed_zeta(QI, -1.0 + 0.02).precision_cliff
        assert completed_zeta(Q, -2.0 + 0.005).precision_cliff
        assert not completed_zeta(Q, -1.0).precision_cliff  # odd: no Gamma pole

    def test_cliff_matches_plain_outside(self):
        # the deflated path must join the plain path continuously
        inner = completed_zeta(QI, -1.0 + 0.009).completed_value
        outer = completed_zeta(QI, -1.0 + 0.011).completed_value
        assert abs(inner - outer) < 2e-2 * abs(outer)

    def test_finiteness_near_trivial_zero_cancellations(self):
        # Gamma poles at negative even integers cancel against trivial
        # zeros: Z stays bounded near s = -2
        for field in (Q, Q_SQRT5):
            for h in (0.005, -0.005, 0.009, 0.02):
                rec = completed_zeta(field, -2.0 + h)
                v = rec.completed_value
                assert cmath.isfinite(v)
                assert abs(v) < 10.0

    def test_pole_error(self):
        with pytest.raises(PoleError):
            completed_zeta(Q, 1.0 + 1e-4j)
        with pytest.raises(PoleError):
            completed_zeta(F5, 0)


class TestPoleModel:
    def test_number_field_pole_set(self):
        ps = pole_set(Q)
        assert ps.bases == (0.0, 1.0)
        assert ps.period is None

    def test_function_field_pole_set(self):
        ps = pole_set(F5)
        assert ps.bases == (0.0, 1.0)
        assert abs(ps.period - 2.0 * math.pi / math.log(5.0)) < 1e-15

    def test_distances(self):
        assert pole_distance(Q, 2) == 1.0
        assert pole_distance(Q, 0.5) == 0.5
        assert abs(pole_distance(Q, 0.5 + 10j) - math.hypot(0.5, 10)) < 1e-12
        period = 2.0 * math.pi / math.log(5.0)
        assert pole_distance(F5, complex(1.0, period)) < 1e-15
        assert abs(pole_distance(F5, complex(1.0, period / 2.0)) - period / 2.0) < 1e-12
        assert abs(pole_distance(F5, complex(1.0, 7 * period)) ) < 1e-12
