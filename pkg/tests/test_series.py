"""The polynomial family, its oracles, tau, exact evaluation, stability."""

import random
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from darcais import (
    DomainError,
    IntPoly,
    RatPoly,
    a_poly,
    a_poly_oracle,
    evaluate_at_cyclotomic,
    evaluate_at_quadratic,
    h_poly,
    hurwitz_check,
    p_poly,
    series_oracle,
    tau,
    tau_list,
)
from darcais.numfield import min_poly_quadratic_shift
from darcais.series import _partitions

from conftest import SIGMA_FACTORED, expand_product, random_table

# Partition counts p(0)..p(10), the classic sequence.
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def eta24_expansion(order):
    """Truncated integer expansion of prod_{k<=order} (1 - q**k)**24.

    Entry n is the (n+1)-st Ramanujan tau value; this is the independent
    product-form oracle, sharing nothing with the series recurrence.
    """
    series = [1] + [0] * order
    for k in range(1, order + 1):
        for _ in range(24):
            # multiply by (1 - q**k), truncating at the order
            for i in range(order, k - 1, -1):
                series[i] -= series[i - k]
    return series


class TestGoldenTable:
    def test_first_seven_sigma_polynomials(self, sigma_g):
        for n, factors in SIGMA_FACTORED.items():
            assert a_poly(sigma_g, n) == expand_product(factors)

    def test_a0_and_a1_for_any_g(self, sigma_g, identity_g):
        for g in (sigma_g, identity_g, random_table(3, 5)):
            assert a_poly(g, 0) == IntPoly.one()
            assert a_poly(g, 1) == IntPoly.x()

    def test_monic_degree_and_zero_constant(self, sigma_g, identity_g):
        for g in (sigma_g, identity_g, random_table(17, 30)):
            for n in range(1, 31):
                poly = a_poly(g, n)
                assert poly.degree == n
                assert poly.leading == 1
                assert poly.coeff(0) == 0


class TestPPoly:
    def test_p3_sigma(self, sigma_g):
        want = RatPoly((0, Fraction(8, 6), Fraction(9, 6), Fraction(1, 6)))
        assert p_poly(sigma_g, 3) == want

    def test_identity_at_one(self, identity_g):
        assert p_poly(identity_g, 2).evaluate(1) == Fraction(3, 2)

    def test_p0(self, sigma_g):
        assert p_poly(sigma_g, 0) == RatPoly((1,))


class TestPartitionOracle:
    def test_partition_generator_counts(self):
        for n, want in enumerate(PARTITION_COUNTS):
            assert sum(1 for _ in _partitions(n)) == want

    def test_a4_sigma(self, sigma_g):
        assert a_poly_oracle(sigma_g, 4) == expand_product(SIGMA_FACTORED[4])

    def test_single_partition_at_one(self, identity_g):
        assert a_poly_oracle(identity_g, 1) == IntPoly.x()

    def test_matches_recursion(self, sigma_g, identity_g):
        for g in (sigma_g, identity_g, random_table(23, 16)):
            for n in range(13):
                assert a_poly_oracle(g, n) == a_poly(g, n)

    def test_cap_is_enforced(self, sigma_g):
        with pytest.raises(DomainError):
            a_poly_oracle(sigma_g, 26)
        # and the override works
        assert a_poly_oracle(sigma_g, 26, max_n=26).degree == 26


class TestSeriesOracle:
    def test_eta_power_oracle(self, sigma_g):
        got = series_oracle(sigma_g, -24, 5)
        want = eta24_expansion(5)
        assert got == want
        assert got == [1, -24, 252, -1472, 4830, -6048]

    def test_zero_argument(self, sigma_g, identity_g):
        for g in (sigma_g, identity_g):
            assert series_oracle(g, 0, 6) == [1, 0, 0, 0, 0, 0, 0]

    def test_partition_generating_function(self, sigma_g):
        assert series_oracle(sigma_g, 1, 10) == PARTITION_COUNTS

    def test_entries_are_polynomial_values(self, sigma_g, identity_g):
        for g in (sigma_g, identity_g, random_table(29, 12)):
            for x in (-24, -3, 0, 1, 7, 24):
                coeffs = series_oracle(g, x, 12)
                for n in range(13):
                    assert coeffs[n] == p_poly(g, n).evaluate(x)


class TestTau:
    def test_first_values_against_product_oracle(self):
        assert tau_list(6) == eta24_expansion(5)

    def test_examples(self):
        assert tau(1) == 1
        assert tau(2) == -24
        assert tau(6) == -6048

    def test_matches_symbolic_path(self, sigma_g):
        values = tau_list(30)
        for n in range(1, 31):
            assert values[n - 1] == p_poly(sigma_g, n - 1).evaluate(-24)

    def test_multiplicative_smoke(self):
        assert tau(6) == tau(2) * tau(3)

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            tau(0)


class TestEvaluateAtQuadratic:
    def test_x_at_i(self, sigma_g):
        assert evaluate_at_quadratic(p_poly(sigma_g, 1), -1, 1, 0) == (0, 1)

    def test_p2_at_i(self, sigma_g):
        got = evaluate_at_quadratic(p_poly(sigma_g, 2), -1, 1, 0)
        assert got == (Fraction(-1, 2), Fraction(3, 2))

    def test_true_root_reports_zero(self, sigma_g):
        # -3 is a root of the quadratic member; pass it as 0*w + (-3)
        got = evaluate_at_quadratic(p_poly(sigma_g, 2), -1, 0, -3)
        assert got == (0, 0)

    def test_rejects_bad_d(self, sigma_g):
        p = p_poly(sigma_g, 2)
        for D in (0, 1, 4, 12, -8):
            with pytest.raises(DomainError):
                evaluate_at_quadratic(p, D, 1, 0)

    def test_zero_iff_min_poly_divides(self, sigma_g):
        rng = random.Random(11)
        for _ in range(40):
            D = rng.choice([-1, -2, -3, 2, 3, 5, -7, 13])
            a = rng.choice([1, -1, 2, 3])
            b = rng.randint(-4, 4)
            m = min_poly_quadratic_shift(D, a, b).to_rat()
            extra = RatPoly([Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(1, 4))] + [Fraction(1)])
            multiple = m * extra
            assert evaluate_at_quadratic(multiple, D, a, b) == (0, 0)
            if not m.divides(extra):
                val = evaluate_at_quadratic(extra, D, a, b)
                assert val != (0, 0)

    def test_golden_ratio_unit(self):
        # w(5) = (1+sqrt 5)/2 satisfies w^2 = w + 1
        p = RatPoly((-1, -1, 1))
        assert evaluate_at_quadratic(p, 5, 1, 0) == (0, 0)


class TestEvaluateAtCyclotomic:
    def test_x_at_zeta4(self, sigma_g):
        assert evaluate_at_cyclotomic(p_poly(sigma_g, 1), 4, 1, 0) == (0, 1)

    def test_p3_at_shifted_cube_root(self, sigma_g):
        vec = evaluate_at_cyclotomic(a_poly(sigma_g, 3), 3, 1, 1)
        assert vec == (7, 17)

    def test_linear_shift_value(self):
        vec = evaluate_at_cyclotomic(RatPoly((1, 1)), 3, 1, 0)
        assert vec == (1, 1)
        assert any(vec)

    def test_phi_m_vanishes_at_zeta(self):
        from darcais import cyclotomic

        for m in range(3, 16):
            vec = evaluate_at_cyclotomic(cyclotomic(m).to_rat(), m, 1, 0)
            assert not any(vec)

    def test_numeric_cross_check(self, sigma_g):
        mpmath.mp.dps = 50
        for m, a, b, n in [(3, 1, 1, 3), (5, 2, -1, 4), (8, 1, 0, 6), (7, -1, 2, 5)]:
            poly = a_poly(sigma_g, n)
            vec = evaluate_at_cyclotomic(poly, m, a, b)
            zeta = mpmath.e ** (2j * mpmath.pi / m)
            direct = mpmath.polyval([mpmath.mpf(c) for c in reversed(poly.coeffs)], a * zeta + b)
            recon = mpmath.fsum(
                [mpmath.re(v * zeta**k) for k, v in enumerate(vec)]
            ) + 1j * mpmath.fsum([mpmath.im(v * zeta**k) for k, v in enumerate(vec)])
            assert mpmath.fabs(direct - recon) < mpmath.mpf(10) ** -30
            assert any(vec)

    def test_rejects_small_m(self, sigma_g):
        with pytest.raises(DomainError):
            evaluate_at_cyclotomic(p_poly(sigma_g, 1), 2, 1, 0)


class TestHurwitz:
    def test_examples(self):
        assert hurwitz_check(RatPoly((3, 1))) is True
        assert hurwitz_check(RatPoly((8, 21, 1))) is True
        assert hurwitz_check(RatPoly((1, 0, 1))) is False

    def test_constant_is_vacuously_stable(self):
        assert hurwitz_check(RatPoly((5,))) is True

    def test_root_at_origin_is_domain_error(self):
        with pytest.raises(DomainError):
            hurwitz_check(RatPoly((0, 1)))
        with pytest.raises(DomainError):
            hurwitz_check(RatPoly.zero())

    def test_symmetric_factor_detected(self):
        # (X + 1)(X**2 + 1): boundary roots, not strictly Hurwitz
        assert hurwitz_check(RatPoly((1, 1, 1, 1))) is False

    def test_sign_flip_handled(self):
        assert hurwitz_check(RatPoly((-3, -1))) is True

    def test_against_numpy_roots(self):
        rng = random.Random(13)
        checked = 0
        while checked < 120:
            degree = rng.randint(1, 7)
            coeffs = [rng.randint(-6, 6) for _ in range(degree)] + [rng.randint(1, 6)]
            if coeffs[0] == 0:
                continue
            roots = np.roots(list(reversed(coeffs)))
            margin = max(abs(r.real) for r in roots)
            if margin < 1e-9 or any(abs(r.real) < 1e-9 for r in roots):
                continue  # too close to the axis for a float oracle
            want = all(r.real < 0 for r in roots)
            assert hurwitz_check(RatPoly(coeffs)) == want, coeffs
            checked += 1

    def test_h_poly_sigma_nonnegative_and_hurwitz(self, sigma_g):
        for n in range(1, 31):
            h = h_poly(sigma_g, n)
            assert all(c >= 0 for c in h.coeffs)
            assert hurwitz_check(h) is True

    def test_h_poly_strips_exactly_one_root(self, sigma_g):
        assert h_poly(sigma_g, 1) == RatPoly((1,))
        assert h_poly(sigma_g, 2) == RatPoly((Fraction(3, 2), Fraction(1, 2)))


class TestTauCongruences:
    def test_product_oracle_extended_window(self):
        assert tau_list(12) == eta24_expansion(11)

    def test_ramanujan_congruence_mod_691(self):
        # tau(n) agrees with the 11th-power divisor sum mod 691
        values = tau_list(200)
        for n in range(1, 201):
            sigma11 = sum(d**11 for d in range(1, n + 1) if n % d == 0)
            assert (values[n - 1] - sigma11) % 691 == 0, n


class TestEvaluatorCrossConsistency:
    def test_zeta4_matches_gaussian_generator(self, sigma_g):
        for n in (1, 2, 5, 8):
            poly = a_poly(sigma_g, n)
            for a, b in ((1, 0), (2, -3), (-1, 4)):
                assert evaluate_at_cyclotomic(poly, 4, a, b) == evaluate_at_quadratic(
                    poly, -1, a, b
                )

    def test_zeta6_is_the_d_minus3_generator(self, sigma_g):
        # zeta_6 = (1 + sqrt(-3))/2, exactly the integral generator for D = -3
        for n in (1, 3, 6):
            poly = a_poly(sigma_g, n)
            for a, b in ((1, 0), (3, -2), (-2, 1)):
                assert evaluate_at_cyclotomic(poly, 6, a, b) == evaluate_at_quadratic(
                    poly, -3, a, b
                )

    def test_zeta3_is_shifted_generator(self, sigma_g):
        # zeta_3 = w(-3) - 1: same evaluation point, bases differing by
        # u + v*zeta_3 = (u - v) + v*w(-3)
        for n in (2, 4, 7):
            poly = a_poly(sigma_g, n)
            for a, b in ((1, 0), (2, 5), (-3, -1)):
                u, v = evaluate_at_cyclotomic(poly, 3, a, b)
                assert evaluate_at_quadratic(poly, -3, a, b - a) == (u - v, v)


class TestPartitionRecurrenceOracle:
    def test_against_pentagonal_recurrence(self, sigma_g):
        # independent oracle: Euler's pentagonal-number recurrence for the
        # partition counts, compared against the formal exponential at x = 1
        N = 50
        p = [1] + [0] * N
        for n in range(1, N + 1):
            total = 0
            k = 1
            while True:
                for g_k in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
                    if g_k > n:
                        break
                    total += (-1) ** (k + 1) * p[n - g_k]
                if k * (3 * k - 1) // 2 > n:
                    break
                k += 1
            p[n] = total
        assert series_oracle(sigma_g, 1, N) == p
