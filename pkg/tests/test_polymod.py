import random
from fractions import Fraction
from itertools import product

import pytest

from darcais import (
    ArithmeticFunction,
    DomainError,
    IntPoly,
    NotInvertibleError,
    RatPoly,
    a_poly,
    a_poly_mod,
    cyclotomic,
    euler_phi,
    factor,
    is_irreducible,
    reduce_mod,
)
from darcais.arith import multiplicative_order
from darcais.polymod import ModPoly, poly_gcd, pow_mod

from conftest import random_table


def random_mod_poly(rng, p, max_degree=8):
    coeffs = [rng.randrange(p) for _ in range(rng.randint(1, max_degree + 1))]
    return ModPoly(p, coeffs)


def brute_irreducible(f: ModPoly) -> bool:
    """Oracle: no monic divisor of degree 1..deg//2 (exhaustive search)."""
    p, d = f.p, f.degree
    if d <= 0:
        return False
    for k in range(1, d // 2 + 1):
        for tail in product(range(p), repeat=k):
            candidate = ModPoly(p, list(tail) + [1])
            if candidate.divides(f):
                return False
    return True


class TestModPoly:
    def test_reduction_on_construction(self):
        assert ModPoly(7, (8, -1, 14)).coeffs == (1, 6)

    def test_divmod(self):
        rng = random.Random(3)
        for p in (2, 3, 5, 7):
            for _ in range(40):
                a = random_mod_poly(rng, p)
                b = random_mod_poly(rng, p)
                if b.is_zero:
                    continue
                q, r = divmod(a, b)
                assert q * b + r == a
                assert r.is_zero or r.degree < b.degree

    def test_pow_mod_matches_plain_pow(self):
        f = ModPoly(5, (2, 0, 1, 1))
        x = ModPoly.x(5)
        assert pow_mod(x, 12, f) == (x**12) % f

    def test_gcd_monic(self):
        a = ModPoly(7, (0, 1)) * ModPoly(7, (1, 1)) * 3
        b = ModPoly(7, (1, 1)) * ModPoly(7, (2, 1)) * 5
        assert poly_gcd(a, b) == ModPoly(7, (1, 1))

    def test_mixed_moduli_rejected(self):
        with pytest.raises(DomainError):
            ModPoly(5, (1,)) + ModPoly(7, (1,))

    def test_modulus_must_be_prime_and_single_precision(self):
        with pytest.raises(DomainError):
            ModPoly(6, (1,))
        with pytest.raises(DomainError):
            ModPoly(2**31 + 11, (1,))


class TestReduceMod:
    def test_h5_reduction(self):
        assert reduce_mod(IntPoly((8, 21, 1)), 7) == ModPoly(7, (1, 0, 1))

    def test_h6_reduction(self):
        got = reduce_mod(IntPoly((144, 181, 34, 1)), 7)
        assert got == ModPoly(7, (4, 6, 6, 1))

    def test_zero(self):
        assert reduce_mod(IntPoly.zero(), 5).is_zero

    def test_rational_inverts_denominator(self):
        p = RatPoly((Fraction(1, 2),))
        assert reduce_mod(p, 7) == ModPoly(7, (4,))  # 1/2 = 4 mod 7

    def test_rational_rejects_bad_denominator(self):
        with pytest.raises(NotInvertibleError):
            reduce_mod(RatPoly((Fraction(1, 7),)), 7)


class TestFactor:
    def test_x2_plus_1_mod_7_irreducible(self):
        fact = factor(ModPoly(7, (1, 0, 1)))
        assert fact.degrees() == [2]
        assert fact.multiplicities() == [1]

    def test_x2_plus_1_mod_5_splits(self):
        fact = factor(ModPoly(5, (1, 0, 1)))
        assert [p.coeffs for p, _ in fact.factors] == [(2, 1), (3, 1)]

    def test_fermat_polynomial(self):
        for p in (2, 3, 5, 7):
            f = ModPoly(p, [0, p - 1] + [0] * (p - 2) + [1])  # X**p - X
            fact = factor(f)
            assert [q.coeffs for q, _ in fact.factors] == [(c, 1) for c in range(p)]

    def test_round_trip_200_random(self):
        rng = random.Random(2024)
        done = 0
        while done < 200:
            p = rng.choice((2, 3, 5, 7, 11, 13))
            f = random_mod_poly(rng, p, max_degree=9)
            if f.is_zero:
                continue
            fact = factor(f, seed=rng.randint(0, 10**6))
            assert fact.product() == f
            assert sum(q.degree * m for q, m in fact.factors) == f.degree
            for q, _ in fact.factors:
                assert q.leading == 1
                assert is_irreducible(q)
            assert len({q for q, _ in fact.factors}) == len(fact.factors)
            done += 1

    def test_canonical_ordering(self):
        rng = random.Random(5)
        for _ in range(30):
            f = random_mod_poly(rng, 5, max_degree=8)
            if f.is_zero:
                continue
            fact = factor(f)
            keys = [q.sort_key() for q, _ in fact.factors]
            assert keys == sorted(keys)

    def test_same_seed_same_output(self):
        f = ModPoly(11, (3, 1, 4, 1, 5, 9, 2, 6, 1))
        assert factor(f, seed=42).to_json_dict() == factor(f, seed=42).to_json_dict()

    def test_char2_repeated_and_equal_degree(self):
        # (X^2 + X + 1)^2 * (X^3 + X + 1) * (X^3 + X^2 + 1) over F_2
        q1 = ModPoly(2, (1, 1, 1))
        q2 = ModPoly(2, (1, 1, 0, 1))
        q3 = ModPoly(2, (1, 0, 1, 1))
        f = q1 * q1 * q2 * q3
        fact = factor(f, seed=1)
        assert dict(((q.coeffs, m) for q, m in fact.factors)) == {
            (1, 1, 1): 2,
            (1, 1, 0, 1): 1,
            (1, 0, 1, 1): 1,
        }

    def test_unit_recorded(self):
        fact = factor(ModPoly(7, (3, 0, 3)))
        assert fact.unit == 3
        assert fact.product() == ModPoly(7, (3, 0, 3))

    def test_constant_polynomial(self):
        fact = factor(ModPoly(5, (4,)))
        assert fact.unit == 4 and fact.factors == ()

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            factor(ModPoly(5, ()))

    def test_json_shape(self):
        doc = factor(ModPoly(5, (1, 0, 1)), seed=9).to_json_dict()
        assert doc["p"] == 5 and doc["seed"] == 9
        assert doc["factors"] == [
            {"coeffs": [2, 1], "mult": 1},
            {"coeffs": [3, 1], "mult": 1},
        ]


class TestIsIrreducible:
    def test_examples(self):
        assert is_irreducible(ModPoly(7, (4, 6, 6, 1)))  # the cubic witness mod 7
        assert not is_irreducible(ModPoly(5, (1, 0, 1)))
        assert is_irreducible(ModPoly(2, (1, 1)))

    def test_against_exhaustive_search(self):
        rng = random.Random(31)
        for p in (2, 3, 5):
            for _ in range(60):
                f = random_mod_poly(rng, p, max_degree=4)
                if f.degree < 1:
                    continue
                assert is_irreducible(f) == brute_irreducible(f.monic()), (p, f.coeffs)

    def test_degree_zero_not_irreducible(self):
        assert not is_irreducible(ModPoly(3, (2,)))

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            is_irreducible(ModPoly(3, ()))


class TestCyclotomic:
    def test_examples(self):
        assert cyclotomic(1) == IntPoly((-1, 1))
        assert cyclotomic(4) == IntPoly((1, 0, 1))
        assert cyclotomic(12) == IntPoly((1, 0, -1, 0, 1))

    def test_degree_and_content(self):
        for m in range(1, 40):
            phi_m = cyclotomic(m)
            assert phi_m.degree == euler_phi(m)
            assert phi_m.leading == 1
            assert phi_m.content_is_one()

    def test_divides_x_m_minus_1(self):
        for m in range(1, 40):
            x_m = IntPoly.monomial(m, 1) - IntPoly.one()
            assert x_m.div_exact(cyclotomic(m)) * cyclotomic(m) == x_m

    def test_product_over_divisors(self):
        from darcais.arith import divisors

        for m in (6, 12, 30):
            prod = IntPoly.one()
            for d in divisors(m):
                prod = prod * cyclotomic(d)
            assert prod == IntPoly.monomial(m, 1) - IntPoly.one()

    def test_irreducible_mod_full_order_prime(self):
        for m, q in ((5, 2), (7, 3), (9, 2), (11, 2), (10, 7)):
            assert multiplicative_order(q, m) == euler_phi(m)
            assert is_irreducible(reduce_mod(cyclotomic(m), q))


class TestAPolyMod:
    def test_cross_path_equality(self, sigma_g, identity_g):
        for g in (sigma_g, identity_g):
            for p in (2, 3, 5, 7, 11):
                for n in range(41):
                    assert a_poly_mod(g, n, p) == reduce_mod(a_poly(g, n), p)

    def test_prime_index_form(self, sigma_g, identity_g):
        for g in (sigma_g, identity_g, random_table(7, 15)):
            for p in (2, 3, 5, 7, 11, 13):
                want = ModPoly(p, [0, -g(p)] + [0] * (p - 2) + [1])
                assert a_poly_mod(g, p, p) == want

    def test_identity_power_collapse(self, identity_g):
        assert a_poly_mod(identity_g, 10, 5) == ModPoly(5, [0] * 10 + [1])

    def test_splitting_recursion(self, sigma_g, identity_g):
        for g in (sigma_g, identity_g):
            for p in (2, 3, 5, 7):
                ap = a_poly_mod(g, p, p)
                for ell in range(6):
                    for r in range(p):
                        lhs = a_poly_mod(g, ell * p + r, p)
                        rhs = a_poly_mod(g, r, p) * ap**ell
                        assert lhs == rhs

    def test_linear_split_iff_nice_g(self):
        # sweep the residue of g at p: all factors linear iff residue is 0 or 1
        for p in (2, 3, 5, 7, 11, 13):
            for residue in range(p):
                table = [1] + [1] * (p - 2) + [residue + p]
                g = ArithmeticFunction.from_table(table, name=f"g{p}_{residue}")
                fact = factor(a_poly_mod(g, p, p))
                all_linear = fact.max_factor_degree() <= 1
                assert all_linear == (residue in (0, 1)), (p, residue)

    def test_wilson_linear_coefficient(self, sigma_g, identity_g):
        for g in (sigma_g, identity_g, random_table(12, 15)):
            for p in (2, 3, 5, 7, 11, 13):
                assert a_poly_mod(g, p, p).coeff(1) == (-g(p)) % p

    def test_table_exhaustion_is_range_error(self):
        from darcais import TableExhaustedError

        g = ArithmeticFunction.from_table([1, 2, 3])
        with pytest.raises(TableExhaustedError):
            a_poly_mod(g, 10, 5)


class TestAgainstSympy:
    """sympy's factorizer as an extra independent oracle (tests only)."""

    def test_factor_matches_sympy(self):
        import sympy

        x = sympy.Symbol("x")
        rng = random.Random(314)
        for _ in range(50):
            p = rng.choice((2, 3, 5, 7, 11, 13))
            f = random_mod_poly(rng, p, max_degree=9)
            if f.degree < 1:
                continue
            mine = factor(f, seed=1)
            spoly = sympy.Poly(list(reversed(f.coeffs)), x, modulus=p)
            unit, pairs = spoly.factor_list()
            theirs = sorted(
                (
                    ModPoly(p, [int(c) % p for c in reversed(q.all_coeffs())]).sort_key(),
                    mult,
                )
                for q, mult in pairs
            )
            ours = sorted((q.sort_key(), mult) for q, mult in mine.factors)
            assert ours == theirs, (p, f.coeffs)
            assert int(unit) % p == mine.unit


class TestLargeModulus:
    def test_single_precision_limit_boundary(self):
        p = 2**31 - 1  # Mersenne prime, the largest allowed modulus
        inert = ModPoly(p, (1, 0, 1))  # p = 3 mod 4, so X^2 + 1 stays prime
        assert is_irreducible(inert)
        assert factor(inert).degrees() == [2]
        split = ModPoly(p, (-2 % p, 0, 1))  # 2 is a square mod p (p = 7 mod 8)
        fact = factor(split)
        assert fact.degrees() == [1, 1]
        assert fact.product() == split
