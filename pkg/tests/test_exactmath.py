from __future__ import annotations

import random
from fractions import Fraction

import pytest
from gmpy2 import mpq, mpz
from hypothesis import given, settings
from hypothesis import strategies as st

from mayacycles.exactmath import (
    ExactScalar,
    Poly,
    RadicandMismatch,
    RatFunc,
    Z,
    bareiss_det,
    common_denominator,
    int_det,
    newton_to_monomial,
    poly_gcd,
    poly_lcm,
    scalar_from_json,
    scalar_to_json,
    sqrt_rational,
    wronskian,
    wronskian_interpolated,
)
from mayacycles.exactmath.kronecker import exact_quotient_ints, mul_ints, pack, unpack
from mayacycles.exactmath.poly import _euclid_gcd

small = st.integers(-50, 50)
coeff_lists = st.lists(small, min_size=0, max_size=8)


def P(*cs) -> Poly:
    return Poly.from_ints(cs)


def schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


class TestScalar:
    def test_sqrt_of_square_is_rational(self):
        assert sqrt_rational(mpq(9, 4)) == mpq(3, 2)

    def test_sqrt_two_squares_to_two(self):
        r = sqrt_rational(2)
        assert r * r == 2
        assert isinstance(r, ExactScalar)

    def test_sqrt_extracts_square_factor(self):
        assert sqrt_rational(12) == 2 * sqrt_rational(3)

    def test_mixed_radicands_rejected(self):
        with pytest.raises(RadicandMismatch):
            sqrt_rational(2) + sqrt_rational(3)

    def test_inverse(self):
        x = 1 + sqrt_rational(3)
        assert x * x.inverse() == 1

    def test_json_round_trip(self):
        for v in (mpq(-7, 3), 1 + sqrt_rational(mpq(2, 3))):
            assert scalar_from_json(scalar_to_json(v)) == v


class TestPoly:
    def test_trailing_zeros_trimmed(self):
        assert P(1, 2, 0, 0) == P(1, 2)
        assert P(1, 2, 0).degree == 1

    def test_zero_polynomial(self):
        assert Poly().is_zero()
        assert not Poly()

    def test_mixed_scalar_types(self):
        p = Poly([1, Fraction(1, 2), "3/4", mpz(2), mpq(1, 3)])
        assert p.coeffs[2] == mpq(3, 4)

    def test_derivative(self):
        assert P(1, 1, 1, 1).derivative() == P(1, 2, 3)
        assert P(5).derivative().is_zero()

    def test_divmod(self):
        q, r = divmod(P(-1, 0, 0, 1), P(-1, 1))
        assert q == P(1, 1, 1) and r.is_zero()

    def test_exact_div_rejects_remainder(self):
        with pytest.raises(ArithmeticError):
            P(1, 0, 1).exact_div(P(1, 1))

    def test_evaluation(self):
        assert P(1, 2, 3)(2) == 17

    def test_compose_scale_over_extension(self):
        c = sqrt_rational(2)
        p = P(0, 0, 1).compose_scale(c)
        assert p == P(0, 0, 2)

    def test_proportional(self):
        assert P(2, 4).proportional_to(P(-1, -2))
        assert not P(2, 4).proportional_to(P(1, 3))

    def test_format(self):
        assert str(P(-1, 0, 3)) == "3*z^2 - 1"

    def test_json_round_trip(self):
        p = Poly([mpq(1, 3), 0, -2])
        assert Poly.from_json(p.to_json()) == p

    @given(coeff_lists, coeff_lists)
    def test_product_matches_schoolbook(self, a, b):
        expected = schoolbook(a, b) if a and b else []
        assert P(*a) * P(*b) == P(*expected)

    @given(coeff_lists, coeff_lists, coeff_lists)
    def test_ring_laws(self, a, b, c):
        x, y, z = P(*a), P(*b), P(*c)
        assert x * (y + z) == x * y + x * z
        assert (x - y) + y == x

    @given(coeff_lists, coeff_lists)
    def test_product_rule(self, a, b):
        x, y = P(*a), P(*b)
        assert (x * y).derivative() == x.derivative() * y + x * y.derivative()

    def test_large_product_uses_packed_kernel(self):
        rng = random.Random(7)
        a = [rng.randint(-10**30, 10**30) for _ in range(60)]
        b = [rng.randint(-10**30, 10**30) for _ in range(60)]
        assert list((P(*a) * P(*b)).coeffs) == [mpq(c) for c in schoolbook(a, b)]


class TestKronecker:
    def test_pack_unpack_round_trip(self):
        rng = random.Random(1)
        for _ in range(100):
            ints = [mpz(rng.randint(-1000, 1000)) for _ in range(rng.randint(1, 40))]
            assert unpack(pack(ints, 12), 12, len(ints)) == ints

    def test_unpack_reports_overflow(self):
        assert unpack(mpz(1) << 80, 8, 2) is None

    def test_mul_and_quotient(self):
        rng = random.Random(2)
        for _ in range(100):
            a = [mpz(rng.randint(-10**12, 10**12)) for _ in range(rng.randint(1, 30))]
            b = [mpz(rng.randint(-10**12, 10**12)) for _ in range(rng.randint(1, 30))]
            a[-1] = a[-1] or mpz(1)
            b[-1] = b[-1] or mpz(1)
            prod = mul_ints(a, b)
            assert prod == schoolbook(a, b)
            assert exact_quotient_ints(prod, b) == a

    def test_quotient_detects_non_divisibility(self):
        assert exact_quotient_ints([mpz(1), mpz(0), mpz(1)], [mpz(1), mpz(1)]) is None


class TestGcd:
    def test_common_factor(self):
        g = poly_gcd(P(-1, 0, 1), P(1, 2, 1))
        assert g == P(1, 1)

    def test_coprime(self):
        assert poly_gcd(P(1, 0, 1), P(1, 1)) == P(1)

    def test_zero_input(self):
        assert poly_gcd(Poly(), P(2, 4)) == P(1, 2).monic()

    def test_lcm(self):
        assert poly_lcm(P(-1, 1), P(1, 1)) == P(-1, 0, 1)

    def test_heuristic_agrees_with_euclid(self):
        rng = random.Random(5)
        for _ in range(60):
            c = P(*[rng.randint(-9, 9) for _ in range(rng.randint(1, 6))])
            a = P(*[rng.randint(-99, 99) for _ in range(rng.randint(1, 12))])
            b = P(*[rng.randint(-99, 99) for _ in range(rng.randint(1, 12))])
            if c.is_zero() or a.is_zero() or b.is_zero():
                continue
            assert poly_gcd(a * c, b * c) == _euclid_gcd(a * c, b * c)


class TestRatFunc:
    def test_reduced_with_monic_denominator(self):
        f = RatFunc(P(-2, 0, 2), P(2, 2))
        assert f.num == P(-1, 1) and f.den == P(1)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc(P(1), Poly())

    def test_arithmetic(self):
        f = RatFunc(P(1), P(0, 1))
        assert f + f == RatFunc(P(2), P(0, 1))
        assert (f * RatFunc(P(0, 1))).is_polynomial()

    def test_logderiv(self):
        p = P(1, 0, 1)
        assert RatFunc.from_poly(p).logderiv() == RatFunc(P(0, 2), p)

    def test_in_square(self):
        f = RatFunc(P(1, 0, 1), P(0, 0, 1))
        assert f.in_square() == RatFunc(P(1, 1), P(0, 1))

    def test_in_square_rejects_odd(self):
        with pytest.raises(ValueError):
            RatFunc(P(0, 1)).in_square()

    def test_common_denominator(self):
        fs = [RatFunc(P(1), P(0, 1)), RatFunc(P(1), P(1, 1)), RatFunc(P(3))]
        D, nums = common_denominator(fs)
        for f, n in zip(fs, nums):
            assert RatFunc(n, D) == f

    def test_common_denominator_uses_a_dividing_hint(self):
        fs = [RatFunc(P(1), P(0, 1)), RatFunc(P(2), P(1, 1))]
        hint = P(0, 1) * P(1, 1) * P(2, 1)
        D, nums = common_denominator(fs, hint)
        assert D == hint.monic()
        for f, n in zip(fs, nums):
            assert RatFunc(n, D) == f

    def test_common_denominator_ignores_a_bad_hint(self):
        fs = [RatFunc(P(1), P(0, 1)), RatFunc(P(2), P(1, 1))]
        D, nums = common_denominator(fs, P(0, 1))
        assert D == P(0, 1) * P(1, 1)
        for f, n in zip(fs, nums):
            assert RatFunc(n, D) == f

    def test_json_round_trip(self):
        f = RatFunc(P(1, 2), P(3, 0, 1))
        assert RatFunc.from_json(f.to_json()) == f


class TestDeterminants:
    def test_bareiss_matches_cofactor_expansion(self):
        m = [[P(1, 1), P(2)], [P(0, 1), P(3, 0, 1)]]
        assert bareiss_det(m) == P(1, 1) * P(3, 0, 1) - P(2) * P(0, 1)

    def test_bareiss_singular(self):
        assert bareiss_det([[P(1), P(2)], [P(2), P(4)]]).is_zero()

    def test_int_det(self):
        assert int_det([[2, 1, 0], [1, 3, 1], [0, 1, 4]]) == 18
        assert int_det([[0, 1], [1, 0]]) == -1

    def test_wronskian_of_monomials(self):
        assert wronskian([P(1), P(0, 1), P(0, 0, 1)]) == P(2)

    def test_interpolated_wronskian_matches_bareiss(self):
        rng = random.Random(3)
        for _ in range(30):
            ps = [P(*[rng.randint(-5, 5) for _ in range(rng.randint(2, 7))]) for _ in range(3)]
            direct = wronskian(ps)
            if direct.is_zero():
                continue
            assert wronskian_interpolated(ps, direct.degree) == direct

    def test_newton_interpolation(self):
        xs = [0, 1, 2, 3]
        ys = [P(1, -2, 0, 3)(x) for x in xs]
        assert Poly(newton_to_monomial(xs, ys)) == P(1, -2, 0, 3)

    def test_z_is_identity(self):
        assert Z == P(0, 1)
