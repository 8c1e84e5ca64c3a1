import random
from fractions import Fraction

import pytest

from kippenhahn.exactnum import (
    AlgebraicReal,
    ComplexInterval,
    GaussianRational,
    ParseError,
    RationalInterval,
    format_rational,
    parse_gaussian,
    parse_rational,
    simplest_in_interval,
    sturm_count,
)


class TestRationals:
    def test_addition(self):
        assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)

    def test_inverse_pair(self):
        assert Fraction(3, 4) * Fraction(-4, 3) == -1

    def test_division_from_curve_coefficient(self):
        # hand computation: (55/64) / 5 = 11/64
        assert Fraction(55, 64) / 5 == Fraction(11, 64)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Fraction(1, 2) / Fraction(0)

    def test_canonical_form(self):
        assert Fraction(6, -4) == Fraction(-3, 2)
        assert Fraction(6, -4).denominator == 2
        assert Fraction(0, 7) == Fraction(0, 1)

    def test_parse_and_format(self):
        assert parse_rational(" 5/6 ") == Fraction(5, 6)
        assert parse_rational("-3") == -3
        assert format_rational(Fraction(10, 4)) == "5/2"
        with pytest.raises(ParseError):
            parse_rational("5//6")

    def test_field_axioms_random(self):
        rng = random.Random(7)
        for _ in range(200):
            a, b, c = (
                Fraction(rng.randint(-50, 50), rng.randint(1, 30)) for _ in range(3)
            )
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c


class TestGaussianRational:
    def test_parse_examples(self):
        assert parse_gaussian("1/2-2/3*i") == GaussianRational(
            Fraction(1, 2), Fraction(-2, 3)
        )
        assert parse_gaussian("i") == GaussianRational(0, 1)
        assert parse_gaussian("-i") == GaussianRational(0, -1)
        assert parse_gaussian("3*i") == GaussianRational(0, 3)
        assert parse_gaussian(" 2 ") == GaussianRational(2, 0)
        assert parse_gaussian("3+i") == GaussianRational(3, 1)
        with pytest.raises(ParseError):
            parse_gaussian("2+*i")
        with pytest.raises(ParseError):
            parse_gaussian("")

    def test_str_roundtrip(self):
        rng = random.Random(3)
        for _ in range(100):
            z = GaussianRational(
                Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
            )
            assert parse_gaussian(str(z)) == z

    def test_conjugation_involution(self):
        rng = random.Random(11)
        for _ in range(50):
            z = GaussianRational(rng.randint(-9, 9), rng.randint(-9, 9))
            assert z.conjugate().conjugate() == z

    def test_field_ops(self):
        rng = random.Random(13)
        for _ in range(100):
            a = GaussianRational(
                Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9))
            )
            b = GaussianRational(
                Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
                Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
            )
            c = GaussianRational(rng.randint(-9, 9), rng.randint(-9, 9))
            assert a * (b + c) == a * b + a * c
            if not b.is_zero:
                assert (a / b) * b == a
        assert GaussianRational(0, 1) * GaussianRational(0, 1) == -1

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GaussianRational(1) / GaussianRational(0)


class TestRationalInterval:
    def test_order_validation(self):
        with pytest.raises(ValueError):
            RationalInterval(1, 0)

    def test_width_exact(self):
        iv = RationalInterval(Fraction(1, 3), Fraction(1, 2))
        assert iv.width == Fraction(1, 6)

    def test_arithmetic_encloses(self):
        rng = random.Random(5)
        for _ in range(200):
            lo1 = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
            lo2 = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
            iv1 = RationalInterval(lo1, lo1 + Fraction(rng.randint(0, 10), 7))
            iv2 = RationalInterval(lo2, lo2 + Fraction(rng.randint(0, 10), 7))
            p1 = iv1.lo + (iv1.hi - iv1.lo) * Fraction(rng.randint(0, 8), 8)
            p2 = iv2.lo + (iv2.hi - iv2.lo) * Fraction(rng.randint(0, 8), 8)
            assert (iv1 + iv2).contains(p1 + p2)
            assert (iv1 - iv2).contains(p1 - p2)
            assert (iv1 * iv2).contains(p1 * p2)
            assert (iv1**3).contains(p1**3)
            assert (iv1**4).contains(p1**4)

    def test_even_power_tight_at_zero(self):
        iv = RationalInterval(-1, 2)
        sq = iv**2
        assert sq.lo == 0 and sq.hi == 4

    def test_reciprocal(self):
        iv = RationalInterval(Fraction(1, 2), 2)
        r = iv.reciprocal()
        assert r.lo == Fraction(1, 2) and r.hi == 2
        with pytest.raises(ZeroDivisionError):
            RationalInterval(-1, 1).reciprocal()

    def test_complex_interval_mul(self):
        z = ComplexInterval(RationalInterval(1, 2), RationalInterval(-1, 1))
        w = z * z
        # midpoint-of-box product must land inside
        assert w.re.contains(Fraction(9, 4) - 0) or w.re.contains(Fraction(1))
        assert (z - z).contains_zero()


class TestSturmCount:
    def test_sqrt2(self):
        poly = (-2, 0, 1)
        assert sturm_count(poly, 0, 2) == 1
        assert sturm_count(poly, -2, 2) == 2
        assert sturm_count(poly, 2, 3) == 0


class TestSimplestInInterval:
    def test_examples(self):
        assert simplest_in_interval(Fraction(14, 10), Fraction(15, 10)) == Fraction(3, 2)
        assert simplest_in_interval(Fraction(3, 10), Fraction(5, 10)) == Fraction(1, 2)
        assert simplest_in_interval(Fraction(3, 10), Fraction(49, 100)) == Fraction(1, 3)
        assert simplest_in_interval(Fraction(-1, 2), Fraction(1, 3)) == 0
        assert simplest_in_interval(Fraction(7), Fraction(7)) == 7

    def test_simplest_is_inside(self):
        rng = random.Random(23)
        for _ in range(200):
            lo = Fraction(rng.randint(-400, 400), rng.randint(1, 100))
            hi = lo + Fraction(rng.randint(1, 50), rng.randint(1, 100))
            s = simplest_in_interval(lo, hi)
            assert lo <= s <= hi


def bisect_oracle(poly, lo, hi, eps):
    """Independent float bisection on an ascending-coefficient polynomial."""

    def ev(x):
        acc = 0.0
        for c in reversed(poly):
            acc = acc * x + c
        return acc

    flo = ev(lo)
    while hi - lo > eps:
        mid = (lo + hi) / 2
        v = ev(mid)
        if (v > 0) == (flo > 0):
            lo, flo = mid, v
        else:
            hi = mid
    return (lo + hi) / 2


class TestAlgebraicReal:
    def test_sqrt2_refine(self):
        a = AlgebraicReal((-2, 0, 1), RationalInterval(1, 2))
        iv = a.refine(Fraction(1, 100))
        assert iv.width <= Fraction(1, 100)
        assert a.interval.contains_interval(iv)
        target = bisect_oracle([-2.0, 0.0, 1.0], 1.0, 2.0, 1e-12)
        assert iv.contains(Fraction(target).limit_denominator(10**9))

    def test_linear_polynomial(self):
        a = AlgebraicReal((-3, 1), RationalInterval(0, 5))
        iv = a.refine(Fraction(1, 10))
        assert iv.contains(3)

    def test_omega_polynomial(self):
        # omega satisfies u^2 - 11u - 1 = 0 with u = omega^6, hence
        # omega^12 - 11 omega^6 - 1 = 0; the paper quotes omega ~ 1.49
        poly = (-1, 0, 0, 0, 0, 0, -11, 0, 0, 0, 0, 0, 1)
        a = AlgebraicReal(poly, RationalInterval(1, 2))
        iv = a.refine(Fraction(1, 1000))
        target = bisect_oracle([float(c) for c in poly], 1.0, 2.0, 1e-13)
        assert abs(float(iv.mid) - target) < 2e-3
        assert 1.49 <= float(iv.mid) <= 1.50

    def test_nested_chain(self):
        a = AlgebraicReal((-2, 0, 1), RationalInterval(0, 3))
        eps = Fraction(1, 4)
        prev = a.interval
        for _ in range(10):
            iv = a.refine(eps)
            assert prev.contains_interval(iv)
            assert iv.width <= eps
            prev = iv
            eps /= 2

    def test_sturm_certificate_is_one(self):
        a = AlgebraicReal((-2, 0, 1), RationalInterval(1, 2))
        assert sturm_count(a.poly, a.interval.lo, a.interval.hi) == 1

    def test_rejects_two_roots(self):
        with pytest.raises(ValueError):
            AlgebraicReal((-2, 0, 1), RationalInterval(-2, 2))

    def test_rejects_nonsquarefree(self):
        with pytest.raises(ValueError):
            AlgebraicReal((1, 2, 1), RationalInterval(-2, 0))  # (t+1)^2

    def test_endpoint_root_collapses(self):
        a = AlgebraicReal((-9, 0, 1), RationalInterval(3, 5))
        assert a.is_rational and a.as_rational() == 3
