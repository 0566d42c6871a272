"""Canonical univariate rational functions: normal form, field arithmetic
and agreement with pointwise evaluation."""

import pytest
from hypothesis import given, settings

from quotloc.chars import PoleAtPoint
from quotloc.rational import rational
from quotloc.ratfun import (
    UnivarRatFun,
    ZeroDenominator,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_mul,
)

from strategies import small_polys


class TestPolyHelpers:
    @given(small_polys(), small_polys())
    def test_divmod_inverts_mul(self, a, b):
        from quotloc.ratfun import _trim

        a, b = _trim(a), _trim(b)
        if not b:
            return
        q, r = poly_divmod(poly_mul(a, b), b)
        assert r == ()
        assert q == a

    @given(small_polys(), small_polys(), small_polys())
    @settings(max_examples=60)
    def test_gcd_divides_both(self, a, b, c):
        from quotloc.ratfun import _trim

        # plant a common factor c in both inputs
        a, b, c = _trim(a), _trim(b), _trim(c)
        if not (a and b and c):
            return
        f, g = poly_mul(a, c), poly_mul(b, c)
        h = poly_gcd(f, g)
        assert poly_divmod(f, h)[1] == ()
        assert poly_divmod(g, h)[1] == ()
        # the planted factor divides the gcd
        assert poly_divmod(h, poly_gcd(h, c))[1] == ()
        assert len(poly_gcd(h, c)) == len(c)  # c (made monic) divides h
        assert h[-1] == 1  # monic

    def test_gcd_of_coprime(self):
        assert poly_gcd((1, 1), (rational(-1), rational(1))) == (rational(1),)


class TestCanonicalForm:
    def test_reduction_and_monic_denominator(self):
        # (2x^2 - 2) / (4x + 4) -> (x - 1)/2
        f = UnivarRatFun([-2, 0, 2], [4, 4])
        assert f.numerator == (rational(-1, 2), rational(1, 2))
        assert f.denominator == (rational(1),)

    def test_zero(self):
        assert UnivarRatFun([0, 0]).is_zero
        assert UnivarRatFun.zero() == UnivarRatFun([0])

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDenominator):
            UnivarRatFun([1], [0])

    def test_equality_is_field_equality(self):
        assert UnivarRatFun([1, 1], [2]) == UnivarRatFun([3, 3], [6])
        assert UnivarRatFun([0, 1], [1, 1]) != UnivarRatFun([0, 1])


class TestFieldArithmetic:
    @given(small_polys(), small_polys(), small_polys(), small_polys())
    @settings(max_examples=40)
    def test_add_mul_against_evaluation(self, na, da, nb, db):
        if not any(da) or not any(db):
            return
        f = UnivarRatFun(na, da)
        g = UnivarRatFun(nb, db)
        s, p = f + g, f * g
        for k in range(20):
            x = rational(k + 2, 7)
            if f.is_pole(x) or g.is_pole(x):
                continue
            assert not s.is_pole(x) and s(x) == f(x) + g(x)
            assert not p.is_pole(x) and p(x) == f(x) * g(x)

    @given(small_polys(), small_polys())
    @settings(max_examples=40)
    def test_division_roundtrip(self, na, nb):
        f = UnivarRatFun(na)
        g = UnivarRatFun(nb)
        if g.is_zero:
            with pytest.raises(ZeroDivisionError):
                f / g
            return
        assert (f / g) * g == f

    def test_pow(self):
        x = UnivarRatFun.x()
        assert (1 - x) ** 2 == UnivarRatFun([1, -2, 1])
        assert (1 - x) ** -1 == UnivarRatFun([1], [1, -1])

    def test_scalar_mixing(self):
        x = UnivarRatFun.x()
        assert rational(1, 2) * x + 1 == UnivarRatFun([1, rational(1, 2)])

    def test_call_and_pole(self):
        f = UnivarRatFun([1], [-1, 1])  # 1/(x-1)
        assert f(3) == rational(1, 2)
        assert f.is_pole(1)
        with pytest.raises(PoleAtPoint):
            f(1)

    @given(small_polys())
    def test_eval_matches_horner(self, coeffs):
        f = UnivarRatFun(coeffs)
        x = rational(5, 3)
        assert f(x) == poly_eval(tuple(rational(c) for c in coeffs), x)


class TestBigGcdStress:
    def test_heuristic_on_structured_product(self):
        # products of cyclotomic-like factors, the shape the certificate sums produce
        x = UnivarRatFun.x()
        f = UnivarRatFun.one()
        for a in range(1, 7):
            f = f * (1 - rational(a, a + 1) * x**a)
        g = f * (1 - 5 * x**3)
        h = f * (1 + 7 * x**2)
        quotient = g / h
        for k in range(5):
            p = rational(2 * k + 3, 11)
            if not quotient.is_pole(p) and not h.is_pole(p) and h(p):
                assert quotient(p) == g(p) / h(p)
