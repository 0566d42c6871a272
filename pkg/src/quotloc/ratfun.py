"""Canonical univariate rational functions over exact rationals.

Polynomials are dense low-to-high coefficient tuples.  A
:class:`UnivarRatFun` always keeps ``gcd(numerator, denominator) = 1`` with a
monic denominator, so equality of canonical forms is plain field equality.

The gcd goes through the integers: clear denominators, take primitive parts
and run the heuristic evaluation gcd (verified by exact trial division),
falling back to a primitive remainder sequence when the heuristic gives up.
"""

from __future__ import annotations

import math
from typing import Iterable

from .chars import PoleAtPoint
from .rational import ONE as RAT_ONE, ZERO as RAT_ZERO, rational


class ZeroDenominator(ZeroDivisionError):
    """A denominator specialized to the zero polynomial."""


# ---------------------------------------------------------------------------
# dense polynomial helpers (tuples of exact rationals, low degree first)
# ---------------------------------------------------------------------------


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def poly_add(a, b) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def poly_neg(a) -> tuple:
    return tuple(-c for c in a)


def poly_mul(a, b) -> tuple:
    if not a or not b:
        return ()
    out = [RAT_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return _trim(out)


def poly_divmod(a, b) -> tuple:
    """Exact quotient and remainder over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [RAT_ZERO] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        if not c:
            continue
        q[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    return _trim(q), _trim(a[: len(b) - 1])


def poly_eval(a, x):
    value = RAT_ZERO
    for c in reversed(a):
        value = value * x + c
    return value


def _to_int_primitive(a) -> tuple:
    """Scale a rational polynomial to a primitive integer polynomial."""
    if not a:
        return ()
    denom_lcm = 1
    for c in a:
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    ints = [int(c.numerator) * (denom_lcm // int(c.denominator)) for c in a]
    content = 0
    for c in ints:
        content = math.gcd(content, c)
    return tuple(c // content for c in ints)


def _zz_divmod_exact(a, b):
    """Quotient of integer polynomials when the division is exact, else None."""
    if len(a) < len(b):
        return None
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        head = a[i + len(b) - 1]
        if head % lead:
            return None
        c = head // lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    if any(a[: len(b) - 1]):
        return None
    return q


def _zz_primitive(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return [c // g for c in a] if g > 1 else list(a)


def _zz_interpolate(value, xi):
    """Balanced base-``xi`` digits of an integer, as polynomial coefficients."""
    coeffs = []
    while value:
        digit = value % xi
        if 2 * digit > xi:
            digit -= xi
        coeffs.append(digit)
        value = (value - digit) // xi
    return coeffs


def _zz_heu_gcd(f, g):
    """Heuristic gcd of primitive integer polynomials; None when it fails."""
    b1 = max(abs(c) for c in f)
    b2 = max(abs(c) for c in g)
    xi = 2 * min(b1, b2) + 29
    for _ in range(6):
        fx = sum(c * xi**i for i, c in enumerate(f))
        gx = sum(c * xi**i for i, c in enumerate(g))
        if fx and gx:
            h = _zz_interpolate(math.gcd(fx, gx), xi)
            if h:
                h = _zz_primitive(h)
                if _zz_divmod_exact(f, h) is not None and _zz_divmod_exact(g, h) is not None:
                    return h
        xi = xi * 73794 // 27011  # next evaluation point, ~ xi * e
    return None


def _zz_subresultant_gcd(f, g):
    """Primitive-remainder-sequence gcd of primitive integer polynomials."""
    while g:
        # pseudo-remainder of f by g
        a = list(f)
        lead = g[-1]
        delta = len(a) - len(g)
        if delta < 0:
            f, g = g, f
            continue
        a = [c * lead ** (delta + 1) for c in a]
        for i in range(delta, -1, -1):
            c = a[i + len(g) - 1]
            if c % lead:
                raise ArithmeticError("pseudo-division broke")  # pragma: no cover
            q = c // lead
            for j, bj in enumerate(g):
                a[i + j] -= q * bj
        rem = a[: len(g) - 1]
        while rem and not rem[-1]:
            rem.pop()
        f, g = g, _zz_primitive(rem) if rem else []
    return _zz_primitive(list(f))


def poly_gcd(a, b) -> tuple:
    """Monic greatest common divisor of two rational polynomials."""
    a, b = _trim(a), _trim(b)
    if not a:
        return _monic(b)
    if not b:
        return _monic(a)
    if len(a) == 1 or len(b) == 1:
        return (RAT_ONE,)
    fa, fb = _to_int_primitive(a), _to_int_primitive(b)
    h = _zz_heu_gcd(fa, fb)
    if h is None:
        h = _zz_subresultant_gcd(fa, fb)
    return _monic(tuple(rational(c) for c in h))


def _monic(a) -> tuple:
    if not a:
        return ()
    lead = a[-1]
    if lead == 1:
        return tuple(a)
    return tuple(c / lead for c in a)


def poly_str(a, var: str = "x") -> str:
    if not a:
        return "0"
    bits = []
    for i, c in enumerate(a):
        if not c:
            continue
        if i == 0:
            bits.append(str(c))
        elif i == 1:
            bits.append(f"{c}*{var}" if c != 1 else var)
        else:
            bits.append(f"{c}*{var}^{i}" if c != 1 else f"{var}^{i}")
    return " + ".join(bits)


class UnivarRatFun:
    """A rational function in one variable, held in canonical form.

    Canonical means: numerator and denominator coprime, denominator monic
    and nonzero.  The zero function is ``0/1``.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, numerator: Iterable, denominator: Iterable = (RAT_ONE,)):
        num = _trim(rational(c) for c in numerator)
        den = _trim(rational(c) for c in denominator)
        if not den:
            raise ZeroDenominator("rational function with zero denominator")
        if not num:
            self._num, self._den = (), (RAT_ONE,)
            return
        g = poly_gcd(num, den)
        if len(g) > 1:
            num, _ = poly_divmod(num, g)
            den, _ = poly_divmod(den, g)
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        self._num, self._den = num, den

    @classmethod
    def zero(cls) -> "UnivarRatFun":
        return cls(())

    @classmethod
    def one(cls) -> "UnivarRatFun":
        return cls((RAT_ONE,))

    @classmethod
    def constant(cls, value) -> "UnivarRatFun":
        return cls((rational(value),))

    @classmethod
    def x(cls) -> "UnivarRatFun":
        return cls((RAT_ZERO, RAT_ONE))

    @property
    def numerator(self) -> tuple:
        return self._num

    @property
    def denominator(self) -> tuple:
        return self._den

    @property
    def is_zero(self) -> bool:
        return not self._num

    @property
    def is_constant(self) -> bool:
        return len(self._num) <= 1 and self._den == (RAT_ONE,)

    def _coerce(self, other):
        if isinstance(other, UnivarRatFun):
            return other
        if isinstance(other, int) or type(other) is type(RAT_ONE):
            return UnivarRatFun.constant(other)
        try:
            return UnivarRatFun.constant(rational(other))
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        num = poly_add(
            poly_mul(self._num, other._den), poly_mul(other._num, self._den)
        )
        return UnivarRatFun(num, poly_mul(self._den, other._den))

    __radd__ = __add__

    def __neg__(self):
        out = UnivarRatFun.__new__(UnivarRatFun)
        out._num, out._den = poly_neg(self._num), self._den
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return UnivarRatFun(
            poly_mul(self._num, other._num), poly_mul(self._den, other._den)
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return UnivarRatFun(
            poly_mul(self._num, other._den), poly_mul(self._den, other._num)
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            if self.is_zero:
                raise ZeroDivisionError("0 cannot be raised to a negative power")
            base, k = UnivarRatFun.one() / self, -k
        else:
            base = self
        out = UnivarRatFun.one()
        for _ in range(k):
            out = out * base
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def is_pole(self, x) -> bool:
        return not poly_eval(self._den, rational(x))

    def __call__(self, x):
        """Exact value at ``x``; raises :class:`PoleAtPoint` on a pole."""
        x = rational(x)
        den = poly_eval(self._den, x)
        if not den:
            raise PoleAtPoint(f"pole of rational function at {x}")
        return poly_eval(self._num, x) / den

    def __repr__(self) -> str:
        num = poly_str(self._num)
        if self._den == (RAT_ONE,):
            return num
        return f"({num})/({poly_str(self._den)})"
