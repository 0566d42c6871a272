"""Truncated q-series over exact scalars and the partition functions.

Coefficients of the localized series are exact rational numbers obtained by
evaluating every fixed point's localization weight at a point assignment;
the closed forms are plethystic exponentials of one explicit single-box
term.  Equality of the two is the central claim the package verifies, and
it holds coefficient by coefficient as exact rational identities.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable

from .chars import (
    Monomial,
    coh_euler,
    k_euler,
    substitute_halfweights,
    t_var,
    u_var,
)
from .parallel import parallel_map
from .points import EvalContext, PointAssignment, rational_stream
from .rational import ONE as RAT_ONE, ZERO as RAT_ZERO, rational
from .ratfun import UnivarRatFun, ZeroDenominator
from .vertex import Ranks, contribution, fixed_points, vertex_term


class QSeries:
    """A power series in ``q`` truncated at a fixed order, with exact
    scalar coefficients (rationals, or any exact field element)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable):
        self._coeffs = tuple(coeffs)
        if not self._coeffs:
            raise ValueError("a truncated series needs at least the q^0 term")

    @classmethod
    def constant(cls, value, order: int) -> "QSeries":
        return cls((value,) + (RAT_ZERO,) * order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls.constant(RAT_ONE, order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    def coefficient(self, n: int):
        return self._coeffs[n]

    def _check(self, other: "QSeries"):
        if self.order != other.order:
            raise ValueError("truncation orders differ")

    def __add__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        return QSeries(a + b for a, b in zip(self._coeffs, other._coeffs))

    def __sub__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        return QSeries(a - b for a, b in zip(self._coeffs, other._coeffs))

    def __mul__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        n = self.order
        out = [RAT_ZERO] * (n + 1)
        for i, a in enumerate(self._coeffs):
            for j in range(0, n - i + 1):
                b = other._coeffs[j]
                out[i + j] = out[i + j] + a * b
        return QSeries(out)

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            raise ValueError("negative series powers are not needed")
        out = QSeries.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def exp(self) -> "QSeries":
        """Series exponential; requires vanishing constant term.

        Uses the derivative recurrence ``n e_n = sum_k k a_k e_(n-k)``.
        """
        if self._coeffs[0]:
            raise ValueError("exp needs a vanishing constant term")
        n = self.order
        e = [RAT_ONE] + [RAT_ZERO] * n
        for m in range(1, n + 1):
            acc = RAT_ZERO
            for k in range(1, m + 1):
                a = self._coeffs[k]
                if a:
                    acc = acc + k * a * e[m - k]
            e[m] = acc / m
        return QSeries(e)

    def scale_q(self, factor) -> "QSeries":
        """Substitute ``q -> factor * q``: coefficient ``n`` picks ``factor^n``."""
        out = []
        power = RAT_ONE
        for c in self._coeffs:
            out.append(c * power)
            power = power * factor
        return QSeries(out)

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return QSeries(self._coeffs[: order + 1])

    def __eq__(self, other) -> bool:
        return isinstance(other, QSeries) and all(
            a == b for a, b in zip(self._coeffs, other._coeffs)
        ) and self.order == other.order

    __hash__ = None

    def __repr__(self) -> str:
        bits = [f"{c}*q^{i}" for i, c in enumerate(self._coeffs)]
        return " + ".join(bits) + f" + O(q^{self.order + 1})"


def plethystic_exp(f_eval: Callable[[int], object], ctx: EvalContext) -> QSeries:
    """Plethystic exponential ``exp(sum_k q^k f(vars^k) / k)`` truncated at
    the context order.

    ``f_eval(k)`` must return the exact value of the single-box term with
    every variable raised to the ``k``-th power.
    """
    n = ctx.order
    log_coeffs = [RAT_ZERO]
    for k in range(1, n + 1):
        log_coeffs.append(f_eval(k) / rational(k))
    return QSeries(log_coeffs).exp()


def binom_series(exponent, order: int) -> QSeries:
    """The binomial series ``(1/(1-q))^c``: coefficient of ``q^n`` is
    ``c (c+1) ... (c+n-1) / n!``."""
    c = exponent
    coeffs = [RAT_ONE]
    value = RAT_ONE
    for n in range(1, order + 1):
        value = value * (c + (n - 1)) / rational(n)
        coeffs.append(value)
    return QSeries(coeffs)


# ---------------------------------------------------------------------------
# localized series
# ---------------------------------------------------------------------------


def localized_forms(ranks: Ranks, order: int) -> list:
    """Per-degree lists of localization weights, one factored form per
    fixed point.  Point-independent: compute once, evaluate often."""
    return [
        [contribution(bn) for bn in fixed_points(ranks, n)]
        for n in range(order + 1)
    ]


def _eval_form_chunk(args):
    forms, point = args
    return [f.eval_point(point) for f in forms]


def eval_forms(forms: list, point: PointAssignment) -> QSeries:
    """Evaluate per-degree form lists at one point and sum each degree."""
    chunks = parallel_map(_eval_form_chunk, [(fs, point) for fs in forms])
    return QSeries(sum(values, start=RAT_ZERO) for values in chunks)


def z_localized(ranks: Ranks, ctx: EvalContext) -> QSeries:
    """The partition function computed as a sum of equivariant residues
    over the fixed locus, evaluated at the context point."""
    return eval_forms(localized_forms(ranks, ctx.order), ctx.point)


def z_closed(ranks: Ranks, ctx: EvalContext) -> QSeries:
    """The closed form: the plethystic exponential of
    ``q (1 - t1 t2)(1 - t1^r1 t2^r2) / ((1 - t1)(1 - t2))``."""
    t1 = ctx.point.value(t_var(1))
    t2 = ctx.point.value(t_var(2))
    r1, r2 = ranks.r1, ranks.r2

    def f(k: int):
        a, b = t1**k, t2**k
        return (1 - a * b) * (1 - a**r1 * b**r2) / ((1 - a) * (1 - b))

    return plethystic_exp(f, ctx)


def z_rank1_product(ctx: EvalContext) -> QSeries:
    """Rank-one series by the product formula: coefficient ``n`` is
    ``prod_(a=1..n) (1 - t1 t2^a)/(1 - t2^a)``."""
    t1 = ctx.point.value(t_var(1))
    t2 = ctx.point.value(t_var(2))
    coeffs = [RAT_ONE]
    value = RAT_ONE
    power = RAT_ONE
    for a in range(1, ctx.order + 1):
        power = power * t2
        den = 1 - power
        if not den:
            raise ZeroDivisionError("t2 is a root of unity")
        value = value * (1 - t1 * power) / den
        coeffs.append(value)
    return QSeries(coeffs)


# ---------------------------------------------------------------------------
# symmetrized (half-weight twisted) series
# ---------------------------------------------------------------------------


def half_weight_twist(ranks: Ranks, n: int) -> Monomial:
    """The square root of the determinant twist at degree ``n``, written in
    the ``u`` variables: ``(t1^r1 t2^r2)^(-n/2) = u1^(-r1 n) u2^(-r2 n)``."""
    return Monomial([(u_var(1), -ranks.r1 * n), (u_var(2), -ranks.r2 * n)])


def zhat_localized(ranks: Ranks, ctx: EvalContext) -> QSeries:
    """Twisted partition function from the fixed locus, in ``u`` variables.

    Each degree-``n`` residue is multiplied by the half-weight twist
    monomial; the context point assigns ``u1, u2`` and the framing
    variables.
    """
    point = ctx.point
    coeffs = []
    for n in range(ctx.order + 1):
        twist = point.monomial_value(half_weight_twist(ranks, n))
        total = RAT_ZERO
        for bn in fixed_points(ranks, n):
            form = k_euler(-substitute_halfweights(vertex_term(bn)))
            total = total + form.eval_point(point)
        coeffs.append(total * twist)
    return QSeries(coeffs)


def zhat_closed(ranks: Ranks, ctx: EvalContext) -> QSeries:
    """Closed form of the twisted series: the plethystic exponential of
    ``q [t1 t2][t1^r1 t2^r2] / ([t1][t2])`` with ``[x] = x^(1/2) - x^(-1/2)``
    realized through the ``u`` variables."""
    u1 = ctx.point.value(u_var(1))
    u2 = ctx.point.value(u_var(2))
    r1, r2 = ranks.r1, ranks.r2

    def bracket(x):
        return x - 1 / x

    def f(k: int):
        a, b = u1**k, u2**k
        return (
            bracket(a * b)
            * bracket(a**r1 * b**r2)
            / (bracket(a) * bracket(b))
        )

    return plethystic_exp(f, ctx)


# ---------------------------------------------------------------------------
# cohomological series
# ---------------------------------------------------------------------------


def coh_variables(ranks: Ranks) -> tuple:
    """The equivariant cohomology variables ``s1, s2`` and ``v(i, alpha)``."""
    return (("s", 1), ("s", 2)) + tuple(("v", i, a) for i, a in ranks.slots())


def zcoh_localized(ranks: Ranks, ctx: EvalContext) -> QSeries:
    """Cohomological partition function as a sum of residues
    ``1 / e(T)`` over the fixed locus; the point assigns ``s`` and ``v``."""
    point = ctx.point
    coeffs = []
    for n in range(ctx.order + 1):
        total = RAT_ZERO
        for bn in fixed_points(ranks, n):
            total = total + coh_euler(-vertex_term(bn)).eval_point(point)
        coeffs.append(total)
    return QSeries(coeffs)


def zcoh_closed(ranks: Ranks, ctx: EvalContext) -> QSeries:
    """Closed cohomological form: ``(1/(1-q))^c`` with
    ``c = (s1 + s2)(r1 s1 + r2 s2) / (s1 s2)``."""
    s1 = ctx.point.value(("s", 1))
    s2 = ctx.point.value(("s", 2))
    c = (s1 + s2) * (ranks.r1 * s1 + ranks.r2 * s2) / (s1 * s2)
    return binom_series(c, ctx.order)


# ---------------------------------------------------------------------------
# counting and vanishing
# ---------------------------------------------------------------------------


def euler_char_series(ranks: Ranks, order: int) -> QSeries:
    """Generating series of fixed-point counts, ``1/(1-q)^r``: the
    coefficient of ``q^n`` is ``C(n + r - 1, r - 1)``."""
    r = ranks.total
    return QSeries(rational(math.comb(n + r - 1, r - 1)) for n in range(order + 1))


def cy_vanishing_certificate(ranks: Ranks, n: int, seed: int) -> UnivarRatFun:
    """Exact vanishing certificate on the ``t1 t2 = 1`` locus.

    All variables except ``t1`` are specialized to seeded rationals and the
    degree-``n`` coefficient is summed as a canonical univariate rational
    function of ``t1``.  For ``n > 0`` the result vanishes at ``t1 = 1/t2``
    and ``1/t2`` is not a pole of the canonical form.
    """
    _, certificate = cy_certificate_with_point(ranks, n, seed)
    return certificate


def cy_certificate_with_point(ranks: Ranks, n: int, seed: int):
    """The certificate together with the rest-point it was computed at."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    free = t_var(1)
    rest_vars = (t_var(2),) + ranks.w_vars()
    forms = [contribution(bn) for bn in fixed_points(ranks, n)]
    stream = rational_stream(seed)

    def compute(point):
        total = UnivarRatFun.zero()
        for form in forms:
            total = total + form.eval_univar(free, point)
        return total

    from .points import MAX_POINT_ATTEMPTS, PointExhausted, draw_point

    for _ in range(MAX_POINT_ATTEMPTS):
        point = draw_point(rest_vars, stream)
        try:
            return point, compute(point)
        except ZeroDenominator:
            continue
    raise PointExhausted("no usable rest-point for the vanishing certificate")
