"""Named verification suites behind the command-line driver.

Every suite runs a family of exact checks at seeded points and reports the
number of checks together with the first counterexample of each failing
check (fixed point or diagram tuple, the point, and both values).  All
suites are deterministic functions of their configuration.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .chars import (
    Character,
    Monomial,
    PoleAtPoint,
    T1,
    T2,
    k_euler,
    t_var,
    u_var,
    w_var,
)
from .limits import (
    LimitValue,
    SpeedOrder,
    block_limit,
    crossing_shift_monomial,
    factored_shift_monomial,
    framing_limit,
    z_via_limits,
)
from .oracle import oracle_forms, partition_tuples, plane_tvir, taut_char
from .points import (
    EvalContext,
    MAX_POINT_ATTEMPTS,
    PointAssignment,
    PointExhausted,
    draw_point,
    rational_stream,
    retry_points,
)
from .rational import rat_str, rational
from .series import (
    QSeries,
    coh_variables,
    cy_certificate_with_point,
    eval_forms,
    euler_char_series,
    localized_forms,
    z_closed,
    z_rank1_product,
    zcoh_closed,
    zcoh_localized,
    zhat_closed,
    zhat_localized,
)
from .vertex import (
    FixedPoint,
    Ranks,
    det_char,
    fixed_points,
    smooth_tangent,
    vertex_block,
    vertex_blocks_sum,
    vertex_term,
)

CLOSED_FORM_RANKS = (Ranks(1, 0), Ranks(0, 1), Ranks(1, 1), Ranks(2, 1), Ranks(2, 2), Ranks(3, 1))
FACTORIZATION_RANKS = (Ranks(1, 1), Ranks(2, 1), Ranks(2, 2))
TWIST_RANKS = (Ranks(1, 0), Ranks(1, 1), Ranks(2, 1))
COH_RANKS = (Ranks(1, 0), Ranks(1, 1), Ranks(2, 1))


def ranks_up_to(total: int) -> tuple:
    """All rank pairs with ``1 <= r1 + r2 <= total``, lexicographically."""
    out = []
    for r1 in range(total + 1):
        for r2 in range(total + 1 - r1):
            if r1 + r2 >= 1:
                out.append(Ranks(r1, r2))
    return tuple(out)


@dataclass
class SuiteReport:
    """Outcome of one verification suite."""

    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, describe) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(describe() if callable(describe) else describe)


def _first_mismatch(lhs: QSeries, rhs: QSeries):
    for n, (a, b) in enumerate(zip(lhs.coefficients, rhs.coefficients)):
        if a != b:
            return n, a, b
    return None


def _series_check(report, label, point, lhs, rhs):
    bad = _first_mismatch(lhs, rhs)
    report.check(
        bad is None,
        lambda: (
            f"{label}: q^{bad[0]} differs at {point}: "
            f"{rat_str(bad[1])} vs {rat_str(bad[2])}"
        ),
    )


# ---------------------------------------------------------------------------
# series equality suites
# ---------------------------------------------------------------------------


def suite_closed_form(ranks_list=CLOSED_FORM_RANKS, order=6, num_points=5, seed=1):
    """Localized residue sums equal the plethystic closed form."""
    report = SuiteReport("closed-form")
    for ranks in ranks_list:
        forms = localized_forms(ranks, order)
        stream = rational_stream(seed)
        for _ in range(num_points):
            point, localized = retry_points(
                ranks.variables(), stream, lambda p: eval_forms(forms, p)
            )
            closed = z_closed(ranks, EvalContext(point, seed, order))
            _series_check(report, f"closed-form r={ranks.r1},{ranks.r2}", point, localized, closed)
    return report


def suite_rank1_product(order=8, num_points=5, seed=1):
    """The rank-one product formula matches the closed form."""
    report = SuiteReport("rank1-product")
    ranks = Ranks(1, 0)
    stream = rational_stream(seed)
    for _ in range(num_points):
        point = draw_point((T1, T2), stream)
        ctx = EvalContext(point, seed, order)
        _series_check(
            report, "rank1-product", point, z_rank1_product(ctx), z_closed(ranks, ctx)
        )
    return report


def suite_framing(ranks=Ranks(2, 2), order=5, num_assignments=3, seed=1):
    """The coefficient vector is independent of the framing values."""
    report = SuiteReport("framing")
    forms = localized_forms(ranks, order)
    stream = rational_stream(seed)
    t_values = {T1: next(stream), T2: next(stream)}
    outcomes = []
    for _ in range(num_assignments):
        for _attempt in range(MAX_POINT_ATTEMPTS):
            w_values = {v: next(stream) for v in sorted(ranks.w_vars())}
            point = PointAssignment({**t_values, **w_values})
            try:
                outcomes.append((point, eval_forms(forms, point)))
                break
            except PoleAtPoint:
                continue
        else:
            raise PointExhausted("no pole-free framing assignment found")
    base_point, base = outcomes[0]
    for point, series in outcomes[1:]:
        bad = _first_mismatch(base, series)
        report.check(
            bad is None,
            lambda: (
                f"framing r={ranks.r1},{ranks.r2}: q^{bad[0]} moved from "
                f"{rat_str(bad[1])} at {base_point} to {rat_str(bad[2])} at {point}"
            ),
        )
    return report


def suite_factorization(ranks_list=FACTORIZATION_RANKS, order=4, num_points=3, seed=1):
    """Limit calculus and the explicit rank-one factorization of the series."""
    report = SuiteReport("factorization")
    for ranks in ranks_list:
        stream = rational_stream(seed)
        forms = localized_forms(ranks, order)
        for _ in range(num_points):
            t_point = draw_point((T1, T2), stream)
            ctx_t = EvalContext(t_point, seed, order)
            closed = z_closed(ranks, ctx_t)
            _series_check(
                report,
                f"limits-sum r={ranks.r1},{ranks.r2}",
                t_point,
                z_via_limits(ranks, ctx_t),
                closed,
            )
            # explicit product of q-shifted rank-one factors
            t1, t2 = t_point.value(T1), t_point.value(T2)
            product = QSeries.one(order)
            for a in range(1, ranks.r1 + 1):
                shift = t1 ** (ranks.r1 - a) * t2**ranks.r2
                product = product * z_closed(Ranks(1, 0), ctx_t).scale_q(shift)
            for a in range(1, ranks.r2 + 1):
                shift = t2 ** (ranks.r2 - a)
                product = product * z_closed(Ranks(0, 1), ctx_t).scale_q(shift)
            _series_check(
                report,
                f"factorized-product r={ranks.r1},{ranks.r2}",
                t_point,
                product,
                closed,
            )
            # and the localized sum itself, with framing values drawn on top
            def eval_with_framing(wp):
                full = t_point.with_values({v: wp.value(v) for v in wp.variables()})
                return full, eval_forms(forms, full)

            _, (full_point, localized) = retry_points(
                ranks.w_vars(), stream, eval_with_framing
            )
            _series_check(
                report,
                f"localized-vs-factorized r={ranks.r1},{ranks.r2}",
                full_point,
                localized,
                closed,
            )
    return report


def suite_limits(ranks=Ranks(2, 2), max_len=5, bookkeeping_total=4, seed=1):
    """Block-by-block framing limits: the two symbolic limit identities,
    the q-shift bookkeeping and numeric convergence toward the limit."""
    report = SuiteReport("limits")
    slots = ranks.slots()
    for lo in range(len(slots)):
        for hi in range(lo + 1, len(slots)):
            (i, alpha), (j, beta) = slots[lo], slots[hi]
            for n_low in range(max_len + 1):
                for n_high in range(max_len + 1):
                    lengths = [0] * len(slots)
                    lengths[lo], lengths[hi] = n_low, n_high
                    bn = FixedPoint(ranks, tuple(lengths))
                    fwd = block_limit(bn, i, j, alpha, beta)
                    report.check(
                        fwd.is_one,
                        f"limit of block ({i}{j},{alpha}{beta}) at {bn} is {fwd} != 1",
                    )
                    back = block_limit(bn, j, i, beta, alpha)
                    expected = LimitValue.from_monomial(Monomial.var(("t", j), n_low))
                    report.check(
                        back == expected,
                        f"limit of block ({j}{i},{beta}{alpha}) at {bn} is {back} != t{j}^{n_low}",
                    )
    for other in ranks_up_to(bookkeeping_total):
        for n in range(max_len + 1):
            for bn in fixed_points(other, n):
                report.check(
                    crossing_shift_monomial(bn) == factored_shift_monomial(bn),
                    f"q-shift bookkeeping fails at {bn}",
                )
    _limits_numeric_convergence(report, ranks, seed)
    return report


def _limits_numeric_convergence(report, ranks, seed):
    """Evaluating at concrete hierarchical speeds approaches the limit."""
    stream = rational_stream(seed)
    t_point = draw_point((T1, T2), stream)
    slots = ranks.slots()
    speeds = {w_var(i, a): 8**k for k, (i, a) in enumerate(slots)}
    order = SpeedOrder(ranks)
    for lo in range(len(slots)):
        for hi in range(lo + 1, len(slots)):
            (i, alpha), (j, beta) = slots[lo], slots[hi]
            lengths = [0] * len(slots)
            lengths[lo], lengths[hi] = 2, 3
            bn = FixedPoint(ranks, tuple(lengths))
            form = k_euler(-vertex_block(bn, j, i, beta, alpha))
            limit_value = framing_limit(form, order).eval_point(t_point)
            gaps = []
            for big in (10**3, 10**6):
                w_values = {v: rational(big) ** n for v, n in speeds.items()}
                point = t_point.with_values(w_values)
                gaps.append(abs(form.eval_point(point) - limit_value))
            report.check(
                gaps[1] <= gaps[0],
                f"no convergence toward the limit for block ({j}{i},{beta}{alpha}) at {bn}",
            )
    return report


def suite_oracle(ranks_list=None, order=4, num_points=3, seed=1):
    """The plane Quot scheme recomputation agrees with the fixed-line one,
    and the plane characters have the expected ranks."""
    report = SuiteReport("oracle")
    if ranks_list is None:
        ranks_list = ranks_up_to(3)
    for ranks in ranks_list:
        for n in range(order + 1):
            expected = ranks.total * n
            for tup in partition_tuples(ranks, n):
                tvir = plane_tvir(tup)
                taut = taut_char(tup)
                report.check(
                    tvir.rank() == expected and not tvir.trivial_coefficient(),
                    f"plane tangent at {tup} has rank {tvir.rank()} != {expected}",
                )
                report.check(
                    taut.rank() == expected,
                    f"tautological character at {tup} has rank {taut.rank()} != {expected}",
                )
        plane = oracle_forms(ranks, order)
        lines = localized_forms(ranks, order)
        stream = rational_stream(seed)
        for _ in range(num_points):
            point, pair = retry_points(
                ranks.variables(),
                stream,
                lambda p: (eval_forms(plane, p), eval_forms(lines, p)),
            )
            _series_check(
                report, f"oracle r={ranks.r1},{ranks.r2}", point, pair[0], pair[1]
            )
    return report


def suite_cohomological(ranks_list=COH_RANKS, order=4, num_points=5, seed=1):
    """Cohomological residues equal the binomial closed form."""
    report = SuiteReport("cohomological")
    for ranks in ranks_list:
        stream = rational_stream(seed)
        for _ in range(num_points):
            point, localized = retry_points(
                coh_variables(ranks),
                stream,
                lambda p: zcoh_localized(ranks, EvalContext(p, seed, order)),
            )
            closed = zcoh_closed(ranks, EvalContext(point, seed, order))
            _series_check(
                report, f"cohomological r={ranks.r1},{ranks.r2}", point, localized, closed
            )
    return report


def suite_no_twist(
    det_ranks=None, det_len=5, ranks_list=TWIST_RANKS, order=5, num_points=5, seed=1
):
    """Determinant of the tangent character and the half-weight twisted
    series against its closed form."""
    report = SuiteReport("no-twist")
    for ranks in ranks_up_to(4) if det_ranks is None else det_ranks:
        for n in range(det_len + 1):
            expected = Monomial([(T1, n * ranks.r1), (T2, n * ranks.r2)])
            for bn in fixed_points(ranks, n):
                got = det_char(vertex_term(bn))
                report.check(
                    got == expected,
                    f"det tangent at {bn} is {got!r} != {expected!r}",
                )
    for ranks in ranks_list:
        u_vars = (u_var(1), u_var(2)) + ranks.w_vars()
        stream = rational_stream(seed)
        for _ in range(num_points):
            point, localized = retry_points(
                u_vars,
                stream,
                lambda p: zhat_localized(ranks, EvalContext(p, seed, order)),
            )
            closed = zhat_closed(ranks, EvalContext(point, seed, order))
            _series_check(
                report, f"twisted r={ranks.r1},{ranks.r2}", point, localized, closed
            )
    return report


def suite_cy_vanishing(ranks_list=None, max_len=5, num_seeds=3, seed=1):
    """Every positive-degree coefficient vanishes on the ``t1 t2 = 1`` locus."""
    report = SuiteReport("cy-vanishing")
    for ranks in ranks_up_to(3) if ranks_list is None else ranks_list:
        for n in range(1, max_len + 1):
            for k in range(num_seeds):
                point, certificate = cy_certificate_with_point(ranks, n, seed + k)
                at = 1 / point.value(T2)
                if certificate.is_pole(at):
                    report.check(
                        False,
                        f"certificate r={ranks.r1},{ranks.r2} n={n} has a pole at 1/t2 ({point})",
                    )
                    continue
                value = certificate(at)
                report.check(
                    not value,
                    f"certificate r={ranks.r1},{ranks.r2} n={n} at {point}: "
                    f"value {rat_str(value)} != 0",
                )
    return report


def suite_euler_count(ranks_list=None, max_len=10):
    """Fixed-point counts match the binomial generating series."""
    report = SuiteReport("euler-count")
    for ranks in ranks_up_to(4) if ranks_list is None else ranks_list:
        series = euler_char_series(ranks, max_len)
        for n in range(max_len + 1):
            count = len(fixed_points(ranks, n))
            report.check(
                count == series.coefficient(n),
                f"count r={ranks.r1},{ranks.r2} n={n}: {count} fixed points, "
                f"series says {series.coefficient(n)}",
            )
    return report


def suite_smooth_chi_y(ranks_list=None, max_len=5):
    """One-line moduli: the tangent character identity
    ``T_vir = T - t2^-1 T`` holds symbolically at every fixed point."""
    report = SuiteReport("smooth-chi-y")
    t2_inv = Character.from_monomial(Monomial.var(T2, -1))
    if ranks_list is None:
        ranks_list = tuple(Ranks(0, r) for r in (1, 2, 3))
    for ranks in ranks_list:
        if ranks.r1 != 0:
            raise ValueError("the smooth-case identity requires r1 = 0")
        for n in range(max_len + 1):
            for bn in fixed_points(ranks, n):
                tangent = smooth_tangent(bn)
                report.check(
                    vertex_term(bn) == tangent - t2_inv * tangent,
                    f"smooth identity fails at {bn}",
                )
    return report


# ---------------------------------------------------------------------------
# randomized structural properties (used by the acceptance suite)
# ---------------------------------------------------------------------------


def random_ranks(rng: random.Random, max_total=4) -> Ranks:
    while True:
        r1 = rng.randrange(0, max_total + 1)
        r2 = rng.randrange(0, max_total + 1 - r1)
        if r1 + r2 >= 1:
            return Ranks(r1, r2)


def random_fixed_point(rng: random.Random, max_total=4, max_size=6) -> FixedPoint:
    ranks = random_ranks(rng, max_total)
    lengths = [0] * ranks.total
    for _ in range(rng.randrange(0, max_size + 1)):
        lengths[rng.randrange(ranks.total)] += 1
    return FixedPoint(ranks, tuple(lengths))


_POOL_VARS = (T1, T2, w_var(1, 1), w_var(1, 2), w_var(2, 1))


def random_monomial(rng: random.Random, nontrivial=False) -> Monomial:
    while True:
        m = Monomial(
            (v, rng.randrange(-3, 4))
            for v in rng.sample(_POOL_VARS, rng.randrange(0, len(_POOL_VARS) + 1))
        )
        if not (nontrivial and m.is_one):
            return m


def random_character(rng: random.Random, nontrivial=False) -> Character:
    return Character(
        (random_monomial(rng, nontrivial), rng.choice((-3, -2, -1, 1, 2, 3)))
        for _ in range(rng.randrange(0, 7))
    )


def suite_vertex_properties(count=100, seed=1):
    """Rank zero, block reconstruction, movability and framing balance of
    randomly generated tangent characters."""
    report = SuiteReport("vertex-properties")
    rng = random.Random(seed)
    for _ in range(count):
        bn = random_fixed_point(rng)
        term = vertex_term(bn)
        report.check(term.rank() == 0, f"vertex term at {bn} has rank {term.rank()}")
        report.check(
            vertex_blocks_sum(bn) == term, f"block sum differs from vertex term at {bn}"
        )
        report.check(
            not term.trivial_coefficient(), f"trivial weight in vertex term at {bn}"
        )
        balance: dict = {}
        for m, c in term.items():
            w_part = m.restrict(lambda v: v[0] == "w")
            if not w_part.is_one:
                balance[w_part] = balance.get(w_part, 0) + c
        report.check(
            all(total == 0 for total in balance.values()),
            f"framing weights unbalanced at {bn}: {balance}",
        )
    return report


def suite_diagonal_blocks(max_len=8):
    """Closed form of the diagonal blocks:
    ``(1 - t_i^-1) sum_(a=1..m) t_ihat^-a``."""
    report = SuiteReport("diagonal-blocks")
    for i in (1, 2):
        ranks = Ranks(1, 1)
        for m in range(max_len + 1):
            lengths = (m, 0) if i == 1 else (0, m)
            bn = FixedPoint(ranks, lengths)
            block = vertex_block(bn, i, i, 1, 1)
            one_minus = Character.one() - Character.from_monomial(
                Monomial.var(t_var(i), -1)
            )
            tail = Character(
                (Monomial.var(t_var(3 - i), -a), 1) for a in range(1, m + 1)
            )
            report.check(
                block == one_minus * tail,
                f"diagonal block closed form fails for i={i}, m={m}",
            )
    return report


def suite_bar_involution(count=100, seed=1):
    """``bar`` is an involutive ring map on random characters."""
    report = SuiteReport("bar-involution")
    rng = random.Random(seed)
    for _ in range(count):
        c = random_character(rng)
        report.check(c.bar().bar() == c, f"bar is not involutive on {c!r}")
        d = random_character(rng)
        report.check(
            (c * d).bar() == c.bar() * d.bar(),
            f"bar is not multiplicative on {c!r}, {d!r}",
        )
    return report


def suite_euler_multiplicativity(count=100, seed=1):
    """``k_euler(a + b) = k_euler(a) k_euler(b)`` on random characters."""
    report = SuiteReport("euler-multiplicativity")
    rng = random.Random(seed)
    for _ in range(count):
        a = random_character(rng, nontrivial=True)
        b = random_character(rng, nontrivial=True)
        report.check(
            k_euler(a + b) == k_euler(a) * k_euler(b),
            f"k_euler not multiplicative on {a!r}, {b!r}",
        )
    return report


CLI_SUITES = {
    "closed-form": suite_closed_form,
    "framing": suite_framing,
    "factorization": suite_factorization,
    "limits": suite_limits,
    "oracle": suite_oracle,
    "cohomological": suite_cohomological,
    "no-twist": suite_no_twist,
    "cy-vanishing": suite_cy_vanishing,
    "euler-count": suite_euler_count,
    "smooth-chi-y": suite_smooth_chi_y,
}
