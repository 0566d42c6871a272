"""Fixed points and their virtual tangent characters."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quotloc.chars import Character, FactoredForm, Monomial, T1, T2, w_var
from quotloc.suites import random_fixed_point
from quotloc.vertex import (
    FixedPoint,
    Ranks,
    box_char,
    compositions,
    contribution,
    det_char,
    fixed_points,
    framing_char,
    q_char,
    smooth_tangent,
    vertex_block,
    vertex_blocks_sum,
    vertex_term,
)

t1 = Monomial.var(T1)
t2 = Monomial.var(T2)


class TestRanks:
    def test_validation(self):
        with pytest.raises(ValueError):
            Ranks(0, 0)
        with pytest.raises(ValueError):
            Ranks(-1, 2)

    def test_slots_order(self):
        assert Ranks(2, 1).slots() == ((1, 1), (1, 2), (2, 1))

    def test_variables(self):
        assert Ranks(1, 1).variables() == (T1, T2, w_var(1, 1), w_var(2, 1))


class TestFixedPoints:
    def test_rank_one_one_length_two(self):
        pts = fixed_points(Ranks(1, 1), 2)
        assert [p.lengths for p in pts] == [(2, 0), (1, 1), (0, 2)]

    def test_single_slot(self):
        assert len(fixed_points(Ranks(0, 1), 5)) == 1

    def test_count_by_enumeration(self):
        # brute-force oracle: count lattice tuples directly
        def brute(n, k):
            if k == 0:
                return 1 if n == 0 else 0
            return sum(brute(n - first, k - 1) for first in range(n + 1))

        for r1, r2 in ((2, 1), (2, 2), (3, 1)):
            for n in range(6):
                pts = fixed_points(Ranks(r1, r2), n)
                assert len(pts) == brute(n, r1 + r2)
                assert len(pts) == math.comb(n + r1 + r2 - 1, r1 + r2 - 1)
                assert len(set(p.lengths for p in pts)) == len(pts)

    def test_slot_accessor(self):
        bn = FixedPoint(Ranks(2, 1), (5, 7, 9))
        assert bn.length(1, 1) == 5 and bn.length(1, 2) == 7 and bn.length(2, 1) == 9
        assert bn.size == 21


class TestBoxChar:
    def test_empty(self):
        assert box_char(0, 1).is_zero

    def test_opposite_axis_convention(self):
        assert box_char(2, 1) == Character([(Monomial.one(), 1), (t2, 1)])
        assert box_char(3, 2) == Character(
            [(Monomial.one(), 1), (t1, 1), (t1**2, 1)]
        )

    @given(st.integers(0, 12), st.sampled_from((1, 2)))
    def test_rank(self, m, i):
        assert box_char(m, i).rank() == m


class TestQChar:
    def test_single_box(self):
        bn = FixedPoint(Ranks(1, 1), (1, 0))
        assert q_char(bn) == Character.from_monomial(Monomial.var(w_var(1, 1)))

    def test_assembled(self):
        bn = FixedPoint(Ranks(1, 1), (2, 1))
        w11, w21 = Monomial.var(w_var(1, 1)), Monomial.var(w_var(2, 1))
        expect = Character([(w11, 1), (w11 * t2, 1), (w21, 1)])
        assert q_char(bn) == expect

    def test_empty(self):
        assert q_char(FixedPoint(Ranks(1, 1), (0, 0))).is_zero

    @given(st.integers(0, 2**32))
    def test_rank_is_size(self, seed):
        bn = random_fixed_point(random.Random(seed))
        assert q_char(bn).rank() == bn.size


class TestVertexTerm:
    def test_rank_one_single_box(self):
        bn = FixedPoint(Ranks(1, 0), (1,))
        assert vertex_term(bn) == Character(
            [(t2.inverse(), 1), ((t1 * t2).inverse(), -1)]
        )

    def test_swapped_ranks(self):
        bn = FixedPoint(Ranks(0, 1), (1,))
        assert vertex_term(bn) == Character(
            [(t1.inverse(), 1), ((t1 * t2).inverse(), -1)]
        )

    def test_empty_point(self):
        assert vertex_term(FixedPoint(Ranks(2, 2), (0, 0, 0, 0))).is_zero

    def test_structure_over_small_ranks(self):
        """Rank zero, block reconstruction and movability for every fixed
        point with total rank <= 4 and size <= 6."""
        from quotloc.suites import ranks_up_to

        for ranks in ranks_up_to(4):
            for n in range(7):
                for bn in fixed_points(ranks, n):
                    term = vertex_term(bn)
                    assert term.rank() == 0
                    assert not term.trivial_coefficient()
                    assert vertex_blocks_sum(bn) == term


class TestVertexBlocks:
    def test_diagonal_example(self):
        bn = FixedPoint(Ranks(1, 0), (2,))
        got = vertex_block(bn, 1, 1, 1, 1)
        one_minus = Character.one() - Character.from_monomial(t1.inverse())
        tail = Character([(t2.inverse(), 1), (t2**-2, 1)])
        assert got == one_minus * tail

    def test_diagonal_empty(self):
        bn = FixedPoint(Ranks(1, 0), (0,))
        assert vertex_block(bn, 1, 1, 1, 1).is_zero

    def test_cross_block_hand_expansion(self):
        bn = FixedPoint(Ranks(1, 1), (1, 1))
        got = vertex_block(bn, 1, 2, 1, 1)
        w = Monomial.var(w_var(1, 1), -1) * Monomial.var(w_var(2, 1))
        expect = Character([(w * t2.inverse(), 1), (w * (t1 * t2).inverse(), -1)])
        assert got == expect

    @given(st.integers(1, 8), st.sampled_from((1, 2)))
    def test_diagonal_closed_form(self, m, i):
        lengths = (m, 0) if i == 1 else (0, m)
        bn = FixedPoint(Ranks(1, 1), lengths)
        one_minus = Character.one() - Character.from_monomial(
            Monomial.var(("t", i), -1)
        )
        tail = Character((Monomial.var(("t", 3 - i), -a), 1) for a in range(1, m + 1))
        assert vertex_block(bn, i, i, 1, 1) == one_minus * tail


class TestDetChar:
    def test_examples(self):
        assert det_char(Character([(t2.inverse(), 1), ((t1 * t2).inverse(), -1)])) == t1
        assert det_char(Character.zero()) == Monomial.one()

    @given(st.integers(0, 2**32))
    @settings(max_examples=60)
    def test_twist_monomial(self, seed):
        bn = random_fixed_point(random.Random(seed), max_total=4, max_size=5)
        n, r = bn.size, bn.ranks
        expect = Monomial({T1: n * r.r1, T2: n * r.r2})
        assert det_char(vertex_term(bn)) == expect


class TestSmoothTangent:
    def test_single_point(self):
        bn = FixedPoint(Ranks(0, 1), (1,))
        assert smooth_tangent(bn) == Character.from_monomial(t1.inverse())

    def test_identity_with_vertex_term(self):
        t2_inv = Character.from_monomial(t2.inverse())
        for r in (1, 2, 3):
            for n in range(6):
                for bn in fixed_points(Ranks(0, r), n):
                    tangent = smooth_tangent(bn)
                    assert vertex_term(bn) == tangent - t2_inv * tangent

    def test_requires_first_rank_zero(self):
        with pytest.raises(ValueError):
            smooth_tangent(FixedPoint(Ranks(1, 0), (1,)))

    def test_empty(self):
        assert smooth_tangent(FixedPoint(Ranks(0, 2), (0, 0))).is_zero


class TestContribution:
    def test_rank_one(self):
        bn = FixedPoint(Ranks(1, 0), (1,))
        assert contribution(bn) == FactoredForm([(t1 * t2, 1), (t2, -1)])

    def test_swapped(self):
        bn = FixedPoint(Ranks(0, 1), (1,))
        assert contribution(bn) == FactoredForm([(t1 * t2, 1), (t1, -1)])

    def test_empty_is_one(self):
        assert contribution(FixedPoint(Ranks(1, 1), (0, 0))).is_one

    def test_never_zero_flag(self):
        rng = random.Random(7)
        for _ in range(50):
            bn = random_fixed_point(rng)
            form = contribution(bn)
            assert not form.is_zero


class TestFramingChar:
    def test_values(self):
        assert framing_char(Ranks(2, 1), 1) == Character(
            [(Monomial.var(w_var(1, 1)), 1), (Monomial.var(w_var(1, 2)), 1)]
        )
        assert framing_char(Ranks(2, 0), 2).is_zero


def test_compositions_order_and_count():
    cs = list(compositions(3, 2))
    assert cs == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(2, 0)) == []
