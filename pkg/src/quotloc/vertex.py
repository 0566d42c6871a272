"""Torus fixed points on the intersecting-lines Quot scheme and their
virtual tangent characters.

Fixed points of rank ``(r1, r2)`` and length ``n`` are compositions of ``n``
into ``r1 + r2`` labeled nonnegative parts, one per framing summand.  The
quotient supported on line ``i`` with length ``m`` has character
``w * (1 + t_ihat + ... + t_ihat^(m-1))`` where ``ihat`` is the other axis.
The virtual tangent character at a fixed point is

    T = sum_i bar(K_i) (1 - t_i^-1) Q  -  (1 - t1^-1)(1 - t2^-1) Q bar(Q)

which decomposes into framing-index blocks; both routes are implemented and
compared in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .chars import Character, FactoredForm, Monomial, k_euler, t_var, w_var


class MovabilityViolation(RuntimeError):
    """A trivial weight survived cancellation in a virtual tangent character.

    Unreachable for correct inputs; raised instead of silently dropping the
    weight because it can only signal a bug.
    """


@dataclass(frozen=True)
class Ranks:
    """The pair of framing ranks ``(r1, r2)`` on the two lines."""

    r1: int
    r2: int

    def __post_init__(self):
        if self.r1 < 0 or self.r2 < 0:
            raise ValueError("ranks must be nonnegative")
        if self.r1 + self.r2 < 1:
            raise ValueError("total rank must be at least 1")

    @property
    def total(self) -> int:
        return self.r1 + self.r2

    def slots(self) -> tuple:
        """Framing indices ``(i, alpha)`` in lexicographic order."""
        return tuple((1, a) for a in range(1, self.r1 + 1)) + tuple(
            (2, a) for a in range(1, self.r2 + 1)
        )

    def w_vars(self) -> tuple:
        return tuple(w_var(i, a) for i, a in self.slots())

    def variables(self) -> tuple:
        """All torus variables: ``t1, t2`` and the framing variables."""
        return (t_var(1), t_var(2)) + self.w_vars()

    def swapped(self) -> "Ranks":
        return Ranks(self.r2, self.r1)


@dataclass(frozen=True)
class FixedPoint:
    """A fixed point: one nonnegative length per framing slot."""

    ranks: Ranks
    lengths: tuple

    def __post_init__(self):
        if len(self.lengths) != self.ranks.total:
            raise ValueError("one length per framing slot required")
        if any(m < 0 for m in self.lengths):
            raise ValueError("lengths must be nonnegative")

    @property
    def size(self) -> int:
        return sum(self.lengths)

    def length(self, i: int, alpha: int) -> int:
        if i == 1:
            return self.lengths[alpha - 1]
        return self.lengths[self.ranks.r1 + alpha - 1]

    def __str__(self) -> str:
        r1 = self.ranks.r1
        left = ",".join(str(m) for m in self.lengths[:r1])
        right = ",".join(str(m) for m in self.lengths[r1:])
        return f"({left}|{right})"


def compositions(n: int, parts: int) -> Iterator[tuple]:
    """All compositions of ``n`` into ``parts`` labeled nonnegative parts,
    largest leading part first."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def fixed_points(ranks: Ranks, n: int) -> list:
    """The torus fixed points of length ``n``: compositions into labeled
    slots, count ``C(n + r - 1, r - 1)``."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    return [FixedPoint(ranks, c) for c in compositions(n, ranks.total)]


def box_char(m: int, i: int) -> Character:
    """Character of the length-``m`` quotient on line ``i``:
    ``1 + t + ... + t^(m-1)`` in the opposite axis variable."""
    if m < 0:
        raise ValueError("length must be nonnegative")
    t = t_var(3 - i)
    return Character((Monomial.var(t, a), 1) for a in range(m))


def q_char_line(bn: FixedPoint, i: int) -> Character:
    """Character of the quotient restricted to line ``i``."""
    ranks = bn.ranks
    total = Character.zero()
    for a in range(1, (ranks.r1 if i == 1 else ranks.r2) + 1):
        piece = box_char(bn.length(i, a), i) * Monomial.var(w_var(i, a))
        total = total + piece
    return total


def q_char(bn: FixedPoint) -> Character:
    """Character of the full quotient at the fixed point; rank = length."""
    return q_char_line(bn, 1) + q_char_line(bn, 2)


def framing_char(ranks: Ranks, i: int) -> Character:
    """The framing character ``K_i = sum_alpha w(i, alpha)``."""
    r = ranks.r1 if i == 1 else ranks.r2
    return Character((Monomial.var(w_var(i, a)), 1) for a in range(1, r + 1))


def _one_minus_tinv(i: int) -> Character:
    return Character.one() - Character.from_monomial(Monomial.var(t_var(i), -1))


def vertex_term(bn: FixedPoint) -> Character:
    """The virtual tangent character at a fixed point (rank 0, movable)."""
    q = q_char(bn)
    if q.is_zero:
        return Character.zero()
    term = Character.zero()
    for i in (1, 2):
        ki = framing_char(bn.ranks, i)
        if not ki.is_zero:
            term = term + ki.bar() * _one_minus_tinv(i) * q
    term = term - _one_minus_tinv(1) * _one_minus_tinv(2) * (q * q.bar())
    if term.trivial_coefficient():
        raise MovabilityViolation(f"trivial weight in vertex term at {bn}")
    return term


def vertex_block(bn: FixedPoint, i: int, j: int, alpha: int, beta: int) -> Character:
    """The ``(i j, alpha beta)`` block of the vertex term:

    ``w(i,a)^-1 w(j,b) ((1 - t_i^-1) Z_(j,b) - (1-t1^-1)(1-t2^-1) bar(Z_(i,a)) Z_(j,b))``.

    Summing over all index pairs reproduces :func:`vertex_term`.
    """
    z_jb = box_char(bn.length(j, beta), j)
    if z_jb.is_zero:
        return Character.zero()
    z_ia = box_char(bn.length(i, alpha), i)
    inner = _one_minus_tinv(i) * z_jb
    inner = inner - _one_minus_tinv(1) * _one_minus_tinv(2) * (z_ia.bar() * z_jb)
    w = Monomial.var(w_var(i, alpha), -1) * Monomial.var(w_var(j, beta))
    return inner * w


def vertex_blocks_sum(bn: FixedPoint) -> Character:
    """The vertex term reassembled from its blocks (internal cross-check)."""
    slots = bn.ranks.slots()
    total = Character.zero()
    for i, alpha in slots:
        for j, beta in slots:
            total = total + vertex_block(bn, i, j, alpha, beta)
    return total


def det_char(character: Character) -> Monomial:
    """Determinant of a virtual character: the product of its weights."""
    return character.det()


def smooth_tangent(bn: FixedPoint) -> Character:
    """Tangent character of the smooth one-line Quot scheme (``r1 = 0``):
    ``T = bar(K_2) Q - (1 - t1^-1) Q bar(Q)``."""
    if bn.ranks.r1 != 0:
        raise ValueError("smooth tangent character requires r1 = 0")
    q = q_char(bn)
    if q.is_zero:
        return Character.zero()
    k2 = framing_char(bn.ranks, 2)
    return k2.bar() * q - _one_minus_tinv(1) * (q * q.bar())


def contribution(bn: FixedPoint) -> FactoredForm:
    """The fixed point's localization weight ``k_euler(-T)``: by movability
    never zero and never a division by ``1 - 1``."""
    return k_euler(-vertex_term(bn))
