"""Seeded rational evaluation points and the pole-retry protocol.

Equality of multivariate rational expressions is tested by exact evaluation
at reproducible random points.  Candidate values are rationals ``a/b`` with
``2 <= a, b <= 97`` and ``a != b`` drawn from a deterministic stream seeded
by a 64-bit integer; whenever an evaluation runs into a pole the whole
point is rejected and the next candidate is drawn, up to a hard cap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .chars import PoleAtPoint, var_name
from .rational import rational

MAX_POINT_ATTEMPTS = 100


class PointExhausted(RuntimeError):
    """No pole-free point was found within the attempt budget."""


class PointAssignment:
    """A map from variable ids to nonzero exact rationals.

    Monomial values are memoized per assignment, which makes repeated
    evaluation of factored forms at the same point cheap.
    """

    __slots__ = ("_values", "_memo")

    def __init__(self, values):
        vals = dict(values)
        for v, q in vals.items():
            if not q:
                raise ValueError(f"variable {var_name(v)} assigned zero")
        self._values = vals
        self._memo = {}

    def value(self, var):
        try:
            return self._values[var]
        except KeyError:
            raise KeyError(f"no value assigned to {var_name(var)}") from None

    def variables(self):
        return sorted(self._values)

    def items(self):
        return sorted(self._values.items())

    def monomial_value(self, monomial):
        memo = self._memo
        got = memo.get(monomial)
        if got is None:
            value = rational(1)
            for v, e in monomial.exponents():
                value *= self._values[v] ** e
            memo[monomial] = value
            return value
        return got

    def with_values(self, overrides) -> "PointAssignment":
        vals = dict(self._values)
        vals.update(overrides)
        return PointAssignment(vals)

    def scale_group(self, kind: str, factor) -> "PointAssignment":
        """A copy with every variable of the given kind scaled by ``factor``."""
        return PointAssignment(
            {v: (q * factor if v[0] == kind else q) for v, q in self._values.items()}
        )

    def __reduce__(self):
        return (PointAssignment, (self._values,))

    def __repr__(self) -> str:
        inner = ", ".join(f"{var_name(v)}={q}" for v, q in self.items())
        return f"point({inner})"


def rational_stream(seed: int) -> Iterator:
    """Deterministic stream of candidate values ``a/b``, ``2<=a,b<=97``, ``a!=b``."""
    rng = random.Random(seed)
    while True:
        a = rng.randrange(2, 98)
        b = rng.randrange(2, 98)
        if a != b:
            yield rational(a, b)


def draw_point(variables: Iterable, stream: Iterator) -> PointAssignment:
    """Assign the next stream values to the variables in sorted order."""
    return PointAssignment({v: next(stream) for v in sorted(variables)})


def seeded_point(variables: Iterable, seed: int) -> PointAssignment:
    return draw_point(variables, rational_stream(seed))


def retry_points(
    variables: Iterable,
    stream: Iterator,
    compute: Callable[[PointAssignment], object],
    attempts: int = MAX_POINT_ATTEMPTS,
):
    """Run ``compute`` at fresh points until it stops raising ``PoleAtPoint``.

    Returns the ``(point, result)`` pair of the first success.  Raises
    :class:`PointExhausted` after ``attempts`` rejected points.
    """
    variables = sorted(variables)
    for _ in range(attempts):
        point = draw_point(variables, stream)
        try:
            return point, compute(point)
        except PoleAtPoint:
            continue
    raise PointExhausted(
        f"no pole-free point among {attempts} candidates for {[var_name(v) for v in variables]}"
    )


@dataclass(frozen=True)
class EvalContext:
    """Evaluation context shared by the series computations: a point, the
    seed it came from and the q-truncation order."""

    point: PointAssignment
    seed: int
    order: int

    @classmethod
    def at_seed(cls, variables: Iterable, seed: int, order: int) -> "EvalContext":
        return cls(point=seeded_point(variables, seed), seed=seed, order=order)
