"""Exact rational scalar shared by every module.

gmpy2's ``mpq`` is used when available (roughly an order of magnitude
faster than ``fractions.Fraction`` on this workload); the stdlib Fraction
is a drop-in fallback.  Both expose ``.numerator``/``.denominator`` and
interoperate, so nothing downstream depends on which one is active.
"""

try:
    from gmpy2 import mpq as rational
except ImportError:  # pragma: no cover - gmpy2 is normally installed
    from fractions import Fraction as rational

ZERO = rational(0)
ONE = rational(1)


def rat_str(value) -> str:
    """Serialize an exact rational as ``numerator/denominator``."""
    q = rational(value)
    return f"{q.numerator}/{q.denominator}"
