"""Exact rational arithmetic helpers.

All coefficients in this package are exact rationals.  We prefer gmpy2's
``mpq`` (much faster for the straightening-heavy stages) and fall back to
:class:`fractions.Fraction` when gmpy2 is unavailable.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    QQ = Fraction

ZERO = QQ(0)
ONE = QQ(1)


def as_rational(x) -> "QQ":
    """Coerce ints, Fractions and num/den pairs to the working rational type."""
    if isinstance(x, tuple):
        return QQ(x[0], x[1])
    return QQ(x)


def num_den(q) -> tuple[int, int]:
    return int(q.numerator), int(q.denominator)


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of a positive integer, by trial division.

    Denominators in this pipeline stay small (they are products of a few
    small primes), so trial division is plenty.
    """
    n = abs(int(n))
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out
