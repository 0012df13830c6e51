"""Exact numbers and the combinatorial coefficients used throughout.

Everything in this package computes over arbitrary-precision integers and
canonical rationals (``fractions.Fraction``: lowest terms, positive
denominator, zero as 0/1).  No floating point enters any computation path;
decimal renderings exist purely as advisory display output.
"""

from __future__ import annotations

import math
import re
from decimal import Decimal, localcontext
from fractions import Fraction

Rational = Fraction

_RATIONAL_TOKEN = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), defined as 0 for k < 0 or k > n.

    Formulas here routinely evaluate C(a, s) with a < s, so out-of-range
    k is a value, not an error.
    """
    if n < 0:
        raise ValueError("binom requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_factorial(s: int, k: int) -> int:
    """Falling factorial s(s-1)...(s-k+1); 1 when k = 0, 0 when k > s."""
    if s < 0 or k < 0:
        raise ValueError("falling_factorial requires s >= 0 and k >= 0")
    if k > s:
        return 0
    return math.perm(s, k)


def rat_normalize(p: int, q: int) -> Fraction:
    """Canonical rational p/q with the sign carried by the numerator."""
    if q == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(p, q)


def parse_rational(token: str) -> Fraction:
    """Parse a "p" or "p/q" token into an exact rational.

    Only integer and slash-fraction forms are accepted; decimal notation
    is rejected so file input stays exact by construction.
    """
    m = _RATIONAL_TOKEN.match(token.strip())
    if m is None:
        raise ValueError(f"not a rational token: {token!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return rat_normalize(num, den)


def format_rational(x: Fraction | int) -> str:
    """Render integers as "p" and non-integers as "p/q" in lowest terms."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def approx_decimal(x: Fraction | int, digits: int = 15) -> str:
    """Advisory decimal approximation with the given significant digits."""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))
