"""Closed-form evaluations of the limit for two special families.

These exist to cross-check the LP route.  With a single growing graph
(q = 1, density normalized to t_1 = 1) the per-size program has exactly one
column, so its optimum collapses to a ratio of falling factorials.  With
two equal growing graphs (q = 2, equal sides, unit densities) the optimum
splits the free mass as evenly as possible between the two coordinates,
giving an explicit binomial expression f(a).  Both scans reuse the same
cutoff as the LP scan: stop once s times the trivial density bound reaches
the best candidate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import binom, falling_factorial


@dataclass(frozen=True)
class ClosedFormResult:
    """Minimum value, the size attaining it, and the last size examined."""

    value: Fraction
    argmin: int
    scanned_upper: int


def _check_sides(values: Sequence[int], what: str) -> tuple[int, ...]:
    out = tuple(int(v) for v in values)
    if any(v < 1 for v in out):
        raise ValueError(f"{what} must be positive integers")
    return out


def limit_q1(s1: int, fixed: Sequence[int]) -> ClosedFormResult:
    """Limit slope for one growing K_{s1, n} against fixed graphs `fixed`.

    t'_s = (s)_{s1} / (s - s')_{s1} with s' = sigma - s1 + 1; minimized
    over s > sigma, scanning until s alone reaches the best candidate.
    """
    if s1 < 1:
        raise ValueError("s1 must be a positive integer")
    fix = _check_sides(fixed, "fixed sides")
    sig = (s1 - 1) + sum(m - 1 for m in fix)
    sp = sig - s1 + 1
    best: Fraction | None = None
    argmin = 0
    s = sig + 1
    while True:
        tp = Fraction(falling_factorial(s, s1), falling_factorial(s - sp, s1))
        candidate = s * tp
        if best is None or candidate < best:
            best, argmin = candidate, s
        last = s
        s += 1
        if s >= best:
            break
    return ClosedFormResult(best, argmin, last)


def limit_q1_star(fixed: Sequence[int]) -> Fraction:
    """Explicit slope 4(1 - r + sum of fixed sides) for a growing star K_{1,n}.

    Specialization of limit_q1 at s1 = 1; the two agree whenever some
    fixed side exceeds 1 (otherwise the even-split size 2s' degenerates
    and the minimum is 1, attained at s = 1).
    """
    fix = _check_sides(fixed, "fixed sides")
    if not fix:
        raise ValueError("at least one fixed graph is required")
    r = 1 + len(fix)
    return Fraction(4 * (1 - r + sum(fix)))


def limit_q2(s: int, fixed: Sequence[int]) -> ClosedFormResult:
    """Limit slope for two growing copies of K_{s, n} against fixed graphs.

    For each candidate size a > sigma the program's optimum is

        f(a) = 2 C(a, s) / (C(floor(a'/2), s) + C(ceil(a'/2), s)),

    with a' = a minus the fixed graphs' (side - 1) total; the scan
    minimizes a * f(a) and stops once 2a reaches the best candidate.
    """
    if s < 1:
        raise ValueError("s must be a positive integer")
    fix = _check_sides(fixed, "fixed sides")
    offset = sum(m - 1 for m in fix)
    sig = 2 * (s - 1) + offset
    best: Fraction | None = None
    argmin = 0
    a = sig + 1
    while True:
        ap = a - offset
        half = ap // 2
        denom = binom(half, s) + binom(ap - half, s)
        if denom:  # zero denominator would mean no feasible split: skip
            candidate = a * Fraction(2 * binom(a, s), denom)
            if best is None or candidate < best:
                best, argmin = candidate, a
        last = a
        a += 1
        if best is not None and 2 * a >= best:
            break
    return ClosedFormResult(best, argmin, last)
