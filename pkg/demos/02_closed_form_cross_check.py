"""Closed forms versus the LP route.

Two families admit explicit formulas: a single growing graph (the per-size
program has one column) and a pair of equal growing graphs (the optimum
splits its mass evenly).  This script evaluates both formulas next to the
general LP computation and confirms exact agreement cell by cell.
"""

from fractions import Fraction

from sizeramsey import (
    ProblemSpec,
    compute_limit,
    format_rational,
    limit_q1,
    limit_q1_star,
    limit_q2,
)

ONE = Fraction(1)

print("one growing K_{s1,n} against one fixed graph")
print("  s1  m   closed form      LP route   argmin")
for s1 in (1, 2, 3):
    for m in (2, 3):
        closed = limit_q1(s1, [m])
        lp = compute_limit(ProblemSpec(((s1, ONE),), (m,)))
        tag = "ok" if closed.value == lp.value else "MISMATCH"
        print(
            f"  {s1}   {m}   {format_rational(closed.value):<14}"
            f"  {format_rational(lp.value):<9}  s={closed.argmin}  {tag}"
        )

print()
print("growing star K_{1,n}: the minimum collapses to 4(1 - r + sum of sides)")
for fixed in ([2], [3], [2, 2], [4, 3]):
    star = limit_q1_star(fixed)
    scan = limit_q1(1, fixed)
    print(f"  fixed {fixed}: {format_rational(star)} (scan agrees: {scan.value == star})")

print()
print("two growing copies of K_{s,n}")
print("  s   fixed  closed form      LP route")
for s in (1, 2, 3):
    for fixed in ((), (2,)):
        closed = limit_q2(s, fixed)
        lp = compute_limit(ProblemSpec(((s, ONE), (s, ONE)), fixed))
        assert closed.value == lp.value
        print(
            f"  {s}   {str(list(fixed)):<6} {format_rational(closed.value):<14}"
            f"  {format_rational(lp.value)}"
        )
