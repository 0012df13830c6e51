"""Computing an asymptotic size Ramsey slope, step by step.

The smallest number of edges a graph needs so that every 2-colouring
contains a monochromatic K_{2,n} grows linearly in n; this script computes
the exact growth rate 18 together with the witnessing family K_{3, 6n+O(1)}
and shows the per-size scan behind it.
"""

from fractions import Fraction

from sizeramsey import ProblemSpec, build_lp, compute_limit, format_rational, witness

# Two growing forbidden graphs K_{2,n} at unit density, nothing fixed.
spec = ProblemSpec(((2, Fraction(1)), (2, Fraction(1))))

result = compute_limit(spec)
print("limit slope :", format_rational(result.value))
print("witness     : K_{%d, %s n + O(1)}" % witness(spec))
print()

# The scan evaluates one small exact LP per candidate left-side size s and
# stops once s times the trivial density bound (here 2s) reaches the best
# candidate seen.
print("  s   t'_s      s * t'_s")
for s, tp, candidate in result.table:
    print(f"  {s}   {format_rational(tp):<8}  {format_rational(candidate)}")
print(f"stopped before s = {result.terminated_at} (2s >= best there)")
print()

# The program for s = 3 is tiny; here it is in full.
lp = build_lp(spec, 3)
print("program at s = 3: maximize the total mass of 4 columns subject to")
for row, b in zip(lp.constraint_matrix, lp.rhs):
    terms = " + ".join(
        f"{format_rational(a)}*w{j}" for j, a in enumerate(row) if a
    )
    print(f"  {terms} <= {format_rational(b)}")

# Densities may be rational: tripling them triples the slope, with the
# same witnessing size.
tripled = ProblemSpec(((2, Fraction(3)), (2, Fraction(3))))
print()
print("tripled densities :", format_rational(compute_limit(tripled).value))
