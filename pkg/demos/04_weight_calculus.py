"""The fractional weight calculus behind the limit arguments.

A growing bipartite family is summarized by a weight: rational mass on each
subset of the left vertex set, one unit of mass standing for n right
vertices with that neighbourhood.  This script walks through sizes,
degrees, the two containment relations, fractional colourings, and the way
a weight dilates back into explicit graphs.
"""

from fractions import Fraction

from sizeramsey import (
    BipGraph,
    RColouring,
    colour_subweight,
    dilate,
    format_rational,
    graph_in_weight,
    is_colouring,
    k_weight,
    weight_degree,
    weight_in_weight,
    weight_size,
)

F = Fraction

# k_weight(s, t) is the limit object of the family K_{s, ceil(t n)}.
f = k_weight(2, F(3, 2))
print("weight of K_{2, 3n/2}: table", {bin(m): str(v) for m, v in f.table.items()})
print("size  :", format_rational(weight_size(f)), "(edges per n)")
print("degree:", [format_rational(weight_degree(f, x)) for x in range(2)])
print()

# Dilation makes the n-th family member explicit.
member = dilate(f, 4)
print("dilation at n = 4: K_{%d,%d}" % (member.left_count, member.right_count))
print()

# Finite graphs embed into a weight when their neighbourhoods fit inside
# positively weighted sets, in either orientation of the bipartition.
k22 = BipGraph(2, 2, (0b11, 0b11))
k33 = BipGraph(3, 3, (0b111,) * 3)
print("K_{2,2} inside k_{2,1}?", graph_in_weight(k22, k_weight(2, 1)))
print("K_{3,3} inside k_{2,1}?", graph_in_weight(k33, k_weight(2, 1)))
print()

# Between weights the relation uses a transport plan: mass of f_A may be
# shipped to supersets of its image within the capacities g_B.
print("k_{1,1} inside k_{2,1}?", weight_in_weight(k_weight(1, 1), k_weight(2, 1)))
print("k_{2,2} inside k_{2,1}?", weight_in_weight(k_weight(2, 2), k_weight(2, 1)))
print()

# A fractional 2-colouring must strictly cover every subset, the empty set
# included; its per-colour subweights then strictly dominate the ground
# degrees pointwise.
g = k_weight(1, 1)
c = RColouring(2, {(0b1, 0): F(2), (0, 0): F(1)}, g)
print("valid colouring of k_{1,1}?", is_colouring(c, g))
for i in (1, 2):
    sub = colour_subweight(c, i)
    print(f"  colour {i} degree at vertex 0:", format_rational(weight_degree(sub, 0)))
print("ground degree at vertex 0   :", format_rational(weight_degree(g, 0)))
