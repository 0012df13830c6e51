"""Exhaustive arrowing checks anchor the asymptotics at small n.

The slope computation says K_{2,n} pairs are forced by K_{3, 6n-5}-sized
hosts asymptotically.  At n = 2 that predicts K_{3,7} arrows (K_{2,2}, K_{2,2})
while K_{3,6} does not; both facts are verified here by exhaustive search
over edge colourings, with the avoiding colouring returned as a checkable
certificate.
"""

import time

from sizeramsey import (
    arrows,
    complete,
    complete_bipartite,
    has_mono_kst,
    min_t_arrowing,
)

FORBIDDEN = [(2, 2), (2, 2)]

start = time.perf_counter()
print("K_6  -> (K_{2,2}, K_{2,2}) ?", arrows(complete(6), FORBIDDEN, 2).arrows)
print("K_3,7 -> (K_{2,2}, K_{2,2}) ?", arrows(complete_bipartite(3, 7), FORBIDDEN, 2).arrows)

g36 = complete_bipartite(3, 6)
result = arrows(g36, FORBIDDEN, 2)
print("K_3,6 -> (K_{2,2}, K_{2,2}) ?", result.arrows)
print(f"searches took {time.perf_counter() - start:.2f}s")
print()

# The certificate lists one colour per edge, in the fixed edge order.
cert = result.certificate
print("avoiding colouring of K_3,6:", cert)
for colour in "12":
    mask = sum(1 << i for i, ch in enumerate(cert) if ch == colour)
    mono = has_mono_kst(g36, mask, 2, 2)
    print(f"  colour {colour}: contains a monochromatic K_2,2? {mono}")
print()

# Smallest right side t with K_{3,t} arrowing: 7 = 6*2 - 5 at n = 2.
print("min t with K_{3,t} arrowing:", min_t_arrowing(3, FORBIDDEN, 2, 8))

# A cheaper family: two forbidden stars K_{1,2}.  Three edges at one centre
# already force a repeated colour.
print("min t with K_{1,t} -> (K_{1,2}, K_{1,2}):", min_t_arrowing(1, [(1, 2), (1, 2)], 2, 5))
