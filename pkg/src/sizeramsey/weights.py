"""Fractional calculus of vertex-subset weights.

A weight assigns a nonnegative rational mass to every subset of a finite
vertex set (absent subsets carry 0); it is the n -> infinity limit object
of a bipartite graph family whose right-side multiplicity over each left
neighbourhood A grows like f_A * n.  This module provides the basic
quantities (size, degree), the canonical complete bipartite weight, the
two containment relations (a finite graph inside a weight, and one weight
inside another via a fractional transport plan), fractional r-colourings
with their per-colour subweights, and the dilation back to an explicit
bipartite graph.

Subsets are bitmasks over range(vertex_count).  All masses are exact
Fractions.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping

from .errors import InstanceTooLargeError
from .simplex import OPTIMAL, LpProblem, solve_lp

_ZERO = Fraction(0)

MAX_WEIGHT_VERTICES = 24
MAX_EMBED_LEFT = 8  # injection enumeration guard for graph_in_weight
MAX_EMBED_WEIGHT = 6  # injection enumeration guard for weight_in_weight


@dataclass(frozen=True)
class Weight:
    """Nonnegative rational mass on the subsets (bitmasks) of [vertex_count]."""

    vertex_count: int
    table: Mapping[int, Fraction]

    def __post_init__(self) -> None:
        if not 0 <= self.vertex_count <= MAX_WEIGHT_VERTICES:
            raise ValueError(f"vertex_count must lie in [0, {MAX_WEIGHT_VERTICES}]")
        full = 1 << self.vertex_count
        clean: dict[int, Fraction] = {}
        for mask, value in self.table.items():
            if not 0 <= mask < full:
                raise ValueError(f"subset {mask:#x} is outside the vertex set")
            v = Fraction(value)
            if v < 0:
                raise ValueError("weights must be nonnegative")
            if v:
                clean[int(mask)] = v  # zero-mass subsets are pruned
        object.__setattr__(self, "table", clean)

    def mass(self, mask: int) -> Fraction:
        return self.table.get(mask, _ZERO)

    def support(self) -> list[tuple[int, Fraction]]:
        """Positive-mass subsets in increasing bitmask order."""
        return sorted(self.table.items())


@dataclass(frozen=True)
class BipGraph:
    """Bipartite graph with a fixed bipartition.

    Right vertices are recorded purely by their neighbourhood bitmask over
    the left side; that determines the graph up to isomorphism.
    """

    left_count: int
    right_count: int
    right_neighborhoods: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.left_count < 0 or self.right_count < 0:
            raise ValueError("side sizes must be nonnegative")
        if len(self.right_neighborhoods) != self.right_count:
            raise ValueError("one neighbourhood bitmask per right vertex is required")
        full = 1 << self.left_count
        if any(not 0 <= m < full for m in self.right_neighborhoods):
            raise ValueError("neighbourhoods must be subsets of the left side")


@dataclass(frozen=True)
class RColouring:
    """Fractional r-colouring candidate of a ground weight.

    Keys are r-tuples of pairwise disjoint subsets; the defining strict
    cover condition is checked by is_colouring, not at construction.
    """

    r: int
    table: Mapping[tuple[int, ...], Fraction]
    ground: Weight

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("r must be positive")
        full = 1 << self.ground.vertex_count
        clean: dict[tuple[int, ...], Fraction] = {}
        for key, value in self.table.items():
            parts = tuple(int(m) for m in key)
            if len(parts) != self.r:
                raise ValueError("every key must have exactly r parts")
            union = 0
            total_bits = 0
            for m in parts:
                if not 0 <= m < full:
                    raise ValueError("colour classes must be subsets of the ground set")
                union |= m
                total_bits += m.bit_count()
            if total_bits != union.bit_count():
                raise ValueError("colour classes in a key must be pairwise disjoint")
            v = Fraction(value)
            if v < 0:
                raise ValueError("colouring masses must be nonnegative")
            if v:
                clean[parts] = v
        object.__setattr__(self, "table", clean)


def k_weight(s: int, t: Fraction | int) -> Weight:
    """The weight on [s] with mass t on the full set: the limit of K_{s, tn}."""
    if s < 1:
        raise ValueError("s must be a positive integer")
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    return Weight(s, {(1 << s) - 1: t})


def weight_size(f: Weight) -> Fraction:
    """Size of a weight: sum of f_A * |A|, the limit edge density."""
    return sum((v * mask.bit_count() for mask, v in f.table.items()), _ZERO)


def weight_degree(f: Weight, x: int) -> Fraction:
    """Degree of vertex x: total mass of the subsets containing it."""
    if not 0 <= x < f.vertex_count:
        raise ValueError(f"vertex {x} is out of range")
    return sum((v for mask, v in f.table.items() if (mask >> x) & 1), _ZERO)


def _flip(graph: BipGraph) -> BipGraph:
    """Swap the two sides of a bipartite graph."""
    neighborhoods = []
    for u in range(graph.left_count):
        mask = 0
        for w, nb in enumerate(graph.right_neighborhoods):
            if (nb >> u) & 1:
                mask |= 1 << w
        neighborhoods.append(mask)
    return BipGraph(graph.right_count, graph.left_count, tuple(neighborhoods))


def _embeds_left(dominated: Iterable[int], left_count: int, f: Weight) -> bool:
    """Injection of the left side into V(f) covering every dominated set.

    Each dominated neighbourhood must land inside some positively weighted
    subset; different neighbourhoods may use different subsets.
    """
    targets = sorted(set(dominated))
    supports = [mask for mask, _ in f.support()]
    if left_count > f.vertex_count:
        return False
    for image in permutations(range(f.vertex_count), left_count):
        ok = True
        for dom in targets:
            h_dom = 0
            bits = dom
            while bits:
                low = bits & -bits
                h_dom |= 1 << image[low.bit_length() - 1]
                bits ^= low
            if not any(h_dom & ~b == 0 for b in supports):
                ok = False
                break
        if ok:
            return True
    return False


def graph_in_weight(F: BipGraph, f: Weight) -> bool:
    """Whether F embeds into every large enough dilation member of f.

    Both orientations of F's bipartition are tried, since embeddings need
    not respect the fixed bipartition.
    """
    attempted = False
    for oriented in (F, _flip(F)):
        if oriented.left_count > MAX_EMBED_LEFT:
            continue
        attempted = True
        if _embeds_left(oriented.right_neighborhoods, oriented.left_count, f):
            return True
    if not attempted:
        raise InstanceTooLargeError(
            f"both sides of F exceed the injection guard {MAX_EMBED_LEFT}"
        )
    return False


def _image_mask(mask: int, image: tuple[int, ...]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << image[low.bit_length() - 1]
        mask ^= low
    return out


def _transport_feasible(
    demands: list[tuple[int, Fraction]], capacities: list[tuple[int, Fraction]]
) -> bool:
    """Feasibility of the transport plan meeting demands within capacities.

    Variables are the admissible pairs (A, B) with image(A) inside B;
    demands become negated >= rows, capacities stay <= rows, and the
    zero-objective program is handed to the exact simplex.
    """
    pairs: list[tuple[int, int]] = []
    for ai, (a_img, _) in enumerate(demands):
        found = False
        for bi, (b_mask, _) in enumerate(capacities):
            if a_img & ~b_mask == 0:
                pairs.append((ai, bi))
                found = True
        if not found:
            return False
    nvars = len(pairs)
    rows = []
    rhs = []
    for ai, (_, need) in enumerate(demands):
        rows.append(tuple(-Fraction(ai == pa) for pa, _ in pairs))
        rhs.append(-need)
    for bi, (_, cap) in enumerate(capacities):
        rows.append(tuple(Fraction(bi == pb) for _, pb in pairs))
        rhs.append(cap)
    lp = LpProblem(tuple(_ZERO for _ in range(nvars)), tuple(rows), tuple(rhs))
    return solve_lp(lp).status == OPTIMAL


def weight_embedding(f: Weight, g: Weight) -> tuple[int, ...] | None:
    """Injection certifying f inside g, or None.

    The relation holds when some injection h of V(f) into V(g) (g padded
    with massless vertices if smaller) admits a nonnegative transport plan
    w_{A,B}, supported on pairs with h(A) inside B, that ships at least
    f_A out of every A within the capacity g_B of every B.
    """
    if f.vertex_count > MAX_EMBED_WEIGHT or g.vertex_count > MAX_EMBED_WEIGHT:
        raise InstanceTooLargeError(
            f"weight containment guard is {MAX_EMBED_WEIGHT} vertices"
        )
    ambient = max(f.vertex_count, g.vertex_count)
    capacities = g.support()
    demands = f.support()
    if not demands:
        return tuple(range(f.vertex_count))
    for image in permutations(range(ambient), f.vertex_count):
        mapped = [(_image_mask(mask, image), need) for mask, need in demands]
        if _transport_feasible(mapped, capacities):
            return image
    return None


def weight_in_weight(f: Weight, g: Weight) -> bool:
    """Whether the fractional containment relation f inside g holds."""
    return weight_embedding(f, g) is not None


def is_colouring(c: RColouring, g: Weight) -> bool:
    """Strict cover condition: every subset A of V(g), including the empty
    set, receives colouring mass strictly above g_A from tuples whose
    classes union to A."""
    if c.ground != g:
        raise ValueError("colouring ground weight differs from g")
    by_union: dict[int, Fraction] = defaultdict(lambda: _ZERO)
    for key, value in c.table.items():
        union = 0
        for m in key:
            union |= m
        by_union[union] += value
    for mask in range(1 << g.vertex_count):
        if by_union.get(mask, _ZERO) <= g.mass(mask):
            return False
    return True


def colour_subweight(c: RColouring, i: int) -> Weight:
    """Weight of colour i (1-based): mass of A is the total over tuples
    whose i-th class is exactly A."""
    if not 1 <= i <= c.r:
        raise ValueError(f"colour index {i} is out of range 1..{c.r}")
    out: dict[int, Fraction] = defaultdict(lambda: _ZERO)
    for key, value in c.table.items():
        out[key[i - 1]] += value
    return Weight(c.ground.vertex_count, dict(out))


def dilate(f: Weight, n: int) -> BipGraph:
    """The canonical n-th dilation member: ceil(f_A * n) right vertices with
    neighbourhood A for every positively weighted A."""
    if f.vertex_count > MAX_EMBED_LEFT:
        raise InstanceTooLargeError(f"dilation guard is {MAX_EMBED_LEFT} vertices")
    if n < 1:
        raise ValueError("n must be positive")
    neighborhoods: list[int] = []
    for mask, value in f.support():
        neighborhoods.extend([mask] * math.ceil(value * n))
    return BipGraph(f.vertex_count, len(neighborhoods), tuple(neighborhoods))
