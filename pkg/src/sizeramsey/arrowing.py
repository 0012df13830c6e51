"""Exhaustive arrowing checks on small explicit graphs.

These searches decide, for a concrete graph G and forbidden complete
bipartite graphs F_1, ..., F_r, whether every r-colouring of E(G) produces
a monochromatic F_i in its own colour i.  They anchor the asymptotic slope
results at concrete small n.

The search backtracks over the edges in their fixed list order, assigning
colours 1..r and abandoning a branch as soon as the newest edge completes
a forbidden subgraph in its colour.  Because any new forbidden copy must
use the newest edge, the incremental check only inspects vertex sets
through that edge.  Counterexamples (avoiding colourings) are therefore
found in lexicographic order over the edge list, which makes certificates
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple

from .errors import SearchBudgetExceededError

MAX_VERTICES = 32
DEFAULT_BUDGET = 2**32


@dataclass(frozen=True)
class SmallGraph:
    """Explicit graph on at most 32 vertices with a fixed edge order.

    The edge list order is part of the data: colourings are serialized one
    character per edge in this order.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        if not 0 <= self.vertex_count <= MAX_VERTICES:
            raise ValueError(f"vertex_count must lie in [0, {MAX_VERTICES}]")
        adjacency = [0] * self.vertex_count
        seen = set()
        norm = []
        for u, v in self.edges:
            if u == v:
                raise ValueError("self-loops are not allowed")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) leaves the vertex set")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            norm.append((int(u), int(v)))
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "adjacency", tuple(adjacency))


class ArrowsResult(NamedTuple):
    """Outcome of an arrowing search; certificate is an avoiding colouring
    serialized over the alphabet 1..r, one character per edge."""

    arrows: bool
    certificate: str | None


def complete_bipartite(s: int, t: int) -> SmallGraph:
    """K_{s,t} with left vertices 0..s-1 and edges in left-major order."""
    if s < 1 or t < 1:
        raise ValueError("both sides must be positive")
    if s + t > MAX_VERTICES:
        raise ValueError(f"K_{{{s},{t}}} exceeds {MAX_VERTICES} vertices")
    edges = tuple((u, s + w) for u in range(s) for w in range(t))
    return SmallGraph(s + t, edges)


def complete(n: int) -> SmallGraph:
    """K_n with edges in lexicographic pair order."""
    if not 2 <= n <= 10:
        raise ValueError("complete graphs are supported for 2 <= n <= 10")
    return SmallGraph(n, tuple(combinations(range(n), 2)))


def _masked_adjacency(G: SmallGraph, colour_mask: int) -> list[int]:
    adj = [0] * G.vertex_count
    for idx, (u, v) in enumerate(G.edges):
        if (colour_mask >> idx) & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def _has_side(adj: list[int], n: int, a: int, b: int) -> bool:
    """Some a-set of vertices with at least b common neighbours outside it."""
    full = (1 << n) - 1
    for S in combinations(range(n), a):
        common = full
        smask = 0
        for v in S:
            common &= adj[v]
            smask |= 1 << v
        if (common & ~smask).bit_count() >= b:
            return True
    return False


def has_mono_kst(G: SmallGraph, colour_mask: int, s: int, t: int) -> bool:
    """Whether the edges selected by colour_mask contain a K_{s,t}.

    Either side of the bipartite subgraph may play the s role, so for
    s != t both role assignments are tried.
    """
    if s < 1 or t < 1:
        raise ValueError("forbidden sides must be positive")
    adj = _masked_adjacency(G, colour_mask)
    n = G.vertex_count
    if _has_side(adj, n, s, t):
        return True
    return s != t and _has_side(adj, n, t, s)


def _completes_kab(adj: list[int], u: int, v: int, a: int, b: int) -> bool:
    """K_{a,b} through the (already inserted) edge (u, v), with u on the
    a-side and v on the b-side.

    The rest of the a-side must be adjacent to v; the b-side must sit in
    the common neighbourhood of the full a-side (v lands there for free).
    """
    if a == 1:
        return (adj[u] & ~(1 << u)).bit_count() >= b
    cand_mask = adj[v] & ~(1 << u)
    cand = []
    while cand_mask:
        low = cand_mask & -cand_mask
        cand.append(low.bit_length() - 1)
        cand_mask ^= low
    if len(cand) < a - 1:
        return False
    base = adj[u]
    for group in combinations(cand, a - 1):
        common = base
        smask = 1 << u
        for w in group:
            common &= adj[w]
            smask |= 1 << w
        if (common & ~smask).bit_count() >= b:
            return True
    return False


def _completes_forbidden(adj: list[int], u: int, v: int, s: int, t: int) -> bool:
    """Any K_{s,t} through the newest edge (u, v) of this colour.

    One endpoint sits on the s-sized side and the other on the t-sized
    side; trying both endpoint assignments covers every copy.
    """
    if s == t:
        return _completes_kab(adj, u, v, s, s)
    return _completes_kab(adj, u, v, s, t) or _completes_kab(adj, v, u, s, t)


def arrows(
    G: SmallGraph,
    forbidden: list[tuple[int, int]],
    r: int,
    budget: int = DEFAULT_BUDGET,
) -> ArrowsResult:
    """Exhaustively decide whether G arrows (F_1, ..., F_r).

    True when no r-colouring of E(G) avoids all monochromatic forbidden
    graphs; otherwise the lexicographically first avoiding colouring (over
    the fixed edge order, colours tried in increasing order) is returned
    as a checkable certificate.

    The worst-case colouring count r^e(G) must stay within `budget`;
    larger instances raise SearchBudgetExceededError rather than running
    unpredictably long.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if r > 9:
        raise ValueError("certificates are serialized over the digits 1..9")
    if len(forbidden) != r:
        raise ValueError("one forbidden graph per colour is required")
    pairs = [(int(s), int(t)) for s, t in forbidden]
    if any(s < 1 or t < 1 for s, t in pairs):
        raise ValueError("forbidden sides must be positive")
    e = len(G.edges)
    if r**e > budget:
        raise SearchBudgetExceededError(
            f"{r}^{e} colourings exceed the budget of {budget}"
        )

    # With identical forbidden graphs every colour permutation preserves
    # counterexamples, so the lexicographically first one gives colour 1 to
    # the first edge; restricting that branch loses nothing.
    normalized = [(min(s, t), max(s, t)) for s, t in pairs]
    symmetric = len(set(normalized)) == 1

    adj = [[0] * G.vertex_count for _ in range(r)]
    assignment = [0] * e
    edges = G.edges

    def search(k: int) -> bool:
        """True when some avoiding completion of the first k edges exists."""
        if k == e:
            return True
        u, v = edges[k]
        ubit, vbit = 1 << u, 1 << v
        last_colour = 1 if (k == 0 and symmetric and r > 1) else r
        for colour in range(1, last_colour + 1):
            ac = adj[colour - 1]
            ac[u] |= vbit
            ac[v] |= ubit
            s, t = pairs[colour - 1]
            if not _completes_forbidden(ac, u, v, s, t):
                assignment[k] = colour
                if search(k + 1):
                    return True
            ac[u] &= ~vbit
            ac[v] &= ~ubit
        return False

    if search(0):
        return ArrowsResult(False, "".join(str(c) for c in assignment))
    return ArrowsResult(True, None)


def min_t_arrowing(
    s: int,
    forbidden: list[tuple[int, int]],
    r: int,
    t_max: int,
    budget: int = DEFAULT_BUDGET,
) -> int | None:
    """Smallest t <= t_max with K_{s,t} arrowing the forbidden list, if any."""
    for t in range(1, t_max + 1):
        if arrows(complete_bipartite(s, t), forbidden, r, budget).arrows:
            return t
    return None
