"""Enumeration of the column index set of the per-size bound programs.

Columns are indexed by length-r vectors of nonnegative integers summing to
the candidate left-side size s, with the coordinates belonging to the
non-growing forbidden graphs frozen one below their smaller side.  Only the
first q coordinates are free, so the enumeration reduces to compositions of
s - s0 into q parts.  The successor order is fixed (not merely some order)
so that column indices, and with them any per-column traces, are stable
across runs.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, NamedTuple

from .exactnum import binom

if TYPE_CHECKING:
    from .ramsey_core import ProblemSpec


class Composition(NamedTuple):
    """One column index: the full length-r vector plus its free prefix length."""

    entries: tuple[int, ...]
    free_prefix_length: int


def enumerate_compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """All vectors of `parts` nonnegative integers summing to `total`.

    Starts at (0, ..., 0, total).  Each successor locates the last nonzero
    entry a_i, increments a_{i-1}, moves a_i - 1 into the final slot, and
    zeroes position i; the walk stops once all mass sits in the first slot.
    The output is strictly increasing in lexicographic order of the first
    parts - 1 entries and has length C(total + parts - 1, parts - 1).
    """
    if total < 0:
        raise ValueError("total must be nonnegative")
    if parts < 1:
        raise ValueError("parts must be positive")
    a = [0] * parts
    a[-1] = total
    out = [tuple(a)]
    while True:
        i = parts - 1
        while i >= 0 and a[i] == 0:
            i -= 1
        if i <= 0:
            break
        moved = a[i]
        a[i - 1] += 1
        a[parts - 1] = moved - 1
        if i < parts - 1:
            a[i] = 0
        out.append(tuple(a))
    return out


def composition_count(total: int, parts: int) -> int:
    """Number of compositions of `total` into `parts` nonnegative parts."""
    return binom(total + parts - 1, parts - 1)


def pi_s(spec: "ProblemSpec", s: int) -> list[Composition]:
    """Column index set for left-side size s.

    Vectors (a_1, ..., a_r) of nonnegative integers summing to s whose last
    r - q coordinates are frozen at m_i - 1.  Empty when s is below the
    frozen tail's own sum.
    """
    tail = tuple(m - 1 for m in spec.fixed)
    s0 = sum(tail)
    if s < s0:
        return []
    heads = enumerate_compositions(s - s0, spec.q)
    return [Composition(head + tail, spec.q) for head in heads]
