"""The asymptotic size Ramsey limit for growing complete bipartite families.

A problem instance fixes r forbidden complete bipartite graphs of which the
first q grow with n: graph i <= q is K_{s_i, ceil(t_i n)} and the rest are
fixed graphs entering only through m_i, the smaller of their two sides.
The computed quantity is the slope

    lim  r_hat(K_{s_1,t_1 n}, ..., K_{s_q,t_q n}, fixed graphs) / n .

For every candidate left-side size s the least density t with K_{s, t n}
arrowing the family is the optimum t'_s of a small rational LP whose
columns are indexed by pi_s(spec, s): maximize the total column mass w
subject to, for each growing graph i,

    sum_a  w_a * C(a_i, s_i)  <=  t_i * C(s, s_i).

The limit is min over s of s * t'_s.  Since every t'_s is at least
t_min = sum t_i, the scan over s may stop as soon as s * t_min reaches the
best candidate found; candidates start at s = sigma + 1 where sigma is the
total of the forbidden graphs' (side - 1) contributions, below which no
arrowing weight exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .compositions import composition_count, pi_s
from .errors import InstanceTooLargeError
from .exactnum import binom
from .simplex import OPTIMAL, LpProblem, solve_lp

DEFAULT_COLUMN_CAP = 100_000

_ONE = Fraction(1)


@dataclass(frozen=True)
class ProblemSpec:
    """One limit computation: q growing graphs (s_i, t_i) and fixed sides m_i."""

    dilating: tuple[tuple[int, Fraction], ...]
    fixed: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        dil = tuple((int(s), Fraction(t)) for s, t in self.dilating)
        fix = tuple(int(m) for m in self.fixed)
        if not dil:
            raise ValueError("at least one growing forbidden graph is required")
        for s, t in dil:
            if s < 1:
                raise ValueError("growing graph sides must be positive")
            if t <= 0:
                raise ValueError("growth densities must be positive")
        if any(m < 1 for m in fix):
            raise ValueError("fixed graph sides must be positive")
        object.__setattr__(self, "dilating", dil)
        object.__setattr__(self, "fixed", fix)

    @property
    def q(self) -> int:
        return len(self.dilating)

    @property
    def r(self) -> int:
        return len(self.dilating) + len(self.fixed)


@dataclass(frozen=True)
class LimitResult:
    """The limit value with its witness and the full scan table."""

    value: Fraction
    argmin_s: int
    t_prime_at_argmin: Fraction
    table: tuple[tuple[int, Fraction, Fraction], ...]
    terminated_at: int


def sigma(spec: ProblemSpec) -> int:
    """Sum of (side - 1) over all forbidden graphs; candidates start above it."""
    return sum(s - 1 for s, _ in spec.dilating) + sum(m - 1 for m in spec.fixed)


def t_min(spec: ProblemSpec) -> Fraction:
    """Sum of the growth densities, a lower bound on every t'_s."""
    return sum((t for _, t in spec.dilating), Fraction(0))


def build_lp(spec: ProblemSpec, s: int, max_columns: int = DEFAULT_COLUMN_CAP) -> LpProblem:
    """The density program for left-side size s.

    One column per index vector in pi_s(spec, s), one row per growing
    graph; the objective is the all-ones vector.
    """
    sig = sigma(spec)
    if s <= sig:
        raise ValueError(f"left size {s} must exceed sigma = {sig}")
    s0 = sum(m - 1 for m in spec.fixed)
    ncols = composition_count(s - s0, spec.q)
    if ncols > max_columns:
        raise InstanceTooLargeError(
            f"program for s = {s} has {ncols} columns (cap {max_columns})"
        )
    columns = pi_s(spec, s)
    matrix = []
    rhs = []
    for i, (si, ti) in enumerate(spec.dilating):
        matrix.append(tuple(Fraction(binom(col.entries[i], si)) for col in columns))
        rhs.append(ti * binom(s, si))
    objective = tuple(_ONE for _ in columns)
    return LpProblem(objective, tuple(matrix), tuple(rhs))


def t_prime(spec: ProblemSpec, s: int, max_columns: int = DEFAULT_COLUMN_CAP) -> Fraction:
    """Least right-side density t such that K_{s, t n} arrows the family."""
    outcome = solve_lp(build_lp(spec, s, max_columns))
    if outcome.status != OPTIMAL:
        raise AssertionError(f"density program for s = {s} is {outcome.status}")
    return outcome.value


def compute_limit(spec: ProblemSpec, max_columns: int = DEFAULT_COLUMN_CAP) -> LimitResult:
    """Scan s = sigma+1, sigma+2, ... and minimize s * t'_s.

    The scan always evaluates at least s = sigma + 1 and stops at the first
    s whose trivial lower bound s * t_min already matches or exceeds the
    best candidate, which cannot discard a strictly better one.  Ties in
    the minimum report the smallest s; the full table is returned so
    callers can recover the others.
    """
    tmin = t_min(spec)
    best: Fraction | None = None
    best_s = 0
    best_t = _ONE
    table: list[tuple[int, Fraction, Fraction]] = []
    s = sigma(spec) + 1
    while True:
        tp = t_prime(spec, s, max_columns)
        assert tp >= tmin, "density optimum fell below the degree lower bound"
        candidate = s * tp
        table.append((s, tp, candidate))
        if best is None or candidate < best:
            best, best_s, best_t = candidate, s, tp
        s += 1
        if s * tmin >= best:
            break
    return LimitResult(best, best_s, best_t, tuple(table), s)


def witness(spec: ProblemSpec) -> tuple[int, Fraction]:
    """The extremal pair (s, t'_s): K_{s, t'_s n + O(1)} realizes the limit."""
    result = compute_limit(spec)
    return result.argmin_s, result.t_prime_at_argmin
