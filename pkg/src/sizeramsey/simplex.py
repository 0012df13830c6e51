"""Exact linear programming over the rationals.

Problems have the fixed shape

    max  objective . x   subject to   constraint_matrix . x <= rhs,  x >= 0.

The solver is a dense two-phase tableau simplex using Bland's least-index
pivot rule, which cannot cycle, so it terminates on every input including
degenerate ones.  All comparisons are exact Fraction comparisons; there is
no tolerance anywhere.  Optima carry the full solution vector, and every
returned optimum is re-checked against the original problem before it is
handed back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpProblem:
    """max objective.x  s.t.  constraint_matrix.x <= rhs,  x >= 0."""

    objective: tuple[Fraction, ...]
    constraint_matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        obj = tuple(Fraction(c) for c in self.objective)
        mat = tuple(tuple(Fraction(a) for a in row) for row in self.constraint_matrix)
        b = tuple(Fraction(v) for v in self.rhs)
        if len(mat) != len(b):
            raise ValueError("constraint_matrix and rhs disagree on row count")
        for row in mat:
            if len(row) != len(obj):
                raise ValueError("constraint row length differs from objective length")
        object.__setattr__(self, "objective", obj)
        object.__setattr__(self, "constraint_matrix", mat)
        object.__setattr__(self, "rhs", b)

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    @property
    def num_rows(self) -> int:
        return len(self.rhs)


@dataclass(frozen=True)
class LpOutcome:
    """Result of one solve: a status, and when optimal a certified vertex."""

    status: str
    value: Fraction | None = None
    solution: tuple[Fraction, ...] | None = None


def check_feasible(lp: LpProblem, point: list[Fraction] | tuple[Fraction, ...]) -> bool:
    """Exact feasibility of a point: componentwise >= 0 and A.point <= rhs."""
    if len(point) != lp.num_vars:
        raise ValueError("point length differs from variable count")
    pt = [Fraction(x) for x in point]
    if any(x < 0 for x in pt):
        return False
    for row, b in zip(lp.constraint_matrix, lp.rhs):
        total = _ZERO
        for a, x in zip(row, pt):
            if a and x:
                total += a * x
        if total > b:
            return False
    return True


def _pivot(rows: list[list[Fraction]], zrow: list[Fraction], basis: list[int], leave: int, enter: int) -> None:
    prow = rows[leave]
    piv = prow[enter]
    if piv != _ONE:
        inv = _ONE / piv
        for j, v in enumerate(prow):
            if v:
                prow[j] = v * inv
    for r in rows:
        if r is prow:
            continue
        factor = r[enter]
        if factor:
            for j, v in enumerate(prow):
                if v:
                    r[j] -= factor * v
    factor = zrow[enter]
    if factor:
        for j, v in enumerate(prow):
            if v:
                zrow[j] -= factor * v
    basis[leave] = enter


def _run_simplex(rows: list[list[Fraction]], basis: list[int], cost: list[Fraction]) -> str:
    """Maximize cost over the current feasible tableau with Bland's rule.

    rows[i] holds the constraint coefficients with the rhs in the last
    slot; basis[i] is the basic column of row i.  Returns OPTIMAL or
    UNBOUNDED, mutating rows and basis in place.
    """
    ncols = len(cost)
    zrow = [-c for c in cost] + [_ZERO]
    for i, b in enumerate(basis):
        cb = cost[b]
        if cb:
            row = rows[i]
            for j, v in enumerate(row):
                if v:
                    zrow[j] += cb * v
    while True:
        enter = -1
        for j in range(ncols):
            if zrow[j] < 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave = -1
        best_ratio = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = i
        if leave < 0:
            return UNBOUNDED
        _pivot(rows, zrow, basis, leave, enter)


def solve_lp(lp: LpProblem) -> LpOutcome:
    """Exact optimum of the problem, with a feasible certificate vector.

    Rows with negative rhs get a phase-1 artificial variable; everything
    else starts from the slack basis.  Deterministic: identical problems
    always return identical solution vectors.
    """
    m = lp.num_rows
    d = lp.num_vars

    art_of_row = {}
    for i in range(m):
        if lp.rhs[i] < 0:
            art_of_row[i] = len(art_of_row)
    nart = len(art_of_row)
    nstruct = d + m  # structural variables plus one slack per row

    rows: list[list[Fraction]] = []
    basis: list[int] = []
    for i in range(m):
        row = [_ZERO] * (nstruct + nart + 1)
        b = lp.rhs[i]
        if b < 0:
            for j, a in enumerate(lp.constraint_matrix[i]):
                row[j] = -a
            row[d + i] = -_ONE
            art = nstruct + art_of_row[i]
            row[art] = _ONE
            row[-1] = -b
            basis.append(art)
        else:
            for j, a in enumerate(lp.constraint_matrix[i]):
                row[j] = a
            row[d + i] = _ONE
            row[-1] = b
            basis.append(d + i)
        rows.append(row)

    if nart:
        # Phase 1: maximize -(sum of artificials); feasible iff optimum is 0.
        cost1 = [_ZERO] * nstruct + [-_ONE] * nart
        _run_simplex(rows, basis, cost1)
        residue = sum((rows[i][-1] for i, b in enumerate(basis) if b >= nstruct), _ZERO)
        if residue > 0:
            return LpOutcome(INFEASIBLE)
        # Pivot zero-valued artificials out of the basis; a row with no
        # usable pivot column is a redundant constraint and is dropped.
        keep_rows = []
        for i in range(m):
            if basis[i] < nstruct:
                keep_rows.append(i)
                continue
            enter = -1
            for j in range(nstruct):
                if rows[i][j]:
                    enter = j
                    break
            if enter >= 0:
                dummy = [_ZERO] * (nstruct + nart + 1)
                _pivot(rows, dummy, basis, i, enter)
                keep_rows.append(i)
        rows = [rows[i][:nstruct] + [rows[i][-1]] for i in keep_rows]
        basis = [basis[i] for i in keep_rows]

    cost2 = list(lp.objective) + [_ZERO] * m
    status = _run_simplex(rows, basis, cost2)
    if status == UNBOUNDED:
        return LpOutcome(UNBOUNDED)

    solution = [_ZERO] * d
    for i, b in enumerate(basis):
        if b < d:
            solution[b] = rows[i][-1]
    value = sum((c * x for c, x in zip(lp.objective, solution) if c and x), _ZERO)
    if not check_feasible(lp, solution):
        raise AssertionError("simplex returned an infeasible optimum")
    return LpOutcome(OPTIMAL, value, tuple(solution))
