"""Exact asymptotic size Ramsey limits for growing complete bipartite families.

The central entry point is compute_limit, which evaluates

    lim  r_hat(K_{s_1,t_1 n}, ..., K_{s_q,t_q n}, fixed graphs) / n

by exact rational linear programming, together with the witnessing
complete bipartite family.  Closed forms for the q = 1 and q = 2 cases,
a fractional weight calculus, and exhaustive arrowing checks on small
explicit graphs provide independent cross-validation.  Every computation
is carried out in exact arithmetic.
"""

from .arrowing import (
    ArrowsResult,
    SmallGraph,
    arrows,
    complete,
    complete_bipartite,
    has_mono_kst,
    min_t_arrowing,
)
from .closed_forms import ClosedFormResult, limit_q1, limit_q1_star, limit_q2
from .compositions import Composition, enumerate_compositions, pi_s
from .errors import InstanceTooLargeError, SearchBudgetExceededError
from .exactnum import (
    Rational,
    approx_decimal,
    binom,
    falling_factorial,
    format_rational,
    parse_rational,
    rat_normalize,
)
from .ramsey_core import (
    LimitResult,
    ProblemSpec,
    build_lp,
    compute_limit,
    sigma,
    t_min,
    t_prime,
    witness,
)
from .simplex import LpOutcome, LpProblem, check_feasible, solve_lp
from .weights import (
    BipGraph,
    RColouring,
    Weight,
    colour_subweight,
    dilate,
    graph_in_weight,
    is_colouring,
    k_weight,
    weight_degree,
    weight_embedding,
    weight_in_weight,
    weight_size,
)

__version__ = "0.1.0"

__all__ = [
    "ArrowsResult",
    "BipGraph",
    "ClosedFormResult",
    "Composition",
    "InstanceTooLargeError",
    "LimitResult",
    "LpOutcome",
    "LpProblem",
    "ProblemSpec",
    "RColouring",
    "Rational",
    "SearchBudgetExceededError",
    "SmallGraph",
    "Weight",
    "approx_decimal",
    "arrows",
    "binom",
    "build_lp",
    "check_feasible",
    "colour_subweight",
    "complete",
    "complete_bipartite",
    "compute_limit",
    "dilate",
    "enumerate_compositions",
    "falling_factorial",
    "format_rational",
    "graph_in_weight",
    "has_mono_kst",
    "is_colouring",
    "k_weight",
    "limit_q1",
    "limit_q1_star",
    "limit_q2",
    "min_t_arrowing",
    "parse_rational",
    "pi_s",
    "rat_normalize",
    "sigma",
    "solve_lp",
    "t_min",
    "t_prime",
    "weight_degree",
    "weight_embedding",
    "weight_in_weight",
    "weight_size",
    "witness",
]
