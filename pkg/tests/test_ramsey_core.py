from fractions import Fraction

import pytest

from sizeramsey.errors import InstanceTooLargeError
from sizeramsey.ramsey_core import (
    ProblemSpec,
    build_lp,
    compute_limit,
    sigma,
    t_min,
    t_prime,
    witness,
)

F = Fraction

TWIN_22 = ProblemSpec(((2, F(1)), (2, F(1))))
STAR_VS_K22 = ProblemSpec(((1, F(1)),), (2,))
SINGLE_K2N = ProblemSpec(((2, F(1)),))


def test_spec_validation():
    with pytest.raises(ValueError):
        ProblemSpec(())
    with pytest.raises(ValueError):
        ProblemSpec(((0, F(1)),))
    with pytest.raises(ValueError):
        ProblemSpec(((2, F(0)),))
    with pytest.raises(ValueError):
        ProblemSpec(((2, F(1)),), (0,))
    spec = ProblemSpec([(2, 1)], [3])  # lists and ints are coerced
    assert spec.dilating == ((2, F(1)),)
    assert spec.q == 1 and spec.r == 2


def test_sigma():
    assert sigma(TWIN_22) == 2
    assert sigma(STAR_VS_K22) == 1
    assert sigma(ProblemSpec(((1, F(1)),))) == 0


def test_t_min():
    assert t_min(TWIN_22) == 2
    assert t_min(ProblemSpec(((1, F(3, 2)),))) == F(3, 2)
    assert t_min(ProblemSpec(((2, F(1)), (3, F(2)), (1, F(1, 2))))) == F(7, 2)


def test_build_lp_twin_pair():
    lp = build_lp(TWIN_22, 3)
    assert lp.objective == (F(1),) * 4
    assert lp.constraint_matrix == (
        (F(0), F(0), F(1), F(3)),
        (F(3), F(1), F(0), F(0)),
    )
    assert lp.rhs == (F(3), F(3))


def test_build_lp_frozen_tail():
    lp = build_lp(STAR_VS_K22, 2)
    assert lp.objective == (F(1),)
    assert lp.constraint_matrix == ((F(1),),)
    assert lp.rhs == (F(2),)


def test_build_lp_single_graph():
    lp = build_lp(SINGLE_K2N, 2)
    assert lp.constraint_matrix == ((F(1),),)
    assert lp.rhs == (F(1),)
    with pytest.raises(ValueError):
        build_lp(SINGLE_K2N, 1)  # s must exceed sigma


def test_t_prime_values():
    assert t_prime(TWIN_22, 3) == 6
    assert t_prime(STAR_VS_K22, 2) == 2
    assert t_prime(SINGLE_K2N, 2) == 1


def test_limit_twin_pair():
    res = compute_limit(TWIN_22)
    assert res.value == 18
    assert res.argmin_s == 3
    assert res.t_prime_at_argmin == 6
    assert [row[0] for row in res.table] == [3, 4, 5, 6, 7, 8]
    assert res.terminated_at == 9


def test_limit_star_vs_k22():
    res = compute_limit(STAR_VS_K22)
    assert res.value == 4
    assert res.argmin_s == 2


def test_limit_single_graph_degenerates_to_its_own_size():
    res = compute_limit(SINGLE_K2N)
    assert res.value == 2
    assert res.argmin_s == 2


def test_limit_star_vs_k33():
    # independent scan: with one growing star the candidate at size s is
    # s * s / (s - 2), minimized over s >= 3
    oracle = min(F(s * s, s - 2) for s in range(3, 40))
    assert oracle == 8
    assert compute_limit(ProblemSpec(((1, F(1)),), (3,))).value == 8


def test_witness_values():
    assert witness(TWIN_22) == (3, F(6))
    assert witness(STAR_VS_K22) == (2, F(2))
    assert witness(SINGLE_K2N) == (2, F(1))


def test_table_invariants():
    for spec in (TWIN_22, STAR_VS_K22, ProblemSpec(((2, F(1)),), (2, 2))):
        res = compute_limit(spec)
        sig = sigma(spec)
        tmin = t_min(spec)
        assert res.table[0][0] == sig + 1  # scan always starts just above sigma
        assert res.value == min(cand for _, _, cand in res.table)
        assert res.value == res.argmin_s * res.t_prime_at_argmin
        assert res.value >= (sig + 1) * tmin
        for s, tp, cand in res.table:
            assert s > sig
            assert tp >= tmin
            assert cand == s * tp
            assert res.value <= cand


def test_scaling_covariance():
    for c in (F(1, 2), F(3), F(7, 5)):
        for spec in (TWIN_22, STAR_VS_K22):
            base = compute_limit(spec)
            scaled_spec = ProblemSpec(
                tuple((s, c * t) for s, t in spec.dilating), spec.fixed
            )
            scaled = compute_limit(scaled_spec)
            assert scaled.value == c * base.value
            assert scaled.argmin_s == base.argmin_s
            assert [row[0] for row in scaled.table] == [row[0] for row in base.table]


def test_monotone_in_density():
    base = compute_limit(TWIN_22).value
    for bump in (F(3, 2), F(2), F(5)):
        grown = compute_limit(ProblemSpec(((2, bump), (2, F(1))))).value
        assert grown >= base
    staged = [
        compute_limit(ProblemSpec(((1, t),), (2,))).value
        for t in (F(1), F(3, 2), F(2), F(4))
    ]
    assert staged == sorted(staged)


def test_column_cap_reported_as_instance_too_large():
    spec = ProblemSpec(((2, F(1)), (2, F(1)), (2, F(1)), (2, F(1))))
    with pytest.raises(InstanceTooLargeError):
        compute_limit(spec, max_columns=5)
