import random

import pytest

from sizeramsey.arrowing import (
    SmallGraph,
    arrows,
    complete,
    complete_bipartite,
    has_mono_kst,
    min_t_arrowing,
)
from sizeramsey.errors import SearchBudgetExceededError


def test_complete_bipartite_shape():
    g = complete_bipartite(2, 2)
    assert g.vertex_count == 4
    assert len(g.edges) == 4
    g = complete_bipartite(3, 7)
    assert g.vertex_count == 10
    assert len(g.edges) == 21
    assert g.edges[:3] == ((0, 3), (0, 4), (0, 5))  # left-major order
    assert complete_bipartite(1, 1).edges == ((0, 1),)
    with pytest.raises(ValueError):
        complete_bipartite(0, 4)
    with pytest.raises(ValueError):
        complete_bipartite(16, 17)


def test_complete_shape():
    assert len(complete(3).edges) == 3
    assert len(complete(6).edges) == 15
    assert complete(2).edges == ((0, 1),)
    with pytest.raises(ValueError):
        complete(1)
    with pytest.raises(ValueError):
        complete(11)


def test_small_graph_validation():
    with pytest.raises(ValueError):
        SmallGraph(3, ((0, 0),))
    with pytest.raises(ValueError):
        SmallGraph(3, ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        SmallGraph(2, ((0, 2),))


def test_has_mono_kst():
    g = complete_bipartite(2, 2)
    full = (1 << 4) - 1
    assert has_mono_kst(g, full, 2, 2)
    for dropped in range(4):
        assert not has_mono_kst(g, full & ~(1 << dropped), 2, 2)
    k6 = complete(6)
    assert has_mono_kst(k6, (1 << 15) - 1, 2, 2)
    # asymmetric sides must be found in either role
    g = complete_bipartite(2, 3)
    full = (1 << 6) - 1
    assert has_mono_kst(g, full, 2, 3)
    assert has_mono_kst(g, full, 3, 2)


def test_arrows_k6_twin_squares():
    assert arrows(complete(6), [(2, 2), (2, 2)], 2).arrows


def test_arrows_k36_avoided_with_sound_certificate():
    g = complete_bipartite(3, 6)
    result = arrows(g, [(2, 2), (2, 2)], 2)
    assert not result.arrows
    cert = result.certificate
    assert cert is not None and len(cert) == 18
    assert set(cert) <= {"1", "2"}
    for colour in "12":
        mask = sum(1 << i for i, c in enumerate(cert) if c == colour)
        assert not has_mono_kst(g, mask, 2, 2)


def test_arrows_k36_certificate_is_deterministic():
    g = complete_bipartite(3, 6)
    first = arrows(g, [(2, 2), (2, 2)], 2)
    second = arrows(g, [(2, 2), (2, 2)], 2)
    assert first == second
    # golden value: lexicographically first avoiding colouring in edge order
    assert first.certificate == "111222122112212121"


def test_arrows_star_pigeonhole():
    assert arrows(complete_bipartite(1, 4), [(1, 2), (1, 2)], 2).arrows
    assert arrows(complete_bipartite(1, 2), [(1, 2), (1, 2)], 2).arrows is False


def test_arrows_edge_monotone():
    # adding edges to an arrowing host preserves arrowing
    forb_stars = [(1, 2), (1, 2)]
    host = SmallGraph(5, tuple((0, v) for v in range(1, 4)))
    assert arrows(host, forb_stars, 2).arrows
    bigger = SmallGraph(5, host.edges + ((0, 4),))
    assert arrows(bigger, forb_stars, 2).arrows
    forb_squares = [(2, 2), (2, 2)]
    k6_padded = SmallGraph(7, complete(6).edges)
    assert arrows(k6_padded, forb_squares, 2).arrows
    assert arrows(complete(7), forb_squares, 2).arrows


def test_arrows_symmetric_under_forbidden_permutation():
    rng = random.Random(11)
    forb = [(1, 2), (1, 3), (2, 2)]
    hosts = [complete_bipartite(2, 5), complete_bipartite(3, 4), complete(5)]
    for host in hosts:
        base = arrows(host, forb, 3).arrows
        for _ in range(4):
            shuffled = forb[:]
            rng.shuffle(shuffled)
            assert arrows(host, shuffled, 3).arrows == base


def test_min_t_arrowing_values():
    assert min_t_arrowing(3, [(2, 2), (2, 2)], 2, 8) == 7
    # two forbidden stars K_{1,2}: three edges force a repeat colour
    assert min_t_arrowing(1, [(1, 2), (1, 2)], 2, 5) == 3
    assert min_t_arrowing(2, [(1, 1)], 1, 3) == 1
    assert min_t_arrowing(3, [(2, 2), (2, 2)], 2, 6) is None


def test_budget_exceeded_is_distinct():
    with pytest.raises(SearchBudgetExceededError):
        arrows(complete_bipartite(3, 7), [(2, 2), (2, 2)], 2, budget=1000)
    with pytest.raises(SearchBudgetExceededError):
        min_t_arrowing(3, [(2, 2), (2, 2)], 2, 8, budget=1000)


def test_argument_validation():
    with pytest.raises(ValueError):
        arrows(complete(3), [(2, 2)], 2)
    with pytest.raises(ValueError):
        arrows(complete(3), [(0, 2)], 1)
