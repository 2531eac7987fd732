from itertools import combinations

import pytest

from oracles import brute_covers, brute_hilbert
from qgr.grassmann import preferred_rank
from qgr.poset import (
    all_maximal_paths,
    covers,
    finite_differences,
    generators,
    gk_dimension,
    growth_degree,
    hasse_dot,
    hasse_edges,
    hilbert_dimension,
    maximal_path_length,
    poset_axioms_hold,
)
from qgr.qmatrix import Ambient
from qgr.verify import HASSE36_EDGES


def test_covers_examples():
    assert covers((1, 3, 4), 6) == [(1, 3, 5), (2, 3, 4)]
    assert covers((3, 4), 4) == []
    assert covers((4, 5, 6), 6) == []
    assert covers((1, 2), 4) == [(1, 3)]


@pytest.mark.parametrize("m,n", [(2, 4), (2, 5), (3, 5), (3, 6)])
def test_covers_match_brute_force(m, n):
    for A in generators(m, n):
        assert covers(A, n) == brute_covers(A, n)


@pytest.mark.parametrize("m,n", [(2, 4), (2, 5), (3, 6)])
def test_poset_axioms(m, n):
    assert poset_axioms_hold(m, n)
    assert len(generators(m, n)) == len(list(combinations(range(n), m)))


def test_maximal_path_length_examples():
    assert maximal_path_length(2, 4) == 5
    assert maximal_path_length(3, 6) == 10
    assert maximal_path_length(1, 2) == 2


@pytest.mark.parametrize("m,n", [(2, 4), (2, 5), (1, 4), (3, 5)])
def test_every_maximal_path_has_the_same_length(m, n):
    paths = all_maximal_paths(m, n)
    assert paths
    assert {len(p) for p in paths} == {m * (n - m) + 1}
    for p in paths:
        for a, b in zip(p, p[1:]):
            assert b in covers(a, n)


def test_hilbert_examples():
    assert hilbert_dimension(2, 4, 1) == 6
    assert hilbert_dimension(2, 4, 0) == 1
    assert hilbert_dimension(2, 4, 2) == 20
    with pytest.raises(ValueError):
        hilbert_dimension(2, 4, -1)


@pytest.mark.parametrize("m,n", [(2, 4), (2, 5), (3, 6)])
@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_hilbert_dp_matches_brute_force(m, n, d):
    assert hilbert_dimension(m, n, d) == brute_hilbert(m, n, d)


def test_hilbert_matches_basis_rank():
    for d in range(4):
        count, rank = preferred_rank(Ambient(2, 4), d)
        assert hilbert_dimension(2, 4, d) == rank == count


def test_hilbert_growth_degree_four():
    vals = [hilbert_dimension(2, 4, d) for d in range(1, 7)]
    diffs = finite_differences(vals)
    assert any(diffs[4]) and not any(diffs[5])
    assert growth_degree(2, 4) == gk_dimension(2, 4) - 1


def test_gk_examples():
    assert gk_dimension(2, 4) == 5
    assert gk_dimension(3, 6) == 10
    for n in range(1, 7):
        assert gk_dimension(1, n) == n
    for m, n in [(2, 4), (2, 5), (3, 6), (2, 6)]:
        assert gk_dimension(m, n) == maximal_path_length(m, n) == growth_degree(m, n) + 1


def test_hasse_diagram_3x6():
    edges = set()
    for tok in HASSE36_EDGES.split():
        hi, lo = tok.split("-")
        edges.add((tuple(map(int, lo)), tuple(map(int, hi))))
    assert len(generators(3, 6)) == 20
    assert set(hasse_edges(3, 6)) == edges
    dot = hasse_dot(3, 6)
    assert dot.count("->") == 30 and '"123" -> "124"' in dot
