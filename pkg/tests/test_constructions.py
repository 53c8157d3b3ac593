from math import comb

import pytest

from hyperres.constructions import (
    FIXTURE_EDGES,
    complete_k_graph,
    construct,
    erdos_family,
    fixture_four_edges,
    graph_gallery,
)
from hyperres.core import FamilyError, matching_number
from hyperres.resilience import is_t_resilient


def test_complete_sizes():
    assert len(complete_k_graph(8, 3)) == 56
    assert len(complete_k_graph(5, 3)) == 10
    assert len(complete_k_graph(4, 4)) == 1
    with pytest.raises(FamilyError):
        complete_k_graph(3, 4)


def test_erdos_sizes():
    assert len(erdos_family(9, 3, 2)) == 84 - 35 == 49
    assert erdos_family(6, 3, 6) == complete_k_graph(6, 3)
    for n in range(6, 12):
        for k in (2, 3):
            for s in (1, 2):
                if n >= (s + 1) * k:
                    E = erdos_family(n, k, s)
                    assert len(E) == comb(n, k) - comb(n - s, k)
                    assert matching_number(E) == s


def test_complete_constructions_resilient():
    for k in (2, 3):
        for s in (1, 2, 3):
            n = s * k + k - 1
            if n <= 11:
                F = complete_k_graph(n, k)
                assert matching_number(F) == s and is_t_resilient(F, k - 1)


def test_fixture():
    F = fixture_four_edges()
    assert (F.k, F.n) == (3, 10)
    assert F.edge_lists() == [list(e) for e in FIXTURE_EDGES]


def test_gallery():
    g = graph_gallery()
    assert (len(g["C4"]), g["C4"].n) == (4, 4)
    assert len(g["K5"]) == 10
    star = g["star3"]
    assert len(star) == 3 and star.edges[0] & star.edges[1] & star.edges[2]
    assert set(g) == {"triangle", "C4", "P2", "P3", "P4", "star2", "star3", "K3", "K4", "K5", "K6"}


def test_construct_names():
    assert construct("complete:8,3") == complete_k_graph(8, 3)
    assert construct("erdos:9,3,2") == erdos_family(9, 3, 2)
    assert construct("fixture") == fixture_four_edges()
    assert construct("gallery:K5") == graph_gallery()["K5"]


@pytest.mark.parametrize("name", ["complete:8", "complete:a,b", "gallery:K9", "nosuch", "erdos:9,3"])
def test_construct_errors(name):
    with pytest.raises(FamilyError):
        construct(name)
