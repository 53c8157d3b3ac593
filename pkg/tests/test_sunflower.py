import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from conftest import families
from oracles import as_sets, naive_has_pseudo_sunflower, random_edge_lists
from hyperres.constructions import complete_k_graph, graph_gallery
from hyperres.core import FamilyError, KFamily, mask_of, popcount
from hyperres.search.suite import all_graphs
from hyperres.sunflower import (
    GraphClass,
    PseudoSunflower,
    assert_furedi,
    classify_sunflower_free_graph,
    find_pseudo_sunflower,
    has_pseudo_sunflower,
)

G = graph_gallery()
STAR3 = KFamily.from_sets(2, 4, [(1, 2), (1, 3), (1, 4)])


def test_star_has_size_three():
    w = find_pseudo_sunflower(STAR3, 3)
    assert w.center == mask_of((1,))
    assert sorted(p & ~w.center for p in w.members()) == [mask_of((v,)) for v in (2, 3, 4)]
    assert w.is_valid_in(STAR3)


def test_c4_has_none_of_size_three():
    assert find_pseudo_sunflower(G["C4"], 3) is None


def test_complete_3_graph_largest_is_six():
    # petals S - C are non-empty and avoid C | (S0 - C): at most 8 - 3 of them
    F = complete_k_graph(8, 3)
    w = find_pseudo_sunflower(F, 6)
    assert w.is_valid_in(F)
    assert w.to_json() == {
        "center": [2, 3],
        "core": [1, 2, 3],
        "petals": [[2, 3, 4], [2, 3, 5], [2, 3, 6], [2, 3, 7], [2, 3, 8]],
    }
    assert find_pseudo_sunflower(F, 7) is None


def test_complete_3_graph_on_six_by_oracle():
    F = complete_k_graph(6, 3)
    for size in range(2, 6):
        assert has_pseudo_sunflower(F, size) == naive_has_pseudo_sunflower(as_sets(F), size)


def test_witness_is_normalized():
    F = complete_k_graph(8, 3)
    for size in range(2, 7):
        w = find_pseudo_sunflower(F, size)
        assert popcount(w.core & ~w.center) == 1


def test_size_below_two_rejected():
    with pytest.raises(FamilyError):
        find_pseudo_sunflower(STAR3, 1)


def test_detection_is_at_least_size():
    # a larger sunflower is truncated to the requested size
    w = find_pseudo_sunflower(STAR3, 2)
    assert w.size == 2 and w.is_valid_in(STAR3)


def test_invalid_witnesses_rejected():
    a, b, c = mask_of((1, 2)), mask_of((1, 3)), mask_of((2, 3))
    T = G["triangle"]
    assert not PseudoSunflower(mask_of((1,)), a, (b, c)).is_valid_in(T)
    assert not PseudoSunflower(a, a, (b,)).is_valid_in(T)  # center must be a proper subset
    assert not PseudoSunflower(mask_of((1,)), a, (mask_of((1, 4)),)).is_valid_in(T)


@given(families(max_n=8, max_edges=8), st.integers(2, 5))
def test_agrees_with_naive_oracle(F, size):
    w = find_pseudo_sunflower(F, size)
    assert (w is not None) == naive_has_pseudo_sunflower(as_sets(F), size)
    if w is not None:
        assert w.size == size and w.is_valid_in(F)


def test_agrees_with_naive_oracle_seeded():
    rng = random.Random(3)
    for _ in range(300):
        k = rng.choice((2, 3))
        n = rng.randint(k, 8)
        F = KFamily.from_sets(k, n, random_edge_lists(rng, k, n, 8))
        for size in (2, 3, 4):
            assert has_pseudo_sunflower(F, size) == naive_has_pseudo_sunflower(as_sets(F), size)


def test_furedi_examples():
    v = assert_furedi(G["K5"], 2)
    assert v.bound == 4 and not v.bound_satisfied and v.witness.size == 3 and not v.internal_error
    v = assert_furedi(G["C4"], 2)
    assert v.bound_satisfied and v.witness is None
    v = assert_furedi(G["triangle"], 2)
    assert v.bound_satisfied and v.witness is None
    assert v.to_json()["bound"] == 4


@given(families(max_n=7, max_edges=12), st.integers(1, 3))
def test_furedi_property(F, r):
    v = assert_furedi(F, r)
    assert not v.internal_error
    if len(F) > r ** F.k:
        assert v.witness.size == r + 1 and v.witness.is_valid_in(F)


@pytest.mark.parametrize("name, expected", [
    ("triangle", GraphClass.TRIANGLE),
    ("P4", GraphClass.SUBGRAPH_OF_C4),
    ("C4", GraphClass.SUBGRAPH_OF_C4),
    ("P2", GraphClass.SUBGRAPH_OF_C4),
    ("star3", GraphClass.NEITHER),
    ("K4", GraphClass.NEITHER),
])
def test_classification_examples(name, expected):
    assert classify_sunflower_free_graph(G[name]) is expected


def test_classification_needs_graphs():
    with pytest.raises(FamilyError):
        classify_sunflower_free_graph(complete_k_graph(5, 3))


def _brute_embeds_in_c4(sets, n):
    verts = sorted(frozenset().union(*sets)) if sets else []
    if len(verts) > 4:
        return False
    from itertools import permutations
    pool = verts + [None] * (4 - len(verts))
    for cyc in permutations(pool):
        ring = {frozenset((cyc[i], cyc[(i + 1) % 4])) for i in range(4)}
        if all(e in ring for e in sets):
            return True
    return False


def test_sunflower_free_graphs_on_five_vertices_by_oracle():
    for G5 in all_graphs(5):
        sets = as_sets(G5)
        free = not naive_has_pseudo_sunflower(sets, 3)
        triangle = len(sets) == 3 and len(frozenset().union(*sets)) == 3
        assert free == (triangle or _brute_embeds_in_c4(sets, 5))
