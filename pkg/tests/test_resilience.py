import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from conftest import families
from oracles import as_sets, naive_resilient
from hyperres.constructions import complete_k_graph, fixture_four_edges
from hyperres.core import (
    FamilyError,
    KFamily,
    covering_number,
    delete,
    is_t_intersecting,
    k_subsets,
    mask_of,
    matching_number,
)
from hyperres.resilience import is_t_resilient, maximal_intersecting_closure, resilience_profile

FANO = [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)]


def test_is_t_resilient_examples():
    assert is_t_resilient(complete_k_graph(8, 3), 2)
    assert not is_t_resilient(KFamily.from_sets(3, 3, [(1, 2, 3)]), 1)
    assert is_t_resilient(complete_k_graph(5, 2), 1)


def test_t_zero_is_always_resilient():
    assert is_t_resilient(fixture_four_edges(), 0)


def test_t_out_of_range():
    with pytest.raises(FamilyError):
        is_t_resilient(complete_k_graph(5, 3), 6)
    with pytest.raises(FamilyError):
        is_t_resilient(complete_k_graph(5, 3), -1)


def test_profile_complete_3_graph():
    rep = resilience_profile(complete_k_graph(8, 3))
    assert (rep.nu, rep.max_t) == (2, 2)
    assert rep.violating_set.mask == mask_of((1, 2, 3))
    assert rep.to_json() == {"nu": 2, "max_t": 2, "violating_set": [1, 2, 3]}


def test_profile_two_disjoint_triples():
    rep = resilience_profile(KFamily.from_sets(3, 6, [(1, 2, 3), (4, 5, 6)]))
    assert rep.max_t == 0 and rep.violating_set.mask == mask_of((1,))


def test_profile_fixture():
    F = fixture_four_edges()
    rep = resilience_profile(F)
    assert rep.nu == 2 and rep.max_t == 0
    # deleting 5 or 6 drops nu, and 5 is the least such vertex
    drops = [v for v in range(1, 11) if matching_number(delete(F, mask_of((v,)))) < 2]
    assert drops == [5, 6]
    assert rep.violating_set.mask == mask_of((5,))


def test_profile_rejects_empty():
    with pytest.raises(FamilyError):
        resilience_profile(KFamily.empty(3, 5))


@given(families(max_n=6, max_edges=8))
def test_resilience_matches_oracle(F):
    if not len(F):
        return
    sets = as_sets(F)
    for t in range(F.k + 1):
        assert is_t_resilient(F, t) == naive_resilient(sets, F.n, t)


@given(families(max_n=7, max_edges=10))
def test_profile_invariants(F):
    if not len(F):
        return
    rep = resilience_profile(F)
    assert rep.max_t < F.k
    assert rep.violating_set.size == rep.max_t + 1
    assert matching_number(delete(F, rep.violating_set.mask)) < rep.nu
    # monotone: resilient exactly up to max_t
    for t in range(F.k + 1):
        assert is_t_resilient(F, t) == (t <= rep.max_t)


def _random_intersecting(rng, k, n, max_edges):
    chosen = []
    for e in rng.sample(k_subsets(n, k), len(k_subsets(n, k))):
        if all(e & f for f in chosen):
            chosen.append(e)
        if len(chosen) == max_edges:
            break
    return KFamily(k, n, tuple(chosen))


def test_intersecting_resilience_iff_cover_number_k():
    rng = random.Random(11)
    seen_both = set()
    for _ in range(300):
        F = _random_intersecting(rng, 3, rng.randint(5, 7), rng.randint(1, 10))
        resilient = is_t_resilient(F, 2)
        assert resilient == (covering_number(F) == 3)
        seen_both.add(resilient)
    assert seen_both == {True, False}


def _is_maximal_intersecting(F):
    return is_t_intersecting(F, 1) and all(
        not all(e & f for f in F.edges) for e in k_subsets(F.n, F.k) if e not in F
    )


def test_closure_of_complete_graph_is_itself():
    K5 = complete_k_graph(5, 3)
    assert maximal_intersecting_closure(K5) == K5


def test_closure_of_fano_minus_a_line():
    F = KFamily.from_sets(3, 7, [l for l in FANO if l != (3, 4, 7)])
    assert covering_number(F) == 3
    C = maximal_intersecting_closure(F)
    assert set(F.edges) <= set(C.edges)
    assert len(C) == 10
    assert covering_number(C) == 3
    assert _is_maximal_intersecting(C)
    added = sorted(tuple(e) for e in C.edge_lists() if mask_of(e) not in F)
    assert added == [(1, 2, 5), (1, 2, 6), (1, 5, 6), (2, 5, 6)]


def test_closure_of_fano_plane_is_fano_plane():
    F = KFamily.from_sets(3, 7, FANO)
    assert maximal_intersecting_closure(F) == F


def test_closure_output_on_random_intersecting_families():
    rng = random.Random(5)
    done = 0
    while done < 30:
        F = _random_intersecting(rng, 3, rng.randint(5, 7), 10)
        if covering_number(F) != 3:
            continue
        C = maximal_intersecting_closure(F)
        assert set(F.edges) <= set(C.edges)
        assert covering_number(C) == 3 and _is_maximal_intersecting(C)
        done += 1


@pytest.mark.parametrize("edges", [
    [(1, 2, 3)],
    [(1, 2, 3), (4, 5, 6)],
    [],
])
def test_closure_errors(edges):
    with pytest.raises(FamilyError):
        maximal_intersecting_closure(KFamily.from_sets(3, 7, edges))


def test_no_complete_family_is_k_resilient():
    for n, k in ((5, 3), (8, 3), (5, 2), (7, 4)):
        assert not is_t_resilient(complete_k_graph(n, k), k)


@given(st.integers(2, 3), st.integers(1, 2))
def test_complete_constructions_are_k_minus_1_resilient(k, s):
    n = s * k + k - 1
    F = complete_k_graph(n, k)
    assert matching_number(F) == s and is_t_resilient(F, k - 1)


def test_intersecting_fact_exhaustive_on_five_vertices():
    universe = k_subsets(5, 3)
    checked = 0
    for bits in range(1, 1 << len(universe)):
        F = KFamily(3, 5, tuple(e for i, e in enumerate(universe) if bits >> i & 1))
        if not is_t_intersecting(F, 1):
            continue
        checked += 1
        assert is_t_resilient(F, 2) == (covering_number(F) == 3)
    assert checked > 100
