"""t-resilience, resilience profiles and the maximal intersecting closure."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import (
    FamilyError,
    KFamily,
    VertexSet,
    covering_number,
    is_t_intersecting,
    k_subsets,
    max_disjoint,
    maximum_matching,
    vertices_of,
)


@dataclass(frozen=True)
class ResilienceReport:
    nu: int
    max_t: int
    violating_set: VertexSet | None

    def to_json(self) -> dict:
        return {
            "nu": self.nu,
            "max_t": self.max_t,
            "violating_set": self.violating_set.vertices() if self.violating_set else None,
        }


class _DeletionOracle:
    """Memoized ``nu(F(T-bar))`` keyed by the deleted mask ``T``."""

    def __init__(self, F: KFamily):
        self.F = F
        result = maximum_matching(F)
        self.nu = result.size
        self.matched = result.matching.union
        self._memo: dict[int, int] = {0: self.nu}

    def nu_without(self, T: int) -> int:
        cached = self._memo.get(T)
        if cached is not None:
            return cached
        if not T & self.matched:
            value = self.nu
        else:
            rest = [e for e in self.F.edges if not e & T]
            # only need to know whether nu is still reached
            value = len(max_disjoint(rest, target=self.nu))
        self._memo[T] = value
        return value

    def drops(self, T: int) -> bool:
        return self.nu_without(T) < self.nu


def _deletion_sets(support: int, size: int) -> list[int]:
    """``size``-subsets of ``support`` in ascending mask order."""
    masks = [sum(1 << (v - 1) for v in c) for c in combinations(vertices_of(support), size)]
    masks.sort()
    return masks


def _first_violation(oracle: _DeletionOracle, size: int) -> int | None:
    # any violating set must meet the union of a fixed maximum matching
    for T in _deletion_sets(oracle.F.support, size):
        if T & oracle.matched and oracle.drops(T):
            return T
    return None


def is_t_resilient(F: KFamily, t: int) -> bool:
    """True iff deleting any ``<= t`` vertices keeps the matching number."""
    if t < 0 or t > F.n:
        raise FamilyError(f"t={t} outside 0..n")
    oracle = _DeletionOracle(F)
    if oracle.nu == 0:
        return True
    # a violating set of size j extends to one of every size >= j, so size t decides
    size = min(t, F.support.bit_count())
    return _first_violation(oracle, size) is None


def resilience_profile(F: KFamily) -> ResilienceReport:
    if not F.edges:
        raise FamilyError("resilience profile of the empty family is undefined")
    oracle = _DeletionOracle(F)
    for size in range(1, F.k + 1):
        T = _first_violation(oracle, size)
        if T is not None:
            return ResilienceReport(oracle.nu, size - 1, VertexSet(T))
    # unreachable: deleting the vertices of an edge always drops nu
    raise AssertionError("family is k-resilient")


def maximal_intersecting_closure(F: KFamily) -> KFamily:
    """Add k-subsets of [n], in ascending mask order, that meet every current edge."""
    if not F.edges:
        raise FamilyError("closure needs a non-empty family")
    if not is_t_intersecting(F, 1):
        raise FamilyError("closure needs an intersecting family")
    tau = covering_number(F)
    if tau != F.k:
        raise FamilyError(f"closure needs covering number k={F.k}, got {tau}")
    edges = list(F.edges)
    present = set(edges)
    for cand in k_subsets(F.n, F.k):
        if cand in present:
            continue
        if all(cand & e for e in edges):
            edges.append(cand)
            present.add(cand)
    return F.with_edges(edges)
