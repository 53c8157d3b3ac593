"""Exact matching and covering solvers, traces and intersection tests."""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .family import FamilyError, KFamily, Matching, SetLike, as_mask, popcount


class MatchingResult(NamedTuple):
    size: int
    matching: Matching


class CoverResult(NamedTuple):
    size: int
    cover: int


def greedy_disjoint(masks: Iterable[int]) -> list[int]:
    chosen = []
    used = 0
    for m in masks:
        if not m & used:
            chosen.append(m)
            used |= m
    return chosen


def max_disjoint(masks: Sequence[int], target: int | None = None) -> list[int]:
    """Maximum collection of pairwise disjoint non-empty masks.

    Works for non-uniform inputs (petal families). Branches include/exclude on
    the smallest remaining mask; bound = chosen + min(#candidates,
    |union of candidates| // smallest candidate size). Stops early once
    ``target`` disjoint sets are found.
    """
    cands = sorted(set(masks))
    if cands and cands[0] == 0:
        raise FamilyError("empty set in a packing instance")
    best = greedy_disjoint(cands)
    if target is not None and len(best) >= target:
        return best[:target]
    if not cands:
        return best
    goal = target if target is not None else _packing_bound(cands)
    if len(best) >= goal:
        return best

    chosen: list[int] = []

    def rec(rest: list[int]) -> bool:
        nonlocal best
        if not rest:
            if len(chosen) > len(best):
                best = list(chosen)
                return len(best) >= goal
            return False
        if len(chosen) + _packing_bound(rest) <= len(best):
            return False
        e = rest[0]
        chosen.append(e)
        if rec([f for f in rest[1:] if not f & e]):
            return True
        chosen.pop()
        return rec(rest[1:])

    rec(cands)
    return best[:target] if target is not None else best


def _packing_bound(cands: Sequence[int]) -> int:
    union = 0
    smallest = 64
    for m in cands:
        union |= m
        c = popcount(m)
        if c < smallest:
            smallest = c
    return min(len(cands), popcount(union) // smallest)


def maximum_matching(F: KFamily) -> MatchingResult:
    if F.k == 0:
        # the only possible edge is the empty set, which matches with nothing
        m = Matching(F.edges[:1])
        return MatchingResult(len(m), m)
    best = max_disjoint(F.edges)
    return MatchingResult(len(best), Matching(tuple(sorted(best))))


def matching_number(F: KFamily) -> int:
    return maximum_matching(F).size


def minimum_cover(F: KFamily) -> CoverResult:
    """Minimum transversal by branching over the vertices of the first uncovered edge."""
    edges = list(F.edges)
    if not edges:
        return CoverResult(0, 0)
    if F.k == 0:
        raise FamilyError("a family containing the empty set has no transversal")
    # union of a maximal matching meets every edge
    best_cover = 0
    for e in greedy_disjoint(edges):
        best_cover |= e
    best = popcount(best_cover)

    def rec(uncovered: list[int], chosen: int, forbidden: int, depth: int) -> None:
        nonlocal best, best_cover
        if not uncovered:
            if depth < best:
                best, best_cover = depth, chosen
            return
        for f in uncovered:
            if not f & ~forbidden:
                return
        if depth + len(greedy_disjoint(uncovered)) >= best:
            return
        e = uncovered[0] & ~forbidden
        tried = 0
        while e:
            bit = e & -e
            e ^= bit
            rec([f for f in uncovered if not f & bit], chosen | bit, forbidden | tried, depth + 1)
            tried |= bit

    rec(edges, 0, 0, 0)
    return CoverResult(best, best_cover)


def covering_number(F: KFamily) -> int:
    return minimum_cover(F).size


def trace(F: KFamily, A: SetLike, B: SetLike) -> KFamily:
    """``F(A, B) = {E - A : E in F, E & B == A}``, on the same ground set."""
    a, b = as_mask(A), as_mask(B)
    if a & ~b:
        raise FamilyError("trace requires A to be a subset of B")
    k = F.k - popcount(a)
    if k < 0:
        return KFamily.empty(0, F.n)
    return KFamily(k, F.n, tuple(e & ~a for e in F.edges if e & b == a))


def link(F: KFamily, A: SetLike) -> KFamily:
    """``F(A) = F(A, A)``."""
    return trace(F, A, A)


def delete(F: KFamily, A: SetLike) -> KFamily:
    """``F(A-bar) = F(empty, A)``: edges avoiding ``A``."""
    return trace(F, 0, A)


def is_t_intersecting(F: KFamily, t: int) -> bool:
    if t < 1:
        raise FamilyError("t must be at least 1")
    edges = F.edges
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if popcount(e & f) < t:
                return False
    return True


def intersection_level(F: KFamily) -> int:
    """Largest ``t`` with ``F`` t-intersecting (``k`` for families with < 2 edges)."""
    edges = F.edges
    level = F.k
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            c = popcount(e & f)
            if c < level:
                level = c
    return level


def is_matching_in(F: KFamily, M: Matching) -> bool:
    return all(e in F for e in M.edges)
