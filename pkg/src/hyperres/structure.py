"""Structural witnesses for families with a fixed matching number.

Cross-permutations between maximum matchings, the family of unions of
``s``-matchings, edge profiles relative to a matching, and the exact
half-integer pair-weight decompositions used to count edges meeting two
disjoint edges or a pair of vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .core import (
    FamilyError,
    KFamily,
    Matching,
    as_mask,
    matching_number,
    popcount,
    vertices_of,
)
from .core.family import SetLike, mask_of

DEFAULT_UNION_BUDGET = 1_000_000


# -- cross permutations ------------------------------------------------------

@dataclass(frozen=True)
class CrossPermutation:
    """``sigma[i] = j`` with ``M1[i] & M2[j]`` non-empty, or a Hall violator."""

    sigma: tuple[int, ...] | None
    hall_violator: tuple[int, ...] | None = None

    @property
    def exists(self) -> bool:
        return self.sigma is not None


def _bipartite_matching(adj: list[list[int]], n_right: int) -> list[int]:
    """Augmenting-path maximum matching; returns match_left (-1 if unmatched)."""
    match_left = [-1] * len(adj)
    match_right = [-1] * n_right

    def augment(u: int, seen: list[bool]) -> bool:
        for v in adj[u]:
            if seen[v]:
                continue
            seen[v] = True
            if match_right[v] == -1 or augment(match_right[v], seen):
                match_left[u] = v
                match_right[v] = u
                return True
        return False

    for u in range(len(adj)):
        augment(u, [False] * n_right)
    return match_left


def _hall_violator(adj: list[list[int]], match_left: list[int], n_right: int) -> tuple[int, ...]:
    """Left vertices reachable by alternating paths from an unmatched one."""
    match_right = [-1] * n_right
    for u, v in enumerate(match_left):
        if v != -1:
            match_right[v] = u
    root = match_left.index(-1)
    left_seen = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            w = match_right[v]
            if w != -1 and w not in left_seen:
                left_seen.add(w)
                stack.append(w)
    return tuple(sorted(left_seen))


def cross_permutation_blocks(blocks1: tuple[int, ...], blocks2: tuple[int, ...]) -> CrossPermutation:
    s = len(blocks1)
    adj = [[j for j, b in enumerate(blocks2) if a & b] for a in blocks1]
    match_left = _bipartite_matching(adj, s)
    if -1 in match_left:
        return CrossPermutation(None, _hall_violator(adj, match_left, s))
    return CrossPermutation(tuple(match_left))


def matchings_cross_permutation(F: KFamily, M1: Matching, M2: Matching) -> CrossPermutation:
    """Permutation pairing intersecting blocks of two equal-size matchings of ``F``.

    When none exists the returned Hall violator ``X`` has fewer than ``|X|``
    neighbours, which certifies a matching larger than ``len(M1)``.
    """
    for M in (M1, M2):
        if not all(e in F for e in M.edges):
            raise FamilyError("matching uses edges outside the family")
    if len(M1) != len(M2):
        raise FamilyError("matchings have different sizes")
    return cross_permutation_blocks(M1.edges, M2.edges)


# -- s-fold unions -------------------------------------------------------------

class BudgetExceeded(RuntimeError):
    pass


def s_matchings(F: KFamily, s: int, budget: int = DEFAULT_UNION_BUDGET) -> list[tuple[int, ...]]:
    """All ``s``-matchings of ``F`` as ascending edge tuples."""
    edges = F.edges
    out: list[tuple[int, ...]] = []

    def rec(start: int, used: int, chosen: list[int]) -> None:
        if len(chosen) == s:
            out.append(tuple(chosen))
            if len(out) > budget:
                raise BudgetExceeded(f"more than {budget} {s}-matchings")
            return
        for i in range(start, len(edges)):
            e = edges[i]
            if not e & used:
                chosen.append(e)
                rec(i + 1, used | e, chosen)
                chosen.pop()

    rec(0, 0, [])
    return out


def s_fold_union_family(F: KFamily, s: int, budget: int = DEFAULT_UNION_BUDGET) -> KFamily:
    """Unions of all ``s``-matchings of ``F``, an ``s*k``-uniform family."""
    if s < 1:
        raise FamilyError("s must be positive")
    if s * F.k > F.n:
        raise FamilyError("s*k exceeds the ground set")
    unions = set()
    for m in s_matchings(F, s, budget):
        u = 0
        for e in m:
            u |= e
        unions.add(u)
    return KFamily(s * F.k, F.n, tuple(unions))


# -- edge profiles ---------------------------------------------------------------

@dataclass(frozen=True)
class EdgeProfile:
    """Counts of edges by intersection pattern with the blocks of a maximum matching.

    ``one``: meets the union in exactly one vertex; ``block``: meets some
    block in at least two vertices; ``two_blocks``: one vertex in each of two
    blocks and nothing else in the union; ``three_blocks``: one vertex in each
    of at least three blocks; ``outside``: misses the union entirely.
    """

    one: int
    block: int
    two_blocks: int
    three_blocks: int
    outside: int

    @property
    def total(self) -> int:
        return self.one + self.block + self.two_blocks + self.three_blocks + self.outside

    def to_json(self) -> dict:
        return {"T1": self.one, "T21": self.block, "T22": self.two_blocks,
                "T3": self.three_blocks, "outside": self.outside}


def classify_edge(edge: int, blocks: tuple[int, ...]) -> str:
    hits = [popcount(edge & b) for b in blocks]
    hits = [h for h in hits if h]
    if not hits:
        return "outside"
    if max(hits) >= 2:
        return "block"
    if len(hits) == 1:
        return "one"
    if len(hits) == 2:
        return "two_blocks"
    return "three_blocks"


def edge_profile(F: KFamily, M: Matching) -> EdgeProfile:
    if not all(e in F for e in M.edges):
        raise FamilyError("matching uses edges outside the family")
    if len(M) != matching_number(F):
        raise FamilyError("edge profile needs a maximum matching")
    counts = dict.fromkeys(("one", "block", "two_blocks", "three_blocks", "outside"), 0)
    for e in F.edges:
        counts[classify_edge(e, M.edges)] += 1
    return EdgeProfile(**counts)


# -- weight tables ---------------------------------------------------------------

@dataclass(frozen=True)
class WeightTable:
    """Pair weights stored doubled, so halves stay integral.

    ``target`` is the edge count the decomposition accounts for;
    ``residual`` lists edges of that count receiving no weight.
    """

    pairs: tuple[int, ...]
    doubled: tuple[int, ...]
    target: int
    residual: tuple[int, ...] = field(default=())

    @property
    def total_doubled(self) -> int:
        return sum(self.doubled)

    @property
    def total(self) -> Fraction:
        return Fraction(self.total_doubled, 2)

    def weight(self, pair: SetLike) -> Fraction:
        return Fraction(self.doubled[self.pairs.index(as_mask(pair))], 2)

    @property
    def balanced(self) -> bool:
        return self.total_doubled == 2 * self.target

    def to_json(self) -> dict:
        return {
            "pairs": [vertices_of(p) for p in self.pairs],
            "weights_doubled": list(self.doubled),
            "total_doubled": self.total_doubled,
            "total": str(self.total),
            "target": self.target,
            "residual": [vertices_of(e) for e in self.residual],
        }


def _pairs(X: int, Y: int) -> list[int]:
    return [mask_of((a, b)) for a in vertices_of(X) for b in vertices_of(Y)]


def _require_edge(F: KFamily, e: int, name: str) -> None:
    if e not in F:
        raise FamilyError(f"{name}={vertices_of(e)} is not an edge of the family")


def weight_decomposition_AB(F: KFamily, A: SetLike, B: SetLike) -> WeightTable:
    """Weights over ``A x B`` for edges meeting both ``A`` and ``B``.

    An edge meeting ``A | B`` in two vertices gives 1 to its cross pair; an
    edge inside ``A | B`` gives 1/2 to each of its two cross pairs.
    """
    if F.k != 3:
        raise FamilyError("decomposition is defined for 3-graphs")
    a, b = as_mask(A), as_mask(B)
    _require_edge(F, a, "A")
    _require_edge(F, b, "B")
    if a & b:
        raise FamilyError("A and B must be disjoint")
    R = a | b
    pairs = _pairs(a, b)
    doubled = dict.fromkeys(pairs, 0)
    crossing = [e for e in F.edges if e & a and e & b]
    for e in crossing:
        inside = popcount(e & R)
        share = 2 if inside == 2 else 1
        for p in pairs:
            if e & p == p:
                doubled[p] += share
    return WeightTable(tuple(pairs), tuple(doubled[p] for p in pairs), len(crossing))


def weight_decomposition_uv(F: KFamily, u: int, v: int, T1: SetLike, T2: SetLike) -> WeightTable:
    """Weights over ``{u,v} x (T1 | T2)`` for edges meeting ``{u, v}``.

    With ``S = T1 | T2 | {u, v}``: an edge meeting ``S`` in two vertices gives
    1 to the pair it contains; an edge inside ``S`` gives 1/2 to each pair it
    contains. Edges of the count with no pair are reported as residual.
    """
    if F.k != 3:
        raise FamilyError("decomposition is defined for 3-graphs")
    if u == v:
        raise FamilyError("u and v must differ")
    t1, t2 = as_mask(T1), as_mask(T2)
    _require_edge(F, t1, "T1")
    _require_edge(F, t2, "T2")
    uv = mask_of((u, v))
    if t1 & t2 or (t1 | t2) & uv:
        raise FamilyError("T1, T2 must be disjoint and avoid u, v")
    R = t1 | t2
    S = R | uv
    pairs = _pairs(uv, R)
    doubled = dict.fromkeys(pairs, 0)
    count = 0
    residual = []
    for e in F.edges:
        if not e & uv:
            continue
        count += 1
        inside = popcount(e & S)
        contained = [p for p in pairs if e & p == p]
        if not contained or inside < 2:
            residual.append(e)
            continue
        share = 2 if inside == 2 else 1
        for p in contained:
            doubled[p] += share
    return WeightTable(tuple(pairs), tuple(doubled[p] for p in pairs), count, tuple(residual))


def disjoint_pair_avoiding(F: KFamily, avoid: SetLike) -> tuple[int, int] | None:
    """First two disjoint edges (ascending order) missing ``avoid``."""
    x = as_mask(avoid)
    rest = [e for e in F.edges if not e & x]
    for e, f in combinations(rest, 2):
        if not e & f:
            return e, f
    return None


def t_uv(F: KFamily, u: int, v: int) -> int:
    uv = mask_of((u, v))
    return sum(1 for e in F.edges if e & uv)
