"""Bitmask-encoded uniform set families.

Vertex ``i`` (1-based) is bit ``i - 1`` of an edge mask, so an edge on a
ground set of at most 64 vertices fits in one machine word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence, Union

MAX_N = 64


class FamilyError(ValueError):
    """Raised when a family or one of its parts violates its invariants."""


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if v < 1:
            raise FamilyError(f"vertex {v} is not a positive integer")
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> list[int]:
    """1-based vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


def full_mask(n: int) -> int:
    return (1 << n) - 1


SetLike = Union[int, "VertexSet", Iterable[int]]


def as_mask(x: SetLike) -> int:
    """Coerce a mask, a :class:`VertexSet` or an iterable of vertices to a mask."""
    if isinstance(x, VertexSet):
        return x.mask
    if isinstance(x, int):
        if x < 0:
            raise FamilyError("negative mask")
        return x
    return mask_of(x)


@dataclass(frozen=True)
class VertexSet:
    mask: int

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        return cls(mask_of(vertices))

    @property
    def size(self) -> int:
        return popcount(self.mask)

    def vertices(self) -> list[int]:
        return vertices_of(self.mask)

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter(vertices_of(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({vertices_of(self.mask)})"


@dataclass(frozen=True)
class KFamily:
    """A ``k``-uniform family on ``[n]``; edges are sorted, duplicate-free masks.

    Construction normalizes ``edges`` (dedup + ascending order). Instances
    are immutable and hashable.
    """

    k: int
    n: int
    edges: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise FamilyError(f"ground set size n={self.n} outside 1..{MAX_N}")
        if not 0 <= self.k <= self.n:
            raise FamilyError(f"uniformity k={self.k} outside 0..n")
        allowed = full_mask(self.n)
        edges = tuple(sorted(set(self.edges)))
        for e in edges:
            if e & ~allowed:
                raise FamilyError(f"edge {vertices_of(e)} leaves the ground set [{self.n}]")
            if popcount(e) != self.k:
                raise FamilyError(f"edge {vertices_of(e)} does not have {self.k} vertices")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_sets(cls, k: int, n: int, sets: Iterable[Iterable[int]]) -> "KFamily":
        return cls(k, n, tuple(mask_of(s) for s in sets))

    @classmethod
    def empty(cls, k: int, n: int) -> "KFamily":
        return cls(k, n, ())

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, edge) -> bool:
        return as_mask(edge) in self._edge_set

    @property
    def _edge_set(self) -> frozenset:
        cached = self.__dict__.get("_edges_frozen")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edges_frozen", cached)
        return cached

    @property
    def support(self) -> int:
        """Mask of vertices covered by at least one edge."""
        m = 0
        for e in self.edges:
            m |= e
        return m

    def edge_lists(self) -> list[list[int]]:
        return [vertices_of(e) for e in self.edges]

    def with_edges(self, edges: Iterable[int]) -> "KFamily":
        return KFamily(self.k, self.n, tuple(edges))

    def add(self, edge: SetLike) -> "KFamily":
        return KFamily(self.k, self.n, self.edges + (as_mask(edge),))

    def relabel(self, perm: Sequence[int]) -> "KFamily":
        """Apply ``v -> perm[v - 1]`` to every vertex; ``perm`` is a permutation of 1..n."""
        if sorted(perm) != list(range(1, self.n + 1)):
            raise FamilyError("relabeling must be a permutation of 1..n")
        return KFamily(self.k, self.n, tuple(_relabel_mask(e, perm) for e in self.edges))

    def degree(self, subset: SetLike) -> int:
        """Number of edges containing ``subset``."""
        m = as_mask(subset)
        return sum(1 for e in self.edges if e & m == m)

    def __repr__(self) -> str:
        return f"KFamily(k={self.k}, n={self.n}, edges={self.edge_lists()})"


def _relabel_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for v in vertices_of(mask):
        out |= 1 << (perm[v - 1] - 1)
    return out


def k_subsets(n: int, k: int) -> list[int]:
    """All ``k``-subsets of ``[n]`` as masks, in ascending mask order."""
    masks = [mask_of(c) for c in combinations(range(1, n + 1), k)]
    masks.sort()
    return masks


@dataclass(frozen=True)
class Matching:
    edges: tuple[int, ...]

    def __post_init__(self):
        seen = 0
        for e in self.edges:
            if e & seen:
                raise FamilyError("matching edges are not pairwise disjoint")
            seen |= e
        object.__setattr__(self, "edges", tuple(self.edges))

    @classmethod
    def of(cls, sets: Iterable[SetLike]) -> "Matching":
        return cls(tuple(as_mask(s) for s in sets))

    @property
    def union(self) -> int:
        u = 0
        for e in self.edges:
            u |= e
        return u

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def edge_lists(self) -> list[list[int]]:
        return [vertices_of(e) for e in self.edges]
