"""Pseudo sunflowers: detection, Füredi's bound and sunflower-free graphs.

Sets ``S_0, ..., S_r`` form a pseudo sunflower with center ``C`` when
``C`` is a proper subset of ``S_0`` and the sets ``S_i - C`` are pairwise
disjoint. Witnesses are always returned normalized, ``|S_0 - C| = 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations

from .core import FamilyError, KFamily, max_disjoint, popcount, vertices_of


@dataclass(frozen=True)
class PseudoSunflower:
    center: int
    core: int
    petals: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.petals) + 1

    def members(self) -> tuple[int, ...]:
        return (self.core,) + self.petals

    def is_valid_in(self, F: KFamily) -> bool:
        members = self.members()
        if len(set(members)) != len(members) or not all(m in F for m in members):
            return False
        if self.center & ~self.core or self.center == self.core:
            return False
        used = 0
        for m in members:
            part = m & ~self.center
            if part & used:
                return False
            used |= part
        return True

    def to_json(self) -> dict:
        return {
            "center": vertices_of(self.center),
            "core": vertices_of(self.core),
            "petals": [vertices_of(p) for p in self.petals],
        }


def find_pseudo_sunflower(F: KFamily, size: int) -> PseudoSunflower | None:
    """First normalized pseudo sunflower with ``size`` members, or ``None``.

    Cores are scanned in ascending mask order, centers as ``core - {x}`` for
    ascending ``x``. A larger pseudo sunflower is truncated to ``size``.
    """
    if size < 2:
        raise FamilyError("pseudo sunflower size must be at least 2")
    need = size - 1
    if len(F.edges) < size:
        return None
    for core in F.edges:
        x_bits = core
        while x_bits:
            x = x_bits & -x_bits
            x_bits ^= x
            center = core ^ x
            # petal S - C -> smallest S producing it
            petal_of: dict[int, int] = {}
            for e in F.edges:
                if e == core:
                    continue
                part = e & ~center
                if part & x or part in petal_of:
                    continue
                petal_of[part] = e
            if len(petal_of) < need:
                continue
            chosen = max_disjoint(list(petal_of), target=need)
            if len(chosen) == need:
                petals = tuple(sorted(petal_of[p] for p in chosen))
                return PseudoSunflower(center, core, petals)
    return None


def has_pseudo_sunflower(F: KFamily, size: int) -> bool:
    return find_pseudo_sunflower(F, size) is not None


@dataclass(frozen=True)
class FurediVerdict:
    r: int
    family_size: int
    bound: int
    bound_satisfied: bool
    witness: PseudoSunflower | None
    internal_error: bool = False

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "family_size": self.family_size,
            "bound": self.bound,
            "bound_satisfied": self.bound_satisfied,
            "witness": self.witness.to_json() if self.witness else None,
            "internal_error": self.internal_error,
        }


def assert_furedi(F: KFamily, r: int) -> FurediVerdict:
    """Check ``|F| <= r**k`` or exhibit a pseudo sunflower of size ``r + 1``.

    A family above the bound without a witness is flagged ``internal_error``:
    the theorem guarantees one exists, so that outcome indicates a solver bug.
    """
    if r < 1:
        raise FamilyError("r must be positive")
    bound = r ** F.k
    witness = find_pseudo_sunflower(F, r + 1)
    satisfied = len(F) <= bound
    return FurediVerdict(r, len(F), bound, satisfied, witness, internal_error=not satisfied and witness is None)


class GraphClass(enum.Enum):
    TRIANGLE = "Triangle"
    SUBGRAPH_OF_C4 = "SubgraphOfC4"
    NEITHER = "Neither"


def _is_triangle(G: KFamily) -> bool:
    return len(G) == 3 and popcount(G.support) == 3


def _embeds_in_c4(G: KFamily) -> bool:
    verts = vertices_of(G.support)
    if len(verts) > 4:
        return False
    slots = verts + [0] * (4 - len(verts))  # 0 = unused cycle position
    edges = set(G.edges)
    for order in permutations(slots):
        cycle = {(1 << (order[i] - 1)) | (1 << (order[(i + 1) % 4] - 1))
                 for i in range(4) if order[i] and order[(i + 1) % 4]}
        if edges <= cycle:
            return True
    return False


def classify_sunflower_free_graph(G: KFamily) -> GraphClass:
    if G.k != 2:
        raise FamilyError("classification applies to graphs (k = 2)")
    if has_pseudo_sunflower(G, 3):
        return GraphClass.NEITHER
    if _is_triangle(G):
        return GraphClass.TRIANGLE
    if _embeds_in_c4(G):
        return GraphClass.SUBGRAPH_OF_C4
    # sunflower-free but neither shape: contradicts the classification
    return GraphClass.NEITHER
