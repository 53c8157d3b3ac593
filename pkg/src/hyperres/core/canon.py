"""Canonical forms of uniform families up to relabeling of the ground set.

The main route is individualization-refinement: colour refinement on the
vertex/edge incidence structure, then branching on the first non-singleton
cell. Automorphisms are detected from leaves with equal certificates and
used to skip children lying in an already explored orbit.
"""

from __future__ import annotations

from itertools import permutations
from typing import NamedTuple

from .family import KFamily, vertices_of


class Canon(NamedTuple):
    signature: tuple
    labeling: tuple[int, ...]  # vertex index (0-based) -> canonical position
    automorphisms: tuple[tuple[int, ...], ...]


def _certificate(edges: list[tuple[int, ...]], lab) -> tuple[int, ...]:
    out = []
    for e in edges:
        m = 0
        for v in e:
            m |= 1 << lab[v]
        out.append(m)
    out.sort()
    return tuple(out)


def _rank(keys: list) -> list[int]:
    order = sorted(set(keys))
    index = {key: i for i, key in enumerate(order)}
    return [index[key] for key in keys]


class _Refiner:
    def __init__(self, n: int, edges: list[tuple[int, ...]]):
        self.n = n
        self.incident: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
        for e in edges:
            for v in e:
                self.incident[v].append(tuple(u for u in e if u != v))

    def refine(self, colors: list[int]) -> list[int]:
        ncolors = len(set(colors))
        while True:
            keys = []
            for v in range(self.n):
                profile = sorted(tuple(sorted(colors[u] for u in rest)) for rest in self.incident[v])
                keys.append((colors[v], tuple(profile)))
            colors = _rank(keys)
            count = len(set(colors))
            if count == ncolors or count == self.n:
                return colors
            ncolors = count

    def individualize(self, colors: list[int], v: int) -> list[int]:
        return self.refine(_rank([(c, 0 if u == v else 1) for u, c in enumerate(colors)]))


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


def canonical_labeling(F: KFamily) -> Canon:
    n = F.n
    edges = [tuple(v - 1 for v in vertices_of(e)) for e in F.edges]
    refiner = _Refiner(n, edges)
    autos: list[tuple[int, ...]] = []
    first: list = []  # [labeling, cert]
    best: list = []

    def leaf(colors: list[int]) -> None:
        cert = _certificate(edges, colors)
        lab = tuple(colors)
        if not first:
            first.extend([lab, cert])
            best.extend([lab, cert])
            return
        for ref_lab, ref_cert in (first, best):
            if cert == ref_cert:
                inv = [0] * n
                for v, p in enumerate(ref_lab):
                    inv[p] = v
                gamma = tuple(inv[lab[v]] for v in range(n))
                if gamma != tuple(range(n)) and gamma not in autos:
                    autos.append(gamma)
                return
        if cert < best[1]:
            best[:] = [lab, cert]

    def search(colors: list[int], prefix: tuple[int, ...]) -> None:
        if len(set(colors)) == n:
            leaf(colors)
            return
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, size in sizes.items() if size > 1)
        cell = [v for v in range(n) if colors[v] == target]
        explored: list[int] = []
        for v in cell:
            if explored:
                stab = [g for g in autos if all(g[p] == p for p in prefix)]
                if stab:
                    roots = _orbit_roots(n, stab)
                    if any(roots[v] == roots[w] for w in explored):
                        continue
            search(refiner.individualize(colors, v), prefix + (v,))
            explored.append(v)

    search(refiner.refine([0] * n), ())
    return Canon((F.k, n, best[1]), best[0], tuple(autos))


def canonical_form(F: KFamily) -> tuple:
    """Relabeling-invariant signature ``(k, n, sorted canonical edge masks)``."""
    return canonical_labeling(F).signature


def canonical_family(F: KFamily) -> KFamily:
    """The canonical representative: ``F`` relabeled by its canonical labeling."""
    return KFamily(F.k, F.n, canonical_form(F)[2])


def canonical_form_bruteforce(F: KFamily) -> tuple:
    """Minimum certificate over all ``n!`` relabelings; reference for small ``n``."""
    edges = [tuple(v - 1 for v in vertices_of(e)) for e in F.edges]
    best = min(_certificate(edges, p) for p in permutations(range(F.n)))
    return (F.k, F.n, best)
