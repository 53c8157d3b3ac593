"""Named families used as fixtures and search seeds.

Construction names accepted by :func:`construct`::

    complete:N,K        all K-subsets of [N]
    erdos:N,K,S         K-subsets of [N] meeting [S]
    fixture             the four-edge 3-graph (1,2,5),(3,4,5),(6,7,8),(6,9,10)
    gallery:NAME        triangle, C4, P2..P4, star2, star3, K3..K6
"""

from __future__ import annotations

from itertools import combinations

from .core import FamilyError, KFamily, MAX_N, k_subsets, mask_of


def complete_k_graph(n: int, k: int) -> KFamily:
    if not 1 <= k <= n <= MAX_N:
        raise FamilyError(f"need 1 <= k <= n <= {MAX_N}")
    return KFamily(k, n, tuple(k_subsets(n, k)))


def erdos_family(n: int, k: int, s: int) -> KFamily:
    if not 1 <= k <= n <= MAX_N or not 1 <= s <= n:
        raise FamilyError("need 1 <= k <= n <= 64 and 1 <= s <= n")
    first = mask_of(range(1, s + 1))
    return KFamily(k, n, tuple(e for e in k_subsets(n, k) if e & first))


FIXTURE_EDGES = ((1, 2, 5), (3, 4, 5), (6, 7, 8), (6, 9, 10))


def fixture_four_edges() -> KFamily:
    return KFamily.from_sets(3, 10, FIXTURE_EDGES)


def _graph(n: int, edges) -> KFamily:
    return KFamily.from_sets(2, n, edges)


def _path(vertices: int) -> KFamily:
    return _graph(max(vertices, 2), [(i, i + 1) for i in range(1, vertices)])


def graph_gallery() -> dict[str, KFamily]:
    gallery = {
        "triangle": _graph(3, [(1, 2), (2, 3), (1, 3)]),
        "C4": _graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)]),
        "P2": _path(2),
        "P3": _path(3),
        "P4": _path(4),
        "star2": _graph(3, [(1, 2), (1, 3)]),
        "star3": _graph(4, [(1, 2), (1, 3), (1, 4)]),
    }
    for m in range(3, 7):
        gallery[f"K{m}"] = _graph(m, combinations(range(1, m + 1), 2))
    return gallery


def _ints(text: str, count: int, name: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise FamilyError(f"{name} expects {count} comma-separated integers") from None
    if len(vals) != count:
        raise FamilyError(f"{name} expects {count} comma-separated integers")
    return vals


def construct(spec: str) -> KFamily:
    """Build a family from a ``name:params`` string (see module docstring)."""
    name, _, params = spec.partition(":")
    if name == "complete":
        n, k = _ints(params, 2, name)
        return complete_k_graph(n, k)
    if name == "erdos":
        n, k, s = _ints(params, 3, name)
        return erdos_family(n, k, s)
    if name == "fixture":
        return fixture_four_edges()
    if name == "gallery":
        gallery = graph_gallery()
        if params not in gallery:
            raise FamilyError(f"unknown gallery graph {params!r}; choose from {sorted(gallery)}")
        return gallery[params]
    raise FamilyError(f"unknown construction {name!r}")
