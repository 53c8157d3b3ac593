"""Exact search for the largest t-resilient k-graphs with matching number s.

Families are generated edge by edge, one level per edge count, keeping one
canonical representative per isomorphism class. A node is expanded only
while its size plus the number of edges it can still absorb reaches the
current target, so the search stays exact.

Internal nodes only enforce conditions inherited by subfamilies:
``nu <= s`` and, when ``t = k - 1``, at most ``k*s`` edges through any
``(k-1)``-set (an edge count above that yields a pseudo sunflower of size
``ks + 1``, impossible in such a family). Resilience is not inherited, so it
is tested on every candidate family individually.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from ..constructions import complete_k_graph
from ..core import (
    MAX_N,
    KFamily,
    canonical_form,
    k_subsets,
    mask_of,
    matching_number,
    max_disjoint,
)
from ..resilience import is_t_resilient

MODES = ("maximize", "verify_target", "verify_unique")
SCOPE_NOTE = "maximum over ground sets of size <= max_n; not an unconditional value of m(k,s)"


class SearchSpecError(ValueError):
    pass


@dataclass(frozen=True)
class SearchSpec:
    k: int
    s: int
    t: int
    max_n: int
    budget: int = 2_000_000
    mode: str = "maximize"
    target: int | None = None
    seed_lower_bound: bool = True
    threads: int = 1

    def __post_init__(self):
        if self.k < 1 or self.s < 1:
            raise SearchSpecError("k and s must be positive")
        if not 0 <= self.t < self.k:
            raise SearchSpecError("need 0 <= t < k")
        if not self.k <= self.max_n <= MAX_N:
            raise SearchSpecError(f"need k <= max_n <= {MAX_N}")
        if self.budget <= 0:
            raise SearchSpecError("budget must be positive")
        if self.mode not in MODES:
            raise SearchSpecError(f"mode must be one of {MODES}")
        if self.mode != "maximize" and self.target is None:
            raise SearchSpecError(f"mode {self.mode} needs a target size")


@dataclass
class SearchResult:
    spec: SearchSpec
    best_size: int
    witnesses: list[KFamily]
    exhausted: bool
    nodes: int
    verdict: str | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "k": self.spec.k, "s": self.spec.s, "t": self.spec.t, "max_n": self.spec.max_n,
            "mode": self.spec.mode, "target": self.spec.target,
            "best_size": self.best_size,
            "witnesses": [w.edge_lists() for w in self.witnesses],
            "exhausted": self.exhausted,
            "nodes": self.nodes,
            "verdict": self.verdict,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class LowerBoundReport:
    k: int
    s: int
    t: int
    n: int
    size: int
    nu: int
    resilient: bool

    @property
    def certified(self) -> bool:
        return self.nu == self.s and self.resilient

    def to_json(self) -> dict:
        return {"k": self.k, "s": self.s, "t": self.t, "n": self.n, "size": self.size,
                "nu": self.nu, "resilient": self.resilient, "certified": self.certified}


def verify_lower_bound(k: int, s: int, t: int) -> LowerBoundReport:
    """Check the complete k-graph on sk+k-1 vertices: nu = s and t-resilient."""
    n = s * k + k - 1
    if n > 12:
        raise SearchSpecError("resilience certificate limited to sk+k-1 <= 12")
    F = complete_k_graph(n, k)
    return LowerBoundReport(k, s, t, n, comb(n, k), matching_number(F), is_t_resilient(F, t))


class _Constraints:
    """Hereditary conditions every subfamily of a valid family satisfies."""

    def __init__(self, k: int, s: int, t: int, n: int):
        self.s = s
        self.cap = k * s if k >= 2 and t == k - 1 else None
        self.ridges = [mask_of(c) for c in combinations(range(1, n + 1), k - 1)] if self.cap else []

    def addable(self, edges: tuple[int, ...], universe: list[int]) -> list[int]:
        present = set(edges)
        degree = {}
        if self.cap:
            for r in self.ridges:
                degree[r] = sum(1 for e in edges if e & r == r)
        out = []
        for e in universe:
            if e in present:
                continue
            if self.cap and any(degree[r] >= self.cap for r in self.ridges if e & r == r):
                continue
            # nu(F + e) <= s  iff  edges missing e have nu <= s - 1
            rest = [f for f in edges if not f & e]
            if len(max_disjoint(rest, target=self.s)) >= self.s:
                continue
            out.append(e)
        return out


def _expand(args) -> list[tuple[tuple, tuple[int, ...]]]:
    k, n, edges, addable = args
    out = []
    for e in addable:
        sig = canonical_form(KFamily(k, n, edges + (e,)))
        out.append((sig, sig[2]))
    return out


def max_resilient_family(spec: SearchSpec) -> SearchResult:
    k, s, t, n = spec.k, spec.s, spec.t, spec.max_n
    universe = k_subsets(n, k)
    constraints = _Constraints(k, s, t, n)
    notes = [SCOPE_NOTE]

    if spec.mode == "maximize":
        best = 0
        if spec.seed_lower_bound and s * k + k - 1 <= min(n, 12):
            seed = verify_lower_bound(k, s, t)
            if seed.certified:
                best = seed.size
                notes.append(f"seeded with certified lower bound {seed.size} (complete {k}-graph on {seed.n} vertices)")
        threshold = best
    else:
        threshold = spec.target + 1 if spec.mode == "verify_target" else spec.target

    best_size = 0
    witnesses: dict[tuple, KFamily] = {}
    nodes = 0
    exhausted = True
    frontier = {canonical_form(KFamily.empty(k, n)): ()}
    pool = ProcessPoolExecutor(spec.threads) if spec.threads > 1 else None
    try:
        while frontier:
            expand_jobs = []
            for sig in sorted(frontier):
                edges = frontier[sig]
                nodes += 1
                if nodes > spec.budget:
                    exhausted = False
                    break
                m = len(edges)
                if m >= max(threshold, best_size, 1):
                    F = KFamily(k, n, edges)
                    if matching_number(F) == s and is_t_resilient(F, t):
                        if m > best_size:
                            best_size = m
                            witnesses = {}
                        witnesses[sig] = F
                if spec.mode == "maximize":
                    threshold = max(threshold, best_size)
                addable = constraints.addable(edges, universe)
                if m + len(addable) < max(threshold, best_size):
                    continue
                expand_jobs.append((k, n, edges, tuple(addable)))
            if not exhausted:
                break
            if pool is not None and len(expand_jobs) > 1:
                chunks = list(pool.map(_expand, expand_jobs, chunksize=max(1, len(expand_jobs) // (4 * spec.threads))))
            else:
                chunks = [_expand(job) for job in expand_jobs]
            frontier = {}
            for chunk in chunks:
                for sig, edges in chunk:
                    frontier.setdefault(sig, edges)
    finally:
        if pool is not None:
            pool.shutdown()

    found = [witnesses[sig] for sig in sorted(witnesses)]
    verdict = None
    if spec.mode == "verify_target":
        if found:
            verdict = "refuted"
        else:
            verdict = "confirmed" if exhausted else "inconclusive"
    elif spec.mode == "verify_unique":
        if best_size > spec.target:
            verdict = "target_exceeded"
        elif not exhausted:
            verdict = "inconclusive"
        elif best_size < spec.target or not found:
            verdict = "not_attained"
        else:
            verdict = "unique" if len(found) == 1 else "not_unique"
    return SearchResult(spec, best_size, found, exhausted, nodes, verdict, notes)


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("HYPERRES_THREADS", "1")))
    except ValueError:
        return 1
