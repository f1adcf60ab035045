"""Checkers for path-suitable core graphs and a miner for minimal ones.

A core graph with two special vertices a1, a2 qualifies for the path-block
constructions when

* S1: it is C_k-semisaturated,
* S2: a1 and a2 are joined by paths of every length 1..k-2, and
* S3: every other vertex q can be hit from a1 or a2 with prescribed
  lengths: for each split m1 + m2 = k (2 <= m_i <= k-2) some a_i reaches q
  by a path of length m_i.

The extended variant keeps S1-S2 and replaces S3 by splits m1 + m2 = k
(3 <= m_i <= k-3) and m1 + m2 = k + 2 (4 <= m_i <= k-4); empty ranges are
vacuously satisfied.  For each fixed (q, m1, m2) the disjunction over the
two special vertices is what is required; the satisfying side may differ
from triple to triple.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .cycles import PathWitness, exists_path_of_length
from .families import LabeledGraph
from .graphs import Graph
from .saturation import is_semisaturated


@dataclass(frozen=True)
class SuitabilityReport:
    mode: str  # "k-suitable" | "kk2-suitable"
    k: int
    s1: bool
    s1_failing_nonedge: tuple[int, int] | None
    s2: bool
    s2_witnesses: dict[int, PathWitness]
    s2_missing: tuple[int, ...]
    s3: bool
    s3_failures: tuple[tuple[int, int, int], ...]
    s3_witnesses: dict[tuple[int, int, int], tuple[int, PathWitness]]

    @property
    def suitable(self) -> bool:
        return self.s1 and self.s2 and self.s3

    def summary(self) -> str:
        parts = []
        if not self.s1:
            parts.append(f"S1 fails at non-edge {self.s1_failing_nonedge}")
        if not self.s2:
            parts.append(f"S2 misses lengths {list(self.s2_missing)}")
        if not self.s3:
            parts.append(f"S3 fails on {len(self.s3_failures)} (q, m1, m2) triples")
        return "; ".join(parts) if parts else "suitable"


def split_pairs(k: int, mode: str) -> list[tuple[int, int]]:
    """The (m1, m2) splits a core must serve, per suitability mode."""
    if mode == "k-suitable":
        return [(m1, k - m1) for m1 in range(2, k - 1)]
    if mode == "kk2-suitable":
        pairs = [(m1, k - m1) for m1 in range(3, k - 2)]
        pairs += [
            (m1, k + 2 - m1)
            for m1 in range(4, k - 3)
            if 4 <= k + 2 - m1 <= k - 4
        ]
        return pairs
    raise ValueError(f"unknown suitability mode {mode!r}")


def _report(core: LabeledGraph, k: int, mode: str) -> SuitabilityReport:
    G = core.graph
    a1, a2 = core.special_pair()
    semi = is_semisaturated(G, k, want_certificate=False)

    s2_witnesses: dict[int, PathWitness] = {}
    s2_missing: list[int] = []
    for ell in range(1, k - 1):
        w = exists_path_of_length(G, a1, a2, ell)
        if w is None:
            s2_missing.append(ell)
        else:
            s2_witnesses[ell] = w

    memo: dict[tuple[int, int, int], PathWitness | None] = {}

    def reach(src: int, q: int, m: int) -> PathWitness | None:
        key = (src, q, m)
        if key not in memo:
            memo[key] = exists_path_of_length(G, src, q, m)
        return memo[key]

    pairs = split_pairs(k, mode)
    s3_failures: list[tuple[int, int, int]] = []
    s3_witnesses: dict[tuple[int, int, int], tuple[int, PathWitness]] = {}
    for q in range(G.n):
        if q in (a1, a2):
            continue
        for m1, m2 in pairs:
            w = reach(a1, q, m1)
            if w is not None:
                s3_witnesses[(q, m1, m2)] = (1, w)
                continue
            w = reach(a2, q, m2)
            if w is not None:
                s3_witnesses[(q, m1, m2)] = (2, w)
                continue
            s3_failures.append((q, m1, m2))

    return SuitabilityReport(
        mode=mode,
        k=k,
        s1=semi.holds,
        s1_failing_nonedge=semi.failing_nonedge,
        s2=not s2_missing,
        s2_witnesses=s2_witnesses,
        s2_missing=tuple(s2_missing),
        s3=not s3_failures,
        s3_failures=tuple(s3_failures),
        s3_witnesses=s3_witnesses,
    )


def is_k_suitable(core: LabeledGraph, k: int) -> SuitabilityReport:
    """Full report for the plain suitability conditions S1-S3."""
    if k < 4:
        raise ValueError(f"suitability needs k >= 4, got k={k}")
    return _report(core, k, "k-suitable")


def is_kk2_suitable(core: LabeledGraph, k: int) -> SuitabilityReport:
    """Full report for the extended conditions S1, S2, and the two-split S3."""
    if k < 6:
        raise ValueError(f"extended suitability needs k >= 6, got k={k}")
    return _report(core, k, "kk2-suitable")


def _quick_suitable(G: Graph, a1: int, a2: int, k: int, pairs: list[tuple[int, int]]) -> bool:
    """Short-circuit suitability test ordered cheapest-first (for mining)."""
    if not G.has_edge(a1, a2):
        return False
    for ell in range(2, k - 1):
        if exists_path_of_length(G, a1, a2, ell) is None:
            return False
    memo: dict[tuple[int, int, int], bool] = {}

    def reach(src: int, q: int, m: int) -> bool:
        key = (src, q, m)
        if key not in memo:
            memo[key] = exists_path_of_length(G, src, q, m) is not None
        return memo[key]

    for q in range(G.n):
        if q in (a1, a2):
            continue
        for m1, m2 in pairs:
            if not (reach(a1, q, m1) or reach(a2, q, m2)):
                return False
    return is_semisaturated(G, k, want_certificate=False).holds


@dataclass(frozen=True)
class MiningResult:
    k: int
    mode: str
    status: str  # "exact" | "budget-exhausted" | "not-found"
    edge_count: int | None
    witness: LabeledGraph | None
    classes_examined: int
    elapsed: float


DEFAULT_MINE_CEILING = 8


def mine_suitable(
    k: int,
    mode: str = "k-suitable",
    ceiling: int = DEFAULT_MINE_CEILING,
    budget_seconds: float | None = None,
) -> MiningResult:
    """Minimum edge count of a k-vertex core passing the given mode.

    Exhausts isomorphism classes of k-vertex graphs in edge-count-ascending
    order (canonical-code order inside a stratum) and tries every special
    pair, so the first hit is the minimum with the lexicographically least
    canonical witness.
    """
    from .oracle import GenerationTimeout, classes_with_edges

    if mode not in ("k-suitable", "kk2-suitable"):
        raise ValueError(f"unknown suitability mode {mode!r}")
    if k > ceiling:
        raise ValueError(
            f"k={k} above the mining ceiling {ceiling}; raise `ceiling` explicitly"
        )
    if k < 4 or (mode == "kk2-suitable" and k < 6):
        raise ValueError(f"k={k} below the minimum for mode {mode}")
    pairs = split_pairs(k, mode)
    t0 = time.monotonic()
    deadline = None if budget_seconds is None else t0 + budget_seconds
    examined = 0
    for m in range(k - 1, k * (k - 1) // 2 + 1):
        try:
            stratum = classes_with_edges(k, m, deadline=deadline)
        except GenerationTimeout:
            return MiningResult(
                k, mode, "budget-exhausted", None, None,
                examined, time.monotonic() - t0,
            )
        for code, G in stratum:
            if deadline is not None and time.monotonic() > deadline:
                return MiningResult(
                    k, mode, "budget-exhausted", None, None,
                    examined, time.monotonic() - t0,
                )
            examined += 1
            if not G.is_connected():
                continue
            for a1 in range(k):
                for a2 in range(a1 + 1, k):
                    if _quick_suitable(G, a1, a2, k, pairs):
                        witness = LabeledGraph(
                            G, {"a1": a1, "a2": a2}, G.edge_count, None
                        )
                        return MiningResult(
                            k, mode, "exact", m, witness,
                            examined, time.monotonic() - t0,
                        )
    return MiningResult(k, mode, "not-found", None, None, examined, time.monotonic() - t0)
