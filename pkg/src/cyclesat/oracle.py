"""Exact minimum edge counts of (semi)saturated graphs at desk scale.

Isomorphism classes of n-vertex graphs are generated level by level: every
class with m edges arises from some class with m-1 edges by adding one
edge, so extending one canonical representative per class by every
possible edge and deduplicating on canonical codes enumerates each class
exactly once.  Levels are cached per vertex count for the session.

The search scans edge counts upward from the best applicable lower bound,
verifying connected classes only (adding any non-edge between components
creates no cycle, so a disconnected graph cannot be semisaturated); for
k in {3, 4} the winning level is additionally swept to confirm no
disconnected graph passes.  Within a level, classes are sorted by
canonical code and split into index-striped shards; each shard reports its
first passing class and the merge takes the least code, so results do not
depend on the shard count.
"""

from __future__ import annotations

import csv
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from pathlib import Path

from .bounds import eval_bounds
from .codec import graph6_encode
from .graphs import Graph, canonical_code, canonical_form_and_code
from .saturation import is_saturated, is_semisaturated

DEFAULT_CEILING = {"sat": 8, "ssat": 9}
DEFAULT_BUDGET_SECONDS = 600.0

_LEVELS: dict[int, list[dict[bytes, Graph]]] = {}


class CeilingExceeded(ValueError):
    """Requested n above the configured enumeration ceiling."""


class GenerationTimeout(Exception):
    """Deadline hit while building enumeration levels."""


def classes_with_edges(
    n: int, m: int, deadline: float | None = None
) -> list[tuple[bytes, Graph]]:
    """Canonical representatives of all n-vertex graphs with m edges.

    Sorted by canonical code.  Levels are built on demand and cached; a
    level interrupted by the deadline is discarded whole, so the cache only
    ever holds complete levels.
    """
    if not 0 <= m <= comb(n, 2):
        return []
    levels = _LEVELS.setdefault(n, [{canonical_code(Graph(n, [])): Graph(n, [])}])
    while len(levels) <= m:
        nxt: dict[bytes, Graph] = {}
        for _, g in sorted(levels[-1].items()):
            if deadline is not None and time.monotonic() > deadline:
                raise GenerationTimeout(len(levels))
            for u, v in g.non_edges():
                h, code = canonical_form_and_code(g.with_edge(u, v))
                nxt.setdefault(code, h)
        levels.append(nxt)
    return sorted(levels[m].items())


def brute_classes_with_edges(n: int, m: int) -> list[tuple[bytes, Graph]]:
    """Same classes via raw bitmask enumeration; cross-check for n <= 6."""
    if n > 6:
        raise ValueError("brute enumeration limited to n <= 6")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    found: dict[bytes, Graph] = {}
    for mask in range(1 << len(pairs)):
        if mask.bit_count() != m:
            continue
        g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        h, code = canonical_form_and_code(g)
        found.setdefault(code, h)
    return sorted(found.items())


@dataclass(frozen=True)
class SearchStats:
    graphs_examined: int
    classes_seen: int
    elapsed: float


@dataclass(frozen=True)
class OracleResult:
    n: int
    k: int
    mode: str  # "sat" | "ssat"
    status: str  # "exact" | "lower-bound-only"
    value: int  # exact minimum, or the proven floor when budget ran out
    witness: Graph | None
    stats: SearchStats

    def same_answer(self, other: "OracleResult") -> bool:
        """Equality of the mathematically determined part of the result."""
        return (
            (self.n, self.k, self.mode, self.status, self.value, self.witness)
            == (other.n, other.k, other.mode, other.status, other.value, other.witness)
        )


def _verifier(mode: str, k: int):
    if mode == "sat":
        return lambda g: is_saturated(g, k, want_certificate=False).holds
    if mode == "ssat":
        return lambda g: is_semisaturated(g, k, want_certificate=False).holds
    raise ValueError(f"mode must be 'sat' or 'ssat', got {mode!r}")


def search_stratum(
    n: int, k: int, mode: str, m: int, shards: int = 1, deadline: float | None = None
) -> tuple[Graph | None, int, bool]:
    """Scan one edge-count stratum; returns (witness, examined, timed_out).

    The witness is the least-canonical-code connected passer, or None.
    """
    passes = _verifier(mode, k)
    classes = classes_with_edges(n, m, deadline=deadline)

    def scan(shard: int) -> tuple[bytes | None, Graph | None, int, bool]:
        examined = 0
        for code, g in classes[shard::shards]:
            if deadline is not None and time.monotonic() > deadline:
                return None, None, examined, True
            examined += 1
            if not g.is_connected():
                continue
            if passes(g):
                return code, g, examined, False
        return None, None, examined, False

    if shards == 1:
        results = [scan(0)]
    else:
        with ThreadPoolExecutor(max_workers=shards) as pool:
            results = list(pool.map(scan, range(shards)))
    examined = sum(r[2] for r in results)
    timed_out = any(r[3] for r in results)
    hits = [(code, g) for code, g, _, _ in results if code is not None]
    if not hits:
        return None, examined, timed_out
    _, best = min(hits, key=lambda cg: cg[0])
    return best, examined, timed_out


def exact_min(
    n: int,
    k: int,
    mode: str,
    *,
    shards: int = 1,
    ceiling: int | None = None,
    budget_seconds: float | None = None,
) -> OracleResult:
    """Exact minimum edge count over n-vertex graphs passing the verifier.

    Scans edge counts upward from the bound-derived floor, so the first
    stratum with a passer gives the minimum; the witness is canonical and
    re-verified.  A blown time budget yields an explicit partial result
    (``status="lower-bound-only"``) instead of a wrong answer.
    """
    if mode not in DEFAULT_CEILING:
        raise ValueError(f"mode must be 'sat' or 'ssat', got {mode!r}")
    if not 3 <= k <= n:
        raise ValueError(f"need n >= k >= 3, got n={n}, k={k}")
    cap = DEFAULT_CEILING[mode] if ceiling is None else ceiling
    if n > cap:
        raise CeilingExceeded(f"n={n} above ceiling {cap}; raise `ceiling` to allow")
    if shards < 1:
        raise ValueError(f"shards must be positive, got {shards}")
    t0 = time.monotonic()
    budget = DEFAULT_BUDGET_SECONDS if budget_seconds is None else budget_seconds
    deadline = t0 + budget
    floor = max(n - 1, eval_bounds(n, k).lower_floor(mode))
    examined_total = 0
    classes_total = 0
    for m in range(floor, comb(n, 2) + 1):
        try:
            witness, examined, timed_out = search_stratum(
                n, k, mode, m, shards=shards, deadline=deadline
            )
        except GenerationTimeout:
            return OracleResult(
                n, k, mode, "lower-bound-only", m, None,
                SearchStats(examined_total, classes_total, time.monotonic() - t0),
            )
        examined_total += examined
        classes_total += len(classes_with_edges(n, m))
        if timed_out:
            return OracleResult(
                n, k, mode, "lower-bound-only", m, None,
                SearchStats(examined_total, classes_total, time.monotonic() - t0),
            )
        if witness is not None:
            if k in (3, 4):
                _confirm_no_disconnected_passer(n, k, mode, m)
            assert _verifier(mode, k)(witness)
            return OracleResult(
                n, k, mode, "exact", m, witness,
                SearchStats(examined_total, classes_total, time.monotonic() - t0),
            )
    raise AssertionError("edge-count scan exhausted without a passing graph")


def exact_min_sharded(
    n: int,
    k: int,
    mode: str,
    shards: int,
    *,
    ceiling: int | None = None,
    budget_seconds: float | None = None,
) -> OracleResult:
    """Sharded variant; identical value and witness for any shard count."""
    return exact_min(
        n, k, mode, shards=shards, ceiling=ceiling, budget_seconds=budget_seconds
    )


def _confirm_no_disconnected_passer(n: int, k: int, mode: str, m: int) -> None:
    # Connectivity of semisaturated graphs is immediate for k >= 5; for
    # k in {3, 4} we verify instead of assume.  Cheap at these sizes.
    passes = _verifier(mode, k)
    for _, g in classes_with_edges(n, m):
        if not g.is_connected() and passes(g):
            raise AssertionError(
                f"disconnected {g!r} passes {mode} at k={k}; verifier broken"
            )


# -- golden file -------------------------------------------------------------

GOLDEN_HEADER = ("n", "k", "mode", "value", "witness_graph6")


def append_golden(path: str | Path, result: OracleResult) -> None:
    """Append an exact oracle result to the golden CSV (header if new)."""
    if result.status != "exact" or result.witness is None:
        raise ValueError("only exact results belong in the golden file")
    p = Path(path)
    new = not p.exists()
    with p.open("a", newline="") as fh:
        writer = csv.writer(fh)
        if new:
            writer.writerow(GOLDEN_HEADER)
        writer.writerow(
            (
                result.n,
                result.k,
                result.mode,
                result.value,
                graph6_encode(result.witness),
            )
        )
