"""Verifiers for cycle-freeness, saturation and semisaturation.

A graph is C_k-saturated when it has no k-cycle but every added non-edge
creates one, and C_k-semisaturated when every added non-edge creates a new
k-cycle (k-cycles may already be present).  Any k-cycle created by adding
uv must traverse uv, so semisaturation is equivalent to: every non-edge uv
admits a u-v path of exactly k-1 edges.  That path criterion is what the
checkers run; it is exponentially cheaper than counting cycle copies.

Also here: the degree-one/degree-two vertex partition of a graph, the named
structural checks that partition supports, and a greedy generator of
saturated instances for property testing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cycles import (
    CycleWitness,
    exists_path_of_length,
    has_cycle_of_length,
    shortest_cycle_through,
)
from .graphs import Graph


class TooFewVertices(ValueError):
    """Saturation is undefined on graphs with fewer than k vertices."""


# -- certificates ---------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable evidence of (semi)saturation.

    One witness k-cycle per non-edge, each using its non-edge, plus (in
    saturated mode) a confirmation that the graph itself is k-cycle-free.
    """

    n: int
    k: int
    mode: str  # "saturated" | "semisaturated"
    freeness: bool | None
    per_nonedge: dict[tuple[int, int], CycleWitness]

    def validate(self, G: Graph) -> list[str]:
        """Re-check every claim against ``G``; returns problem descriptions."""
        problems: list[str] = []
        if self.n != G.n:
            problems.append(f"certificate is for n={self.n}, graph has n={G.n}")
            return problems
        non_edges = G.non_edges()
        if sorted(self.per_nonedge) != non_edges:
            problems.append("non-edge set of certificate differs from graph")
        for (u, v), cyc in self.per_nonedge.items():
            if G.has_edge(u, v):
                problems.append(f"({u}, {v}) is an edge, not a non-edge")
                continue
            if cyc.length != self.k:
                problems.append(f"witness for ({u}, {v}) has length {cyc.length}")
                continue
            if u not in cyc.vertices or v not in cyc.vertices:
                problems.append(f"witness for ({u}, {v}) misses an endpoint")
                continue
            i, j = cyc.vertices.index(u), cyc.vertices.index(v)
            if (j - i) % self.k not in (1, self.k - 1):
                problems.append(f"witness for ({u}, {v}) does not use the non-edge")
                continue
            if not cyc.is_valid_in(G, missing_edge=(u, v)):
                problems.append(f"witness for ({u}, {v}) is not a cycle of G+uv")
        if self.mode == "saturated":
            if self.freeness is not True:
                problems.append("saturated certificate lacks freeness confirmation")
            elif has_cycle_of_length(G, self.k) is not None:
                problems.append("graph contains a k-cycle despite freeness claim")
        return problems

    def to_text(self) -> str:
        lines = [f"n {self.n}", f"k {self.k}", f"mode {self.mode}"]
        if self.freeness is not None:
            lines.append(f"freeness {'confirmed' if self.freeness else 'failed'}")
        for (u, v), cyc in sorted(self.per_nonedge.items()):
            lines.append(f"{u} {v} : {' '.join(str(c) for c in cyc.vertices)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Certificate":
        header: dict[str, str] = {}
        per: dict[tuple[int, int], CycleWitness] = {}
        freeness: bool | None = None
        for ln in text.splitlines():
            ln = ln.strip()
            if not ln:
                continue
            if ":" in ln:
                pair, _, cyc = ln.partition(":")
                u, v = (int(x) for x in pair.split())
                per[(u, v)] = CycleWitness(tuple(int(x) for x in cyc.split()))
            else:
                key, _, val = ln.partition(" ")
                header[key] = val.strip()
        if "freeness" in header:
            freeness = header["freeness"] == "confirmed"
        return cls(
            n=int(header["n"]),
            k=int(header["k"]),
            mode=header["mode"],
            freeness=freeness,
            per_nonedge=per,
        )


# -- verdicts --------------------------------------------------------------


@dataclass(frozen=True)
class FreenessResult:
    free: bool
    cycle: CycleWitness | None

    def __bool__(self) -> bool:
        return self.free


@dataclass(frozen=True)
class SaturationVerdict:
    holds: bool
    certificate: Certificate | None = None
    failing_nonedge: tuple[int, int] | None = None
    cycle: CycleWitness | None = None  # set when a freeness check failed

    def __bool__(self) -> bool:
        return self.holds


def is_ck_free(G: Graph, k: int, budget: int | None = None) -> FreenessResult:
    """True iff the graph has no cycle on exactly ``k`` vertices."""
    found = has_cycle_of_length(G, k, budget=budget)
    return FreenessResult(found is None, found)


def is_semisaturated(
    G: Graph, k: int, want_certificate: bool = True, budget: int | None = None
) -> SaturationVerdict:
    """Every non-edge uv admits a u-v path of exactly k-1 edges.

    Fails fast on the first (lexicographically) failing non-edge.  With
    ``want_certificate`` the witness cycles for all non-edges are collected.
    """
    if k < 3:
        raise ValueError(f"cycle length must be at least 3, got {k}")
    if G.n < k:
        raise TooFewVertices(f"impossible: {G.n} vertices cannot host a {k}-cycle")
    per: dict[tuple[int, int], CycleWitness] = {}
    for u, v in G.non_edges():
        path = exists_path_of_length(G, u, v, k - 1, budget=budget)
        if path is None:
            return SaturationVerdict(False, failing_nonedge=(u, v))
        if want_certificate:
            per[(u, v)] = CycleWitness(path.vertices)
    cert = (
        Certificate(G.n, k, "semisaturated", None, per) if want_certificate else None
    )
    return SaturationVerdict(True, certificate=cert)


def is_saturated(
    G: Graph, k: int, want_certificate: bool = True, budget: int | None = None
) -> SaturationVerdict:
    """C_k-free and C_k-semisaturated.

    The semisaturation side runs first because it fails fast on sparse
    graphs; the conjunction is unchanged.
    """
    semi = is_semisaturated(G, k, want_certificate=want_certificate, budget=budget)
    if not semi.holds:
        return semi
    freeness = is_ck_free(G, k, budget=budget)
    if not freeness.free:
        return SaturationVerdict(False, cycle=freeness.cycle)
    cert = None
    if want_certificate:
        assert semi.certificate is not None
        cert = Certificate(G.n, k, "saturated", True, semi.certificate.per_nonedge)
    return SaturationVerdict(True, certificate=cert)


# -- degree partition ------------------------------------------------------


@dataclass(frozen=True)
class DegreePartition:
    """Partition by degree-one vertices, their neighbors, and the rest.

    ``x`` holds the degree-one vertices, ``y3``/``y4plus`` their neighbors
    of degree exactly 3 / at least 4, ``z2``/``z3plus`` the remaining
    vertices of degree exactly 2 / at least 3.  ``y_low`` (degree-2
    neighbors of x) and ``z_low`` (isolated leftovers) are escape hatches
    for graphs that are not semisaturated; both are empty on well-behaved
    inputs, making the five named parts a true partition.
    """

    x: frozenset[int]
    y3: frozenset[int]
    y4plus: frozenset[int]
    z2: frozenset[int]
    z3plus: frozenset[int]
    y_low: frozenset[int]
    z_low: frozenset[int]

    @property
    def a(self) -> int:
        return len(self.z2)

    @property
    def b(self) -> int:
        return len(self.y3)

    @property
    def c(self) -> int:
        return len(self.z3plus)

    @property
    def d(self) -> int:
        return len(self.y4plus)

    @property
    def y(self) -> frozenset[int]:
        return self.y3 | self.y4plus | self.y_low

    @property
    def five_parts(self) -> bool:
        return not self.y_low and not self.z_low


def degree_partition(G: Graph) -> DegreePartition:
    x = frozenset(v for v in range(G.n) if G.degree(v) == 1)
    y = frozenset(w for v in x for w in G.neighbors(v)) - x
    z = frozenset(range(G.n)) - x - y
    part = DegreePartition(
        x=x,
        y3=frozenset(v for v in y if G.degree(v) == 3),
        y4plus=frozenset(v for v in y if G.degree(v) >= 4),
        y_low=frozenset(v for v in y if G.degree(v) < 3),
        z2=frozenset(v for v in z if G.degree(v) == 2),
        z3plus=frozenset(v for v in z if G.degree(v) >= 3),
        z_low=frozenset(v for v in z if G.degree(v) < 2),
    )
    if len(part.y) == len(part.x) and part.five_parts:
        # Size identity that holds whenever each leaf has a private neighbor.
        assert G.n == part.a + 2 * part.b + part.c + 2 * part.d
    return part


# -- structural checks ------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    check: str
    detail: str


@dataclass(frozen=True)
class StructureReport:
    checks_run: tuple[str, ...]
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


LEAF_CHECKS = ("i", "ii", "iii")
SATURATED_CHECKS = ("iv", "v", "vi")
CYCLE_COVER_CHECK = ("cycle-cover",)


def check_structure(
    G: Graph,
    k: int,
    checks: Sequence[str] = LEAF_CHECKS + SATURATED_CHECKS,
) -> StructureReport:
    """Run named structural checks and report violations.

    The caller picks the claim set: checks "i"-"iii" are expected of
    semisaturated graphs (k >= 5), "iv"-"vi" of saturated graphs (k >= 5),
    and "cycle-cover" of semisaturated graphs with minimum degree 2 (every
    vertex on a cycle of length at most k+1).  Nothing is assumed about the
    input; a violation on a graph that was claimed saturated falsifies
    either the claim or the implementation.
    """
    part = degree_partition(G)
    violations: list[Violation] = []
    x_sorted = sorted(part.x)
    y_of = {v: G.neighbors(v)[0] for v in x_sorted}

    for check in checks:
        if check == "i":
            seen: dict[int, int] = {}
            for v in x_sorted:
                w = y_of[v]
                if w in seen:
                    violations.append(
                        Violation("i", f"leaves {seen[w]} and {v} share neighbor {w}")
                    )
                else:
                    seen[w] = v
        elif check == "ii":
            for w in sorted(part.y):
                if G.degree(w) < 3:
                    violations.append(
                        Violation("ii", f"leaf neighbor {w} has degree {G.degree(w)}")
                    )
        elif check == "iii":
            for v in x_sorted:
                reduced = G.without_vertex(v)
                if reduced.n < k:
                    violations.append(
                        Violation("iii", f"removing leaf {v} drops below {k} vertices")
                    )
                    continue
                if not is_semisaturated(reduced, k, want_certificate=False).holds:
                    violations.append(
                        Violation("iii", f"graph minus leaf {v} is not semisaturated")
                    )
        elif check == "iv":
            forbidden = part.x | part.y
            for v in sorted(part.z2):
                for w in G.neighbors(v):
                    if w in forbidden:
                        violations.append(
                            Violation("iv", f"degree-2 vertex {v} adjacent to {w}")
                        )
        elif check == "v":
            for v in sorted(part.y3):
                in_x = sum(1 for w in G.neighbors(v) if w in part.x)
                in_z3 = sum(1 for w in G.neighbors(v) if w in part.z3plus)
                for w in G.neighbors(v):
                    if w in part.y3 or w in part.y4plus:
                        violations.append(
                            Violation("v", f"degree-3 leaf neighbor {v} adjacent to {w}")
                        )
                if (in_x, in_z3) != (1, 2):
                    violations.append(
                        Violation(
                            "v",
                            f"vertex {v} has {in_x} leaf / {in_z3} core neighbors",
                        )
                    )
        elif check == "vi":
            sub, remap = G.induced(sorted(part.z2))
            back = {new: old for old, new in remap.items()}
            for msg in _path_components(sub, k, back):
                violations.append(Violation("vi", msg))
        elif check == "cycle-cover":
            for v in range(G.n):
                shortest = shortest_cycle_through(G, v)
                if shortest is None or shortest > k + 1:
                    violations.append(
                        Violation(
                            "cycle-cover",
                            f"vertex {v} lies on no cycle of length <= {k + 1}",
                        )
                    )
        else:
            raise ValueError(f"unknown structural check {check!r}")
    return StructureReport(tuple(checks), tuple(violations))


def _path_components(sub: Graph, k: int, back: dict[int, int]) -> list[str]:
    """Messages for components of ``sub`` that are not paths of length <= k-2."""
    if sub.n == 0:
        return []
    msgs = []
    seen: set[int] = set()
    for start in range(sub.n):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for w in sub.neighbors(v):
                    if w not in comp:
                        comp.add(w)
                        nxt.append(w)
            frontier = nxt
        seen |= comp
        original = sorted(back[v] for v in comp)
        degs = sorted(sub.degree(v) for v in comp)
        edges = sum(degs) // 2
        is_path = edges == len(comp) - 1 and (not degs or degs[-1] <= 2)
        if not is_path:
            msgs.append(f"component {original} of the degree-2 zone is not a path")
        elif edges > k - 2:
            msgs.append(f"degree-2 zone path {original} has length {edges} > {k - 2}")
    return msgs


def strip_leaves(G: Graph) -> tuple[Graph, int]:
    """Remove degree <= 1 vertices repeatedly; returns (core, removed count)."""
    g = G
    removed = 0
    while g.n:
        low = [v for v in range(g.n) if g.degree(v) <= 1]
        if not low:
            break
        # Deleting shifts labels, so delete from the top down.
        for v in sorted(low, reverse=True):
            g = g.without_vertex(v)
            removed += 1
    return g, removed


# -- generators --------------------------------------------------------------


def all_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def greedy_saturate(
    n: int, k: int, edge_order: Iterable[tuple[int, int]], budget: int | None = None
) -> Graph:
    """Scan vertex pairs in the given order, keeping the graph C_k-free.

    A pair is added exactly when no path of k-1 edges currently joins it.
    The result is maximal C_k-free, hence C_k-saturated.
    """
    if n < k:
        raise TooFewVertices(f"need at least {k} vertices, got {n}")
    order = list(edge_order)
    if sorted(set(order)) != all_pairs(n):
        raise ValueError("edge_order must be a permutation of all vertex pairs")
    G = Graph(n, [])
    for u, v in order:
        if exists_path_of_length(G, u, v, k - 1, budget=budget) is None:
            G = G.with_edge(u, v)
    return G
