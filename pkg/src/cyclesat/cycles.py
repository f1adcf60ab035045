"""Exact-length simple path and cycle search.

This is the single search kernel behind every verifier in the package:
depth-first backtracking over simple paths with two prunings computed from
per-vertex bitmasks at every expansion,

* distance: a branch dies when the target is farther (through unvisited
  vertices) than the remaining edge budget, and
* supply: a branch dies when the vertices that could still appear on the
  path (reachable from both ends within the budget) cannot fill it.

Exact-length path search is NP-hard in general, so a configurable node
expansion budget turns pathological inputs into an explicit error instead
of a hang.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, _iter_bits

DEFAULT_EXPANSION_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    """The expansion budget ran out before the search finished."""


@dataclass(frozen=True)
class PathWitness:
    """A simple path, listed from one endpoint to the other."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def is_valid_in(self, G: Graph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs):
            return False
        return all(G.has_edge(a, b) for a, b in zip(vs, vs[1:]))


@dataclass(frozen=True)
class CycleWitness:
    """A simple cycle, listed in cyclic order (closing edge implied)."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def is_valid_in(self, G: Graph, missing_edge: tuple[int, int] | None = None) -> bool:
        """Check the cycle exists in ``G``.

        When ``missing_edge`` is given, that one (unordered) pair may be
        absent from ``G``; this validates certificate cycles that use a
        newly added non-edge.
        """
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            return False
        allowed = None
        if missing_edge is not None:
            allowed = (min(missing_edge), max(missing_edge))
        misses = 0
        for a, b in zip(vs, vs[1:] + vs[:1]):
            if G.has_edge(a, b):
                continue
            if allowed is not None and (min(a, b), max(a, b)) == allowed:
                misses += 1
                continue
            return False
        return misses <= 1


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise SearchBudgetExceeded("node expansion budget exhausted")


def _usable(adj: tuple[int, ...], avail: int, cur: int, target: int, remaining: int):
    """Vertices usable by some completion of the current branch.

    Returns ``(usable_mask, target_dist)`` where ``target_dist`` is the
    unvisited-graph distance from ``cur`` to ``target`` (None when the
    target is out of reach within ``remaining``).  A vertex is usable when
    its distances from ``cur`` and to ``target`` sum to at most
    ``remaining``.
    """
    # BFS layers out of cur through available vertices.
    from_cur = [1 << cur]
    seen = 1 << cur
    frontier = seen
    tbit = 1 << target
    target_dist = None
    depth = 0
    while frontier and depth < remaining:
        depth += 1
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        nxt &= avail & ~seen
        if not nxt:
            break
        if nxt & tbit and target_dist is None:
            target_dist = depth
        from_cur.append(nxt)
        seen |= nxt
        frontier = nxt
    if target_dist is None:
        return 0, None
    # BFS layers out of target; cumulative unions by distance.
    to_target_cum = [tbit]
    seen = tbit
    frontier = tbit
    for _ in range(remaining - 1):
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        nxt &= avail & ~seen
        if not nxt:
            to_target_cum.append(seen)
            break
        seen |= nxt
        to_target_cum.append(seen)
        frontier = nxt
    usable = 0
    top = len(to_target_cum) - 1
    for d in range(1, len(from_cur)):
        usable |= from_cur[d] & to_target_cum[min(remaining - d, top)]
    return usable, target_dist


def _search_path(G: Graph, u: int, v: int, length: int, budget: _Budget):
    adj = G.adj
    full = (1 << G.n) - 1
    tbit = 1 << v
    path = [u]

    def rec(cur: int, visited: int, remaining: int) -> bool:
        budget.spend()
        if remaining == 1:
            if adj[cur] & tbit:
                path.append(v)
                return True
            return False
        avail = full & ~visited
        if remaining == 2:
            # Midpoint in closed form: any unvisited common neighbor.
            mids = adj[cur] & adj[v] & avail & ~tbit
            if mids:
                w = (mids & -mids).bit_length() - 1
                path.append(w)
                path.append(v)
                return True
            return False
        if remaining >= 4:
            # Two short BFS passes pay off only above the closed-form floor.
            usable, tdist = _usable(adj, avail, cur, v, remaining)
            if tdist is None or tdist > remaining:
                return False
            if usable.bit_count() < remaining:
                return False
            candidates = adj[cur] & usable & ~tbit
        else:
            candidates = adj[cur] & avail & ~tbit
        for w in _iter_bits(candidates):
            path.append(w)
            if rec(w, visited | (1 << w), remaining - 1):
                return True
            path.pop()
        return False

    if rec(u, 1 << u, length):
        return PathWitness(tuple(path))
    return None


def exists_path_of_length(
    G: Graph, u: int, v: int, length: int, budget: int | None = None
) -> PathWitness | None:
    """A simple path with exactly ``length`` edges from ``u`` to ``v``.

    Neighbors are explored in ascending vertex order, so the returned
    witness is reproducible.  Returns None when no such path exists.
    """
    if u == v:
        raise ValueError("path endpoints must be distinct")
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise ValueError(f"endpoints ({u}, {v}) outside 0..{G.n - 1}")
    if length < 1:
        raise ValueError(f"path length must be positive, got {length}")
    if length > G.n - 1:
        return None
    return _search_path(G, u, v, length, _Budget(budget or DEFAULT_EXPANSION_BUDGET))


def has_cycle_of_length(G: Graph, k: int, budget: int | None = None) -> CycleWitness | None:
    """A simple cycle on exactly ``k`` vertices, if any exists.

    Scans edges in sorted order; for each edge uv, looks for a u-v path of
    length k-1 in the graph with uv removed.  The first hit, closed by uv,
    is the witness.
    """
    if k < 3:
        raise ValueError(f"cycle length must be at least 3, got {k}")
    if k > G.n:
        return None
    shared = _Budget(budget or DEFAULT_EXPANSION_BUDGET)
    for u, v in G.edges:
        stripped = G.without_edge(u, v)
        found = _search_path(stripped, u, v, k - 1, shared)
        if found is not None:
            return CycleWitness(found.vertices)
    return None


def shortest_cycle_through(G: Graph, w: int) -> int | None:
    """Minimum length over all cycles containing ``w`` (None when acyclic at w).

    A shortest cycle through w is w plus two distinct neighbors joined by a
    shortest path avoiding w, so BFS from each neighbor in G - w suffices.
    """
    if not 0 <= w < G.n:
        raise ValueError(f"vertex {w} outside 0..{G.n - 1}")
    nbrs = G.neighbors(w)
    if len(nbrs) < 2:
        return None
    adj = G.adj
    avail = ((1 << G.n) - 1) & ~(1 << w)
    best: int | None = None
    for idx, u in enumerate(nbrs):
        # BFS distances from u in G - w.
        dist = {u: 0}
        frontier = 1 << u
        seen = frontier
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for x in _iter_bits(frontier):
                nxt |= adj[x]
            nxt &= avail & ~seen
            for x in _iter_bits(nxt):
                dist[x] = d
            seen |= nxt
            frontier = nxt
        for v in nbrs[idx + 1 :]:
            if v in dist:
                cand = dist[v] + 2
                if best is None or cand < best:
                    best = cand
    return best
