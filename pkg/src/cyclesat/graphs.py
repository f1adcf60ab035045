"""Immutable simple undirected graphs with bitset adjacency and canonical forms.

Vertices are 0..n-1.  Every graph is a hashable value: mutation-style
operations (``with_edge``, ``without_vertex``, ...) return new graphs, so
verifiers and searches can snapshot and share them freely.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction input."""


class LoopEdgeError(GraphError):
    """An edge joins a vertex to itself."""


class VertexRangeError(GraphError):
    """An edge endpoint is outside 0..n-1."""


class DuplicateEdgeError(GraphError):
    """The same unordered pair is listed more than once."""


def _iter_bits(mask: int) -> Iterator[int]:
    """Yield set-bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on ``n`` vertices, stored immutably.

    Adjacency is kept both as sorted neighbor tuples (ordered iteration,
    deterministic tie-breaking) and as one integer bitmask per vertex
    (O(1) membership tests and fast set algebra in the search kernel).
    """

    __slots__ = ("n", "edges", "adj", "_nbrs", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        normalized = []
        for u, v in edges:
            if u == v:
                raise LoopEdgeError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            normalized.append((u, v) if u < v else (v, u))
        normalized.sort()
        for prev, cur in zip(normalized, normalized[1:]):
            if prev == cur:
                raise DuplicateEdgeError(f"edge {cur} listed more than once")
        self.n = n
        self.edges = tuple(normalized)
        adj = [0] * n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = tuple(adj)
        self._nbrs = tuple(tuple(_iter_bits(m)) for m in self.adj)
        self._hash = hash((n, self.edges))

    # -- basic queries -------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1) if u != v else False

    def non_edges(self) -> list[tuple[int, int]]:
        """All unordered non-adjacent pairs, lexicographically sorted."""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.adj[u] >> v & 1
        ]

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    # -- derived graphs ------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        if self.has_edge(u, v):
            raise DuplicateEdgeError(f"edge ({u}, {v}) already present")
        return Graph(self.n, self.edges + ((min(u, v), max(u, v)),))

    def without_edge(self, u: int, v: int) -> "Graph":
        pair = (min(u, v), max(u, v))
        if pair not in self.edges:
            raise GraphError(f"edge {pair} not present")
        return Graph(self.n, tuple(e for e in self.edges if e != pair))

    def without_vertex(self, x: int) -> "Graph":
        """Delete vertex ``x``; vertices above ``x`` shift down by one."""
        if not 0 <= x < self.n:
            raise VertexRangeError(f"vertex {x} outside 0..{self.n - 1}")

        def shift(w: int) -> int:
            return w - 1 if w > x else w

        return Graph(
            self.n - 1,
            [(shift(u), shift(v)) for u, v in self.edges if x not in (u, v)],
        )

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph plus the old-vertex -> new-vertex mapping."""
        keep = sorted(set(vertices))
        if keep and not (0 <= keep[0] and keep[-1] < self.n):
            raise VertexRangeError("induced vertex set outside range")
        remap = {old: new for new, old in enumerate(keep)}
        edges = [
            (remap[u], remap[v])
            for u, v in self.edges
            if u in remap and v in remap
        ]
        return Graph(len(keep), edges), remap

    def relabel(self, perm: list[int] | tuple[int, ...]) -> "Graph":
        """Apply ``old -> perm[old]`` to every vertex."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertices")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    # -- value semantics -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={len(self.edges)})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and normalize an edge list into a Graph value."""
    return Graph(n, edges)


# -- canonical forms -----------------------------------------------------
#
# The canonical code of a graph is the lexicographically smallest relabeled
# adjacency bitstring: place vertices one by one, each placement contributing
# its adjacency row to the already-placed prefix, and minimize the row
# sequence over all placement orders.  Branch-and-bound keeps only
# row-minimal candidates at each step and branches once per class of
# interchangeable (twin) candidates, which collapses the large symmetric
# cases (isolated vertices, cliques) that plain backtracking chokes on.


def _canonical_order(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    if n <= 1:
        return tuple(range(n))

    best_rows: list[int] | None = None
    best_order: list[int] | None = None
    placed: list[int] = []
    rows: list[int] = []

    def twins(u: int, v: int, rem_mask: int) -> bool:
        # Swapping u and v fixes the unexplored structure when their
        # neighborhoods among the remaining vertices agree outside {u, v}.
        clear = ~((1 << u) | (1 << v))
        return (adj[u] & rem_mask & clear) == (adj[v] & rem_mask & clear)

    def rec(rem: list[int], rowint: list[int], tight: bool) -> None:
        # ``tight`` means the row prefix built so far equals the prefix of
        # the best complete code found; only then can the next row prune.
        nonlocal best_rows, best_order
        if not rem:
            if best_rows is None or not tight:
                best_rows = rows.copy()
                best_order = placed.copy()
            return
        depth = len(placed)
        min_row = min(rowint[v] for v in rem)
        child_tight = False
        if best_rows is not None and tight:
            if min_row > best_rows[depth]:
                return
            child_tight = min_row == best_rows[depth]
        rem_mask = 0
        for v in rem:
            rem_mask |= 1 << v
        reps: list[int] = []
        for v in rem:
            if rowint[v] != min_row:
                continue
            if any(twins(v, u, rem_mask) for u in reps):
                continue
            reps.append(v)
        for v in reps:
            nxt_rem = [w for w in rem if w != v]
            nxt_rowint = rowint.copy()
            for w in nxt_rem:
                nxt_rowint[w] = (rowint[w] << 1) | (adj[w] >> v & 1)
            placed.append(v)
            rows.append(min_row)
            rec(nxt_rem, nxt_rowint, child_tight)
            placed.pop()
            rows.pop()
            # A better best may have been recorded inside the child; it
            # necessarily passed through this node, so re-anchor.
            child_tight = (
                best_rows is not None
                and rows == best_rows[:depth]
                and min_row == best_rows[depth]
            )

    rec(list(range(n)), [0] * n, tight=False)
    assert best_order is not None
    return tuple(best_order)


def canonical_order(G: Graph) -> tuple[int, ...]:
    """Placement order realizing the canonical (minimal) adjacency code."""
    return _canonical_order(G.n, G.adj)


def canonical_form(G: Graph) -> Graph:
    """The canonically relabeled copy of ``G``.

    Two graphs are isomorphic iff their canonical forms are equal.
    """
    order = canonical_order(G)
    position = [0] * G.n
    for pos, v in enumerate(order):
        position[v] = pos
    return G.relabel(position)


def _code_from_order(G: Graph, order: tuple[int, ...]) -> bytes:
    bits = 0
    nbits = 0
    for i in range(1, G.n):
        row_src = G.adj[order[i]]
        for j in range(i):
            bits = (bits << 1) | (row_src >> order[j] & 1)
            nbits += 1
    payload = bits.to_bytes((nbits + 7) // 8, "big") if nbits else b""
    return bytes([G.n]) + payload


def canonical_code(G: Graph) -> bytes:
    """Relabeling-invariant byte code identifying the isomorphism class."""
    return _code_from_order(G, canonical_order(G))


def canonical_form_and_code(G: Graph) -> tuple[Graph, bytes]:
    """Canonical relabeling and its code from a single labeling search."""
    order = canonical_order(G)
    position = [0] * G.n
    for pos, v in enumerate(order):
        position[v] = pos
    return G.relabel(position), _code_from_order(G, order)


def brute_force_isomorphic(G: Graph, H: Graph) -> bool:
    """Isomorphism test by exhaustive backtracking over vertex assignments.

    Independent of canonical codes; intended as the ground-truth oracle for
    small graphs (n <= 8 or so).
    """
    if G.n != H.n or len(G.edges) != len(H.edges):
        return False
    if sorted(G.degree_sequence()) != sorted(H.degree_sequence()):
        return False
    n = G.n
    if n == 0:
        return True
    mapping = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        gdeg = G.degree(i)
        for h in range(n):
            bit = 1 << h
            if used & bit or H.degree(h) != gdeg:
                continue
            ok = True
            for j in range(i):
                if (G.adj[i] >> j & 1) != (H.adj[h] >> mapping[j] & 1):
                    ok = False
                    break
            if ok:
                mapping[i] = h
                used |= bit
                if i + 1 == n or extend(i + 1):
                    return True
                used ^= bit
                mapping[i] = -1
        return False

    return extend(0)
