"""Shared strategies and independent reference oracles for the test suite.

The reference implementations here are deliberately naive (permutation
scans, bitmask sweeps) so they stay independent of the search kernel and
canonical-labeling code they are used to check.
"""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from cyclesat.graphs import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def naive_path_exists(G: Graph, u: int, v: int, length: int) -> bool:
    """Exhaustive scan over all vertex sequences of the right shape."""
    others = [w for w in range(G.n) if w != u and w != v]
    if length - 1 > len(others):
        return False
    for mids in itertools.permutations(others, length - 1):
        seq = (u, *mids, v)
        if all(G.has_edge(a, b) for a, b in zip(seq, seq[1:])):
            return True
    return False


def naive_cycle_exists(G: Graph, k: int) -> bool:
    for sub in itertools.combinations(range(G.n), k):
        for perm in itertools.permutations(sub[1:]):
            seq = (sub[0],) + perm
            if all(G.has_edge(a, b) for a, b in zip(seq, seq[1:] + seq[:1])):
                return True
    return False


def naive_count_cycles(G: Graph, k: int) -> int:
    """Number of distinct k-cycles (vertex sets with cyclic order, undirected)."""
    count = 0
    for sub in itertools.combinations(range(G.n), k):
        for perm in itertools.permutations(sub[1:]):
            if perm[0] > perm[-1]:
                continue  # each undirected cycle once
            seq = (sub[0],) + perm
            if all(G.has_edge(a, b) for a, b in zip(seq, seq[1:] + seq[:1])):
                count += 1
    return count


def naive_is_saturated(G: Graph, k: int) -> bool:
    """Definition-level check: no k-cycle, and each added non-edge makes one."""
    if naive_cycle_exists(G, k):
        return False
    base = naive_count_cycles(G, k)
    for u, v in G.non_edges():
        if naive_count_cycles(G.with_edge(u, v), k) <= base:
            return False
    return True


def naive_is_semisaturated(G: Graph, k: int) -> bool:
    base = naive_count_cycles(G, k)
    for u, v in G.non_edges():
        if naive_count_cycles(G.with_edge(u, v), k) <= base:
            return False
    return True


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, list(itertools.combinations(range(n), 2)))
