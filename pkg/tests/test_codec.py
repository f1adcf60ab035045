import itertools
import random

import pytest
from hypothesis import given

from conftest import complete_graph, graphs
from cyclesat.codec import (
    EdgeListError,
    Graph6Error,
    detect_and_decode,
    edge_list_decode,
    edge_list_encode,
    graph6_decode,
    graph6_encode,
    labels_decode,
    labels_encode,
)
from cyclesat.graphs import Graph


def test_k3_encodes_to_Bw():
    # size byte 63+3 = 'B'; triangle bits 111 padded to 111000 = 56 -> 'w'
    assert graph6_encode(complete_graph(3)) == "Bw"


def test_single_vertex_encodes_to_at_sign():
    assert graph6_encode(Graph(1, [])) == "@"


def test_decode_known_values():
    assert graph6_decode("Bw") == complete_graph(3)
    assert graph6_decode("@") == Graph(1, [])


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert graph6_decode(graph6_encode(g)) == g


def test_graph6_round_trip_random_large():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(0, 12)
        pairs = list(itertools.combinations(range(n), 2))
        g = Graph(n, [p for p in pairs if rng.random() < 0.4])
        assert graph6_decode(graph6_encode(g)) == g


def test_graph6_rejects_truncation():
    line = graph6_encode(complete_graph(5))
    with pytest.raises(Graph6Error, match="truncated"):
        graph6_decode(line[:-1])


def test_graph6_rejects_trailing_garbage():
    line = graph6_encode(complete_graph(5))
    with pytest.raises(Graph6Error, match="trailing"):
        graph6_decode(line + "A")


def test_graph6_rejects_nonprintable():
    with pytest.raises(Graph6Error, match="non-printable"):
        graph6_decode("B\x07")


def test_graph6_rejects_oversize_prefix():
    with pytest.raises(Graph6Error, match="not supported"):
        graph6_decode("~??")


def test_graph6_rejects_too_many_vertices():
    with pytest.raises(Graph6Error):
        graph6_encode(Graph(63, []))


def test_graph6_round_trip_at_size_limit():
    rng = random.Random(62)
    for n in (61, 62):
        pairs = list(itertools.combinations(range(n), 2))
        g = Graph(n, [p for p in pairs if rng.random() < 0.15])
        assert graph6_decode(graph6_encode(g)) == g


def test_edge_list_round_trip():
    g = Graph(5, [(0, 1), (2, 4)])
    assert edge_list_decode(edge_list_encode(g)) == g
    assert edge_list_encode(g) == "5\n0 1\n2 4\n"


def test_edge_list_rejects_garbage():
    with pytest.raises(EdgeListError):
        edge_list_decode("not a number\n")
    with pytest.raises(EdgeListError):
        edge_list_decode("3\n0 1 2\n")
    with pytest.raises(EdgeListError):
        edge_list_decode("")


def test_autodetect():
    g = Graph(4, [(0, 1), (1, 2)])
    assert detect_and_decode(graph6_encode(g)) == g
    assert detect_and_decode(edge_list_encode(g)) == g


def test_labels_round_trip():
    labels = {"a1": 0, "a2": 1, "A": (0, 1), "C": (4, 5, 6), "D": ()}
    assert labels_decode(labels_encode(labels)) == labels
