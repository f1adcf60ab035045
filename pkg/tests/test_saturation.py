import random

import pytest
from hypothesis import given, settings

from conftest import (
    complete_graph,
    cycle_graph,
    graphs,
    naive_is_saturated,
    naive_is_semisaturated,
    path_graph,
    star_graph,
)
from cyclesat.families import build_h1, build_wheel
from cyclesat.graphs import Graph
from cyclesat.saturation import (
    Certificate,
    TooFewVertices,
    all_pairs,
    check_structure,
    degree_partition,
    greedy_saturate,
    is_ck_free,
    is_saturated,
    is_semisaturated,
    strip_leaves,
)


# -- freeness ---------------------------------------------------------------


def test_c6_is_not_c6_free():
    res = is_ck_free(cycle_graph(6), 6)
    assert not res.free
    assert res.cycle is not None and res.cycle.is_valid_in(cycle_graph(6))


def test_star_is_triangle_free():
    assert is_ck_free(star_graph(6), 3).free


def test_h1_is_free():
    assert is_ck_free(build_h1(7, 9).graph, 7).free


# -- semisaturation ----------------------------------------------------------


def test_wheel_is_semisaturated():
    assert is_semisaturated(build_wheel(6, 0).graph, 6).holds


def test_path5_is_not_c5_semisaturated():
    from cyclesat.cycles import exists_path_of_length

    g = path_graph(5)
    verdict = is_semisaturated(g, 5)
    assert not verdict.holds
    assert verdict.failing_nonedge is not None
    # exhaustive cross-check: exactly the five short non-edges fail; only
    # the endpoint pair (0, 4) is spanned by a 4-path (the path itself)
    failing = [
        (u, v)
        for u, v in g.non_edges()
        if exists_path_of_length(g, u, v, 4) is None
    ]
    assert len(failing) == 5 and (0, 4) not in failing
    assert not naive_is_semisaturated(g, 5)


def test_complete_graph_semisaturated_vacuously():
    verdict = is_semisaturated(complete_graph(6), 5)
    assert verdict.holds
    assert verdict.certificate is not None
    assert verdict.certificate.per_nonedge == {}


def test_too_few_vertices_is_an_error():
    with pytest.raises(TooFewVertices):
        is_semisaturated(path_graph(4), 5)
    with pytest.raises(TooFewVertices):
        is_saturated(path_graph(4), 5)


# -- saturation --------------------------------------------------------------


def test_h1_is_saturated_with_sound_certificate():
    h = build_h1(7, 9)
    verdict = is_saturated(h.graph, 7)
    assert verdict.holds
    cert = verdict.certificate
    assert cert is not None and cert.mode == "saturated" and cert.freeness
    assert cert.validate(h.graph) == []


def test_star_is_triangle_saturated():
    for n in (3, 5, 8):
        assert is_saturated(star_graph(n), 3).holds


def test_c7_is_not_c7_saturated():
    # the 7-cycle contains a 7-cycle, so it cannot be C7-saturated
    assert not is_ck_free(cycle_graph(7), 7).free
    assert not is_saturated(cycle_graph(7), 7).holds


@given(graphs(min_n=4, max_n=7))
@settings(max_examples=80, deadline=None)
def test_agrees_with_naive_definition_checker(g):
    for k in range(3, g.n + 1):
        assert is_saturated(g, k, want_certificate=False).holds == naive_is_saturated(
            g, k
        )
        assert is_semisaturated(
            g, k, want_certificate=False
        ).holds == naive_is_semisaturated(g, k)


# -- certificates -------------------------------------------------------------


def test_certificate_text_round_trip():
    h = build_h1(7, 9)
    cert = is_saturated(h.graph, 7).certificate
    parsed = Certificate.from_text(cert.to_text())
    assert parsed == cert
    assert parsed.validate(h.graph) == []


def test_certificate_validation_catches_tampering():
    g = build_wheel(6, 0).graph
    cert = is_semisaturated(g, 6).certificate
    (ne, wit), *_ = sorted(cert.per_nonedge.items())
    bad = dict(cert.per_nonedge)
    bad[ne] = type(wit)(wit.vertices[:-1] + (wit.vertices[0],))
    tampered = Certificate(cert.n, cert.k, cert.mode, cert.freeness, bad)
    assert tampered.validate(g) != []


# -- degree partition ----------------------------------------------------------


def test_partition_star():
    part = degree_partition(star_graph(6))
    assert part.x == frozenset({1, 2, 3, 4, 5})
    assert part.y4plus == frozenset({0})
    assert not part.y3 and not part.z2 and not part.z3plus
    assert part.five_parts


def test_partition_c6():
    part = degree_partition(cycle_graph(6))
    assert part.z2 == frozenset(range(6))
    assert not part.x and not part.y3 and not part.y4plus and not part.z3plus


def test_partition_h1_without_pendants():
    h = build_h1(7, 12)  # t=2, r=0: no degree-one vertices
    assert h.params.r == 0
    part = degree_partition(h.graph)
    assert part.x == frozenset()


def test_partition_identity_with_leaves():
    h = build_h1(8, 21)  # r = 2 pendant vertices
    assert h.params.r == 2
    part = degree_partition(h.graph)
    assert len(part.x) == 2 and len(part.y) == 2
    assert part.five_parts
    assert h.graph.n == part.a + 2 * part.b + part.c + 2 * part.d


# -- structural checks -----------------------------------------------------------


def test_shared_leaf_neighbor_violates_i():
    # two leaves on one stem vertex cannot appear in a semisaturated graph
    g = Graph(6, [(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    report = check_structure(g, 5, checks=("i",))
    assert not report.ok
    assert report.violations[0].check == "i"


def test_wheel_cycle_cover():
    report = check_structure(build_wheel(6, 0).graph, 6, checks=("cycle-cover",))
    assert report.ok


def test_unknown_check_rejected():
    with pytest.raises(ValueError):
        check_structure(cycle_graph(5), 5, checks=("vii",))


def test_greedy_graphs_pass_structure_checks():
    rng = random.Random(99)
    for trial in range(8):
        k = (5, 6, 7)[trial % 3]
        n = rng.randint(max(k, 9), 13)
        order = all_pairs(n)
        rng.shuffle(order)
        g = greedy_saturate(n, k, order)
        report = check_structure(g, k, checks=("i", "ii", "iv", "v", "vi"))
        assert report.ok, (n, k, report.violations)


# -- leaf stripping ---------------------------------------------------------------


def test_strip_leaves_reaches_min_degree_two():
    h = build_h1(8, 21).graph
    core, removed = strip_leaves(h)
    assert removed == 2
    assert min(core.degree_sequence()) >= 2
    assert core.edge_count == h.edge_count - removed


def test_strip_leaves_consumes_trees_entirely():
    core, removed = strip_leaves(path_graph(6))
    assert core.n == 0 and removed == 6


# -- greedy saturation --------------------------------------------------------------


def test_greedy_is_maximal_and_saturated():
    order = all_pairs(6)
    g = greedy_saturate(6, 3, order)
    assert is_saturated(g, 3, want_certificate=False).holds
    assert is_ck_free(g, 3).free


def test_greedy_order_producing_k33():
    cross_first = [(u, v) for u in range(3) for v in range(3, 6)]
    rest = [p for p in all_pairs(6) if p not in cross_first]
    g = greedy_saturate(6, 3, cross_first + rest)
    assert g.edge_count == 9
    assert sorted(g.edges) == sorted(cross_first)


def test_greedy_random_orders_all_saturated():
    rng = random.Random(4)
    for _ in range(20):
        order = all_pairs(10)
        rng.shuffle(order)
        g = greedy_saturate(10, 5, order)
        assert is_saturated(g, 5, want_certificate=False).holds


def test_greedy_rejects_partial_order():
    with pytest.raises(ValueError):
        greedy_saturate(5, 3, [(0, 1)])


def test_leaf_removal_keeps_semisaturation():
    # removing any degree-one vertex of a semisaturated graph (k >= 5)
    # preserves semisaturation
    rng = random.Random(12)
    for trial in range(6):
        k = (5, 6, 7)[trial % 3]
        n = rng.randint(max(k, 9), 12)
        order = all_pairs(n)
        rng.shuffle(order)
        g = greedy_saturate(n, k, order)
        for v in range(g.n):
            if g.degree(v) == 1:
                reduced = g.without_vertex(v)
                assert is_semisaturated(reduced, k, want_certificate=False).holds
