import pytest

from cyclesat.bounds import Observation, check_consistency
from cyclesat.graphs import canonical_code
from cyclesat.oracle import (
    CeilingExceeded,
    append_golden,
    brute_classes_with_edges,
    classes_with_edges,
    exact_min,
    exact_min_sharded,
    search_stratum,
)
from cyclesat.saturation import is_saturated, is_semisaturated

# class counts of n-vertex graphs per edge count, for cross-checking the
# generator (row n=5 and n=6 of the standard triangle)
COUNTS_5 = [1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1]
COUNTS_6 = [1, 1, 2, 5, 9, 15, 21, 24, 24, 21, 15, 9, 5, 2, 1, 1]


def test_level_generation_matches_known_counts():
    for m, expect in enumerate(COUNTS_5):
        assert len(classes_with_edges(5, m)) == expect
    for m, expect in enumerate(COUNTS_6):
        assert len(classes_with_edges(6, m)) == expect


def test_level_generation_matches_brute_force():
    for n in (4, 5):
        for m in range(n * (n - 1) // 2 + 1):
            gen = classes_with_edges(n, m)
            brute = brute_classes_with_edges(n, m)
            assert [c for c, _ in gen] == [c for c, _ in brute]


def test_representatives_are_canonical():
    for code, g in classes_with_edges(5, 5):
        assert canonical_code(g) == code


def test_sat_c4_small_values():
    # floor((3n - 5) / 2) at n = 5, 6, 7
    assert exact_min(5, 4, "sat").value == 5
    assert exact_min(6, 4, "sat").value == 6
    assert exact_min(7, 4, "sat").value == 8


def test_sat_c3_is_spanning_tree_size():
    for n in range(3, 8):
        assert exact_min(n, 3, "sat").value == n - 1


def test_star_witness_admissible_at_6_3():
    result = exact_min(6, 3, "sat")
    assert result.value == 5
    assert result.witness is not None
    assert is_saturated(result.witness, 3, want_certificate=False).holds


def test_witness_reverifies_and_is_canonical():
    result = exact_min(7, 4, "sat")
    assert result.witness.edge_count == result.value
    assert is_saturated(result.witness, 4, want_certificate=False).holds
    from cyclesat.graphs import canonical_form

    assert canonical_form(result.witness) == result.witness


def test_minimality_no_witness_one_below():
    result = exact_min(7, 4, "sat")
    below, _, _ = search_stratum(7, 4, "sat", result.value - 1)
    assert below is None


def test_shard_invariance():
    for n, k in [(5, 4), (6, 3)]:
        base = exact_min(n, k, "sat")
        for shards in (2, 3, 8):
            assert base.same_answer(exact_min_sharded(n, k, "sat", shards))


def test_values_respect_lower_bounds():
    for n, k in [(5, 4), (6, 4), (7, 4), (6, 3)]:
        result = exact_min(n, k, "sat")
        report = check_consistency(
            n, k, [Observation("search", "sat", "exact", result.value)]
        )
        assert report.consistent, report.violations()


def test_ceiling_guard():
    with pytest.raises(CeilingExceeded):
        exact_min(9, 4, "sat")
    with pytest.raises(CeilingExceeded):
        exact_min(10, 5, "ssat")


def test_parameter_validation():
    with pytest.raises(ValueError):
        exact_min(5, 2, "sat")
    with pytest.raises(ValueError):
        exact_min(4, 5, "sat")
    with pytest.raises(ValueError):
        exact_min(5, 4, "weird")
    with pytest.raises(ValueError):
        exact_min(5, 4, "sat", shards=0)


def test_budget_exhaustion_yields_partial_result():
    result = exact_min(8, 4, "sat", budget_seconds=0.0)
    assert result.status == "lower-bound-only"
    assert result.witness is None
    assert result.value >= 7  # the proven floor


def test_semisat_oracle_small():
    # ssat(6, C6): exhaustive minimum; must be at most the wheel's 10 edges
    result = exact_min(6, 6, "ssat")
    assert result.status == "exact"
    assert result.value <= 10
    assert is_semisaturated(result.witness, 6, want_certificate=False).holds


def test_golden_append(tmp_path):
    result = exact_min(5, 4, "sat")
    path = tmp_path / "oracle_values.csv"
    append_golden(path, result)
    append_golden(path, exact_min(6, 3, "sat"))
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "n,k,mode,value,witness_graph6"
    assert lines[1].startswith("5,4,sat,5,")
    assert lines[2].startswith("6,3,sat,5,")


def test_golden_rejects_partial(tmp_path):
    partial = exact_min(8, 4, "sat", budget_seconds=0.0)
    with pytest.raises(ValueError):
        append_golden(tmp_path / "x.csv", partial)
