from itertools import combinations
from math import comb

import pytest

from loosepath.constructions import (
    bounds_table,
    bounds_tsv,
    lower_bound_coloring,
    star_hypergraph,
)
from loosepath.errors import FormatError, OrderTooSmall
from loosepath.patterns import (
    PatternKind,
    contains_pattern,
    find_loose_path3,
    oracle_contains,
)
from loosepath.pipeline import find_mono_path, threshold


def test_lower_bound_one_color_is_complete_block():
    col = lower_bound_coloring(1)
    assert col.order == 6
    assert len(col.classes()[0].edges) == comb(6, 3)
    assert find_loose_path3(col.classes()[0]) is None


def test_lower_bound_two_colors():
    col = lower_bound_coloring(2)
    sizes = [len(cls.edges) for cls in col.classes()]
    assert sizes == [15, 20]
    assert all(0 in e for e in col.classes()[0].edges)
    assert find_mono_path(col) is None  # witnesses that 7 vertices are not enough


def test_lower_bound_classes_partition_everything():
    for n in (3, 10):
        col = lower_bound_coloring(n)
        assert col.order == n + 5
        total = sum(len(cls.edges) for cls in col.classes())
        assert total == comb(n + 5, 3)
        for cls in col.classes():
            assert find_loose_path3(cls) is None


def test_star_edge_counts():
    assert len(star_hypergraph(8, 0).edges) == 21
    assert len(star_hypergraph(3, 1).edges) == 1
    assert len(star_hypergraph(9, 0).edges) == 28
    assert find_loose_path3(star_hypergraph(9, 0)) is None


def test_star_center_argument():
    h = star_hypergraph(6, 5)
    assert all(5 in e for e in h.edges)
    with pytest.raises(FormatError):
        star_hypergraph(6, 6)
    with pytest.raises(OrderTooSmall):
        star_hypergraph(2, 0)


def test_star_free_of_all_patterns_up_to_twelve():
    for order in range(5, 13):
        h = star_hypergraph(order, 0)
        assert len(h.edges) == comb(order - 1, 2)
        for kind in PatternKind:
            assert not contains_pattern(kind, h)
    # full oracle sweep at desk scale
    for order in range(5, 10):
        h = star_hypergraph(order, 0)
        for kind in PatternKind:
            assert not oracle_contains(kind, h)


def test_bounds_rows():
    rows = {r.n: r for r in bounds_table(30)}
    assert (rows[2].lower, rows[2].exact, rows[2].upper_new) == (8, 8, 13)
    assert rows[1].exact == 7
    assert rows[6].upper_old is None
    assert (rows[20].upper_old, rows[20].upper_new, rows[20].best_upper) == (61, 61, 61)
    assert (rows[25].upper_old, rows[25].upper_new, rows[25].best_upper) == (76, 74, 74)
    assert rows[11].exact is None


def test_bounds_crossover_behavior():
    rows = {r.n: r for r in bounds_table(200)}
    for n in range(7, 20):
        assert rows[n].upper_old < rows[n].upper_new
    for n in range(20, 201):
        assert rows[n].upper_new <= rows[n].upper_old
    for n in range(22, 201):
        assert rows[n].upper_new < rows[n].upper_old


def test_bounds_invariants_hold_out_to_three_hundred():
    for row in bounds_table(300):
        assert row.lower == row.n + 6
        assert row.upper_new == threshold(row.n)
        assert row.lower <= row.best_upper
        if row.exact is not None:
            assert row.lower <= row.exact <= row.best_upper


def test_bounds_tsv_rendering():
    text = bounds_tsv(bounds_table(3))
    lines = text.strip().split("\n")
    assert lines[0] == "n\tlower\tupper_old\tupper_new\texact\tbest_upper"
    assert lines[1] == "1\t7\t-\t9\t7\t9"
    assert lines[2] == "2\t8\t-\t13\t8\t13"
    assert lines[3] == "3\t9\t-\t16\t9\t16"
