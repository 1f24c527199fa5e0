import math

import pytest
from hypothesis import given, strategies as st

from magicpath.square import Cell, MagicPathError, Square, Transform, apply_transform, complement
from magicpath.trajectory import (
    LegSequence,
    catalog_extremes,
    city_positions,
    leg_squares,
    path_length,
    trajectory_stats,
)

from conftest import LO_SHU_CANONICAL

DURER_LEGS = (10, 1, 10, 4, 2, 1, 2, 10, 2, 1, 2, 4, 10, 1, 10)
LO_SHU_LEGS = (5, 5, 1, 2, 2, 1, 5, 5)
ACHIEVABLE_4 = {dr * dr + dc * dc for dr in range(4) for dc in range(4)} - {0}


def test_achievable_set():
    assert ACHIEVABLE_4 == {1, 2, 4, 5, 8, 9, 10, 13, 18}


def test_city_positions(durer):
    pos = city_positions(durer)
    assert pos[1] == Cell(3, 3)
    assert pos[16] == Cell(0, 0)
    assert sorted(pos) == list(range(1, 17))
    assert city_positions(Square(3, LO_SHU_CANONICAL))[5] == Cell(1, 1)


def test_positions_follow_transform(durer):
    for t in Transform:
        moved = city_positions(apply_transform(durer, t))
        orig = city_positions(durer)
        for v, cell in moved.items():
            assert t.source(cell.row, cell.col, 4) == (orig[v].row, orig[v].col)


def test_leg_squares_examples(durer):
    assert leg_squares(Square(3, LO_SHU_CANONICAL)).legs_squared == LO_SHU_LEGS
    assert leg_squares(durer).legs_squared == DURER_LEGS


def test_lo_shu_total():
    stats = trajectory_stats(LegSequence(3, LO_SHU_LEGS))
    closed = 4 * math.sqrt(5) + 2 * math.sqrt(2) + 2
    assert stats.total_distance == pytest.approx(closed, abs=1e-12)
    assert round(stats.total_distance, 2) == 13.77
    assert stats.per_city_average == pytest.approx(closed / 8)


def test_durer_total():
    # five legs of √10, four of √2, four of 1, two of 2
    closed = 5 * math.sqrt(10) + 4 * math.sqrt(2) + 4 + 2 * 2
    assert trajectory_stats(LegSequence(4, DURER_LEGS)).total_distance == pytest.approx(
        closed, abs=1e-12)
    assert closed == pytest.approx(29.4682, abs=1e-4)


def test_leg_sequence_guards():
    with pytest.raises(MagicPathError):
        LegSequence(4, (0,) * 15)
    with pytest.raises(MagicPathError):
        LegSequence(4, (1,) * 14)


def test_catalog_legs_invariants(catalog4):
    for s in catalog4:
        legs = leg_squares(s)
        assert len(legs) == 15
        assert set(legs) <= ACHIEVABLE_4
        for t in Transform:
            assert leg_squares(apply_transform(s, t)) == legs
        assert leg_squares(complement(s)).legs_squared == legs.legs_squared[::-1]


def test_summation_order_is_benign(catalog4):
    for s in catalog4:
        legs = leg_squares(s).legs_squared
        naive = 0.0
        for d in legs:
            naive += math.sqrt(d)
        ascending = 0.0
        for d in sorted(legs):
            ascending += math.sqrt(d)
        assert abs(naive - ascending) < 1e-12
        assert abs(path_length(legs) - naive) < 1e-12


@given(st.permutations(list(DURER_LEGS)))
def test_total_depends_only_on_multiset(perm):
    assert path_length(perm) == path_length(DURER_LEGS)


def test_catalog_extremes(catalog3, catalog4):
    ext = catalog_extremes(catalog4)
    assert ext.min_total == pytest.approx(20.31, abs=0.01)
    assert ext.max_total == pytest.approx(42.76, abs=0.01)
    assert ext.mean_total == pytest.approx(33.94, abs=0.01)
    assert ext.min_per_city == pytest.approx(1.35, abs=0.01)
    assert ext.max_per_city == pytest.approx(2.85, abs=0.01)
    totals = [trajectory_stats(leg_squares(s)).total_distance for s in catalog4]
    assert list(ext.argmin) == [i for i, t in enumerate(totals, 1) if t == min(totals)]
    assert list(ext.argmax) == sorted(ext.argmax)

    ext3 = catalog_extremes(catalog3)
    assert ext3.min_total == ext3.max_total == ext3.mean_total
    assert ext3.min_total == pytest.approx(4 * math.sqrt(5) + 2 * math.sqrt(2) + 2, abs=1e-12)


def test_min_total_closed_form(catalog4):
    # the shortest path uses legs {1, 2, 9} only; check against its exact count
    ext = catalog_extremes(catalog4)
    legs = leg_squares(catalog4[ext.argmin[0]]).legs_squared
    ones, twos, nines = legs.count(1), legs.count(2), legs.count(9)
    assert ones + twos + nines == 15
    assert ext.min_total == pytest.approx(ones + twos * math.sqrt(2) + 3 * nines, abs=1e-12)
