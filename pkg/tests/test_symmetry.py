from collections import Counter

import pytest
from hypothesis import given, strategies as st

from magicpath.square import MagicPathError, is_associative, is_axis_complement
from magicpath.symmetry import (
    ClassifierParams,
    SymmetryClass,
    classify,
    detect_period,
    duplicate_census,
    is_palindrome,
    longest_local_palindrome,
    mismatch_pairs,
)
from magicpath.trajectory import LegSequence, leg_squares

DURER_LEGS = [10, 1, 10, 4, 2, 1, 2, 10, 2, 1, 2, 4, 10, 1, 10]
legs15 = st.lists(st.sampled_from([1, 2, 4, 5, 8, 9, 10, 13, 18]), min_size=15, max_size=15)
small_alphabet = st.lists(st.integers(1, 3), min_size=1, max_size=20)


def brute_longest_palindrome(seq):
    best = (1, 1)
    for length in range(len(seq), 0, -1):
        for start in range(len(seq) - length + 1):
            window = seq[start:start + length]
            if window == window[::-1]:
                return start + 1, length
    return best


def brute_period(seq):
    n = len(seq)
    valid = [p for p in range(2, n) if all(seq[i] == seq[i + p] for i in range(n - p))]
    return valid[0] if valid and valid[0] <= n // 2 else None


@pytest.mark.parametrize("seq,expected", [
    ([5, 5, 1, 2, 2, 1, 5, 5], True),
    (DURER_LEGS, True),
    ([1, 2, 3, 4, 5, 6, 7, 8, 7, 6, 5, 4, 3, 2, 9], False),
])
def test_is_palindrome(seq, expected):
    assert is_palindrome(seq) is expected


@pytest.mark.parametrize("seq,expected", [
    (DURER_LEGS, 0),
    ([1, 2, 3, 4, 5, 6, 7, 8, 7, 6, 5, 4, 3, 2, 9], 1),
    ([9, 9, 1, 2, 2, 1, 3, 8, 4, 1, 2, 2, 1, 9, 9], 1),
])
def test_mismatch_pairs(seq, expected):
    assert mismatch_pairs(seq) == expected


def test_longest_local_palindrome_examples():
    assert longest_local_palindrome(DURER_LEGS) == (1, 15)
    assert longest_local_palindrome([9, 1, 2, 1, 9, 5, 8, 13, 4, 5, 6, 7, 8, 9, 10]) == (1, 5)
    assert longest_local_palindrome(list(range(1, 16))) == (1, 1)


def test_detect_period_examples():
    assert detect_period([2, 1] * 7 + [2]) == 2
    assert detect_period([5, 8, 1] * 5) == 3
    assert detect_period(list(range(1, 16))) is None


@given(small_alphabet)
def test_longest_palindrome_matches_brute_force(seq):
    assert longest_local_palindrome(seq) == brute_longest_palindrome(seq)


@given(st.lists(st.integers(1, 2), min_size=2, max_size=20))
def test_period_matches_brute_force(seq):
    assert detect_period(seq) == brute_period(seq)


@given(legs15)
def test_reversal_invariance(seq):
    rev = seq[::-1]
    assert mismatch_pairs(rev) == mismatch_pairs(seq)
    assert is_palindrome(rev) == is_palindrome(seq)
    assert longest_local_palindrome(rev)[1] == longest_local_palindrome(seq)[1]


@given(legs15, st.sampled_from(range(2, 16)), st.sampled_from(range(1, 8)))
def test_classify_record_invariants(seq, local, partial):
    rec = classify(seq, ClassifierParams(local, partial))
    assert rec.reflexive == (rec.mismatch_pairs == 0)
    assert 0 <= rec.mismatch_pairs <= 7
    assert 1 <= rec.longest_local_palindrome_length <= 15
    if rec.reflexive:
        assert rec.longest_local_palindrome_length == 15
        assert rec.assigned_class is SymmetryClass.REFLEXIVE
    if rec.period is not None:
        assert 2 <= rec.period <= 7
        assert all(seq[i] == seq[i + rec.period] for i in range(15 - rec.period))
    assert classify(seq, ClassifierParams(local, partial)) == rec


def test_classify_examples():
    assert classify(DURER_LEGS).assigned_class is SymmetryClass.REFLEXIVE
    local = [9, 1, 2, 1, 9, 5, 8, 13, 4, 5, 6, 7, 8, 9, 10]
    assert classify(local, ClassifierParams(local_min_length=5)).assigned_class is SymmetryClass.LOCAL
    # a palindrome with entries 4 and 7 moved: two mismatched pairs, no local run
    partial = [1, 2, 4, 13, 8, 9, 18, 13, 10, 9, 8, 5, 4, 2, 1]
    rec = classify(partial)
    assert rec.mismatch_pairs == 2
    assert rec.period is None
    assert rec.assigned_class is SymmetryClass.PARTIAL
    periodic = [1, 2, 5] * 5
    assert classify(periodic).assigned_class is SymmetryClass.PERIODIC


def test_classifier_params_bounds():
    with pytest.raises(MagicPathError):
        ClassifierParams(local_min_length=1)
    with pytest.raises(MagicPathError):
        ClassifierParams(partial_max_mismatch=8)


def test_reflexive_census(catalog4):
    legs = [leg_squares(s) for s in catalog4]
    assert sum(is_palindrome(l) for l in legs) == 414


def test_palindrome_theorem(catalog4):
    # a fixed isometry pairing complements forces a palindromic leg sequence
    for s in catalog4:
        if is_associative(s) or is_axis_complement(s):
            assert is_palindrome(leg_squares(s))


def test_duplicate_census_order4(catalog4):
    legs = [leg_squares(s) for s in catalog4]
    census = duplicate_census(legs)
    assert census.distinct_count == 768
    assert census.surplus_count == 112
    assert sum(m * c for m, c in census.multiplicity_histogram.items()) == 880
    # exact-equality grouping, computed independently
    groups = Counter(l.legs_squared for l in legs)
    assert census.repeated_pattern_count == sum(1 for m in groups.values() if m >= 2)
    assert census.multiplicity_histogram == dict(sorted(Counter(groups.values()).items()))
    assert census.multiplicity_histogram == {1: 678, 2: 76, 3: 8, 4: 5, 6: 1}


def test_duplicate_group_ids_are_smallest_member(catalog4):
    legs = [leg_squares(s).legs_squared for s in catalog4]
    census = duplicate_census(legs)
    for index, gid in census.duplicate_group_ids.items():
        assert legs[gid - 1] == legs[index - 1]
        assert gid == 1 + legs.index(legs[index - 1])


def test_duplicate_census_singleton(catalog3):
    census = duplicate_census([leg_squares(catalog3[1])])
    assert census.distinct_count == 1
    assert census.repeated_pattern_count == 0
    assert census.duplicate_group_ids == {1: 1}


def test_accepts_leg_sequence():
    legs = LegSequence(4, DURER_LEGS)
    assert is_palindrome(legs) and mismatch_pairs(legs) == 0
