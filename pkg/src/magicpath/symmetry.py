"""Symmetry detectors for distance patterns and the duplicate-pattern census.

Every detector takes a leg sequence (``LegSequence`` or any integer sequence)
and compares exact squared lengths only.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .square import MagicPathError


class SymmetryClass(str, enum.Enum):
    REFLEXIVE = "Reflexive"
    LOCAL = "Local"
    PERIODIC = "Periodic"
    PARTIAL = "Partial"
    OTHER = "Other"


@dataclass(frozen=True)
class ClassifierParams:
    local_min_length: int = 9
    partial_max_mismatch: int = 3

    def __post_init__(self) -> None:
        if not 2 <= self.local_min_length <= 15:
            raise MagicPathError(f"local_min_length must be in 2..15, got {self.local_min_length}")
        if not 1 <= self.partial_max_mismatch <= 7:
            raise MagicPathError(
                f"partial_max_mismatch must be in 1..7, got {self.partial_max_mismatch}")


@dataclass(frozen=True)
class SymmetryRecord:
    reflexive: bool
    mismatch_pairs: int
    longest_local_palindrome_length: int
    period: Optional[int]
    assigned_class: SymmetryClass


def is_palindrome(legs: Sequence[int]) -> bool:
    seq = tuple(legs)
    return seq == seq[::-1]


def mismatch_pairs(legs: Sequence[int]) -> int:
    """Mirror pairs (i, L-1-i) whose entries differ; the center is free."""
    seq = tuple(legs)
    n = len(seq)
    return sum(1 for i in range(n // 2) if seq[i] != seq[n - 1 - i])


def longest_local_palindrome(legs: Sequence[int]) -> tuple[int, int]:
    """Leftmost longest palindromic run as ``(start, length)``, start 1-based."""
    seq = tuple(legs)
    n = len(seq)
    if n == 0:
        return 1, 0
    best_start, best_len = 0, 1
    # expand around every center; strict ">" keeps the leftmost winner
    for center in range(2 * n - 1):
        lo, hi = center // 2, (center + 1) // 2
        while lo >= 0 and hi < n and seq[lo] == seq[hi]:
            lo -= 1
            hi += 1
        length = hi - lo - 1
        if length > best_len:
            best_start, best_len = lo + 1, length
    return best_start + 1, best_len


def detect_period(legs: Sequence[int]) -> Optional[int]:
    """Least period p >= 2 whose motif occurs at least twice in full."""
    seq = tuple(legs)
    n = len(seq)
    for p in range(2, n // 2 + 1):
        if all(seq[i] == seq[i + p] for i in range(n - p)):
            return p
    return None


def classify(legs: Sequence[int], params: ClassifierParams = ClassifierParams()) -> SymmetryRecord:
    mismatches = mismatch_pairs(legs)
    _, local = longest_local_palindrome(legs)
    period = detect_period(legs)
    if mismatches == 0:
        label = SymmetryClass.REFLEXIVE
    elif local >= params.local_min_length:
        label = SymmetryClass.LOCAL
    elif period is not None:
        label = SymmetryClass.PERIODIC
    elif mismatches <= params.partial_max_mismatch:
        label = SymmetryClass.PARTIAL
    else:
        label = SymmetryClass.OTHER
    return SymmetryRecord(mismatches == 0, mismatches, local, period, label)


@dataclass(frozen=True)
class DuplicateCensus:
    """Grouping of catalog entries by identical leg sequence.

    ``repeated_pattern_count`` counts distinct sequences shared by two or more
    squares; ``surplus_count`` counts squares whose sequence already occurred
    at a smaller index (catalog size minus ``distinct_count``).
    """

    distinct_count: int
    repeated_pattern_count: int
    surplus_count: int
    multiplicity_histogram: dict[int, int]
    duplicate_group_ids: dict[int, int] = field(repr=False)


def duplicate_census(all_legs: Sequence[Sequence[int]]) -> DuplicateCensus:
    first_index: dict[tuple[int, ...], int] = {}
    group_ids: dict[int, int] = {}
    for index, legs in enumerate(all_legs, 1):
        key = tuple(legs)
        group_ids[index] = first_index.setdefault(key, index)
    sizes = Counter(group_ids.values())
    histogram = dict(sorted(Counter(sizes.values()).items()))
    distinct = len(first_index)
    return DuplicateCensus(
        distinct_count=distinct,
        repeated_pattern_count=sum(1 for m in sizes.values() if m >= 2),
        surplus_count=len(group_ids) - distinct,
        multiplicity_histogram=histogram,
        duplicate_group_ids=group_ids,
    )
