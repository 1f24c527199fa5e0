"""The traveler's path through cities 1..n² placed at cell centers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .enumerator import CanonicalCatalog
from .square import Cell, InvalidShapeError, MagicPathError, Square


@dataclass(frozen=True)
class LegSequence:
    """Squared lengths of the n²−1 legs between consecutive cities.

    Squared lengths are exact integers; every comparison in the package works
    on these rather than on the floating lengths.
    """

    order: int
    legs_squared: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "legs_squared", tuple(self.legs_squared))
        expected = self.order * self.order - 1
        if len(self.legs_squared) != expected:
            raise InvalidShapeError(
                f"order {self.order} needs {expected} legs, got {len(self.legs_squared)}")
        if any(d < 1 for d in self.legs_squared):
            raise MagicPathError("consecutive cities cannot share a cell")

    def __len__(self) -> int:
        return len(self.legs_squared)

    def __iter__(self):
        return iter(self.legs_squared)

    def __getitem__(self, i):
        return self.legs_squared[i]

    @property
    def lengths(self) -> tuple[float, ...]:
        return tuple(math.sqrt(d) for d in self.legs_squared)

    def reversed(self) -> LegSequence:
        return LegSequence(self.order, self.legs_squared[::-1])


@dataclass(frozen=True)
class TrajectoryStats:
    total_distance: float
    per_city_average: float


def city_positions(square: Square) -> dict[int, Cell]:
    n = square.order
    return {v: Cell(*divmod(i, n)) for i, v in enumerate(square.cells)}


def leg_squares(square: Square) -> LegSequence:
    pos = city_positions(square)
    legs = []
    for k in range(1, square.order ** 2):
        a, b = pos[k], pos[k + 1]
        legs.append((a.row - b.row) ** 2 + (a.col - b.col) ** 2)
    return LegSequence(square.order, tuple(legs))


def path_length(legs_squared: Iterable[int]) -> float:
    # fsum is correctly rounded, so the result depends only on the multiset
    # of legs; equal multisets give bit-identical totals.
    return math.fsum(math.sqrt(d) for d in legs_squared)


def trajectory_stats(legs: LegSequence) -> TrajectoryStats:
    total = path_length(legs.legs_squared)
    # averaged over legs, not cities: 20.31 / 15 ≈ 1.35
    return TrajectoryStats(total, total / len(legs))


@dataclass(frozen=True)
class CatalogExtremes:
    min_total: float
    max_total: float
    mean_total: float
    argmin: tuple[int, ...]
    argmax: tuple[int, ...]
    min_per_city: float
    max_per_city: float


def extremes_of(totals: Sequence[float], leg_counts: int) -> CatalogExtremes:
    """Extremes over 1-based indexed totals; ties report every index."""
    if not totals:
        raise MagicPathError("empty catalog")
    lo, hi = min(totals), max(totals)
    return CatalogExtremes(
        min_total=lo,
        max_total=hi,
        mean_total=math.fsum(totals) / len(totals),
        argmin=tuple(i for i, t in enumerate(totals, 1) if t == lo),
        argmax=tuple(i for i, t in enumerate(totals, 1) if t == hi),
        min_per_city=lo / leg_counts,
        max_per_city=hi / leg_counts,
    )


def catalog_extremes(catalog: CanonicalCatalog) -> CatalogExtremes:
    totals = [trajectory_stats(leg_squares(s)).total_distance for s in catalog]
    return extremes_of(totals, catalog.order ** 2 - 1)
