"""Magic square grids, the dihedral transform group and structural predicates."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence


class MagicPathError(ValueError):
    """Base class for validation failures raised by this package."""


class InvalidOrderError(MagicPathError):
    pass


class InvalidShapeError(MagicPathError):
    pass


class NotMagicError(MagicPathError):
    pass


def magic_constant(order: int) -> int:
    """Common line sum of a normal magic square of the given order."""
    if order < 1:
        raise InvalidOrderError(f"invalid order {order}")
    return order * (order * order + 1) // 2


def lines(order: int) -> list[tuple[int, ...]]:
    """Row-major cell indices of every row, column and both main diagonals."""
    n = order
    result = [tuple(r * n + c for c in range(n)) for r in range(n)]
    result += [tuple(r * n + c for r in range(n)) for c in range(n)]
    result.append(tuple(i * n + i for i in range(n)))
    result.append(tuple(i * n + n - 1 - i for i in range(n)))
    return result


def is_magic(cells: Sequence[int], order: int) -> bool:
    if len(cells) != order * order:
        raise InvalidShapeError(
            f"expected {order * order} cells for order {order}, got {len(cells)}")
    if sorted(cells) != list(range(1, order * order + 1)):
        return False
    target = magic_constant(order)
    return all(sum(cells[i] for i in line) == target for line in lines(order))


@dataclass(frozen=True, order=True)
class Cell:
    row: int
    col: int


@dataclass(frozen=True)
class Square:
    """A normal magic square stored as a row-major tuple of values.

    Construction validates the magic property, so every ``Square`` in
    circulation is a genuine magic square.
    """

    order: int
    cells: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cells", tuple(self.cells))
        if not is_magic(self.cells, self.order):
            raise NotMagicError(f"not a normal magic square: {list(self.cells)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> Square:
        return cls(len(rows), tuple(v for row in rows for v in row))

    def rows(self) -> list[tuple[int, ...]]:
        n = self.order
        return [self.cells[r * n:(r + 1) * n] for r in range(n)]

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return self.cells[r * self.order + c]

    def __lt__(self, other: Square) -> bool:
        return (self.order, self.cells) < (other.order, other.cells)

    def __str__(self) -> str:
        return " ".join(map(str, self.cells))


class Transform(enum.Enum):
    IDENTITY = "identity"
    ROTATE90 = "rotate90"
    ROTATE180 = "rotate180"
    ROTATE270 = "rotate270"
    FLIP_H = "flipH"
    FLIP_V = "flipV"
    FLIP_MAIN_DIAG = "flipMainDiag"
    FLIP_ANTI_DIAG = "flipAntiDiag"

    def source(self, r: int, c: int, n: int) -> tuple[int, int]:
        """Cell of the original grid whose value lands at (r, c).

        Rotations are clockwise; flipH mirrors left-right, flipV top-bottom.
        """
        m = n - 1
        return {
            Transform.IDENTITY: (r, c),
            Transform.ROTATE90: (m - c, r),
            Transform.ROTATE180: (m - r, m - c),
            Transform.ROTATE270: (c, m - r),
            Transform.FLIP_H: (r, m - c),
            Transform.FLIP_V: (m - r, c),
            Transform.FLIP_MAIN_DIAG: (c, r),
            Transform.FLIP_ANTI_DIAG: (m - c, m - r),
        }[self]

    def permutation(self, order: int) -> tuple[int, ...]:
        return _permutation(self, order)

    def then(self, other: Transform) -> Transform:
        """The single transform equal to applying ``self`` and then ``other``."""
        n = 3
        first, second = self.permutation(n), other.permutation(n)
        combined = tuple(first[second[i]] for i in range(n * n))
        for t in Transform:
            if t.permutation(n) == combined:
                return t
        raise AssertionError("dihedral group not closed")

    def inverse(self) -> Transform:
        return next(t for t in Transform if self.then(t) is Transform.IDENTITY)


@lru_cache(maxsize=None)
def _permutation(t: Transform, order: int) -> tuple[int, ...]:
    # result[i] = original[perm[i]]
    perm = []
    for r in range(order):
        for c in range(order):
            sr, sc = t.source(r, c, order)
            perm.append(sr * order + sc)
    return tuple(perm)


def transform_cells(cells: Sequence[int], order: int, t: Transform) -> tuple[int, ...]:
    perm = _permutation(t, order)
    return tuple(cells[i] for i in perm)


def apply_transform(square: Square, t: Transform) -> Square:
    return Square(square.order, transform_cells(square.cells, square.order, t))


def variants(square: Square) -> list[Square]:
    return [apply_transform(square, t) for t in Transform]


def frenicle_canonical(square: Square) -> Square:
    """Lexicographically least row-major variant over the 8 symmetries."""
    best = min(transform_cells(square.cells, square.order, t) for t in Transform)
    return Square(square.order, best)


def is_frenicle_canonical(square: Square) -> bool:
    return frenicle_canonical(square).cells == square.cells


def positions(square: Square) -> dict[int, tuple[int, int]]:
    n = square.order
    return {v: divmod(i, n) for i, v in enumerate(square.cells)}


def complement(square: Square) -> Square:
    if square.order != 4:
        raise InvalidOrderError(f"complement supports order 4 only, got {square.order}")
    return Square(4, tuple(17 - v for v in square.cells))


def is_associative(square: Square) -> bool:
    """Complementary values sit at point reflections through the grid center."""
    n = square.order
    total = n * n + 1
    pos = positions(square)
    return all(
        pos[k][0] + pos[total - k][0] == n - 1 and pos[k][1] + pos[total - k][1] == n - 1
        for k in range(1, total))


def is_pandiagonal(square: Square) -> bool:
    n = square.order
    target = magic_constant(n)
    for shift in range(n):
        if sum(square[i, (i + shift) % n] for i in range(n)) != target:
            return False
        if sum(square[i, (shift - i) % n] for i in range(n)) != target:
            return False
    return True


def is_axis_complement(square: Square) -> bool:
    """Complements mirror each other across one fixed center line."""
    n = square.order
    total = n * n + 1
    pos = positions(square)
    horizontal = all(pos[total - k] == (n - 1 - pos[k][0], pos[k][1]) for k in range(1, total))
    vertical = all(pos[total - k] == (pos[k][0], n - 1 - pos[k][1]) for k in range(1, total))
    return horizontal or vertical


def is_semi_pandiagonal(square: Square) -> bool:
    # order 4: the two pairs of opposite short diagonals each sum to 34
    if square.order != 4:
        raise InvalidOrderError("semi-pandiagonal is defined for order 4 only")
    s = square
    return (s[0, 1] + s[1, 0] + s[2, 3] + s[3, 2] == 34
            and s[0, 2] + s[1, 3] + s[2, 0] + s[3, 1] == 34)
