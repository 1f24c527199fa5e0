"""Exhaustive backtracking enumeration of normal magic squares.

The search fills cells one at a time.  Whenever a row, column or diagonal has
a single empty cell left, that cell is forced to ``M - partial_sum``; lines
that fill up through some other route are checked against ``M`` on
completion.  Free cells are chosen in an order that completes lines as early
as possible, which is what keeps order 4 cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .square import (
    InvalidOrderError,
    Square,
    Transform,
    frenicle_canonical,
    lines,
    magic_constant,
    transform_cells,
)

SUPPORTED_ORDERS = (3, 4)

FREE, FORCE, CHECK = 0, 1, 2


@dataclass(frozen=True)
class CanonicalCatalog:
    """Sorted canonical squares; ``index`` is the 1-based position in this list.

    The lexicographic indexing is this package's own convention.
    """

    order: int
    squares: tuple[Square, ...]

    def __len__(self) -> int:
        return len(self.squares)

    def __iter__(self) -> Iterator[Square]:
        return iter(self.squares)

    def __getitem__(self, index: int) -> Square:
        """Square at 1-based catalog ``index``."""
        if not 1 <= index <= len(self.squares):
            raise IndexError(f"catalog index {index} out of range 1..{len(self.squares)}")
        return self.squares[index - 1]

    def index(self, square: Square) -> int:
        return self.squares.index(square) + 1


def _check_order(order: int) -> None:
    if order not in SUPPORTED_ORDERS:
        raise InvalidOrderError(f"unsupported order {order}; expected one of {SUPPORTED_ORDERS}")


def search_plan(order: int) -> list[tuple[int, int, int]]:
    """Ordered (kind, cell, line) steps for the backtracking search."""
    all_lines = lines(order)
    n2 = order * order
    assigned: set[int] = set()
    consumed: set[int] = set()
    steps: list[tuple[int, int, int]] = []

    def propagate() -> None:
        progress = True
        while progress:
            progress = False
            for li, line in enumerate(all_lines):
                if li in consumed:
                    continue
                empty = [c for c in line if c not in assigned]
                if len(empty) == 1:
                    steps.append((FORCE, empty[0], li))
                    assigned.add(empty[0])
                elif empty:
                    continue
                else:
                    steps.append((CHECK, -1, li))
                consumed.add(li)
                progress = True

    def fullness(cell: int) -> tuple[int, int]:
        filled = max(sum(1 for c in line if c in assigned)
                     for line in all_lines if cell in line)
        return -filled, cell

    propagate()
    while len(assigned) < n2:
        cell = min((c for c in range(n2) if c not in assigned), key=fullness)
        steps.append((FREE, cell, -1))
        assigned.add(cell)
        propagate()
    return steps


def _search(order: int, canonical_only: bool) -> list[tuple[int, ...]]:
    n = order
    n2 = n * n
    target = magic_constant(n)
    all_lines = lines(n)
    steps = search_plan(n)
    # for each cell, the lines through it (used for partial-sum pruning)
    cell_lines = [[li for li, line in enumerate(all_lines) if c in line] for c in range(n2)]

    # Frenicle-style representative tests: smallest corner top-left, and the
    # right neighbour of that corner below the lower neighbour.
    corners = (n - 1, n2 - n, n2 - 1)
    rep_checks: dict[int, list[tuple[int, int]]] = {}
    if canonical_only:
        filled_at = {cell: k for k, (kind, cell, _) in enumerate(steps) if kind != CHECK}
        for lo, hi in [(0, c) for c in corners] + [(1, n)]:
            last = steps[max(filled_at[lo], filled_at[hi])][1]
            rep_checks.setdefault(last, []).append((lo, hi))

    grid = [0] * n2
    used = [False] * (n2 + 1)
    line_sum = [0] * len(all_lines)
    line_empty = [len(line) for line in all_lines]
    found: list[tuple[int, ...]] = []

    def place(cell: int, v: int) -> bool:
        """Assign ``v``; report whether every line through ``cell`` stays feasible."""
        grid[cell] = v
        used[v] = True
        feasible = True
        for li in cell_lines[cell]:
            line_sum[li] += v
            line_empty[li] -= 1
            # each remaining empty cell needs at least 1
            if line_sum[li] + line_empty[li] > target:
                feasible = False
        if feasible:
            for lo, hi in rep_checks.get(cell, ()):
                if grid[lo] > grid[hi]:
                    return False
        return feasible

    def unplace(cell: int, v: int) -> None:
        grid[cell] = 0
        used[v] = False
        for li in cell_lines[cell]:
            line_sum[li] -= v
            line_empty[li] += 1

    def step(k: int) -> None:
        if k == len(steps):
            found.append(tuple(grid))
            return
        kind, cell, li = steps[k]
        if kind == FREE:
            for v in range(1, n2 + 1):
                if not used[v]:
                    if place(cell, v):
                        step(k + 1)
                    unplace(cell, v)
        elif kind == FORCE:
            v = target - line_sum[li]
            if 1 <= v <= n2 and not used[v]:
                if place(cell, v):
                    step(k + 1)
                unplace(cell, v)
        elif line_sum[li] == target:
            step(k + 1)

    step(0)
    return found


def search_all(order: int) -> list[tuple[int, ...]]:
    """Every magic square of ``order`` found by the unrestricted search."""
    _check_order(order)
    return sorted(_search(order, canonical_only=False))


@lru_cache(maxsize=None)
def enumerate_canonical(order: int) -> CanonicalCatalog:
    _check_order(order)
    found = {frenicle_canonical(Square(order, cells)) for cells in _search(order, True)}
    return CanonicalCatalog(order, tuple(sorted(found)))


def enumerate_all(order: int) -> list[Square]:
    """All magic squares of ``order``: the full orbit of every catalog entry."""
    catalog = enumerate_canonical(order)
    cells = {transform_cells(s.cells, order, t) for s in catalog for t in Transform}
    return [Square(order, c) for c in sorted(cells)]
