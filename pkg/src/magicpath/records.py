"""Squares files, per-square analysis records and the JSON-lines analysis file."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .dudeney import GroupTable, build_group_table
from .enumerator import enumerate_canonical
from .square import MagicPathError, Square, is_associative, is_magic, is_pandiagonal
from .symmetry import ClassifierParams, classify, duplicate_census
from .trajectory import leg_squares, trajectory_stats

HEADER_PREFIX = "# magicpath squares"


class FileFormatError(MagicPathError):
    pass


# ---------------------------------------------------------------------------
# squares file
# ---------------------------------------------------------------------------

def format_squares(squares: Sequence[Square], order: int) -> str:
    out = [f"{HEADER_PREFIX} order={order} count={len(squares)}"]
    out.extend(" ".join(map(str, s.cells)) for s in squares)
    return "\n".join(out) + "\n"


def parse_squares(text: str) -> tuple[int, list[Square]]:
    """Parse a squares file; errors name the offending line (1-based)."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith(HEADER_PREFIX):
        raise FileFormatError(f"line 1: missing '{HEADER_PREFIX}' header")
    try:
        meta = dict(item.split("=", 1) for item in lines[0][len(HEADER_PREFIX):].split())
        order, count = int(meta["order"]), int(meta["count"])
    except (KeyError, ValueError):
        raise FileFormatError(f"line 1: malformed header {lines[0]!r}") from None

    squares = []
    for lineno, line in enumerate(lines[1:], 2):
        if not line.strip():
            continue
        try:
            cells = [int(tok) for tok in line.split()]
        except ValueError:
            raise FileFormatError(f"line {lineno}: non-integer entry in {line!r}") from None
        if len(cells) != order * order:
            raise FileFormatError(
                f"line {lineno}: expected {order * order} integers, got {len(cells)}")
        if not is_magic(cells, order):
            raise FileFormatError(
                f"line {lineno}: square {len(squares) + 1} is not a magic square")
        squares.append(Square(order, tuple(cells)))
    if len(squares) != count:
        raise FileFormatError(f"header announces {count} squares, file holds {len(squares)}")
    return order, squares


def read_squares(path: str | Path) -> tuple[int, list[Square]]:
    return parse_squares(Path(path).read_text())


def write_squares(path: str | Path, squares: Sequence[Square], order: int) -> None:
    Path(path).write_text(format_squares(squares, order))


# ---------------------------------------------------------------------------
# analysis records
# ---------------------------------------------------------------------------

# python attribute -> key in the analysis file
_KEYS = {
    "index": "index",
    "cells": "cells",
    "legs_squared": "legsSquared",
    "total": "total",
    "per_city_average": "perCityAverage",
    "reflexive": "reflexive",
    "mismatch_pairs": "mismatchPairs",
    "longest_local_palindrome_length": "longestLocalPalindromeLength",
    "period": "period",
    "assigned_class": "assignedClass",
    "dudeney_group": "dudeneyGroup",
    "duplicate_group_id": "duplicateGroupId",
    "is_associative": "isAssociativeFlag",
    "is_pandiagonal": "isPandiagonalFlag",
}


@dataclass(frozen=True)
class AnalysisRecord:
    index: int
    cells: tuple[int, ...]
    legs_squared: tuple[int, ...]
    total: float
    per_city_average: float
    reflexive: bool
    mismatch_pairs: int
    longest_local_palindrome_length: int
    period: Optional[int]
    assigned_class: str
    dudeney_group: Optional[int]  # None for order 3
    duplicate_group_id: int
    is_associative: bool
    is_pandiagonal: bool

    @property
    def order(self) -> int:
        return int(round(len(self.cells) ** 0.5))

    def to_json(self) -> str:
        data = asdict(self)
        data["cells"] = list(self.cells)
        data["legs_squared"] = list(self.legs_squared)
        # repr-based float output round-trips exactly
        return json.dumps({_KEYS[f.name]: data[f.name] for f in fields(self)})

    @classmethod
    def from_json(cls, line: str) -> AnalysisRecord:
        data = json.loads(line)
        kwargs = {attr: data[key] for attr, key in _KEYS.items()}
        kwargs["cells"] = tuple(kwargs["cells"])
        kwargs["legs_squared"] = tuple(kwargs["legs_squared"])
        return cls(**kwargs)


@lru_cache(maxsize=None)
def order4_group_table() -> GroupTable:
    return build_group_table(enumerate_canonical(4))


def analyze(squares: Sequence[Square], params: ClassifierParams = ClassifierParams()) -> list[AnalysisRecord]:
    """Full per-square analysis; indices are 1-based positions in ``squares``."""
    all_legs = [leg_squares(s) for s in squares]
    census = duplicate_census(all_legs)
    table = order4_group_table() if squares and squares[0].order == 4 else None
    records = []
    for index, (square, legs) in enumerate(zip(squares, all_legs), 1):
        stats = trajectory_stats(legs)
        sym = classify(legs, params)
        records.append(AnalysisRecord(
            index=index,
            cells=square.cells,
            legs_squared=legs.legs_squared,
            total=stats.total_distance,
            per_city_average=stats.per_city_average,
            reflexive=sym.reflexive,
            mismatch_pairs=sym.mismatch_pairs,
            longest_local_palindrome_length=sym.longest_local_palindrome_length,
            period=sym.period,
            assigned_class=sym.assigned_class.value,
            dudeney_group=table.classify(square) if table else None,
            duplicate_group_id=census.duplicate_group_ids[index],
            is_associative=is_associative(square),
            is_pandiagonal=is_pandiagonal(square),
        ))
    return records


def format_analysis(records: Iterable[AnalysisRecord]) -> str:
    return "".join(r.to_json() + "\n" for r in records)


def read_analysis(path: str | Path) -> list[AnalysisRecord]:
    records = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        if not line.strip():
            continue
        try:
            records.append(AnalysisRecord.from_json(line))
        except (ValueError, KeyError, TypeError) as exc:
            raise FileFormatError(f"line {lineno}: bad analysis record ({exc})") from None
    return records
