"""Dudeney groups of order-4 magic squares via complement-pair chord patterns.

Joining the cells of each complementary pair (k, 17−k) gives 8 chords that
tile the grid.  Two squares belong to the same group when their chord sets
agree up to a rotation or reflection of the grid.
"""

from __future__ import annotations

import csv
import io
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from .square import (
    InvalidOrderError,
    MagicPathError,
    Square,
    Transform,
    is_associative,
    is_pandiagonal,
    transform_cells,
)

log = logging.getLogger(__name__)

EXPECTED_GROUPS = 12
ANCHOR_PANDIAGONAL = 1
ANCHOR_ASSOCIATIVE = 3
ANCHOR_SIZE304 = 6

Chord = tuple[int, int]


class GroupTableError(MagicPathError):
    pass


class UnknownChordPatternError(MagicPathError):
    pass


def _chords_of(cells: tuple[int, ...]) -> tuple[Chord, ...]:
    where = {v: i for i, v in enumerate(cells)}
    chords = (tuple(sorted((where[k], where[17 - k]))) for k in range(1, 9))
    return tuple(sorted(chords))


def _encode(chords: Iterable[Chord]) -> bytes:
    return bytes(i for chord in chords for i in chord)


@dataclass(frozen=True)
class ChordPattern:
    """Complement chords as row-major cell-index pairs plus the D4-invariant key."""

    chords: tuple[Chord, ...]
    canonical_encoding: bytes


def chord_pattern(square: Square) -> ChordPattern:
    if square.order != 4:
        raise InvalidOrderError("chord patterns are defined for order 4 only")
    chords = _chords_of(square.cells)
    key = min(_encode(_chords_of(transform_cells(square.cells, 4, t))) for t in Transform)
    return ChordPattern(chords, key)


def oriented_encoding(square: Square) -> bytes:
    """Chord encoding without minimizing over transforms."""
    return _encode(_chords_of(square.cells))


@dataclass(frozen=True)
class DudeneyGroup:
    id: int
    member_count: int
    anchor: str


@dataclass(frozen=True)
class GroupTable:
    """Maps chord encodings to group ids 1..12.

    ``oriented`` is set when the D4-invariant partition did not give 12
    classes and the table fell back to orientation-sensitive encodings.
    """

    by_encoding: dict[bytes, int]
    groups: tuple[DudeneyGroup, ...]
    oriented: bool = False

    def classify(self, square: Square) -> int:
        key = oriented_encoding(square) if self.oriented else chord_pattern(square).canonical_encoding
        try:
            return self.by_encoding[key]
        except KeyError:
            raise UnknownChordPatternError(f"no Dudeney group for {square}") from None

    def census_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["group_id", "member_count", "anchor"])
        for g in self.groups:
            writer.writerow([g.id, g.member_count, g.anchor])
        return buf.getvalue()


def _partition(squares: Iterable[Square], key) -> dict[bytes, list[Square]]:
    classes: dict[bytes, list[Square]] = defaultdict(list)
    for s in squares:
        classes[key(s)].append(s)
    return classes


def _assign_ids(classes: dict[bytes, list[Square]]) -> tuple[dict[bytes, int], list[DudeneyGroup]]:
    anchors: dict[bytes, tuple[int, str]] = {}
    everything = [s for members in classes.values() for s in members]
    for gid, name, predicate in ((ANCHOR_PANDIAGONAL, "pandiagonal", is_pandiagonal),
                                 (ANCHOR_ASSOCIATIVE, "associative", is_associative)):
        wanted = {s for s in everything if predicate(s)}
        home = [enc for enc, members in classes.items() if wanted and wanted <= set(members)]
        if home:
            anchors[home[0]] = (gid, name)
    size304 = [enc for enc, members in classes.items() if len(members) == 304]
    if len(size304) == 1:
        anchors[size304[0]] = (ANCHOR_SIZE304, "size304")
    taken = {gid for gid, _ in anchors.values()}
    if len(taken) != len(anchors):
        raise GroupTableError(f"anchor rules collide: {sorted(anchors.values())}")

    rest = sorted((enc for enc in classes if enc not in anchors),
                  key=lambda enc: (-len(classes[enc]), enc))
    free_ids = [i for i in range(1, len(classes) + 1) if i not in taken]
    by_encoding = {enc: gid for enc, (gid, _) in anchors.items()}
    labels = {gid: name for gid, name in anchors.values()}
    for enc, gid in zip(rest, free_ids):
        by_encoding[enc] = gid
        labels[gid] = "derived"
    groups = sorted(
        (DudeneyGroup(gid, len(classes[enc]), labels[gid]) for enc, gid in by_encoding.items()),
        key=lambda g: g.id)
    return by_encoding, groups


def build_group_table(squares: Iterable[Square]) -> GroupTable:
    """Partition a full order-4 catalog into Dudeney groups.

    Ids: the pandiagonal class is 1, the associative class is 3, the unique
    class of size 304 is 6; the others take the remaining ids by descending
    size, ties broken by encoding.
    """
    squares = list(squares)
    classes = _partition(squares, lambda s: chord_pattern(s).canonical_encoding)
    oriented = False
    if len(classes) != EXPECTED_GROUPS:
        fallback = _partition(squares, oriented_encoding)
        sizes = sorted((len(m) for m in classes.values()), reverse=True)
        fallback_sizes = sorted((len(m) for m in fallback.values()), reverse=True)
        log.warning("chord classes up to symmetry: %d %s; orientation-sensitive: %d %s",
                    len(classes), sizes, len(fallback), fallback_sizes)
        if len(fallback) != EXPECTED_GROUPS:
            raise GroupTableError(
                f"expected {EXPECTED_GROUPS} chord classes; up to symmetry found "
                f"{len(classes)} with sizes {sizes}, orientation-sensitive found "
                f"{len(fallback)} with sizes {fallback_sizes}")
        classes, oriented = fallback, True
    by_encoding, groups = _assign_ids(classes)
    return GroupTable(by_encoding, tuple(groups), oriented)


def classify_group(square: Square, table: GroupTable) -> int:
    return table.classify(square)
