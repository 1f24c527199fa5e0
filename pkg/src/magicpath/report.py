"""Catalog-level statistics, the total-distance histogram, the markdown report
and the local-symmetry threshold sweep.

Everything here is recomputed from analysis records alone.
"""

from __future__ import annotations

import csv
import io
import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .dudeney import ANCHOR_ASSOCIATIVE, ANCHOR_PANDIAGONAL, ANCHOR_SIZE304
from .records import AnalysisRecord
from .square import MagicPathError
from .symmetry import ClassifierParams, SymmetryClass, classify, duplicate_census
from .trajectory import extremes_of

LOCAL_TARGET = 252
CLASS_ORDER = [c.value for c in SymmetryClass]


@dataclass(frozen=True)
class HistogramSpec:
    bin_width: float = 1.0
    range_start: float = 20.0
    range_end: float = 43.0

    def __post_init__(self) -> None:
        if self.bin_width <= 0:
            raise MagicPathError("histogram bin width must be positive")
        if self.range_start >= self.range_end:
            raise MagicPathError("histogram range start must be below its end")

    def edges(self) -> list[float]:
        count = math.ceil((self.range_end - self.range_start) / self.bin_width - 1e-9)
        return [self.range_start + i * self.bin_width for i in range(count + 1)]


def histogram(totals: Sequence[float], spec: HistogramSpec = HistogramSpec()) -> list[tuple[float, float, int]]:
    """Right-open bins ``[start, end)`` as ``(start, end, count)`` rows."""
    edges = spec.edges()
    if totals and not (edges[0] <= min(totals) and max(totals) < edges[-1]):
        raise MagicPathError(
            f"histogram range [{edges[0]}, {edges[-1]}) does not cover "
            f"totals {min(totals)}..{max(totals)}")
    counts = [0] * (len(edges) - 1)
    for t in totals:
        i = min(int((t - edges[0]) // spec.bin_width), len(counts) - 1)
        # correct for rounding in the floor division
        while t < edges[i]:
            i -= 1
        while t >= edges[i + 1]:
            i += 1
        counts[i] += 1
    return [(edges[i], edges[i + 1], c) for i, c in enumerate(counts)]


def catalog_histogram(records: Sequence[AnalysisRecord],
                      spec: HistogramSpec = HistogramSpec()) -> list[tuple[float, float, int]]:
    """Histogram of record totals; order 3 gets a range fitted to its one total."""
    totals = [r.total for r in records]
    if records and records[0].order == 3:
        spec = HistogramSpec(spec.bin_width, math.floor(min(totals)),
                             math.floor(max(totals)) + spec.bin_width)
    return histogram(totals, spec)


def histogram_csv(rows: Sequence[tuple[float, float, int]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["bin_start", "bin_end", "count"])
    for start, end, count in rows:
        w.writerow([repr(start), repr(end), count])
    return buf.getvalue()


def anchor_label(group_id: int) -> str:
    return {ANCHOR_PANDIAGONAL: "pandiagonal",
            ANCHOR_ASSOCIATIVE: "associative",
            ANCHOR_SIZE304: "size304"}.get(group_id, "derived")


def dudeney_census(records: Sequence[AnalysisRecord]) -> list[tuple[int, int, str]]:
    counts = Counter(r.dudeney_group for r in records if r.dudeney_group is not None)
    return [(gid, counts[gid], anchor_label(gid)) for gid in sorted(counts)]


def dudeney_csv(census: Sequence[tuple[int, int, str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["group_id", "member_count", "anchor"])
    w.writerows(census)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# threshold sweep
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepRow:
    local_min_length: int
    non_reflexive: int
    counts: dict[str, int]
    local_distinct: int
    matches_target: bool
    closest: bool = False


def sweep(records: Sequence[AnalysisRecord], target: int = LOCAL_TARGET) -> list[SweepRow]:
    """Class census of the non-reflexive squares for each local_min_length 2..15."""
    others = [r.legs_squared for r in records if not r.reflexive]
    distinct = sorted(set(others))
    rows = []
    for length in range(2, 16):
        params = ClassifierParams(local_min_length=length)
        counts = Counter(classify(legs, params).assigned_class.value for legs in others)
        local_distinct = sum(
            1 for legs in distinct
            if classify(legs, params).assigned_class is SymmetryClass.LOCAL)
        rows.append(SweepRow(length, len(others), {c: counts.get(c, 0) for c in CLASS_ORDER},
                             local_distinct, counts.get("Local", 0) == target))
    best = min(abs(r.counts["Local"] - target) for r in rows)
    return [SweepRow(r.local_min_length, r.non_reflexive, r.counts, r.local_distinct,
                     r.matches_target, abs(r.counts["Local"] - target) == best)
            for r in rows]


def sweep_csv(rows: Sequence[SweepRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["local_min_length", "non_reflexive"] + [c.lower() for c in CLASS_ORDER[1:]]
               + ["local_distinct_patterns", "matches_target", "closest"])
    for r in rows:
        w.writerow([r.local_min_length, r.non_reflexive]
                   + [r.counts[c] for c in CLASS_ORDER[1:]]
                   + [r.local_distinct, int(r.matches_target), int(r.closest)])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# markdown report
# ---------------------------------------------------------------------------

def _fmt_indices(indices: Sequence[int]) -> str:
    return ", ".join(map(str, indices))


def render_report(records: Sequence[AnalysisRecord], spec: HistogramSpec = HistogramSpec()) -> str:
    if not records:
        raise MagicPathError("analysis file is empty")
    n = len(records)
    order = records[0].order
    totals = [r.total for r in records]
    ext = extremes_of(totals, order * order - 1)
    census = duplicate_census([r.legs_squared for r in records])
    reflexive = sum(r.reflexive for r in records)
    non_reflexive = n - reflexive

    out = [
        f"# Magic path report (order {order})",
        "",
        "Records follow the catalog's lexicographic (row-major) order; indices are 1-based",
        "positions in that order, a convention of this tool.",
        "",
        "## Total distance",
        "",
        f"- squares: {n}",
        f"- min total: {ext.min_total:.2f} (index {_fmt_indices(ext.argmin)})",
        f"- max total: {ext.max_total:.2f} (index {_fmt_indices(ext.argmax)})",
        f"- mean total: {ext.mean_total:.2f}",
        f"- per-city average, shortest path: {ext.min_per_city:.2f}",
        f"- per-city average, longest path: {ext.max_per_city:.2f}",
        "",
        "Histogram of totals:",
        "",
        "| bin | count |",
        "|---|---|",
    ]
    bins = catalog_histogram(records, spec)
    out += [f"| [{a:g}, {b:g}) | {c} |" for a, b, c in bins if c]
    out += ["", f"histogram total: {sum(c for _, _, c in bins)}", ""]

    out += [
        "## Reflexive symmetry",
        "",
        f"reflexive: {reflexive} / {n}",
        f"non-reflexive: {non_reflexive}",
        "",
        "## Distance patterns",
        "",
        f"distinct patterns: {census.distinct_count}, repeated: {census.repeated_pattern_count}",
        f"surplus duplicates (squares minus distinct patterns): {census.surplus_count}",
        "multiplicity histogram: " + ", ".join(
            f"{m}x: {c}" for m, c in census.multiplicity_histogram.items()),
        "",
    ]

    if order == 4:
        groups = dudeney_census(records)
        out += ["## Dudeney groups", "", "| group | members | anchor | reflexive |", "|---|---|---|---|"]
        for gid, count, anchor in groups:
            pal = sum(r.reflexive for r in records if r.dudeney_group == gid)
            out.append(f"| {gid} | {count} | {anchor} | {pal} |")
        out.append("")
        for gid in (ANCHOR_ASSOCIATIVE, ANCHOR_SIZE304):
            members = [r for r in records if r.dudeney_group == gid]
            pal = sum(r.reflexive for r in members)
            verdict = "all reflexive" if members and pal == len(members) else "NOT all reflexive"
            out.append(f"group {gid}: {pal} / {len(members)} reflexive ({verdict})")
        outside = sum(r.reflexive for r in records
                      if r.dudeney_group not in (ANCHOR_ASSOCIATIVE, ANCHOR_SIZE304))
        out += [f"reflexive squares outside groups 3 and 6: {outside}", ""]

    classes = Counter(r.assigned_class for r in records)
    out += ["## Symmetry classes", "", "| class | squares |", "|---|---|"]
    out += [f"| {c} | {classes.get(c, 0)} |" for c in CLASS_ORDER]
    few = sum(1 for r in records if not r.reflexive and r.mismatch_pairs <= 3)
    out += [
        "",
        f"non-reflexive with at most 3 mismatched mirror pairs: {few} / {non_reflexive}",
        "",
    ]

    if non_reflexive:
        rows = sweep(records)
        exact = [r.local_min_length for r in rows if r.matches_target]
        out += ["## Local-symmetry calibration", ""]
        if exact:
            out.append(f"local_min_length reproducing {LOCAL_TARGET} local patterns: "
                       + _fmt_indices(exact))
        else:
            out.append(f"no local_min_length in 2..15 gives exactly {LOCAL_TARGET} local patterns")
        for r in rows:
            if r.closest:
                out.append(f"closest: local_min_length={r.local_min_length} gives "
                           f"{r.counts['Local']} squares ({r.local_distinct} distinct patterns)")
        out.append("")
    return "\n".join(out)
