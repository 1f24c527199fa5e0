"""``magicpath`` command line.

    magicpath enumerate --order 4 --out squares4.txt
    magicpath analyze --squares squares4.txt --out analysis4.jsonl
    magicpath report --analysis analysis4.jsonl --out report4.md
    magicpath render --squares squares4.txt --index 1 --mode trajectory --out t.svg
    magicpath sweep --analysis analysis4.jsonl --out sweep4.csv

Exit codes: 0 success, 1 validation error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .enumerator import enumerate_canonical
from .records import analyze, format_analysis, read_analysis, read_squares, write_squares
from .report import (
    HistogramSpec,
    catalog_histogram,
    dudeney_census,
    dudeney_csv,
    histogram_csv,
    render_report,
    sweep,
    sweep_csv,
)
from .square import MagicPathError
from .svg import RENDERERS
from .symmetry import ClassifierParams

log = logging.getLogger("magicpath")

EXIT_OK, EXIT_VALIDATION, EXIT_IO = 0, 1, 2


def sidecar(path: Path, suffix: str) -> Path:
    return path.with_name(f"{path.stem}.{suffix}.csv")


def cmd_enumerate(args: argparse.Namespace) -> None:
    catalog = enumerate_canonical(args.order)
    write_squares(args.out, catalog.squares, args.order)
    log.info("wrote %d squares to %s", len(catalog), args.out)


def cmd_analyze(args: argparse.Namespace) -> None:
    _, squares = read_squares(args.squares)
    params = ClassifierParams(args.local_min_length, args.partial_max_mismatch)
    records = analyze(squares, params)
    Path(args.out).write_text(format_analysis(records))
    log.info("wrote %d records to %s", len(records), args.out)


def cmd_report(args: argparse.Namespace) -> None:
    records = read_analysis(args.analysis)
    start, end = args.hist_range
    spec = HistogramSpec(args.hist_bin_width, start, end)
    out = Path(args.out)
    out.write_text(render_report(records, spec))
    sidecar(out, "histogram").write_text(histogram_csv(catalog_histogram(records, spec)))
    if records[0].dudeney_group is not None:
        sidecar(out, "dudeney").write_text(dudeney_csv(dudeney_census(records)))
    log.info("wrote report to %s", out)


def cmd_render(args: argparse.Namespace) -> None:
    _, squares = read_squares(args.squares)
    if not 1 <= args.index <= len(squares):
        raise MagicPathError(f"index {args.index} out of range 1..{len(squares)}")
    Path(args.out).write_text(RENDERERS[args.mode](squares[args.index - 1]))


def cmd_sweep(args: argparse.Namespace) -> None:
    records = read_analysis(args.analysis)
    rows = sweep(records)
    Path(args.out).write_text(sweep_csv(rows))
    for r in rows:
        if r.matches_target or r.closest:
            log.info("local_min_length=%d -> %d local (%s)", r.local_min_length,
                     r.counts["Local"], "match" if r.matches_target else "closest")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="magicpath",
                                     description="Magic square trajectories and their symmetries.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="write the canonical catalog of magic squares")
    p.add_argument("--order", type=int, required=True, choices=(3, 4))
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("analyze", parents=[common], help="per-square trajectory, symmetry and Dudeney analysis")
    p.add_argument("--squares", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--local-min-length", type=int, default=ClassifierParams.local_min_length)
    p.add_argument("--partial-max-mismatch", type=int,
                   default=ClassifierParams.partial_max_mismatch)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("report", parents=[common], help="markdown report plus histogram and census CSVs")
    p.add_argument("--analysis", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--hist-bin-width", type=float, default=HistogramSpec.bin_width)
    p.add_argument("--hist-range", type=float, nargs=2, metavar=("A", "B"),
                   default=(HistogramSpec.range_start, HistogramSpec.range_end))
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("render", parents=[common], help="SVG of one square's trajectory or distance pattern")
    p.add_argument("--squares", required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--mode", required=True, choices=sorted(RENDERERS))
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("sweep", parents=[common], help="local-symmetry threshold calibration")
    p.add_argument("--analysis", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        args.func(args)
    except MagicPathError as exc:
        print(f"magicpath: error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"magicpath: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
