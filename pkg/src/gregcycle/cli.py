"""Command-line front end: tables, sequences, codec calls, verification, clocks.

Exit codes: 0 on success, 1 when a verification suite fails, 2 for usage
and parse errors.  All output is UTF-8 with LF line endings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from . import verify as verification
from .calendar_core import WEEKDAY_SHORT_NAMES, Weekday
from .cycle_stats import DAY_CLASSES, multiplicity_sequence, occurrence_table, toeplitz_weekday
from .period28_codec import (
    PERIOD,
    PERIOD_IDS,
    decode,
    encode,
    extract_period,
    load_table3_encodings,
    parse_encoding,
    period_for_day,
    serialize_encoding,
)

FORMATS = ("csv", "json", "md")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def render_csv(header, rows, comment=None) -> str:
    buf = io.StringIO()
    if comment:
        buf.write(f"# {comment}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_markdown(header, rows, caption=None) -> str:
    lines = []
    if caption:
        lines.append(caption)
        lines.append("")
    lines.append("| " + " | ".join(str(cell) for cell in header) + " |")
    lines.append("|" + "|".join(" --- " for _ in header) + "|")
    for row in rows:
        lines.append("| " + " | ".join(str(cell) for cell in row) + " |")
    return "\n".join(lines) + "\n"


def render_json(meta: dict, data) -> str:
    return json.dumps({"meta": meta, "data": data}, indent=2) + "\n"


def _render_labeled_table(fmt, report, title, corner, columns, labels, data, comment=None):
    if fmt == "json":
        meta = {
            "report": report,
            "title": title,
            "row_labels": list(labels),
            "columns": list(columns),
        }
        return render_json(meta, [list(row) for row in data])
    header = [corner, *columns]
    rows = [[label, *row] for label, row in zip(labels, data)]
    if fmt == "csv":
        return render_csv(header, rows, comment)
    return render_markdown(header, rows, caption=comment)


def cmd_table1(args) -> tuple[str, int]:
    table = occurrence_table()
    text = _render_labeled_table(
        args.format,
        "table1",
        "occurrences of each day-of-month class per weekday, one 400-year Gregorian cycle",
        "d\\D",
        WEEKDAY_SHORT_NAMES,
        table.labels,
        table.rows,
    )
    return text, EXIT_OK


def cmd_table2(args) -> tuple[str, int]:
    matrix = [
        tuple(int(toeplitz_weekday(d_bar, wd)) for wd in range(7)) for d_bar in range(1, 8)
    ]
    text = _render_labeled_table(
        args.format,
        "table2",
        "weekday shift matrix: day class d relates to day 1 via column (D + 1 - d) mod 7",
        "d\\D",
        tuple(str(wd) for wd in range(7)),
        tuple(str(d_bar) for d_bar in range(1, 8)),
        matrix,
    )
    return text, EXIT_OK


def cmd_table3(args) -> tuple[str, int]:
    encodings = load_table3_encodings(args.fixture)
    labels = tuple(f"{Weekday(wd).name.title()} ({wd})" for wd in range(7))
    data = [
        [encodings.get((day_class, wd), "") for day_class in PERIOD_IDS] for wd in range(7)
    ]
    text = _render_labeled_table(
        args.format,
        "table3",
        "stored piece encodings of the 28 basic multiplicity sequences",
        "weekday",
        tuple(f"day {day_class}" for day_class in PERIOD_IDS),
        labels,
        data,
    )
    return text, EXIT_OK


def cmd_seq(args) -> tuple[str, int]:
    seq = multiplicity_sequence(args.day, args.weekday)
    summary = (
        f"day={seq.day} weekday={int(seq.weekday)} ({seq.weekday.name.title()}) "
        f"total={seq.total}"
    )
    if args.format == "json":
        meta = {
            "report": "sequence",
            "day": seq.day,
            "weekday": int(seq.weekday),
            "weekday_name": seq.weekday.name.title(),
            "total": seq.total,
        }
        return render_json(meta, list(seq.counts)), EXIT_OK
    rows = list(enumerate(seq.counts))
    if args.format == "csv":
        return render_csv(["year", "count"], rows, comment=summary), EXIT_OK
    return render_markdown(["year", "count"], rows, caption=summary), EXIT_OK


def cmd_encode(args) -> tuple[str, int]:
    period = extract_period(period_for_day(args.day))
    target = multiplicity_sequence(args.day, args.weekday).counts
    encoding = encode(period, target)
    return serialize_encoding(encoding) + "\n", EXIT_OK


def cmd_decode(args) -> tuple[str, int]:
    encoding = parse_encoding(args.encoding, strict=args.strict)
    values = decode(extract_period(args.period), encoding)
    return " ".join(str(v) for v in values) + "\n", EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    names = [args.suite] if args.suite else None
    results = verification.run_suites(names, fixture=args.fixture)
    width = max(len(result.name) for result in results)
    lines = [
        f"{result.name:<{width}}  {'PASS' if result.passed else 'FAIL'}  {result.detail}"
        for result in results
    ]
    passed = sum(1 for result in results if result.passed)
    ok = passed == len(results)
    lines.append(
        f"all suites passed ({passed}/{len(results)})"
        if ok
        else f"{len(results) - passed} suite(s) failed ({passed}/{len(results)} passed)"
    )
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_VERIFY_FAILED


@dataclass(frozen=True)
class ClockFigureSpec:
    """Layout parameters for one period-28 clock figure."""

    period_id: int
    radius: float = 140.0
    annotate_indices: bool = True


def render_clock(spec: ClockFigureSpec) -> str:
    """Standalone SVG: the 28 pattern entries on a circle, index 0 at the top.

    Indices increase clockwise.  Output is deterministic for fixed parameters
    and references no external resources.
    """
    if spec.radius <= 0:
        raise ValueError(f"radius must be positive, got {spec.radius}")
    period = extract_period(spec.period_id)
    radius = float(spec.radius)
    margin = 48.0
    size = 2 * (radius + margin)
    center = radius + margin

    def point(r: float, index: int) -> tuple[float, float]:
        angle = 2 * math.pi * index / PERIOD
        return center + r * math.sin(angle), center - r * math.cos(angle)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0f}" height="{size:.0f}" '
        f'viewBox="0 0 {size:.0f} {size:.0f}">',
        f"  <title>period-28 pattern for day {period.id} of the month</title>",
        f'  <circle cx="{center:.2f}" cy="{center:.2f}" r="{radius:.2f}" '
        'fill="none" stroke="#444444" stroke-width="1.5"/>',
        f'  <text x="{center:.2f}" y="{center:.2f}" text-anchor="middle" '
        'dominant-baseline="central" font-family="monospace" font-size="13" '
        f'fill="#444444">day {period.id}</text>',
    ]
    for index, value in enumerate(period.entries):
        x1, y1 = point(radius - 5, index)
        x2, y2 = point(radius + 5, index)
        parts.append(
            f'  <line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            'stroke="#444444" stroke-width="1"/>'
        )
        vx, vy = point(radius - 22, index)
        parts.append(
            f'  <text x="{vx:.2f}" y="{vy:.2f}" text-anchor="middle" '
            'dominant-baseline="central" font-family="monospace" font-size="15" '
            f'fill="#111111" data-role="value" data-index="{index}">{value}</text>'
        )
        if spec.annotate_indices:
            ix, iy = point(radius + 18, index)
            parts.append(
                f'  <text x="{ix:.2f}" y="{iy:.2f}" text-anchor="middle" '
                'dominant-baseline="central" font-family="monospace" font-size="10" '
                f'fill="#777777" data-role="index" data-index="{index}">{index}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_clock(args) -> tuple[str, int]:
    spec = ClockFigureSpec(
        period_id=args.period,
        radius=args.radius,
        annotate_indices=args.index_labels,
    )
    return render_clock(spec), EXIT_OK


def _add_format(parser):
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default="csv",
        help="output format (default: csv)",
    )


def _add_out(parser):
    parser.add_argument(
        "--out",
        metavar="PATH",
        default=None,
        help="write output to PATH instead of stdout",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gregcycle",
        description=(
            "Weekday statistics of the 400-year Gregorian cycle: occurrence "
            "tables, per-year multiplicity sequences, and their piecewise-cyclic "
            "encodings over four period-28 patterns."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser(
        "table1", help="occurrence totals of day-of-month classes per weekday"
    )
    _add_format(p)
    _add_out(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="weekday shift matrix relating day classes to day 1")
    _add_format(p)
    _add_out(p)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("table3", help="stored piece encodings for the 28 basic sequences")
    _add_format(p)
    _add_out(p)
    p.add_argument("--fixture", metavar="PATH", default=None, help="alternative encodings file")
    p.set_defaults(func=cmd_table3)

    p = sub.add_parser("seq", help="400-year multiplicity sequence for a day and weekday")
    p.add_argument("--day", type=int, required=True, help="day of the month, 1..31")
    p.add_argument("--weekday", type=int, required=True, help="weekday index, 0=Sunday .. 6=Saturday")
    _add_format(p)
    _add_out(p)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("encode", help="greedily encode a multiplicity sequence")
    p.add_argument("--day", type=int, required=True, help="day of the month, 1..31")
    p.add_argument("--weekday", type=int, required=True, help="weekday index, 0=Sunday .. 6=Saturday")
    _add_out(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="expand an encoding into its 400 entries")
    p.add_argument("--period", type=int, required=True, choices=PERIOD_IDS, help="period id")
    p.add_argument("encoding", metavar="ENCODING", help="(skip)length... text")
    p.add_argument(
        "--strict",
        action="store_true",
        help="reject the lenient trailing-parenthesis repair",
    )
    _add_out(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="run the self-check suites")
    p.add_argument("--suite", choices=verification.SUITE_NAMES, default=None, help="run one suite only")
    p.add_argument("--fixture", metavar="PATH", default=None, help="alternative encodings file")
    _add_out(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("clock", help="SVG clock figure of one period-28 pattern")
    p.add_argument("--period", type=int, required=True, choices=PERIOD_IDS, help="period id")
    p.add_argument("--radius", type=float, default=140.0, help="circle radius in pixels")
    p.add_argument(
        "--no-index-labels",
        dest="index_labels",
        action="store_false",
        help="omit the index annotations outside the circle",
    )
    _add_out(p)
    p.set_defaults(func=cmd_clock)

    return parser


def _write_output(text: str, out_path: str | None):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except (ValueError, OSError) as exc:
        print(f"gregcycle: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write_output(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
