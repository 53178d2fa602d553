"""Codec for length-400 multiplicity sequences as cyclic pieces of period-28 patterns.

Each of the 28 basic multiplicity sequences (day classes 1, 29, 30, 31 by
the seven weekdays) can be assembled from contiguous cyclic reads of a
single period-28 pattern.  An encoding is written `(skip)length(skip)length...`:

* the first skip is an absolute start index into the pattern (0..27);
* every later skip counts forward steps from the last emitted index;
* each segment emits `length` entries, reading the pattern cyclically;
* the segment lengths sum to exactly 400.

The stored encodings for all 28 cells live in `data/table3_encodings.txt`
and are checked against the brute-force sequences by `verify_table3`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .calendar_core import Weekday
from .cycle_stats import multiplicity_sequence

PERIOD = 28
SEQUENCE_LENGTH = 400
PERIOD_IDS = (1, 29, 30, 31)

_FIXTURE_NAME = "table3_encodings.txt"


class EncodingError(ValueError):
    """Invalid piece encoding: bad skip, bad length, or wrong total."""


class EncodingSyntaxError(EncodingError):
    """Malformed encoding text; `position` is the offending character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class PeriodSequence:
    """One of the four period-28 patterns, keyed by the day of the month."""

    id: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.id not in PERIOD_IDS:
            raise ValueError(f"period id must be one of {PERIOD_IDS}, got {self.id}")
        entries = tuple(int(v) for v in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != PERIOD:
            raise ValueError(f"period sequence needs {PERIOD} entries, got {len(entries)}")
        if any(v < 0 for v in entries):
            raise ValueError("period entries must be nonnegative")


@dataclass(frozen=True)
class PieceEncoding:
    """Ordered (skip, length) segments whose lengths sum to 400."""

    segments: tuple[tuple[int, int], ...]

    def __post_init__(self):
        segments = tuple((int(skip), int(length)) for skip, length in self.segments)
        object.__setattr__(self, "segments", segments)
        if not segments:
            raise EncodingError("encoding needs at least one segment")
        for skip, length in segments:
            if not 0 <= skip < PERIOD:
                raise EncodingError(f"skip {skip} out of range 0..{PERIOD - 1}")
            if length < 1:
                raise EncodingError(f"segment length {length} must be >= 1")
        total = sum(length for _, length in segments)
        if total != SEQUENCE_LENGTH:
            raise EncodingError(
                f"segment lengths sum to {total}, expected {SEQUENCE_LENGTH}"
            )

    @property
    def start(self) -> int:
        """Absolute start index of the first segment."""
        return self.segments[0][0]


def period_for_day(day: int) -> int:
    """Period id whose pattern underlies the sequences for this day of the month."""
    if not 1 <= day <= 31:
        raise ValueError(f"day out of range 1..31: {day}")
    return day if day >= 29 else 1


@lru_cache(maxsize=None)
def extract_period(period_id: int) -> PeriodSequence:
    """The generating pattern: first 28 Sunday counts of the day's sequence."""
    if period_id not in PERIOD_IDS:
        raise ValueError(f"period id must be one of {PERIOD_IDS}, got {period_id}")
    counts = multiplicity_sequence(period_id, Weekday.SUNDAY).counts
    return PeriodSequence(period_id, counts[:PERIOD])


def parse_encoding(text: str, strict: bool = False) -> PieceEncoding:
    """Parse `(skip)length(skip)length...` text into a PieceEncoding.

    Whitespace between tokens is ignored.  In lenient mode (the default) a
    trailing parenthesized number is accepted as the final length when the
    sum-to-400 constraint makes that reading unambiguous; strict mode
    rejects it as a syntax error.
    """
    pos = 0
    n = len(text)

    def skip_whitespace():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_int(what: str) -> int:
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise EncodingSyntaxError(f"expected {what}", start)
        return int(text[start:pos])

    def read_parenthesized(what: str) -> int:
        nonlocal pos
        if pos >= n or text[pos] != "(":
            raise EncodingSyntaxError(f"expected '(' before {what}", pos)
        pos += 1
        skip_whitespace()
        value = read_int(what)
        skip_whitespace()
        if pos >= n or text[pos] != ")":
            raise EncodingSyntaxError(f"expected ')' after {what}", pos)
        pos += 1
        return value

    segments = []
    skip_whitespace()
    if pos == n:
        raise EncodingSyntaxError("empty encoding", pos)
    while pos < n:
        skip = read_parenthesized("skip")
        skip_whitespace()
        if pos >= n:
            raise EncodingSyntaxError("dangling skip without a length", pos)
        if text[pos].isdigit():
            length = read_int("length")
        elif text[pos] == "(" and not strict:
            # Lenient repair: a parenthesized trailing number may stand in
            # for the final length if it completes the 400-entry sum.
            paren_pos = pos
            value = read_parenthesized("length")
            skip_whitespace()
            remainder = SEQUENCE_LENGTH - sum(ln for _, ln in segments)
            if pos != n or value != remainder:
                raise EncodingSyntaxError(
                    f"expected a bare length; parenthesized {value} cannot be "
                    f"repaired into a final length of {remainder}",
                    paren_pos,
                )
            length = value
        else:
            raise EncodingSyntaxError("expected a length after the skip", pos)
        segments.append((skip, length))
        skip_whitespace()
    return PieceEncoding(tuple(segments))


def serialize_encoding(encoding: PieceEncoding) -> str:
    """Canonical `(skip)length...` text; inverse of `parse_encoding`."""
    return "".join(f"({skip}){length}" for skip, length in encoding.segments)


def decode(period: PeriodSequence, encoding: PieceEncoding) -> tuple[int, ...]:
    """Expand an encoding into its 400 entries by cyclic reads of the pattern."""
    entries = period.entries
    out = []
    pos = 0
    for index, (skip, length) in enumerate(encoding.segments):
        pos = skip if index == 0 else (pos + skip) % PERIOD
        for offset in range(length):
            out.append(entries[(pos + offset) % PERIOD])
        pos = (pos + length - 1) % PERIOD
    return tuple(out)


def encode(period: PeriodSequence, target) -> PieceEncoding:
    """Greedily segment `target` into cyclic reads of the period pattern.

    At each position the start index with the longest cyclic match run is
    chosen; ties go to the smallest skip (smallest absolute index for the
    first segment).  Decoding the result always reproduces `target`.
    """
    target = tuple(int(v) for v in target)
    if len(target) != SEQUENCE_LENGTH:
        raise ValueError(f"target must have {SEQUENCE_LENGTH} entries, got {len(target)}")
    entries = period.entries
    alphabet = set(entries)
    for position, value in enumerate(target):
        if value not in alphabet:
            raise ValueError(
                f"value {value} at position {position} never occurs in the "
                f"period-{PERIOD} pattern for day {period.id}"
            )

    segments = []
    t = 0
    prev_end = None
    while t < SEQUENCE_LENGTH:
        best_skip = -1
        best_start = -1
        best_run = 0
        for skip in range(PERIOD):
            start = skip if prev_end is None else (prev_end + skip) % PERIOD
            run = 0
            while t + run < SEQUENCE_LENGTH and entries[(start + run) % PERIOD] == target[t + run]:
                run += 1
            if run > best_run:
                best_skip, best_start, best_run = skip, start, run
        segments.append((best_skip, best_run))
        prev_end = (best_start + best_run - 1) % PERIOD
        t += best_run
    return PieceEncoding(tuple(segments))


def continuation_step(encoding: PieceEncoding) -> int:
    """Forward steps (1..28) from the final emitted index back to the start.

    The encodings are cyclically closed: stepping this far past the last
    emitted entry lands on the first segment's start index, so the decoded
    400 entries repeat seamlessly.
    """
    pos = 0
    for index, (skip, length) in enumerate(encoding.segments):
        pos = skip if index == 0 else (pos + skip) % PERIOD
        pos = (pos + length - 1) % PERIOD
    return (encoding.start - pos - 1) % PERIOD + 1


def _fixture_path() -> Path:
    return Path(str(resources.files(__package__).joinpath("data", _FIXTURE_NAME)))


def load_table3_encodings(path: str | Path | None = None) -> dict[tuple[int, int], str]:
    """Load the stored encodings: {(day_class, weekday_index): encoding string}.

    The file holds one cell per line, `<day_class> <weekday_index>
    <encoding>`, with `#` comments and blank lines allowed.
    """
    source = Path(path) if path is not None else _fixture_path()
    encodings: dict[tuple[int, int], str] = {}
    for lineno, raw in enumerate(source.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ValueError(f"{source}:{lineno}: expected 3 fields, got {len(fields)}")
        day_class, weekday, encoding = int(fields[0]), int(fields[1]), fields[2]
        if day_class not in PERIOD_IDS:
            raise ValueError(f"{source}:{lineno}: day class must be one of {PERIOD_IDS}")
        if not 0 <= weekday <= 6:
            raise ValueError(f"{source}:{lineno}: weekday index out of range 0..6")
        key = (day_class, weekday)
        if key in encodings:
            raise ValueError(f"{source}:{lineno}: duplicate cell {key}")
        encodings[key] = encoding
    return encodings


@dataclass(frozen=True)
class CellResult:
    """Outcome of checking one stored encoding against brute force."""

    day_class: int
    weekday: Weekday
    encoding: str | None
    ok: bool
    first_mismatch: int | None = None
    error: str | None = None

    def describe(self) -> str:
        label = f"cell (day {self.day_class}, weekday {int(self.weekday)})"
        if self.ok:
            return f"{label}: ok"
        if self.error is not None:
            return f"{label}: {self.error}"
        return f"{label}: first mismatch at index {self.first_mismatch}"


@dataclass(frozen=True)
class Table3Report:
    """Per-cell results for all 28 stored encodings."""

    cells: tuple[CellResult, ...]

    @property
    def all_ok(self) -> bool:
        return all(cell.ok for cell in self.cells)

    @property
    def failures(self) -> tuple[CellResult, ...]:
        return tuple(cell for cell in self.cells if not cell.ok)


def verify_table3(path: str | Path | None = None) -> Table3Report:
    """Decode every stored encoding and compare with the brute-force sequence."""
    encodings = load_table3_encodings(path)
    cells = []
    for day_class in PERIOD_IDS:
        period = extract_period(day_class)
        for weekday in range(7):
            text = encodings.get((day_class, weekday))
            if text is None:
                cells.append(
                    CellResult(day_class, Weekday(weekday), None, False, error="missing entry")
                )
                continue
            try:
                decoded = decode(period, parse_encoding(text))
            except EncodingError as exc:
                cells.append(
                    CellResult(day_class, Weekday(weekday), text, False, error=str(exc))
                )
                continue
            expected = multiplicity_sequence(day_class, weekday).counts
            mismatch = next(
                (i for i, (got, want) in enumerate(zip(decoded, expected)) if got != want),
                None,
            )
            cells.append(
                CellResult(day_class, Weekday(weekday), text, mismatch is None, mismatch)
            )
    return Table3Report(tuple(cells))
