"""Multiplicity sequences and occurrence totals over one 400-year Gregorian cycle.

A multiplicity sequence records, for each of the 400 cycle years, how many
months put a given day of the month on a given weekday.  Days 1..28 fall
into seven conjugacy classes mod 7 that behave identically, so together
with the literal days 29, 30 and 31 only ten distinct rows of totals
exist.

Everything here is produced by brute-force month enumeration.  The piece
codec in `period28_codec` is validated against these sequences, never the
other way round.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .calendar_core import Weekday, _congruence_weekday, is_admissible

YEARS_PER_CYCLE = 400
DAY_CLASSES = (1, 2, 3, 4, 5, 6, 7, 29, 30, 31)


@dataclass(frozen=True)
class MultiplicitySequence:
    """Per-year counts of how often one day of the month falls on one weekday."""

    day: int
    weekday: Weekday
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


@lru_cache(maxsize=None)
def _weekday_counts(day: int) -> tuple[tuple[int, ...], ...]:
    """400 rows of 7 per-weekday counts for one day of the month (brute force)."""
    rows = []
    for year in range(YEARS_PER_CYCLE):
        row = [0] * 7
        for month in range(1, 13):
            if is_admissible(day, month, year):
                row[_congruence_weekday(day, month, year)] += 1
        rows.append(tuple(row))
    return tuple(rows)


def multiplicity_sequence(day: int, weekday: Weekday | int) -> MultiplicitySequence:
    """Count, year by year, the months where `day` falls on `weekday`.

    Direct enumeration over the twelve months of every cycle year; this is
    the ground-truth generator for all sequence data in the package.
    """
    if not 1 <= day <= 31:
        raise ValueError(f"day out of range 1..31: {day}")
    wd = Weekday(weekday)
    return MultiplicitySequence(day, wd, tuple(row[wd] for row in _weekday_counts(day)))


def reduce_day(day: int) -> int:
    """Class representative in 1..7 of a day in 1..28 (7 stands in for 0 mod 7)."""
    if not 1 <= day <= 28:
        raise ValueError(f"day out of range 1..28: {day}")
    return 7 if day % 7 == 0 else day % 7


def toeplitz_weekday(d_bar: int, weekday: Weekday | int) -> Weekday:
    """Weekday column under which class `d_bar` behaves like day 1.

    The sequence for (day class d_bar, weekday D) equals the sequence for
    (day 1, (D + 1 - d_bar) mod 7); the 7x7 matrix of these shifts is
    Toeplitz.
    """
    if not 1 <= d_bar <= 7:
        raise ValueError(f"reduced day out of range 1..7: {d_bar}")
    return Weekday((int(weekday) + 1 - d_bar) % 7)


def class_label(day_class: int) -> str:
    """Row label: the class representative plus its other members below 29."""
    if day_class not in DAY_CLASSES:
        raise ValueError(f"not a day class: {day_class}")
    if day_class <= 7:
        return f"{day_class} ({day_class + 7},{day_class + 14},{day_class + 21})"
    return str(day_class)


@dataclass(frozen=True)
class OccurrenceTable:
    """10 x 7 occurrence totals: day classes 1..7 then 29, 30, 31, by weekday."""

    rows: tuple[tuple[int, ...], ...]

    def row(self, day_class: int) -> tuple[int, ...]:
        return self.rows[DAY_CLASSES.index(day_class)]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(class_label(c) for c in DAY_CLASSES)


def occurrence_table() -> OccurrenceTable:
    """Total occurrences of each day class on each weekday across one cycle."""
    rows = []
    for day_class in DAY_CLASSES:
        counts = _weekday_counts(day_class)
        rows.append(tuple(sum(row[wd] for row in counts) for wd in range(7)))
    return OccurrenceTable(tuple(rows))
