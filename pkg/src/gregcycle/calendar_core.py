"""Exact Gregorian calendar arithmetic.

Two independent weekday computations live here: the closed-form weekday
congruence (`day_of_week`) and a day-count cross-check
(`oracle_day_of_week`) that counts elapsed days from the anchor
1582-10-15, a Friday.  The two share no arithmetic, so agreement between
them is meaningful evidence of correctness.

Everything is plain integer arithmetic; no floating point enters any
weekday computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

WEEKDAY_SHORT_NAMES = ("Su", "Mo", "Tu", "We", "Th", "Fr", "Sa")


class Weekday(IntEnum):
    """Day of the week, Sunday-based: 0=Sunday .. 6=Saturday."""

    SUNDAY = 0
    MONDAY = 1
    TUESDAY = 2
    WEDNESDAY = 3
    THURSDAY = 4
    FRIDAY = 5
    SATURDAY = 6

    @classmethod
    def from_name(cls, name: str) -> "Weekday":
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown weekday name: {name!r}") from None

    @property
    def short_name(self) -> str:
        return WEEKDAY_SHORT_NAMES[self.value]


_MONTH_LENGTHS = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)
# Days preceding the first of each month in a common year.
_DAYS_BEFORE_MONTH = (0, 31, 59, 90, 120, 151, 181, 212, 243, 273, 304, 334)


def is_leap(year: int) -> bool:
    """True for Gregorian leap years.  Year 0 is divisible by 400, hence leap."""
    if year < 0:
        raise ValueError(f"year must be >= 0, got {year}")
    return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)


def month_key(month: int) -> int:
    """Shifted month number used by the weekday congruence.

    March..December map to 1..10; January maps to 11 and February to 12,
    so the two months before the leap day get the largest keys.
    """
    if not 1 <= month <= 12:
        raise ValueError(f"month out of range 1..12: {month}")
    return 12 if month == 2 else (month + 10) % 12


def days_in_month(month: int, year: int) -> int:
    if not 1 <= month <= 12:
        raise ValueError(f"month out of range 1..12: {month}")
    if month == 2:
        return 28 + is_leap(year)
    return _MONTH_LENGTHS[month - 1]


def is_admissible(day: int, month: int, year: int) -> bool:
    """True iff (day, month, year) names a real proleptic Gregorian date.

    Rejects the nonsense combinations: day 29 of February in common years,
    day 30 of February, and day 31 of the 30-day months.
    """
    if year < 0 or not 1 <= month <= 12 or not 1 <= day <= 31:
        return False
    return day <= days_in_month(month, year)


@dataclass(frozen=True)
class CalendarDate:
    """An admissible Gregorian date; construction rejects nonsense days."""

    year: int
    month: int
    day: int

    def __post_init__(self):
        if not is_admissible(self.day, self.month, self.year):
            raise ValueError(
                f"inadmissible date: year={self.year} month={self.month} day={self.day}"
            )


@dataclass(frozen=True)
class YearParts:
    """Digit split of a year: year == 100 * hundreds + tens."""

    hundreds: int
    tens: int
    leap: int

    @property
    def year(self) -> int:
        return 100 * self.hundreds + self.tens


def year_parts(year: int) -> YearParts:
    """Split a year into its century part, its last two digits, and the leap flag."""
    if year < 0:
        raise ValueError(f"year must be >= 0, got {year}")
    return YearParts(year // 100, year % 100, 1 if is_leap(year) else 0)


def _congruence_weekday(day: int, month: int, year: int) -> int:
    # The classic floor term 2.6*key - 0.2 equals (13*key - 1)/5 exactly,
    # so integer division keeps the whole computation bit-exact.
    key = month_key(month)
    parts = year_parts(year)
    value = (
        day
        + (13 * key - 1) // 5
        + parts.tens
        + parts.tens // 4
        + parts.hundreds // 4
        - 2 * parts.hundreds
        - (parts.leap + 1) * (key // 11)
    )
    return value % 7


def day_of_week(date: CalendarDate) -> Weekday:
    """Weekday of an admissible date via the closed-form congruence.

    The congruence is 400-year periodic: the result for year y equals the
    result for year y + 400.
    """
    return Weekday(_congruence_weekday(date.day, date.month, date.year))


_ANCHOR_WEEKDAY = 5  # 1582-10-15 was a Friday.


def _leap_years_before(year: int) -> int:
    """Number of leap years in 0..year-1 (year 0 itself counts)."""
    if year <= 0:
        return 0
    prior = year - 1
    return prior // 4 - prior // 100 + prior // 400 + 1


def _day_number(day: int, month: int, year: int) -> int:
    """Days elapsed since 0000-01-01 (day number 0), proleptic Gregorian."""
    past_feb29 = 1 if month > 2 and _leap_years_before(year + 1) > _leap_years_before(year) else 0
    return (
        365 * year
        + _leap_years_before(year)
        + _DAYS_BEFORE_MONTH[month - 1]
        + past_feb29
        + day
        - 1
    )


_ANCHOR_DAY_NUMBER = _day_number(15, 10, 1582)


def _oracle_weekday(day: int, month: int, year: int) -> int:
    return (_day_number(day, month, year) - _ANCHOR_DAY_NUMBER + _ANCHOR_WEEKDAY) % 7


def oracle_day_of_week(date: CalendarDate) -> Weekday:
    """Weekday by signed day counting from the 1582-10-15 Friday anchor.

    Deliberately shares nothing with `day_of_week`: no month key, no digit
    split, no leap flag; only cumulative month lengths and leap-year
    counts.  Dates before the anchor work through negative differences.
    """
    return Weekday(_oracle_weekday(date.day, date.month, date.year))
