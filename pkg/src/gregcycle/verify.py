"""Self-check suites: formula vs day-count oracle, table fidelity, codec round trips.

Each suite returns a SuiteResult; `run_suites` drives any subset.  The
expected table values are frozen literals here, so the checks compare the
brute-force generator against independently recorded numbers rather than
against itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .calendar_core import (
    _congruence_weekday,
    _oracle_weekday,
    days_in_month,
    is_leap,
)
from .cycle_stats import (
    DAY_CLASSES,
    YEARS_PER_CYCLE,
    multiplicity_sequence,
    occurrence_table,
    reduce_day,
    toeplitz_weekday,
)
from .period28_codec import (
    PERIOD_IDS,
    decode,
    encode,
    extract_period,
    load_table3_encodings,
    serialize_encoding,
    verify_table3,
)

# Reference occurrence totals, day classes 1..7 then 29, 30, 31 by weekday.
TABLE1_ROWS = {
    1: (688, 684, 687, 685, 685, 687, 684),
    2: (684, 688, 684, 687, 685, 685, 687),
    3: (687, 684, 688, 684, 687, 685, 685),
    4: (685, 687, 684, 688, 684, 687, 685),
    5: (685, 685, 687, 684, 688, 684, 687),
    6: (687, 685, 685, 687, 684, 688, 684),
    7: (684, 687, 685, 685, 687, 684, 688),
    29: (644, 641, 644, 642, 642, 643, 641),
    30: (627, 631, 626, 631, 627, 629, 629),
    31: (400, 399, 401, 398, 402, 399, 401),
}

# Weekday shift matrix rows for reduced days 1..7.
TABLE2_ROWS = (
    (0, 1, 2, 3, 4, 5, 6),
    (6, 0, 1, 2, 3, 4, 5),
    (5, 6, 0, 1, 2, 3, 4),
    (4, 5, 6, 0, 1, 2, 3),
    (3, 4, 5, 6, 0, 1, 2),
    (2, 3, 4, 5, 6, 0, 1),
    (1, 2, 3, 4, 5, 6, 0),
)

CYCLE_DAYS = 146_097
LEAP_YEARS_PER_CYCLE = 97
DAY_TOTALS = {29: 4497, 30: 4400, 31: 2800}


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str


def check_oracle() -> SuiteResult:
    """Congruence equals the day-count oracle on every date of two full cycles."""
    name = "oracle"
    if _congruence_weekday(15, 10, 1582) != 5 or _oracle_weekday(15, 10, 1582) != 5:
        return SuiteResult(name, False, "1582-10-15 is not Friday under both computations")
    checked = 0
    for year in range(2 * YEARS_PER_CYCLE):
        for month in range(1, 13):
            for day in range(1, days_in_month(month, year) + 1):
                if _congruence_weekday(day, month, year) != _oracle_weekday(day, month, year):
                    return SuiteResult(
                        name, False, f"mismatch at year={year} month={month} day={day}"
                    )
                checked += 1
    if checked != 2 * CYCLE_DAYS:
        return SuiteResult(name, False, f"swept {checked} days, expected {2 * CYCLE_DAYS}")
    return SuiteResult(
        name, True, f"{checked} dates agree (years 0..799); 1582-10-15 is Friday"
    )


def check_cycle() -> SuiteResult:
    """Leap-year count, total day count, and per-day occurrence totals."""
    name = "cycle"
    leap_years = sum(1 for year in range(YEARS_PER_CYCLE) if is_leap(year))
    if leap_years != LEAP_YEARS_PER_CYCLE:
        return SuiteResult(name, False, f"{leap_years} leap years, expected {LEAP_YEARS_PER_CYCLE}")
    total_days = sum(
        days_in_month(month, year)
        for year in range(YEARS_PER_CYCLE)
        for month in range(1, 13)
    )
    if total_days != CYCLE_DAYS:
        return SuiteResult(name, False, f"{total_days} days per cycle, expected {CYCLE_DAYS}")
    if total_days % 7 != 0:
        return SuiteResult(name, False, f"{total_days} days is not a whole number of weeks")
    for day, expected in DAY_TOTALS.items():
        total = sum(multiplicity_sequence(day, wd).total for wd in range(7))
        if total != expected:
            return SuiteResult(name, False, f"day {day} occurs {total} times, expected {expected}")
    return SuiteResult(
        name,
        True,
        f"{LEAP_YEARS_PER_CYCLE} leap years; {CYCLE_DAYS} days; "
        f"day totals 29={DAY_TOTALS[29]} 30={DAY_TOTALS[30]} 31={DAY_TOTALS[31]}",
    )


def check_table1() -> SuiteResult:
    """All 70 occurrence cells match the reference totals, with Toeplitz structure."""
    name = "table1"
    table = occurrence_table()
    for day_class in DAY_CLASSES:
        if table.row(day_class) != TABLE1_ROWS[day_class]:
            return SuiteResult(
                name,
                False,
                f"row {day_class} is {table.row(day_class)}, expected {TABLE1_ROWS[day_class]}",
            )
    block = table.rows[:7]
    for i in range(7):
        for j in range(7):
            if block[i][j] != block[0][(j - i) % 7]:
                return SuiteResult(name, False, f"block cell ({i},{j}) breaks the Toeplitz form")
            if block[i][j] != block[j][i]:
                return SuiteResult(name, False, f"block cell ({i},{j}) breaks symmetry")
            if i == j and block[i][j] != 688:
                return SuiteResult(name, False, f"diagonal cell ({i},{i}) is {block[i][j]}, not 688")
            if i != j and block[i][j] >= 688:
                return SuiteResult(name, False, f"off-diagonal cell ({i},{j}) reaches the maximum")
    return SuiteResult(name, True, "70 cells match; symmetric Toeplitz block with 688 diagonal")


def check_table2() -> SuiteResult:
    """The weekday shift matrix matches the reference 7x7 table."""
    name = "table2"
    for d_bar in range(1, 8):
        row = tuple(int(toeplitz_weekday(d_bar, wd)) for wd in range(7))
        if row != TABLE2_ROWS[d_bar - 1]:
            return SuiteResult(
                name, False, f"row {d_bar} is {row}, expected {TABLE2_ROWS[d_bar - 1]}"
            )
    return SuiteResult(name, True, "49 cells match")


def check_table3(fixture: str | Path | None = None) -> SuiteResult:
    """Every stored encoding decodes to the brute-force sequence."""
    name = "table3"
    report = verify_table3(fixture)
    if not report.all_ok:
        failures = "; ".join(cell.describe() for cell in report.failures)
        return SuiteResult(name, False, failures)
    return SuiteResult(name, True, f"{len(report.cells)}/28 encodings decode exactly")


def check_reduction() -> SuiteResult:
    """Every day 1..28 reduces to the day-1 sequence under the weekday shift."""
    name = "reduction"
    comparisons = 0
    for day in range(1, 29):
        d_bar = reduce_day(day)
        for weekday in range(7):
            shifted = toeplitz_weekday(d_bar, weekday)
            if multiplicity_sequence(day, weekday).counts != multiplicity_sequence(1, shifted).counts:
                return SuiteResult(name, False, f"day {day}, weekday {weekday} breaks the identity")
            comparisons += YEARS_PER_CYCLE
    return SuiteResult(name, True, f"{comparisons} yearly counts compared")


def check_roundtrip(fixture: str | Path | None = None) -> SuiteResult:
    """Greedy encode then decode reproduces all 28 basic sequences.

    Divergence between the greedy encoder's text and the stored encoding is
    reported in the detail but is not a failure; only decode fidelity is
    load-bearing.
    """
    name = "roundtrip"
    stored = load_table3_encodings(fixture)
    divergences = []
    for day_class in PERIOD_IDS:
        period = extract_period(day_class)
        for weekday in range(7):
            target = multiplicity_sequence(day_class, weekday).counts
            encoding = encode(period, target)
            if decode(period, encoding) != target:
                return SuiteResult(
                    name, False, f"round trip failed for day {day_class}, weekday {weekday}"
                )
            text = serialize_encoding(encoding)
            if stored.get((day_class, weekday)) != text:
                divergences.append(f"(day {day_class}, weekday {weekday}): greedy {text}")
    if divergences:
        detail = (
            "28/28 round trips exact; greedy diverges from stored encodings in "
            f"{len(divergences)} cells (not a failure): " + "; ".join(divergences)
        )
    else:
        detail = "28/28 round trips exact; greedy reproduces every stored encoding"
    return SuiteResult(name, True, detail)


def check_periodicity() -> SuiteResult:
    """Weekdays repeat exactly after 400 years, for every admissible date."""
    name = "periodicity"
    checked = 0
    for year in range(YEARS_PER_CYCLE):
        for month in range(1, 13):
            for day in range(1, days_in_month(month, year) + 1):
                if _congruence_weekday(day, month, year) != _congruence_weekday(
                    day, month, year + YEARS_PER_CYCLE
                ):
                    return SuiteResult(
                        name, False, f"year={year} month={month} day={day} shifts after 400 years"
                    )
                checked += 1
    if checked != CYCLE_DAYS:
        return SuiteResult(name, False, f"swept {checked} days, expected {CYCLE_DAYS}")
    return SuiteResult(name, True, f"{checked} dates repeat after 400 years")


SUITES = {
    "oracle": check_oracle,
    "cycle": check_cycle,
    "table1": check_table1,
    "table2": check_table2,
    "table3": check_table3,
    "reduction": check_reduction,
    "roundtrip": check_roundtrip,
    "periodicity": check_periodicity,
}

SUITE_NAMES = tuple(SUITES)


def run_suites(
    names: list[str] | tuple[str, ...] | None = None,
    fixture: str | Path | None = None,
) -> list[SuiteResult]:
    """Run the named suites (all by default) and collect their results."""
    selected = SUITE_NAMES if names is None else tuple(names)
    results = []
    for name in selected:
        if name not in SUITES:
            raise ValueError(f"unknown suite: {name}")
        if name in ("table3", "roundtrip"):
            results.append(SUITES[name](fixture))
        else:
            results.append(SUITES[name]())
    return results
