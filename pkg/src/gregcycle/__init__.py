"""Weekday statistics of the 400-year Gregorian cycle.

The package computes day-of-week facts for the proleptic Gregorian
calendar, builds the per-year multiplicity sequences that count how often
a day of the month falls on each weekday across one 400-year cycle, and
encodes/decodes those sequences as cyclic pieces of four period-28
patterns.
"""

from .calendar_core import (
    CalendarDate,
    Weekday,
    YearParts,
    day_of_week,
    days_in_month,
    is_admissible,
    is_leap,
    month_key,
    oracle_day_of_week,
    year_parts,
)
from .cycle_stats import (
    DAY_CLASSES,
    MultiplicitySequence,
    OccurrenceTable,
    YEARS_PER_CYCLE,
    class_label,
    multiplicity_sequence,
    occurrence_table,
    reduce_day,
    toeplitz_weekday,
)
from .period28_codec import (
    EncodingError,
    EncodingSyntaxError,
    PERIOD,
    PERIOD_IDS,
    PeriodSequence,
    PieceEncoding,
    SEQUENCE_LENGTH,
    Table3Report,
    continuation_step,
    decode,
    encode,
    extract_period,
    load_table3_encodings,
    parse_encoding,
    period_for_day,
    serialize_encoding,
    verify_table3,
)

__version__ = "0.1.0"

__all__ = [
    "CalendarDate",
    "DAY_CLASSES",
    "EncodingError",
    "EncodingSyntaxError",
    "MultiplicitySequence",
    "OccurrenceTable",
    "PERIOD",
    "PERIOD_IDS",
    "PeriodSequence",
    "PieceEncoding",
    "SEQUENCE_LENGTH",
    "Table3Report",
    "Weekday",
    "YEARS_PER_CYCLE",
    "YearParts",
    "class_label",
    "continuation_step",
    "day_of_week",
    "days_in_month",
    "decode",
    "encode",
    "extract_period",
    "is_admissible",
    "is_leap",
    "load_table3_encodings",
    "month_key",
    "multiplicity_sequence",
    "occurrence_table",
    "oracle_day_of_week",
    "parse_encoding",
    "period_for_day",
    "reduce_day",
    "serialize_encoding",
    "toeplitz_weekday",
    "verify_table3",
    "year_parts",
]
