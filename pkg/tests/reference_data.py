"""Published reference orbit tables for z^n - z + c at c = 0.1.

Each table lists the printed per-row displays (1-based rows, row 1 = the
seed) together with the iteration count stated alongside it.  The
printed values carry occasional last-place slop (the source mixed
truncation and rounding across rows), so row comparisons allow one unit
in the last displayed place.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ReferenceTable:
    name: str
    z0: complex
    n: int
    alpha: float
    beta: float
    decimals: int
    stated_count: int
    limit_display: str
    rows: dict[int, str]


QUAD_T1 = ReferenceTable(
    name="quadratic-1",
    z0=complex(-0.3124999945, 0.7942708667),
    n=2,
    alpha=0.5,
    beta=0.5,
    decimals=4,
    stated_count=21,
    limit_display="0.1127",
    rows={
        1: "0.3124", 2: "0.0478", 3: "0.0146", 4: "0.0546", 5: "0.0789",
        6: "0.0933", 7: "0.1016", 8: "0.1063", 9: "0.1090", 10: "0.1106",
        11: "0.1115", 12: "0.1120", 13: "0.1123", 14: "0.1124", 15: "0.1125",
        16: "0.1126", 17: "0.1126", 18: "0.1126", 19: "0.1126", 20: "0.1126",
        21: "0.1127", 22: "0.1127", 23: "0.1127", 24: "0.1127",
    },
)

QUAD_T2 = ReferenceTable(
    name="quadratic-2",
    z0=complex(0.275, -1.625),
    n=2,
    alpha=0.8,
    beta=0.4,
    decimals=4,
    stated_count=14,
    limit_display="0.1127",
    rows={
        1: "0.2750", 2: "0.7462", 3: "0.7270", 4: "0.4839", 5: "0.1549",
        6: "0.0799", 7: "0.0985", 8: "0.1078", 9: "0.1111", 10: "0.1121",
        11: "0.1125", 12: "0.1126", 13: "0.1126", 14: "0.1127", 15: "0.1127",
        16: "0.1127", 17: "0.1127", 18: "0.1127", 19: "0.1127", 20: "0.1127",
    },
)

QUAD_T3 = ReferenceTable(
    name="quadratic-3-slow",
    z0=complex(1.5, -7.6),
    n=2,
    alpha=0.1,
    beta=0.1,
    decimals=4,
    stated_count=146,
    limit_display="0.1127",
    rows={
        140: "0.1126", 141: "0.1126", 142: "0.1126", 143: "0.1126",
        144: "0.1126", 145: "0.1126", 146: "0.1127", 147: "0.1127",
        148: "0.1127", 149: "0.1127", 150: "0.1127", 151: "0.1127",
        152: "0.1127", 153: "0.1127",
    },
)

CUBE_T1 = ReferenceTable(
    name="cubic-1",
    z0=complex(0.09375, 0.2625),
    n=3,
    alpha=0.8,
    beta=0.8,
    decimals=4,
    stated_count=6,
    limit_display="0.1010",
    rows={
        1: "0.0937", 2: "0.0988", 3: "0.1005", 4: "0.1009", 5: "0.1010",
        6: "0.1010", 7: "0.1010", 8: "0.1010", 9: "0.1010", 10: "0.1010",
    },
)

CUBE_T2 = ReferenceTable(
    name="cubic-2",
    z0=complex(0.025, -1.3875),
    n=3,
    alpha=0.5,
    beta=0.5,
    decimals=4,
    stated_count=16,
    limit_display="0.1010",
    rows={
        1: "0.0250", 2: "0.0684", 3: "0.0838", 4: "0.0888", 5: "0.0934",
        6: "0.0967", 7: "0.0987", 8: "0.0998", 9: "0.1004", 10: "0.1007",
        11: "0.1008", 12: "0.1009", 13: "0.1009", 14: "0.1010", 15: "0.1010",
        16: "0.1010", 17: "0.1010", 18: "0.1010", 19: "0.1010", 20: "0.1010",
    },
)

CUBE_T3 = ReferenceTable(
    name="cubic-3",
    z0=complex(-1.10625, -0.39375),
    n=3,
    alpha=0.4,
    beta=0.6,
    decimals=5,
    stated_count=18,
    limit_display="0.10103",
    rows={
        1: "1.10625", 2: "0.13639", 3: "0.12193", 4: "0.11184", 5: "0.10620",
        6: "0.10355", 7: "0.10232", 8: "0.10172", 9: "0.10142", 10: "0.10125",
        11: "0.10116", 12: "0.10111", 13: "0.10108", 14: "0.10106",
        15: "0.10105", 16: "0.10104", 17: "0.10104", 18: "0.10103",
        19: "0.10103", 20: "0.10103",
    },
)

BIQ_T1 = ReferenceTable(
    name="biquadratic-1",
    z0=complex(-0.00625, 0.6625),
    n=4,
    alpha=0.8,
    beta=0.8,
    decimals=4,
    stated_count=8,
    limit_display="0.1001",
    rows={
        1: "0.0062", 2: "0.0764", 3: "0.0953", 4: "0.0991", 5: "0.0999",
        6: "0.1000", 7: "0.1000", 8: "0.1001", 9: "0.1001", 10: "0.1001",
    },
)

BIQ_T2 = ReferenceTable(
    name="biquadratic-2",
    z0=complex(-0.06875, 1.0875),
    n=4,
    alpha=0.5,
    beta=0.5,
    decimals=4,
    stated_count=19,
    limit_display="0.1001",
    rows={
        1: "0.0687", 2: "0.4891", 3: "0.2088", 4: "0.0544", 5: "0.0227",
        6: "0.0613", 7: "0.0807", 8: "0.0903", 9: "0.0952", 10: "0.0976",
        11: "0.0988", 12: "0.0994", 13: "0.0997", 14: "0.0999", 15: "0.1000",
        16: "0.1000", 17: "0.1000", 18: "0.1000", 19: "0.1001", 20: "0.1001",
    },
)

BIQ_T3 = ReferenceTable(
    name="biquadratic-3",
    z0=complex(-0.26875, 1.04375),
    n=4,
    alpha=0.4,
    beta=0.6,
    decimals=5,
    stated_count=21,
    limit_display="0.10010",
    rows={
        1: "0.26875", 2: "0.04699", 3: "0.06819", 4: "0.08093", 5: "0.08858",
        6: "0.09318", 7: "0.09594", 8: "0.09760", 9: "0.09860", 10: "0.09920",
        11: "0.09956", 12: "0.09978", 13: "0.09991", 14: "0.09998",
        15: "0.10003", 16: "0.10006", 17: "0.10007", 18: "0.10009",
        19: "0.10009", 20: "0.10009", 21: "0.10010", 22: "0.10010",
        23: "0.10010", 24: "0.10010",
    },
)

ALL_TABLES = (
    QUAD_T1, QUAD_T2, QUAD_T3,
    CUBE_T1, CUBE_T2, CUBE_T3,
    BIQ_T1, BIQ_T2, BIQ_T3,
)

CUBIC_TABLES = (CUBE_T1, CUBE_T2, CUBE_T3)
BIQUADRATIC_TABLES = (BIQ_T1, BIQ_T2, BIQ_T3)


def display_units(display: str, decimals: int) -> int:
    """Display string -> integer count of last-place units (exact)."""
    sign = -1 if display.startswith("-") else 1
    digits = display.lstrip("+-").replace(".", "")
    scale = len(display.split(".")[1]) if "." in display else 0
    return sign * int(digits) * 10 ** (decimals - scale)
