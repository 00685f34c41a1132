"""Orbit tracing, convergence/escape classification and table display.

Tables follow the display convention of the published reference data:
row k (1-based, row 1 = seed) shows |Re z_{k-1}| rounded half-away-from-
zero at a fixed number of decimals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Context, Decimal
from typing import NamedTuple, Optional, Union

from .core import IterationParams, ji_step, modulus

__all__ = [
    "Converged",
    "Escaped",
    "Exhausted",
    "OrbitRecord",
    "OrbitTrace",
    "convergence_index",
    "format_fixed",
    "orbit_table",
    "trace_orbit",
]

DEFAULT_MAX_ITER = 1000
# Tight enough that the displayed value has stabilised at five decimals
# even for contraction factors close to 1 (the slow alpha = beta = 0.1
# orbit contracts by only ~8% per step).
DEFAULT_CONV_TOL = 1e-9
_CONV_STREAK = 3

# float64 magnitudes reach ~1.8e308; quantizing them to fixed decimals
# needs generous working precision
_CTX = Context(prec=400)


class OrbitRecord(NamedTuple):
    k: int
    z: complex
    abs: float
    abs_re: float


@dataclass(frozen=True, slots=True)
class Converged:
    at_k: int
    limit: complex


@dataclass(frozen=True, slots=True)
class Escaped:
    at_k: int


@dataclass(frozen=True, slots=True)
class Exhausted:
    pass


Outcome = Union[Converged, Escaped, Exhausted]


@dataclass(frozen=True, slots=True)
class OrbitTrace:
    params: IterationParams
    z0: complex
    records: tuple[OrbitRecord, ...]
    outcome: Outcome


def _record(k: int, z: complex) -> OrbitRecord:
    return OrbitRecord(k=k, z=z, abs=modulus(z), abs_re=abs(z.real))


def trace_orbit(
    z0: complex,
    p: IterationParams,
    max_iter: int = DEFAULT_MAX_ITER,
    conv_tol: float = DEFAULT_CONV_TOL,
    escape_radius: Optional[float] = None,
) -> OrbitTrace:
    """Iterate ji_step from z0 and classify the orbit.

    Stops at the first of: convergence (successive step below conv_tol,
    sustained for three consecutive steps), escape (|z| above
    escape_radius, or a non-finite iterate), or the max_iter budget.
    escape_radius defaults to default_escape_radius(p).
    """
    z0 = complex(z0)
    if not (math.isfinite(z0.real) and math.isfinite(z0.imag)):
        raise ValueError(f"seed must be finite, got {z0}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")
    if conv_tol <= 0.0:
        raise ValueError(f"conv_tol must be positive, got {conv_tol}")
    if escape_radius is None:
        from .render import default_escape_radius

        escape_radius = default_escape_radius(p)
    if escape_radius <= 0.0:
        raise ValueError(f"escape_radius must be positive, got {escape_radius}")

    records = [_record(0, z0)]
    if records[0].abs > escape_radius:
        return OrbitTrace(p, z0, tuple(records), Escaped(at_k=0))

    streak = 0
    z = z0
    for k in range(1, max_iter + 1):
        z_prev = z
        z = ji_step(z_prev, p)
        rec = _record(k, z)
        records.append(rec)
        if not math.isfinite(rec.abs) or rec.abs > escape_radius:
            return OrbitTrace(p, z0, tuple(records), Escaped(at_k=k))
        if modulus(z - z_prev) < conv_tol:
            streak += 1
            if streak >= _CONV_STREAK:
                outcome = Converged(at_k=k - _CONV_STREAK + 1, limit=z)
                return OrbitTrace(p, z0, tuple(records), outcome)
        else:
            streak = 0

    return OrbitTrace(p, z0, tuple(records), Exhausted())


def format_fixed(value: float, decimals: int) -> str:
    """Fixed-point decimal string, rounding halves away from zero."""
    if decimals < 0:
        raise ValueError(f"decimals must be >= 0, got {decimals}")
    if not math.isfinite(value):
        return repr(value)
    if value == 0.0:
        value = 0.0  # normalises -0.0
    quantum = Decimal(1).scaleb(-decimals)
    return str(Decimal(value).quantize(quantum, rounding=ROUND_HALF_UP, context=_CTX))


def orbit_table(trace: OrbitTrace, decimals: int) -> list[tuple[int, str]]:
    """(row, display) pairs; row 1 shows the seed's |Re| at `decimals` places."""
    if not trace.records:
        raise ValueError("trace has no records")
    return [
        (row, format_fixed(rec.abs_re, decimals))
        for row, rec in enumerate(trace.records, start=1)
    ]


def convergence_index(trace: OrbitTrace, decimals: int) -> Optional[int]:
    """Smallest 1-based row whose display equals the limit's display, with
    every later row equal; None for non-converged traces."""
    if not isinstance(trace.outcome, Converged):
        return None
    limit_display = format_fixed(abs(trace.outcome.limit.real), decimals)
    index: Optional[int] = None
    for row, display in orbit_table(trace, decimals):
        if display == limit_display:
            if index is None:
                index = row
        else:
            index = None
    return index
