"""Deterministic serialisation: binary PPM rasters and orbit CSV tables.

The byte formats here are normative for the golden tests, so the exact
formulas (grayscale ramp, banded palette, header layout) must not drift.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .orbits import Converged, Escaped, Exhausted, OrbitTrace, format_fixed
from .render import EscapeField

__all__ = [
    "BANDED_PALETTE",
    "ColorScheme",
    "RgbRaster",
    "colorize",
    "write_orbit_csv",
    "write_ppm",
]

ColorScheme = Literal["grayscale", "banded"]

# Fixed 8-entry cycle for the banded scheme, indexed by count mod 8.
BANDED_PALETTE: tuple[tuple[int, int, int], ...] = (
    (25, 7, 26),
    (9, 1, 47),
    (4, 4, 73),
    (0, 7, 100),
    (12, 44, 138),
    (24, 82, 177),
    (57, 125, 209),
    (134, 181, 229),
)


@dataclass(frozen=True, slots=True)
class RgbRaster:
    """Row-major 8-bit RGB triples."""

    width_px: int
    height_px: int
    pixels: bytes

    def __post_init__(self) -> None:
        if self.width_px < 1 or self.height_px < 1:
            raise ValueError(
                f"raster dimensions must be positive, got "
                f"{self.width_px}x{self.height_px}"
            )
        expected = 3 * self.width_px * self.height_px
        if len(self.pixels) != expected:
            raise ValueError(
                f"pixel buffer holds {len(self.pixels)} bytes, expected {expected}"
            )


def colorize(field: EscapeField, scheme: ColorScheme = "grayscale") -> RgbRaster:
    """Map escape counts to RGB.

    Interior pixels (count == max_iter) are black in both schemes.
    Grayscale: v = floor(255 * count / max_iter) in all three channels.
    Banded: BANDED_PALETTE[count mod 8].
    """
    counts = field.counts.astype(np.int64)
    interior = counts == field.max_iter
    if scheme == "grayscale":
        v = (255 * counts) // field.max_iter
        v[interior] = 0
        rgb = np.repeat(v.astype(np.uint8)[:, :, np.newaxis], 3, axis=2)
    elif scheme == "banded":
        palette = np.array(BANDED_PALETTE, dtype=np.uint8)
        rgb = palette[counts % 8]
        rgb[interior] = (0, 0, 0)
    else:
        raise ValueError(f"unknown scheme {scheme!r}")
    return RgbRaster(
        width_px=field.width_px,
        height_px=field.height_px,
        pixels=rgb.tobytes(),
    )


def write_ppm(raster: RgbRaster) -> bytes:
    """Binary PPM: ASCII header 'P6\\n{w} {h}\\n255\\n' then raw RGB bytes."""
    header = f"P6\n{raster.width_px} {raster.height_px}\n255\n".encode("ascii")
    return header + raster.pixels


def _outcome_comment(trace: OrbitTrace) -> str:
    outcome = trace.outcome
    if isinstance(outcome, Converged):
        text = f"# outcome: converged at_k={outcome.at_k}"
    elif isinstance(outcome, Escaped):
        text = f"# outcome: escaped at_k={outcome.at_k}"
    elif isinstance(outcome, Exhausted):
        text = "# outcome: exhausted"
    else:
        raise TypeError(f"unknown outcome {outcome!r}")
    if trace.params.single_stage_reduction:
        text += "; beta=0 single-stage reduction"
    return text


def write_orbit_csv(trace: OrbitTrace, decimals: int) -> str:
    """CSV text: header, one fixed-point line per record, outcome comment."""
    if not trace.records:
        raise ValueError("trace has no records")
    lines = ["k,re,im,abs,abs_re"]
    for rec in trace.records:
        lines.append(
            f"{rec.k},{format_fixed(rec.z.real, decimals)},"
            f"{format_fixed(rec.z.imag, decimals)},"
            f"{format_fixed(rec.abs, decimals)},"
            f"{format_fixed(rec.abs_re, decimals)}"
        )
    lines.append(_outcome_comment(trace))
    return "\n".join(lines) + "\n"
