"""Escape-time rendering of the bounded-orbit sets.

Mandelbrot mode varies c per pixel from a fixed seed; Julia mode varies
the seed per pixel for a fixed c.  Interior means the orbit stayed
within the escape radius for the whole iteration budget.

Pixel computations are independent and pure, so the grid is split into
row bands across worker threads; a compiled kernel (which releases the
GIL) mirrors the scalar recurrence operation for operation, making the
output identical for any worker count.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np
from numba import njit

from .core import IterationParams, ji_step, modulus

__all__ = [
    "DEFAULT_PIXEL_CAP",
    "EscapeField",
    "RenderSpec",
    "Viewport",
    "default_escape_radius",
    "escape_iterations",
    "pixel_to_point",
    "render",
    "symmetry_mismatch",
]

DEFAULT_PIXEL_CAP = 16_000_000
THREADS_ENV_VAR = "JF_THREADS"

RenderMode = Literal["mandelbrot", "julia"]
Symmetry = Literal["conjugation", "point", "identity"]


@dataclass(frozen=True, slots=True)
class Viewport:
    """Axis-aligned window of the complex plane mapped onto a pixel grid."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    width_px: int
    height_px: int

    def __post_init__(self) -> None:
        for name in ("re_min", "re_max", "im_min", "im_max"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if not self.re_min < self.re_max:
            raise ValueError(f"re_min must be < re_max, got [{self.re_min}, {self.re_max}]")
        if not self.im_min < self.im_max:
            raise ValueError(f"im_min must be < im_max, got [{self.im_min}, {self.im_max}]")
        if self.width_px < 1 or self.height_px < 1:
            raise ValueError(
                f"pixel dimensions must be positive, got {self.width_px}x{self.height_px}"
            )


def pixel_to_point(v: Viewport, i: int, j: int) -> complex:
    """Centre of pixel (column i, row j); row 0 is the top of the window."""
    if not 0 <= i < v.width_px:
        raise ValueError(f"column index {i} outside [0, {v.width_px})")
    if not 0 <= j < v.height_px:
        raise ValueError(f"row index {j} outside [0, {v.height_px})")
    re_step = (v.re_max - v.re_min) / v.width_px
    im_step = (v.im_max - v.im_min) / v.height_px
    return complex(v.re_min + (i + 0.5) * re_step, v.im_max - (j + 0.5) * im_step)


@dataclass(frozen=True, slots=True)
class RenderSpec:
    """Everything needed to render one escape-time field.

    fixed_point_param is the orbit seed in Mandelbrot mode (default 0)
    and the constant c in Julia mode.  escape_radius=None selects the
    per-pixel default radius.
    """

    mode: RenderMode
    n: int
    alpha: float
    beta: float
    viewport: Viewport
    max_iter: int
    fixed_point_param: complex = 0j
    escape_radius: Optional[float] = None

    def __post_init__(self) -> None:
        if self.mode not in ("mandelbrot", "julia"):
            raise ValueError(f"mode must be 'mandelbrot' or 'julia', got {self.mode!r}")
        # reuse the coefficient bounds of IterationParams
        IterationParams(self.n, self.alpha, self.beta, 0j)
        param = complex(self.fixed_point_param)
        if not (math.isfinite(param.real) and math.isfinite(param.imag)):
            raise ValueError(f"fixed_point_param must be finite, got {param}")
        object.__setattr__(self, "fixed_point_param", param)
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")
        if self.escape_radius is not None and not self.escape_radius > 0.0:
            raise ValueError(f"escape_radius must be positive, got {self.escape_radius}")

    def params_for(self, c: complex) -> IterationParams:
        return IterationParams(self.n, self.alpha, self.beta, c)


@dataclass(frozen=True, eq=False)
class EscapeField:
    """Per-pixel escape counts; count == max_iter marks interior pixels."""

    width_px: int
    height_px: int
    counts: np.ndarray
    max_iter: int
    viewport: Viewport

    def __post_init__(self) -> None:
        if self.counts.shape != (self.height_px, self.width_px):
            raise ValueError(
                f"counts shape {self.counts.shape} does not match "
                f"{self.width_px}x{self.height_px}"
            )

    def interior_mask(self) -> np.ndarray:
        return self.counts == self.max_iter


def _coefficient_radius(n: int, alpha: float, beta: float) -> float:
    """max over the non-zero stage weights w of (2/w)^(1/(n-1))."""
    radius = (2.0 / alpha) ** (1.0 / (n - 1))
    if beta > 0.0:
        radius = max(radius, (2.0 / beta) ** (1.0 / (n - 1)))
    return radius


def default_escape_radius(p: IterationParams) -> float:
    """Bailout threshold max(|c|, (2/alpha)^(1/(n-1)), (2/beta)^(1/(n-1))).

    The beta term is omitted when beta = 0.  Reduces to the classical
    radius 2 for the plain quadratic iteration (alpha = 1, beta = 0).
    """
    return max(modulus(p.c), _coefficient_radius(p.n, p.alpha, p.beta))


def escape_iterations(
    z0: complex, p: IterationParams, max_iter: int, escape_radius: float
) -> int:
    """Smallest k with |z_k| above the radius, or max_iter if none within budget.

    z_0 is the seed; a non-finite iterate counts as escaped.  The
    comparison squares both sides, mirroring the compiled render kernel.
    """
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")
    if not escape_radius > 0.0:
        raise ValueError(f"escape_radius must be positive, got {escape_radius}")
    z = complex(z0)
    radius_sq = escape_radius * escape_radius
    for k in range(max_iter):
        sq = z.real * z.real + z.imag * z.imag
        if sq != sq or sq > radius_sq:  # nan-safe non-finite check
            return k
        z = ji_step(z, p)
    return max_iter


@njit(cache=True, nogil=True)
def _render_band(
    counts,
    j_start,
    j_stop,
    re_min,
    re_max,
    im_min,
    im_max,
    mandelbrot,
    n,
    alpha,
    beta,
    param_re,
    param_im,
    max_iter,
    radius_override,
    coeff_radius,
):
    # Twin of escape_iterations/ji_step: same operations in the same
    # order, so counts are bit-for-bit what the scalar path produces.
    height, width = counts.shape
    re_step = (re_max - re_min) / width
    im_step = (im_max - im_min) / height
    for j in range(j_start, j_stop):
        point_im = im_max - (j + 0.5) * im_step
        for i in range(width):
            point_re = re_min + (i + 0.5) * re_step
            if mandelbrot:
                z = complex(param_re, param_im)
                c = complex(point_re, point_im)
            else:
                z = complex(point_re, point_im)
                c = complex(param_re, param_im)
            if radius_override > 0.0:
                radius = radius_override
            else:
                c_abs = math.sqrt(c.real * c.real + c.imag * c.imag)
                radius = c_abs if c_abs > coeff_radius else coeff_radius
            radius_sq = radius * radius
            count = max_iter
            for k in range(max_iter):
                sq = z.real * z.real + z.imag * z.imag
                if sq != sq or sq > radius_sq:
                    count = k
                    break
                if beta == 0.0:
                    y = z
                else:
                    acc = z
                    for _ in range(n - 1):
                        acc = acc * z
                    y = beta * (acc + c) + (1.0 - beta) * z
                acc = y
                for _ in range(n - 1):
                    acc = acc * y
                t_y = acc + c
                if alpha == 1.0:
                    z = t_y
                else:
                    z = alpha * t_y + (1.0 - alpha) * z
            counts[j, i] = count


def _resolve_workers(workers: Optional[int], height: int) -> int:
    if workers is None:
        env = os.environ.get(THREADS_ENV_VAR)
        if env is not None:
            try:
                workers = int(env)
            except ValueError:
                raise ValueError(f"{THREADS_ENV_VAR} must be an integer, got {env!r}")
        else:
            workers = os.cpu_count() or 1
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    return min(workers, height)


def render(
    spec: RenderSpec,
    *,
    workers: Optional[int] = None,
    pixel_cap: int = DEFAULT_PIXEL_CAP,
) -> EscapeField:
    """Render the escape-time field for spec.

    workers defaults to the JF_THREADS environment variable, then the
    CPU count.  Rows are distributed in contiguous bands; the result is
    the same for any worker count.
    """
    v = spec.viewport
    if v.width_px * v.height_px > pixel_cap:
        raise ValueError(
            f"viewport {v.width_px}x{v.height_px} exceeds the "
            f"{pixel_cap}-pixel cap"
        )
    workers = _resolve_workers(workers, v.height_px)

    counts = np.empty((v.height_px, v.width_px), dtype=np.int32)
    args = (
        v.re_min,
        v.re_max,
        v.im_min,
        v.im_max,
        spec.mode == "mandelbrot",
        spec.n,
        spec.alpha,
        spec.beta,
        spec.fixed_point_param.real,
        spec.fixed_point_param.imag,
        spec.max_iter,
        0.0 if spec.escape_radius is None else spec.escape_radius,
        _coefficient_radius(spec.n, spec.alpha, spec.beta),
    )

    if workers == 1:
        _render_band(counts, 0, v.height_px, *args)
    else:
        band_size, remainder = divmod(v.height_px, workers)
        bounds = []
        start = 0
        for b in range(workers):
            stop = start + band_size + (1 if b < remainder else 0)
            bounds.append((start, stop))
            start = stop
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_render_band, counts, j0, j1, *args)
                for j0, j1 in bounds
            ]
            for future in futures:
                future.result()

    counts.setflags(write=False)
    return EscapeField(
        width_px=v.width_px,
        height_px=v.height_px,
        counts=counts,
        max_iter=spec.max_iter,
        viewport=v,
    )


def symmetry_mismatch(field: EscapeField, symmetry: Symmetry) -> float:
    """Fraction of pixel pairs whose interior/exterior classification
    differs under the requested transform.

    'conjugation' pairs each pixel with its mirror across the real axis
    and requires im_min = -im_max; 'point' pairs with the 180-degree
    rotation and additionally requires re_min = -re_max.
    """
    v = field.viewport
    interior = field.interior_mask()
    if symmetry == "identity":
        partner = interior
    elif symmetry == "conjugation":
        if v.im_min != -v.im_max:
            raise ValueError(
                f"window not symmetric about the real axis: "
                f"im in [{v.im_min}, {v.im_max}]"
            )
        partner = interior[::-1, :]
    elif symmetry == "point":
        if v.im_min != -v.im_max or v.re_min != -v.re_max:
            raise ValueError(
                f"window not symmetric about both axes: "
                f"re in [{v.re_min}, {v.re_max}], im in [{v.im_min}, {v.im_max}]"
            )
        partner = interior[::-1, ::-1]
    else:
        raise ValueError(f"unknown symmetry {symmetry!r}")
    return float(np.mean(interior != partner))
