"""Jungck-Ishikawa iteration toolkit for the polynomial family z^n - z + c.

Provides the two-stage iteration step, orbit tracing with fixed-decimal
table output, an independent polynomial root oracle, escape-time
rendering of relative superior Mandelbrot/Julia sets, and deterministic
PPM/CSV serialisation.
"""
from .core import IterationParams, complex_pow_int, ji_step, modulus, s_apply, t_apply
from .formats import (
    BANDED_PALETTE,
    RgbRaster,
    colorize,
    write_orbit_csv,
    write_ppm,
)
from .orbits import (
    Converged,
    Escaped,
    Exhausted,
    OrbitRecord,
    OrbitTrace,
    convergence_index,
    format_fixed,
    orbit_table,
    trace_orbit,
)
from .render import (
    EscapeField,
    RenderSpec,
    Viewport,
    default_escape_radius,
    escape_iterations,
    pixel_to_point,
    render,
    symmetry_mismatch,
)
from .roots import NonConvergenceError, RootSet, poly_roots, residual

__version__ = "0.1.0"

__all__ = [
    "BANDED_PALETTE",
    "Converged",
    "Escaped",
    "EscapeField",
    "Exhausted",
    "IterationParams",
    "NonConvergenceError",
    "OrbitRecord",
    "OrbitTrace",
    "RenderSpec",
    "RgbRaster",
    "RootSet",
    "Viewport",
    "colorize",
    "complex_pow_int",
    "convergence_index",
    "default_escape_radius",
    "escape_iterations",
    "format_fixed",
    "ji_step",
    "modulus",
    "orbit_table",
    "pixel_to_point",
    "poly_roots",
    "render",
    "residual",
    "s_apply",
    "symmetry_mismatch",
    "t_apply",
    "trace_orbit",
    "write_orbit_csv",
    "write_ppm",
]
