"""Operator split and single-step recurrence for the family z^n - z + c.

The root-finding problem z^n - z + c = 0 is rewritten as the coincidence
equation S z = T z with T z = z^n + c and S the identity, so the common
fixed points of the two-stage averaged iteration implemented here are
exactly the roots of the polynomial.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "IterationParams",
    "complex_pow_int",
    "ji_step",
    "modulus",
    "s_apply",
    "t_apply",
]


def modulus(z: complex) -> float:
    """sqrt(re^2 + im^2).

    Written out instead of abs() so the scalar path and the compiled
    render kernel perform bit-identical arithmetic.
    """
    return math.sqrt(z.real * z.real + z.imag * z.imag)


@dataclass(frozen=True, slots=True)
class IterationParams:
    """Degree and scheme coefficients of the two-stage iteration.

    alpha weights the outer averaged stage and must lie in (0, 1];
    beta weights the inner stage and lies in [0, 1].  beta = 0 is a
    degenerate setting that collapses the scheme to its single-stage
    (Mann-type) reduction; report output flags it as such.
    """

    n: int
    alpha: float
    beta: float
    c: complex

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"degree n must be >= 2, got {self.n}")
        alpha = float(self.alpha)
        beta = float(self.beta)
        if not 0.0 < alpha <= 1.0:
            raise ValueError(f"alpha must be in (0, 1], got {alpha}")
        if not 0.0 <= beta <= 1.0:
            raise ValueError(f"beta must be in [0, 1], got {beta}")
        c = complex(self.c)
        if not cmath.isfinite(c):
            raise ValueError(f"c must be finite, got {c}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "c", c)

    @property
    def single_stage_reduction(self) -> bool:
        """True when beta = 0, i.e. the inner stage is switched off."""
        return self.beta == 0.0


def complex_pow_int(z: complex, n: int) -> complex:
    """z^n by repeated multiplication.

    No transcendental-function path: n - 1 sequential products give the
    same bits on every platform.  Overflow produces non-finite
    components, which callers treat as an escaped orbit.
    """
    if n < 1:
        raise ValueError(f"exponent must be >= 1, got {n}")
    acc = z
    for _ in range(n - 1):
        acc = acc * z
    return acc


def t_apply(z: complex, p: IterationParams) -> complex:
    """T z = z^n + c."""
    return complex_pow_int(z, p.n) + p.c


def s_apply(z: complex) -> complex:
    """S z = z."""
    return z


def ji_step(x: complex, p: IterationParams) -> complex:
    """One two-stage step: y = beta*T(x) + (1-beta)*x, then
    x' = alpha*T(y) + (1-alpha)*x.

    The beta == 0 and alpha == 1 branches skip the vacuous convex
    combination so the documented Mann/Picard reductions hold at the
    bit level, signed zeros included.
    """
    if p.beta == 0.0:
        y = x
    else:
        y = p.beta * t_apply(x, p) + (1.0 - p.beta) * x
    t_y = t_apply(y, p)
    if p.alpha == 1.0:
        return t_y
    return p.alpha * t_y + (1.0 - p.alpha) * x
