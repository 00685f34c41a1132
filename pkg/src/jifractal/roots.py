"""Independent root finder for z^n - z + c = 0.

Durand-Kerner simultaneous iteration, used to validate converged orbit
limits and fixed-point preservation without relying on the two-stage
iteration under test.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import complex_pow_int, modulus

__all__ = ["NonConvergenceError", "RootSet", "poly_roots", "residual"]

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 500

# Standard non-real, non-unit-modulus starting point; successive powers
# seed the root estimates deterministically.
_SEED = 0.4 + 0.9j


class NonConvergenceError(RuntimeError):
    """The simultaneous iteration did not reach the residual tolerance."""


@dataclass(frozen=True, slots=True)
class RootSet:
    """All n roots of z^n - z + c, sorted by (re, im)."""

    n: int
    c: complex
    roots: tuple[complex, ...]
    max_residual: float


def residual(z: complex, n: int, c: complex) -> float:
    """|z^n - z + c|; zero exactly when z is a root, up to float arithmetic."""
    return modulus(complex_pow_int(z, n) - z + c)


def _eval_poly(z: complex, coeffs: list[complex]) -> complex:
    acc = coeffs[0]
    for coeff in coeffs[1:]:
        acc = acc * z + coeff
    return acc


def poly_roots(
    n: int,
    c: complex,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RootSet:
    """Find all n roots of z^n - z + c by Durand-Kerner iteration.

    Deterministic: estimates start at powers of 0.4 + 0.9i and are
    updated sweep by sweep, in place.  Raises NonConvergenceError if the
    worst residual is still above tol after max_iter sweeps; no partial
    result is returned.
    """
    if n < 2:
        raise ValueError(f"degree n must be >= 2, got {n}")
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")
    c = complex(c)

    # z^n + 0*z^(n-1) + ... + 0*z^2 - z + c
    coeffs: list[complex] = [1.0 + 0j] + [0j] * (n - 2) + [-1.0 + 0j, c]

    estimates = []
    seed_power = 1.0 + 0j
    for _ in range(n):
        estimates.append(seed_power)
        seed_power = seed_power * _SEED

    def sweep() -> None:
        for i in range(n):
            z_i = estimates[i]
            denom = 1.0 + 0j
            for j in range(n):
                if j != i:
                    denom = denom * (z_i - estimates[j])
            estimates[i] = z_i - _eval_poly(z_i, coeffs) / denom

    def worst_residual() -> float:
        return max(modulus(_eval_poly(z, coeffs)) for z in estimates)

    for _ in range(max_iter):
        sweep()
        if worst_residual() < tol:
            # one polishing sweep pushes residuals to near machine level,
            # giving downstream fixed-point checks real slack
            sweep()
            roots = tuple(sorted(estimates, key=lambda z: (z.real, z.imag)))
            return RootSet(n=n, c=c, roots=roots, max_residual=worst_residual())

    raise NonConvergenceError(
        f"root iteration for n={n}, c={c} did not reach residual {tol} "
        f"within {max_iter} sweeps"
    )
