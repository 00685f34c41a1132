#!/usr/bin/env python3
"""Render the nine reference parameter sets in both modes.

Quadratic, cubic and biquadratic families at c = 0.1, three
(alpha, beta) pairs each; one Mandelbrot and one filled Julia image per
set, written as PPM files.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from jifractal.cli import run

PARAMETER_SETS = [
    (2, 0.5, 0.5),
    (2, 0.8, 0.4),
    (2, 0.1, 0.1),
    (3, 0.8, 0.8),
    (3, 0.5, 0.5),
    (3, 0.4, 0.6),
    (4, 0.8, 0.8),
    (4, 0.5, 0.5),
    (4, 0.4, 0.6),
]

C = "0.1"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="figures")
    parser.add_argument("--size", default="800x800")
    parser.add_argument("--max-iter", default="100")
    parser.add_argument("--scheme", default="grayscale",
                        choices=("grayscale", "banded"))
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    for n, alpha, beta in PARAMETER_SETS:
        common = [
            "--n", str(n), "--alpha", str(alpha), "--beta", str(beta),
            "--size", args.size, "--window", "-2,2,-2,2",
            "--max-iter", args.max_iter, "--scheme", args.scheme,
        ]
        stem = f"n{n}_a{alpha}_b{beta}"
        jobs = [
            (["render", "--mode", "mandelbrot", *common,
              "--out", str(outdir / f"mandelbrot_{stem}.ppm")], "mandelbrot"),
            (["render", "--mode", "julia", "--param", C, *common,
              "--out", str(outdir / f"julia_{stem}.ppm")], "julia"),
        ]
        for argv, mode in jobs:
            code = run(argv)
            if code != 0:
                print(f"failed: {mode} {stem} (exit {code})", file=sys.stderr)
                return code
            print(f"wrote {mode}_{stem}.ppm")
    return 0


if __name__ == "__main__":
    sys.exit(main())
