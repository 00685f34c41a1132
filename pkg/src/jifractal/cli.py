"""Command-line interface: orbit tables, root solving, rendering, symmetry checks.

Exit codes: 0 success, 1 runtime failure (solver non-convergence, I/O),
2 flag validation failure.  Output files are written to a temporary
name and renamed on success, so failures leave no partial files.
"""
from __future__ import annotations

import argparse
import os
import re
import sys
import tempfile
from typing import Optional, Sequence

from .core import IterationParams
from .formats import colorize, write_orbit_csv, write_ppm
from .orbits import DEFAULT_MAX_ITER, trace_orbit
from .render import RenderSpec, Viewport, render, symmetry_mismatch
from .roots import NonConvergenceError, poly_roots, residual

__all__ = ["main", "parse_complex", "run"]

_NUMBER = r"(?:\d+(?:\.\d*)?|\.\d+)"
_REAL_RE = re.compile(rf"[+-]?{_NUMBER}")
_IMAG_RE = re.compile(rf"(?P<im>[+-]?{_NUMBER})i")
_BOTH_RE = re.compile(rf"(?P<re>[+-]?{_NUMBER})(?P<im>[+-]{_NUMBER})i")


def parse_complex(text: str) -> complex:
    """Parse 'a', 'bi' or 'a+bi' literals (optional signs, no whitespace)."""
    if _REAL_RE.fullmatch(text):
        return complex(float(text), 0.0)
    match = _IMAG_RE.fullmatch(text)
    if match:
        return complex(0.0, float(match.group("im")))
    match = _BOTH_RE.fullmatch(text)
    if match:
        return complex(float(match.group("re")), float(match.group("im")))
    raise ValueError(f"invalid complex literal {text!r}")


def _parse_size(text: str) -> tuple[int, int]:
    match = re.fullmatch(r"(\d+)x(\d+)", text)
    if not match:
        raise ValueError(f"invalid size {text!r}, expected WxH")
    return int(match.group(1)), int(match.group(2))


def _parse_window(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(
            f"invalid window {text!r}, expected re_min,re_max,im_min,im_max"
        )
    try:
        re_min, re_max, im_min, im_max = (float(p) for p in parts)
    except ValueError:
        raise ValueError(f"invalid window {text!r}, expected four numbers")
    return re_min, re_max, im_min, im_max


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # accept dash-leading values like "-2,2,-2,2" or "-1.5-7.6i";
        # stock argparse only recognises plain negative numbers
        self._negative_number_matcher = re.compile(r"^-\d|^-\.\d")

    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="jifractal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    orbit = sub.add_parser("orbit", help="trace one orbit and emit it as CSV")
    orbit.add_argument("--n", type=int, required=True, help="polynomial degree (>= 2)")
    orbit.add_argument("--alpha", type=float, required=True)
    orbit.add_argument("--beta", type=float, required=True)
    orbit.add_argument("--c", type=parse_complex, required=True)
    orbit.add_argument("--z0", type=parse_complex, required=True)
    orbit.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    orbit.add_argument("--decimals", type=int, default=4)
    orbit.add_argument("--out", default=None)

    roots = sub.add_parser("roots", help="solve z^n - z + c = 0 and print roots as CSV")
    roots.add_argument("--n", type=int, required=True)
    roots.add_argument("--c", type=parse_complex, required=True)
    roots.add_argument("--out", default=None)

    for name in ("render", "symcheck"):
        cmd = sub.add_parser(
            name,
            help=(
                "render an escape-time image"
                if name == "render"
                else "render and measure a symmetry mismatch fraction"
            ),
        )
        cmd.add_argument("--mode", choices=("mandelbrot", "julia"), required=True)
        cmd.add_argument("--n", type=int, required=True)
        cmd.add_argument("--alpha", type=float, required=True)
        cmd.add_argument("--beta", type=float, required=True)
        cmd.add_argument(
            "--param",
            type=parse_complex,
            default=None,
            help="seed z0 for mandelbrot mode (default 0), constant c for julia",
        )
        cmd.add_argument("--size", type=_parse_size, default=(800, 800))
        cmd.add_argument("--window", type=_parse_window, default=(-2.0, 2.0, -2.0, 2.0))
        cmd.add_argument("--max-iter", type=int, default=100)
        cmd.add_argument("--radius", type=float, default=None)
        if name == "render":
            cmd.add_argument("--scheme", choices=("grayscale", "banded"), default="grayscale")
            cmd.add_argument("--out", default=None)
        else:
            cmd.add_argument(
                "--symmetry", choices=("conjugation", "point", "identity"), required=True
            )

    return parser


def _write_output(path: Optional[str], data: bytes) -> None:
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".jifractal-")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        mask = os.umask(0)
        os.umask(mask)
        os.chmod(tmp_path, 0o666 & ~mask)  # mkstemp defaults to 0600
        os.replace(tmp_path, path)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise


def _render_spec(args: argparse.Namespace) -> RenderSpec:
    if args.param is None:
        if args.mode == "julia":
            raise ValueError("julia mode requires --param (the constant c)")
        param = 0j
    else:
        param = args.param
    width, height = args.size
    re_min, re_max, im_min, im_max = args.window
    viewport = Viewport(
        re_min=re_min,
        re_max=re_max,
        im_min=im_min,
        im_max=im_max,
        width_px=width,
        height_px=height,
    )
    return RenderSpec(
        mode=args.mode,
        n=args.n,
        alpha=args.alpha,
        beta=args.beta,
        viewport=viewport,
        max_iter=args.max_iter,
        fixed_point_param=param,
        escape_radius=args.radius,
    )


def _cmd_orbit(args: argparse.Namespace) -> None:
    params = IterationParams(args.n, args.alpha, args.beta, args.c)
    if args.decimals < 0:
        raise ValueError(f"decimals must be >= 0, got {args.decimals}")
    trace = trace_orbit(args.z0, params, max_iter=args.max_iter)
    _write_output(args.out, write_orbit_csv(trace, args.decimals).encode("utf-8"))


def _cmd_roots(args: argparse.Namespace) -> None:
    root_set = poly_roots(args.n, args.c)
    lines = ["re,im,residual"]
    for root in root_set.roots:
        lines.append(f"{root.real!r},{root.imag!r},{residual(root, args.n, args.c)!r}")
    _write_output(args.out, ("\n".join(lines) + "\n").encode("utf-8"))


def _cmd_render(args: argparse.Namespace) -> None:
    field = render(_render_spec(args))
    _write_output(args.out, write_ppm(colorize(field, args.scheme)))


def _cmd_symcheck(args: argparse.Namespace) -> None:
    spec = _render_spec(args)
    # validate window symmetry before paying for the render
    v = spec.viewport
    if args.symmetry in ("conjugation", "point") and v.im_min != -v.im_max:
        raise ValueError(
            f"window not symmetric about the real axis: im in [{v.im_min}, {v.im_max}]"
        )
    if args.symmetry == "point" and v.re_min != -v.re_max:
        raise ValueError(
            f"window not symmetric about the imaginary axis: "
            f"re in [{v.re_min}, {v.re_max}]"
        )
    mismatch = symmetry_mismatch(render(spec), args.symmetry)
    print(f"{args.symmetry} mismatch {mismatch!r}")


_COMMANDS = {
    "orbit": _cmd_orbit,
    "roots": _cmd_roots,
    "render": _cmd_render,
    "symcheck": _cmd_symcheck,
}


def run(argv: Sequence[str]) -> int:
    """Execute one CLI invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NonConvergenceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
