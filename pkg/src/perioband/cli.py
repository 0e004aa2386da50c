"""Batch command-line front end.

Commands: ``det``, ``invert``, ``invert-anti``, ``solve``, ``gen``,
``check``, ``bench``.  Matrices travel as PKB/APKB files, vectors as VEC
files, inverses as DENSE files; results go to stdout unless ``-o`` is
given.  ``--mode`` picks exact or float arithmetic; the ``PERIOBAND_MODE``
environment variable overrides the default and the flag wins over both.

Exit codes are stable: 0 success, 1 a ``check`` comparison failed,
2 singular matrix (the message contains ``Singular Matrix``), 3 parse,
format, or usage error, 4 float-mode zero pivot (rerun with
``--mode exact``), 5 internal inconsistency.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import formats, oracle
from .bench import relative_residual, time_float_factor_solve
from .errors import (
    FormatError,
    InternalInconsistencyError,
    PerioBandError,
    SingularMatrixError,
    ZeroPivotError,
)
from .generate import random_dominant, random_matrix
from .inversion import invert, invert_anti
from .lu import determinant, factorize
from .matrices import AntiPeriodicBandMatrix, PeriodicBandMatrix
from .scalars import EXACT, FLOAT, format_value
from .solve import solve

__all__ = ["main"]

_EXIT_CHECK_FAILED = 1
_EXIT_SINGULAR = 2
_EXIT_FORMAT = 3
_EXIT_ZERO_PIVOT = 4
_EXIT_INTERNAL = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise FormatError(message)


def _default_mode() -> str:
    env = os.environ.get("PERIOBAND_MODE")
    if env is None:
        return "exact"
    if env not in ("exact", "float"):
        raise FormatError(f"PERIOBAND_MODE must be exact or float, got {env!r}")
    return env


def _mode(args) -> "ScalarMode":
    return EXACT if args.mode == "exact" else FLOAT


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _emit(text: str, path):
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _load_banded(path: str, mode, want_anti: bool):
    m = formats.parse_banded(_read(path))
    kind = "anti-banded (APKB)" if want_anti else "banded (PKB)"
    ok = isinstance(m, AntiPeriodicBandMatrix if want_anti else PeriodicBandMatrix)
    if not ok:
        raise FormatError(f"{path}: expected a {kind} matrix file")
    if m.mode == mode:
        return m
    if m.mode.is_exact and not mode.is_exact:
        return m.as_float_mode()
    raise FormatError(
        f"{path}: file is {m.mode.kind} mode and cannot run in {mode.kind} mode")


def _cmd_det(args):
    m = _load_banded(args.input, _mode(args), want_anti=False)
    print(format_value(determinant(factorize(m))))
    return 0


def _cmd_invert(args):
    m = _load_banded(args.input, _mode(args), want_anti=False)
    _emit(formats.write_dense(invert(m)), args.output)
    return 0


def _cmd_invert_anti(args):
    m = _load_banded(args.input, _mode(args), want_anti=True)
    _emit(formats.write_dense(invert_anti(m)), args.output)
    return 0


def _cmd_solve(args):
    mode = _mode(args)
    m = _load_banded(args.input, mode, want_anti=False)
    y = formats.parse_vector(_read(args.rhs), mode)
    outcome = solve(m, y)
    _emit(formats.write_vector(outcome.x), args.output)
    if args.check:
        res = relative_residual(m, outcome.x, y)
        print(f"residual {res:.3e}", file=sys.stderr)
    return 0


def _cmd_gen(args):
    m = random_matrix(args.n, args.k, args.seed, args.zero_probability,
                      _mode(args))
    _emit(formats.write_banded(m), args.output)
    return 0


def _check_line(name: str, ok: bool) -> bool:
    print(f"{'PASS' if ok else 'FAIL'} {name}")
    return ok


def _cmd_check(args):
    mode = _mode(args)
    parsed = formats.parse_banded(_read(args.input))
    results = []
    if isinstance(parsed, AntiPeriodicBandMatrix):
        if not mode.is_exact:
            raise FormatError("check requires exact mode for anti-banded input")
        dense = parsed.to_dense()
        results.append(_check_line(
            "inverse", invert_anti(parsed) == oracle.invert(dense)))
    elif mode.is_exact:
        dense = parsed.to_dense()
        det_band = determinant(factorize(parsed))
        det_ref = oracle.determinant(dense)
        results.append(_check_line("determinant", det_band == det_ref))
        if det_ref != 0:
            results.append(_check_line(
                "inverse", invert(parsed) == oracle.invert(dense)))
        if args.rhs:
            y = formats.parse_vector(_read(args.rhs), mode)
            if det_ref != 0:
                results.append(_check_line(
                    "solve", list(solve(parsed, y).x) == oracle.solve(dense, y)))
    else:
        if not args.rhs:
            raise FormatError("float-mode check needs --rhs (residual check)")
        y = formats.parse_vector(_read(args.rhs), mode)
        outcome = solve(parsed, y)
        results.append(_check_line(
            "solve residual <= 1e-8",
            relative_residual(parsed, outcome.x, y) <= 1e-8))
    return 0 if all(results) else _EXIT_CHECK_FAILED


def _cmd_bench(args):
    import numpy

    dense_cap = 1500
    exact_cap = 200
    print(f"{'n':>8} {'band float s':>14} {'dense float s':>14} {'exact check':>12}")
    for n in args.n:
        mf = random_dominant(n, args.k, args.seed, FLOAT)
        y = [1.0] * n
        seconds, _ = time_float_factor_solve(mf, y)
        if n <= dense_cap:
            a = numpy.array(mf.to_dense().to_lists(), dtype=float)
            b = numpy.ones(n)
            start = time.perf_counter()
            numpy.linalg.solve(a, b)
            dense_s = f"{time.perf_counter() - start:14.6f}"
        else:
            dense_s = f"{'-':>14}"
        if n <= exact_cap:
            me = random_dominant(n, args.k, args.seed, EXACT)
            ok = determinant(factorize(me)) == oracle.determinant(me.to_dense())
            exact_col = f"{'PASS' if ok else 'FAIL':>12}"
        else:
            exact_col = f"{'-':>12}"
        print(f"{n:>8} {seconds:14.6f} {dense_s} {exact_col}")
    return 0


def _int_list(text: str):
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="perioband",
                     description="Periodic banded matrix toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--mode", choices=("exact", "float"),
                       default=_default_mode(),
                       help="arithmetic mode (default from PERIOBAND_MODE or exact)")
        return p

    p = add("det", _cmd_det, help="print the determinant of a PKB matrix")
    p.add_argument("input", help="PKB file")

    p = add("invert", _cmd_invert, help="invert a PKB matrix, emit DENSE")
    p.add_argument("input", help="PKB file")
    p.add_argument("-o", "--output", help="output path (default stdout)")

    p = add("invert-anti", _cmd_invert_anti,
            help="invert an APKB matrix, emit DENSE")
    p.add_argument("input", help="APKB file")
    p.add_argument("-o", "--output", help="output path (default stdout)")

    p = add("solve", _cmd_solve, help="solve M x = y, emit VEC")
    p.add_argument("input", help="PKB file")
    p.add_argument("--rhs", required=True, help="VEC file with the right-hand side")
    p.add_argument("--check", action="store_true",
                   help="print the relative residual to stderr")
    p.add_argument("-o", "--output", help="output path (default stdout)")

    p = add("gen", _cmd_gen, help="generate a random PKB matrix")
    p.add_argument("--n", type=int, required=True, help="order")
    p.add_argument("--k", type=int, required=True, help="bandwidth (odd)")
    p.add_argument("--seed", type=int, required=True, help="RNG seed")
    p.add_argument("--zero-probability", type=float, default=0.0,
                   help="probability a band entry is zeroed (default 0)")
    p.add_argument("-o", "--output", help="output path (default stdout)")

    p = add("check", _cmd_check,
            help="compare the band algorithms against the dense reference")
    p.add_argument("input", help="PKB or APKB file")
    p.add_argument("--rhs", help="VEC file; also check the solve path")

    p = add("bench", _cmd_bench, help="time band vs dense factor+solve")
    p.add_argument("--n", type=_int_list, required=True,
                   help="comma-separated list of orders")
    p.add_argument("--k", type=int, default=5, help="bandwidth (default 5)")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")

    return parser


def main(argv=None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        return args.func(args)
    except SingularMatrixError as exc:
        print(exc, file=sys.stderr)
        return _EXIT_SINGULAR
    except ZeroPivotError as exc:
        print(exc, file=sys.stderr)
        return _EXIT_ZERO_PIVOT
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return _EXIT_INTERNAL
    except (FormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_FORMAT
    except PerioBandError as exc:  # pragma: no cover - defensive
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
