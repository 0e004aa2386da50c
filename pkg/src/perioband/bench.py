"""Timing helpers for the band-versus-dense comparisons.

The band claim is structural: factor-plus-solve is O(n k^2) + O(n k) and
full inversion is O(n^2 k), against O(n^3) for the dense reference.  The
helpers here time the float factor+solve path, the exact band inversion,
and the dense reference inversion; the reference can be run under a
budget in a separate process so "at least this much slower" can be
established without waiting for it to finish.
"""

from __future__ import annotations

import multiprocessing
import time

from . import oracle
from .inversion import invert
from .lu import factorize
from .matrices import DenseMatrix, PeriodicBandMatrix
from .solve import solve_factored

__all__ = [
    "time_float_factor_solve",
    "time_exact_invert",
    "time_oracle_invert",
    "relative_residual",
]


def time_float_factor_solve(m: PeriodicBandMatrix, y) -> tuple:
    """Wall-clock seconds for one factorization plus one solve, and the
    outcome (float mode intended; works for exact too)."""
    start = time.perf_counter()
    factors = factorize(m)
    outcome = solve_factored(factors, y)
    return time.perf_counter() - start, outcome


def time_exact_invert(m: PeriodicBandMatrix) -> tuple:
    """Wall-clock seconds for a full band inversion, and the inverse."""
    start = time.perf_counter()
    result = invert(m)
    return time.perf_counter() - start, result


def _oracle_invert_child(dense: DenseMatrix, queue):
    start = time.perf_counter()
    oracle.invert(dense)
    queue.put(time.perf_counter() - start)


def time_oracle_invert(dense: DenseMatrix, budget: float | None = None):
    """Wall-clock seconds for the dense reference inversion.

    With a ``budget``, runs in a child process and returns None if the
    inversion is still going when the budget expires -- i.e. it took at
    least ``budget`` seconds.
    """
    if budget is None:
        start = time.perf_counter()
        oracle.invert(dense)
        return time.perf_counter() - start
    ctx = multiprocessing.get_context("fork")
    queue = ctx.Queue()
    proc = ctx.Process(target=_oracle_invert_child, args=(dense, queue))
    proc.start()
    proc.join(budget)
    if proc.is_alive():
        proc.terminate()
        proc.join()
        return None
    return queue.get() if not queue.empty() else None


def relative_residual(m: PeriodicBandMatrix, x, y) -> float:
    """Max-norm relative residual |Mx - y| / |y| in float arithmetic."""
    r = m.matvec(list(x))
    num = max(abs(float(a) - float(b)) for a, b in zip(r, y))
    den = max(max(abs(float(v)) for v in y), 1e-300)
    return num / den
