"""Deterministic random instance generation.

The draw order is fixed so a seed always yields the same matrix: first the
two corners, then the diagonals in ascending offset, each in ascending
position.  Band entries are drawn from the nonzero small integers
-3..-1, 1..3 and then independently replaced by zero with probability
``zero_probability`` (which is how tests force the perturbation lane);
corners are always drawn nonzero.  Small integer entries keep exact
arithmetic fast while still producing zero pivots at useful rates.
"""

from __future__ import annotations

import random

from .lu import factorize, determinant
from .matrices import PeriodicBandMatrix
from .scalars import EXACT, FLOAT, ScalarMode

__all__ = ["random_matrix", "random_nonsingular", "random_dominant"]

_NONZERO = (-3, -2, -1, 1, 2, 3)


def random_matrix(n: int, k: int, seed: int, zero_probability: float = 0.0,
                  mode: ScalarMode = EXACT) -> PeriodicBandMatrix:
    """Deterministic random periodic banded matrix."""
    if not 0.0 <= zero_probability <= 1.0:
        raise ValueError("zero_probability must be in [0, 1]")
    rng = random.Random(seed)
    h = (k - 1) // 2

    def draw(may_zero: bool):
        v = rng.choice(_NONZERO)
        if may_zero and rng.random() < zero_probability:
            return 0
        return v

    corner_1n = draw(False)
    corner_n1 = draw(False)
    diagonals = {d: [draw(True) for _ in range(n - abs(d))]
                 for d in range(-h, h + 1)}
    if not mode.is_exact:
        diagonals = {d: [float(v) for v in seq] for d, seq in diagonals.items()}
        corner_1n, corner_n1 = float(corner_1n), float(corner_n1)
    return PeriodicBandMatrix(n, k, diagonals, corner_1n, corner_n1, mode)


def random_nonsingular(n: int, k: int, seed: int, zero_probability: float = 0.0,
                       require_perturbation: bool = False):
    """Rejection-sample a nonsingular exact matrix, advancing the seed until
    the determinant is nonzero (and, optionally, until the factorization
    actually needed the perturbation lane).  Returns (matrix, factors)."""
    attempt = seed
    while True:
        m = random_matrix(n, k, attempt, zero_probability)
        factors = factorize(m)
        if determinant(factors) != 0:
            if not require_perturbation or factors.perturbed:
                return m, factors
        attempt += 1


def random_dominant(n: int, k: int, seed: int,
                    mode: ScalarMode = FLOAT) -> PeriodicBandMatrix:
    """Diagonally dominant random matrix (never needs perturbation; safe
    for float mode and for timing runs)."""
    m = random_matrix(n, k, seed, 0.0, EXACT)
    h = (k - 1) // 2
    bound = 2 * h * 3 + 3 + 1
    diagonals = dict(m.diagonals)
    diagonals[0] = [bound + abs(v) for v in diagonals[0]]
    if not mode.is_exact:
        diagonals = {d: [float(v) for v in seq] for d, seq in diagonals.items()}
        return PeriodicBandMatrix(n, k, diagonals, float(m.corner_1n),
                                  float(m.corner_n1), mode)
    return PeriodicBandMatrix(n, k, diagonals, m.corner_1n, m.corner_n1, EXACT)
