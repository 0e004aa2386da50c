"""Shared fixtures: deterministic instance corpora reused across test
modules and the acceptance gate, so the expensive random suites are built
once per session."""

import random
from pathlib import Path

import pytest

from perioband import DenseMatrix, PeriodicBandMatrix, factorize, determinant
from perioband.generate import random_matrix
from perioband.lu import LOWER_EDGE, PIVOT, UPPER_EDGE
from perioband.scalars import Rational

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


def identity_pbm(n, k=3):
    h = (k - 1) // 2
    diagonals = {d: [0] * (n - abs(d)) for d in range(-h, h + 1)}
    diagonals[0] = [1] * n
    return PeriodicBandMatrix(n, k, diagonals, 0, 0)


def _nonsingular(n, k, seed, zero_probability=0.0, mutate=None):
    """First nonsingular instance from the given seed, optionally mutated
    before the singularity check."""
    attempt = seed
    while True:
        m = random_matrix(n, k, attempt, zero_probability)
        if mutate is not None:
            m = mutate(m)
        factors = factorize(m)
        if determinant(factors) != 0:
            return m, factors
        attempt += 1


@pytest.fixture(scope="session")
def property_corpus():
    """200 random nonsingular exact instances, n in [5, 40], k in
    {3, 5, 7, 9} with k <= n - 1."""
    rng = random.Random(20250809)
    corpus = []
    for idx in range(200):
        while True:
            n = rng.randint(5, 40)
            k = rng.choice((3, 5, 7, 9))
            if k <= n - 1:
                break
        corpus.append(_nonsingular(n, k, rng.randrange(2**32)))
    return corpus


def _zero_edge(m, offset, rows):
    diagonals = {d: list(seq) for d, seq in m.diagonals.items()}
    h = m.h
    for i in rows:
        idx = i - 1 if offset > 0 else i - h - 1
        diagonals[offset][idx] = Rational(0)
    return PeriodicBandMatrix(m.n, m.k, diagonals, m.corner_1n, m.corner_n1,
                              m.mode)


def _zero_leading(m):
    # a(1,1) = 0 makes the first pivot identically zero.
    diagonals = {d: list(seq) for d, seq in m.diagonals.items()}
    diagonals[0][0] = Rational(0)
    return PeriodicBandMatrix(m.n, m.k, diagonals, m.corner_1n, m.corner_n1,
                              m.mode)


@pytest.fixture(scope="session")
def adversarial_corpus():
    """50 nonsingular instances engineered to force the three substitution
    kinds individually and jointly; each entry is (matrix, factors,
    expected substitution kinds)."""
    rng = random.Random(1553)
    corpus = []
    recipes = [
        ((UPPER_EDGE,), lambda m, r: _zero_edge(m, m.h, _rows_upper(m, r))),
        ((LOWER_EDGE,), lambda m, r: _zero_edge(m, -m.h, _rows_lower(m, r))),
        ((PIVOT,), lambda m, r: _zero_leading(m)),
        ((UPPER_EDGE, LOWER_EDGE, PIVOT),
         lambda m, r: _zero_leading(
             _zero_edge(_zero_edge(m, m.h, _rows_upper(m, r)),
                        -m.h, _rows_lower(m, r)))),
    ]
    for idx in range(50):
        kinds, build = recipes[idx % len(recipes)]
        while True:
            n = rng.randint(5, 40)
            k = rng.choice((3, 5, 7, 9))
            if k <= n - 1:
                break
        seed = rng.randrange(2**32)
        m, factors = _nonsingular(n, k, seed,
                                  mutate=lambda mm, b=build: b(mm, rng))
        present = {kind for kind, _ in factors.substitutions}
        assert set(kinds) <= present, (kinds, factors.substitutions)
        corpus.append((m, factors, kinds))
    return corpus


def _rows_upper(m, rng):
    hi = m.n - m.h - 1
    count = min(hi, 1 + rng.randrange(2))
    return rng.sample(range(1, hi + 1), count)


def _rows_lower(m, rng):
    lo = m.h + 2
    rows = range(lo, m.n + 1)
    count = min(len(rows), 1 + rng.randrange(2))
    return rng.sample(list(rows), count)
