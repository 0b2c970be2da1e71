"""Shared generators and independent oracles for the test suite."""

import random
from fractions import Fraction

import pytest

from conestab import SquareMatrix, UniPoly


def rand_fraction(rng: random.Random, lo=-9, hi=9, max_den=5, nonzero=False):
    while True:
        num = rng.randint(lo, hi)
        if nonzero and num == 0:
            continue
        return Fraction(num, rng.randint(1, max_den))


def rand_int_matrix(rng: random.Random, n: int, lo=-9, hi=9) -> SquareMatrix:
    return SquareMatrix.from_rows(
        [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def rand_fraction_matrix(rng: random.Random, n: int) -> SquareMatrix:
    return SquareMatrix.from_rows(
        [[rand_fraction(rng) for _ in range(n)] for _ in range(n)])


def cofactor_det(rows):
    """Brute-force cofactor expansion; the independent determinant oracle."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def poly_from_roots(real_roots, complex_pairs):
    """Monic polynomial with the given real roots and complex-conjugate
    pairs (given as (re, im)); exact when inputs are rational."""
    p = UniPoly((1,))
    for r in real_roots:
        p = p * UniPoly((-r, 1))
    for re, im in complex_pairs:
        p = p * UniPoly((re * re + im * im, -2 * re, 1))
    return p


@pytest.fixture
def rng():
    return random.Random(20260809)
