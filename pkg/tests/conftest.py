"""Shared helpers for randomized tests (seeded, deterministic)."""

from fractions import Fraction

import pytest

from quatlat.algebra import Algebra, Element
from quatlat.lattice import Lattice
from quatlat.linalg import mat_inverse, mat_mul


def random_lattice(rng, alg: Algebra, entry_range: int = 3,
                   dens=(1, 1, 1, 2)) -> Lattice:
    """A random full-rank lattice with small rational coordinates."""
    n = alg.dim
    while True:
        rows = [[Fraction(rng.randint(-entry_range, entry_range), rng.choice(dens))
                 for _ in range(n)] for _ in range(n)]
        try:
            return Lattice.from_rows(alg, rows)
        except ValueError:
            continue


def random_invertible_element(rng, alg: Algebra, entry_range: int = 3) -> Element:
    """A random element invertible in the algebra."""
    while True:
        x = alg.element([Fraction(rng.randint(-entry_range, entry_range))
                         for _ in range(alg.dim)])
        r = alg.right_mul_matrix(x)
        from quatlat.linalg import mat_det
        if mat_det(r) != 0:
            return x


def element_inverse(alg: Algebra, x: Element) -> Element:
    """Inverse via the regular representation: coords(1) * R_x^{-1}."""
    r = [[Fraction(c) for c in row] for row in alg.right_mul_matrix(x)]
    inv = mat_inverse(r)
    return alg.element(mat_mul([list(alg.one)], inv)[0])
