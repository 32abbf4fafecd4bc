"""Structure-constant algebras: construction, involution, trace and norm."""

import random
from fractions import Fraction

import pytest

from quatlat.algebra import (element_from_matrix, generic_algebra,
                             matrix_algebra, quaternion_algebra)
from quatlat.linalg import mat_det, mat_frac
from conftest import element_inverse, random_invertible_element


def test_quaternion_relations():
    alg = quaternion_algebra(-1, -3)
    one, i, j, k = (alg.basis_element(t) for t in range(4))
    assert alg.mul(i, i) == alg.smul(-1, one)
    assert alg.mul(j, j) == alg.smul(-3, one)
    assert alg.mul(i, j) == k
    assert alg.mul(j, i) == alg.smul(-1, k)
    assert alg.mul(k, k) == alg.smul(-3, one)


def test_quaternion_norm_trace_oracle():
    # Symbolic oracle: nrd(t + ui + vj + wk) = t^2 - a u^2 - b v^2 + a b w^2.
    rng = random.Random(3)
    for a, b in [(-1, -1), (-1, -3), (2, 5), (-2, 7)]:
        alg = quaternion_algebra(a, b)
        for _ in range(50):
            t, u, v, w = (Fraction(rng.randint(-5, 5)) for _ in range(4))
            x = alg.element((t, u, v, w))
            assert alg.reduced_norm(x) == t * t - a * u * u - b * v * v + a * b * w * w
            assert alg.reduced_trace(x) == 2 * t


def test_specific_norm_value():
    alg = quaternion_algebra(-1, -3)
    x = alg.element((1, 1, 1, 1))
    assert alg.reduced_norm(x) == 8


def test_conjugation_is_standard_involution():
    rng = random.Random(5)
    alg = quaternion_algebra(-1, -3)
    for _ in range(50):
        x = alg.element([rng.randint(-4, 4) for _ in range(4)])
        y = alg.element([rng.randint(-4, 4) for _ in range(4)])
        assert alg.conjugate(alg.conjugate(x)) == x
        assert alg.conjugate(alg.mul(x, y)) == alg.mul(alg.conjugate(y),
                                                       alg.conjugate(x))
        prod = alg.mul(x, alg.conjugate(x))
        assert all(c == 0 for c in prod[1:])


def test_matrix_algebra_matches_matrix_arithmetic():
    rng = random.Random(9)
    for r in (2, 3):
        alg = matrix_algebra(r)
        for _ in range(30):
            a = [[rng.randint(-4, 4) for _ in range(r)] for _ in range(r)]
            b = [[rng.randint(-4, 4) for _ in range(r)] for _ in range(r)]
            xa, xb = element_from_matrix(alg, a), element_from_matrix(alg, b)
            prod = alg.mul(xa, xb)
            expect = [[sum(a[i][k] * b[k][j] for k in range(r)) for j in range(r)]
                      for i in range(r)]
            assert prod == element_from_matrix(alg, expect)
            assert alg.reduced_trace(xa) == sum(a[i][i] for i in range(r))
            assert alg.reduced_norm(xa) == mat_det(mat_frac(a))


def test_mul_matrices_agree_with_mul():
    rng = random.Random(13)
    alg = quaternion_algebra(-1, -3)
    for _ in range(30):
        x = alg.element([rng.randint(-4, 4) for _ in range(4)])
        g = alg.element([rng.randint(-4, 4) for _ in range(4)])
        right = alg.right_mul_matrix(g)
        assert tuple(sum(x[i] * right[i][j] for i in range(4))
                     for j in range(4)) == alg.mul(x, g)
        left = alg.left_mul_matrix(g)
        assert tuple(sum(x[i] * left[i][j] for i in range(4))
                     for j in range(4)) == alg.mul(g, x)


def test_element_inverse_helper():
    rng = random.Random(17)
    for alg in (quaternion_algebra(-1, -3), matrix_algebra(2)):
        for _ in range(20):
            x = random_invertible_element(rng, alg)
            assert alg.mul(x, element_inverse(alg, x)) == alg.one


def test_bad_structure_constants_rejected():
    # A table whose claimed unit is not a two-sided identity must be refused.
    table = [[(1, 0), (1, 0)], [(1, 0), (1, 0)]]
    with pytest.raises(ValueError):
        generic_algebra(table, (1, 0))


def test_zero_quaternion_parameters_rejected():
    with pytest.raises(ValueError):
        quaternion_algebra(0, -1)


def test_definiteness_flag():
    assert quaternion_algebra(-1, -3).is_definite
    assert not quaternion_algebra(1, -1).is_definite
    assert not matrix_algebra(2).is_definite
