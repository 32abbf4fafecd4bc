"""Exact integer/rational kernel tests: HNF, SNF, preimages, LLL, short vectors."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quatlat.linalg import (enumerate_representations, hnf, integral_preimage,
                            lll_reduce, mat_det, mat_frac, mat_inverse, mat_mul,
                            mat_transpose, snf, identity_matrix)


def _random_int_matrix(rng, rows, cols, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def _random_unimodular(rng, n, steps=12):
    u = identity_matrix(n)
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-3, 3)
        u[i] = [a + c * b for a, b in zip(u[i], u[j])]
    return u


small_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-20, 20), min_size=c, max_size=c),
            min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(small_matrices)
def test_hnf_properties(m):
    h, u = hnf(m)
    assert abs(mat_det(mat_frac(u))) == 1
    assert mat_mul(u, m) == h
    # Row echelon with positive pivots and reduced entries above them.
    pivots = []
    for row in h:
        nz = next((j for j, x in enumerate(row) if x != 0), None)
        if nz is None:
            continue
        assert not pivots or nz > pivots[-1]
        assert row[nz] > 0
        pivots.append(nz)
    for k, col in enumerate(pivots):
        p = h[k][col]
        for i in range(k):
            assert 0 <= h[i][col] < p


@settings(max_examples=150, deadline=None)
@given(small_matrices)
def test_snf_properties(m):
    s, u, v = snf(m)
    assert abs(mat_det(mat_frac(u))) == 1
    assert abs(mat_det(mat_frac(v))) == 1
    assert mat_mul(mat_mul(u, m), v) == s
    rows, cols = len(s), len(s[0])
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert s[i][j] == 0
    diag = [s[i][i] for i in range(min(rows, cols))]
    for a, b in zip(diag, diag[1:]):
        assert a >= 0 and b >= 0
        if a == 0:
            assert b == 0
        elif b != 0:
            assert b % a == 0


def test_snf_terminates_on_sign_flip_pattern():
    # Regression: equal-magnitude opposite-sign entries once cycled forever.
    m = [[2, 0, 2, -2, -2], [2, 6, -2, 4, -4]]
    s, u, v = snf(m)
    assert mat_mul(mat_mul(u, m), v) == s


def test_hnf_canonical_under_unimodular_premultiplication():
    # Unimodular row operations never change the canonical form: 200 cases.
    rng = random.Random(20240817)
    for _ in range(200):
        n = rng.randint(2, 4)
        m = _random_int_matrix(rng, n, n)
        if mat_det(mat_frac(m)) == 0:
            continue
        h1, _ = hnf(m)
        u = _random_unimodular(rng, n)
        h2, _ = hnf(mat_mul(u, m))
        assert h1 == h2


def test_integral_preimage_solves_membership():
    rng = random.Random(7)
    for _ in range(60):
        r = rng.randint(1, 3)
        c = rng.randint(r, 4)
        m = mat_frac([[Fraction(rng.randint(-6, 6), rng.choice([1, 1, 2, 3]))
                       for _ in range(c)] for _ in range(r)])
        # Ensure full row rank.
        h, _ = hnf([[x.numerator * 12 // x.denominator for x in row] for row in m])
        if sum(1 for row in h if any(row)) < r:
            continue
        basis = integral_preimage(m)
        prod = mat_mul(basis, m)
        assert all(x.denominator == 1 for row in prod for x in row)
        # The basis spans everything integral: any integral random combo of the
        # inverse-image lattice stays inside the row span of the basis.
        binv = mat_inverse(basis)
        for _ in range(5):
            v = [Fraction(rng.randint(-4, 4), rng.choice([1, 2])) for _ in range(r)]
            vm = mat_mul([v], m)[0]
            integral = all(x.denominator == 1 for x in vm)
            coords = mat_mul([v], binv)[0]
            in_span = all(x.denominator == 1 for x in coords)
            assert in_span == integral


def test_lll_preserves_lattice_and_reduces():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(2, 4)
        while True:
            b = _random_int_matrix(rng, n, n, -5, 5)
            if mat_det(mat_frac(b)) != 0:
                break
        gram = mat_mul(b, mat_transpose(b))
        g2, t = lll_reduce(gram)
        assert abs(mat_det(mat_frac(t))) == 1
        assert g2 == mat_mul(mat_mul(t, gram), mat_transpose(t))


def test_enumerate_representations_against_box_search():
    # 50 random positive definite forms, dim <= 4, targets <= 20.
    rng = random.Random(20240818)
    done = 0
    while done < 50:
        n = rng.randint(1, 4)
        b = _random_int_matrix(rng, n, n, -3, 3)
        if mat_det(mat_frac(b)) == 0:
            continue
        gram = mat_mul(b, mat_transpose(b))
        target = rng.randint(1, 20)
        got = set(enumerate_representations(gram, target))
        # Box bound: q(x) >= min diagonal-completion; use a safe coordinate box
        # from the inverse Gram (x_i^2 <= target * (G^{-1})_{ii}).
        ginv = mat_inverse(mat_frac(gram))
        bounds = []
        for i in range(n):
            lim = target * ginv[i][i]
            k = 0
            while Fraction(k * k) <= lim:
                k += 1
            bounds.append(k - 1)
        expect = set()

        def rec(i, vec):
            if i == n:
                q = sum(vec[a] * gram[a][b2] * vec[b2]
                        for a in range(n) for b2 in range(n))
                if q == target:
                    expect.add(tuple(vec))
                return
            for x in range(-bounds[i], bounds[i] + 1):
                rec(i + 1, vec + [x])

        rec(0, [])
        assert got == expect
        done += 1


def test_enumerate_representations_zero_target():
    assert enumerate_representations([[2, 0], [0, 2]], 0) == [(0, 0)]


def test_enumerate_representations_rejects_indefinite():
    with pytest.raises(ValueError):
        enumerate_representations([[1, 0], [0, -1]], 4)
