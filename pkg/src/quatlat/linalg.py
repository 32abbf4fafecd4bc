"""Exact integer and rational matrix kernel.

Everything in this module is computed with arbitrary-precision integers and
`fractions.Fraction`; no floating point is used anywhere.  The kernel provides:

* row Hermite normal form with transformation matrix,
* Smith normal form with both transformation matrices,
* integral preimage lattices ``{v : v*M is integral}``,
* exact LLL reduction of positive definite Gram matrices (delta = 3/4),
* Fincke-Pohst enumeration of all integer vectors representing a given
  value under a positive definite quadratic form.

Matrices are plain lists of lists (row-major).  Integer matrices hold ints,
rational matrices hold Fractions (ints are accepted and coerced on input).
All functions return fresh matrices and never mutate their arguments.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

IntMatrix = list[list[int]]
RatMatrix = list[list[Fraction]]


def identity_matrix(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    """Matrix product; works for int and Fraction entries alike."""
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        if len(row) != inner:
            raise ValueError("matrix dimension mismatch")
        out.append([sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)])
    return out


def mat_transpose(a):
    if not a:
        return []
    return [[a[i][j] for i in range(len(a))] for j in range(len(a[0]))]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def mat_eq(a, b) -> bool:
    if len(a) != len(b):
        return False
    return all(len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
               for ra, rb in zip(a, b))


def mat_frac(a) -> RatMatrix:
    """Coerce every entry to Fraction."""
    return [[Fraction(x) for x in row] for row in a]


def mat_det(a) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination over Q."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    m = mat_frac(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for i in range(col + 1, n):
            if m[i][col] != 0:
                f = m[i][col] * inv
                for j in range(col, n):
                    m[i][j] -= f * m[col][j]
    return det


def mat_inverse(a) -> RatMatrix:
    """Exact inverse of a nonsingular matrix, by Gauss-Jordan over Q."""
    n = len(a)
    m = mat_frac(a)
    aug = [m[i] + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def hnf(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns ``(h, u)`` with ``h = u * m``, ``u`` unimodular, ``h`` upper
    echelon with positive pivots and the entries above each pivot reduced
    into ``[0, pivot)``.  Zero rows are collected at the bottom.  The input
    may be rank deficient or rectangular.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    h = [[int(x) for x in row] for row in m]
    u = identity_matrix(rows)
    r = 0
    for col in range(cols):
        # Clear column `col` below row r by pairwise gcd elimination.
        piv = next((i for i in range(r, rows) if h[i][col] != 0), None)
        if piv is None:
            continue
        if piv != r:
            h[r], h[piv] = h[piv], h[r]
            u[r], u[piv] = u[piv], u[r]
        for i in range(r + 1, rows):
            if h[i][col] == 0:
                continue
            a, b = h[r][col], h[i][col]
            g, s, t = _xgcd(a, b)
            p, q = a // g, b // g
            # (s t; -q p) is unimodular: s*p + t*q = 1.
            h[r], h[i] = (
                [s * x + t * y for x, y in zip(h[r], h[i])],
                [-q * x + p * y for x, y in zip(h[r], h[i])],
            )
            u[r], u[i] = (
                [s * x + t * y for x, y in zip(u[r], u[i])],
                [-q * x + p * y for x, y in zip(u[r], u[i])],
            )
        if h[r][col] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        # Reduce the entries above the pivot into [0, pivot).
        piv_val = h[r][col]
        for i in range(r):
            q = h[i][col] // piv_val
            if q != 0:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
        if r == rows:
            break
    return h, u


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd with g > 0 (for (a, b) != (0, 0)): g = s*a + t*b."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def snf(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form.

    Returns ``(s, u, v)`` with ``s = u * m * v`` diagonal, nonnegative,
    satisfying the divisibility chain d1 | d2 | ..., and u, v unimodular.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    s = [[int(x) for x in row] for row in m]
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def row_op(i, j, col):
        a, b = s[i][col], s[j][col]
        if a != 0 and b % a == 0:
            # Plain subtraction keeps the pivot row intact when it suffices.
            q = b // a
            s[j] = [d - q * c for c, d in zip(s[i], s[j])]
            u[j] = [d - q * c for c, d in zip(u[i], u[j])]
            return
        g, x, y = _xgcd(a, b)
        p, q = a // g, b // g
        s[i], s[j] = ([x * c + y * d for c, d in zip(s[i], s[j])],
                      [-q * c + p * d for c, d in zip(s[i], s[j])])
        u[i], u[j] = ([x * c + y * d for c, d in zip(u[i], u[j])],
                      [-q * c + p * d for c, d in zip(u[i], u[j])])

    def col_op(i, j, row):
        a, b = s[row][i], s[row][j]
        if a != 0 and b % a == 0:
            q = b // a
            for k in range(rows):
                s[k][j] -= q * s[k][i]
            for k in range(cols):
                v[k][j] -= q * v[k][i]
            return
        g, x, y = _xgcd(a, b)
        p, q = a // g, b // g
        for k in range(rows):
            s[k][i], s[k][j] = x * s[k][i] + y * s[k][j], -q * s[k][i] + p * s[k][j]
        for k in range(cols):
            v[k][i], v[k][j] = x * v[k][i] + y * v[k][j], -q * v[k][i] + p * v[k][j]

    t = 0
    while t < min(rows, cols):
        # Move a nonzero entry to (t, t) if one exists.
        pos = next(((i, j) for i in range(t, rows) for j in range(t, cols)
                    if s[i][j] != 0), None)
        if pos is None:
            break
        i0, j0 = pos
        if i0 != t:
            s[t], s[i0] = s[i0], s[t]
            u[t], u[i0] = u[i0], u[t]
        if j0 != t:
            for k in range(rows):
                s[k][t], s[k][j0] = s[k][j0], s[k][t]
            for k in range(cols):
                v[k][t], v[k][j0] = v[k][j0], v[k][t]
        while True:
            # Alternate row/column elimination until the cross is clear.
            while True:
                for i in range(t + 1, rows):
                    if s[i][t] != 0:
                        row_op(t, i, t)
                if any(s[t][j] != 0 for j in range(t + 1, cols)):
                    for j in range(t + 1, cols):
                        if s[t][j] != 0:
                            col_op(t, j, t)
                    if any(s[i][t] != 0 for i in range(t + 1, rows)):
                        continue
                break
            # Make the pivot divide every remaining entry before moving on;
            # folding an offending row into row t strictly shrinks the pivot,
            # so this loop terminates.
            bad = next(((i, j) for i in range(t + 1, rows)
                        for j in range(t + 1, cols)
                        if s[i][j] % s[t][t] != 0), None)
            if bad is None:
                break
            i, _ = bad
            s[t] = [c + d for c, d in zip(s[t], s[i])]
            u[t] = [c + d for c, d in zip(u[t], u[i])]
        t += 1

    # Fix signs; the divisibility chain already holds by construction.
    r = next((k for k in range(min(rows, cols)) if s[k][k] == 0), min(rows, cols))
    for k in range(r):
        if s[k][k] < 0:
            s[k] = [-x for x in s[k]]
            u[k] = [-x for x in u[k]]
    return s, u, v


def integral_preimage(m) -> RatMatrix:
    """Basis of the lattice ``{v in Q^r : v * m in Z^c}``.

    ``m`` must be an r x c rational matrix of full row rank (r <= c);
    a rank-deficient input raises ValueError.  The result is an r x r
    rational matrix whose rows form a Z-basis of the solution lattice.
    """
    mm = mat_frac(m)
    r = len(mm)
    if r == 0:
        return []
    d = 1
    for row in mm:
        for x in row:
            d = d * x.denominator // _gcd(d, x.denominator)
    a = [[int(x * d) for x in row] for row in mm]
    # Column HNF via the row HNF of the transpose: a * v = [H | 0].
    ht, ut = hnf(mat_transpose(a))
    top = ht[:r]
    if len(ht) < r or any(all(x == 0 for x in row) for row in top):
        raise ValueError("integral_preimage requires full row rank")
    h = mat_transpose(top)  # r x r, nonsingular
    basis = mat_scale(mat_inverse(h), d)
    return basis


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


# ---------------------------------------------------------------------------
# Positive definite Gram forms
# ---------------------------------------------------------------------------

def check_positive_definite(gram) -> RatMatrix:
    """Validate symmetry and positive definiteness; return a Fraction copy."""
    g = mat_frac(gram)
    n = len(g)
    if any(len(row) != n for row in g):
        raise ValueError("Gram matrix must be square")
    for i in range(n):
        for j in range(i):
            if g[i][j] != g[j][i]:
                raise ValueError("Gram matrix must be symmetric")
    for k in range(1, n + 1):
        minor = [row[:k] for row in g[:k]]
        if mat_det(minor) <= 0:
            raise ValueError("Gram matrix is not positive definite")
    return g


def _gso(g: RatMatrix) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Gram-Schmidt data (squared norms b and coefficients mu) from a Gram."""
    n = len(g)
    b = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i):
            mu[i][j] = (g[i][j] - sum(mu[j][k] * mu[i][k] * b[k] for k in range(j))) / b[j]
        b[i] = g[i][i] - sum(mu[i][k] ** 2 * b[k] for k in range(i))
    return b, mu


def lll_reduce(gram) -> tuple[RatMatrix, IntMatrix]:
    """Exact LLL reduction of a positive definite Gram matrix (delta = 3/4).

    Returns ``(g2, t)`` with ``t`` unimodular and ``g2 = t * gram * t^T``
    LLL-reduced.  Raises ValueError for non positive definite input.
    """
    g0 = check_positive_definite(gram)
    n = len(g0)
    t = identity_matrix(n)
    g = [row[:] for row in g0]
    delta = Fraction(3, 4)

    def refresh():
        nonlocal g
        g = mat_mul(mat_mul(mat_frac(t), g0), mat_transpose(mat_frac(t)))

    k = 1
    b, mu = _gso(g)
    while k < n:
        # Size-reduce row k against rows k-1 .. 0.
        for j in range(k - 1, -1, -1):
            q = _round_half_even(mu[k][j])
            if q != 0:
                t[k] = [x - q * y for x, y in zip(t[k], t[j])]
                refresh()
                b, mu = _gso(g)
        if b[k] >= (delta - mu[k][k - 1] ** 2) * b[k - 1]:
            k += 1
        else:
            t[k - 1], t[k] = t[k], t[k - 1]
            refresh()
            b, mu = _gso(g)
            k = max(k - 1, 1)
    return g, t


def _round_half_even(x: Fraction) -> int:
    q, rem = divmod(x.numerator, x.denominator)
    if 2 * rem > x.denominator or (2 * rem == x.denominator and q % 2 == 1):
        q += 1
    return q


def _floor_sqrt_plus(radicand: Fraction, shift: Fraction) -> int:
    """floor(sqrt(radicand) + shift) for rational radicand >= 0, exact."""
    p, q = radicand.numerator, radicand.denominator
    guess = isqrt(p * q) // q  # floor(sqrt(p/q)) up to +-1
    z = (Fraction(guess) + shift).__floor__()

    def le(zz: int) -> bool:  # zz <= sqrt(radicand) + shift ?
        d = Fraction(zz) - shift
        return d <= 0 or d * d <= radicand

    while le(z + 1):
        z += 1
    while not le(z):
        z -= 1
    return z


def enumerate_representations(gram, target) -> list[tuple[int, ...]]:
    """All integer vectors x with ``x * gram * x^T == target``.

    ``gram`` must be positive definite and ``target`` a nonnegative rational.
    The result is sorted lexicographically and contains every representation
    exactly once; target 0 yields only the zero vector.
    """
    target = Fraction(target)
    if target < 0:
        raise ValueError("target must be nonnegative")
    g0 = check_positive_definite(gram)
    n = len(g0)
    if target == 0:
        return [tuple([0] * n)]
    g, t = lll_reduce(g0)
    b, mu = _gso(g)
    # q(x) = sum_i b[i] * (x_i + sum_{j>i} mu[j][i] x_j)^2
    found: list[tuple[int, ...]] = []
    coords = [0] * n

    def recurse(i: int, remaining: Fraction) -> None:
        if i < 0:
            if remaining == 0:
                # Map back to the original coordinates: x = y * t.
                vec = tuple(sum(coords[k] * t[k][j] for k in range(n)) for j in range(n))
                found.append(vec)
            return
        shift = sum(mu[j][i] * coords[j] for j in range(i + 1, n))
        bound = remaining / b[i]
        hi = _floor_sqrt_plus(bound, -shift)
        lo = -_floor_sqrt_plus(bound, shift)
        for x in range(lo, hi + 1):
            coords[i] = x
            val = b[i] * (Fraction(x) + shift) ** 2
            if val <= remaining:
                recurse(i - 1, remaining - val)
        coords[i] = 0

    recurse(n - 1, target)
    found.sort()
    return found
