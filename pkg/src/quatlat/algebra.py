"""Finite-dimensional Q-algebras given by structure constants.

An :class:`Algebra` stores a distinguished basis e_1, ..., e_n, the structure
constants c[i][j][k] with e_i * e_j = sum_k c[i][j][k] e_k, the coordinates of
the unit, and the Gram matrix of the trace pairing used for duals.  Elements
are plain tuples of Fractions in the distinguished basis.

Constructors are provided for quaternion algebras (a,b / Q) with basis
1, i, j, k (i^2 = a, j^2 = b, k = ij = -ji) and for the matrix algebras
M_r(Q) with the elementary-matrix basis in row-major order.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import mat_det, mat_frac

Element = tuple[Fraction, ...]


class Algebra:
    """A finite-dimensional Q-algebra defined by structure constants.

    Immutable after construction; associativity and the unit axioms are
    checked on every basis triple at construction time.
    """

    def __init__(self, table, one, kind: str = "generic", params=None,
                 _skip_checks: bool = False):
        self.dim = len(table)
        self.table: list[list[Element]] = [
            [tuple(Fraction(c) for c in table[i][j]) for j in range(self.dim)]
            for i in range(self.dim)
        ]
        self.one: Element = tuple(Fraction(c) for c in one)
        self.kind = kind
        self.params = params
        if not _skip_checks:
            self._check_axioms()
        self.trace_gram = self._build_trace_gram()
        if mat_det(self.trace_gram) == 0:
            raise ValueError("trace pairing is singular (algebra not separable)")

    # -- construction checks ------------------------------------------------

    def _check_axioms(self) -> None:
        n = self.dim
        basis = [self.basis_element(i) for i in range(n)]
        for i in range(n):
            if self.mul(self.one, basis[i]) != basis[i]:
                raise ValueError("unit coordinates are not a left identity")
            if self.mul(basis[i], self.one) != basis[i]:
                raise ValueError("unit coordinates are not a right identity")
        for i in range(n):
            for j in range(n):
                ij = self.table[i][j]
                for k in range(n):
                    left = self.mul(ij, basis[k])
                    right = self.mul(basis[i], self.table[j][k])
                    if left != right:
                        raise ValueError(
                            f"structure constants not associative at ({i},{j},{k})")

    def _build_trace_gram(self):
        n = self.dim
        if self.kind in ("quaternion", "matrix"):
            tr = self.reduced_trace
        else:
            tr = self.regular_trace
        return [[tr(self.table[i][j]) for j in range(n)] for i in range(n)]

    # -- element helpers ----------------------------------------------------

    def element(self, coords) -> Element:
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError("coordinate vector has wrong length")
        return coords

    def basis_element(self, i: int) -> Element:
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dim))

    def zero(self) -> Element:
        return tuple(Fraction(0) for _ in range(self.dim))

    def add(self, x: Element, y: Element) -> Element:
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x: Element, y: Element) -> Element:
        return tuple(a - b for a, b in zip(x, y))

    def smul(self, c, x: Element) -> Element:
        c = Fraction(c)
        return tuple(c * a for a in x)

    def mul(self, x: Element, y: Element) -> Element:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("element dimension mismatch")
        acc = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                cij = self.table[i][j]
                f = xi * yj
                for k, c in enumerate(cij):
                    if c != 0:
                        acc[k] += f * c
        return tuple(acc)

    def right_mul_matrix(self, g: Element):
        """Matrix R with coords(x * g) = x * R (rows indexed by basis)."""
        return [list(self.mul(self.basis_element(i), g)) for i in range(self.dim)]

    def left_mul_matrix(self, g: Element):
        """Matrix L with coords(g * x) = x * L."""
        return [list(self.mul(g, self.basis_element(i))) for i in range(self.dim)]

    # -- involution, trace, norm --------------------------------------------

    def conjugate(self, x: Element) -> Element:
        if self.kind != "quaternion":
            raise ValueError("standard involution requires a quaternion algebra")
        t, u, v, w = x
        return (t, -u, -v, -w)

    def reduced_trace(self, x: Element) -> Fraction:
        if self.kind == "quaternion":
            return 2 * x[0]
        if self.kind == "matrix":
            r = self.params
            return sum(x[u * r + u] for u in range(r))
        raise ValueError("reduced trace is only defined for quaternion/matrix kinds")

    def reduced_norm(self, x: Element) -> Fraction:
        if self.kind == "quaternion":
            prod = self.mul(x, self.conjugate(x))
            assert all(c == 0 for c in prod[1:]), "x * conj(x) must be scalar"
            return prod[0]
        if self.kind == "matrix":
            r = self.params
            return mat_det([[x[u * r + v] for v in range(r)] for u in range(r)])
        raise ValueError("reduced norm is only defined for quaternion/matrix kinds")

    def regular_trace(self, x: Element) -> Fraction:
        """Trace of left multiplication by x (used for generic duals)."""
        return sum(self.mul(x, self.basis_element(i))[i] for i in range(self.dim))

    def norm_gram(self):
        """Gram matrix G of the reduced norm form: nrd(x) = x G x^T.

        Quaternion kind only; G = trd(e_u * conj(e_v)) / 2.
        """
        if self.kind != "quaternion":
            raise ValueError("norm form requires a quaternion algebra")
        n = self.dim
        basis = [self.basis_element(i) for i in range(n)]
        return [[Fraction(self.reduced_trace(self.mul(basis[u], self.conjugate(basis[v]))), 2)
                 for v in range(n)] for u in range(n)]

    @property
    def is_definite(self) -> bool:
        """True when the norm form is positive definite (quaternion kind)."""
        if self.kind != "quaternion":
            return False
        a, b = self.params
        return a < 0 and b < 0


def quaternion_algebra(a, b) -> Algebra:
    """The quaternion algebra (a,b / Q) with basis 1, i, j, k.

    Relations: i^2 = a, j^2 = b, k = ij = -ji, k^2 = -a*b.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("quaternion parameters must be nonzero")
    z = Fraction(0)
    one = (Fraction(1), z, z, z)
    i = (z, Fraction(1), z, z)
    j = (z, z, Fraction(1), z)
    k = (z, z, z, Fraction(1))

    def s(c, e):
        return tuple(Fraction(c) * x for x in e)

    table = [
        [one, i, j, k],
        [i, s(a, one), k, s(a, j)],
        [j, s(-1, k), s(b, one), s(-b, i)],
        [k, s(-a, j), s(b, i), s(-a * b, one)],
    ]
    return Algebra(table, one, kind="quaternion", params=(a, b))


def matrix_algebra(r: int) -> Algebra:
    """The matrix algebra M_r(Q) with elementary matrices E_uv, row-major."""
    if r < 1:
        raise ValueError("matrix algebra size must be at least 1")
    n = r * r

    def unit(u, v):
        e = [Fraction(0)] * n
        e[u * r + v] = Fraction(1)
        return tuple(e)

    zero = tuple(Fraction(0) for _ in range(n))
    table = []
    for u in range(r):
        for v in range(r):
            row = []
            for s_ in range(r):
                for t in range(r):
                    row.append(unit(u, t) if v == s_ else zero)
            table.append(row)
    one = tuple(Fraction(1 if u == v else 0) for u in range(r) for v in range(r))
    return Algebra(table, one, kind="matrix", params=r)


def generic_algebra(table, one) -> Algebra:
    """An algebra from raw structure constants (duals via the regular trace)."""
    return Algebra(table, one, kind="generic")


def element_from_matrix(alg: Algebra, rows) -> Element:
    """Convenience: an M_r element from an r x r array of rationals."""
    if alg.kind != "matrix":
        raise ValueError("element_from_matrix requires a matrix algebra")
    flat = [Fraction(x) for row in rows for x in row]
    return alg.element(flat)
