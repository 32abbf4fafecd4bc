"""Full Z-lattices in a Q-algebra, with the colon/order/dual calculus.

A :class:`Lattice` is stored canonically as ``(1/den) * H`` where ``den`` is a
positive integer and ``H`` an integer matrix in row Hermite normal form with
``gcd(den, content(H)) == 1``.  This makes structural equality coincide with
mathematical equality of lattices, so ``==`` and hashing are exact.

All operations are pure; lattices are immutable.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd

from .algebra import Algebra, Element
from .linalg import (
    hnf,
    integral_preimage,
    mat_det,
    mat_frac,
    mat_inverse,
    mat_mul,
    mat_transpose,
)


class Lattice:
    """A full-rank Z-lattice in an algebra, in canonical (den, HNF) form."""

    __slots__ = ("algebra", "den", "rows", "_binv", "_lord", "_rord")

    def __init__(self, algebra: Algebra, den: int, rows: tuple[tuple[int, ...], ...]):
        # Internal constructor: assumes (den, rows) already canonical.
        self.algebra = algebra
        self.den = den
        self.rows = rows
        self._binv = None
        self._lord = None
        self._rord = None

    # -- construction -------------------------------------------------------

    @staticmethod
    def from_rows(algebra: Algebra, rational_rows) -> "Lattice":
        """Canonical lattice spanned by the given rational coordinate rows.

        Raises ValueError unless the span has full rank.
        """
        n = algebra.dim
        rr = mat_frac(rational_rows)
        if not rr or any(len(row) != n for row in rr):
            raise ValueError("generators must be coordinate vectors of length dim")
        den = 1
        for row in rr:
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
        ints = [[int(x * den) for x in row] for row in rr]
        h, _ = hnf(ints)
        h = h[:n]
        if len(h) < n or h[n - 1][n - 1] == 0 or any(h[i][i] == 0 for i in range(n)):
            raise ValueError("generators do not span a full-rank lattice")
        content = 0
        for row in h:
            for x in row:
                content = gcd(content, x)
        g = gcd(content, den)
        if g > 1:
            den //= g
            h = [[x // g for x in row] for row in h]
        return Lattice(algebra, den, tuple(tuple(row) for row in h))

    @staticmethod
    def from_generators(algebra: Algebra, gens) -> "Lattice":
        """Z-span of a list of algebra elements (must span over Q)."""
        return Lattice.from_rows(algebra, [list(g) for g in gens])

    # -- basic accessors ----------------------------------------------------

    def basis_matrix(self):
        """Rational basis matrix (rows are coordinates of a Z-basis)."""
        d = Fraction(1, self.den)
        return [[x * d for x in row] for row in self.rows]

    def basis_elements(self) -> list[Element]:
        return [self.algebra.element(row) for row in self.basis_matrix()]

    def inverse_basis(self):
        """Cached inverse of the basis matrix (lattices are immutable)."""
        if self._binv is None:
            self._binv = mat_inverse(self.basis_matrix())
        return self._binv

    def __eq__(self, other) -> bool:
        return (isinstance(other, Lattice) and self.algebra is other.algebra
                and self.den == other.den and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.den, self.rows))

    def __repr__(self) -> str:
        return f"Lattice(den={self.den}, hnf={[list(r) for r in self.rows]})"

    def sort_key(self):
        """Deterministic total order on lattices of one algebra."""
        return (self.den, self.rows)

    # -- predicates ----------------------------------------------------------

    def contains(self, x: Element) -> bool:
        sol = mat_mul([list(x)], self.inverse_basis())[0]
        return all(c.denominator == 1 for c in sol)

    def is_sublattice_of(self, other: "Lattice") -> bool:
        m = mat_mul(self.basis_matrix(), other.inverse_basis())
        return all(c.denominator == 1 for row in m for c in row)

    # -- arithmetic ----------------------------------------------------------

    def _require_same_algebra(self, other: "Lattice") -> None:
        if self.algebra is not other.algebra:
            raise ValueError("lattices live in different algebras")

    def add(self, other: "Lattice") -> "Lattice":
        self._require_same_algebra(other)
        return Lattice.from_rows(self.algebra,
                                 self.basis_matrix() + other.basis_matrix())

    def intersect(self, other: "Lattice") -> "Lattice":
        """Intersection via duality for the standard coordinate pairing."""
        self._require_same_algebra(other)
        d1 = _coordinate_dual_rows(self.basis_matrix())
        d2 = _coordinate_dual_rows(other.basis_matrix())
        return Lattice.from_rows(self.algebra, _coordinate_dual_rows(
            Lattice.from_rows(self.algebra, d1 + d2).basis_matrix()))

    def mul(self, other: "Lattice") -> "Lattice":
        """Lattice product: Z-span of all pairwise basis products."""
        self._require_same_algebra(other)
        alg = self.algebra
        gens = []
        for x in self.basis_elements():
            for y in other.basis_elements():
                gens.append(alg.mul(x, y))
        return Lattice.from_generators(alg, gens)

    def scale(self, c) -> "Lattice":
        c = Fraction(c)
        if c == 0:
            raise ValueError("cannot scale a lattice by zero")
        return Lattice.from_rows(self.algebra,
                                 [[x * c for x in row] for row in self.basis_matrix()])

    def elem_mul_left(self, a: Element) -> "Lattice":
        """The lattice a * I."""
        alg = self.algebra
        return Lattice.from_generators(alg, [alg.mul(a, x) for x in self.basis_elements()])

    def elem_mul_right(self, a: Element) -> "Lattice":
        """The lattice I * a."""
        alg = self.algebra
        return Lattice.from_generators(alg, [alg.mul(x, a) for x in self.basis_elements()])

    # -- colons, orders, duals ----------------------------------------------

    def colon_left(self, other: "Lattice") -> "Lattice":
        """(self : other)_L = {x : x * other ⊆ self}.

        Computed as the integral preimage of the stacked maps
        x -> coords of x*g in self's basis, over a basis g of other.
        Basis elements are never inverted.
        """
        self._require_same_algebra(other)
        alg = self.algebra
        binv = self.inverse_basis()
        blocks = []
        for g in other.basis_elements():
            blocks.append(mat_mul(mat_frac(alg.right_mul_matrix(g)), binv))
        stacked = [sum((blocks[b][i] for b in range(len(blocks))), [])
                   for i in range(alg.dim)]
        return Lattice.from_rows(alg, integral_preimage(stacked))

    def colon_right(self, other: "Lattice") -> "Lattice":
        """(self : other)_R = {x : other * x ⊆ self}."""
        self._require_same_algebra(other)
        alg = self.algebra
        binv = self.inverse_basis()
        blocks = []
        for g in other.basis_elements():
            blocks.append(mat_mul(mat_frac(alg.left_mul_matrix(g)), binv))
        stacked = [sum((blocks[b][i] for b in range(len(blocks))), [])
                   for i in range(alg.dim)]
        return Lattice.from_rows(alg, integral_preimage(stacked))

    def left_order(self) -> "Order":
        if self._lord is None:
            self._lord = Order(self.colon_left(self), _validated=True)
        return self._lord

    def right_order(self) -> "Order":
        if self._rord is None:
            self._rord = Order(self.colon_right(self), _validated=True)
        return self._rord

    def trace_dual(self) -> "Lattice":
        """Dual {x : trd(x * self) ⊆ Z} for the algebra's trace pairing."""
        alg = self.algebra
        m = mat_mul(mat_frac(alg.trace_gram), mat_transpose(self.basis_matrix()))
        return Lattice.from_rows(alg, mat_inverse(m))

    def quasi_inverse(self) -> "Lattice":
        """{x : self * x * self ⊆ self}, via the two colon formulas.

        Both (O_R(I) : I)_L and (O_L(I) : I)_R are computed; a mismatch
        indicates a kernel bug and raises RuntimeError.
        """
        left = self.right_order().lattice.colon_left(self)
        right = self.left_order().lattice.colon_right(self)
        if left != right:
            raise RuntimeError("quasi-inverse formulas disagree (kernel bug)")
        return left

    def index_in(self, other: "Lattice") -> Fraction:
        """Generalized index [other : self] as a positive rational."""
        self._require_same_algebra(other)
        d = mat_det(mat_mul(self.basis_matrix(), other.inverse_basis()))
        return abs(d)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"den": str(self.den),
                "hnf": [[str(x) for x in row] for row in self.rows]}

    @staticmethod
    def from_json(algebra: Algebra, obj: dict) -> "Lattice":
        den = int(obj["den"])
        rows = [[Fraction(int(x), den) for x in row] for row in obj["hnf"]]
        return Lattice.from_rows(algebra, rows)

    def to_json_str(self) -> str:
        return json.dumps(self.to_json())


def generalized_index(sup: Lattice, sub: Lattice) -> Fraction:
    """[sup : sub] as a positive rational (determinant ratio)."""
    return sub.index_in(sup)


def _coordinate_dual_rows(basis):
    """Rows of the dual basis for the standard coordinate dot pairing."""
    return mat_transpose(mat_inverse(basis))


class Order:
    """A lattice that is a unital subring; validated at construction."""

    __slots__ = ("lattice", "_discrd")

    def __init__(self, lattice: Lattice, _validated: bool = False):
        alg = lattice.algebra
        if not _validated:
            if not lattice.contains(alg.one):
                raise ValueError("not an order: missing unit")
            basis = lattice.basis_elements()
            for x in basis:
                for y in basis:
                    if not lattice.contains(alg.mul(x, y)):
                        raise ValueError("not an order: not closed under multiplication")
        self.lattice = lattice
        self._discrd = None

    @property
    def algebra(self) -> Algebra:
        return self.lattice.algebra

    def __eq__(self, other) -> bool:
        return isinstance(other, Order) and self.lattice == other.lattice

    def __hash__(self) -> int:
        return hash(("order", self.lattice))

    def __repr__(self) -> str:
        return f"Order({self.lattice!r})"

    @property
    def reduced_discriminant(self) -> int:
        """Positive integer with discrd^2 = |det trd(b_u b_v)| (quaternion)."""
        if self._discrd is None:
            alg = self.algebra
            if alg.kind != "quaternion":
                raise ValueError("reduced discriminant requires a quaternion algebra")
            b = self.lattice.basis_matrix()
            gram = mat_mul(mat_mul(b, mat_frac(alg.trace_gram)), mat_transpose(b))
            d = abs(mat_det(gram))
            if d.denominator != 1:
                raise ValueError("order trace Gram has non-integral determinant")
            from math import isqrt
            r = isqrt(d.numerator)
            if r * r != d.numerator:
                raise ValueError("trace Gram determinant is not a perfect square")
            self._discrd = r
        return self._discrd

    def norm_gram(self):
        """Gram of the reduced norm form on this order's basis (quaternion)."""
        alg = self.algebra
        b = self.lattice.basis_matrix()
        return mat_mul(mat_mul(b, alg.norm_gram()), mat_transpose(b))


def order_from_generators(algebra: Algebra, gens) -> Order:
    return Order(Lattice.from_generators(algebra, gens))
