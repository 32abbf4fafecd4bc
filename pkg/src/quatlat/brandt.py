"""Brandt matrices and theta series over a full right class set.

For class representatives I_1, ..., I_r with common right order, the matrix
entry is

    T(n)_{i,j} = (1 / #O_L(I_i)^x) * #{alpha in (I_j : I_i)_L : Q_{i,j}(alpha) = n}

where Q_{i,j}(alpha) = nrd(alpha) * sqrt([I_j : I_i]).  When the generalized
index [I_j : I_i] is not a rational square no alpha can contribute, so every
positive coefficient of that theta component vanishes.  The theta series
starts with the alpha = 0 term 1 / #O_L(I_i)^x as its constant coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .classes import (ClassSet, _norm_gram_on, _square_root_of_index,
                      right_equivalence_classes, unit_group, _require_definite)
from .lattice import Order
from .linalg import enumerate_representations


@dataclass
class _ColonForm:
    """Pairwise data: the colon lattice (I_j : I_i)_L with its norm form."""

    index: Fraction
    scale: Fraction | None  # sqrt(index) when index is a rational square
    gram: list | None       # nrd Gram on the colon lattice basis


class BrandtSeries:
    """Brandt matrices T(n) and theta q-expansions for one class set."""

    def __init__(self, class_set: ClassSet):
        _require_definite(class_set.order.algebra)
        self.class_set = class_set
        alg = class_set.order.algebra
        reps = class_set.representatives
        r = len(reps)
        self.unit_sizes = [unit_group(i.left_order()).size for i in reps]
        self.colon_forms: list[list[_ColonForm]] = []
        for i in range(r):
            row = []
            for j in range(r):
                index = reps[i].index_in(reps[j])
                scale = _square_root_of_index(index)
                if scale is None:
                    row.append(_ColonForm(index=index, scale=None, gram=None))
                else:
                    colon = reps[j].colon_left(reps[i])
                    gram = _norm_gram_on(alg, colon.basis_matrix())
                    row.append(_ColonForm(index=index, scale=scale, gram=gram))
            self.colon_forms.append(row)
        self._matrices: dict[int, list[list[Fraction]]] = {}

    @property
    def size(self) -> int:
        return len(self.class_set.representatives)

    def brandt_matrix(self, n: int) -> list[list[Fraction]]:
        """The r x r matrix T(n) for a positive integer n."""
        if n < 1:
            raise ValueError("Brandt matrices are indexed by positive integers")
        if n in self._matrices:
            return self._matrices[n]
        r = self.size
        out = [[Fraction(0)] * r for _ in range(r)]
        for i in range(r):
            for j in range(r):
                cf = self.colon_forms[i][j]
                if cf.scale is None:
                    continue
                target = Fraction(n) / cf.scale
                count = len(enumerate_representations(cf.gram, target))
                out[i][j] = Fraction(count, self.unit_sizes[i])
        self._matrices[n] = out
        return out

    def theta_series(self, i: int, j: int, prec: int) -> list[Fraction]:
        """Coefficients [c_0, ..., c_prec] of the theta component (i, j)."""
        if prec < 0:
            raise ValueError("precision must be nonnegative")
        coeffs = [Fraction(1, self.unit_sizes[i])]
        for n in range(1, prec + 1):
            coeffs.append(self.brandt_matrix(n)[i][j])
        return coeffs


def brandt_series(order: Order) -> BrandtSeries:
    """Convenience: full pipeline from an order to its Brandt series."""
    return BrandtSeries(right_equivalence_classes(order))
