"""Exact arithmetic for lattices over orders in Q-algebras.

Computes colon lattices, left/right orders, duals and quasi-inverses;
weak and full right equivalence class sets (including non-invertible
classes); and Brandt matrices with theta series for definite quaternion
orders.  All arithmetic is exact (integers and fractions); no floats.
"""

from .algebra import (Algebra, Element, element_from_matrix, generic_algebra,
                      matrix_algebra, quaternion_algebra)
from .brandt import BrandtSeries, brandt_series
from .classes import (ClassSet, UnitGroup, invertible_right_equivalence_classes,
                      is_right_equivalent, overorders,
                      right_equivalence_classes, unit_group)
from .errors import ResourceBudgetExceededError, UnsupportedFeatureError
from .ideals import (FiniteModule, WeakClassSet, conductor, is_invertible,
                     is_left_projective, is_right_projective,
                     is_weakly_right_equivalent, maximal_order_above,
                     quotient_module, weak_right_equivalence_classes)
from .lattice import Lattice, Order, generalized_index, order_from_generators

__all__ = [
    "Algebra", "Element", "quaternion_algebra", "matrix_algebra",
    "generic_algebra", "element_from_matrix",
    "Lattice", "Order", "generalized_index", "order_from_generators",
    "is_invertible", "is_left_projective", "is_right_projective",
    "is_weakly_right_equivalent", "maximal_order_above", "conductor",
    "quotient_module", "FiniteModule", "WeakClassSet",
    "weak_right_equivalence_classes",
    "UnitGroup", "unit_group", "is_right_equivalent",
    "invertible_right_equivalence_classes", "right_equivalence_classes",
    "ClassSet", "overorders",
    "BrandtSeries", "brandt_series",
    "UnsupportedFeatureError", "ResourceBudgetExceededError",
]

__version__ = "0.1.0"
