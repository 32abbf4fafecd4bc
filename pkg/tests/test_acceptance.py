"""Acceptance gate: the seven end-to-end criteria with their tolerances.

All numeric comparisons are exact (integers and fractions); the only
tolerances are the stated runtime targets.
"""

import random
import time
from fractions import Fraction

from quatlat.algebra import quaternion_algebra
from quatlat.classes import (invertible_right_equivalence_classes,
                             is_right_equivalent, _enumeration_bound)
from quatlat.fixtures import (check_definite_class_set, check_m3_one_sided,
                              check_m3_two_sided, check_m4_one_sided,
                              definite_example_order)
from quatlat.ideals import is_invertible, maximal_order_above
from quatlat.lattice import Lattice, Order


def _all_pass(checks):
    failed = [name for name, ok in checks if not ok]
    assert not failed, f"failed checks: {failed}"


def test_criterion_1_m3_two_sided_example():
    start = time.monotonic()
    _all_pass(check_m3_two_sided())
    assert time.monotonic() - start < 1.0


def test_criterion_2_m3_one_sided_example():
    start = time.monotonic()
    _all_pass(check_m3_one_sided())
    assert time.monotonic() - start < 1.0


def test_criterion_3_m4_one_sided_example():
    start = time.monotonic()
    _all_pass(check_m4_one_sided())
    assert time.monotonic() - start < 5.0


def test_criterion_4_definite_class_set_and_brandt():
    start = time.monotonic()
    _all_pass(check_definite_class_set(max_n=14, prec=15))
    assert time.monotonic() - start < 60.0


def test_criterion_5_property_suite():
    # >= 200 seeded random cases per law across M_2, M_3 and two definite
    # quaternion algebras; the laws live in test_properties.
    import test_properties as props
    for law in (props.test_colon_scaling_law,
                props.test_colon_shift_law,
                props.test_colon_chain_law,
                props.test_colon_mixed_law,
                props.test_colon_product_inclusion,
                props.test_colon_is_bimodule,
                props.test_dual_identities,
                props.test_weak_equivalence_relation_laws,
                props.test_invertible_iff_weakly_equivalent_to_right_order,
                props.test_index_multiplicativity):
        assert sum(count for _, count, _ in props.ALGEBRAS) >= 200
        law()


def _brute_force_invertible_classes(order, max_index):
    """Oracle: all right-stable sublattices of index <= max_index, classified
    by the short-vector equivalence test (no square-index shortcuts)."""
    from quatlat.classes import (_hnf_sublattices_with_det, _is_right_stable,
                                 _membership_in_hnf)
    alg = order.algebra
    dim = alg.dim
    basis = order.lattice.basis_matrix()
    obasis = order.lattice.basis_elements()
    from quatlat.linalg import mat_inverse, mat_mul
    binv = mat_inverse(basis)
    mul_mats = []
    for g in obasis:
        rows = []
        for e in obasis:
            sol = mat_mul([list(alg.mul(e, g))], binv)[0]
            rows.append([int(c) for c in sol])
        mul_mats.append(rows)
    reps = []
    for det in range(1, max_index + 1):
        for h in _hnf_sublattices_with_det(dim, det, det):
            if not _is_right_stable(h, mul_mats):
                continue
            rows = [[sum(Fraction(h[i][k]) * basis[k][j] for k in range(dim))
                     for j in range(dim)] for i in range(dim)]
            cand = Lattice.from_rows(alg, rows)
            if cand.right_order() != order or not is_invertible(cand):
                continue
            if any(is_right_equivalent(cand, r) for r in reps):
                continue
            reps.append(cand)
    return reps


def test_criterion_6_oracle_equivalence_and_bound_doubling():
    q11 = quaternion_algebra(-1, -1)
    lip = Order(Lattice.from_rows(q11, [[1, 0, 0, 0], [0, 1, 0, 0],
                                        [0, 0, 1, 0], [0, 0, 0, 1]]))
    maximal = maximal_order_above(lip)
    c = _enumeration_bound(maximal)
    bound = min(c, 64)
    brute = _brute_force_invertible_classes(maximal, bound)
    fast = invertible_right_equivalence_classes(maximal, bound=bound)
    assert len(brute) == len(fast) == 1
    for b in brute:
        assert sum(1 for f in fast if is_right_equivalent(b, f)) == 1
    # Strengthened oracle beyond the minimal bound: all indices up to 16.
    brute16 = _brute_force_invertible_classes(maximal, 16)
    fast16 = invertible_right_equivalence_classes(maximal, bound=16)
    assert len(brute16) == len(fast16)
    for b in brute16:
        assert sum(1 for f in fast16 if is_right_equivalent(b, f)) == 1
    # Doubling the bound changes no fixture's class count.
    fixtures = [maximal, lip]
    weak = None
    from quatlat.ideals import weak_right_equivalence_classes
    weak = weak_right_equivalence_classes(definite_example_order())
    fixtures += [j.left_order() for j in weak.representatives]
    for o in fixtures:
        c = _enumeration_bound(o)
        assert (len(invertible_right_equivalence_classes(o, bound=c))
                == len(invertible_right_equivalence_classes(o, bound=2 * c)))


def test_criterion_7_kernel_checks():
    import test_linalg as kernel
    # 50 random reduced forms, dim <= 4, targets <= 20, against box search.
    kernel.test_enumerate_representations_against_box_search()
    # HNF canonicality under 200 random unimodular premultiplications.
    kernel.test_hnf_canonical_under_unimodular_premultiplication()
