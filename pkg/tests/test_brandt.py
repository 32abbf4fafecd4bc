"""Brandt matrices and theta series: structural laws and small oracles."""

import random
from fractions import Fraction

import pytest

from quatlat.algebra import quaternion_algebra
from quatlat.brandt import BrandtSeries, brandt_series
from quatlat.classes import is_right_equivalent, right_equivalence_classes
from quatlat.ideals import maximal_order_above
from quatlat.lattice import Lattice, Order


Q11 = quaternion_algebra(-1, -1)


def hurwitz():
    h = Fraction(1, 2)
    return Order(Lattice.from_rows(Q11, [[1, 0, 0, 0], [0, 1, 0, 0],
                                         [0, 0, 1, 0], [h, h, h, h]]))


@pytest.fixture(scope="module")
def hurwitz_series():
    return brandt_series(hurwitz())


def test_t1_is_identity(hurwitz_series):
    t1 = hurwitz_series.brandt_matrix(1)
    r = hurwitz_series.size
    assert t1 == [[Fraction(1 if i == j else 0) for j in range(r)]
                  for i in range(r)]


def test_hurwitz_theta_counts_hurwitz_quaternions(hurwitz_series):
    # One class: theta = (1/24) + sum_n r(n) q^n / 24 with r(n) the number of
    # Hurwitz quaternions of norm n, known to be 24 * sigma(odd part of n).
    def sigma_odd(n):
        while n % 2 == 0:
            n //= 2
        return sum(d for d in range(1, n + 1) if n % d == 0)

    coeffs = hurwitz_series.theta_series(0, 0, 10)
    assert coeffs[0] == Fraction(1, 24)
    for n in range(1, 11):
        assert coeffs[n] == sigma_odd(n)


def test_brandt_entries_nonnegative(hurwitz_series):
    for n in (1, 2, 3, 5, 8):
        for row in hurwitz_series.brandt_matrix(n):
            for x in row:
                assert x >= 0


def test_theta_prec_zero(hurwitz_series):
    assert hurwitz_series.theta_series(0, 0, 0) == [Fraction(1, 24)]


def test_brandt_rejects_nonpositive_n(hurwitz_series):
    with pytest.raises(ValueError):
        hurwitz_series.brandt_matrix(0)


def test_brandt_agrees_with_sublattice_count():
    # Cross-check the counting formula against the sublattice definition:
    # T(n)_{i,j} = #{J subset I_j of index n^2 with J right-equivalent to I_i}.
    from quatlat.classes import _stable_index_square_sublattices
    o = hurwitz()
    bs = brandt_series(o)
    i_rep = bs.class_set.representatives[0]  # == O itself here
    for n in (2, 3, 4):
        subs = [s for s in _stable_index_square_sublattices(o, n)]
        count = sum(1 for s in subs if is_right_equivalent(s, i_rep))
        assert bs.brandt_matrix(n)[0][0] == count
