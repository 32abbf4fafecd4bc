"""Lattice canonicalization, arithmetic, colons, orders, duals, indices."""

import random
from fractions import Fraction

import pytest

from quatlat.algebra import matrix_algebra, quaternion_algebra
from quatlat.lattice import Lattice, Order, generalized_index
from conftest import random_lattice


M2 = matrix_algebra(2)
Q13 = quaternion_algebra(-1, -3)


def test_canonical_form_is_equality():
    rng = random.Random(101)
    for _ in range(40):
        lat = random_lattice(rng, M2)
        # Re-presenting with shuffled, redundant generators gives equality.
        rows = lat.basis_matrix()
        extra = [[a + b for a, b in zip(rows[0], rows[1])]] + rows
        rng.shuffle(extra)
        assert Lattice.from_rows(M2, extra) == lat
        assert hash(Lattice.from_rows(M2, extra)) == hash(lat)


def test_gcd_normalization():
    lat1 = Lattice.from_rows(M2, [[2, 0, 0, 0], [0, 2, 0, 0],
                                  [0, 0, 2, 0], [0, 0, 0, 2]])
    lat2 = Lattice.from_rows(M2, [[Fraction(6, 3), 0, 0, 0], [0, 2, 0, 0],
                                  [0, 0, 2, 0], [0, 0, 0, 2]])
    assert lat1 == lat2
    assert lat1.den == 1


def test_rank_deficient_rejected():
    with pytest.raises(ValueError):
        Lattice.from_rows(M2, [[1, 0, 0, 0], [2, 0, 0, 0],
                               [0, 1, 0, 0], [3, 1, 0, 0]])


def test_add_and_intersect_against_membership():
    rng = random.Random(103)
    for _ in range(25):
        a = random_lattice(rng, M2)
        b = random_lattice(rng, M2)
        s = a.add(b)
        assert a.is_sublattice_of(s) and b.is_sublattice_of(s)
        i = a.intersect(b)
        assert i.is_sublattice_of(a) and i.is_sublattice_of(b)
        # Modular identity of indices: [S:A][A:I] = [S:B][B:I].
        assert (a.index_in(s) * i.index_in(a)) == (b.index_in(s) * i.index_in(b))
        # Random members of the intersection lie in both.
        for x in i.basis_elements():
            assert a.contains(x) and b.contains(x)


def test_colon_definitions():
    rng = random.Random(107)
    for alg in (M2, Q13):
        for _ in range(15):
            i = random_lattice(rng, alg)
            j = random_lattice(rng, alg)
            cl = i.colon_left(j)
            for x in cl.basis_elements():
                for g in j.basis_elements():
                    assert i.contains(alg.mul(x, g))
            cr = i.colon_right(j)
            for x in cr.basis_elements():
                for g in j.basis_elements():
                    assert i.contains(alg.mul(g, x))


def test_orders_are_orders():
    rng = random.Random(109)
    for alg in (M2, Q13):
        for _ in range(10):
            i = random_lattice(rng, alg)
            for o in (i.left_order(), i.right_order()):
                assert o.lattice.contains(alg.one)
                basis = o.lattice.basis_elements()
                for x in basis:
                    for y in basis:
                        assert o.lattice.contains(alg.mul(x, y))


def test_trace_dual_pairing():
    rng = random.Random(113)
    for alg in (M2, Q13):
        for _ in range(15):
            i = random_lattice(rng, alg)
            d = i.trace_dual()
            for x in d.basis_elements():
                for y in i.basis_elements():
                    assert alg.reduced_trace(alg.mul(x, y)).denominator == 1
            assert d.trace_dual() == i


def test_index_multiplicativity_and_scaling():
    rng = random.Random(127)
    for _ in range(25):
        a = random_lattice(rng, M2)
        b = random_lattice(rng, M2)
        c = random_lattice(rng, M2)
        assert b.index_in(a) * c.index_in(b) == c.index_in(a)
        assert generalized_index(a, b) == b.index_in(a)
        assert a.scale(2).index_in(a) == 16  # 2^dim


def test_json_round_trip():
    rng = random.Random(131)
    for _ in range(20):
        lat = random_lattice(rng, Q13)
        assert Lattice.from_json(Q13, lat.to_json()) == lat


def test_order_validation():
    with pytest.raises(ValueError):
        Order(Lattice.from_rows(Q13, [[2, 0, 0, 0], [0, 1, 0, 0],
                                      [0, 0, 1, 0], [0, 0, 0, 1]]))


def test_reduced_discriminant_values():
    lip = Order(Lattice.from_rows(quaternion_algebra(-1, -1),
                                  [[1, 0, 0, 0], [0, 1, 0, 0],
                                   [0, 0, 1, 0], [0, 0, 0, 1]]))
    assert lip.reduced_discriminant == 4
    big = Order(Lattice.from_rows(Q13, [[1, 0, 0, 0], [0, 2, 0, 0],
                                        [0, 0, 2, 0], [0, 0, 0, 2]]))
    assert big.reduced_discriminant == 96
