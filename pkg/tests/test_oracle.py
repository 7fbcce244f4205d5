import pytest

from residua.lattice import ZERO, DomainError, Term
from residua.oracle import (
    CaratheodoryOracle,
    caratheodory_membership,
    closure_oracle,
    cofactor_determinant,
    hull2d_oracle,
    jacobian_symbolic_oracle,
    socle_oracle,
)

from conftest import EXAMPLE


def test_hull2d():
    assert hull2d_oracle(EXAMPLE) == [(1, 2), (3, 2)]
    assert hull2d_oracle([(1, 0), (0, 1)]) == [(1, 1)]
    assert hull2d_oracle([(3, 0), (1, 1), (0, 3)]) == [(1, 2), (2, 1)]
    assert hull2d_oracle([(2, 2)]) == []
    with pytest.raises(DomainError):
        hull2d_oracle([(1, 0, 0)])


def test_caratheodory():
    assert caratheodory_membership(EXAMPLE, (6, 2))
    assert caratheodory_membership(EXAMPLE, (6, 1))  # 2/3 (8,0) + 1/3 (2,3)
    assert not caratheodory_membership(EXAMPLE, (1, 1))
    assert caratheodory_membership([(2, 0), (0, 2)], (1, 1))
    assert not caratheodory_membership([(2, 0), (0, 2)], (0, 0))
    assert not caratheodory_membership([(2, 0), (0, 2)], (1, 0))


def test_caratheodory_three_dimensions():
    oracle = CaratheodoryOracle([(3, 0, 0), (0, 3, 0), (0, 0, 3)])
    assert (1, 1, 1) in oracle
    assert (1, 1, 0) not in oracle
    assert (0, 0, 3) in oracle


def test_jacobian_oracle():
    assert jacobian_symbolic_oracle([(6, 2), (2, 3)]) == Term(14, (7, 4))
    assert jacobian_symbolic_oracle([(1, 0), (0, 1)]) == Term(1, (0, 0))
    assert jacobian_symbolic_oracle([(2, 0), (1, 1)]) == Term(2, (2, 0))
    assert jacobian_symbolic_oracle([(1, 1), (2, 2)]) is ZERO
    with pytest.raises(DomainError):
        jacobian_symbolic_oracle([(1, 0, 0, 0)] * 4)


def test_small_oracles():
    assert cofactor_determinant([(8, 0), (2, 3)]) == 24
    assert closure_oracle([(2, 0), (0, 2)]) == [(0, 2), (1, 1), (2, 0)]
    assert socle_oracle([(3, 0), (1, 1), (0, 2)]) == [(0, 1), (2, 0)]


def test_caratheodory_detects_missing_facet():
    from itertools import product

    from residua.polyhedron import NewtonPolyhedron, build_newton_polyhedron, contains

    np = build_newton_polyhedron(EXAMPLE, 2)
    oracle = CaratheodoryOracle(EXAMPLE)
    box = list(product(range(9), range(7)))
    for drop, f in enumerate(np.facets):
        if f.compact:
            broken = NewtonPolyhedron(2, np.points, np.facets[:drop] + np.facets[drop + 1:])
            assert any(contains(broken, q) != (q in oracle) for q in box)
