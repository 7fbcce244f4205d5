import hypothesis.strategies as st
import pytest
from hypothesis import given

from residua.lattice import (
    ZERO,
    DimensionError,
    DomainError,
    Term,
    dot,
    exact_determinant,
    make_primitive,
    normal_vector,
    rank,
)
from residua.oracle import cofactor_determinant


def test_dot():
    assert dot((1, 2), (2, 3)) == 8
    assert dot((3, 2), (2, 3)) == 12
    assert dot((1, 1, 1, 1), (0, 0, 0, 0)) == 0
    assert dot((10**30, 1), (10**30, 1)) == 10**60 + 1


def test_dot_length_mismatch():
    with pytest.raises(DimensionError):
        dot((1, 2), (1, 2, 3))


@pytest.mark.parametrize("v, expected", [((2, 4), (1, 2)), ((1, 2), (1, 2)), ((6, 4), (3, 2)),
                                         ((-4, 6), (-2, 3)), ((0, 5), (0, 1))])
def test_make_primitive(v, expected):
    assert make_primitive(v) == expected


def test_make_primitive_zero():
    with pytest.raises(DomainError):
        make_primitive((0, 0))


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=5).filter(any), st.integers(1, 20))
def test_make_primitive_scaling(v, k):
    p = make_primitive(v)
    assert make_primitive([k * x for x in v]) == p
    assert make_primitive(p) == p


def test_determinant_examples():
    assert exact_determinant([(6, 2), (2, 3)]) == 14
    assert exact_determinant([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 1
    assert exact_determinant([(8, 0), (2, 3)]) == 24
    assert exact_determinant([]) == 1


def test_determinant_needs_square():
    with pytest.raises(DimensionError):
        exact_determinant([(1, 2, 3), (4, 5, 6)])


square = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n))


@given(square)
def test_determinant_matches_cofactor(m):
    assert exact_determinant(m) == cofactor_determinant(m)


@given(square, st.data())
def test_determinant_alternating(m, data):
    n = len(m)
    if n < 2:
        return
    i, j = data.draw(st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))
    swapped = list(m)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert exact_determinant(swapped) == -exact_determinant(m)
    repeated = list(m)
    repeated[j] = repeated[i]
    assert exact_determinant(repeated) == 0


@given(st.integers(2, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n),
                       min_size=n - 1, max_size=n - 1)))
def test_normal_vector_is_orthogonal(rows):
    v = normal_vector(rows)
    assert all(dot(v, r) == 0 for r in rows)
    assert any(v) == (rank(rows) == len(rows))


def test_rank():
    assert rank([(1, 2), (2, 4)]) == 1
    assert rank([(1, 0, 0), (0, 1, 0), (1, 1, 0)]) == 2
    assert rank([]) == 0


def test_term_and_zero():
    t = Term(14, (7, 4))
    assert not t.is_zero and t.coeff == 14
    assert ZERO.is_zero
    with pytest.raises(DomainError):
        Term(0, (1, 1))
