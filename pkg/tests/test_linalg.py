from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from rhoghn import linalg
from rhoghn.errors import InconsistentSystem, SingularSystem, ZeroVector

small = st.integers(min_value=-6, max_value=6)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def test_primitive_scale_examples():
    assert linalg.primitive_scale([F(2, 3), 0, F(1, 3)]) == (2, 0, 1)
    assert linalg.primitive_scale([-4, -2]) == (-2, -1)
    assert linalg.primitive_scale([5]) == (1,)
    with pytest.raises(ZeroVector):
        linalg.primitive_scale([0, 0])


def test_solve_errors():
    with pytest.raises(SingularSystem):
        linalg.bareiss_solve([[1, 2], [2, 4]], [1, 2])
    with pytest.raises(InconsistentSystem):
        linalg.solve([[1, 0], [0, 1], [1, 1]], [1, 1, 3])
    with pytest.raises(SingularSystem):
        linalg.solve([[1, 1]], [1])


def test_overdetermined_consistent():
    assert linalg.solve([[1, 0], [0, 1], [1, 1]], [1, 2, 3]) == (1, 2)


def test_nullspace_and_rank():
    ns = linalg.nullspace([[1, -1, 0], [0, 1, -1]])
    assert ns == [(1, 1, 1)]
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.nullspace([], 2) == [(1, 0), (0, 1)]


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), st.lists(small, min_size=n, max_size=n))))
def test_bareiss_agrees_with_rref(data):
    a, b = data
    assume(linalg.determinant(a) != 0)
    x = linalg.bareiss_solve(a, b)
    assert linalg.matvec(a, x) == tuple(F(v) for v in b)
    assert linalg.solve(a, b) == x


@given(st.integers(1, 4).flatmap(square))
def test_determinant_multiplicative_and_inverse(a):
    d = linalg.determinant(a)
    assert (d == 0) == (linalg.rank(a) < len(a))
    if d != 0:
        inv = linalg.inverse(a)
        prod = [[linalg.dot(row, col) for col in zip(*inv)] for row in a]
        assert prod == [[int(i == j) for j in range(len(a))] for i in range(len(a))]


@given(st.lists(st.fractions(max_denominator=9, min_value=-9, max_value=9), min_size=1, max_size=5),
       st.fractions(min_value=F(1, 9), max_value=9, max_denominator=9))
def test_primitive_scale_invariant_under_positive_scaling(v, c):
    assume(any(v))
    p = linalg.primitive_scale(v)
    assert linalg.primitive_scale([c * x for x in v]) == p
    assert linalg.primitive_scale(p) == p
    assert linalg.is_primitive(p)
