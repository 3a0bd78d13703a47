from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superheis import linalg
from superheis.scalars import CQ


def antisym(entries, m):
    rows = [[Fraction(0)] * m for _ in range(m)]
    k = 0
    for i in range(m):
        for j in range(i + 1, m):
            rows[i][j] = entries[k]
            rows[j][i] = -entries[k]
            k += 1
    return rows


def test_det_and_inverse():
    a = [[2, 1], [1, 3]]
    assert linalg.det(linalg.to_matrix(a)) == 5
    inv = linalg.inverse(linalg.to_matrix(a))
    assert linalg.matmul(linalg.to_matrix(a), inv, Fraction(0)) == linalg.identity(2)


def test_singular_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        linalg.inverse(linalg.to_matrix([[1, 2], [2, 4]]))


def test_pfaffian_small_cases():
    assert linalg.pfaffian(linalg.to_matrix([[0, 3], [-3, 0]])) == 3
    # Pf of the 4x4 matrix is a12 a34 - a13 a24 + a14 a23
    m = antisym([Fraction(x) for x in (1, 2, 3, 4, 5, 6)], 4)
    assert linalg.pfaffian(m) == 1 * 6 - 2 * 5 + 3 * 4


def test_pfaffian_rejects_odd_size():
    with pytest.raises(ValueError):
        linalg.pfaffian(linalg.to_matrix([[0]]))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 4, 6]).flatmap(
    lambda m: st.tuples(st.just(m), st.lists(st.fractions(-4, 4, max_denominator=3), min_size=m * (m - 1) // 2,
                                             max_size=m * (m - 1) // 2))))
def test_pfaffian_squared_is_det(data):
    m, entries = data
    a = antisym(entries, m)
    assert linalg.pfaffian(a) ** 2 == linalg.det(a)


def test_sylvester():
    assert linalg.is_positive_definite(linalg.to_matrix([[2, 1], [1, 2]]))
    assert not linalg.is_positive_definite(linalg.to_matrix([[1, 0], [0, -1]]))
    assert linalg.leading_minors(linalg.to_matrix([[2, 1], [1, 2]])) == [2, 3]


def test_rational_sqrt():
    assert linalg.rational_sqrt(Fraction(9, 4)) == CQ(Fraction(3, 2))
    assert linalg.rational_sqrt(-4) == CQ(0, 2)
    with pytest.raises(ValueError):
        linalg.rational_sqrt(2)
