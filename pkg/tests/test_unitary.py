from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import rationals
from superheis import unitary as un
from superheis.scalars import CQ, I


def sym_matrices(n):
    def build(vals):
        rows = [[Fraction(0)] * n for _ in range(n)]
        k = 0
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = vals[k]
                k += 1
        return rows

    size = n * (n + 1) // 2
    return st.lists(rationals, min_size=size, max_size=size).map(build)


# -- super Hilbert spaces -------------------------------------------------------


def test_super_hermitian_form_blocks():
    H = un.SuperHilbertSpace.standard(1, 1)
    e, o = ([1], [0]), ([0], [1])
    assert un.super_hermitian_form(H, e, e) == CQ(1)
    assert un.super_hermitian_form(H, o, o) == I
    assert un.super_hermitian_form(H, e, o) == CQ(0)


def test_form_is_antilinear_in_the_first_slot():
    H = un.SuperHilbertSpace.standard(2, 0)
    v, w = ([CQ(0, 1), 0], []), ([1, 0], [])
    assert un.super_hermitian_form(H, v, w) == CQ(0, -1)


def test_non_homogeneous_vectors_are_rejected():
    H = un.SuperHilbertSpace.standard(1, 1)
    with pytest.raises(ValueError):
        un.super_hermitian_form(H, ([1], [1]), ([1], [0]))
    with pytest.raises(ValueError):
        un.super_hermitian_form(H, ([1, 0], [0]), ([1], [0]))


def test_gram_matrices_must_be_positive_definite():
    with pytest.raises(ValueError):
        un.SuperHilbertSpace([[1, 0], [0, -1]], [[1]])
    with pytest.raises(ValueError):
        un.SuperHilbertSpace([[1, CQ(0, 1)], [CQ(0, 1), 1]], [])
    assert un.is_hermitian_positive_definite([[CQ(2), CQ(0, 1)], [CQ(0, -1), CQ(2)]])
    assert not un.is_hermitian_positive_definite([[CQ(1), CQ(0, 2)], [CQ(0, -2), CQ(1)]])


def test_super_hermitian_symmetry():
    space = un.SuperHilbertSpace([[2, 1], [1, 2]], [[3, CQ(0, 1)], [CQ(0, -1), 1]])
    rep = un.super_hermitian_check(space)
    assert rep.ok and len(rep.records) == 16


# -- Stone-von Neumann test -----------------------------------------------------


def test_svn_branches():
    assert un.svn_verdict(un.SupersymplecticFormData([[1, 0], [0, 1]])) == un.EXISTS_UNIQUE
    assert un.svn_verdict(un.SupersymplecticFormData([[1, 0], [0, -1]])) == un.NONE
    assert un.svn_verdict(un.SupersymplecticFormData([[0]])) == un.NONE


def test_svn_input_validation():
    with pytest.raises(ValueError):
        un.SupersymplecticFormData([[1, 2], [3, 1]])
    with pytest.raises(ValueError):
        un.svn_verdict(un.SupersymplecticFormData([[1]], beta=0))
    with pytest.raises(ValueError):
        un.SupersymplecticFormData([[1]], omega_even=[[1, 0], [0, 1]])


def test_form_json_round_trip():
    form = un.SupersymplecticFormData([[2, "1/2"], ["1/2", 1]], beta="3/2", omega_even=[[0, 1], [-1, 0]])
    assert un.SupersymplecticFormData.from_json(form.to_json()) == form


def test_charpoly_small():
    # det(x I - [[2, 1], [1, 2]]) = x^2 - 4x + 3
    assert un.charpoly([[2, 1], [1, 2]]) == [1, -4, 3]


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(sym_matrices))
def test_sylvester_agrees_with_eigenvalue_signs(A):
    assert un.svn_verdict(un.SupersymplecticFormData(A)) == un.eigen_sign_verdict(A)


# -- Harish-Chandra pair ---------------------------------------------------------


def test_sh31_brackets():
    pair = un.sh31_pair()
    table = pair.bracket_table()
    assert table[("a", "b")] == {"c": 1}
    assert table[("b", "a")] == {"c": -1}
    assert table[("alpha", "alpha")] == {}
    assert table[("c", "a")] == {}


def test_group_element_shape():
    g = un.sh31_pair().group_element(1, 2, 3)
    assert g[0][1:3] == [1, 3] and g[1][2] == 2


def test_pair_validation_results():
    rep = un.hc_pair_validate()
    assert rep.ok
    bad = {r.name for r in rep.records if r.verdict != "pass"}
    assert bad == {"hc.odd-anticommutator-central.alpha"}
