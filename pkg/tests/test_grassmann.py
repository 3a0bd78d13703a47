from fractions import Fraction

import pytest
from hypothesis import given, settings

from helpers import REG4, elements
from superheis.grassmann import (
    GeneratorRegistry,
    ParityError,
    PhasedElement,
    RegistryError,
    berezin_integrate,
    exp_nilpotent,
    left_derivative,
    merge_sign,
)
from superheis.scalars import CQ, I

REG = GeneratorRegistry.from_groups(zeta=["zeta1", "zeta2"], parameter=["a", "b"])
Z1, Z2, A, B = REG.gens("zeta1", "zeta2", "a", "b")


def test_generators_anticommute_and_square_to_zero():
    assert Z1 * Z2 == -(Z2 * Z1)
    assert (Z1 * Z1).is_zero()


def test_merge_sign():
    assert merge_sign(0b10, 0b01) == -1
    assert merge_sign(0b01, 0b10) == 1


def test_body_soul_parity():
    x = REG.scalar(3) + Z1 * Z2 + A
    assert x.body() == 3
    assert x.soul() == Z1 * Z2 + A
    assert x.parity() is None
    assert (Z1 * Z2).is_even() and A.is_odd()


def test_star_of_generators():
    assert Z1.star() == Z1.scale(-I)
    assert (Z1 * Z2).star() == Z1 * Z2
    assert A.scale(CQ(1, 2)).star() == A.scale(CQ(-2, -1))


def test_berezin_convention():
    # d zeta_2 d zeta_1 (zeta_1 zeta_2) = 1, lowest index innermost
    assert (Z1 * Z2).berezin() == REG.one()
    assert (Z2 * Z1).berezin() == -REG.one()
    assert (A * Z1 * Z2).berezin() == A
    assert berezin_integrate(Z1, ["zeta1"]) == REG.one()


def test_berezin_rejects_non_zeta_generators():
    with pytest.raises(RegistryError):
        berezin_integrate(A, ["a"])


def test_left_derivative_signs():
    assert left_derivative(Z1 * Z2, "zeta2") == -Z1
    assert (Z1 * Z2).derivative("zeta1") == Z2


def test_exp_of_even_nilpotent():
    assert (Z1 * Z2).exp() == REG.one() + Z1 * Z2
    with pytest.raises(ParityError):
        Z1.exp()


def test_exp_nilpotent_with_phase():
    e = exp_nilpotent(Z1 * Z2, Fraction(1, 3))
    assert e.phases() == [Fraction(1, 3)]
    assert e.part(Fraction(1, 3)) == REG.one() + Z1 * Z2


def test_substitute_needs_odd_images():
    with pytest.raises(ParityError):
        Z1.substitute({"zeta1": A * B})
    assert (Z1 * Z2).shift({"zeta1": A}) == (Z1 + A) * Z2


def test_generator_cap(monkeypatch):
    with pytest.raises(RegistryError):
        GeneratorRegistry.from_groups(parameter=[f"x{i}" for i in range(25)])
    monkeypatch.setenv("SUPERHEIS_MAX_GENERATORS", "3")
    with pytest.raises(RegistryError):
        GeneratorRegistry.from_groups(parameter=["x", "y", "z", "w"])


def test_mixed_registries_are_rejected():
    other = GeneratorRegistry.from_groups(parameter=["c"])
    with pytest.raises(RegistryError):
        A * other.gen("c")


def test_phased_star_negates_phase():
    p = PhasedElement.of(REG.one() + A * B, Fraction(2, 5))
    assert p.star().phases() == [Fraction(-2, 5)]
    assert (p * p.star()).phases() == [Fraction(0)]


@settings(max_examples=200, deadline=None)
@given(elements(), elements(), elements())
def test_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=200, deadline=None)
@given(elements(parity=1), elements(parity=1), elements(parity=0))
def test_graded_commutativity(x, y, e):
    assert x * y == -(y * x)
    assert x * e == e * x


@settings(max_examples=200, deadline=None)
@given(elements(), elements())
def test_star_is_antimultiplicative_involution(a, b):
    assert (a * b).star() == b.star() * a.star()
    assert a.star().star() == a


@settings(max_examples=200, deadline=None)
@given(elements(), elements())
def test_J_is_an_automorphism(a, b):
    assert (a * b).J() == a.J() * b.J()
    assert a.J().J() == a


@settings(max_examples=100, deadline=None)
@given(elements(parity=0), elements(parity=0))
def test_exp_of_commuting_sum(a, b):
    a, b = a.soul(), b.soul()
    assert (a + b).exp() == a.exp() * b.exp()


@settings(max_examples=100, deadline=None)
@given(elements(REG4, 4), elements(REG4, 4))
def test_derivative_is_a_graded_derivation(a, b):
    a = a.odd_part()
    d = lambda x: x.derivative("q1")  # noqa: E731
    assert d(a * b) == d(a) * b - a * d(b)
