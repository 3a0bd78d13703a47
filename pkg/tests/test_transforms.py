from fractions import Fraction

import pytest

from superheis import transforms as tr
from superheis.grassmann import ParityError, PhasedElement, RegistryError
from superheis.scalars import CQ, I
from superheis.superfunctions import AntisymmetricMatrix, FunctionSpace, canonical_G


def verdicts(rep, prefix):
    return {r.verdict for r in rep.records if r.name.startswith(prefix)}


# -- fermionic group --------------------------------------------------------


def test_group_elements_need_odd_parameters():
    sp = FunctionSpace.standard(1, "Pi", "Theta")
    P, T = sp.family("Pi")[0], sp.family("Theta")[0]
    with pytest.raises(ParityError):
        tr.FHGroupElement([P * T], [T])
    with pytest.raises(ValueError):
        tr.FHGroupElement([], [])


def test_diamond_and_pi1_laws_differ_by_time_reversal():
    sp = FunctionSpace.standard(1, "Pi", "Theta", "Pi_", "Theta_")
    g = tr.FHGroupElement(sp.family("Pi"), sp.family("Theta"), Fraction(1, 2))
    h = tr.FHGroupElement(sp.family("Pi_"), sp.family("Theta_"), 3)
    rev = tr.time_reversal
    assert rev(tr.fh_compose_diamond(rev(g), rev(h))) == tr.fh_compose_pi1(g, h)


# -- pi1 and Weyl -------------------------------------------------------------


def test_pi1_carries_the_central_phase():
    sp = FunctionSpace.standard(2, "Pi", "Theta")
    z1, z2 = sp.zeta()
    g = tr.FHGroupElement(sp.family("Pi"), sp.family("Theta"), Fraction(1, 4))
    assert tr.pi1_apply(g, z1 * z2, sp).phases() == [Fraction(1, 4)]


def test_pi1_closed_form_m1():
    sp = FunctionSpace.standard(1, "Pi", "Theta")
    (z,), (P,), (T,) = sp.zeta(), sp.family("Pi"), sp.family("Theta")
    g = tr.FHGroupElement([P], [T], 0)
    # exp(i T z + i T P / 2) (z + P)
    e = (T * z + (T * P).scale(Fraction(1, 2))).scale(I).exp()
    assert tr.pi1_apply(g, z, sp) == PhasedElement.of(e * (z + P))


@pytest.mark.parametrize("m", [1, 2])
def test_pi1_homomorphism_and_unitarity(m):
    rep = tr.pi1_homomorphism_check(m)
    rep.extend(tr.pi1_unitarity_check(m))
    assert rep.ok
    assert verdicts(rep, "pi1.homomorphism") == {"pass"}
    assert verdicts(rep, "pi1.diamond-reversed") == {"pass"}
    assert verdicts(rep, "pi1.diamond-literal") == {"mismatch"}


def test_weyl_factorization():
    rep = tr.weyl_factorization_check(2)
    assert rep.ok
    assert verdicts(rep, "weyl.literal") == {"mismatch"}
    with pytest.raises(ValueError):
        tr.weyl_factorization_check(4)


# -- Fourier-Wigner ------------------------------------------------------------


def test_fourier_wigner_of_constants_m1():
    # int dz exp(i T z) = int dz (1 + i T z) = -i T with the lowest index innermost
    sp = FunctionSpace.standard(1, "Pi", "Theta")
    one = sp.registry.one()
    T = sp.family("Theta")[0]
    assert tr.fourier_wigner(one, one, sp) == T.scale(-I)


def test_fourier_wigner_rejects_parameter_dependence():
    sp = FunctionSpace.standard(1, "Pi", "Theta")
    with pytest.raises(RegistryError):
        tr.fourier_wigner(sp.family("Pi")[0], sp.registry.one(), sp)


def test_fourier_wigner_at_zero():
    for m in (1, 2):
        assert verdicts(tr.fw_zero_check(m), "fw.at-zero") == {"pass"}


def test_inner_identity_factor_is_constant():
    rep = tr.fw_inner_identity_check(1)
    assert verdicts(rep, "fw.inner") <= {"pass", "exact-discrepancy"}
    assert rep.factors("fw.inner") == {str(CQ(0, -1))}
    assert verdicts(tr.fw_inner_identity_check(2), "fw.inner") == {"pass"}


def test_covariance_readings():
    rep = tr.fw_covariance_check(1)
    assert verdicts(rep, "fw.covariance-derived") == {"pass"}
    assert verdicts(rep, "fw.covariance.") == {"mismatch"}


# -- Bargmann -------------------------------------------------------------------


def test_bargmann_of_one():
    # 2^-1 int dzeta exp(zeta1 zeta2/2 - zeta.z + z1 z2): the top zeta coefficient
    # is (1/2)(1 + z1 z2) - z1 z2 (1 + z1 z2) = (1 - z1 z2)/2
    ctx = tr.BargmannContext(canonical_G(2))
    z1, z2 = ctx.z
    one = ctx.registry.one()
    assert tr.bargmann(one, ctx) == (one - z1 * z2).scale(Fraction(1, 4))


def test_bargmann_needs_even_size_and_square_pfaffian():
    with pytest.raises(ValueError):
        tr.BargmannContext(AntisymmetricMatrix([[0, 2], [-2, 0]]))


def test_fock_calibration():
    ctx = tr.BargmannContext(canonical_G(2))
    assert ctx.weight_sign == -1
    assert ctx.calibration == CQ(-1)
    assert ctx.fock(ctx.registry.one(), ctx.registry.one()) == ctx.registry.one()
    assert verdicts(tr.fock_orthonormality_check(ctx), "fock.orthonormal") == {"pass"}


def test_abstract_composite_round_trip():
    ctx = tr.BargmannContext(canonical_G(2))
    F = ctx.z_monomial((0, 1))
    assert ctx.to_composite(ctx.to_abstract(F)) == F
    with pytest.raises(RegistryError):
        ctx.to_abstract(ctx.space.zeta()[0])


def test_hermite_images_share_one_factor():
    for G, factor in ((canonical_G(2), Fraction(1, 4)), (canonical_G(4), Fraction(1, 16))):
        rep = tr.bargmann_hermite_check(tr.BargmannContext(G))
        assert verdicts(rep, "bargmann.hermite") == {"exact-discrepancy"}
        assert rep.factors("bargmann.hermite") == {str(factor)}


def test_hermite_images_with_scaled_G():
    rep = tr.bargmann_hermite_check(tr.BargmannContext(AntisymmetricMatrix([[0, 4], [-4, 0]])))
    assert verdicts(rep, "bargmann.hermite") == {"pass"}


def test_beta_intertwines():
    ctx = tr.BargmannContext(canonical_G(2), "rho", "sigma")
    rep = tr.beta_intertwining_check(ctx)
    assert verdicts(rep, "beta.intertwining") == {"pass"}
    with pytest.raises(RegistryError):
        tr.beta_apply(ctx.registry.one(), tr.BargmannContext(canonical_G(2)))


def test_z_law_has_factor_one_half():
    rep = tr.z_group_law_check(tr.BargmannContext(canonical_G(2), "Pi_", "Theta_"))
    assert rep.factors("z-law") == {"1/2"}
