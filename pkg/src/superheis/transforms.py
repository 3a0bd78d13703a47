"""The pi_1 representation, Fourier-Wigner and Bargmann transforms, Fock product, beta.

Parameter families used by the standard spaces: ``Pi``/``Theta`` for the
transform variables, ``alpha``..``delta`` for covariance shifts, ``rho``/
``sigma`` for the beta action, ``Pi_``/``Theta_`` for a second group element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .grassmann import GrassmannElement, ParityError, PhasedElement, RegistryError
from .report import Report
from .scalars import CQ, I, as_fraction
from .superfunctions import (
    AntisymmetricMatrix,
    FunctionSpace,
    HermiteFamily,
    as_antisymmetric,
    bilinear,
    dot,
    gaussian,
    q_inner,
    quadratic_form,
)

__all__ = [
    "FHGroupElement",
    "fh_compose_diamond",
    "fh_compose_polarized",
    "pi1_apply",
    "weyl_factorization_check",
    "pi1_homomorphism_check",
    "pi1_unitarity_check",
    "fourier_wigner",
    "fw_zero_check",
    "fw_inner_identity_check",
    "fw_covariance_check",
    "covariance_lhs",
    "covariance_rhs",
    "covariance_rhs_derived",
    "fh_compose_pi1",
    "time_reversal",
    "BargmannContext",
    "bargmann",
    "fock_inner",
    "beta_apply",
    "beta_apply_literal",
    "beta_intertwining_check",
    "bargmann_hermite_check",
    "bargmann_gaussian_relation_check",
    "z_group_law_check",
    "fock_orthonormality_check",
]

HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# fermionic Heisenberg group elements


def _central(registry, t) -> GrassmannElement:
    if isinstance(t, GrassmannElement):
        if not t.is_even():
            raise ParityError("central coordinate t must be even")
        return t
    return registry.scalar(as_fraction(t))


@dataclass(frozen=True)
class FHGroupElement:
    """``(Pi, Theta, t)`` with odd ``Pi, Theta`` and even ``t`` (rational body plus even soul)."""

    Pi: tuple[GrassmannElement, ...]
    Theta: tuple[GrassmannElement, ...]
    t: GrassmannElement

    def __init__(self, Pi: Sequence[GrassmannElement], Theta: Sequence[GrassmannElement], t=0):
        Pi, Theta = tuple(Pi), tuple(Theta)
        if len(Pi) != len(Theta) or not Pi:
            raise ValueError("Pi and Theta must be nonempty and of equal length")
        for x in Pi + Theta:
            if not x.is_odd():
                raise ParityError("Pi and Theta entries must be odd")
        object.__setattr__(self, "Pi", Pi)
        object.__setattr__(self, "Theta", Theta)
        object.__setattr__(self, "t", _central(Pi[0].registry, t))

    @property
    def m(self) -> int:
        return len(self.Pi)

    @property
    def registry(self):
        return self.Pi[0].registry


def fh_compose_diamond(g: FHGroupElement, h: FHGroupElement) -> FHGroupElement:
    """``t'' = t + t' + (Pi.Theta' + Theta.Pi')/2``."""
    inc = dot(g.Pi, h.Theta) + dot(g.Theta, h.Pi)
    return FHGroupElement(
        [a + b for a, b in zip(g.Pi, h.Pi)],
        [a + b for a, b in zip(g.Theta, h.Theta)],
        g.t + h.t + inc.scale(HALF),
    )


def fh_compose_polarized(g: FHGroupElement, h: FHGroupElement) -> FHGroupElement:
    """``t'' = t + t' + Pi.Theta'``."""
    return FHGroupElement(
        [a + b for a, b in zip(g.Pi, h.Pi)],
        [a + b for a, b in zip(g.Theta, h.Theta)],
        g.t + h.t + dot(g.Pi, h.Theta),
    )


# ---------------------------------------------------------------------------
# pi_1


def _shift(f, zetas: Sequence[str], by: Sequence[GrassmannElement]):
    return f.shift({z: v for z, v in zip(zetas, by) if not v.is_zero()})


def pi1_apply(g: FHGroupElement, f, space: FunctionSpace) -> PhasedElement:
    """``U(t) exp(i(Theta.zeta + Theta.Pi/2)) f(zeta + Pi)``.

    The rational body of ``t`` becomes the central phase ``U(t)``; any even
    soul of ``t`` stays inside the exponential.
    """
    if g.m != space.m:
        raise ValueError("group element and function space have different m")
    zeta = space.zeta()
    t_body = g.t.body()
    if t_body.im:
        raise ValueError("central coordinate must have a real body")
    expo = (dot(g.Theta, zeta) + dot(g.Theta, g.Pi).scale(HALF) + g.t.soul()).scale(I)
    factor = PhasedElement(space.registry, {t_body.re: expo.exp()})
    return factor * PhasedElement.of(_shift(f, space.zetas, g.Pi))


def _exp_operator(op, f, limit: int = 64):
    """``sum_n op^n f / n!`` for a nilpotent operator ``op``."""
    out = f
    term = f
    for k in range(1, limit):
        term = op(term) / k
        if term.is_zero():
            return out
        out = out + term
    raise ValueError("operator series did not terminate")


def weyl_operator_lhs(space: FunctionSpace, Pi, Theta, f):
    """``exp(i(Theta X + Pi D)) f`` summed as an operator series, ``D_j = -i d_j``."""
    zeta = space.zeta()
    tx = dot(Theta, zeta)

    def op(h):
        out = (tx * h).scale(I)
        for pj, zj in zip(Pi, space.zetas):
            out = out + pj * h.derivative(zj)
        return out

    return _exp_operator(op, f)


def weyl_factorization_check(m: int) -> Report:
    """Operator series against ``exp(i Theta.Pi/2) exp(i Theta X) exp(i Pi D)`` on the basis.

    The literal factor ``exp(Theta.Pi/2)`` (no ``i``) is recorded separately.
    """
    if not 1 <= m <= 3:
        raise ValueError("weyl_factorization_check supports 1 <= m <= 3")
    sp = FunctionSpace.standard(m, "Pi", "Theta")
    Pi, Theta = sp.family("Pi"), sp.family("Theta")
    rep = Report("weyl")
    tp = dot(Theta, Pi)
    tx = dot(Theta, sp.zeta())
    g = FHGroupElement(Pi, Theta, 0)
    for idx, f in sp.basis():
        lhs = weyl_operator_lhs(sp, Pi, Theta, f)
        shifted = _shift(f, sp.zetas, Pi)
        rhs = tp.scale(I * HALF).exp() * tx.scale(I).exp() * shifted
        rep.add(f"weyl.factorized.m{m}.{idx}", "exp(i(Theta X + Pi D)) = exp(i Theta Pi/2) exp(i Theta X) exp(i Pi D)",
                lhs, rhs, inputs={"m": m, "f": list(idx)}, invariant=True)
        rep.add(f"weyl.pi1.m{m}.{idx}", "exp[i(t + Theta X + Pi D)] f = exp[i(t + Theta zeta + Theta Pi/2)] f(zeta + Pi)",
                PhasedElement.of(lhs), pi1_apply(g, f, sp), inputs={"m": m, "f": list(idx)}, invariant=True)
        literal = tp.scale(HALF).exp() * tx.scale(I).exp() * shifted
        rep.add(f"weyl.literal.m{m}.{idx}", "e^{i(Theta X + Pi D)} = e^{Theta Pi/2} e^{i Theta X} e^{i Pi D}",
                lhs, literal, inputs={"m": m, "f": list(idx)},
                note="the literal prefactor lacks the i; the consistent factor is exp(i Theta.Pi/2)")
    rep.conventions["weyl.prefactor"] = "exp(i Theta.Pi/2)"
    return rep


def fh_compose_pi1(g: FHGroupElement, h: FHGroupElement) -> FHGroupElement:
    """The law ``pi1`` realises: ``t'' = t + t' - (Pi.Theta' + Theta.Pi')/2``.

    Operator exponentials give ``[i(Theta X + Pi D), i(Theta' X + Pi' D)] = -i B(v, v')``,
    so the central increment carries the opposite sign to the diamond law.
    """
    inc = dot(g.Pi, h.Theta) + dot(g.Theta, h.Pi)
    return FHGroupElement(
        [a + b for a, b in zip(g.Pi, h.Pi)],
        [a + b for a, b in zip(g.Theta, h.Theta)],
        g.t + h.t - inc.scale(HALF),
    )


def time_reversal(g: FHGroupElement) -> FHGroupElement:
    """``(Pi, Theta, t) -> (Pi, Theta, -t)``: an isomorphism from the diamond law to :func:`fh_compose_pi1`."""
    return FHGroupElement(g.Pi, g.Theta, -g.t)


def pi1_homomorphism_check(m: int, t1=Fraction(1, 3), t2=Fraction(-2, 5)) -> Report:
    """Composition of ``pi1`` operators on every basis monomial.

    ``pi1.homomorphism`` uses the law ``pi1`` realises; ``pi1.diamond-reversed``
    checks that ``pi1`` after time reversal is a homomorphism of the diamond
    law; ``pi1.diamond-literal`` records the literal diamond statement.
    """
    sp = FunctionSpace.standard(m, "Pi", "Theta", "Pi_", "Theta_")
    g = FHGroupElement(sp.family("Pi"), sp.family("Theta"), t1)
    h = FHGroupElement(sp.family("Pi_"), sp.family("Theta_"), t2)
    rg, rh = time_reversal(g), time_reversal(h)
    rep = Report("pi1")
    for idx, f in sp.basis():
        ins = {"m": m, "f": list(idx), "t": str(t1), "t'": str(t2)}
        lhs = _apply_phased(g, pi1_apply(h, f, sp), sp)
        rep.add(f"pi1.homomorphism.m{m}.{idx}", "pi1 is a Q-representation of FH_m",
                lhs, pi1_apply(fh_compose_pi1(g, h), f, sp), inputs=ins, invariant=True)
        rep.add(f"pi1.diamond-reversed.m{m}.{idx}", "pi1 is a Q-representation of FH_m",
                _apply_phased(rg, pi1_apply(rh, f, sp), sp),
                pi1_apply(time_reversal(fh_compose_diamond(g, h)), f, sp), inputs=ins, invariant=True)
        rep.add(f"pi1.diamond-literal.m{m}.{idx}", "pi1(g) pi1(g') = pi1(g <> g'), t+t'+(Pi Theta'+Theta Pi')/2",
                lhs, pi1_apply(fh_compose_diamond(g, h), f, sp), inputs=ins,
                note="pi1 realises the central increment -(Pi Theta'+Theta Pi')/2")
    rep.conventions["pi1.group-law"] = "t'' = t + t' - (Pi.Theta' + Theta.Pi')/2"
    return rep


def _apply_phased(g: FHGroupElement, F: PhasedElement, sp: FunctionSpace) -> PhasedElement:
    out = PhasedElement(sp.registry)
    for phi, part in F.parts.items():
        out = out + PhasedElement.of(pi1_apply(g, part, sp), phi)
    return out


def pi1_unitarity_check(m: int, t=Fraction(3, 7)) -> Report:
    """``<pi1(g) f, pi1(g) h> = <f, h>`` for every pair of basis monomials."""
    sp = FunctionSpace.standard(m, "Pi", "Theta")
    g = FHGroupElement(sp.family("Pi"), sp.family("Theta"), t)
    rep = Report("pi1")
    basis = sp.basis()
    images = {idx: pi1_apply(g, f, sp) for idx, f in basis}
    for fi, f in basis:
        for hi, h in basis:
            lhs = q_inner(images[fi], images[hi], sp.zetas)
            rep.add(f"pi1.unitary.m{m}.{fi}.{hi}", "pi1 is Q-unitary", lhs, PhasedElement.of(q_inner(f, h, sp.zetas)),
                    inputs={"m": m, "f": list(fi), "g": list(hi)}, invariant=True)
    return rep


# ---------------------------------------------------------------------------
# Fourier-Wigner transform


def _check_free(f, space: FunctionSpace, families: Sequence[str]) -> None:
    reg = space.registry
    mask = 0
    for fam in families:
        mask |= reg.mask(space.labels(fam))
    if isinstance(f, PhasedElement):
        sup = 0
        for g in f.parts.values():
            sup |= g.support()
    else:
        sup = f.support()
    if sup & mask:
        raise RegistryError("argument uses generators reserved for the transform variables")


def fourier_wigner(f: GrassmannElement, g: GrassmannElement, space: FunctionSpace,
                   Pi: str = "Pi", Theta: str = "Theta") -> GrassmannElement:
    """``V(f,g)(Pi,Theta) = int dzeta f*(zeta - Pi/2) exp(i Theta.zeta) g(zeta + Pi/2)``."""
    _check_free(f, space, (Pi, Theta))
    _check_free(g, space, (Pi, Theta))
    P, T = space.family(Pi), space.family(Theta)
    half_pi = [x.scale(HALF) for x in P]
    left = _shift(f.star(), space.zetas, [-x for x in half_pi])
    right = _shift(g, space.zetas, half_pi)
    kernel = dot(T, space.zeta()).scale(I).exp()
    return space.integrate(left * kernel * right)


def fw_zero_check(m: int) -> Report:
    """``V(f,g)(0,0) = <f,g>`` and ``V(f,g) = <f, pi1(Pi,Theta,0) g>`` on the basis."""
    sp = FunctionSpace.standard(m, "Pi", "Theta")
    zero = {lab: sp.registry.zero() for fam in ("Pi", "Theta") for lab in sp.labels(fam)}
    g0 = FHGroupElement(sp.family("Pi"), sp.family("Theta"), 0)
    rep = Report("fw")
    for fi, f in sp.basis():
        for gi, g in sp.basis():
            V = fourier_wigner(f, g, sp)
            ins = {"m": m, "f": list(fi), "g": list(gi)}
            rep.add(f"fw.at-zero.m{m}.{fi}.{gi}", "V(f,g)(0,0) = <f,g>", _kill(V, zero), q_inner(f, g, sp.zetas),
                    inputs=ins, invariant=True)
            rep.add(f"fw.matrix-coefficient.m{m}.{fi}.{gi}", "V(f,g) = <f, pi1(Pi,Theta) g>",
                    PhasedElement.of(V), q_inner(f, pi1_apply(g0, g, sp), sp.zetas), inputs=ins, invariant=True)
    return rep


def _kill(F: GrassmannElement, zero_map) -> GrassmannElement:
    """Set the listed generators to zero."""
    reg = F.registry
    mask = reg.mask(zero_map)
    return GrassmannElement(reg, {m: c for m, c in F.terms.items() if not m & mask})


def _parity(f: GrassmannElement) -> int:
    p = f.parity()
    if p is None:
        raise ParityError("function is not homogeneous")
    return p


def fw_inner_identity_check(m: int) -> Report:
    """``<V(f1,g1), V(f2,g2)> = (-1)^{|f1||f2| + (|f1|+|f2|)|g2|} <g1,g2> <f1,f2>*`` on all basis quadruples."""
    if not 1 <= m <= 2:
        raise ValueError("fw_inner_identity_check supports m in {1, 2}")
    sp = FunctionSpace.standard(m, "Pi", "Theta")
    vars2m = sp.labels("Pi") + sp.labels("Theta")
    basis = sp.basis()
    V = {(fi, gi): fourier_wigner(f, g, sp) for fi, f in basis for gi, g in basis}
    rep = Report("fw")
    for f1i, f1 in basis:
        for g1i, g1 in basis:
            for f2i, f2 in basis:
                for g2i, g2 in basis:
                    lhs = q_inner(V[f1i, g1i], V[f2i, g2i], vars2m)
                    e = _parity(f1) * _parity(f2) + (_parity(f1) + _parity(f2)) * _parity(g2)
                    rhs = (q_inner(g1, g2, sp.zetas) * q_inner(f1, f2, sp.zetas).star()).scale(-1 if e & 1 else 1)
                    rep.add(
                        f"fw.inner.m{m}.{f1i}.{g1i}.{f2i}.{g2i}",
                        "<V(f1,g1),V(f2,g2)> = (-1)^{|f1||f2|+(|f1|+|f2|)|g2|} <g1,g2><f1,f2>^*",
                        lhs,
                        rhs,
                        inputs={"m": m, "f1": list(f1i), "g1": list(g1i), "f2": list(f2i), "g2": list(g2i)},
                    )
    rep.conventions["fw.inner.variables"] = "Pi_1..Pi_m, Theta_1..Theta_m in that order"
    return rep


def covariance_rhs(f, g, sp: FunctionSpace) -> GrassmannElement:
    """``exp[-(1/2)(-Pi.beta - Theta.alpha + gamma.Pi + delta.Theta + gamma.beta + delta.alpha)] V(f,g)(Pi+alpha-gamma, Theta+beta-delta)``."""
    P, T = sp.family("Pi"), sp.family("Theta")
    a, b, c, d = (sp.family(x) for x in ("alpha", "beta", "gamma", "delta"))
    expo = -dot(P, b) - dot(T, a) + dot(c, P) + dot(d, T) + dot(c, b) + dot(d, a)
    V = fourier_wigner(f, g, sp)
    shifts = {}
    for j in range(sp.m):
        shifts[sp.labels("Pi")[j]] = a[j] - c[j]
        shifts[sp.labels("Theta")[j]] = b[j] - d[j]
    return expo.scale(-HALF).exp() * V.shift(shifts)


def covariance_lhs(f, g, sp: FunctionSpace) -> GrassmannElement:
    a, b, c, d = (sp.family(x) for x in ("alpha", "beta", "gamma", "delta"))
    pf = pi1_apply(FHGroupElement(c, d, 0), f, sp).collapse()
    pg = pi1_apply(FHGroupElement(a, b, 0), g, sp).collapse()
    return fourier_wigner(pf, pg, sp)


def covariance_rhs_derived(f, g, sp: FunctionSpace) -> GrassmannElement:
    """Closed form forced by unitarity and the ``pi1`` composition law.

    ``exp[-(i/2)(Pi.beta + Theta.alpha - gamma.Theta - gamma.beta - delta.Pi - delta.alpha)]
    V(f,g)(Pi+alpha-gamma, Theta+beta-delta)``.
    """
    P, T = sp.family("Pi"), sp.family("Theta")
    a, b, c, d = (sp.family(x) for x in ("alpha", "beta", "gamma", "delta"))
    expo = dot(P, b) + dot(T, a) - dot(c, T) - dot(c, b) - dot(d, P) - dot(d, a)
    shifts = {}
    for j in range(sp.m):
        shifts[sp.labels("Pi")[j]] = a[j] - c[j]
        shifts[sp.labels("Theta")[j]] = b[j] - d[j]
    return expo.scale(-I * HALF).exp() * fourier_wigner(f, g, sp).shift(shifts)


def fw_covariance_check(m: int = 1) -> Report:
    """``V(pi1(gamma,delta) f, pi1(alpha,beta) g)`` against the literal and the derived closed forms."""
    sp = FunctionSpace.standard(m, "Pi", "Theta", "alpha", "beta", "gamma", "delta")
    rep = Report("fw")
    for fi, f in sp.basis():
        for gi, g in sp.basis():
            lhs = covariance_lhs(f, g, sp)
            rep.add(
                f"fw.covariance.m{m}.{fi}.{gi}",
                "V(pi1(gamma,delta)f, pi1(alpha,beta)g)(Pi,Theta) = exp[-(1/2)(-Pi beta - Theta alpha + gamma Pi"
                " + delta Theta + gamma beta + delta alpha)] V(f,g)(Pi+alpha-gamma, Theta+beta-delta)",
                lhs,
                covariance_rhs(f, g, sp),
                inputs={"m": m, "f": list(fi), "g": list(gi)},
            )
            rep.add(
                f"fw.covariance-derived.m{m}.{fi}.{gi}",
                "V(pi1(gamma,delta)f, pi1(alpha,beta)g)(Pi,Theta)",
                lhs,
                covariance_rhs_derived(f, g, sp),
                inputs={"m": m, "f": list(fi), "g": list(gi)},
                invariant=True,
            )
    return rep


# ---------------------------------------------------------------------------
# Bargmann transform


class BargmannContext:
    """Data for the Bargmann transform on ``m`` odd variables.

    The registry carries ``zeta``, parameter families ``Pi``/``Theta`` (plus
    any extras) and Fock generators ``z_k``/``zbar_k``.  Composite mode
    writes ``z_k = sum_j G_kj Pi_j + i Theta_k``; abstract mode uses the
    independent Fock generators.
    """

    def __init__(self, G, *extra_families: str):
        self.G: AntisymmetricMatrix = as_antisymmetric(G)
        m = self.G.m
        if m % 2:
            raise ValueError("Bargmann transform needs even m")
        self.m = m
        self.prefactor_root = self.G.inverse_sqrt_pfaffian()
        self.Ginv = self.G.inverse()
        self.space = FunctionSpace.standard(m, "Pi", "Theta", *extra_families, fock=True)
        reg = self.space.registry
        self.registry = reg
        self.z = [
            sum((x.scale(c) for x, c in zip(self.space.family("Pi"), self.G[k]) if c), reg.zero())
            + self.space.family("Theta")[k].scale(I)
            for k in range(m)
        ]
        self.zlabels = [f"z{k}" for k in range(1, m + 1)]
        self.zbarlabels = [f"zbar{k}" for k in range(1, m + 1)]
        self.zgen = [reg.gen(x) for x in self.zlabels]
        self.zbargen = [reg.gen(x) for x in self.zbarlabels]
        self.prefactor = CQ(Fraction(1, 2 ** (m // 2)))
        kernel = (
            quadratic_form(self.space.zeta(), self.G.entries).scale(HALF)
            - dot(self.space.zeta(), self.z)
            - quadratic_form(self.z, self.Ginv)
        )
        self.kernel = kernel.exp()
        self._kappa: CQ | None = None
        self.weight_sign = -1
        self.calibrate()

    # composite <-> abstract -------------------------------------------------

    def to_abstract(self, F: GrassmannElement) -> GrassmannElement:
        """Rewrite a function of composite ``z`` as a polynomial in the Fock generators ``z_k``."""
        reg = self.registry
        pmask = reg.mask(self.space.labels("Pi"))
        tl = self.space.labels("Theta")
        tmask = reg.mask(tl)
        if F.support() & ~(pmask | tmask):
            raise RegistryError("composite function may involve only Pi and Theta")
        out = reg.zero()
        tbits = [reg.index(x) for x in tl]
        for mask, c in F.terms.items():
            if mask & pmask:
                continue
            idx = [k for k, b in enumerate(tbits) if mask >> b & 1]
            out = out + reg.monomial([self.zlabels[k] for k in idx], c / I ** len(idx))
        if self.to_composite(out) != F:
            raise ValueError("function is not a polynomial in the composite z variables")
        return out

    def to_composite(self, F: GrassmannElement) -> GrassmannElement:
        images = {lab: self.z[k] for k, lab in enumerate(self.zlabels)}
        images.update({lab: self.z[k].star() for k, lab in enumerate(self.zbarlabels)})
        return F.substitute(images)

    def z_monomial(self, idx: Sequence[int], composite: bool = True) -> GrassmannElement:
        out = self.registry.one()
        for i in idx:
            out = out * (self.z[i] if composite else self.zgen[i])
        return out

    # Fock product -------------------------------------------------------------

    def weight(self) -> GrassmannElement:
        s = self.weight_sign
        return dot(self.zgen, self.zbargen).scale(s).exp()

    def _raw_fock(self, F, H) -> GrassmannElement:
        return (self.weight() * F.star() * H).berezin(self.zlabels + self.zbarlabels)

    def calibrate(self) -> None:
        """Fix the scalar normalisation so that ``<1,1> = 1``; the weight sign is searched."""
        one = self.registry.one()
        for s in (-1, 1):
            self.weight_sign = s
            raw = self._raw_fock(one, one)
            if not raw.is_scalar() or not raw.body():
                continue
            self._kappa = raw.body().inverse()
            if all(self.fock(a, b) == (one if ia == ib else one.scale(0))
                   for ia, a in self._abstract_basis() for ib, b in self._abstract_basis()):
                return
        raise ValueError("no weight sign makes the z monomials orthonormal")

    def _abstract_basis(self):
        return [(idx, self.z_monomial(idx, composite=False)) for idx in self.space.multi_indices()]

    @property
    def calibration(self) -> CQ:
        if self._kappa is None:
            raise ValueError("context is not calibrated")
        return self._kappa

    def fock(self, F, H) -> GrassmannElement:
        if self._kappa is None:
            raise ValueError("context is not calibrated")
        return self._raw_fock(F, H).scale(self._kappa)

    def literal_fock(self, F, H) -> GrassmannElement:
        """Weight ``exp(-|z|^2/2)`` with ``|z|^2 = zbar G^-1 z / 2`` and ``|dz| = -(i/2)^n dz dz*``."""
        nz = bilinear(self.zbargen, self.Ginv, self.zgen).scale(HALF)
        w = nz.scale(-HALF).exp()
        c = -(I * HALF) ** self.m
        return (w * F.star() * H).berezin(self.zlabels + self.zbarlabels).scale(c)

    def conventions(self) -> dict[str, str]:
        return {
            "bargmann.kernel": "exp(zeta G zeta/2 - zeta.z - z G^-1 z), quadratic forms summed over i<j",
            "bargmann.prefactor": f"2^(-m/2) = {self.prefactor}",
            "fock.weight": f"exp({self.weight_sign} * sum_k z_k zbar_k)",
            "fock.calibration": str(self._kappa),
            "fock.integration-order": "z_1..z_m, zbar_1..zbar_m",
        }


def bargmann(f, ctx: BargmannContext):
    """``(Bf)(z) = 2^(-m/2) int dzeta exp(zeta G zeta/2 - zeta.z - z G^-1 z) f(zeta)`` (composite ``z``)."""
    _check_free(f, ctx.space, ("Pi", "Theta"))
    if isinstance(f, PhasedElement):
        return PhasedElement(ctx.registry, {phi: bargmann(g, ctx) for phi, g in f.parts.items()})
    return ctx.space.integrate(ctx.kernel * f).scale(ctx.prefactor)


def fock_inner(F: GrassmannElement, H: GrassmannElement, ctx: BargmannContext) -> GrassmannElement:
    return ctx.fock(F, H)


def fock_orthonormality_check(ctx: BargmannContext) -> Report:
    rep = Report("bargmann")
    one = ctx.registry.one()
    basis = ctx._abstract_basis()
    for ia, a in basis:
        for ib, b in basis:
            ins = {"m": ctx.m, "I": list(ia), "J": list(ib)}
            want = one if ia == ib else one.scale(0)
            rep.add(f"fock.orthonormal.m{ctx.m}.{ia}.{ib}", "<z_I, z_J>_F = delta_IJ", ctx.fock(a, b), want,
                    inputs=ins, invariant=True)
            rep.add(f"fock.literal-weight.m{ctx.m}.{ia}.{ib}",
                    "<f,g>_F = int |dz| exp(-|z|^2/2) f* g, |dz| = -(i/2)^n dz dz*",
                    ctx.literal_fock(a, b), want, inputs=ins,
                    note="literal weight with |z|^2 = z* G^-1 z/2")
    rep.conventions.update(ctx.conventions())
    return rep


# ---------------------------------------------------------------------------
# beta


def _beta_params(ctx: BargmannContext):
    sp = ctx.space
    if "rho" not in sp.families or "sigma" not in sp.families:
        raise RegistryError("context needs parameter families 'rho' and 'sigma'")
    return sp.family("rho"), sp.family("sigma")


def beta_apply(F, ctx: BargmannContext, t=0) -> PhasedElement:
    """Transferred action of ``(rho, sigma, t)`` on a composite Fock function.

    ``beta F(z) = U(t) exp(X) F(z')`` with ``z' = z + G rho/2 + i sigma`` and
    ``X = rho G rho/2 + rho.z - (i/2) sigma.rho - z G^-1 z + z' G^-1 z'``.
    This is the form forced by ``beta o B = B o pi1(rho, sigma, t)``.
    """
    rho, sigma = _beta_params(ctx)
    sp = ctx.space
    if isinstance(F, PhasedElement):
        out = PhasedElement(ctx.registry)
        for phi, part in F.parts.items():
            out = out + PhasedElement.of(beta_apply(part, ctx, t), phi)
        return out
    shifts = {}
    for j in range(ctx.m):
        shifts[sp.labels("Pi")[j]] = rho[j].scale(HALF)
        shifts[sp.labels("Theta")[j]] = sigma[j]
    zp = [
        zk + sum((r.scale(c * HALF) for r, c in zip(rho, ctx.G[k]) if c), ctx.registry.zero()) + sigma[k].scale(I)
        for k, zk in enumerate(ctx.z)
    ]
    X = (
        quadratic_form(rho, ctx.G.entries).scale(HALF)
        + dot(rho, ctx.z)
        - dot(sigma, rho).scale(I * HALF)
        - quadratic_form(ctx.z, ctx.Ginv)
        + quadratic_form(zp, ctx.Ginv)
    )
    return PhasedElement.of(X.exp() * F.shift(shifts), as_fraction(t))


def beta_apply_literal(F, ctx: BargmannContext) -> GrassmannElement:
    """``exp(-(i/2)|w|^2) exp(-(i/2) z G^-1 w*) F(z)`` with ``w = G rho + i sigma``, ``|w|^2 = w* G^-1 w/2``."""
    rho, sigma = _beta_params(ctx)
    w = [sum((r.scale(c) for r, c in zip(rho, ctx.G[k]) if c), ctx.registry.zero()) + sigma[k].scale(I)
         for k in range(ctx.m)]
    ws = [x.star() for x in w]
    nw = bilinear(ws, ctx.Ginv, w).scale(HALF)
    e1 = nw.scale(-I * HALF).exp()
    e2 = bilinear(ctx.z, ctx.Ginv, ws).scale(-I * HALF).exp()
    return e1 * e2 * F


def beta_intertwining_check(ctx: BargmannContext, t=Fraction(1, 5)) -> Report:
    """``beta(rho, sigma, t) B f = B pi1(rho, sigma, t) f`` on the monomial basis."""
    rho, sigma = _beta_params(ctx)
    sp = ctx.space
    g = FHGroupElement(rho, sigma, t)
    g0 = FHGroupElement(rho, sigma, 0)
    rep = Report("bargmann")
    for idx, f in sp.basis():
        rhs = bargmann(pi1_apply(g, f, sp), ctx)
        Bf = bargmann(f, ctx)
        rep.add(f"beta.intertwining.m{ctx.m}.{idx}", "beta(z,t) o B = B o pi1(Pi,Theta,t)",
                beta_apply(Bf, ctx, t), rhs, inputs={"m": ctx.m, "f": list(idx), "t": str(t)})
        rep.add(f"beta.literal.m{ctx.m}.{idx}",
                "(beta(w)Bf)(z) = exp(-(i/2)|w|^2) exp(-(i/2) z G^-1 w*) Bf(z)",
                beta_apply_literal(Bf, ctx), bargmann(pi1_apply(g0, f, sp), ctx).collapse(),
                inputs={"m": ctx.m, "f": list(idx)})
    rep.conventions["beta.form"] = "U(t) exp(X) F(z + G rho/2 + i sigma)"
    return rep


def bargmann_hermite_check(ctx: BargmannContext, normalization=None) -> Report:
    """``B h^I`` against ``2^(m/2) H_k z_I`` for every multi-index ``I``."""
    fam = HermiteFamily(ctx.G, ctx.space, normalization)
    rep = Report("bargmann")
    target = CQ(2 ** (ctx.m // 2))
    for idx, h in fam.all():
        Bh = bargmann(h, ctx)
        rep.add(f"bargmann.hermite.m{ctx.m}.{idx}", "(B h_k)_{I_k}(z) = 2^{n/2} H_k z_{I_k}",
                Bh, ctx.z_monomial(idx).scale(target * fam.H(len(idx))),
                inputs={"m": ctx.m, "I": list(idx), "H_k": str(fam.H(len(idx)))})
    return rep


def norm_sq(ctx: BargmannContext) -> GrassmannElement:
    """``|z|^2 = z* G^-1 z / 2`` for composite ``z``."""
    return bilinear([x.star() for x in ctx.z], ctx.Ginv, ctx.z).scale(HALF)


def bargmann_gaussian_relation_check(ctx: BargmannContext) -> Report:
    """``V(omega0, f) = exp(-|z|^2/2) (Bf)(z)`` on the basis."""
    w0 = gaussian(ctx.G, ctx.space)
    damp = norm_sq(ctx).scale(-HALF).exp()
    rep = Report("bargmann")
    for idx, f in ctx.space.basis():
        rep.add(f"bargmann.gaussian-fw.m{ctx.m}.{idx}", "V(omega0,f)(Pi,Theta) = exp(-|z|^2/2)(Bf)(z)",
                fourier_wigner(w0, f, ctx.space), damp * bargmann(f, ctx), inputs={"m": ctx.m, "f": list(idx)})
    return rep


def z_group_law_check(ctx: BargmannContext) -> Report:
    """``Im(-(i/2) z* G^-1 z')`` against ``B(v, v')``, and the induced central increment."""
    sp = ctx.space
    if "Pi_" not in sp.families:
        raise RegistryError("context needs parameter families 'Pi_' and 'Theta_'")
    Pi, Th = sp.family("Pi"), sp.family("Theta")
    Pi2, Th2 = sp.family("Pi_"), sp.family("Theta_")
    z2 = [sum((x.scale(c) for x, c in zip(Pi2, ctx.G[k]) if c), ctx.registry.zero()) + Th2[k].scale(I)
          for k in range(ctx.m)]
    form = bilinear([x.star() for x in ctx.z], ctx.Ginv, z2).scale(-I * HALF)
    im = (form - form.star()).scale((I * 2).inverse())
    Bvv = dot(Pi, Th2) + dot(Th, Pi2)
    rep = Report("bargmann")
    rep.add(f"z-law.im-form.m{ctx.m}", "Im(-(i/2) z* G^-1 z') = B(v,v')", im, Bvv, inputs={"m": ctx.m})
    rep.add(f"z-law.increment.m{ctx.m}", "(z,t)(z',t') = (z+z', t+t'+(1/2)Im(-(i/2)z* G^-1 z'))",
            im.scale(HALF), Bvv.scale(HALF), inputs={"m": ctx.m},
            note="compared with the diamond-law increment (Pi Theta' + Theta Pi')/2")
    return rep
