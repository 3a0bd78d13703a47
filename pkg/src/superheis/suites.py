"""Verification suites: each builds a :class:`Report` from a size, a matrix and a seed."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from . import groups as gr
from . import linalg
from . import oddons as od
from . import sampling as S
from . import transforms as tr
from . import unitary as un
from .grassmann import GeneratorRegistry
from .report import Report, merge
from .superfunctions import FunctionSpace, adjoint_check, as_antisymmetric, canonical_G, gaussian, q_inner

__all__ = ["SUITES", "SuiteConfig", "run_suite"]


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    m: int = 2
    G: object = None
    seed: int = 0
    samples: int = 50
    extra: dict = field(default_factory=dict)

    def matrix(self):
        if self.G is not None:
            return as_antisymmetric(self.G)
        return canonical_G(self.m if self.m % 2 == 0 else self.m + 1)


def _rng(cfg: SuiteConfig, salt: str) -> random.Random:
    return random.Random(f"{cfg.seed}:{salt}")


# ---------------------------------------------------------------------------
# core


def _law_record(rep: Report, name: str, ref: str, failures: list, total: int) -> None:
    rep.add_bool(name, ref, not failures, inputs={"cases": total}, detail={"failures": failures[:5]})


def grassmann_laws(n_gens: int = 4, samples: int = 50, seed: int = 0) -> Report:
    """Ring and involution laws, exhaustively on monomials and on random elements."""
    reg = GeneratorRegistry.from_groups(parameter=[f"q{j}" for j in range(1, n_gens + 1)])
    rng = random.Random(f"{seed}:core")
    mons = S.monomials(reg)
    rep = Report("core")
    bad = {k: [] for k in ("assoc", "comm", "star", "starstar", "J")}
    for a, b in product(mons, repeat=2):
        pa, pb = a.parity(), b.parity()
        if a * b != (b * a).scale(-1 if pa and pb else 1):
            bad["comm"].append([str(a), str(b)])
        if (a * b).star() != b.star() * a.star():
            bad["star"].append([str(a), str(b)])
        if (a * b).J() != a.J() * b.J():
            bad["J"].append([str(a), str(b)])
        for c in mons:
            if (a * b) * c != a * (b * c):
                bad["assoc"].append([str(a), str(b), str(c)])
    for a in mons:
        if a.star().star() != a:
            bad["starstar"].append(str(a))
    n = len(mons)
    _law_record(rep, "core.assoc.exhaustive", "(ab)c = a(bc)", bad["assoc"], n ** 3)
    _law_record(rep, "core.graded-comm.exhaustive", "ab = (-1)^{|a||b|} ba", bad["comm"], n * n)
    _law_record(rep, "core.star-anti.exhaustive", "(ab)* = b* a*", bad["star"], n * n)
    _law_record(rep, "core.star-involution.exhaustive", "a** = a", bad["starstar"], n)
    _law_record(rep, "core.J-auto.exhaustive", "J(ab) = J(a)J(b)", bad["J"], n * n)

    bad = {k: [] for k in bad}
    for _ in range(samples):
        a, b, c = (S.element(rng, reg) for _ in range(3))
        if (a * b) * c != a * (b * c):
            bad["assoc"].append([str(a), str(b), str(c)])
        ha, hb = S.element(rng, reg, parity=rng.randint(0, 1)), S.element(rng, reg, parity=rng.randint(0, 1))
        s = -1 if ha.is_odd() and hb.is_odd() else 1
        if ha * hb != (hb * ha).scale(s):
            bad["comm"].append([str(ha), str(hb)])
        if (a * b).star() != b.star() * a.star():
            bad["star"].append([str(a), str(b)])
        if a.star().star() != a:
            bad["starstar"].append(str(a))
        if (a * b).J() != a.J() * b.J():
            bad["J"].append([str(a), str(b)])
    _law_record(rep, "core.assoc.random", "(ab)c = a(bc)", bad["assoc"], samples)
    _law_record(rep, "core.graded-comm.random", "ab = (-1)^{|a||b|} ba", bad["comm"], samples)
    _law_record(rep, "core.star-anti.random", "(ab)* = b* a*", bad["star"], samples)
    _law_record(rep, "core.star-involution.random", "a** = a", bad["starstar"], samples)
    _law_record(rep, "core.J-auto.random", "J(ab) = J(a)J(b)", bad["J"], samples)
    return rep


def core_suite(cfg: SuiteConfig) -> Report:
    return grassmann_laws(min(max(cfg.m, 2), 4), cfg.samples, cfg.seed)


# ---------------------------------------------------------------------------
# groups


def _htuple(rng, n):
    return gr.HeisenbergTuple([S.rational(rng) for _ in range(n)], [S.rational(rng) for _ in range(n)], S.rational(rng))


def classical_group_laws(n: int = 1, samples: int = 50, seed: int = 0) -> Report:
    rng = random.Random(f"{seed}:groups:{n}")
    rep = Report("groups")
    bad = {"pol": [], "sym": [], "exp": [], "inv": []}
    for _ in range(samples):
        g, h = _htuple(rng, n), _htuple(rng, n)
        if gr.M_matrix(gr.h_compose_polarized(g, h)) != linalg.matmul(gr.M_matrix(g), gr.M_matrix(h), Fraction(0)):
            bad["pol"].append([gr._h_json(g), gr._h_json(h)])
        lhs = gr.h_exp(gr.h_compose_symmetric(g, h))
        if lhs != gr.h_compose_polarized(gr.h_exp(g), gr.h_exp(h)):
            bad["sym"].append([gr._h_json(g), gr._h_json(h)])
        if gr.M_matrix(gr.h_exp(g)) != gr.matrix_exp_nilpotent(gr.m_matrix(g)):
            bad["exp"].append(gr._h_json(g))
        e = gr.HeisenbergTuple([0] * n, [0] * n, 0)
        if gr.h_compose_polarized(g, gr.h_inverse_polarized(g)) != e or gr.h_compose_symmetric(g, gr.h_inverse_symmetric(g)) != e:
            bad["inv"].append(gr._h_json(g))
    _law_record(rep, f"groups.polarized-matrix.n{n}", "M(p,q,t) M(p',q',t') = M(p+p', q+q', t+t'+pq')", bad["pol"], samples)
    _law_record(rep, f"groups.symmetric-exp.n{n}", "exp(m(g)) exp(m(h)) = exp(m(g o h)), t+t'+(pq'-p'q)/2", bad["sym"], samples)
    _law_record(rep, f"groups.exp-coordinates.n{n}", "exp m(p,q,t) = M(p,q,t+pq/2)", bad["exp"], samples)
    _law_record(rep, f"groups.inverses.n{n}", "g g^-1 = e", bad["inv"], samples)
    rep.extend(gr.lie_algebra_product_check(_htuple(rng, n), _htuple(rng, n)))
    return rep


def _super_space(m: int):
    return FunctionSpace.standard(m, "A", "B", "C", "D")


def super_group_laws(m: int = 1, samples: int = 10, seed: int = 0) -> Report:
    """Polarized law against supermatrix products; diamond law after the exponential coordinate change."""
    rng = random.Random(f"{seed}:super:{m}")
    sp = _super_space(m)
    reg = sp.registry
    params = [lab for fam in ("A", "B", "C", "D") for lab in sp.labels(fam)]
    rep = Report("groups")

    def rnd():
        odd = lambda: S.element(rng, reg, params, parity=1, terms=2)  # noqa: E731
        t = S.rational(rng) + S.element(rng, reg, params, parity=0, terms=2, complex_=False)
        return gr.SuperHeisenbergTuple(reg, [S.rational(rng) for _ in range(m)], [S.rational(rng) for _ in range(m)],
                                       [odd() for _ in range(m)], [odd() for _ in range(m)], t)

    bad = {"pol": [], "dia": [], "inv": []}
    for _ in range(samples):
        g, h = rnd(), rnd()
        if gr.sh_matrix(g) * gr.sh_matrix(h) != gr.sh_matrix(gr.sh_compose_polarized(g, h)):
            bad["pol"].append("case")
        if gr.sh_exp_coordinates(gr.sh_compose_diamond(g, h)) != gr.sh_compose_polarized(gr.sh_exp_coordinates(g), gr.sh_exp_coordinates(h)):
            bad["dia"].append("case")
        e = gr.SuperHeisenbergTuple.identity(reg, m, m)
        if gr.sh_compose_polarized(g, gr.sh_inverse_polarized(g)) != e or gr.sh_compose_diamond(g, gr.sh_inverse_diamond(g)) != e:
            bad["inv"].append("case")
    _law_record(rep, f"super.polarized-matrix.m{m}", "M(g) M(h) = M(g o h), t+t'+pq'+Pi Theta'", bad["pol"], samples)
    _law_record(rep, f"super.diamond-exp.m{m}", "diamond law = polarized law after t -> t + (pq + Pi Theta)/2", bad["dia"], samples)
    _law_record(rep, f"super.inverses.m{m}", "g g^-1 = e", bad["inv"], samples)
    return rep


def fermionic_nilpotency(m: int) -> Report:
    sp = FunctionSpace.standard(m, "Pi", "Theta")
    reg = sp.registry
    rep = Report("groups")
    mu = gr.fermionic_mu(sp.family("Pi"), sp.family("Theta"), Fraction(2, 3), reg)
    cube = mu * mu * mu
    rep.add_bool(f"fermionic.mu-cubed.m{m}", "mu(Pi,Theta,t)^3 = 0", cube.is_zero(), inputs={"m": m})
    return rep


def groups_suite(cfg: SuiteConfig) -> Report:
    rep = Report("groups")
    for n in (1, 2):
        rep.extend(classical_group_laws(n, cfg.samples, cfg.seed))
    for m in (1, 2, 3):
        rep.extend(fermionic_nilpotency(m))
    for m in (1, 2):
        rep.extend(super_group_laws(m, max(cfg.samples // 5, 5), cfg.seed))
    return rep


# ---------------------------------------------------------------------------
# superfunctions


def pfaffian_squares(samples: int, seed: int) -> Report:
    rng = random.Random(f"{seed}:pf")
    rep = Report("superfunctions")
    bad = []
    for k in range(samples):
        m = (2, 4, 6)[k % 3]
        A = S.antisymmetric(rng, m)
        if linalg.pfaffian(A) ** 2 != linalg.det(A):
            bad.append([[str(x) for x in r] for r in A])
    _law_record(rep, "pfaffian.square-det", "Pf(G)^2 = det G", bad, samples)
    return rep


def gaussian_norm(G) -> Report:
    G = as_antisymmetric(G)
    sp = FunctionSpace.standard(G.m)
    w0 = gaussian(G, sp)
    rep = Report("superfunctions")
    rep.add(f"gaussian.norm.m{G.m}", "<omega0, omega0> = 1", q_inner(w0, w0), sp.registry.one(),
            inputs={"G": G.to_json()}, invariant=True)
    return rep


def superfunctions_suite(cfg: SuiteConfig) -> Report:
    rep = Report("superfunctions")
    rep.extend(adjoint_check(min(max(cfg.m, 1), 3)))
    for m in (2, 4):
        rep.extend(gaussian_norm(canonical_G(m)))
    if cfg.G is not None:
        rep.extend(gaussian_norm(cfg.matrix()))
    rep.extend(pfaffian_squares(cfg.samples, cfg.seed))
    return rep


# ---------------------------------------------------------------------------
# transforms


def fw_suite(cfg: SuiteConfig) -> Report:
    m = min(max(cfg.m, 1), 2)
    rep = Report("fw")
    rep.extend(tr.fw_zero_check(m))
    rep.extend(tr.fw_inner_identity_check(1))
    rep.extend(tr.fw_covariance_check(1))
    return rep


def pi1_suite(cfg: SuiteConfig) -> Report:
    rep = Report("pi1")
    for m in (1, 2):
        rep.extend(tr.pi1_homomorphism_check(m))
        rep.extend(tr.pi1_unitarity_check(m))
    for m in range(1, min(max(cfg.m, 1), 3) + 1):
        rep.extend(tr.weyl_factorization_check(m))
    return rep


def bargmann_suite(cfg: SuiteConfig) -> Report:
    G = cfg.matrix()
    rep = Report("bargmann")
    ctx = tr.BargmannContext(G)
    rep.extend(tr.fock_orthonormality_check(ctx))
    rep.extend(tr.bargmann_hermite_check(ctx))
    rep.extend(tr.bargmann_gaussian_relation_check(ctx))
    if G.m <= 2:
        rep.extend(tr.beta_intertwining_check(tr.BargmannContext(G, "rho", "sigma")))
        rep.extend(tr.z_group_law_check(tr.BargmannContext(G, "Pi_", "Theta_")))
    return rep


# ---------------------------------------------------------------------------
# oddons


def oddon_laws(samples: int = 50, seed: int = 0, n_gens: int = 3) -> Report:
    """Associativity, unit anticommutation, inverses, odd-product unit laws and ``tau^2``."""
    rng = random.Random(f"{seed}:oddons")
    reg = GeneratorRegistry.from_groups(parameter=[f"q{j}" for j in range(1, n_gens + 1)])
    mons = S.monomials(reg)
    rep = Report("oddons")
    for kind in od.KINDS:
        homog = []
        for mon in mons:
            homog.append(od.Oddon(mon, None, kind))
            homog.append(od.Oddon(reg.zero(), mon, kind))
        bad = [(str(a), str(b), str(c)) for a, b, c in product(homog, repeat=3) if (a * b) * c != a * (b * c)]
        _law_record(rep, f"oddon.assoc.exhaustive.{kind}", "(rr')r'' = r(r'r'')", bad, len(homog) ** 3)
        bad = []
        for _ in range(samples):
            a, b, c = (od.Oddon(S.element(rng, reg), S.element(rng, reg), kind) for _ in range(3))
            if (a * b) * c != a * (b * c):
                bad.append((str(a), str(b), str(c)))
        _law_record(rep, f"oddon.assoc.random.{kind}", "(rr')r'' = r(r'r'')", bad, samples)
        u = od.Oddon.unit(reg, kind)
        bad = [str(m) for m in mons if m.is_odd() and u * od.Oddon(m, None, kind) != -(od.Oddon(m, None, kind) * u)]
        _law_record(rep, f"oddon.unit-anticommutes.{kind}", "u q_1 = -q_1 u", bad, len(mons))
        rep.add(f"oddon.unit-square.{kind}", "1^2 = 1, i^2 = -1", u * u, od.Oddon.one(reg, kind).scale(u.sign),
                inputs={"kind": kind}, invariant=True)
        even_set = [od.Oddon(m, None, kind) if m.is_even() else od.Oddon(reg.zero(), m, kind) for m in mons]
        bad = [(str(a), str(b)) for a, b in product(even_set, repeat=2) if (a * b).parity() not in (0, None) or (a * b).odd_part()]
        _law_record(rep, f"oddon.even-subalgebra.{kind}", "even oddons a0 + u b1 are closed under products", bad, len(even_set) ** 2)
        bad = []
        count = 0
        while count < samples:
            a0 = S.element(rng, reg, parity=0)
            if not a0.body():
                continue
            r = od.Oddon(a0, S.element(rng, reg, parity=1), kind)
            count += 1
            inv = od.oddon_inverse(r)
            one = od.Oddon.one(reg, kind)
            if r * inv != one or inv * r != one:
                bad.append(str(r))
        _law_record(rep, f"oddon.inverse.{kind}", "r r^-1 = r^-1 r = 1", bad, samples)
    u = od.Oddon.unit(reg)
    bad = []
    for _ in range(samples):
        r = od.Oddon(S.element(rng, reg), S.element(rng, reg))
        if od.odd_star_product(u, r) != r or od.odd_star_product(r, u) != r:
            bad.append(str(r))
    _law_record(rep, "oddon.star-unit", "1^ * r = r * 1^ = r", bad, samples)
    bad = []
    for _ in range(samples):
        a, b, c = (od.Oddon(S.element(rng, reg), S.element(rng, reg)) for _ in range(3))
        if od.odd_star_product(od.odd_star_product(a, b), c) != od.odd_star_product(a, od.odd_star_product(b, c)):
            bad.append(str(a))
    _law_record(rep, "oddon.star-assoc", "(r*r')*r'' = r*(r'*r'')", bad, samples)
    for t in (Fraction(2), Fraction(-3, 5)):
        tau = u.scale(t)
        rep.add(f"oddon.tau-square.{t}", "tau^2 = t^2 for tau = t 1^", tau * tau, od.Oddon.one(reg).scale(t * t),
                inputs={"t": str(t)}, invariant=True)
    return rep


def odd_group_laws(samples: int = 20, seed: int = 0, m: int = 1) -> Report:
    rng = random.Random(f"{seed}:oddgroup")
    sp = FunctionSpace.standard(m, "A", "B", "C", "D")
    reg = sp.registry
    params = [lab for fam in ("A", "B", "C", "D") for lab in sp.labels(fam)]
    rep = Report("oddons")

    def rnd():
        Pi = [S.element(rng, reg, params, parity=1, terms=2) for _ in range(m)]
        Th = [S.element(rng, reg, params, parity=1, terms=2) for _ in range(m)]
        return od.OddHeisenbergElement.from_parameters(Pi, Th, S.rational(rng))

    bad_assoc, bad_sym = [], []
    for _ in range(samples):
        a, b, c = rnd(), rnd(), rnd()
        if od.odd_group_compose(od.odd_group_compose(a, b), c) != od.odd_group_compose(a, od.odd_group_compose(b, c)):
            bad_assoc.append("case")
        v, w = (a.p, a.Theta), (b.p, b.Theta)
        if od.odd_B1(v, w) != -od.odd_B1(w, v):
            bad_sym.append("case")
        if not od.odd_B1(v, v).is_zero():
            bad_sym.append("diag")
    _law_record(rep, "odd-group.assoc", "((g h) k) = (g (h k))", bad_assoc, samples)
    _law_record(rep, "odd-group.B1-symmetry", "B1(v_r,w_s) = -(-1)^{(r+1)(s+1)} B1(w_s,v_r), r = s = 1", bad_sym, samples)
    e = od.OddHeisenbergElement.from_parameters(sp.zeros(), sp.zeros(), 0)
    g = rnd()
    rep.add_bool("odd-group.identity", "g e = e g = g", od.odd_group_compose(g, e) == g == od.odd_group_compose(e, g))
    return rep


def odd_fw_reduction(m: int = 1) -> Report:
    sp = FunctionSpace.standard(m, "Pi", "Theta")
    rep = Report("oddons")
    for (fi, f), (gi, g) in product(sp.basis(), repeat=2):
        lhs = od.odd_fourier_wigner(f, g, sp)
        rep.add(f"odd-fw.reduction.f{list(fi)}.g{list(gi)}",
                "V_odd(f,g)(1^ Pi, Theta) = V(f,g)(Pi, Theta)", lhs, od.Oddon(tr.fourier_wigner(f, g, sp)),
                inputs={"m": m, "f": list(fi), "g": list(gi)}, invariant=True)
    return rep


def odd_bargmann_linearity(samples: int = 20, seed: int = 0) -> Report:
    rng = random.Random(f"{seed}:oddbargmann")
    sp = FunctionSpace.standard(2, "Pi", "Theta")
    G = canonical_G(2)
    rep = Report("oddons")
    bad = []
    for _ in range(samples):
        f = S.element(rng, sp.registry, sp.zetas)
        g = S.element(rng, sp.registry, sp.zetas)
        c = S.gaussian_rational(rng)
        lhs = od.odd_bargmann(f + g.scale(c), G, sp).value
        rhs = od.odd_bargmann(f, G, sp).value + od.odd_bargmann(g, G, sp).value.scale(c)
        if lhs != rhs:
            bad.append(str(f))
    _law_record(rep, "odd-bargmann.linearity", "B^(f + c g) = B^f + c B^g", bad, samples)
    rep.add_bool("odd-bargmann.zero", "B^0 = 0", od.odd_bargmann(sp.registry.zero(), G, sp).value.is_zero())
    return rep


def oddons_suite(cfg: SuiteConfig) -> Report:
    rep = Report("oddons")
    rep.extend(oddon_laws(cfg.samples, cfg.seed))
    rep.extend(od.odd_exp_law_check(1))
    rep.extend(odd_group_laws(max(cfg.samples // 5, 5), cfg.seed))
    rep.extend(od.odd_pi_check(1))
    rep.extend(odd_fw_reduction(1))
    rep.extend(odd_bargmann_linearity(max(cfg.samples // 5, 5), cfg.seed))
    return rep


# ---------------------------------------------------------------------------
# unitary


def svn_agreement(samples: int, seed: int) -> Report:
    rng = random.Random(f"{seed}:svn")
    rep = Report("unitary")
    bad = []
    for k in range(samples):
        n = 1 + k % 4
        A = S.symmetric(rng, n)
        if k % 2:
            # push roughly half of the cases towards positive definiteness
            A = linalg.matmul(A, A, Fraction(0))
            for i in range(n):
                A[i][i] += S.rational(rng, 2, 2)
        verdict = un.svn_verdict(un.SupersymplecticFormData(A))
        if verdict != un.eigen_sign_verdict(A):
            bad.append([[str(x) for x in r] for r in A])
    _law_record(rep, "svn.oracle-agreement", "Omega|V1 positive definite <=> unique unitary representation", bad, samples)
    rep.add("svn.identity", "Omega|V1 = Id => ExistsUnique",
            un.svn_verdict(un.SupersymplecticFormData([[1, 0], [0, 1]])), un.EXISTS_UNIQUE, invariant=True)
    rep.add("svn.indefinite", "Omega|V1 = diag(1,-1) => None",
            un.svn_verdict(un.SupersymplecticFormData([[1, 0], [0, -1]])), un.NONE, invariant=True)
    return rep


def unitary_suite(cfg: SuiteConfig) -> Report:
    rep = Report("unitary")
    rep.extend(un.super_hermitian_check(un.SuperHilbertSpace.standard(2, 2)))
    rep.extend(un.super_hermitian_check(un.SuperHilbertSpace([[2, 1], [1, 2]], [[3, "1/2"], ["1/2", 1]])))
    rep.extend(un.hc_pair_validate())
    rep.extend(svn_agreement(cfg.samples, cfg.seed))
    return rep


SUITES: dict[str, Callable[[SuiteConfig], Report]] = {
    "core": core_suite,
    "groups": groups_suite,
    "superfunctions": superfunctions_suite,
    "fw": fw_suite,
    "pi1": pi1_suite,
    "bargmann": bargmann_suite,
    "oddons": oddons_suite,
    "unitary": unitary_suite,
}


def run_suite(cfg: SuiteConfig) -> Report:
    if cfg.suite == "all":
        return merge("all", [SUITES[name](cfg) for name in SUITES])
    if cfg.suite not in SUITES:
        raise KeyError(f"unknown suite {cfg.suite!r}")
    rep = SUITES[cfg.suite](cfg)
    rep.suite = cfg.suite
    return rep
