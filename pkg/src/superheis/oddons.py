"""Real and complex oddons, the odd product, odd exponentials and the odd Heisenberg group.

An oddon ``a + u b`` has Grassmann components ``a, b`` and an odd unit ``u``
(``1^`` with ``1^2 = 1`` for real oddons, ``i^`` with ``i^2 = -1`` for complex
ones).  ``u`` anticommutes with odd Grassmann elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .grassmann import GeneratorRegistry, bits, GrassmannElement, ParityError, RegistryError
from .report import Report
from .scalars import CQ, I, as_cq
from .superfunctions import FunctionSpace, as_antisymmetric, dot

__all__ = [
    "Oddon",
    "KindError",
    "oddon_mul",
    "oddon_inverse",
    "odd_star_product",
    "odd_exp",
    "star_matmul",
    "odd_mu",
    "odd_matrix_exp",
    "odd_exp_law_check",
    "find_star_placement",
    "odd_B1",
    "OddHeisenbergElement",
    "odd_group_compose",
    "odd_pi_apply",
    "odd_pi_closed_form",
    "odd_pi_check",
    "oddon_substitute",
    "odd_fourier_wigner",
    "odd_bargmann",
    "OddBargmannResult",
]

REAL = "real"
COMPLEX = "complex"
KINDS = (REAL, COMPLEX)


class KindError(ValueError):
    """Operands are oddons of different kinds, or the kind does not support the operation."""


class Oddon:
    """Immutable oddon ``a + u b``."""

    __slots__ = ("a", "b", "kind")

    def __init__(self, a: GrassmannElement, b: GrassmannElement | None = None, kind: str = REAL):
        if kind not in KINDS:
            raise KindError(f"unknown oddon kind {kind!r}")
        if b is None:
            b = a.registry.zero()
        if a.registry != b.registry:
            raise RegistryError("oddon components belong to different registries")
        self.a = a
        self.b = b
        self.kind = kind

    # constructors ---------------------------------------------------------

    @classmethod
    def unit(cls, registry: GeneratorRegistry, kind: str = REAL) -> "Oddon":
        """The odd unit ``1^`` (real) or ``i^`` (complex)."""
        return cls(registry.zero(), registry.one(), kind)

    @classmethod
    def one(cls, registry: GeneratorRegistry, kind: str = REAL) -> "Oddon":
        return cls(registry.one(), registry.zero(), kind)

    @classmethod
    def zero(cls, registry: GeneratorRegistry, kind: str = REAL) -> "Oddon":
        return cls(registry.zero(), registry.zero(), kind)

    @classmethod
    def of(cls, x, registry: GeneratorRegistry, kind: str = REAL) -> "Oddon":
        if isinstance(x, Oddon):
            return x
        if isinstance(x, GrassmannElement):
            return cls(x, None, kind)
        return cls(registry.scalar(x), None, kind)

    @property
    def registry(self) -> GeneratorRegistry:
        return self.a.registry

    @property
    def sign(self) -> int:
        """Square of the odd unit."""
        return 1 if self.kind == REAL else -1

    # arithmetic -----------------------------------------------------------

    def _lift(self, other) -> "Oddon | None":
        if isinstance(other, Oddon):
            if other.kind != self.kind:
                raise KindError("cannot combine real and complex oddons")
            if other.registry != self.registry:
                raise RegistryError("oddons belong to different registries")
            return other
        if isinstance(other, GrassmannElement):
            return Oddon(other, None, self.kind)
        if isinstance(other, (int, Fraction, CQ)) and not isinstance(other, bool):
            return Oddon(self.registry.scalar(other), None, self.kind)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Oddon(self.a + o.a, self.b + o.b, self.kind)

    __radd__ = __add__

    def __neg__(self):
        return Oddon(-self.a, -self.b, self.kind)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Oddon(self.a - o.a, self.b - o.b, self.kind)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CQ)) and not isinstance(other, bool):
            return self.scale(other)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return oddon_mul(self, o)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CQ)) and not isinstance(other, bool):
            return self.scale(other)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return oddon_mul(o, self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CQ)) and not isinstance(other, bool):
            return self.scale(as_cq(other).inverse())
        return NotImplemented

    def scale(self, c) -> "Oddon":
        return Oddon(self.a.scale(c), self.b.scale(c), self.kind)

    def __eq__(self, other):
        if isinstance(other, Oddon):
            return self.kind == other.kind and self.a == other.a and self.b == other.b
        if isinstance(other, (GrassmannElement, int, Fraction, CQ)) and not isinstance(other, bool):
            o = self._lift(other)
            return self == o
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    # structure ------------------------------------------------------------

    def even_part(self) -> "Oddon":
        """``a_0 + u b_1``."""
        return Oddon(self.a.even_part(), self.b.odd_part(), self.kind)

    def odd_part(self) -> "Oddon":
        """``a_1 + u b_0``."""
        return Oddon(self.a.odd_part(), self.b.even_part(), self.kind)

    def parity(self) -> int | None:
        ev, od = self.even_part(), self.odd_part()
        if od.is_zero():
            return 0
        if ev.is_zero():
            return 1
        return None

    def is_plain(self) -> bool:
        """No odd-unit component."""
        return self.b.is_zero()

    def J(self) -> "Oddon":
        """Parity automorphism on the oddon grading: even part kept, odd part negated."""
        return self.even_part() - self.odd_part()

    def derivative(self, gen) -> "Oddon":
        """Left derivative; it is odd, so it anticommutes with the unit."""
        return Oddon(self.a.derivative(gen), -self.b.derivative(gen), self.kind)

    def berezin(self, gens: Sequence[str]) -> "Oddon":
        """``int dzeta (a + u b) = int a + (-1)^k u int b`` over ``k`` variables."""
        gens = list(gens)
        s = -1 if len(gens) % 2 else 1
        return Oddon(self.a.berezin(gens), self.b.berezin(gens).scale(s), self.kind)

    def shift(self, shifts) -> "Oddon":
        return Oddon(self.a.shift(shifts), self.b.shift(shifts), self.kind)

    def to_real(self) -> "Oddon":
        """Complex oddon as a real oddon over complex coefficients via ``i^ = i 1^``."""
        if self.kind == REAL:
            return self
        return Oddon(self.a, self.b.scale(I), REAL)

    def to_complex(self) -> "Oddon":
        if self.kind == COMPLEX:
            return self
        return Oddon(self.a, self.b.scale(-I), COMPLEX)

    def first_coefficient(self):
        if self.a.terms:
            return self.a.terms[min(self.a.terms)]
        if self.b.terms:
            return self.b.terms[min(self.b.terms)]
        return None

    def coefficient_like(self, lhs: "Oddon"):
        if not isinstance(lhs, Oddon):
            return None
        if self.a.terms:
            return lhs.a.terms.get(min(self.a.terms), CQ(0))
        return lhs.b.terms.get(min(self.b.terms), CQ(0))

    def __repr__(self):
        u = "1^" if self.kind == REAL else "i^"
        if self.b.is_zero():
            return f"({self.a!r})"
        if self.a.is_zero():
            return f"{u}({self.b!r})"
        return f"({self.a!r}) + {u}({self.b!r})"


def oddon_mul(r: Oddon, s: Oddon) -> Oddon:
    """``(a + u b)(a' + u b') = a a' + u^2 J(b) b' + u (J(a) b' + b a')``."""
    if r.kind != s.kind:
        raise KindError("cannot multiply real and complex oddons")
    if r.registry != s.registry:
        raise RegistryError("oddons belong to different registries")
    jb = r.b.J()
    cross = jb * s.b
    a = r.a * s.a + (cross if r.sign > 0 else -cross)
    b = r.a.J() * s.b + r.b * s.a
    return Oddon(a, b, r.kind)


# ---------------------------------------------------------------------------
# inverses


def _neumann_inverse(r: Oddon) -> Oddon:
    """Inverse of an even oddon whose ``a`` has nonzero body."""
    c = r.a.body()
    one = Oddon.one(r.registry, r.kind)
    N = r.scale(c.inverse()) - one
    out = one
    term = one
    for _ in range(len(r.registry) + 2):
        term = -(term * N)
        if term.is_zero():
            break
        out = out + term
    else:
        raise ValueError("Neumann series did not terminate")
    return out.scale(c.inverse())


INVERSE_READINGS = ("even-part", "q0")


def oddon_inverse(r: Oddon, reading: str = "even-part") -> Oddon:
    """Two-sided inverse of a homogeneous oddon.

    ``reading="even-part"``: ``r`` must be even with ``a_0`` of nonzero body;
    odd oddons such as ``1^`` are rejected.
    ``reading="q0"``: the component of ``r`` lying in ``Q_0`` must have nonzero
    body (``a_0`` for even oddons, ``b_0`` for odd ones); odd oddons are reduced
    to even ones via ``r^-1 = (u r)^-1 u``, so ``1^`` is its own inverse.
    """
    if reading not in INVERSE_READINGS:
        raise ValueError(f"unknown inverse reading {reading!r}")
    if r.is_zero():
        raise ZeroDivisionError("zero oddon has no inverse")
    par = r.parity()
    if par is None:
        raise ParityError("only homogeneous oddons are inverted")
    u = Oddon.unit(r.registry, r.kind)
    if par == 0:
        if not r.a.body():
            raise ZeroDivisionError("even component has zero body")
        inv = _neumann_inverse(r)
    elif reading == "even-part":
        raise ZeroDivisionError("odd oddon: even component is zero")
    else:
        if not r.b.body():
            raise ZeroDivisionError("Q_0 component has zero body")
        inv = _neumann_inverse(u * r) * u
    one = Oddon.one(r.registry, r.kind)
    if r * inv != one or inv * r != one:
        raise ArithmeticError("inverse verification failed")
    return inv


# ---------------------------------------------------------------------------
# odd product and odd exponentials


def odd_star_product(r: Oddon, s: Oddon) -> Oddon:
    """``r * s = r 1^ s`` (real oddons only)."""
    if r.kind != REAL or s.kind != REAL:
        raise KindError("the odd product is defined for real oddons")
    return r * Oddon.unit(r.registry) * s


def odd_exp(q: Oddon, limit: int = 64) -> Oddon:
    """``e_*^q = 1^ + q + q*q/2 + ...`` (terminating)."""
    out = Oddon.unit(q.registry, q.kind)
    power = None
    for n in range(1, limit):
        power = q if power is None else odd_star_product(power, q)
        if power.is_zero():
            return out
        out = out + power.scale(Fraction(1, factorial(n)))
    raise ValueError("argument is not nilpotent under the odd product")


PLACEMENTS = ("left", "middle", "right")


def star_matmul(A, B, placement: str = "middle"):
    """Matrix odd product; ``1^`` inserted left of, between, or right of each entry product."""
    if placement not in PLACEMENTS:
        raise ValueError(f"unknown placement {placement!r}")
    n, k, p = len(A), len(B), len(B[0])
    if any(len(r) != k for r in A):
        raise ValueError("matrix dimensions do not match")
    reg = A[0][0].registry
    u = Oddon.unit(reg)
    zero = Oddon.zero(reg)
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = zero
            for t in range(k):
                x, y = A[i][t], B[t][j]
                if x.is_zero() or y.is_zero():
                    continue
                if placement == "left":
                    acc = acc + u * x * y
                elif placement == "middle":
                    acc = acc + x * u * y
                else:
                    acc = acc + x * y * u
            row.append(acc)
        out.append(row)
    return out


def _mat_zero(A) -> bool:
    return all(x.is_zero() for r in A for x in r)


def _mat_add(A, B):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(A, B)]


def _mat_scale(A, c):
    return [[x.scale(c) for x in r] for r in A]


def star_identity(n: int, registry: GeneratorRegistry):
    u, z = Oddon.unit(registry), Oddon.zero(registry)
    return [[u if i == j else z for j in range(n)] for i in range(n)]


def odd_matrix_exp(M, placement: str = "middle", limit: int = 64):
    """``e_*^M = 1^ Id + M + M*M/2 + ...`` for a nilpotent oddonic matrix."""
    reg = M[0][0].registry
    out = star_identity(len(M), reg)
    power = None
    for n in range(1, limit):
        power = M if power is None else star_matmul(power, M, placement)
        if _mat_zero(power):
            return out
        out = _mat_add(out, _mat_scale(power, Fraction(1, factorial(n))))
    raise ValueError("matrix is not nilpotent under the odd product")


def odd_mu(p: Sequence[Oddon], Theta: Sequence[Oddon], tau: Oddon):
    """Rows ``(0, p, tau)``, ``(0, 0, Theta_j)``, ``(0, 0, 0)``."""
    m = len(p)
    if len(Theta) != m:
        raise ValueError("p and Theta must have equal length")
    reg = tau.registry
    z = Oddon.zero(reg)
    rows = [[z] * (m + 2) for _ in range(m + 2)]
    for j in range(m):
        rows[0][1 + j] = p[j]
        rows[1 + j][m + 1] = Theta[j]
    rows[0][m + 1] = tau
    return rows


def _odd_pairing(x: Sequence[Oddon], y: Sequence[Oddon], prod: Callable) -> Oddon:
    out = Oddon.zero(x[0].registry)
    for a, b in zip(x, y):
        out = out + prod(a, b)
    return out


def odd_B1(v, w, product: str = "plain") -> Oddon:
    """``B1(v, v') = p.Theta' - Theta.p'`` for ``v = (p, Theta)``.

    ``product="star"`` pairs the entries with the odd product instead.
    """
    (p, Th), (p2, Th2) = v, w
    prod = (lambda a, b: a * b) if product == "plain" else odd_star_product
    return _odd_pairing(p, Th2, prod) - _odd_pairing(Th, p2, prod)


def find_star_placement(m: int = 1) -> str:
    """First 1^-placement for which ``1^ Id`` is a two-sided unit and the central case holds."""
    sp = FunctionSpace.standard(m, "Pi", "Theta")
    reg = sp.registry
    u = Oddon.unit(reg)
    p = [u * x for x in sp.family("Pi")]
    Th = [Oddon(x) for x in sp.family("Theta")]
    t1, t2 = u.scale(Fraction(2, 3)), u.scale(Fraction(-1, 5))
    z = [Oddon.zero(reg)] * m
    e = star_identity(m + 2, reg)
    for pl in PLACEMENTS:
        A = odd_mu(p, Th, t1)
        if star_matmul(e, A, pl) != A or star_matmul(A, e, pl) != A:
            continue
        lhs = star_matmul(odd_matrix_exp(odd_mu(z, z, t1), pl), odd_matrix_exp(odd_mu(z, z, t2), pl), pl)
        if lhs == odd_matrix_exp(odd_mu(z, z, t1 + t2), pl):
            return pl
    raise ValueError("no 1^-placement satisfies the central case")


def odd_exp_law_check(m: int = 1, placement: str | None = None) -> Report:
    """``e_*^{mu(p,Theta,tau)} * e_*^{mu(p',Theta',tau')} = e_*^{mu(p+p', Theta+Theta', tau+tau'+(p Theta' - Theta p')/2)}``."""
    sp = FunctionSpace.standard(m, "Pi", "Theta", "Pi_", "Theta_")
    reg = sp.registry
    pl = placement or find_star_placement(m)
    u = Oddon.unit(reg)
    p = [u * x for x in sp.family("Pi")]
    p2 = [u * x for x in sp.family("Pi_")]
    Th = [Oddon(x) for x in sp.family("Theta")]
    Th2 = [Oddon(x) for x in sp.family("Theta_")]
    t1, t2 = u.scale(Fraction(1, 3)), u.scale(Fraction(3, 4))
    zero = [Oddon.zero(reg)] * m
    rep = Report("oddons")
    rep.conventions["odd-matrix-product.placement"] = pl

    def E(pp, tt, tau):
        return odd_matrix_exp(odd_mu(pp, tt, tau), pl)

    lhs = star_matmul(E(zero, zero, t1), E(zero, zero, t2), pl)
    rep.add("odd-exp.central", "e_*^{mu(0,0,tau)} * e_*^{mu(0,0,tau')} = e_*^{mu(0,0,tau+tau')}",
            _Mat(lhs), _Mat(E(zero, zero, t1 + t2)), inputs={"m": m, "placement": pl}, invariant=True)
    lhs = star_matmul(E(p, Th, t1), E(p2, Th2, t2), pl)
    rep.add("odd-exp.increment", "p*Theta' - Theta*p' against p Theta' - Theta p'",
            odd_B1((p, Th), (p2, Th2), "star"), odd_B1((p, Th), (p2, Th2), "plain"),
            inputs={"m": m}, units=(u, -u))
    for mode in ("plain", "star"):
        inc = odd_B1((p, Th), (p2, Th2), mode).scale(Fraction(1, 2))
        rhs = E([a + b for a, b in zip(p, p2)], [a + b for a, b in zip(Th, Th2)], t1 + t2 + inc)
        rep.add(f"odd-exp.general.{mode}",
                "e_*^{mu(p,Theta,tau)} * e_*^{mu(p',Theta',tau')} = e_*^{mu(p+p',Theta+Theta',tau+tau'+(p Theta'-Theta p')/2)}",
                _Mat(lhs), _Mat(rhs), inputs={"m": m, "placement": pl, "pairing": mode},
                units=(_MatUnit(u), _MatUnit(-u)))
    return rep


class _Mat:
    """Matrix wrapper so oddonic matrices can go through :func:`report.compare`."""

    def __init__(self, rows):
        self.rows = rows

    def __eq__(self, other):
        return isinstance(other, _Mat) and self.rows == other.rows

    def __hash__(self):
        return 0

    def is_zero(self):
        return _mat_zero(self.rows)

    def scale(self, c):
        return _Mat(_mat_scale(self.rows, c))

    def first_coefficient(self):
        for r in self.rows:
            for x in r:
                c = x.first_coefficient()
                if c is not None:
                    return c
        return None

    def coefficient_like(self, lhs):
        if not isinstance(lhs, _Mat):
            return None
        for r, s in zip(self.rows, lhs.rows):
            for x, y in zip(r, s):
                if not x.is_zero():
                    return x.coefficient_like(y)
        return None

    def __repr__(self):
        return "[" + "; ".join(", ".join(repr(x) for x in r) for r in self.rows) + "]"


class _MatUnit:
    """Left multiplication of every entry by a fixed oddon, for discrepancy detection."""

    def __init__(self, u: Oddon):
        self.u = u

    def __mul__(self, M: _Mat) -> _Mat:
        return _Mat([[self.u * x for x in r] for r in M.rows])

    def __str__(self):
        return repr(self.u)


# ---------------------------------------------------------------------------
# odd Heisenberg group


@dataclass(frozen=True)
class OddHeisenbergElement:
    """``(p, Theta, tau)`` with ``p = 1^ Pi`` (``Pi`` odd), ``Theta`` odd and ``tau = t 1^``."""

    p: tuple[Oddon, ...]
    Theta: tuple[Oddon, ...]
    tau: Oddon

    def __init__(self, p, Theta, tau):
        p, Theta = tuple(p), tuple(Theta)
        if len(p) != len(Theta):
            raise ValueError("p and Theta must have equal length")
        for x in p:
            if x.parity() != 0:
                raise ParityError("p entries must be even oddons (1^ times odd)")
        for x in Theta:
            if not x.is_plain() or not (x.is_zero() or x.parity() == 1):
                raise ParityError("Theta entries must be odd Grassmann elements")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "Theta", Theta)
        object.__setattr__(self, "tau", tau)

    @classmethod
    def from_parameters(cls, Pi: Sequence[GrassmannElement], Theta: Sequence[GrassmannElement], t) -> "OddHeisenbergElement":
        reg = (list(Pi) + list(Theta))[0].registry
        u = Oddon.unit(reg)
        return cls([u * x for x in Pi], [Oddon(x) for x in Theta], u.scale(t))

    @property
    def m(self) -> int:
        return len(self.p)

    def Pi(self) -> list[GrassmannElement]:
        """Recover ``Pi`` from ``p = 1^ Pi``."""
        out = []
        for x in self.p:
            y = Oddon.unit(x.registry) * x
            if not y.is_plain():
                raise ParityError("p is not of the form 1^ Pi")
            out.append(y.a)
        return out


def odd_group_compose(g: OddHeisenbergElement, h: OddHeisenbergElement) -> OddHeisenbergElement:
    """``(v, tau)(v', tau') = (v + v', tau + tau' + B1(v, v')/2)``."""
    if g.m != h.m:
        raise ValueError("dimension mismatch")
    inc = odd_B1((g.p, g.Theta), (h.p, h.Theta)).scale(Fraction(1, 2))
    return OddHeisenbergElement(
        [a + b for a, b in zip(g.p, h.p)],
        [a + b for a, b in zip(g.Theta, h.Theta)],
        g.tau + h.tau + inc,
    )


# ---------------------------------------------------------------------------
# oddonic representation


def odd_pi_apply(g: OddHeisenbergElement, f: GrassmannElement, space: FunctionSpace) -> Oddon:
    """``exp_*[i^(t + Theta X + Pi D)] f`` summed as an operator series, ``D_j = i^ d_j``.

    Computed over real oddons with ``i^ = i 1^``; ``exp_*(A) f = exp(A 1^)(1^ f)``.
    Only ``t = 0`` is supported: for ``t != 0`` the factor ``exp(1^ i t)`` is
    ``cos t + 1^ i sin t`` and leaves exact rational arithmetic.
    """
    reg = space.registry
    if not g.tau.is_zero():
        raise ValueError("odd_pi_apply supports tau = 0 only")
    u = Oddon.unit(reg)
    iu = u.scale(I)
    Pi = [Oddon(x) for x in g.Pi()]
    tz = Oddon(dot([x.a for x in g.Theta], space.zeta()))

    def A(h: Oddon) -> Oddon:
        out = iu * tz * h
        for pj, zj in zip(Pi, space.zetas):
            out = out + iu * pj * iu * h.derivative(zj)
        return out

    def Ahat(h: Oddon) -> Oddon:
        return A(u * h)

    out = u * Oddon(f)
    term = out
    for k in range(1, 64):
        term = Ahat(term).scale(Fraction(1, k))
        if term.is_zero():
            return out
        out = out + term
    raise ValueError("operator series did not terminate")


def oddon_substitute(f: GrassmannElement, shifts: dict[str, Oddon], kind: str = REAL) -> Oddon:
    """``f`` with each generator ``x`` replaced by ``x + shifts[x]``, expanded in oddon arithmetic.

    Monomials are expanded in ascending generator order, so the result does not
    depend on how ``f`` was built.
    """
    reg = f.registry
    idx = {reg.index(k): v for k, v in shifts.items()}
    out = Oddon.zero(reg, kind)
    for mask, c in f.terms.items():
        term = Oddon(reg.scalar(c), None, kind)
        for b in bits(mask):
            factor = Oddon(reg.gen(b), None, kind)
            if b in idx:
                factor = factor + idx[b]
            term = term * factor
        out = out + term
    return out


def odd_pi_closed_form(g: OddHeisenbergElement, f: GrassmannElement, space: FunctionSpace,
                       reading: str = "literal") -> Oddon:
    """Closed form of the oddonic representation at ``t = 0``.

    ``reading="literal"``: ``exp_*[i(Theta zeta + Theta*p/2)] f(zeta + 1^ p)``.
    ``reading="derived"``: ``exp_*[i^ Theta zeta + i Theta*p/2] f(zeta + p)``, with the
    oddonic shift ``p = 1^ Pi`` substituted in oddon arithmetic.
    """
    if reading not in ("literal", "derived"):
        raise ValueError(f"unknown reading {reading!r}")
    if not g.tau.is_zero():
        raise ValueError("the closed form is evaluated at tau = 0 only")
    reg = space.registry
    u = Oddon.unit(reg)
    tz = Oddon(dot([x.a for x in g.Theta], space.zeta()))
    half = _odd_pairing(list(g.Theta), list(g.p), odd_star_product).scale(Fraction(1, 2)).scale(I)
    if reading == "literal":
        x = tz.scale(I) + half
        shifts = [u * x for x in g.p]
        for s in shifts:
            if not s.is_plain():
                raise ParityError("1^ p must be an ordinary odd element")
        moved = Oddon(f.shift({z: s.a for z, s in zip(space.zetas, shifts) if s.a}))
    else:
        x = u.scale(I) * tz + half
        moved = oddon_substitute(f, dict(zip(space.zetas, g.p)))
    return odd_exp(x) * moved


def odd_pi_check(m: int = 1) -> Report:
    """Operator series against both closed forms on every basis monomial."""
    sp = FunctionSpace.standard(m, "Pi", "Theta")
    g = OddHeisenbergElement.from_parameters(sp.family("Pi"), sp.family("Theta"), 0)
    u = Oddon.unit(sp.registry)
    rep = Report("oddons")
    for idx, f in sp.basis():
        lhs = odd_pi_apply(g, f, sp)
        inputs = {"m": m, "f": list(idx)}
        rep.add(f"odd-pi.literal.f{list(idx)}",
                "exp_*[i^(t+Theta X+Pi D)] f = exp_*[i(t+Theta zeta+Theta*p/2)] f(zeta+1^ p)",
                lhs, odd_pi_closed_form(g, f, sp, "literal"), inputs=inputs, units=(u, -u))
        rep.add(f"odd-pi.derived.f{list(idx)}",
                "exp_*[i^(t+Theta X+Pi D)] f = exp_*[i^ Theta zeta + i Theta*p/2] f(zeta+p)",
                lhs, odd_pi_closed_form(g, f, sp, "derived"), inputs=inputs, units=(u, -u))
    return rep


def odd_fourier_wigner(f: GrassmannElement, g: GrassmannElement, space: FunctionSpace,
                       Pi: str = "Pi", Theta: str = "Theta") -> Oddon:
    """``V(f,g)(p, Theta) = int dzeta f*(zeta - 1^ p/2) exp(i Theta zeta) g(zeta + 1^ p/2)`` with ``p = 1^ Pi``."""
    reg = space.registry
    u = Oddon.unit(reg)
    p = [u * x for x in space.family(Pi)]
    half = [(u * x).scale(Fraction(1, 2)) for x in p]
    for h in half:
        if not h.is_plain():
            raise ParityError("1^ p must be an ordinary odd element")
    left = f.star().shift({z: -h.a for z, h in zip(space.zetas, half) if h.a})
    right = g.shift({z: h.a for z, h in zip(space.zetas, half) if h.a})
    kernel = dot(space.family(Theta), space.zeta()).scale(I).exp()
    return Oddon(left * kernel * right).berezin(space.zetas)


@dataclass(frozen=True)
class OddBargmannResult:
    """``2^(log2_prefactor) * value``; the prefactor ``2^(-n/4)`` is irrational for ``n = 2``."""

    value: Oddon
    log2_prefactor: Fraction


def odd_bargmann(f: GrassmannElement, G, space: FunctionSpace) -> OddBargmannResult:
    """``2^(-n/4) int dzeta e_*^{zeta G^ zeta/2 - zeta.z - z G^^-1 z} f(zeta)``.

    ``G^ = 1^ G``, ``z_k = G_kj p_j + i^ Theta_k`` with ``p = 1^ Pi``; computed over
    real oddons with ``i^ = i 1^``.  Quadratic forms are summed over ``i < j``
    and use the same coefficients as the even transform.
    """
    G = as_antisymmetric(G)
    if G.m != space.m:
        raise ValueError("G and the function space have different sizes")
    G.inverse_sqrt_pfaffian()
    Ginv = G.inverse()
    reg = space.registry
    u = Oddon.unit(reg)
    zeta = [Oddon(x) for x in space.zeta()]
    p = [u * x for x in space.family("Pi")]
    Th = [Oddon(x) for x in space.family("Theta")]
    z = []
    for k in range(G.m):
        acc = (u * Th[k]).scale(I)
        for j in range(G.m):
            if G[k][j]:
                acc = acc + p[j].scale(G[k][j])
        z.append(acc)
    Ghat = [[u.scale(c) for c in row] for row in G.entries]
    Ghat_inv = [[u.scale(c) for c in row] for row in Ginv]
    X = (
        _oddon_quadratic(zeta, Ghat).scale(Fraction(1, 2))
        - _odd_pairing(zeta, z, lambda a, b: a * b)
        - _oddon_quadratic(z, Ghat_inv)
    )
    value = (odd_exp(X) * Oddon(f)).berezin(space.zetas)
    return OddBargmannResult(value, Fraction(-G.m, 4))


def _oddon_quadratic(v: Sequence[Oddon], M) -> Oddon:
    out = Oddon.zero(v[0].registry)
    n = len(v)
    for i in range(n):
        for j in range(i + 1, n):
            if not M[i][j].is_zero():
                out = out + v[i] * M[i][j] * v[j]
    return out
