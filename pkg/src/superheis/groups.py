"""Heisenberg, fermionic Heisenberg and super-Heisenberg groups.

Group elements are coordinate tuples; every law is also realised by exact
products of (super)matrices so the two can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .grassmann import GeneratorRegistry, GrassmannElement, ParityError
from .linalg import matmul
from .report import Report
from .scalars import as_fraction

__all__ = [
    "HeisenbergTuple",
    "SuperHeisenbergTuple",
    "SuperMatrix",
    "h_compose_polarized",
    "h_compose_symmetric",
    "h_exp",
    "h_inverse_polarized",
    "h_inverse_symmetric",
    "m_matrix",
    "M_matrix",
    "lie_algebra_product_check",
    "fermionic_mu",
    "fermionic_M",
    "sh_matrix",
    "sh_algebra_matrix",
    "sh_compose_polarized",
    "sh_compose_diamond",
    "sh_inverse_polarized",
    "sh_inverse_diamond",
    "sh_exp_coordinates",
    "sh_from_matrix",
    "matrix_exp_nilpotent",
    "h_log",
    "supersymplectic_B",
    "fermionic_commutator",
]


def _pair(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return zip(a, b)


def _rdot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in _pair(a, b)), Fraction(0))


# ---------------------------------------------------------------------------
# classical Heisenberg group


@dataclass(frozen=True)
class HeisenbergTuple:
    p: tuple[Fraction, ...]
    q: tuple[Fraction, ...]
    t: Fraction

    def __init__(self, p, q, t=0):
        p = tuple(as_fraction(x) for x in p)
        q = tuple(as_fraction(x) for x in q)
        if len(p) != len(q) or not p:
            raise ValueError("p and q must be nonempty and of equal length")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "t", as_fraction(t))

    @property
    def n(self) -> int:
        return len(self.p)

    @classmethod
    def identity(cls, n: int) -> "HeisenbergTuple":
        return cls([0] * n, [0] * n, 0)


def h_compose_polarized(g: HeisenbergTuple, h: HeisenbergTuple) -> HeisenbergTuple:
    """``(p+p', q+q', t+t'+p.q')``."""
    return HeisenbergTuple(
        [a + b for a, b in _pair(g.p, h.p)],
        [a + b for a, b in _pair(g.q, h.q)],
        g.t + h.t + _rdot(g.p, h.q),
    )


def h_compose_symmetric(g: HeisenbergTuple, h: HeisenbergTuple) -> HeisenbergTuple:
    """``(p+p', q+q', t+t'+(p.q' - p'.q)/2)``."""
    return HeisenbergTuple(
        [a + b for a, b in _pair(g.p, h.p)],
        [a + b for a, b in _pair(g.q, h.q)],
        g.t + h.t + (_rdot(g.p, h.q) - _rdot(h.p, g.q)) / 2,
    )


def h_exp(g: HeisenbergTuple) -> HeisenbergTuple:
    """Polarized coordinates of ``exp(m(p,q,t))``: ``(p, q, t + p.q/2)``."""
    return HeisenbergTuple(g.p, g.q, g.t + _rdot(g.p, g.q) / 2)


def h_log(g: HeisenbergTuple) -> HeisenbergTuple:
    return HeisenbergTuple(g.p, g.q, g.t - _rdot(g.p, g.q) / 2)


def h_inverse_polarized(g: HeisenbergTuple) -> HeisenbergTuple:
    return HeisenbergTuple([-x for x in g.p], [-x for x in g.q], -g.t + _rdot(g.p, g.q))


def h_inverse_symmetric(g: HeisenbergTuple) -> HeisenbergTuple:
    return HeisenbergTuple([-x for x in g.p], [-x for x in g.q], -g.t)


def m_matrix(g: HeisenbergTuple) -> list[list[Fraction]]:
    """Strictly upper triangular ``(n+2)x(n+2)`` Lie algebra matrix ``m(p,q,t)``."""
    n = g.n
    size = n + 2
    out = [[Fraction(0)] * size for _ in range(size)]
    for j in range(n):
        out[0][1 + j] = g.p[j]
        out[1 + j][n + 1] = g.q[j]
    out[0][n + 1] = g.t
    return out


def M_matrix(g: HeisenbergTuple) -> list[list[Fraction]]:
    """Group matrix ``M(p,q,t) = 1 + m(p,q,t)``."""
    out = m_matrix(g)
    for i in range(len(out)):
        out[i][i] += 1
    return out


def matrix_exp_nilpotent(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    result = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    term = [row[:] for row in result]
    k = 0
    while True:
        k += 1
        term = [[x / k for x in row] for row in matmul(term, a, Fraction(0))]
        if not any(any(row) for row in term):
            return result
        if k > n + 1:
            raise ValueError("matrix is not nilpotent")
        result = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(result, term)]


def lie_algebra_product_check(g: HeisenbergTuple, h: HeisenbergTuple) -> Report:
    """``m(g) m(h) = m(0, 0, p.q')`` and ``[P_j, Q_k] = delta_jk T``."""
    rep = Report("lie-algebra")
    n = g.n
    lhs = matmul(m_matrix(g), m_matrix(h), Fraction(0))
    rhs = m_matrix(HeisenbergTuple([0] * n, [0] * n, _rdot(g.p, h.q)))
    rep.add_bool(
        "lie.product",
        "m(p,q,t) m(p',q',t') = m(0,0,pq')",
        lhs == rhs,
        inputs={"g": _h_json(g), "h": _h_json(h)},
    )
    for j in range(n):
        for k in range(n):
            P = m_matrix(HeisenbergTuple([int(i == j) for i in range(n)], [0] * n, 0))
            Q = m_matrix(HeisenbergTuple([0] * n, [int(i == k) for i in range(n)], 0))
            comm = _sub(matmul(P, Q, Fraction(0)), matmul(Q, P, Fraction(0)))
            T = m_matrix(HeisenbergTuple([0] * n, [0] * n, int(j == k)))
            rep.add_bool(f"lie.PQ.{j + 1}.{k + 1}", "[P_j, Q_k] = delta_jk T", comm == T)
    return rep


def _sub(a, b):
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def _h_json(g: HeisenbergTuple) -> dict:
    return {"p": [str(x) for x in g.p], "q": [str(x) for x in g.q], "t": str(g.t)}


# ---------------------------------------------------------------------------
# supermatrices


class SuperMatrix:
    """Square matrix over a (super)commutative-enough ring with row/column parities.

    Entries are any objects with ``+``, ``-`` and ``*`` (GrassmannElement,
    PhasedElement, Oddon).  ``zero`` is the additive identity of the ring.
    """

    __slots__ = ("entries", "parities", "zero")

    def __init__(self, entries, parities: Sequence[int] | None = None, zero=None):
        rows = [list(r) for r in entries]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("supermatrix must be square")
        self.entries = rows
        self.parities = tuple(parities) if parities is not None else (0,) * n
        if len(self.parities) != n:
            raise ValueError("parity layout does not match matrix size")
        self.zero = zero if zero is not None else rows[0][0] - rows[0][0]

    @property
    def size(self) -> int:
        return len(self.entries)

    def _check(self, other: "SuperMatrix"):
        if self.size != other.size:
            raise ValueError("supermatrix dimension mismatch")
        if self.parities != other.parities:
            raise ValueError("supermatrix parity layouts differ")

    def __add__(self, other: "SuperMatrix") -> "SuperMatrix":
        self._check(other)
        return SuperMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.parities,
            self.zero,
        )

    def __sub__(self, other: "SuperMatrix") -> "SuperMatrix":
        self._check(other)
        return SuperMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.parities,
            self.zero,
        )

    def __mul__(self, other):
        if isinstance(other, SuperMatrix):
            self._check(other)
            return SuperMatrix(matmul(self.entries, other.entries, self.zero), self.parities, self.zero)
        return SuperMatrix([[a * other for a in r] for r in self.entries], self.parities, self.zero)

    def scale(self, c) -> "SuperMatrix":
        return SuperMatrix([[a.scale(c) for a in r] for r in self.entries], self.parities, self.zero)

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return self.parities == other.parities and self.entries == other.entries

    def __hash__(self):
        return hash(tuple(tuple(hash(x) for x in r) for r in self.entries))

    def is_zero(self) -> bool:
        return all(x == self.zero for r in self.entries for x in r)

    def identity(self, one) -> "SuperMatrix":
        n = self.size
        return SuperMatrix(
            [[one if i == j else self.zero for j in range(n)] for i in range(n)], self.parities, self.zero
        )

    def power(self, k: int, one) -> "SuperMatrix":
        out = self.identity(one)
        for _ in range(k):
            out = out * self
        return out

    def exp(self, one) -> "SuperMatrix":
        """Terminating exponential series of a nilpotent supermatrix."""
        result = self.identity(one)
        term = self.identity(one)
        k = 0
        while True:
            k += 1
            term = (term * self).scale(Fraction(1, k))
            if term.is_zero():
                return result
            if k > 4 * self.size + 64:
                raise ValueError("supermatrix is not nilpotent")
            result = result + term

    def is_homogeneous_even(self) -> bool:
        for i, r in enumerate(self.entries):
            for j, x in enumerate(r):
                want = self.parities[i] ^ self.parities[j]
                par = x.parity() if hasattr(x, "parity") else 0
                if x != self.zero and par != want:
                    return False
        return True

    def __repr__(self):
        return "SuperMatrix(" + "; ".join(", ".join(repr(x) for x in r) for r in self.entries) + ")"


# ---------------------------------------------------------------------------
# super-Heisenberg tuples


def _even_t(registry: GeneratorRegistry, t) -> GrassmannElement:
    if isinstance(t, GrassmannElement):
        if not t.is_even():
            raise ParityError("central coordinate t must be even")
        return t
    return registry.scalar(as_fraction(t))


@dataclass(frozen=True, eq=True)
class SuperHeisenbergTuple:
    """``(p, q, Pi, Theta, t)``: rational ``p, q``; odd ``Pi, Theta``; even ``t``."""

    registry: GeneratorRegistry
    p: tuple[Fraction, ...]
    q: tuple[Fraction, ...]
    Pi: tuple[GrassmannElement, ...]
    Theta: tuple[GrassmannElement, ...]
    t: GrassmannElement

    def __init__(self, registry, p=(), q=(), Pi=(), Theta=(), t=0):
        p = tuple(as_fraction(x) for x in p)
        q = tuple(as_fraction(x) for x in q)
        Pi, Theta = tuple(Pi), tuple(Theta)
        if len(p) != len(q):
            raise ValueError("p and q must have equal length")
        if len(Pi) != len(Theta):
            raise ValueError("Pi and Theta must have equal length")
        for x in Pi + Theta:
            if x.registry != registry:
                raise ValueError("odd coordinates belong to another registry")
            if not x.is_odd():
                raise ParityError("Pi and Theta entries must be odd")
        object.__setattr__(self, "registry", registry)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "Pi", Pi)
        object.__setattr__(self, "Theta", Theta)
        object.__setattr__(self, "t", _even_t(registry, t))

    @property
    def n(self) -> int:
        return len(self.p)

    @property
    def m(self) -> int:
        return len(self.Pi)

    @classmethod
    def identity(cls, registry, n: int, m: int) -> "SuperHeisenbergTuple":
        z = registry.zero()
        return cls(registry, [0] * n, [0] * n, [z] * m, [z] * m, 0)

    def replace_t(self, t) -> "SuperHeisenbergTuple":
        return SuperHeisenbergTuple(self.registry, self.p, self.q, self.Pi, self.Theta, t)

    def bosonic(self) -> HeisenbergTuple:
        if not self.t.is_scalar():
            raise ValueError("central coordinate has a nonzero soul")
        return HeisenbergTuple(self.p, self.q, self.t.body().re)


def _odot(a: Sequence[GrassmannElement], b: Sequence[GrassmannElement], registry) -> GrassmannElement:
    out = registry.zero()
    for x, y in _pair(a, b):
        out = out + x * y
    return out


def _check_dims(g: SuperHeisenbergTuple, h: SuperHeisenbergTuple) -> None:
    if g.registry != h.registry:
        raise ValueError("tuples belong to different registries")
    if g.n != h.n or g.m != h.m:
        raise ValueError(f"dimension mismatch: (n,m)=({g.n},{g.m}) vs ({h.n},{h.m})")


def pq_pairing(g: SuperHeisenbergTuple, h: SuperHeisenbergTuple) -> Fraction:
    return _rdot(g.p, h.q)


def sh_compose_polarized(g: SuperHeisenbergTuple, h: SuperHeisenbergTuple) -> SuperHeisenbergTuple:
    """``t'' = t + t' + p.q' + Pi.Theta'``."""
    _check_dims(g, h)
    reg = g.registry
    t = g.t + h.t + _rdot(g.p, h.q) + _odot(g.Pi, h.Theta, reg)
    return SuperHeisenbergTuple(
        reg,
        [a + b for a, b in zip(g.p, h.p)],
        [a + b for a, b in zip(g.q, h.q)],
        [a + b for a, b in zip(g.Pi, h.Pi)],
        [a + b for a, b in zip(g.Theta, h.Theta)],
        t,
    )


def sh_compose_diamond(g: SuperHeisenbergTuple, h: SuperHeisenbergTuple) -> SuperHeisenbergTuple:
    """``t'' = t + t' + (p.q' - q.p')/2 + (Pi.Theta' + Theta.Pi')/2``."""
    _check_dims(g, h)
    reg = g.registry
    t = (
        g.t
        + h.t
        + (_rdot(g.p, h.q) - _rdot(g.q, h.p)) / 2
        + (_odot(g.Pi, h.Theta, reg) + _odot(g.Theta, h.Pi, reg)).scale(Fraction(1, 2))
    )
    return SuperHeisenbergTuple(
        reg,
        [a + b for a, b in zip(g.p, h.p)],
        [a + b for a, b in zip(g.q, h.q)],
        [a + b for a, b in zip(g.Pi, h.Pi)],
        [a + b for a, b in zip(g.Theta, h.Theta)],
        t,
    )


def sh_inverse_polarized(g: SuperHeisenbergTuple) -> SuperHeisenbergTuple:
    reg = g.registry
    t = -g.t + _rdot(g.p, g.q) + _odot(g.Pi, g.Theta, reg)
    return SuperHeisenbergTuple(
        reg, [-x for x in g.p], [-x for x in g.q], [-x for x in g.Pi], [-x for x in g.Theta], t
    )


def sh_inverse_diamond(g: SuperHeisenbergTuple) -> SuperHeisenbergTuple:
    return SuperHeisenbergTuple(
        g.registry, [-x for x in g.p], [-x for x in g.q], [-x for x in g.Pi], [-x for x in g.Theta], -g.t
    )


def sh_exp_coordinates(g: SuperHeisenbergTuple) -> SuperHeisenbergTuple:
    """Polarized coordinates of ``exp`` of the algebra element: ``t -> t + (p.q + Pi.Theta)/2``."""
    shift = _rdot(g.p, g.q) + _odot(g.Pi, g.Theta, g.registry)
    return g.replace_t(g.t + shift.scale(Fraction(1, 2)))


def _layout(n: int, m: int) -> tuple[int, ...]:
    return (0,) * (n + 2) + (1,) * m


def sh_algebra_matrix(g: SuperHeisenbergTuple) -> SuperMatrix:
    """Nilpotent algebra supermatrix; rows ``(0, p, t | Pi)``, ``(0, 0, q | 0)``, ``(0, 0, 0 | 0)``, ``(0, 0, Theta | 0)``."""
    reg = g.registry
    n, m = g.n, g.m
    size = n + 2 + m
    z = reg.zero()
    rows = [[z] * size for _ in range(size)]
    for j in range(n):
        rows[0][1 + j] = reg.scalar(g.p[j])
        rows[1 + j][n + 1] = reg.scalar(g.q[j])
    rows[0][n + 1] = g.t
    for j in range(m):
        rows[0][n + 2 + j] = g.Pi[j]
        rows[n + 2 + j][n + 1] = g.Theta[j]
    return SuperMatrix(rows, _layout(n, m), z)


def sh_matrix(g: SuperHeisenbergTuple) -> SuperMatrix:
    """Group supermatrix ``1 + algebra matrix`` (polarized realisation)."""
    a = sh_algebra_matrix(g)
    return a + a.identity(g.registry.one())


def sh_from_matrix(M: SuperMatrix, n: int, m: int, registry: GeneratorRegistry) -> SuperHeisenbergTuple:
    """Read the coordinates off a group supermatrix, checking the shape."""
    one = registry.one()
    E = M - M.identity(one)
    expect = sh_algebra_matrix(
        SuperHeisenbergTuple(
            registry,
            [_body_rational(E.entries[0][1 + j]) for j in range(n)],
            [_body_rational(E.entries[1 + j][n + 1]) for j in range(n)],
            [E.entries[0][n + 2 + j] for j in range(m)],
            [E.entries[n + 2 + j][n + 1] for j in range(m)],
            E.entries[0][n + 1],
        )
    )
    if expect != E:
        raise ValueError("supermatrix is not of super-Heisenberg form")
    return SuperHeisenbergTuple(
        registry,
        [_body_rational(E.entries[0][1 + j]) for j in range(n)],
        [_body_rational(E.entries[1 + j][n + 1]) for j in range(n)],
        [E.entries[0][n + 2 + j] for j in range(m)],
        [E.entries[n + 2 + j][n + 1] for j in range(m)],
        E.entries[0][n + 1],
    )


def _body_rational(x: GrassmannElement) -> Fraction:
    if not x.is_scalar() or x.body().im:
        raise ValueError("expected a real rational entry")
    return x.body().re


# ---------------------------------------------------------------------------
# fermionic Heisenberg group


def fermionic_mu(Pi: Sequence[GrassmannElement], Theta: Sequence[GrassmannElement], t, registry=None) -> SuperMatrix:
    """Rows ``(0, t | Pi)``, ``(0, 0 | 0)``, ``(0, Theta_j | 0)``."""
    Pi, Theta = list(Pi), list(Theta)
    if len(Pi) != len(Theta):
        raise ValueError("Pi and Theta must have equal length")
    reg = registry or (Pi[0].registry if Pi else None)
    if reg is None:
        raise ValueError("cannot infer a registry")
    for x in Pi + Theta:
        if not x.is_odd():
            raise ParityError("Pi and Theta entries must be odd")
    t = _even_t(reg, t)
    m = len(Pi)
    z = reg.zero()
    rows = [[z] * (m + 2) for _ in range(m + 2)]
    rows[0][1] = t
    for j in range(m):
        rows[0][2 + j] = Pi[j]
        rows[2 + j][1] = Theta[j]
    return SuperMatrix(rows, (0, 0) + (1,) * m, z)


def fermionic_M(Pi, Theta, t, registry=None) -> SuperMatrix:
    mu = fermionic_mu(Pi, Theta, t, registry)
    return mu + mu.identity(mu.zero + 1)


def fermionic_commutator(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    """Bracket of two even algebra supermatrices (ordinary commutator)."""
    return a * b - b * a


def supersymplectic_B(v, w) -> GrassmannElement:
    """``B(v, v') = Pi.Theta' + Theta.Pi'`` for ``v = (Pi, Theta)``."""
    Pi, Theta = v
    Pi2, Theta2 = w
    reg = (list(Pi) + list(Theta))[0].registry
    return _odot(Pi, Theta2, reg) + _odot(Theta, Pi2, reg)
