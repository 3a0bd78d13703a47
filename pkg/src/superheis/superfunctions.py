"""Superfunctions of m odd variables: Q-inner product, Gaussian, Pfaffian, Hermite.

Quadratic forms ``vMv`` over odd vectors are read as the single sum
``sum_{i<j} M_ij v_i v_j``.  For antisymmetric ``M`` the double sum is exactly
twice this, so ``exp(vMv)`` differs between the two readings; the single sum
is the one that normalises the Gaussian with the literal ``(Pf G)^(-1/2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import linalg
from .grassmann import GeneratorRegistry, GrassmannElement, ParityError, PhasedElement, RegistryError
from .linalg import Matrix
from .report import Report
from .scalars import CQ, I, as_fraction

__all__ = [
    "FunctionSpace",
    "AntisymmetricMatrix",
    "HermiteFamily",
    "quadratic_form",
    "bilinear",
    "dot",
    "q_inner",
    "adjoint_check",
    "pfaffian",
    "gaussian",
    "hermite",
    "canonical_G",
]


# ---------------------------------------------------------------------------
# function spaces


@dataclass(frozen=True)
class FunctionSpace:
    """Registry with ``m`` zeta variables plus named families of odd parameters.

    ``FunctionSpace.standard(2, "Pi", "Theta")`` gives generators
    ``zeta1 zeta2 Pi1 Pi2 Theta1 Theta2`` in that order.
    """

    registry: GeneratorRegistry
    m: int
    zetas: tuple[str, ...]
    families: tuple[str, ...] = ()

    @classmethod
    def standard(cls, m: int, *families: str, fock: bool = False) -> "FunctionSpace":
        if m < 1:
            raise ValueError("need at least one zeta variable")
        zetas = tuple(f"zeta{j}" for j in range(1, m + 1))
        groups: dict[str, list[str]] = {"zeta": list(zetas)}
        params = [f"{fam}{j}" for fam in families for j in range(1, m + 1)]
        groups["parameter"] = params
        if fock:
            groups["fock_z"] = [f"z{j}" for j in range(1, m + 1)]
            groups["fock_zstar"] = [f"zbar{j}" for j in range(1, m + 1)]
        return cls(GeneratorRegistry.from_groups(**groups), m, zetas, tuple(families))

    def extend(self, *families: str) -> "FunctionSpace":
        """Same space with extra parameter families appended to the registry."""
        new = [f"{fam}{j}" for fam in families for j in range(1, self.m + 1)]
        reg = self.registry.extend(parameter=new)
        return FunctionSpace(reg, self.m, self.zetas, self.families + tuple(families))

    def zeta(self) -> list[GrassmannElement]:
        return [self.registry.gen(z) for z in self.zetas]

    def family(self, name: str) -> list[GrassmannElement]:
        if name not in self.families:
            raise RegistryError(f"no parameter family {name!r} in this space")
        return [self.registry.gen(f"{name}{j}") for j in range(1, self.m + 1)]

    def labels(self, name: str) -> list[str]:
        if name not in self.families:
            raise RegistryError(f"no parameter family {name!r} in this space")
        return [f"{name}{j}" for j in range(1, self.m + 1)]

    def zeros(self) -> list[GrassmannElement]:
        return [self.registry.zero() for _ in range(self.m)]

    def monomial(self, idx: Sequence[int]) -> GrassmannElement:
        """``zeta_{i1} ... zeta_{ik}`` for 0-based indices, in the order given."""
        return self.registry.monomial([self.zetas[i] for i in idx])

    def multi_indices(self) -> Iterator[tuple[int, ...]]:
        for k in range(self.m + 1):
            yield from combinations(range(self.m), k)

    def basis(self) -> list[tuple[tuple[int, ...], GrassmannElement]]:
        return [(idx, self.monomial(idx)) for idx in self.multi_indices()]

    def integrate(self, f):
        return f.berezin(self.zetas)

    def zeta_support_ok(self, f: GrassmannElement) -> bool:
        zmask = self.registry.role_mask("zeta")
        allowed = self.registry.mask(self.zetas)
        return f.support() & zmask & ~allowed == 0


# ---------------------------------------------------------------------------
# forms


def _zero_like(vs) -> GrassmannElement:
    for v in vs:
        return v.registry.zero()
    raise ValueError("empty vector")


def quadratic_form(v: Sequence[GrassmannElement], M: Sequence[Sequence]) -> GrassmannElement:
    """``vMv`` read as ``sum_{i<j} M_ij v_i v_j``."""
    out = _zero_like(v)
    n = len(v)
    for i in range(n):
        for j in range(i + 1, n):
            c = M[i][j]
            if c:
                out = out + (v[i] * v[j]).scale(c)
    return out


def bilinear(u: Sequence[GrassmannElement], M: Sequence[Sequence], v: Sequence[GrassmannElement]) -> GrassmannElement:
    """``uMv = sum_{ij} u_i M_ij v_j``."""
    out = _zero_like(u)
    for i in range(len(u)):
        for j in range(len(v)):
            c = M[i][j]
            if c:
                out = out + (u[i] * v[j]).scale(c)
    return out


def dot(u: Sequence[GrassmannElement], v: Sequence[GrassmannElement]) -> GrassmannElement:
    """Euclidean pairing ``sum_j u_j v_j``."""
    if len(u) != len(v):
        raise ValueError("vector lengths differ")
    out = _zero_like(u)
    for a, b in zip(u, v):
        out = out + a * b
    return out


def mat_vec(M: Sequence[Sequence], v: Sequence[GrassmannElement]) -> list[GrassmannElement]:
    out = []
    for row in M:
        acc = _zero_like(v)
        for c, x in zip(row, v):
            if c:
                acc = acc + x.scale(c)
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# inner product and adjoints


def q_inner(f, g, gens: Iterable[str] | None = None):
    """``<f, g> = int dzeta f* g`` over ``gens`` (default: every zeta generator)."""
    if isinstance(f, GrassmannElement) and isinstance(g, GrassmannElement):
        return (f.star() * g).berezin(gens)
    return (PhasedElement.of(f).star() * PhasedElement.of(g)).berezin(gens)


def adjoint_check(m: int) -> Report:
    """``<d_j f, g> = <f, i d_j g>`` and ``<zeta_j f, g> = <f, -i zeta_j g>`` on all monomials."""
    if not 1 <= m <= 4:
        raise ValueError("adjoint_check supports 1 <= m <= 4")
    sp = FunctionSpace.standard(m)
    rep = Report("adjoint")
    basis = sp.basis()
    for j, zj in enumerate(sp.zetas):
        zgen = sp.registry.gen(zj)
        for fi, f in basis:
            for gi, g in basis:
                inputs = {"m": m, "j": j + 1, "f": list(fi), "g": list(gi)}
                rep.add(
                    f"adjoint.d{j + 1}.f{fi}.g{gi}",
                    "conjugate of d/dzeta is i d/dzeta",
                    q_inner(f.derivative(zj), g),
                    q_inner(f, g.derivative(zj).scale(I)),
                    inputs=inputs,
                    invariant=True,
                )
                rep.add(
                    f"adjoint.x{j + 1}.f{fi}.g{gi}",
                    "conjugate of multiplication by zeta is -i zeta",
                    q_inner(zgen * f, g),
                    q_inner(f, (zgen * g).scale(-I)),
                    inputs=inputs,
                    invariant=True,
                )
    return rep


# ---------------------------------------------------------------------------
# antisymmetric matrices and the Gaussian


@dataclass(frozen=True)
class AntisymmetricMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __init__(self, rows: Sequence[Sequence]):
        m = linalg.to_matrix(rows)
        if not linalg.is_antisymmetric(m):
            raise ValueError("matrix is not antisymmetric")
        object.__setattr__(self, "entries", tuple(tuple(r) for r in m))
        object.__setattr__(self, "_cache", {})

    @property
    def m(self) -> int:
        return len(self.entries)

    def rows(self) -> Matrix:
        return [list(r) for r in self.entries]

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def pfaffian(self) -> Fraction:
        if "pf" not in self._cache:
            self._cache["pf"] = linalg.pfaffian(self.rows())
        return self._cache["pf"]

    def det(self) -> Fraction:
        return linalg.det(self.rows())

    def inverse(self) -> Matrix:
        if "inv" not in self._cache:
            self._cache["inv"] = linalg.inverse(self.rows())
        return [list(r) for r in self._cache["inv"]]

    def inverse_sqrt_pfaffian(self) -> CQ:
        """``(Pf G)^(-1/2)``, defined only when ``Pf G`` is a positive rational square."""
        pf = self.pfaffian()
        if pf <= 0:
            raise ValueError(f"Pf G = {pf} is not a positive rational square")
        try:
            root = linalg.rational_sqrt(pf)
        except ValueError:
            raise ValueError(f"Pf G = {pf} is not a rational square") from None
        return root.inverse()

    def to_json(self) -> dict:
        return {"m": self.m, "G": [[_q(x) for x in r] for r in self.entries]}


def _q(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def canonical_G(m: int) -> AntisymmetricMatrix:
    """Block diagonal of ``[[0, 1], [-1, 0]]``; Pfaffian 1."""
    if m % 2:
        raise ValueError("canonical G needs even m")
    rows = [[0] * m for _ in range(m)]
    for k in range(0, m, 2):
        rows[k][k + 1] = 1
        rows[k + 1][k] = -1
    return AntisymmetricMatrix(rows)


def as_antisymmetric(G) -> AntisymmetricMatrix:
    return G if isinstance(G, AntisymmetricMatrix) else AntisymmetricMatrix(G)


def pfaffian(G) -> Fraction:
    G = as_antisymmetric(G)
    if G.m % 2:
        raise ValueError(f"Pfaffian of odd-dimensional matrix ({G.m}x{G.m})")
    return G.pfaffian()


def gaussian(G, space: FunctionSpace) -> GrassmannElement:
    """``omega0 = (Pf G)^(-1/2) exp(zeta G zeta / 2)``."""
    G = as_antisymmetric(G)
    if G.m != space.m:
        raise ValueError("G and the function space have different sizes")
    c = G.inverse_sqrt_pfaffian()
    return quadratic_form(space.zeta(), G.entries).scale(Fraction(1, 2)).exp().scale(c)


# ---------------------------------------------------------------------------
# Hermite polynomials


class HermiteFamily:
    """``h^I = H_k exp(-zeta G zeta / 2) d_{i1}( ... d_{ik} exp(zeta G zeta))``.

    ``d_{i1}`` is the outermost derivative.  ``normalization`` maps ``k`` to
    ``H_k`` (default 1).
    """

    def __init__(self, G, space: FunctionSpace, normalization: dict[int, object] | None = None):
        self.G = as_antisymmetric(G)
        if self.G.m != space.m:
            raise ValueError("G and the function space have different sizes")
        if not self.G.pfaffian():
            raise ValueError("G is degenerate")
        self.space = space
        self.normalization = {int(k): as_fraction(v) for k, v in (normalization or {}).items()}
        q = quadratic_form(space.zeta(), self.G.entries)
        self._grow = q.exp()
        self._damp = q.scale(Fraction(-1, 2)).exp()
        self._memo: dict[tuple[int, ...], GrassmannElement] = {}

    def H(self, k: int) -> Fraction:
        return self.normalization.get(k, Fraction(1))

    def polynomial(self, idx: Sequence[int]) -> GrassmannElement:
        idx = tuple(idx)
        if len(set(idx)) != len(idx):
            raise ValueError(f"repeated index in multi-index {idx}")
        if any(not 0 <= i < self.space.m for i in idx):
            raise ValueError(f"multi-index {idx} out of range")
        if list(idx) != sorted(idx):
            raise ValueError(f"multi-index {idx} is not strictly increasing")
        if idx not in self._memo:
            f = self._grow
            for i in reversed(idx):
                f = f.derivative(self.space.zetas[i])
            self._memo[idx] = (self._damp * f).scale(self.H(len(idx)))
        return self._memo[idx]

    def all(self) -> list[tuple[tuple[int, ...], GrassmannElement]]:
        return [(idx, self.polynomial(idx)) for idx in self.space.multi_indices()]


def hermite(family: HermiteFamily, idx: Sequence[int]) -> GrassmannElement:
    return family.polynomial(idx)


def require_odd(vs: Iterable[GrassmannElement], what: str) -> None:
    for v in vs:
        if not v.is_odd():
            raise ParityError(f"{what} entries must be odd")
