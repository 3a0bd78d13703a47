"""Super-Hilbert forms, the Harish-Chandra pair of the super-Heisenberg group and the Stone-von Neumann test."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from . import linalg
from .linalg import Matrix
from .report import Report
from .scalars import CQ, I, as_cq, as_fraction

__all__ = [
    "SuperHilbertSpace",
    "SupersymplecticFormData",
    "HarishChandraPairData",
    "EXISTS_UNIQUE",
    "NONE",
    "super_hermitian_form",
    "svn_verdict",
    "charpoly",
    "eigen_sign_verdict",
    "is_hermitian_positive_definite",
    "sh31_pair",
    "hc_pair_validate",
]

EXISTS_UNIQUE = "ExistsUnique"
NONE = "None"


def _cq_matrix(rows) -> list[list[CQ]]:
    return [[as_cq(x) for x in r] for r in rows]


def is_hermitian(m: Sequence[Sequence[CQ]]) -> bool:
    n = len(m)
    return all(len(r) == n for r in m) and all(m[i][j] == m[j][i].conjugate() for i in range(n) for j in range(n))


def is_hermitian_positive_definite(m: Sequence[Sequence[CQ]]) -> bool:
    """``A + iB`` is positive definite iff the real matrix ``[[A, -B], [B, A]]`` is."""
    if not is_hermitian(m):
        return False
    n = len(m)
    big = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            a, b = m[i][j].re, m[i][j].im
            big[i][j] = a
            big[i + n][j + n] = a
            big[i][j + n] = -b
            big[i + n][j] = b
    return linalg.is_positive_definite(big)


@dataclass(frozen=True)
class SuperHilbertSpace:
    """``H = H_0 + H_1`` with Hermitian positive definite Gram matrices on each block."""

    gram_even: tuple[tuple[CQ, ...], ...]
    gram_odd: tuple[tuple[CQ, ...], ...]

    def __init__(self, gram_even, gram_odd):
        ge, go = _cq_matrix(gram_even), _cq_matrix(gram_odd)
        for name, g in (("even", ge), ("odd", go)):
            if g and not is_hermitian_positive_definite(g):
                raise ValueError(f"{name} Gram matrix is not Hermitian positive definite")
        object.__setattr__(self, "gram_even", tuple(map(tuple, ge)))
        object.__setattr__(self, "gram_odd", tuple(map(tuple, go)))

    @classmethod
    def standard(cls, dim_even: int, dim_odd: int) -> "SuperHilbertSpace":
        eye = lambda n: [[int(i == j) for j in range(n)] for i in range(n)]  # noqa: E731
        return cls(eye(dim_even), eye(dim_odd))

    @property
    def dim_even(self) -> int:
        return len(self.gram_even)

    @property
    def dim_odd(self) -> int:
        return len(self.gram_odd)

    def scalar_product(self, parity: int, v, w) -> CQ:
        """``(v, w)``, antilinear in ``v``."""
        g = self.gram_even if parity == 0 else self.gram_odd
        if len(v) != len(g) or len(w) != len(g):
            raise ValueError("vector length does not match the block dimension")
        out = CQ(0)
        for i, x in enumerate(v):
            x = as_cq(x).conjugate()
            if not x:
                continue
            for j, y in enumerate(w):
                y = as_cq(y)
                if y and g[i][j]:
                    out = out + x * g[i][j] * y
        return out


def _vector(space: SuperHilbertSpace, v) -> tuple[int, list]:
    """Homogeneous vector given as ``(even_coords, odd_coords)``; returns ``(parity, coords)``."""
    ev, od = v
    ev, od = list(ev), list(od)
    if len(ev) != space.dim_even or len(od) != space.dim_odd:
        raise ValueError("vector does not match the space dimensions")
    nz_e = any(as_cq(x) for x in ev)
    nz_o = any(as_cq(x) for x in od)
    if nz_e and nz_o:
        raise ValueError("vector is not homogeneous")
    return (1, od) if nz_o else (0, ev)


def super_hermitian_form(space: SuperHilbertSpace, v, w) -> CQ:
    """``<v,w>``: 0 across parities, ``(v,w)`` on ``H_0``, ``i(v,w)`` on ``H_1``."""
    pv, cv = _vector(space, v)
    pw, cw = _vector(space, w)
    if pv != pw:
        return CQ(0)
    val = space.scalar_product(pv, cv, cw)
    return val if pv == 0 else I * val


def super_hermitian_check(space: SuperHilbertSpace) -> Report:
    """``conj<v,w> = (-1)^{|v||w|} <w,v>`` on all basis pairs."""
    rep = Report("unitary")
    basis = []
    for k in range(space.dim_even):
        basis.append((0, k, ([int(i == k) for i in range(space.dim_even)], [0] * space.dim_odd)))
    for k in range(space.dim_odd):
        basis.append((1, k, ([0] * space.dim_even, [int(i == k) for i in range(space.dim_odd)])))
    for (pv, kv, v), (pw, kw, w) in product(basis, repeat=2):
        lhs = super_hermitian_form(space, v, w).conjugate()
        rhs = super_hermitian_form(space, w, v)
        if pv and pw:
            rhs = -rhs
        rep.add(f"hermitian.v{pv}.{kv}.w{pw}.{kw}", "conj <v,w> = (-1)^{|v||w|} <w,v>", lhs, rhs,
                inputs={"v": [pv, kv], "w": [pw, kw]}, invariant=True)
    return rep


# ---------------------------------------------------------------------------
# Stone-von Neumann test


@dataclass(frozen=True)
class SupersymplecticFormData:
    """``omega_even`` antisymmetric on ``V_0``, ``omega_odd`` symmetric on ``V_1``, ``chi(t) = exp(i beta t)``."""

    omega_even: tuple[tuple[Fraction, ...], ...]
    omega_odd: tuple[tuple[Fraction, ...], ...]
    beta: Fraction

    def __init__(self, omega_odd, beta=1, omega_even=()):
        oo = linalg.to_matrix(omega_odd) if omega_odd else []
        oe = linalg.to_matrix(omega_even) if omega_even else []
        if oo and not linalg.is_symmetric(oo):
            raise ValueError("omega_odd must be symmetric")
        if oe and not linalg.is_antisymmetric(oe):
            raise ValueError("omega_even must be antisymmetric")
        object.__setattr__(self, "omega_even", tuple(map(tuple, oe)))
        object.__setattr__(self, "omega_odd", tuple(map(tuple, oo)))
        object.__setattr__(self, "beta", as_fraction(beta))

    def to_json(self) -> dict:
        q = lambda x: str(x)  # noqa: E731
        return {
            "beta": q(self.beta),
            "omega_even": [[q(x) for x in r] for r in self.omega_even],
            "omega_odd": [[q(x) for x in r] for r in self.omega_odd],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SupersymplecticFormData":
        return cls(data["omega_odd"], data.get("beta", 1), data.get("omega_even", ()))


def svn_verdict(form: SupersymplecticFormData) -> str:
    """``ExistsUnique`` iff the odd block is positive definite (Sylvester), else ``None``."""
    if form.beta <= 0:
        raise ValueError("the positivity test applies to beta > 0 only")
    rows = [list(r) for r in form.omega_odd]
    return EXISTS_UNIQUE if linalg.is_positive_definite(rows) else NONE


def charpoly(m: Matrix) -> list[Fraction]:
    """Coefficients ``[1, c1, ..., cn]`` of ``det(x I - m)`` (Faddeev-LeVerrier)."""
    n = len(m)
    a = linalg.to_matrix(m)
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        mk = linalg.matmul(a, mk, Fraction(0))
        for i in range(n):
            mk[i][i] += coeffs[-1]
        am = linalg.matmul(a, mk, Fraction(0))
        c = -sum(am[i][i] for i in range(n)) / k
        coeffs.append(c)
    return coeffs


def eigen_sign_verdict(m: Matrix) -> str:
    """Independent positivity oracle for a symmetric rational matrix.

    All eigenvalues are real, so by Descartes' rule they are all positive iff
    the characteristic polynomial's coefficients strictly alternate in sign.
    """
    cs = charpoly(m)
    ok = all(c != 0 and (c > 0) == (k % 2 == 0) for k, c in enumerate(cs))
    return EXISTS_UNIQUE if ok else NONE


# ---------------------------------------------------------------------------
# Harish-Chandra pair (H_3, sh(3|1))


def _unit(i: int, j: int, n: int = 4) -> Matrix:
    out = [[Fraction(0)] * n for _ in range(n)]
    out[i][j] = Fraction(1)
    return out


def _add(a: Matrix, b: Matrix, s=1) -> Matrix:
    return [[x + s * y for x, y in zip(r, q)] for r, q in zip(a, b)]


def _scale(a: Matrix, c) -> Matrix:
    return [[c * x for x in r] for r in a]


def _mul(a: Matrix, b: Matrix) -> Matrix:
    return linalg.matmul(a, b, Fraction(0))


def _is_zero(a: Matrix) -> bool:
    return all(not x for r in a for x in r)


@dataclass(frozen=True)
class HarishChandraPairData:
    """Group elements ``g(x, y, t)`` and an algebra basis with parities and slots."""

    names: tuple[str, ...]
    slots: tuple[tuple[int, int], ...]
    parities: tuple[int, ...]
    size: int = 4

    def basis(self) -> dict[str, Matrix]:
        return {n: _unit(i, j, self.size) for n, (i, j) in zip(self.names, self.slots)}

    def parity(self, name: str) -> int:
        return self.parities[self.names.index(name)]

    def group_element(self, x, y, t) -> Matrix:
        g = linalg.identity(self.size)
        g[0][1] = as_fraction(x)
        g[1][2] = as_fraction(y)
        g[0][2] = as_fraction(t)
        return g

    def coordinates(self, M: Matrix) -> dict[str, Fraction] | None:
        """Coordinates of ``M`` in the basis, or ``None`` if ``M`` leaves the span."""
        rest = [list(r) for r in M]
        coords = {}
        for n, (i, j) in zip(self.names, self.slots):
            coords[n] = rest[i][j]
            rest[i][j] = Fraction(0)
        return coords if _is_zero(rest) else None

    def bracket(self, A: str | Matrix, B: str | Matrix, pa: int | None = None, pb: int | None = None) -> Matrix:
        """Graded commutator ``AB - (-1)^{|A||B|} BA``."""
        if isinstance(A, str):
            pa, A = self.parity(A), self.basis()[A]
        if isinstance(B, str):
            pb, B = self.parity(B), self.basis()[B]
        s = -1 if not (pa and pb) else 1
        return _add(_mul(A, B), _mul(B, A), s)

    def bracket_table(self) -> dict[tuple[str, str], dict[str, Fraction]]:
        table = {}
        for a, b in product(self.names, repeat=2):
            c = self.coordinates(self.bracket(a, b))
            if c is None:
                raise ValueError(f"[{a},{b}] leaves the algebra")
            table[(a, b)] = {k: v for k, v in c.items() if v}
        return table


def sh31_pair() -> HarishChandraPairData:
    """``g(x,y,t)`` with ``x, y, t`` at (0,1), (1,2), (0,2); algebra slots a, b, c even and alpha odd at (0,3)."""
    return HarishChandraPairData(("a", "b", "c", "alpha"), ((0, 1), (1, 2), (0, 2), (0, 3)), (0, 0, 0, 1))


def _linear_coefficient(values: list[Matrix]) -> Matrix:
    """Coefficient of ``s`` in a matrix polynomial sampled at ``s = 0..len-1`` (Lagrange)."""
    n = len(values)
    xs = list(range(n))
    out = [[Fraction(0)] * len(values[0][0]) for _ in values[0]]
    for k, xk in enumerate(xs):
        # derivative at 0 of the Lagrange basis polynomial l_k
        others = [x for x in xs if x != xk]
        denom = Fraction(1)
        for x in others:
            denom *= xk - x
        # l_k(s) = prod(s - x)/denom; d/ds at 0 = sum_j prod_{i != j}(-x_i) / denom
        d = Fraction(0)
        for j in range(len(others)):
            term = Fraction(1)
            for i, x in enumerate(others):
                if i != j:
                    term *= -x
            d += term
        out = _add(out, _scale(values[k], d / denom))
    return out


def _exp_nilpotent(X: Matrix) -> Matrix:
    n = len(X)
    out = linalg.identity(n)
    term = linalg.identity(n)
    for k in range(1, n + 1):
        term = _scale(_mul(term, X), Fraction(1, k))
        if _is_zero(term):
            break
        out = _add(out, term)
    return out


def hc_pair_validate(pair: HarishChandraPairData | None = None, samples: Sequence[tuple] = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (2, -3, Fraction(1, 2)))) -> Report:
    """Ad-closure, derivative of Ad, graded Jacobi and closure of the odd anticommutator."""
    pair = pair or sh31_pair()
    rep = Report("unitary")
    basis = pair.basis()
    rep.conventions["sh31.slots"] = ", ".join(f"{n}@{s}" for n, s in zip(pair.names, pair.slots))

    for xyt in samples:
        g = pair.group_element(*xyt)
        gi = linalg.inverse(g)
        for n, Y in basis.items():
            ad = _mul(_mul(g, Y), gi)
            rep.add_bool(f"hc.ad-closure.g{list(map(str, xyt))}.{n}", "Ad(g)Y = gYg^-1 lies in the algebra",
                         pair.coordinates(ad) is not None, inputs={"g": [str(v) for v in xyt], "Y": n},
                         detail=str(pair.coordinates(ad)))
    # center acts trivially
    g = pair.group_element(0, 0, 7)
    gi = linalg.inverse(g)
    for n, Y in basis.items():
        rep.add(f"hc.ad-center.{n}", "Ad(exp tZ) = id on the algebra", _mul(_mul(g, Y), gi), Y,
                inputs={"t": 7, "Y": n}, invariant=True)

    # d/ds Ad(exp sX) Y at s = 0 equals [X, Y] for even X
    for xn in pair.names:
        if pair.parity(xn):
            continue
        X = basis[xn]
        for yn, Y in basis.items():
            vals = []
            for s in range(6):
                e = _exp_nilpotent(_scale(X, s))
                vals.append(_mul(_mul(e, Y), linalg.inverse(e)))
            rep.add(f"hc.dsigma.{xn}.{yn}", "d sigma(X) Y = [X, Y]", _linear_coefficient(vals),
                    pair.bracket(xn, yn), inputs={"X": xn, "Y": yn}, invariant=True)

    # closure of the graded bracket and graded Jacobi
    for a, b in product(pair.names, repeat=2):
        rep.add_bool(f"hc.closure.{a}.{b}", "[A, B] lies in the algebra",
                     pair.coordinates(pair.bracket(a, b)) is not None, inputs={"A": a, "B": b})
    for a, b, c in product(pair.names, repeat=3):
        pa, pb, pc = pair.parity(a), pair.parity(b), pair.parity(c)
        A, B, C = basis[a], basis[b], basis[c]
        t1 = pair.bracket(A, pair.bracket(B, C, pb, pc), pa, (pb + pc) % 2)
        t2 = pair.bracket(B, pair.bracket(C, A, pc, pa), pb, (pc + pa) % 2)
        t3 = pair.bracket(C, pair.bracket(A, B, pa, pb), pc, (pa + pb) % 2)
        total = _add(_add(_scale(t1, (-1) ** (pa * pc)), _scale(t2, (-1) ** (pb * pa))), _scale(t3, (-1) ** (pc * pb)))
        rep.add_bool(f"hc.jacobi.{a}.{b}.{c}", "graded Jacobi identity", _is_zero(total),
                     inputs={"A": a, "B": b, "C": c})

    for q in pair.names:
        if not pair.parity(q):
            continue
        qq = pair.bracket(q, q)
        coords = pair.coordinates(qq)
        rep.add_bool(f"hc.odd-anticommutator.{q}", "[Q, Q]_+ lies in the algebra", coords is not None,
                     inputs={"Q": q}, detail=str(coords))
        rep.add(f"hc.odd-anticommutator-central.{q}", "[Q, Q]_+ = c-slot generator",
                _Coords(coords), _Coords({"c": Fraction(1)}, pair.names), inputs={"Q": q},
                note="the displayed realization places alpha in a slot whose square vanishes")
    return rep


class _Coords:
    """Coordinate dict comparable through :func:`report.compare`."""

    def __init__(self, coords, names=None):
        coords = dict(coords or {})
        for n in names or ():
            coords.setdefault(n, Fraction(0))
        self.coords = {k: v for k, v in coords.items() if v}

    def __eq__(self, other):
        return isinstance(other, _Coords) and self.coords == other.coords

    def __hash__(self):
        return 0

    def is_zero(self):
        return not self.coords

    def scale(self, c):
        c = as_fraction(c) if isinstance(c, CQ) and c.is_real() else c
        return _Coords({k: v * c for k, v in self.coords.items()})

    def first_coefficient(self):
        return CQ(self.coords[min(self.coords)]) if self.coords else None

    def coefficient_like(self, lhs):
        if not isinstance(lhs, _Coords) or not self.coords:
            return None
        return CQ(lhs.coords.get(min(self.coords), Fraction(0)))

    def __str__(self):
        return "{" + ", ".join(f"{k}: {v}" for k, v in sorted(self.coords.items())) + "}"

    __repr__ = __str__
