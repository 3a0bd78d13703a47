"""Finite Grassmann algebras over the Gaussian rationals.

Elements are sparse maps ``bitmask -> CQ``.  Bit ``i`` of a mask stands for
generator ``i`` of a :class:`GeneratorRegistry`; a mask is read as the
strictly ordered monomial ``g_{i1} g_{i2} ... g_{ik}`` with ``i1 < ... < ik``.

The central phase symbols ``U(phi) = exp(i*phi)`` used for the time
coordinate of Heisenberg-type groups live in :class:`PhasedElement`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .scalars import CQ, I, ONE, ZERO, as_cq, as_fraction

__all__ = [
    "ROLES",
    "RegistryError",
    "ParityError",
    "GeneratorRegistry",
    "GrassmannElement",
    "PhasedElement",
    "multiply",
    "star",
    "parity_map_J",
    "berezin_integrate",
    "left_derivative",
    "exp_nilpotent",
    "substitute_shift",
    "max_generators",
]

ROLES = ("zeta", "parameter", "fock-z", "fock-zstar")
DEFAULT_MAX_GENERATORS = 24


class RegistryError(ValueError):
    """Operands live in different generator registries, or a label is bad."""


class ParityError(ValueError):
    """An argument has the wrong Z2-degree for the requested operation."""


def max_generators() -> int:
    env = os.environ.get("SUPERHEIS_MAX_GENERATORS")
    if env is None:
        return DEFAULT_MAX_GENERATORS
    try:
        value = int(env)
    except ValueError as exc:
        raise RegistryError(f"SUPERHEIS_MAX_GENERATORS={env!r} is not an integer") from exc
    if value < 1:
        raise RegistryError("SUPERHEIS_MAX_GENERATORS must be positive")
    return value


# ---------------------------------------------------------------------------
# bit helpers


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@lru_cache(maxsize=1 << 18)
def merge_sign(a: int, b: int) -> int:
    """Sign of reordering the concatenation ``(a)(b)`` of two disjoint monomials."""
    n = 0
    while b:
        low = b & -b
        n += (a & ~((low << 1) - 1)).bit_count()
        b ^= low
    return -1 if n & 1 else 1


def sort_sign(seq: list[int]) -> int:
    """Sign of the permutation sorting a sequence of distinct generator indices."""
    n = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                n += 1
    return -1 if n & 1 else 1


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class GeneratorRegistry:
    """Ordered, labelled set of odd generators split into roles.

    ``partner[i] == i`` marks a real generator, conjugated as ``g* = -i g``.
    A Fock pair ``(z_k, zbar_k)`` has each index pointing at the other and
    conjugates as ``z_k* = zbar_k``, ``zbar_k* = z_k``.
    """

    labels: tuple[str, ...]
    roles: tuple[str, ...]
    partner: tuple[int, ...] = field(default=())
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        roles = tuple(self.roles)
        partner = tuple(self.partner) if self.partner else tuple(range(len(labels)))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "roles", roles)
        object.__setattr__(self, "partner", partner)
        if len(roles) != len(labels) or len(partner) != len(labels):
            raise RegistryError("labels, roles and partner must have equal length")
        if len(set(labels)) != len(labels):
            raise RegistryError(f"duplicate generator labels in {labels}")
        for role in roles:
            if role not in ROLES:
                raise RegistryError(f"unknown generator role {role!r}")
        for i, p in enumerate(partner):
            if not 0 <= p < len(labels) or partner[p] != i:
                raise RegistryError(f"partner map is not an involution at {labels[i]!r}")
        cap = max_generators()
        if len(labels) > cap:
            raise RegistryError(f"{len(labels)} generators exceed the cap of {cap}")
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(labels)})

    @classmethod
    def from_groups(cls, **groups: Iterable[str]) -> "GeneratorRegistry":
        """Build from keyword groups, e.g. ``from_groups(zeta=["z1"], parameter=["P1"])``.

        Keywords use underscores for dashes (``fock_z``).  Fock groups are
        paired positionally.
        """
        labels, roles = [], []
        fz, fzs = [], []
        for key, labs in groups.items():
            role = key.replace("_", "-")
            for lab in labs:
                if role == "fock-z":
                    fz.append(len(labels))
                elif role == "fock-zstar":
                    fzs.append(len(labels))
                labels.append(lab)
                roles.append(role)
        partner = list(range(len(labels)))
        if len(fz) != len(fzs):
            raise RegistryError("fock-z and fock-zstar groups must have equal size")
        for a, b in zip(fz, fzs):
            partner[a], partner[b] = b, a
        return cls(tuple(labels), tuple(roles), tuple(partner))

    def __len__(self):
        return len(self.labels)

    def index(self, label: str | int) -> int:
        if isinstance(label, int):
            if not 0 <= label < len(self.labels):
                raise RegistryError(f"generator index {label} out of range")
            return label
        try:
            return self._index[label]
        except KeyError:
            raise RegistryError(f"unknown generator {label!r}") from None

    def mask(self, labels: Iterable[str | int]) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return m

    def role_mask(self, role: str) -> int:
        return sum(1 << i for i, r in enumerate(self.roles) if r == role)

    def by_role(self, role: str) -> list[str]:
        return [lab for lab, r in zip(self.labels, self.roles) if r == role]

    def gen(self, label: str | int) -> "GrassmannElement":
        return GrassmannElement(self, {1 << self.index(label): ONE})

    def gens(self, *labels: str) -> list["GrassmannElement"]:
        return [self.gen(lab) for lab in labels]

    def one(self) -> "GrassmannElement":
        return GrassmannElement(self, {0: ONE})

    def zero(self) -> "GrassmannElement":
        return GrassmannElement(self, {})

    def scalar(self, c) -> "GrassmannElement":
        return GrassmannElement(self, {0: as_cq(c)})

    def monomial(self, labels: Iterable[str | int], coeff=1) -> "GrassmannElement":
        """Product of the listed generators in the order given."""
        out = self.scalar(coeff)
        for lab in labels:
            out = out * self.gen(lab)
        return out

    def extend(self, **groups: Iterable[str]) -> "GeneratorRegistry":
        """Registry with extra generators appended; existing masks stay valid."""
        extra = GeneratorRegistry.from_groups(**groups)
        n = len(self.labels)
        partner = list(self.partner) + [p + n for p in extra.partner]
        return GeneratorRegistry(self.labels + extra.labels, self.roles + extra.roles, tuple(partner))

    def with_roles(self, roles: Mapping[str, str]) -> "GeneratorRegistry":
        """Same generators and order, with some roles reassigned."""
        new = list(self.roles)
        for lab, role in roles.items():
            new[self.index(lab)] = role
        return GeneratorRegistry(self.labels, tuple(new), self.partner)

    def is_prefix_of(self, other: "GeneratorRegistry") -> bool:
        n = len(self.labels)
        return (
            other.labels[:n] == self.labels
            and other.roles[:n] == self.roles
            and other.partner[:n] == self.partner
        )


# ---------------------------------------------------------------------------
# star on monomials


@lru_cache(maxsize=1 << 16)
def _star_monomial(registry: GeneratorRegistry, mask: int) -> tuple[CQ, int]:
    gens = list(bits(mask))
    coeff = ONE
    images = []
    for g in reversed(gens):
        p = registry.partner[g]
        if p == g:
            coeff = coeff * (-I)
        images.append(p)
    return coeff * sort_sign(images), sum(1 << p for p in images)


# ---------------------------------------------------------------------------
# elements


def _check_same(a: "GrassmannElement", b: "GrassmannElement") -> None:
    if a.registry is not b.registry and a.registry != b.registry:
        raise RegistryError("operands belong to different generator registries")


class GrassmannElement:
    """Immutable element of the Grassmann algebra of a registry."""

    __slots__ = ("registry", "terms", "_hash")

    def __init__(self, registry: GeneratorRegistry, terms: Mapping[int, object] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = as_cq(c)
                if c:
                    clean[m] = c
        self.registry = registry
        self.terms = clean
        self._hash = None

    @classmethod
    def _make(cls, registry, terms):
        obj = object.__new__(cls)
        obj.registry = registry
        obj.terms = terms
        obj._hash = None
        return obj

    # coercion -------------------------------------------------------------

    def _lift(self, other) -> "GrassmannElement | None":
        if isinstance(other, GrassmannElement):
            _check_same(self, other)
            return other
        if isinstance(other, (int, Fraction, CQ)) and not isinstance(other, bool):
            c = as_cq(other)
            return GrassmannElement._make(self.registry, {0: c} if c else {})
        return None

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, PhasedElement):
            return NotImplemented
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return GrassmannElement._make(self.registry, out)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement._make(self.registry, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, PhasedElement):
            return NotImplemented
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, PhasedElement):
            return NotImplemented
        if isinstance(other, (int, Fraction, CQ)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        _check_same(self, other)
        out: dict[int, CQ] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                if ma & mb:
                    continue
                m = ma | mb
                c = ca * cb
                if merge_sign(ma, mb) < 0:
                    c = -c
                v = out.get(m)
                out[m] = c if v is None else v + c
        return GrassmannElement._make(self.registry, {m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CQ)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CQ)) and not isinstance(other, bool):
            return self.scale(as_cq(other).inverse())
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = self.registry.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c) -> "GrassmannElement":
        c = as_cq(c)
        if not c:
            return self.registry.zero()
        return GrassmannElement._make(self.registry, {m: v * c for m, v in self.terms.items()})

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, PhasedElement):
            return other == self
        o = self._lift(other) if not isinstance(other, GrassmannElement) else other
        if o is None:
            return NotImplemented
        return self.registry == o.registry and self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def body(self) -> CQ:
        return self.terms.get(0, ZERO)

    def soul(self) -> "GrassmannElement":
        return GrassmannElement._make(self.registry, {m: c for m, c in self.terms.items() if m})

    def coefficient(self, labels: Iterable[str | int] = ()) -> CQ:
        return self.terms.get(self.registry.mask(labels), ZERO)

    def even_part(self) -> "GrassmannElement":
        return GrassmannElement._make(
            self.registry, {m: c for m, c in self.terms.items() if not m.bit_count() & 1}
        )

    def odd_part(self) -> "GrassmannElement":
        return GrassmannElement._make(
            self.registry, {m: c for m, c in self.terms.items() if m.bit_count() & 1}
        )

    def parity(self) -> int | None:
        """0 or 1 for homogeneous elements (zero counts as even), None otherwise."""
        ps = {m.bit_count() & 1 for m in self.terms}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def is_even(self) -> bool:
        return all(not m.bit_count() & 1 for m in self.terms)

    def is_odd(self) -> bool:
        return all(m.bit_count() & 1 for m in self.terms)

    def support(self) -> int:
        """Bitmask of every generator that occurs in some term."""
        s = 0
        for m in self.terms:
            s |= m
        return s

    def degree(self) -> int:
        return max((m.bit_count() for m in self.terms), default=0)

    def is_scalar(self) -> bool:
        return all(m == 0 for m in self.terms)

    # involutions ----------------------------------------------------------

    def star(self) -> "GrassmannElement":
        """Antilinear anti-automorphism; on real generators ``q* = conj(q0) - i conj(q1)``."""
        out = {}
        reg = self.registry
        for m, c in self.terms.items():
            k, nm = _star_monomial(reg, m)
            out[nm] = out.get(nm, ZERO) + c.conjugate() * k
        return GrassmannElement._make(reg, {m: c for m, c in out.items() if c})

    def conj_coefficients(self) -> "GrassmannElement":
        """Complex-conjugate every coefficient, leaving monomials untouched."""
        return GrassmannElement._make(
            self.registry, {m: c.conjugate() for m, c in self.terms.items()}
        )

    def J(self) -> "GrassmannElement":
        """Parity automorphism ``a0 + a1 -> a0 - a1``."""
        return GrassmannElement._make(
            self.registry, {m: (-c if m.bit_count() & 1 else c) for m, c in self.terms.items()}
        )

    # calculus -------------------------------------------------------------

    def derivative(self, gen: str | int) -> "GrassmannElement":
        """Left derivative: the sign counts generators standing left of ``gen``."""
        j = self.registry.index(gen)
        bit = 1 << j
        below = bit - 1
        out = {}
        for m, c in self.terms.items():
            if m & bit:
                out[m ^ bit] = -c if (m & below).bit_count() & 1 else c
        return GrassmannElement._make(self.registry, out)

    def berezin(self, gens: Iterable[str | int] | None = None) -> "GrassmannElement":
        """Berezin integral over ``gens`` (default: every zeta generator).

        Normalised by ``int d g_k ... d g_1 (g_1 ... g_k) = 1`` with the
        generators taken in registry order, i.e. the innermost differential
        belongs to the lowest-index generator.
        """
        reg = self.registry
        if gens is None:
            vmask = reg.role_mask("zeta")
        else:
            vmask = reg.mask(gens)
        out: dict[int, CQ] = {}
        for m, c in self.terms.items():
            if m & vmask != vmask:
                continue
            rest = m
            sign = 1
            for j in bits(vmask):
                bit = 1 << j
                if (rest & (bit - 1)).bit_count() & 1:
                    sign = -sign
                rest ^= bit
            out[rest] = out.get(rest, ZERO) + (c if sign > 0 else -c)
        return GrassmannElement._make(reg, {m: c for m, c in out.items() if c})

    def exp(self) -> "GrassmannElement":
        """Exponential of an even element with zero body (terminating series)."""
        if not self.is_even():
            raise ParityError("exp_nilpotent needs an even argument")
        if self.body():
            raise ValueError("exp_nilpotent needs a nilpotent argument (zero body)")
        result = self.registry.one()
        term = self.registry.one()
        k = 0
        while True:
            k += 1
            term = (term * self) / k
            if term.is_zero():
                return result
            result = result + term

    def substitute(
        self,
        images: Mapping[str | int, "GrassmannElement"],
        target: GeneratorRegistry | None = None,
    ) -> "GrassmannElement":
        """Algebra homomorphism sending listed generators to odd ``images``.

        Unlisted generators go to the generator with the same label in
        ``target`` (default: this registry).
        """
        reg = self.registry
        tgt = target if target is not None else reg
        img: dict[int, GrassmannElement] = {}
        for key, val in images.items():
            i = reg.index(key)
            if not isinstance(val, GrassmannElement):
                raise TypeError("substitution images must be GrassmannElements")
            if val.registry != tgt:
                raise RegistryError("substitution image lives in the wrong registry")
            if not val.is_odd():
                raise ParityError(f"image of {reg.labels[i]!r} must be odd")
            img[i] = val
        cache: dict[int, GrassmannElement] = {}

        def image_of(i: int) -> GrassmannElement:
            g = img.get(i)
            if g is None:
                g = tgt.gen(reg.labels[i])
            return g

        def mono(m: int) -> GrassmannElement:
            if m in cache:
                return cache[m]
            if m == 0:
                r = tgt.one()
            else:
                low = m & -m
                r = image_of(low.bit_length() - 1) * mono(m ^ low)
            cache[m] = r
            return r

        out = tgt.zero()
        for m, c in self.terms.items():
            out = out + mono(m).scale(c)
        return out

    def shift(self, shifts: Mapping[str | int, "GrassmannElement"]) -> "GrassmannElement":
        """``f(g + a)``: the homomorphism ``g_j -> g_j + a_j``."""
        reg = self.registry
        return self.substitute({k: reg.gen(k) + v for k, v in shifts.items()})

    def rehome(self, registry: GeneratorRegistry) -> "GrassmannElement":
        """Move into a registry that extends, or merely re-roles, this one."""
        if registry == self.registry:
            return self
        if not (
            self.registry.is_prefix_of(registry)
            or (self.registry.labels == registry.labels and self.registry.partner == registry.partner)
        ):
            raise RegistryError("target registry does not contain this registry as a prefix")
        return GrassmannElement._make(registry, dict(self.terms))

    # display --------------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda x: (x.bit_count(), x)):
            c = self.terms[m]
            mono = "*".join(self.registry.labels[i] for i in bits(m))
            if not mono:
                parts.append(str(c))
            elif c == ONE:
                parts.append(mono)
            elif c == -ONE:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# phased elements


class PhasedElement:
    """Finite sum ``sum_phi U(phi) g_phi`` with central phases ``U(phi) = exp(i phi)``."""

    __slots__ = ("registry", "parts")

    def __init__(self, registry: GeneratorRegistry, parts: Mapping[object, GrassmannElement] | None = None):
        clean: dict[Fraction, GrassmannElement] = {}
        for phi, g in (parts or {}).items():
            phi = as_fraction(phi)
            if isinstance(g, GrassmannElement):
                _check_reg(registry, g)
            else:
                g = registry.scalar(g)
            if phi in clean:
                g = clean[phi] + g
            if g:
                clean[phi] = g
            else:
                clean.pop(phi, None)
        self.registry = registry
        self.parts = clean

    @classmethod
    def of(cls, x, phase=0) -> "PhasedElement":
        if isinstance(x, PhasedElement):
            return x if not phase else x * cls(x.registry, {phase: x.registry.one()})
        return cls(x.registry, {phase: x})

    def _lift(self, other):
        if isinstance(other, PhasedElement):
            _check_reg(self.registry, other)
            return other
        if isinstance(other, GrassmannElement):
            _check_reg(self.registry, other)
            return PhasedElement(self.registry, {0: other})
        if isinstance(other, (int, Fraction, CQ)) and not isinstance(other, bool):
            return PhasedElement(self.registry, {0: self.registry.scalar(other)})
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        parts = dict(self.parts)
        for phi, g in o.parts.items():
            parts[phi] = parts[phi] + g if phi in parts else g
        return PhasedElement(self.registry, parts)

    __radd__ = __add__

    def __neg__(self):
        return PhasedElement(self.registry, {phi: -g for phi, g in self.parts.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        parts: dict[Fraction, GrassmannElement] = {}
        for pa, ga in self.parts.items():
            for pb, gb in o.parts.items():
                phi = pa + pb
                g = ga * gb
                parts[phi] = parts[phi] + g if phi in parts else g
        return PhasedElement(self.registry, parts)

    def __rmul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self

    def scale(self, c) -> "PhasedElement":
        return PhasedElement(self.registry, {phi: g.scale(c) for phi, g in self.parts.items()})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CQ)) and not isinstance(other, bool):
            return self.scale(as_cq(other).inverse())
        return NotImplemented

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.registry == o.registry and self.parts == o.parts

    def __hash__(self):
        return hash(frozenset(self.parts.items()))

    def __bool__(self):
        return bool(self.parts)

    def is_zero(self) -> bool:
        return not self.parts

    def phases(self) -> list[Fraction]:
        return sorted(self.parts)

    def part(self, phase) -> GrassmannElement:
        return self.parts.get(as_fraction(phase), self.registry.zero())

    def collapse(self) -> GrassmannElement:
        """The plain element, when only the trivial phase occurs."""
        if any(phi for phi in self.parts):
            raise ValueError("element carries nontrivial central phases")
        return self.part(0)

    def _map(self, fn) -> "PhasedElement":
        return PhasedElement(self.registry, {phi: fn(g) for phi, g in self.parts.items()})

    def star(self) -> "PhasedElement":
        return PhasedElement(self.registry, {-phi: g.star() for phi, g in self.parts.items()})

    def J(self) -> "PhasedElement":
        return self._map(GrassmannElement.J)

    def derivative(self, gen) -> "PhasedElement":
        return self._map(lambda g: g.derivative(gen))

    def berezin(self, gens=None) -> "PhasedElement":
        return self._map(lambda g: g.berezin(gens))

    def substitute(self, images, target=None) -> "PhasedElement":
        tgt = target if target is not None else self.registry
        return PhasedElement(tgt, {phi: g.substitute(images, target) for phi, g in self.parts.items()})

    def shift(self, shifts) -> "PhasedElement":
        return self._map(lambda g: g.shift(shifts))

    def rehome(self, registry) -> "PhasedElement":
        return PhasedElement(registry, {phi: g.rehome(registry) for phi, g in self.parts.items()})

    def __repr__(self):
        if not self.parts:
            return "0"
        return " + ".join(
            f"U({phi})*({g!r})" if phi else f"({g!r})" for phi, g in sorted(self.parts.items())
        )


def _check_reg(registry, x):
    if x.registry is not registry and x.registry != registry:
        raise RegistryError("operands belong to different generator registries")


# ---------------------------------------------------------------------------
# functional interface


def multiply(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    if not isinstance(a, GrassmannElement) or not isinstance(b, GrassmannElement):
        raise TypeError("multiply expects two GrassmannElements")
    return a * b


def star(a):
    return a.star()


def parity_map_J(a):
    return a.J()


def berezin_integrate(f, gens=None):
    """Berezin integral; ``gens`` must be zeta-variable generators."""
    if gens is not None:
        reg = f.registry
        for g in gens:
            if reg.roles[reg.index(g)] != "zeta":
                raise RegistryError(f"{g!r} is not a zeta-variable generator")
    return f.berezin(gens)


def left_derivative(f, gen):
    return f.derivative(gen)


def exp_nilpotent(a: GrassmannElement, phase=0) -> PhasedElement:
    """``U(phase) * exp(a)`` for an even nilpotent ``a``."""
    return PhasedElement(a.registry, {as_fraction(phase): a.exp()})


def substitute_shift(f, shifts: Mapping[str | int, GrassmannElement]):
    """``f(zeta + a)`` for odd shifts ``a`` keyed by zeta generator."""
    reg = f.registry
    for k in shifts:
        if reg.roles[reg.index(k)] != "zeta":
            raise RegistryError(f"{k!r} is not a zeta-variable generator")
    return f.shift(shifts)
