"""Seeded random exact test data: rationals, Grassmann elements, oddons, matrices."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .grassmann import GeneratorRegistry, GrassmannElement
from .scalars import CQ


def rational(rng: random.Random, span: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def gaussian_rational(rng: random.Random, span: int = 3, den: int = 3, complex_: bool = True) -> CQ:
    im = rational(rng, span, den) if complex_ else 0
    return CQ(rational(rng, span, den), im)


def element(
    rng: random.Random,
    registry: GeneratorRegistry,
    gens=None,
    parity: int | None = None,
    terms: int = 4,
    max_degree: int = 3,
    complex_: bool = True,
) -> GrassmannElement:
    """Random element over ``gens`` (default: all generators) with at most ``terms`` monomials."""
    gens = list(range(len(registry))) if gens is None else [registry.index(g) for g in gens]
    degrees = [d for d in range(min(max_degree, len(gens)) + 1) if parity is None or d % 2 == parity]
    out = registry.zero()
    for _ in range(terms):
        if not degrees:
            break
        d = rng.choice(degrees)
        idx = sorted(rng.sample(gens, d))
        out = out + registry.monomial(idx, gaussian_rational(rng, complex_=complex_))
    return out


def monomials(registry: GeneratorRegistry, gens=None) -> list[GrassmannElement]:
    """Every monomial (coefficient 1) over ``gens``, including 1."""
    gens = list(range(len(registry))) if gens is None else [registry.index(g) for g in gens]
    out = []
    for k in range(len(gens) + 1):
        for c in combinations(gens, k):
            out.append(registry.monomial(c))
    return out


def antisymmetric(rng: random.Random, m: int, span: int = 4) -> list[list[Fraction]]:
    rows = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            x = rational(rng, span, 3)
            rows[i][j] = x
            rows[j][i] = -x
    return rows


def symmetric(rng: random.Random, m: int, span: int = 4) -> list[list[Fraction]]:
    rows = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            x = rational(rng, span, 3)
            rows[i][j] = x
            rows[j][i] = x
    return rows
