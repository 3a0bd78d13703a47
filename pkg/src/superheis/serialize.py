"""Exact JSON round-trips for elements, tuples, matrices, oddons and forms.

Rationals are written as decimal-free ``"p/q"`` strings.  Generator indices in
``terms`` are 1-based positions in the registry.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .grassmann import GeneratorRegistry, GrassmannElement, PhasedElement, bits
from .groups import SuperHeisenbergTuple
from .oddons import KINDS, Oddon
from .scalars import CQ, as_fraction
from .superfunctions import AntisymmetricMatrix
from .unitary import SupersymplecticFormData

__all__ = [
    "SchemaError",
    "rational_to_json",
    "rational_from_json",
    "element_to_json",
    "element_from_json",
    "phased_to_json",
    "phased_from_json",
    "tuple_to_json",
    "tuple_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "oddon_to_json",
    "oddon_from_json",
    "form_to_json",
    "form_from_json",
    "dumps",
]


class SchemaError(ValueError):
    """Input does not match the expected JSON layout; ``path`` locates the problem."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def rational_to_json(x) -> str:
    return str(as_fraction(x))


def rational_from_json(s, path: str = "$") -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise SchemaError(path, f"expected a 'p/q' string, got {type(s).__name__}")
    try:
        return as_fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(path, str(exc)) from None


def _expect(obj, kind, path: str):
    if not isinstance(obj, kind):
        name = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise SchemaError(path, f"expected {name}, got {type(obj).__name__}")
    return obj


# ---------------------------------------------------------------------------
# Grassmann elements


def element_to_json(x: GrassmannElement) -> dict:
    terms = []
    for mask in sorted(x.terms, key=lambda m: (bin(m).count("1"), [b for b in bits(m)])):
        c = x.terms[mask]
        terms.append({"indices": [b + 1 for b in bits(mask)], "re": rational_to_json(c.re), "im": rational_to_json(c.im)})
    return {"terms": terms}


def element_from_json(data, registry: GeneratorRegistry, path: str = "$") -> GrassmannElement:
    _expect(data, dict, path)
    terms = _expect(data.get("terms"), list, f"{path}.terms")
    out = registry.zero()
    n = len(registry)
    for k, t in enumerate(terms):
        tp = f"{path}.terms[{k}]"
        _expect(t, dict, tp)
        idx = _expect(t.get("indices", []), list, f"{tp}.indices")
        for j, i in enumerate(idx):
            if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= n:
                raise SchemaError(f"{tp}.indices[{j}]", f"generator index must be an integer in 1..{n}")
        if len(set(idx)) != len(idx):
            continue  # a repeated generator squares to zero
        coeff = CQ(rational_from_json(t.get("re", "0"), f"{tp}.re"), rational_from_json(t.get("im", "0"), f"{tp}.im"))
        out = out + registry.monomial([i - 1 for i in idx], coeff)
    return out


def phased_to_json(x: PhasedElement) -> dict:
    return {"parts": [dict(phase=rational_to_json(phi), **element_to_json(x.parts[phi])) for phi in sorted(x.parts)]}


def phased_from_json(data, registry: GeneratorRegistry, path: str = "$") -> PhasedElement:
    _expect(data, dict, path)
    parts = _expect(data.get("parts"), list, f"{path}.parts")
    out = PhasedElement(registry)
    for k, p in enumerate(parts):
        pp = f"{path}.parts[{k}]"
        phi = rational_from_json(_expect(p, dict, pp).get("phase", "0"), f"{pp}.phase")
        out = out + PhasedElement.of(element_from_json(p, registry, pp), phi)
    return out


def value_to_json(x) -> Any:
    """Element, phased element or oddon, whichever ``x`` is."""
    if isinstance(x, PhasedElement):
        return phased_to_json(x)
    if isinstance(x, Oddon):
        return oddon_to_json(x)
    return element_to_json(x)


# ---------------------------------------------------------------------------
# tuples, matrices, oddons, forms


def tuple_to_json(g: SuperHeisenbergTuple) -> dict:
    return {
        "p": [rational_to_json(x) for x in g.p],
        "q": [rational_to_json(x) for x in g.q],
        "Pi": [element_to_json(x) for x in g.Pi],
        "Theta": [element_to_json(x) for x in g.Theta],
        "t": element_to_json(g.t),
    }


def tuple_from_json(data, registry: GeneratorRegistry, path: str = "$") -> SuperHeisenbergTuple:
    _expect(data, dict, path)
    p = [rational_from_json(x, f"{path}.p[{k}]") for k, x in enumerate(_expect(data.get("p", []), list, f"{path}.p"))]
    q = [rational_from_json(x, f"{path}.q[{k}]") for k, x in enumerate(_expect(data.get("q", []), list, f"{path}.q"))]
    Pi = [element_from_json(x, registry, f"{path}.Pi[{k}]") for k, x in enumerate(_expect(data.get("Pi", []), list, f"{path}.Pi"))]
    Th = [element_from_json(x, registry, f"{path}.Theta[{k}]") for k, x in enumerate(_expect(data.get("Theta", []), list, f"{path}.Theta"))]
    t = element_from_json(data["t"], registry, f"{path}.t") if "t" in data else 0
    try:
        return SuperHeisenbergTuple(registry, p, q, Pi, Th, t)
    except ValueError as exc:
        raise SchemaError(path, str(exc)) from None


def matrix_to_json(G: AntisymmetricMatrix) -> dict:
    return G.to_json()


def matrix_from_json(data, path: str = "$") -> AntisymmetricMatrix:
    _expect(data, dict, path)
    rows = _expect(data.get("G"), list, f"{path}.G")
    parsed = []
    for i, r in enumerate(rows):
        _expect(r, list, f"{path}.G[{i}]")
        parsed.append([rational_from_json(x, f"{path}.G[{i}][{j}]") for j, x in enumerate(r)])
    if "m" in data and data["m"] != len(parsed):
        raise SchemaError(f"{path}.m", f"declared size {data['m']} but G has {len(parsed)} rows")
    for i, r in enumerate(parsed):
        if len(r) != len(parsed):
            raise SchemaError(f"{path}.G[{i}]", "matrix is not square")
    try:
        return AntisymmetricMatrix(parsed)
    except ValueError as exc:
        raise SchemaError(f"{path}.G", str(exc)) from None


def oddon_to_json(r: Oddon) -> dict:
    return {"kind": r.kind, "a": element_to_json(r.a), "b": element_to_json(r.b)}


def oddon_from_json(data, registry: GeneratorRegistry, path: str = "$") -> Oddon:
    _expect(data, dict, path)
    kind = data.get("kind", "real")
    if kind not in KINDS:
        raise SchemaError(f"{path}.kind", f"kind must be one of {KINDS}")
    a = element_from_json(data.get("a", {"terms": []}), registry, f"{path}.a")
    b = element_from_json(data.get("b", {"terms": []}), registry, f"{path}.b")
    return Oddon(a, b, kind)


def form_to_json(form: SupersymplecticFormData) -> dict:
    return form.to_json()


def form_from_json(data, path: str = "$") -> SupersymplecticFormData:
    _expect(data, dict, path)
    if "omega_odd" not in data:
        raise SchemaError(path, "missing omega_odd")
    odd = _expect(data["omega_odd"], list, f"{path}.omega_odd")
    rows = []
    for i, r in enumerate(odd):
        _expect(r, list, f"{path}.omega_odd[{i}]")
        rows.append([rational_from_json(x, f"{path}.omega_odd[{i}][{j}]") for j, x in enumerate(r)])
    even = []
    for i, r in enumerate(_expect(data.get("omega_even", []), list, f"{path}.omega_even")):
        _expect(r, list, f"{path}.omega_even[{i}]")
        even.append([rational_from_json(x, f"{path}.omega_even[{i}][{j}]") for j, x in enumerate(r)])
    beta = rational_from_json(data.get("beta", "1"), f"{path}.beta")
    try:
        return SupersymplecticFormData(rows, beta, even)
    except ValueError as exc:
        raise SchemaError(path, str(exc)) from None


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
