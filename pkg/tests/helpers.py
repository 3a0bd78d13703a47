"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from superheis.grassmann import GeneratorRegistry, GrassmannElement
from superheis.oddons import Oddon
from superheis.scalars import CQ

REG4 = GeneratorRegistry.from_groups(parameter=["q1", "q2", "q3", "q4"])

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
gaussians = st.builds(CQ, rationals, rationals)


def elements(registry=REG4, max_terms=5, parity=None):
    n = len(registry)
    masks = st.integers(min_value=0, max_value=(1 << n) - 1)
    if parity is not None:
        masks = masks.filter(lambda m: bin(m).count("1") % 2 == parity)
    terms = st.dictionaries(masks, gaussians, max_size=max_terms)
    return terms.map(lambda t: GrassmannElement(registry, t))


def oddons(registry=REG4, kind="real"):
    return st.builds(lambda a, b: Oddon(a, b, kind), elements(registry, 3), elements(registry, 3))
