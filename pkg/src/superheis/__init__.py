"""Exact harmonic analysis on the super-Heisenberg group.

Grassmann algebra over Gaussian rationals, the classical, fermionic and
super-Heisenberg group laws, superfunctions with the Q-inner product, the
pi_1 representation with its Fourier-Wigner and Bargmann transforms, oddons,
and the finite-dimensional unitary theory.
"""

from .grassmann import GeneratorRegistry, GrassmannElement, ParityError, PhasedElement, RegistryError
from .oddons import Oddon, OddHeisenbergElement, oddon_inverse, oddon_mul, odd_star_product
from .report import Report
from .scalars import CQ, I
from .superfunctions import AntisymmetricMatrix, FunctionSpace, HermiteFamily, canonical_G, gaussian, q_inner
from .transforms import BargmannContext, FHGroupElement, bargmann, fourier_wigner, pi1_apply

__version__ = "0.1.0"

__all__ = [
    "AntisymmetricMatrix",
    "BargmannContext",
    "CQ",
    "FHGroupElement",
    "FunctionSpace",
    "GeneratorRegistry",
    "GrassmannElement",
    "HermiteFamily",
    "I",
    "Oddon",
    "OddHeisenbergElement",
    "ParityError",
    "PhasedElement",
    "RegistryError",
    "Report",
    "bargmann",
    "canonical_G",
    "fourier_wigner",
    "gaussian",
    "odd_star_product",
    "oddon_inverse",
    "oddon_mul",
    "pi1_apply",
    "q_inner",
]
