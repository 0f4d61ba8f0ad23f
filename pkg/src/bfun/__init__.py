"""Bernstein-Sato b-functions on the triple flag variety of SL_n, in exact arithmetic."""

from .errors import DomainError, NotPolynomialError
from .formulas import (
    H_delta,
    H_form,
    H_subcone,
    bG3_lift,
    bG3_subcone,
    b_K,
    gamma_lift_A,
    kashiwara_b,
    lift_constant,
    projective_b,
)
from .lattice import (
    Generator,
    GeneratorCoords,
    SubconeTag,
    TripleWeight,
    classify_subcone,
    coords_to_triple,
    omega_member,
    to_generator_coords,
)
from .roots import Root, Weight, positive_roots
from .symbolic import FactoredPolynomial, FactoredRatio, GammaLift, LinearForm, gamma_ratio, k_multiset

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "NotPolynomialError",
    "H_delta",
    "H_form",
    "H_subcone",
    "bG3_lift",
    "bG3_subcone",
    "b_K",
    "gamma_lift_A",
    "kashiwara_b",
    "lift_constant",
    "projective_b",
    "Generator",
    "GeneratorCoords",
    "SubconeTag",
    "TripleWeight",
    "classify_subcone",
    "coords_to_triple",
    "omega_member",
    "to_generator_coords",
    "Root",
    "Weight",
    "positive_roots",
    "FactoredPolynomial",
    "FactoredRatio",
    "GammaLift",
    "LinearForm",
    "gamma_ratio",
    "k_multiset",
]
