"""Exact infinitesimal symmetry algebras of model hypersurfaces ``Im w = P(z, conj z)`` in C^3."""

from crsym.autalg import SymmetryAlgebra, compute_algebra, compute_algebra_bruteforce, solve_component
from crsym.classify import AnalysisReport, analyze, balanced_weight, recognize_special_family
from crsym.fields import VectorField, lie_bracket, tangency_residual
from crsym.poly import CRat, HoloPoly, Poly, RealPoly, parse_model, pluriharmonic_split
from crsym.weights import MultitypeWeight, Weight, infer_multitype_weight

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "CRat",
    "HoloPoly",
    "MultitypeWeight",
    "Poly",
    "RealPoly",
    "SymmetryAlgebra",
    "VectorField",
    "Weight",
    "analyze",
    "balanced_weight",
    "compute_algebra",
    "compute_algebra_bruteforce",
    "infer_multitype_weight",
    "lie_bracket",
    "parse_model",
    "pluriharmonic_split",
    "recognize_special_family",
    "solve_component",
    "tangency_residual",
]
