"""Italian domination numbers of directed cycle products."""

from .constructions import Certificate, CertificateSource, certificate_for, closed_form_gamma
from .digraph import (
    Digraph,
    ProductInstance,
    ProductKind,
    cartesian_product,
    directed_cycle,
    directed_path,
    strong_product,
)
from .idf import Labeling, bound_report, column_profile, is_idf, weight
from .solver import SolverConfig, SolveResult, solve

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CertificateSource",
    "Digraph",
    "Labeling",
    "ProductInstance",
    "ProductKind",
    "SolveResult",
    "SolverConfig",
    "bound_report",
    "cartesian_product",
    "certificate_for",
    "closed_form_gamma",
    "column_profile",
    "directed_cycle",
    "directed_path",
    "is_idf",
    "solve",
    "strong_product",
    "weight",
]
