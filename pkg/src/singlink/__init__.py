"""Exact invariants of links of normal complex surface singularities."""
from ._kernels import BACKEND
from .brieskorn import profile, seifert_graph, triple
from .frames import canonical_frame, ehat, reduce
from .plumbing import build_graph, canonical_cycle, intersection_matrix, laufer_chi
from .todd import evaluate_genus, todd_polynomial

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "build_graph",
    "canonical_cycle",
    "canonical_frame",
    "ehat",
    "evaluate_genus",
    "intersection_matrix",
    "laufer_chi",
    "profile",
    "reduce",
    "seifert_graph",
    "todd_polynomial",
    "triple",
]
