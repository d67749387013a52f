"""Milnor numbers of isolated hypersurface singularities."""

from .germ import MAX_VARS, PolyGerm, format_poly, parse_poly
from .kernel import COMPILED_AVAILABLE, default_backend
from .local_algebra import (
    DEFAULT_DEGREE_CAP,
    MilnorReport,
    local_algebra,
    milnor_number,
    milnor_report,
)
from .quasihomogeneous import WeightVector, find_weights, milnor_quasihomogeneous

__all__ = [
    "COMPILED_AVAILABLE",
    "DEFAULT_DEGREE_CAP",
    "MAX_VARS",
    "MilnorReport",
    "PolyGerm",
    "WeightVector",
    "default_backend",
    "find_weights",
    "format_poly",
    "local_algebra",
    "milnor_number",
    "milnor_quasihomogeneous",
    "milnor_report",
    "parse_poly",
]
