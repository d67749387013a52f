"""Exact representation data for the gauge algebras that appear in F-theory models."""

from .algebra import (
    TRIVIAL,
    U1,
    Family,
    GaugeAlgebra,
    LieAlgebraId,
    RepKind,
    RepLabel,
    RepSum,
    WeightSystem,
    algebra_totals,
    as_rep_sum,
    charged_dim,
    charged_dim_product,
    dim_algebra,
    dim_rep,
    format_rep,
    parse_rep,
    rank_algebra,
    so,
    sp,
    su,
    weight_system,
)
from .rootsystem import RootSystem

__all__ = [
    "TRIVIAL", "U1", "Family", "GaugeAlgebra", "LieAlgebraId", "RepKind", "RepLabel",
    "RepSum", "RootSystem", "WeightSystem", "algebra_totals", "as_rep_sum", "charged_dim",
    "charged_dim_product", "dim_algebra", "dim_rep", "format_rep", "parse_rep",
    "rank_algebra", "so", "sp", "su", "weight_system",
]
