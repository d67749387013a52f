"""Massless spectrum (V, T, H) of a fibration model."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import InconsistencyError
from .liealg import algebra_totals, charged_dim
from .model import FibrationModel, gauge_algebra_of, matter_charged_dim, total_milnor
from .milnor import DEFAULT_DEGREE_CAP


class Regime(str, Enum):
    SMOOTH = "smooth"
    TERMINAL = "terminal"
    MULTIPLE_FIBERS = "multiple_fibers"


@dataclass(frozen=True)
class BreakdownEntry:
    source: str
    term: str
    value: Fraction


@dataclass(frozen=True)
class SpectrumReport:
    V: int
    T_base: int
    T_extra: int
    H_unch_base: Fraction
    H_unch_extra: int
    H_ch: Fraction
    breakdown: Tuple[BreakdownEntry, ...]
    regime: Regime
    dim_g: int
    rank_g: int
    sum_milnor: int
    correction: int  # sum over quotient points of count * m
    warnings: Tuple[str, ...] = field(default=())

    @property
    def dim_minus_rank(self) -> int:
        return self.dim_g - self.rank_g

    @property
    def cxdef(self) -> Fraction:
        return self.H_unch_base - 1

    @property
    def H(self) -> Fraction:
        """Hypermultiplets without the multiple-fiber extras."""
        return self.H_unch_base + self.H_ch

    @property
    def T(self) -> int:
        return self.T_base


def vector_multiplets(model: FibrationModel) -> int:
    dim, rank = algebra_totals(gauge_algebra_of(model))
    return model.h11_x - model.base.h11 - 1 + dim - rank


def tensor_multiplets(model: FibrationModel) -> Tuple[int, int]:
    extra = sum(q.count * q.m for q in model.base.quotient_points)
    return model.base.h11 - 1, extra


def h_uncharged(model: FibrationModel, sum_milnor: Optional[int] = None) -> Tuple[Fraction, int]:
    if sum_milnor is None:
        sum_milnor = total_milnor(model)
    extra = sum(q.count for q in model.base.quotient_points)
    return Fraction(model.b3_x + sum_milnor, 2), extra


def h_charged(model: FibrationModel) -> Tuple[Fraction, Tuple[BreakdownEntry, ...]]:
    """Charged hypermultiplets with one ledger entry per nonzero contribution."""
    entries: List[BreakdownEntry] = []
    for c in model.components:
        rec = c.record
        adj = c.genus * charged_dim(rec.algebra, "adjoint")
        if adj:
            entries.append(BreakdownEntry(c.id, "adjoint", adj))
        if rec.rho0 is not None and c.cover_genus != c.genus:
            value = (c.cover_genus - c.genus) * charged_dim(rec.algebra, rec.rho0)
            if value:
                entries.append(BreakdownEntry(c.id, "rho0", value))
    by_id: Dict[str, object] = {c.id: c for c in model.components}
    for m in model.matter:
        value = m.count * matter_charged_dim(m, by_id)
        if value:
            entries.append(BreakdownEntry(m.id, "rhoQ", value))
        if m.c_q:
            entries.append(BreakdownEntry(m.id, "c_Q", Fraction(m.count * m.c_q)))
    return sum((e.value for e in entries), Fraction(0)), tuple(entries)


def detect_regime(model: FibrationModel) -> Regime:
    if model.base.quotient_points:
        return Regime.MULTIPLE_FIBERS
    if model.singularities or (model.table_milnor and total_milnor(model)):
        return Regime.TERMINAL
    return Regime.SMOOTH


def full_spectrum(model: FibrationModel, *, regime: Optional[Regime] = None,
                  jacobian_ideal_only: bool = False,
                  degree_cap: int = DEFAULT_DEGREE_CAP) -> SpectrumReport:
    """Assemble the spectrum; the regime is detected unless forced."""
    detected = detect_regime(model)
    regime = detected if regime is None else Regime(regime)
    sum_m = total_milnor(model, jacobian_ideal_only=jacobian_ideal_only, degree_cap=degree_cap)

    if regime is Regime.SMOOTH and sum_m:
        raise InconsistencyError("smooth regime requested but the model has singular points")
    if regime is not Regime.MULTIPLE_FIBERS and model.base.quotient_points:
        raise InconsistencyError(f"{regime.value} regime requested but the base has multiple fibers")

    g = gauge_algebra_of(model)
    dim, rank = algebra_totals(g)
    V = model.h11_x - model.base.h11 - 1 + dim - rank
    T_base, T_extra = tensor_multiplets(model)
    if regime is Regime.SMOOTH:
        # h^{2,1} + 1 = b3 / 2 for a smooth threefold
        H_base, H_extra = Fraction(model.b3_x, 2), 0
    else:
        H_base, H_extra = h_uncharged(model, sum_m)
    H_ch, breakdown = h_charged(model)

    warnings = []
    if H_ch.denominator != 1:
        warnings.append(f"charged hypermultiplet count {H_ch} is not an integer")
    if H_base.denominator != 1:
        warnings.append(f"uncharged hypermultiplet count {H_base} is not an integer")
    return SpectrumReport(
        V=V, T_base=T_base, T_extra=T_extra, H_unch_base=H_base, H_unch_extra=H_extra,
        H_ch=H_ch, breakdown=breakdown, regime=regime, dim_g=dim, rank_g=rank,
        sum_milnor=sum_m, correction=T_extra, warnings=tuple(warnings))


def jacobian_cxdef(cxdef_jacobian: int, conifold_count: int) -> int:
    """Complex deformations of a genus-one fibration from those of its Jacobian.

    Each I2 -> I1 collision point of the Jacobian removes one deformation.
    """
    if conifold_count < 0 or cxdef_jacobian < 0:
        raise InconsistencyError("deformation and point counts must be non-negative")
    result = cxdef_jacobian - conifold_count
    if result < 0:
        raise InconsistencyError(
            f"{conifold_count} collision points exceed the {cxdef_jacobian} deformations "
            "of the Jacobian fibration")
    return result
