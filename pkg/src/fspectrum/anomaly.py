"""Gravitational and geometric anomaly equations: residuals and single-unknown solves."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from .errors import SolveError
from .model import FibrationModel
from .spectrum import Regime, SpectrumReport

GRAV_CONSTANT = 273
TENSOR_COEFFICIENT = 29
K2_COEFFICIENT = 30


def grav_residual(H, V, T, correction=0) -> Fraction:
    """H - V + 29 T + correction - 273; zero when the equation holds."""
    return Fraction(H) - Fraction(V) + TENSOR_COEFFICIENT * Fraction(T) + Fraction(correction) - GRAV_CONSTANT


def geom_residual(K2, chi_top, sum_m, H_ch, dim_minus_rank) -> Fraction:
    """30 K^2 + (chi - sum m)/2 - H_ch + (dim - rk); zero when the equation holds."""
    return (K2_COEFFICIENT * Fraction(K2) + Fraction(Fraction(chi_top) - Fraction(sum_m), 2)
            - Fraction(H_ch) + Fraction(dim_minus_rank))


@dataclass(frozen=True)
class AnomalyReport:
    grav_residual: Fraction
    grav_residual_alt: Optional[Fraction]
    geom_residual: Optional[Fraction]
    equations_used: Tuple[str, ...]
    inputs: Dict[str, Dict[str, Fraction]]


def gravitational_residual(spec: SpectrumReport, convention: str = "a") -> Fraction:
    """Residual of the gravitational equation.

    Outside the multiple-fiber regime both conventions coincide.  Convention
    ``"a"`` leaves the extra neutral hypers and tensors from multiple fibers
    out of H and T and adds only the correction term; ``"b"`` counts them in H
    and T and adds the correction term as well.
    """
    H, T = spec.H_unch_base + spec.H_ch, spec.T_base
    if convention == "b":
        H += spec.H_unch_extra
        T += spec.T_extra
    elif convention != "a":
        raise ValueError(f"unknown convention {convention!r}")
    return grav_residual(H, spec.V, T, spec.correction)


def geometric_residual(model: FibrationModel, spec: SpectrumReport) -> Optional[Fraction]:
    """None when the model does not supply chi_top."""
    if model.chi_top is None:
        return None
    return geom_residual(model.base.k2, model.chi_top, spec.sum_milnor, spec.H_ch,
                         spec.dim_minus_rank)


def anomaly_report(model: FibrationModel, spec: SpectrumReport) -> AnomalyReport:
    multiple = spec.regime is Regime.MULTIPLE_FIBERS
    used = ["gravitational-multiple-fibers" if multiple else "gravitational"]
    inputs: Dict[str, Dict[str, Fraction]] = {
        "gravitational": {"H": spec.H, "V": Fraction(spec.V), "T": Fraction(spec.T_base),
                          "correction": Fraction(spec.correction)},
    }
    alt = None
    if multiple:
        alt = gravitational_residual(spec, "b")
        inputs["gravitational_alt"] = {
            "H": spec.H + spec.H_unch_extra, "V": Fraction(spec.V),
            "T": Fraction(spec.T_base + spec.T_extra), "correction": Fraction(spec.correction)}
    geom = geometric_residual(model, spec)
    if geom is not None:
        used.append("geometric")
        inputs["geometric"] = {"K2": Fraction(model.base.k2), "chi_top": Fraction(model.chi_top),
                               "sum_m": Fraction(spec.sum_milnor), "H_ch": spec.H_ch,
                               "dim_minus_rank": Fraction(spec.dim_minus_rank)}
    return AnomalyReport(gravitational_residual(spec, "a"), alt, geom, tuple(used), inputs)


# -- solving ---------------------------------------------------------------------

GRAV_FIELDS = ("H", "H_unch", "H_ch", "V", "T", "correction")
GEOM_FIELDS = ("K2", "chi_top", "sum_m", "H_ch", "dim_minus_rank")
_ALIASES = {"K²": "K2", "k2": "K2", "chi": "chi_top", "Σm": "sum_m", "sum_milnor": "sum_m",
            "dim-rk": "dim_minus_rank"}


def _canon(name: str) -> str:
    return _ALIASES.get(name, name)


def _solve_grav(unknown: str, known: Dict[str, Fraction]) -> Fraction:
    known = dict(known)
    if unknown != "correction":
        known.setdefault("correction", Fraction(0))
    parts = {"H_unch", "H_ch"}
    if unknown == "H":
        hyper: set = set()
    elif unknown in parts:
        hyper = parts - {unknown}
    else:
        hyper = {"H"} if "H" in known else parts
    _check_sets(unknown, ({"V", "T", "correction"} - {unknown}) | hyper, known)

    values = {name: known.get(name, Fraction(0)) for name in ("V", "T", "correction")}
    values["H"] = known["H"] if "H" in known else known.get("H_unch", 0) + known.get("H_ch", 0)
    coefficient = {"V": -1, "T": TENSOR_COEFFICIENT, "correction": 1}.get(unknown, 1)
    return -grav_residual(**values) / coefficient


def _solve_geom(unknown: str, known: Dict[str, Fraction]) -> Fraction:
    _check_sets(unknown, set(GEOM_FIELDS) - {unknown}, known)
    coefficient = {"K2": Fraction(K2_COEFFICIENT), "chi_top": Fraction(1, 2),
                   "sum_m": Fraction(-1, 2), "H_ch": Fraction(-1),
                   "dim_minus_rank": Fraction(1)}[unknown]
    values = dict(known)
    values[unknown] = Fraction(0)
    return -geom_residual(**values) / coefficient


def _check_sets(unknown: str, needed: set, known: Mapping[str, Fraction]) -> None:
    if unknown in known:
        raise SolveError(f"{unknown} is both the unknown and a known quantity")
    missing = sorted(needed - set(known))
    if missing:
        raise SolveError(f"under-determined: missing {', '.join(missing)}")
    extra = sorted(set(known) - needed)
    if extra:
        raise SolveError(f"over-determined: unexpected {', '.join(extra)}")


def solve(equation: str, unknown: str, knowns: Mapping[str, object]) -> Fraction:
    """Value of ``unknown`` that makes the chosen equation hold exactly.

    ``equation`` is ``"grav"`` (fields H or H_unch + H_ch, V, T and an
    optional correction) or ``"geom"`` (K2, chi_top, sum_m, H_ch,
    dim_minus_rank).
    """
    known = {_canon(k): Fraction(v) for k, v in knowns.items()}
    unknown = _canon(unknown)
    if equation in ("grav", "gravitational"):
        if unknown not in GRAV_FIELDS:
            raise SolveError(f"{unknown!r} does not appear in the gravitational equation")
        bad = sorted(set(known) - set(GRAV_FIELDS))
        if bad:
            raise SolveError(f"{bad[0]!r} does not appear in the gravitational equation")
        if "H" in known and ({"H_unch", "H_ch"} & set(known)):
            raise SolveError("over-determined: give H or its parts H_unch and H_ch, not both")
        return _solve_grav(unknown, known)
    if equation in ("geom", "geometric"):
        if unknown not in GEOM_FIELDS:
            raise SolveError(f"{unknown!r} does not appear in the geometric equation")
        return _solve_geom(unknown, known)
    raise SolveError(f"unknown equation {equation!r}; use 'grav' or 'geom'")
