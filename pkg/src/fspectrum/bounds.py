"""Explicit numerical bounds on gauge ranks, deformations, Mordell-Weil data and multisections."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Union

from .model import BaseKind, FibrationModel, nonabelian_rank
from .spectrum import SpectrumReport

CXDEF_MAX = 491
H11_MIRROR_MAX = 491
MW_RANK_MAX_P2 = 24
MW_RANK_MAX = 20
MULTISECTION_CONJECTURED_MAX = 6
MULTISECTION_HIGHEST_KNOWN = 5
ALLOWED_TORSION = frozenset({(1, n) for n in range(1, 7)} | {(2, 2), (3, 3), (2, 4)})


class Status(str, Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    WARNING = "warning"
    NOT_APPLICABLE = "not_applicable"


class Provenance(str, Enum):
    THEOREM = "theorem"
    CONJECTURE = "conjecture"
    ASSUMPTION = "assumption"


Quantity = Union[int, Fraction, str, None]


@dataclass(frozen=True)
class BoundVerdict:
    rule: str
    status: Status
    lhs: Quantity
    rhs: Quantity
    relation: str
    provenance: Provenance
    note: str = ""

    @property
    def at_boundary(self) -> bool:
        return self.status is Status.SATISFIED and self.relation == "<=" and self.lhs == self.rhs


def _compare(rule: str, lhs, relation: str, rhs, provenance: Provenance, note: str = "") -> BoundVerdict:
    holds = lhs < rhs if relation == "<" else lhs <= rhs
    if holds:
        status = Status.SATISFIED
    else:
        status = Status.VIOLATED if provenance is Provenance.THEOREM else Status.WARNING
    return BoundVerdict(rule, status, lhs, rhs, relation, provenance, note)


def _not_applicable(rule: str, relation: str, rhs, provenance: Provenance, note: str) -> BoundVerdict:
    return BoundVerdict(rule, Status.NOT_APPLICABLE, None, rhs, relation, provenance, note)


def check_rank_bound(model: FibrationModel) -> BoundVerdict:
    """Total nonabelian rank is strictly below the Picard rank (taken as h11(X))."""
    return _compare("rank-bound", nonabelian_rank(model), "<", model.h11_x, Provenance.THEOREM)


def check_cxdef(model: FibrationModel, spec: SpectrumReport) -> BoundVerdict:
    rule = "cxdef"
    if not model.base.is_rational:
        return _not_applicable(rule, "<=", CXDEF_MAX, Provenance.THEOREM,
                               "requires a rational base")
    if model.has_section is None:
        return _not_applicable(rule, "<=", CXDEF_MAX, Provenance.THEOREM,
                               "multisection_index not given; existence of a section unknown")
    cxdef = spec.cxdef
    if model.has_section:
        verdict = _compare(rule, cxdef, "<=", CXDEF_MAX, Provenance.THEOREM)
        if verdict.at_boundary:
            return BoundVerdict(rule, verdict.status, cxdef, CXDEF_MAX, "<=", Provenance.THEOREM,
                                "saturated")
        return verdict
    return _compare(rule, cxdef, "<=", CXDEF_MAX, Provenance.ASSUMPTION,
                    "genus-one fibration without section: bound inherited from the Jacobian")


def check_mirror_bound(model: FibrationModel, mirror_elliptic_with_section: bool = False) -> BoundVerdict:
    """h11(X) <= 491 when the mirror is known to be elliptic with a section."""
    if not mirror_elliptic_with_section:
        return _not_applicable("mirror-h11", "<=", H11_MIRROR_MAX, Provenance.THEOREM,
                               "hypothesis on the mirror not asserted")
    return _compare("mirror-h11", model.h11_x, "<=", H11_MIRROR_MAX, Provenance.THEOREM,
                    "conditional on the asserted mirror hypothesis")


def check_mw_rank(model: FibrationModel) -> BoundVerdict:
    rhs = MW_RANK_MAX_P2 if model.base.kind is BaseKind.P2 else MW_RANK_MAX
    if model.mordell_weil is None:
        return _not_applicable("mw-rank", "<=", rhs, Provenance.THEOREM,
                               "no Mordell-Weil data given")
    return _compare("mw-rank", model.mordell_weil.rank, "<=", rhs, Provenance.THEOREM)


def check_mw_torsion(model: FibrationModel) -> BoundVerdict:
    rule = "mw-torsion"
    allowed = "Z/n (n <= 6), Z/2xZ/2, Z/3xZ/3, Z/2xZ/4"
    if model.mordell_weil is None:
        return _not_applicable(rule, "in", allowed, Provenance.THEOREM, "no Mordell-Weil data given")
    pair = model.mordell_weil.torsion
    status = Status.SATISFIED if pair in ALLOWED_TORSION else Status.VIOLATED
    return BoundVerdict(rule, status, f"{pair[0]}x{pair[1]}", allowed, "in", Provenance.THEOREM)


def check_multisection_index(model: FibrationModel) -> BoundVerdict:
    rule = "multisection-index"
    n = model.multisection_index
    if n is None:
        return _not_applicable(rule, "<=", MULTISECTION_CONJECTURED_MAX, Provenance.CONJECTURE,
                               "multisection_index not given")
    note = ""
    if MULTISECTION_HIGHEST_KNOWN < n <= MULTISECTION_CONJECTURED_MAX:
        note = f"exceeds the highest known index {MULTISECTION_HIGHEST_KNOWN}"
    return _compare(rule, n, "<=", MULTISECTION_CONJECTURED_MAX, Provenance.CONJECTURE, note)


def run_all(model: FibrationModel, spec: SpectrumReport, *,
            mirror_elliptic_with_section: bool = False) -> List[BoundVerdict]:
    return [
        check_rank_bound(model),
        check_cxdef(model, spec),
        check_mirror_bound(model, mirror_elliptic_with_section),
        check_mw_rank(model),
        check_mw_torsion(model),
        check_multisection_index(model),
    ]


def has_violation(verdicts: List[BoundVerdict]) -> bool:
    return any(v.status is Status.VIOLATED for v in verdicts)


def has_warning(verdicts: List[BoundVerdict]) -> bool:
    return any(v.status is Status.WARNING for v in verdicts)
