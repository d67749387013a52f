"""Declarative description of an elliptic fibration X -> B, its JSON form and validation."""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from .errors import FSpectrumError, ModelError
from .kodaira import FiberRecord, FiberType, Monodromy, fiber_record
from .liealg import (
    GaugeAlgebra,
    RepSum,
    charged_dim,
    charged_dim_product,
    format_rep,
    parse_rep,
    rank_algebra,
)
from .liealg.algebra import Family
from .milnor import DEFAULT_DEGREE_CAP, PolyGerm, format_poly, milnor_number, parse_poly


class BaseKind(str, Enum):
    P2 = "P2"
    HIRZEBRUCH = "Hirzebruch"
    GENERIC_RATIONAL = "generic_rational"
    ENRIQUES = "Enriques"
    RATIONAL_WITH_QUOTIENT_POINTS = "rational_with_quotient_points"


# (h11, K^2) forced by the base kind
FIXED_BASE_INVARIANTS = {
    BaseKind.P2: (1, 9),
    BaseKind.HIRZEBRUCH: (2, 8),
    BaseKind.ENRIQUES: (10, 0),
}


@dataclass(frozen=True)
class QuotientPoint:
    """``count`` base points of type A_m carrying multiple fibers."""

    m: int
    count: int


@dataclass(frozen=True)
class BaseSurface:
    kind: BaseKind
    h11: int
    k2: int
    n: Optional[int] = None
    quotient_points: Tuple[QuotientPoint, ...] = ()

    @property
    def is_rational(self) -> bool:
        return self.kind is not BaseKind.ENRIQUES


@dataclass(frozen=True)
class Component:
    id: str
    genus: int
    cover_genus: int
    fiber: FiberType
    monodromy: Optional[Monodromy] = None

    @property
    def record(self) -> FiberRecord:
        return fiber_record(self.fiber, self.monodromy)


# a matter representation is a table slot of on[0], an explicit list of
# (index into ``on``, representation) factors, or None (only c_Q counts)
MatterRep = Union[str, Tuple[Tuple[int, RepSum], ...], None]


@dataclass(frozen=True)
class MatterPoint:
    id: str
    on: Tuple[str, ...]
    rep: MatterRep
    count: int = 1
    c_q: int = 0


@dataclass(frozen=True)
class Singularity:
    id: str
    poly: Optional[PolyGerm] = None
    milnor: Optional[int] = None


@dataclass(frozen=True)
class MordellWeil:
    rank: int = 0
    torsion: Tuple[int, int] = (1, 1)


@dataclass(frozen=True)
class FibrationModel:
    base: BaseSurface
    h11_x: int
    b3_x: int
    components: Tuple[Component, ...] = ()
    matter: Tuple[MatterPoint, ...] = ()
    singularities: Tuple[Singularity, ...] = ()
    chi_top: Optional[int] = None
    mordell_weil: Optional[MordellWeil] = None
    multisection_index: Optional[int] = None
    multiple_fibers_disjoint: Optional[bool] = None
    table_milnor: bool = False

    @property
    def mw_rank(self) -> int:
        return self.mordell_weil.rank if self.mordell_weil else 0

    @property
    def mw_torsion(self) -> Tuple[int, int]:
        return self.mordell_weil.torsion if self.mordell_weil else (1, 1)

    @property
    def has_section(self) -> Optional[bool]:
        return None if self.multisection_index is None else self.multisection_index == 1

    def component(self, cid: str) -> Component:
        for c in self.components:
            if c.id == cid:
                return c
        raise KeyError(cid)


# -- parsing ---------------------------------------------------------------------

def normalize_torsion(pair) -> Tuple[int, int]:
    """Canonical torsion form: sorted pair, with 1 standing for a trivial factor."""
    a, b = sorted(int(x) for x in pair)
    return a, b


class _Reader:
    """Typed access to a JSON object that tracks the path for error messages."""

    def __init__(self, obj: Any, path: str, allowed: Tuple[str, ...]):
        if not isinstance(obj, dict):
            raise ModelError("expected an object", path)
        unknown = sorted(set(obj) - set(allowed))
        if unknown:
            raise ModelError(f"unknown field {unknown[0]!r}", f"{path}.{unknown[0]}")
        self.obj = obj
        self.path = path

    def at(self, key: str) -> str:
        return f"{self.path}.{key}"

    def has(self, key: str) -> bool:
        return self.obj.get(key) is not None

    def raw(self, key: str, default: Any = None) -> Any:
        return self.obj.get(key, default)

    def int(self, key: str, default: Any = ..., minimum: Optional[int] = None) -> Optional[int]:
        value = self.obj.get(key)
        if value is None:
            if default is ...:
                raise ModelError("required field is missing", self.at(key))
            return default
        if isinstance(value, bool) or not isinstance(value, int):
            raise ModelError(f"expected an integer, got {value!r}", self.at(key))
        if minimum is not None and value < minimum:
            raise ModelError(f"must be >= {minimum}, got {value}", self.at(key))
        return value

    def str(self, key: str, default: Any = ...) -> Optional[str]:
        value = self.obj.get(key)
        if value is None:
            if default is ...:
                raise ModelError("required field is missing", self.at(key))
            return default
        if not isinstance(value, str):
            raise ModelError(f"expected a string, got {value!r}", self.at(key))
        return value

    def bool(self, key: str, default: Any = None) -> Optional[bool]:
        value = self.obj.get(key)
        if value is None:
            return default
        if not isinstance(value, bool):
            raise ModelError(f"expected true or false, got {value!r}", self.at(key))
        return value

    def list(self, key: str) -> list:
        value = self.obj.get(key)
        if value is None:
            return []
        if not isinstance(value, list):
            raise ModelError("expected a list", self.at(key))
        return value


def _parse_base(obj: Any) -> BaseSurface:
    r = _Reader(obj, "$.base", ("kind", "n", "h11", "k2", "quotient_points"))
    try:
        kind = BaseKind(r.str("kind"))
    except ValueError:
        options = ", ".join(k.value for k in BaseKind)
        raise ModelError(f"unknown base kind {r.raw('kind')!r} (expected one of {options})",
                         r.at("kind")) from None
    n = r.int("n", None)
    if kind is BaseKind.HIRZEBRUCH:
        if n is None or not 0 <= n <= 12:
            raise ModelError("Hirzebruch base needs 0 <= n <= 12", r.at("n"))
    elif n is not None:
        raise ModelError("only Hirzebruch bases take n", r.at("n"))
    fixed = FIXED_BASE_INVARIANTS.get(kind)
    h11 = r.int("h11", fixed[0] if fixed else ..., minimum=1)
    k2 = r.int("k2", fixed[1] if fixed else ...)
    points = []
    for i, p in enumerate(r.list("quotient_points")):
        pr = _Reader(p, f"{r.at('quotient_points')}[{i}]", ("m", "count"))
        points.append(QuotientPoint(pr.int("m", minimum=1), pr.int("count", 1, minimum=1)))
    return BaseSurface(kind, h11, k2, n, tuple(points))


def _parse_component(obj: Any, path: str) -> Component:
    r = _Reader(obj, path, ("id", "genus", "cover_genus", "fiber", "monodromy"))
    cid = r.str("id")
    genus = r.int("genus", minimum=0)
    cover = r.int("cover_genus", genus, minimum=0)
    try:
        fiber = FiberType.parse(r.str("fiber"))
    except FSpectrumError as exc:
        raise ModelError(str(exc), r.at("fiber")) from None
    mono = r.str("monodromy", None)
    try:
        monodromy = None if mono is None else Monodromy(mono)
    except ValueError:
        raise ModelError(f"unknown monodromy {mono!r}", r.at("monodromy")) from None
    comp = Component(cid, genus, cover, fiber, monodromy)
    try:
        comp.record
    except FSpectrumError as exc:
        raise ModelError(str(exc), path) from None
    return comp


def _parse_rep_text(text: Any, path: str) -> RepSum:
    if not isinstance(text, str):
        raise ModelError(f"expected a representation string, got {text!r}", path)
    try:
        return parse_rep(text)
    except FSpectrumError as exc:
        raise ModelError(str(exc), path) from None


def _parse_matter(obj: Any, path: str, components: Dict[str, Component]) -> MatterPoint:
    r = _Reader(obj, path, ("id", "on", "rep", "count", "c_q"))
    mid = r.str("id")
    on = r.raw("on", [])
    if not isinstance(on, list) or not all(isinstance(x, str) for x in on):
        raise ModelError("expected a list of component ids", r.at("on"))
    if not on and r.has("rep"):
        # points off every component (e.g. charged only under u(1)) carry just c_Q
        raise ModelError("a matter representation needs at least one component in 'on'", r.at("on"))
    for i, cid in enumerate(on):
        if cid not in components:
            raise ModelError(f"unknown component {cid!r}", f"{r.at('on')}[{i}]")
    raw = r.raw("rep")
    rep: MatterRep
    if raw is None:
        rep = None
    elif isinstance(raw, str):
        if raw not in ("Q1", "Q2"):
            raise ModelError("a slot reference must be 'Q1' or 'Q2'; give explicit "
                             "representations as a list of [index, rep]", r.at("rep"))
        rep = raw
    elif isinstance(raw, list) and raw:
        factors = []
        for i, item in enumerate(raw):
            at = f"{r.at('rep')}[{i}]"
            if (not isinstance(item, list) or len(item) != 2 or isinstance(item[0], bool)
                    or not isinstance(item[0], int)):
                raise ModelError("expected [component index, representation]", at)
            if not 0 <= item[0] < len(on):
                raise ModelError(f"index {item[0]} does not refer to an entry of 'on'", at)
            factors.append((item[0], _parse_rep_text(item[1], f"{at}[1]")))
        rep = tuple(factors)
    else:
        raise ModelError("expected 'Q1', 'Q2', a list of [index, rep], or null", r.at("rep"))
    point = MatterPoint(mid, tuple(on), rep, r.int("count", 1, minimum=1), r.int("c_q", 0, minimum=0))
    try:
        matter_charged_dim(point, components)
    except FSpectrumError as exc:
        raise ModelError(str(exc), r.at("rep")) from None
    return point


def _parse_singularity(obj: Any, path: str) -> Singularity:
    r = _Reader(obj, path, ("id", "poly", "milnor"))
    sid = r.str("id")
    if r.has("poly") == r.has("milnor"):
        raise ModelError("give exactly one of 'poly' or 'milnor'", path)
    if r.has("poly"):
        try:
            return Singularity(sid, poly=parse_poly(r.str("poly")))
        except FSpectrumError as exc:
            raise ModelError(str(exc), r.at("poly")) from None
    return Singularity(sid, milnor=r.int("milnor", minimum=1))


TOP_LEVEL_KEYS = ("base", "components", "matter", "singularities", "topology", "mordell_weil",
                  "multisection_index", "multiple_fibers_disjoint", "table_milnor")


def model_from_dict(doc: Any) -> FibrationModel:
    r = _Reader(doc, "$", TOP_LEVEL_KEYS)
    if not r.has("base"):
        raise ModelError("required field is missing", "$.base")
    base = _parse_base(r.raw("base"))

    components: Dict[str, Component] = {}
    for i, c in enumerate(r.list("components")):
        comp = _parse_component(c, f"$.components[{i}]")
        if comp.id in components:
            raise ModelError(f"duplicate component id {comp.id!r}", f"$.components[{i}].id")
        components[comp.id] = comp

    matter = []
    seen = set()
    for i, m in enumerate(r.list("matter")):
        point = _parse_matter(m, f"$.matter[{i}]", components)
        if point.id in seen:
            raise ModelError(f"duplicate matter id {point.id!r}", f"$.matter[{i}].id")
        seen.add(point.id)
        matter.append(point)

    sings = []
    seen = set()
    for i, s in enumerate(r.list("singularities")):
        sing = _parse_singularity(s, f"$.singularities[{i}]")
        if sing.id in seen:
            raise ModelError(f"duplicate singularity id {sing.id!r}", f"$.singularities[{i}].id")
        seen.add(sing.id)
        sings.append(sing)

    if not r.has("topology"):
        raise ModelError("required field is missing", "$.topology")
    top = _Reader(r.raw("topology"), "$.topology", ("h11_x", "b3_x", "chi_top"))

    mw = None
    if r.has("mordell_weil"):
        mr = _Reader(r.raw("mordell_weil"), "$.mordell_weil", ("rank", "torsion"))
        torsion = mr.raw("torsion", [1, 1])
        if (not isinstance(torsion, list) or len(torsion) != 2
                or not all(isinstance(t, int) and not isinstance(t, bool) and t >= 1 for t in torsion)):
            raise ModelError("expected [n1, n2] with positive integers", mr.at("torsion"))
        mw = MordellWeil(mr.int("rank", 0, minimum=0), normalize_torsion(torsion))

    return FibrationModel(
        base=base,
        h11_x=top.int("h11_x", minimum=1),
        b3_x=top.int("b3_x", minimum=0),
        components=tuple(components.values()),
        matter=tuple(matter),
        singularities=tuple(sings),
        chi_top=top.int("chi_top", None),
        mordell_weil=mw,
        multisection_index=r.int("multisection_index", None, minimum=1),
        multiple_fibers_disjoint=r.bool("multiple_fibers_disjoint"),
        table_milnor=bool(r.bool("table_milnor", False)),
    )


def parse_model(text: Union[str, bytes]) -> FibrationModel:
    """Parse a JSON model document; problems raise :class:`ModelError` with a JSON path."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None
    return model_from_dict(doc)


# -- serialization ---------------------------------------------------------------

def _drop_none(d: Dict[str, Any]) -> Dict[str, Any]:
    return {k: v for k, v in d.items() if v is not None}


def model_to_dict(model: FibrationModel) -> Dict[str, Any]:
    """Canonical JSON-ready form; defaults are written out explicitly."""
    b = model.base
    doc: Dict[str, Any] = {
        "base": _drop_none({
            "kind": b.kind.value, "n": b.n, "h11": b.h11, "k2": b.k2,
            "quotient_points": [{"m": q.m, "count": q.count} for q in b.quotient_points],
        }),
        "components": [
            _drop_none({"id": c.id, "genus": c.genus, "cover_genus": c.cover_genus,
                        "fiber": str(c.fiber),
                        "monodromy": c.monodromy.value if c.monodromy else None})
            for c in model.components
        ],
        "matter": [],
        "singularities": [],
        "topology": _drop_none({"h11_x": model.h11_x, "b3_x": model.b3_x,
                                "chi_top": model.chi_top}),
    }
    for m in model.matter:
        if m.rep is None or isinstance(m.rep, str):
            rep: Any = m.rep
        else:
            rep = [[i, format_rep(r)] for i, r in m.rep]
        doc["matter"].append({"id": m.id, "on": list(m.on), "rep": rep,
                              "count": m.count, "c_q": m.c_q})
    for s in model.singularities:
        doc["singularities"].append(
            {"id": s.id, "poly": format_poly(s.poly)} if s.poly is not None
            else {"id": s.id, "milnor": s.milnor})
    if model.mordell_weil is not None:
        doc["mordell_weil"] = {"rank": model.mordell_weil.rank,
                               "torsion": list(model.mordell_weil.torsion)}
    if model.multisection_index is not None:
        doc["multisection_index"] = model.multisection_index
    if model.multiple_fibers_disjoint is not None:
        doc["multiple_fibers_disjoint"] = model.multiple_fibers_disjoint
    if model.table_milnor:
        doc["table_milnor"] = True
    return doc


def serialize_model(model: FibrationModel) -> str:
    return json.dumps(model_to_dict(model), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# -- derived quantities ----------------------------------------------------------

def matter_charged_dim(point: MatterPoint, components: Dict[str, Component]) -> Fraction:
    """Charged dimension of one copy of the matter representation (without c_Q)."""
    if point.rep is None:
        return Fraction(0)
    if isinstance(point.rep, str):
        rec = components[point.on[0]].record
        slot = rec.slot(point.rep)
        return Fraction(0) if slot is None else charged_dim(rec.algebra, slot)
    algebras = [components[point.on[i]].record.algebra for i, _ in point.rep]
    if len(point.rep) == 1:
        return charged_dim(algebras[0], point.rep[0][1])
    return charged_dim_product(zip(algebras, (r for _, r in point.rep)))


def gauge_algebra_of(model: FibrationModel) -> GaugeAlgebra:
    """Nonabelian factors from the fiber table plus u(1) for each Mordell-Weil generator."""
    factors = tuple(c.record.algebra for c in model.components
                    if c.record.algebra.family is not Family.TRIVIAL)
    return GaugeAlgebra(factors, model.mw_rank)


def singularity_milnor(s: Singularity, *, jacobian_ideal_only: bool = False,
                       degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    if s.milnor is not None:
        return s.milnor
    return milnor_number(s.poly, jacobian_ideal_only=jacobian_ideal_only, degree_cap=degree_cap)


def table_milnor_total(model: FibrationModel) -> int:
    """Milnor contributions read from the fiber table for matter points in Q1/Q2 slots."""
    total = 0
    by_id = {c.id: c for c in model.components}
    for m in model.matter:
        if isinstance(m.rep, str):
            total += m.count * by_id[m.on[0]].record.milnor_for_slot(m.rep)
    return total


def total_milnor(model: FibrationModel, *, jacobian_ideal_only: bool = False,
                 degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    total = sum(singularity_milnor(s, jacobian_ideal_only=jacobian_ideal_only,
                                   degree_cap=degree_cap) for s in model.singularities)
    if model.table_milnor:
        total += table_milnor_total(model)
    return total


# -- validation ------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    rule: str
    message: str
    severity: str = "error"  # "error" or "warning"

    def __str__(self) -> str:
        return f"[{self.severity}] {self.rule}: {self.message}"


def nonabelian_rank(model: FibrationModel) -> int:
    return sum(rank_algebra(c.record.algebra) for c in model.components)


def validate(model: FibrationModel, *, milnor_total: Optional[int] = None) -> List[Violation]:
    """Structural violations; an empty list means every rule holds.

    ``milnor_total`` can be passed to avoid recomputing germ Milnor numbers.
    """
    out: List[Violation] = []
    base = model.base

    fixed = FIXED_BASE_INVARIANTS.get(base.kind)
    if fixed and (base.h11, base.k2) != fixed:
        out.append(Violation("base-invariants",
                             f"{base.kind.value} base has h11 = {fixed[0]} and K^2 = {fixed[1]}, "
                             f"got h11 = {base.h11}, K^2 = {base.k2}"))

    if model.h11_x < base.h11 + 1:
        out.append(Violation("fiber-class",
                             f"h11(X) = {model.h11_x} must be at least h11(B) + 1 = {base.h11 + 1}"))

    sum_m = total_milnor(model) if milnor_total is None else milnor_total
    if (model.b3_x + sum_m) % 2:
        out.append(Violation("uncharged-hypers-integral",
                             f"b3(X) + sum of Milnor numbers = {model.b3_x} + {sum_m} is odd"))

    if base.kind is BaseKind.ENRIQUES:
        bad = [c.id for c in model.components if c.record.algebra.family is not Family.TRIVIAL]
        if bad:
            out.append(Violation("enriques-isotrivial",
                                 "an Enriques base forces an isotrivial fibration with no "
                                 f"discriminant; components with gauge algebra: {', '.join(bad)}"))
        if model.chi_top not in (None, 0):
            out.append(Violation("enriques-isotrivial",
                                 f"an Enriques base implies chi_top = 0, got {model.chi_top}",
                                 "warning"))

    if base.quotient_points:
        if base.kind in (BaseKind.P2, BaseKind.HIRZEBRUCH):
            out.append(Violation("base-singularities",
                                 f"{base.kind.value} base is smooth and has no A_m points"))
        if model.multiple_fibers_disjoint is not True:
            out.append(Violation("multiple-fibers-disjoint",
                                 "multiple fibers must be asserted disjoint from the "
                                 "discriminant components (multiple_fibers_disjoint = true)"))

    rank = nonabelian_rank(model)
    if not rank < model.h11_x:
        out.append(Violation("rank-bound",
                             f"total rank of nonabelian gauge factors {rank} is not below h11(X) = "
                             f"{model.h11_x}"))

    for c in model.components:
        if c.cover_genus < c.genus:
            out.append(Violation("cover-genus",
                                 f"component {c.id}: cover genus {c.cover_genus} is below genus {c.genus}"))
        elif c.record.rho0 is None and c.cover_genus != c.genus:
            out.append(Violation("cover-genus",
                                 f"component {c.id}: algebra {c.record.algebra} has no folding "
                                 f"representation, so cover genus must equal genus {c.genus}"))
    return out


def has_errors(violations: List[Violation]) -> bool:
    return any(v.severity == "error" for v in violations)
