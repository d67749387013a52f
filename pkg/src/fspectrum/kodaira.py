"""Kodaira fiber types and the fiber-type -> algebra/matter table.

The table itself lives in ``data/kodaira_table.json``; this module only
instantiates parametric rows and answers lookups.  Charged dimensions are
stored as published so that :func:`validate_record_against_engine` can
compare them with values recomputed from weight systems.
"""

from __future__ import annotations

import ast
import json
import operator
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Dict, Iterator, List, Optional, Tuple

from .errors import UnknownFiberError
from .liealg import LieAlgebraId, RepSum, charged_dim, format_rep, parse_rep


class FiberKind(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    I_STAR = "I*"
    IV_STAR = "IV*"
    III_STAR = "III*"
    II_STAR = "II*"


class Monodromy(str, Enum):
    SPLIT = "split"
    SEMI_SPLIT = "semi-split"
    NON_SPLIT = "non-split"


@dataclass(frozen=True, order=True)
class FiberType:
    kind: FiberKind
    n: Optional[int] = None

    def __post_init__(self):
        kind = FiberKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is FiberKind.I:
            if not isinstance(self.n, int) or self.n < 1:
                raise UnknownFiberError(f"I_n needs n >= 1, got {self.n!r}")
        elif kind is FiberKind.I_STAR:
            if not isinstance(self.n, int) or self.n < 0:
                raise UnknownFiberError(f"I*_n needs n >= 0, got {self.n!r}")
        elif self.n is not None:
            raise UnknownFiberError(f"fiber type {kind.value} takes no index")

    @classmethod
    def parse(cls, text: str) -> "FiberType":
        s = text.strip().replace("_", "").replace("^", "").replace("{", "").replace("}", "")
        m = re.fullmatch(r"I(\d+)\*|I\*(\d+)", s)
        if m:
            return cls(FiberKind.I_STAR, int(m.group(1) or m.group(2)))
        m = re.fullmatch(r"I(\d+)", s)
        if m:
            return cls(FiberKind.I, int(m.group(1)))
        try:
            return cls(FiberKind(s))
        except ValueError:
            raise UnknownFiberError(f"unknown fiber type {text!r}") from None

    def __str__(self) -> str:
        if self.kind is FiberKind.I:
            return f"I{self.n}"
        if self.kind is FiberKind.I_STAR:
            return f"I{self.n}*"
        return self.kind.value


@dataclass(frozen=True)
class FiberRecord:
    fiber: FiberType
    monodromy: Optional[Monodromy]
    algebra: LieAlgebraId
    rho0: Optional[RepSum]
    rhoQ1: Optional[RepSum]
    rhoQ2: Optional[RepSum]
    mP1: int
    mP2: int
    # published (adjoint, rho0, rhoQ1, rhoQ2) charged dimensions; None = blank cell
    table_charged_dims: Tuple[Optional[Fraction], ...]
    in_table: bool = True

    def slot(self, name: str) -> Optional[RepSum]:
        try:
            return {"Q1": self.rhoQ1, "Q2": self.rhoQ2, "rho0": self.rho0}[name]
        except KeyError:
            raise UnknownFiberError(f"unknown representation slot {name!r}") from None

    def milnor_for_slot(self, name: str) -> int:
        return {"Q1": self.mP1, "Q2": self.mP2}[name]


_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv, ast.Pow: operator.pow}


def _eval(expr: str, env: Dict[str, int]) -> Fraction:
    """Evaluate a small arithmetic expression in the table's parameters."""

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name) and node.id in env:
            return Fraction(env[node.id])
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](walk(node.left), walk(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -walk(node.operand)
        raise ValueError(f"unsupported table expression {expr!r}")

    return walk(ast.parse(expr, mode="eval"))


@dataclass(frozen=True)
class _Row:
    raw: dict

    @property
    def kind(self) -> FiberKind:
        return FiberKind(self.raw["fiber"])

    @property
    def monodromy(self) -> Optional[Monodromy]:
        m = self.raw["monodromy"]
        return None if m is None else Monodromy(m)

    def parameter_for(self, n: Optional[int]) -> Optional[Dict[str, int]]:
        """Environment binding the row parameter so that the row covers index ``n``."""
        idx = self.raw["index"]
        if idx is None:
            return {} if n is None else None
        if n is None:
            return None
        if isinstance(idx, int):
            return {} if idx == n else None
        name, lo = idx["param"], idx["min"]
        for value in range(lo, n + 2):
            if _eval(idx["expr"], {name: value}) == n:
                return {name: value}
        return None

    def instantiate(self, fiber: FiberType, env: Dict[str, int]) -> FiberRecord:
        raw = self.raw
        alg = raw["algebra"]
        m = re.fullmatch(r"(su|sp|so)\((.+)\)", alg)
        if m:
            alg = f"{m.group(1)}({int(_eval(m.group(2), env))})"
        reps = [None if raw[k] is None else parse_rep(raw[k]) for k in ("rho0", "rhoQ1", "rhoQ2")]
        charged = tuple(None if c is None else _eval(c, env) for c in raw["charged"])
        mp1, mp2 = (x or 0 for x in raw["milnor"])
        return FiberRecord(fiber, self.monodromy, LieAlgebraId.parse(alg), *reps,
                           mP1=mp1, mP2=mp2, table_charged_dims=charged,
                           in_table=raw["in_table"])


@lru_cache(maxsize=1)
def table_rows() -> Tuple[_Row, ...]:
    text = resources.files("fspectrum").joinpath("data/kodaira_table.json").read_text("utf-8")
    return tuple(_Row(r) for r in json.loads(text)["records"])


def _coerce_monodromy(m) -> Optional[Monodromy]:
    if m is None or isinstance(m, Monodromy):
        return m
    try:
        return Monodromy(str(m).strip().lower())
    except ValueError:
        raise UnknownFiberError(f"unknown monodromy {m!r}") from None


def fiber_record(fiber, monodromy=None) -> FiberRecord:
    """Look up the record for a fiber type and monodromy class.

    ``monodromy`` may be omitted when the fiber type has a single row.  Rows
    without a monodromy distinction also accept ``"split"``.
    """
    if isinstance(fiber, str):
        fiber = FiberType.parse(fiber)
    mono = _coerce_monodromy(monodromy)
    candidates = []
    for row in table_rows():
        if row.kind is not fiber.kind:
            continue
        env = row.parameter_for(fiber.n)
        if env is not None:
            candidates.append((row, env))
    if not candidates:
        raise UnknownFiberError(f"no table row for fiber {fiber}")
    if mono is None:
        if len(candidates) > 1:
            options = ", ".join(r.monodromy.value for r, _ in candidates if r.monodromy)
            raise UnknownFiberError(f"fiber {fiber} needs a monodromy class ({options})")
        row, env = candidates[0]
        return row.instantiate(fiber, env)
    for row, env in candidates:
        if row.monodromy is mono or (row.monodromy is None and mono is Monodromy.SPLIT):
            return row.instantiate(fiber, env)
    raise UnknownFiberError(f"fiber {fiber} has no {mono.value} row")


def milnor_contributions(fiber, monodromy=None) -> Tuple[int, int]:
    rec = fiber_record(fiber, monodromy)
    return rec.mP1, rec.mP2


def engine_charged_dims(rec: FiberRecord) -> Tuple[Fraction, ...]:
    alg = rec.algebra
    cols = [charged_dim(alg, "adjoint")]
    for rep in (rec.rho0, rec.rhoQ1, rec.rhoQ2):
        cols.append(Fraction(0) if rep is None else charged_dim(alg, rep))
    return tuple(cols)


def validate_record_against_engine(rec: FiberRecord) -> List[str]:
    """Differences between published charged dimensions and the weight-system engine."""
    names = ("adjoint", "rho0", "rhoQ1", "rhoQ2")
    reps = (("adjoint",), rec.rho0, rec.rhoQ1, rec.rhoQ2)
    out = []
    for name, rep, published, computed in zip(names, reps, rec.table_charged_dims,
                                              engine_charged_dims(rec)):
        if published is None:
            if rep is not None and name != "adjoint":
                out.append(f"{rec.fiber}/{rec.algebra} {name}: representation "
                           f"{format_rep(rep)} has no published charged dimension")
            continue
        if published != computed:
            out.append(f"{rec.fiber}/{rec.algebra} {name}: published {published}, "
                       f"weight system gives {computed}")
    return out


def enumerate_records(max_n: int = 12, max_k: int = 6, include_extra: bool = False) -> Iterator[FiberRecord]:
    """Every row instantiated for parameters up to the given bounds, in table order."""
    for row in table_rows():
        if not row.raw["in_table"] and not include_extra:
            continue
        idx = row.raw["index"]
        if idx is None:
            yield row.instantiate(FiberType(row.kind), {})
        elif isinstance(idx, int):
            yield row.instantiate(FiberType(row.kind, idx), {})
        else:
            name = idx["param"]
            top = max_k if name == "k" else max_n
            for value in range(idx["min"], top + 1):
                env = {name: value}
                yield row.instantiate(FiberType(row.kind, int(_eval(idx["expr"], env))), env)
