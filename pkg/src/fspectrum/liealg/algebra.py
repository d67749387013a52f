"""Lie algebra identifiers, representation labels and charged dimensions."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Optional, Tuple, Union

from ..errors import InvalidAlgebraError, UnsupportedRepresentationError
from .rootsystem import RootSystem


class Family(str, Enum):
    SU = "su"
    SP = "sp"
    SO = "so"
    G2 = "g2"
    F4 = "f4"
    E6 = "e6"
    E7 = "e7"
    E8 = "e8"
    U1 = "u1"
    TRIVIAL = "trivial"


_PARAMETRIC = {Family.SU: 2, Family.SP: 1, Family.SO: 7}


@dataclass(frozen=True, order=True)
class LieAlgebraId:
    family: Family
    param: Optional[int] = None

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        if fam in _PARAMETRIC:
            lo = _PARAMETRIC[fam]
            if not isinstance(self.param, int) or isinstance(self.param, bool) or self.param < lo:
                raise InvalidAlgebraError(f"{fam.value}(n) needs an integer n >= {lo}, got {self.param!r}")
        elif self.param is not None:
            raise InvalidAlgebraError(f"{fam.value} takes no parameter")

    @classmethod
    def parse(cls, text: str) -> "LieAlgebraId":
        s = text.strip().lower().replace(" ", "")
        if s in ("trivial", "e", "{e}", "0"):
            return cls(Family.TRIVIAL)
        if s in ("u1", "u(1)"):
            return cls(Family.U1)
        if s in ("g2", "f4", "e6", "e7", "e8"):
            return cls(Family(s))
        m = re.fullmatch(r"(su|sp|so)\(?(\d+)\)?", s)
        if not m:
            raise InvalidAlgebraError(f"unrecognized algebra {text!r}")
        return cls(Family(m.group(1)), int(m.group(2)))

    def __str__(self) -> str:
        if self.param is None:
            return self.family.value
        return f"{self.family.value}({self.param})"


def su(n: int) -> LieAlgebraId:
    return LieAlgebraId(Family.SU, n)


def sp(k: int) -> LieAlgebraId:
    return LieAlgebraId(Family.SP, k)


def so(m: int) -> LieAlgebraId:
    return LieAlgebraId(Family.SO, m)


TRIVIAL = LieAlgebraId(Family.TRIVIAL)
U1 = LieAlgebraId(Family.U1)


class RepKind(str, Enum):
    ADJOINT = "adjoint"
    FUND = "fund"
    LAMBDA2 = "lambda2"
    LAMBDA2_TRACELESS = "lambda2_traceless"
    VECT = "vect"
    SPIN = "spin"
    SPIN_PLUS_MINUS = "spin_plus_minus"
    DIM7_G2 = "dim7_g2"
    DIM26_F4 = "dim26_f4"
    DIM27_E6 = "dim27_e6"
    DIM56_E7 = "dim56_e7"


_KIND_ALIASES = {
    "adj": RepKind.ADJOINT,
    "fundamental": RepKind.FUND,
    "antisym": RepKind.LAMBDA2,
    "lambda2_0": RepKind.LAMBDA2_TRACELESS,
    "vector": RepKind.VECT,
    "spin_pm": RepKind.SPIN_PLUS_MINUS,
    "7": RepKind.DIM7_G2,
    "26": RepKind.DIM26_F4,
    "27": RepKind.DIM27_E6,
    "56": RepKind.DIM56_E7,
}


@dataclass(frozen=True)
class RepLabel:
    kind: RepKind
    half_hyper: bool = False
    multiplicity: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        object.__setattr__(self, "kind", RepKind(self.kind))
        mult = Fraction(self.multiplicity)
        if mult < 0:
            raise UnsupportedRepresentationError("multiplicity must be non-negative")
        object.__setattr__(self, "multiplicity", mult)

    @property
    def factor(self) -> Fraction:
        return self.multiplicity / 2 if self.half_hyper else self.multiplicity

    def __str__(self) -> str:
        prefix = ""
        if self.half_hyper:
            prefix = "1/2 "
        if self.multiplicity != 1:
            prefix += f"{self.multiplicity}x"
        return prefix + self.kind.value


# A representation entry such as "lambda2+2xfund" is a direct sum of labels.
RepSum = Tuple[RepLabel, ...]
RepLike = Union[RepLabel, RepSum, str]

_COEFF_FORMS = (
    re.compile(r"^(\d+(?:/\d+)?)\s*[x*×]\s*(\S+)$"),
    re.compile(r"^(\d+(?:/\d+)?)\s+(\S+)$"),
    re.compile(r"^(\d+(?:/\d+)?)([A-Za-z_]\S*)$"),
)


def _lookup_kind(name: str) -> Optional[RepKind]:
    name = name.lower()
    if name in _KIND_ALIASES:
        return _KIND_ALIASES[name]
    try:
        return RepKind(name)
    except ValueError:
        return None


def parse_rep(text: str) -> RepSum:
    """Parse a representation expression like ``"lambda2+2xfund"`` or ``"1/2 spin"``."""
    terms = []
    for raw in text.replace("½", "1/2 ").split("+"):
        part = raw.strip()
        coeff, kind = None, _lookup_kind(part)
        if kind is None:
            for form in _COEFF_FORMS:
                m = form.match(part)
                if m:
                    coeff, kind = m.group(1), _lookup_kind(m.group(2))
                    break
        if kind is None:
            raise UnsupportedRepresentationError(f"cannot parse representation {text!r}")
        half, mult = False, Fraction(1)
        if coeff is not None:
            c = Fraction(coeff)
            if c == Fraction(1, 2):
                half = True
            elif c.denominator == 1 and c > 0:
                mult = c
            else:
                raise UnsupportedRepresentationError(f"bad coefficient {coeff!r} in {text!r}")
        terms.append(RepLabel(kind, half, mult))
    return tuple(terms)


def as_rep_sum(rep: RepLike) -> RepSum:
    if isinstance(rep, RepLabel):
        return (rep,)
    if isinstance(rep, str):
        return parse_rep(rep)
    return tuple(rep)


def format_rep(rep: RepLike) -> str:
    return "+".join(str(r) for r in as_rep_sum(rep))


# -- algebra invariants -------------------------------------------------------

def dim_algebra(a: LieAlgebraId) -> int:
    f, n = a.family, a.param
    if f is Family.SU:
        return n * n - 1
    if f is Family.SP:
        return 2 * n * n + n
    if f is Family.SO:
        return n * (n - 1) // 2
    return {Family.G2: 14, Family.F4: 52, Family.E6: 78, Family.E7: 133,
            Family.E8: 248, Family.U1: 1, Family.TRIVIAL: 0}[f]


def rank_algebra(a: LieAlgebraId) -> int:
    f, n = a.family, a.param
    if f is Family.SU:
        return n - 1
    if f is Family.SP:
        return n
    if f is Family.SO:
        return n // 2
    return {Family.G2: 2, Family.F4: 4, Family.E6: 6, Family.E7: 7,
            Family.E8: 8, Family.U1: 1, Family.TRIVIAL: 0}[f]


@dataclass(frozen=True)
class GaugeAlgebra:
    nonabelian_factors: Tuple[LieAlgebraId, ...] = ()
    abelian_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "nonabelian_factors", tuple(self.nonabelian_factors))
        if self.abelian_rank < 0:
            raise InvalidAlgebraError("abelian rank must be non-negative")

    def __str__(self) -> str:
        parts = [str(f) for f in self.nonabelian_factors if f.family is not Family.TRIVIAL]
        if self.abelian_rank:
            parts.append(f"u1^{self.abelian_rank}")
        return " + ".join(parts) or "trivial"


def algebra_totals(g: GaugeAlgebra) -> Tuple[int, int]:
    dim = sum(dim_algebra(f) for f in g.nonabelian_factors) + g.abelian_rank
    rank = sum(rank_algebra(f) for f in g.nonabelian_factors) + g.abelian_rank
    return dim, rank


# -- weight systems -------------------------------------------------------------

@dataclass(frozen=True)
class WeightSystem:
    """Weights of a representation as integer vectors; true weight = vector / denominator."""

    ambient_rank: int
    weights: Tuple[Tuple[int, ...], ...]
    denominator: int = 1

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def zero_multiplicity(self) -> int:
        return sum(1 for w in self.weights if not any(w))

    def total(self) -> Tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.weights)) if self.weights else (0,) * self.ambient_rank


def _unit(n: int, i: int, scale: int = 1) -> Tuple[int, ...]:
    return tuple(scale if j == i else 0 for j in range(n))


def _add(*vs):
    return tuple(sum(c) for c in zip(*vs))


def _neg(v):
    return tuple(-c for c in v)


def _su_weights(n: int, kind: RepKind):
    one = (1,) * n
    if kind is RepKind.FUND:
        return [_add(_unit(n, i, n), _neg(one)) for i in range(n)]
    if kind is RepKind.LAMBDA2:
        return [tuple(n * (int(k == i) + int(k == j)) - 2 for k in range(n))
                for i, j in combinations(range(n), 2)]
    if kind is RepKind.ADJOINT:
        ws = [tuple(n * (int(k == i) - int(k == j)) for k in range(n))
              for i in range(n) for j in range(n) if i != j]
        return ws + [(0,) * n] * (n - 1)
    return None


def _pm_pairs(n: int):
    out = []
    for i, j in combinations(range(n), 2):
        for si, sj in product((1, -1), repeat=2):
            out.append(tuple(si if k == i else sj if k == j else 0 for k in range(n)))
    return out


def _pm_units(n: int, scale: int = 1):
    return [_unit(n, i, s * scale) for i in range(n) for s in (1, -1)]


def _sp_weights(k: int, kind: RepKind):
    if kind is RepKind.FUND:
        return _pm_units(k)
    if kind is RepKind.LAMBDA2:
        return _pm_pairs(k) + [(0,) * k] * k
    if kind is RepKind.LAMBDA2_TRACELESS:
        if k < 2:
            return None
        return _pm_pairs(k) + [(0,) * k] * (k - 1)
    if kind is RepKind.ADJOINT:
        return _pm_pairs(k) + _pm_units(k, 2) + [(0,) * k] * k
    return None


def _so_weights(m: int, kind: RepKind):
    n, odd = m // 2, m % 2 == 1
    if kind in (RepKind.VECT, RepKind.FUND):
        return _pm_units(n) + ([(0,) * n] if odd else [])
    if kind is RepKind.ADJOINT:
        return _pm_pairs(n) + (_pm_units(n) if odd else []) + [(0,) * n] * n
    return None


def _so_spinors(m: int, kind: RepKind):
    n, odd = m // 2, m % 2 == 1
    signs = list(product((1, -1), repeat=n))
    if kind is RepKind.SPIN and odd:
        return signs
    if kind is RepKind.SPIN_PLUS_MINUS and not odd:
        return [s for s in signs if s.count(-1) % 2 == 0]
    return None


_H = Fraction(1, 2)
_E8_SIMPLE = [
    (_H, -_H, -_H, -_H, -_H, -_H, -_H, _H),
    (1, 1, 0, 0, 0, 0, 0, 0),
    (-1, 1, 0, 0, 0, 0, 0, 0),
    (0, -1, 1, 0, 0, 0, 0, 0),
    (0, 0, -1, 1, 0, 0, 0, 0),
    (0, 0, 0, -1, 1, 0, 0, 0),
    (0, 0, 0, 0, -1, 1, 0, 0),
    (0, 0, 0, 0, 0, -1, 1, 0),
]
_EXCEPTIONAL_SIMPLE = {
    Family.G2: [(1, -1, 0), (-2, 1, 1)],
    Family.F4: [(0, 1, -1, 0), (0, 0, 1, -1), (0, 0, 0, 1), (_H, -_H, -_H, -_H)],
    Family.E6: _E8_SIMPLE[:6],
    Family.E7: _E8_SIMPLE[:7],
    Family.E8: _E8_SIMPLE,
}
# (highest weight in Dynkin labels, expected dimension); the dimension is only
# a cross-check on the generated weights.
_EXCEPTIONAL_REPS = {
    (Family.G2, RepKind.DIM7_G2): ((1, 0), 7),
    (Family.F4, RepKind.DIM26_F4): ((0, 0, 0, 1), 26),
    (Family.E6, RepKind.DIM27_E6): ((1, 0, 0, 0, 0, 0), 27),
    (Family.E7, RepKind.DIM56_E7): ((0, 0, 0, 0, 0, 0, 1), 56),
}
_EXCEPTIONAL_FUND = {Family.G2: RepKind.DIM7_G2, Family.F4: RepKind.DIM26_F4,
                     Family.E6: RepKind.DIM27_E6, Family.E7: RepKind.DIM56_E7}


@lru_cache(maxsize=None)
def exceptional_root_system(family: Family) -> RootSystem:
    return RootSystem(_EXCEPTIONAL_SIMPLE[family])


def _resolve_kind(a: LieAlgebraId, kind: RepKind) -> RepKind:
    if kind is RepKind.FUND:
        if a.family is Family.SO:
            return RepKind.VECT
        if a.family in _EXCEPTIONAL_FUND:
            return _EXCEPTIONAL_FUND[a.family]
    return kind


@lru_cache(maxsize=None)
def _weight_system(a: LieAlgebraId, kind: RepKind) -> WeightSystem:
    kind = _resolve_kind(a, kind)
    f = a.family
    unsupported = UnsupportedRepresentationError(f"representation {kind.value} of {a} is not supported")
    if f is Family.SU:
        ws = _su_weights(a.param, kind)
        if ws is None:
            raise unsupported
        return WeightSystem(a.param, tuple(sorted(ws)), a.param)
    if f is Family.SP:
        ws = _sp_weights(a.param, kind)
        if ws is None:
            raise unsupported
        return WeightSystem(a.param, tuple(sorted(ws)), 1)
    if f is Family.SO:
        ws = _so_weights(a.param, kind)
        if ws is not None:
            return WeightSystem(a.param // 2, tuple(sorted(ws)), 1)
        ws = _so_spinors(a.param, kind)
        if ws is None:
            raise unsupported
        return WeightSystem(a.param // 2, tuple(sorted(ws)), 2)
    if f is Family.U1:
        if kind is not RepKind.ADJOINT:
            raise unsupported
        return WeightSystem(1, ((0,),), 1)
    if f is Family.TRIVIAL:
        raise unsupported
    rs = exceptional_root_system(f)
    if kind is RepKind.ADJOINT:
        highest, expected = rs.highest_root, dim_algebra(a)
    elif (f, kind) in _EXCEPTIONAL_REPS:
        highest, expected = _EXCEPTIONAL_REPS[(f, kind)]
    else:
        raise unsupported
    ws, denom = rs.weight_multiset(highest)
    assert len(ws) == expected, (a, kind, len(ws))
    return WeightSystem(rs.ambient_rank, tuple(ws), denom)


def weight_system(a: LieAlgebraId, rep: Union[RepLabel, RepKind, str]) -> WeightSystem:
    """Full weight multiset of the irreducible representation named by ``rep``.

    Multiplicity and half-hypermultiplet flags of a :class:`RepLabel` are
    ignored here; they only scale :func:`dim_rep` and :func:`charged_dim`.
    """
    if isinstance(rep, RepLabel):
        kind = rep.kind
    elif isinstance(rep, str):
        (label,) = parse_rep(rep)
        kind = label.kind
    else:
        kind = RepKind(rep)
    return _weight_system(a, kind)


# Pseudo-real representations that may appear as half-hypermultiplets.
HALF_HYPER_ALLOWED = frozenset({
    ("sp", None, RepKind.FUND),
    ("so", 11, RepKind.SPIN),
    ("so", 12, RepKind.SPIN_PLUS_MINUS),
    ("e7", None, RepKind.DIM56_E7),
})


def _check_half(a: LieAlgebraId, label: RepLabel) -> None:
    if not label.half_hyper:
        return
    kind = _resolve_kind(a, label.kind)
    fam = a.family.value
    if (fam, None, kind) in HALF_HYPER_ALLOWED or (fam, a.param, kind) in HALF_HYPER_ALLOWED:
        return
    raise UnsupportedRepresentationError(f"half-hypermultiplet of {kind.value} of {a} is not allowed")


def dim_rep(a: LieAlgebraId, rep: RepLike) -> Fraction:
    total = Fraction(0)
    for label in as_rep_sum(rep):
        _check_half(a, label)
        total += weight_system(a, label).dim * label.factor
    return total


def charged_dim(a: LieAlgebraId, rep: RepLike) -> Fraction:
    """Dimension minus the zero-weight multiplicity, scaled by the label factors."""
    if a.family is Family.TRIVIAL:
        return Fraction(0)
    total = Fraction(0)
    for label in as_rep_sum(rep):
        _check_half(a, label)
        ws = weight_system(a, label)
        total += (ws.dim - ws.zero_multiplicity) * label.factor
    return total


def charged_dim_product(factors: Iterable[Tuple[LieAlgebraId, RepLike]]) -> Fraction:
    """Charged dimension of an outer tensor product of single representations.

    A weight of the product is zero only when every factor weight is zero, so
    the zero-weight count multiplies across factors.
    """
    dims, zeros, scale = 1, 1, Fraction(1)
    for a, rep in factors:
        (label,) = as_rep_sum(rep)
        _check_half(a, label)
        if a.family is Family.TRIVIAL:
            continue
        ws = weight_system(a, label)
        dims *= ws.dim
        zeros *= ws.zero_multiplicity
        scale *= label.factor
    return (dims - zeros) * scale
