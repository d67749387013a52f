"""Dimension of the local algebra of a germ, by truncated linear algebra.

For an ideal ``I`` generated by polynomials, let ``W`` be the image of ``I``
in ``C[x]/m^(D+1)``.  If every monomial of degree ``D`` lies in ``W`` then
``m^D`` is contained in ``I + m^(D+1)``, hence (Nakayama) in the local ideal,
and the local algebra has dimension ``#monomials(deg <= D) - dim W``.  When
the check fails the cap is doubled; past the maximum the answer is reported
as inconclusive rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..errors import InconclusiveError
from .germ import Exponent, PolyGerm, integer_scaled, parse_poly
from .kernel import echelon_pivots

DEFAULT_DEGREE_CAP = 64
# truncations with more monomials than this are not attempted
MAX_MONOMIALS = 250_000


def monomials_up_to(num_vars: int, degree: int) -> List[Exponent]:
    """Monomials of degree <= ``degree`` ordered by degree, then lexicographically descending."""
    out: List[Exponent] = []
    for d in range(degree + 1):
        block = []
        for combo in combinations_with_replacement(range(num_vars), d):
            exp = [0] * num_vars
            for v in combo:
                exp[v] += 1
            block.append(tuple(exp))
        block.sort(reverse=True)
        out.extend(block)
    return out


@dataclass(frozen=True)
class TruncatedQuotient:
    degree: int
    dimension: int
    certified: bool
    standard_monomials: Tuple[Exponent, ...]
    backend: str


def quotient_rows(generators: Sequence[Dict[Exponent, int]], num_vars: int,
                  degree: int) -> Tuple[List[Exponent], list]:
    """Monomial basis up to ``degree`` and the sparse rows spanning the truncated ideal.

    Each row is ``x^a * g`` cut off above ``degree``, as (sorted columns, values);
    rows are ordered by their leading column.
    """
    monos = monomials_up_to(num_vars, degree)
    index = {m: i for i, m in enumerate(monos)}
    multipliers_by_degree: Dict[int, List[Exponent]] = {}
    for m in monos:
        multipliers_by_degree.setdefault(sum(m), []).append(m)

    rows = []
    for gen in generators:
        terms = sorted(((sum(e), e, c) for e, c in gen.items() if c), key=lambda t: t[0])
        if not terms:
            continue
        low = terms[0][0]
        for d in range(degree - low + 1):
            for a in multipliers_by_degree[d]:
                entries = []
                for deg, e, c in terms:
                    if deg + d > degree:
                        break
                    entries.append((index[tuple(x + y for x, y in zip(a, e))], c))
                entries.sort()
                rows.append(([c for c, _ in entries], [v for _, v in entries]))
    rows.sort(key=lambda r: r[0][0])
    return monos, rows


def truncated_quotient(generators: Sequence[Dict[Exponent, int]], num_vars: int, degree: int,
                       backend: Optional[str] = None) -> TruncatedQuotient:
    """Quotient of ``C[x]/m^(degree+1)`` by the image of the ideal of ``generators``."""
    monos, rows = quotient_rows(generators, num_vars, degree)
    pivots, used = echelon_pivots(rows, len(monos), backend)
    pivot_set = set(pivots)
    top_block = comb(degree + num_vars - 1, num_vars - 1)
    certified = all(i in pivot_set for i in range(len(monos) - top_block, len(monos)))
    standard = tuple(m for i, m in enumerate(monos) if i not in pivot_set)
    return TruncatedQuotient(degree, len(monos) - len(pivots), certified, standard, used)


def ideal_generators(f: PolyGerm, jacobian_ideal_only: bool = False) -> List[Dict[Exponent, int]]:
    gens = [integer_scaled(f.partial(i)) for i in range(f.num_vars)]
    if not jacobian_ideal_only:
        gens.insert(0, integer_scaled(f.as_dict()))
    return [g for g in gens if g]


def monomial_count(num_vars: int, degree: int) -> int:
    return comb(degree + num_vars, num_vars)


def degree_schedule(f: PolyGerm, degree_cap: int) -> List[int]:
    """Truncation degrees to try: 2*deg(f), doubled up to the cap and the size budget."""
    d = min(2 * f.degree, degree_cap)
    out = [d]
    while d < degree_cap:
        d = min(2 * d, degree_cap)
        if monomial_count(f.num_vars, d) > MAX_MONOMIALS:
            break
        out.append(d)
    return out


def local_algebra(f: PolyGerm, *, jacobian_ideal_only: bool = False,
                  degree_cap: int = DEFAULT_DEGREE_CAP,
                  backend: Optional[str] = None) -> TruncatedQuotient:
    gens = ideal_generators(f, jacobian_ideal_only)
    last = None
    for d in degree_schedule(f, degree_cap):
        last = truncated_quotient(gens, f.num_vars, d, backend)
        if last.certified:
            return last
    raise InconclusiveError(
        f"local algebra not certified finite up to degree {last.degree} "
        f"(cap {degree_cap}); the singularity may be non-isolated, "
        f"truncated dimension {last.dimension}",
        last.degree)


def _as_germ(f: Union[PolyGerm, str]) -> PolyGerm:
    return parse_poly(f) if isinstance(f, str) else f


def milnor_number(f: Union[PolyGerm, str], *, jacobian_ideal_only: bool = False,
                  degree_cap: int = DEFAULT_DEGREE_CAP, backend: Optional[str] = None) -> int:
    """Dimension of the local algebra ``C{x}/<f, df/dx_1, ..., df/dx_n>``.

    With ``jacobian_ideal_only=True`` the germ itself is left out of the
    ideal, which gives the classical Milnor number; by default it is included.
    Both agree for quasi-homogeneous germs.
    """
    return local_algebra(_as_germ(f), jacobian_ideal_only=jacobian_ideal_only,
                         degree_cap=degree_cap, backend=backend).dimension


@dataclass(frozen=True)
class MilnorReport:
    value: int
    jacobian_only_value: int
    degree: int
    backend: str

    @property
    def differs(self) -> bool:
        return self.value != self.jacobian_only_value


def milnor_report(f: Union[PolyGerm, str], *, degree_cap: int = DEFAULT_DEGREE_CAP,
                  backend: Optional[str] = None) -> MilnorReport:
    """Both local-algebra dimensions (with and without ``f`` in the ideal)."""
    f = _as_germ(f)
    full = local_algebra(f, degree_cap=degree_cap, backend=backend)
    jac = local_algebra(f, jacobian_ideal_only=True, degree_cap=degree_cap, backend=backend)
    return MilnorReport(full.dimension, jac.dimension, max(full.degree, jac.degree), full.backend)
