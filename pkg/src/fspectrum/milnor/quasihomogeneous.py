"""Product-formula oracle for quasi-homogeneous germs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

import sympy

from ..errors import OracleInapplicableError
from .germ import PolyGerm, parse_poly


@dataclass(frozen=True)
class WeightVector:
    """Positive rational weights giving every monomial weighted degree 1."""

    weights: Tuple[Fraction, ...]

    def __post_init__(self):
        ws = tuple(Fraction(w) for w in self.weights)
        if not ws or any(w <= 0 for w in ws):
            raise OracleInapplicableError("weights must be positive rationals")
        object.__setattr__(self, "weights", ws)

    def weighted_degree(self, exponent: Sequence[int]) -> Fraction:
        return sum((w * e for w, e in zip(self.weights, exponent)), Fraction(0))

    def is_quasihomogeneous(self, f: PolyGerm) -> bool:
        return len(self.weights) == f.num_vars and all(
            self.weighted_degree(e) == 1 for _, e in f.terms)


def find_weights(f: Union[PolyGerm, str]) -> WeightVector:
    """The unique weight vector for which ``f`` is quasi-homogeneous of degree 1.

    Raises :class:`OracleInapplicableError` if no such vector exists or it is
    not determined by the monomials of ``f``.
    """
    if isinstance(f, str):
        f = parse_poly(f)
    symbols = sympy.symbols(f"w0:{f.num_vars}")
    equations = [sum(e * s for e, s in zip(exp, symbols)) - 1 for _, exp in f.terms]
    solutions = sympy.linsolve(equations, symbols)
    if not solutions:
        raise OracleInapplicableError(f"{f} is not quasi-homogeneous")
    (solution,) = solutions
    if any(not value.is_Rational for value in solution):
        raise OracleInapplicableError(f"weights of {f} are not determined by its monomials")
    weights = tuple(Fraction(int(v.p), int(v.q)) for v in solution)
    if any(w <= 0 for w in weights):
        raise OracleInapplicableError(f"{f} has a non-positive weight")
    return WeightVector(weights)


def milnor_quasihomogeneous(f: Union[PolyGerm, str], w: WeightVector | None = None) -> int:
    """Milnor number of a quasi-homogeneous isolated singularity: prod(1/w_i - 1)."""
    if isinstance(f, str):
        f = parse_poly(f)
    if w is None:
        w = find_weights(f)
    if not w.is_quasihomogeneous(f):
        raise OracleInapplicableError(f"{f} is not quasi-homogeneous for weights {w.weights}")
    if any(x > Fraction(1, 2) for x in w.weights):
        # a weight above 1/2 means a linear term or a non-isolated point
        raise OracleInapplicableError("weights above 1/2 do not describe an isolated singularity")
    product = Fraction(1)
    for x in w.weights:
        product *= 1 / x - 1
    if product.denominator != 1:
        raise OracleInapplicableError(f"product formula gives non-integer {product}")
    return int(product)
