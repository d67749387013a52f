"""Polynomial germs at the origin and the text grammar used to enter them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Optional, Tuple

from ..errors import InvalidGermError, NotASingularityError, PolySyntaxError

NAMED_VARS = ("x", "y", "z", "w", "v", "u")
MAX_VARS = 6

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class PolyGerm:
    """A polynomial with a singular point at the origin.

    ``terms`` is sorted by exponent vector; coefficients are exact rationals.
    """

    num_vars: int
    terms: Tuple[Tuple[Fraction, Exponent], ...]

    def __post_init__(self):
        if not 1 <= self.num_vars <= MAX_VARS:
            raise InvalidGermError(f"between 1 and {MAX_VARS} variables are supported")
        seen = set()
        for coeff, exp in self.terms:
            if len(exp) != self.num_vars or any(e < 0 for e in exp):
                raise InvalidGermError(f"bad exponent vector {exp}")
            if exp in seen:
                raise InvalidGermError(f"duplicate monomial {exp}")
            if coeff == 0:
                raise InvalidGermError("zero coefficient in canonical germ")
            seen.add(exp)
        if not self.terms:
            raise InvalidGermError("the zero polynomial does not define a hypersurface")
        low = [exp for _, exp in self.terms if sum(exp) <= 1]
        if low:
            raise NotASingularityError(
                "constant or linear term present: the origin is not a singular point"
                if any(sum(e) == 0 for e in low) else
                "linear part is nonzero: the origin is a smooth point")

    @classmethod
    def from_terms(cls, num_vars: int, terms: Iterable[Tuple[object, Iterable[int]]]) -> "PolyGerm":
        merged: Dict[Exponent, Fraction] = {}
        for coeff, exp in terms:
            exp = tuple(int(e) for e in exp)
            merged[exp] = merged.get(exp, Fraction(0)) + Fraction(coeff)
        canon = tuple(sorted(((c, e) for e, c in merged.items() if c != 0), key=lambda t: t[1]))
        return cls(num_vars, canon)

    @property
    def degree(self) -> int:
        return max(sum(e) for _, e in self.terms)

    @property
    def order(self) -> int:
        return min(sum(e) for _, e in self.terms)

    def as_dict(self) -> Dict[Exponent, Fraction]:
        return {e: c for c, e in self.terms}

    def partial(self, i: int) -> Dict[Exponent, Fraction]:
        out = {}
        for c, e in self.terms:
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return out

    def __str__(self) -> str:
        return format_poly(self)


def integer_scaled(poly: Dict[Exponent, Fraction]) -> Dict[Exponent, int]:
    """Clear denominators; a nonzero scalar does not change the generated ideal."""
    if not poly:
        return {}
    scale = lcm(*(c.denominator for c in poly.values()))
    return {e: int(c * scale) for e, c in poly.items()}


def var_names(num_vars: int, indexed: bool = False) -> List[str]:
    if indexed:
        return [f"x{i + 1}" for i in range(num_vars)]
    return list(NAMED_VARS[:num_vars])


def format_poly(f: PolyGerm, indexed: bool = False) -> str:
    names = var_names(f.num_vars, indexed)
    ordered = sorted(f.terms, key=lambda t: (-sum(t[1]), [-x for x in t[1]]))
    out = []
    for i, (c, exp) in enumerate(ordered):
        factors = []
        for name, e in zip(names, exp):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        mono = "*".join(factors)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = mono if mag == 1 else f"{mag}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


class _Parser:
    """Recursive-descent parser for the germ grammar.

    poly   := [sign] term { ("+" | "-") term }
    term   := coeff "*" factor { "*" factor } | factor { "*" factor } | coeff
    coeff  := INT [ "/" INT ]
    factor := VAR [ "^" INT ]
    """

    MINUS = ("-", "−")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.style: Optional[str] = None

    def error(self, message: str, pos: Optional[int] = None):
        raise PolySyntaxError(message, self.pos if pos is None else pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def variable(self) -> int:
        self.skip()
        start = self.pos
        ch = self.text[self.pos] if self.pos < len(self.text) else ""
        if ch not in NAMED_VARS:
            self.error("expected a variable")
        self.pos += 1
        nxt = self.text[self.pos] if self.pos < len(self.text) else ""
        if ch == "x" and nxt.isdigit():
            idx = int(nxt)
            self.pos += 1
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.error("variable index must be 1..6", start)
            if not 1 <= idx <= MAX_VARS:
                self.error("variable index must be 1..6", start)
            style, index = "indexed", idx - 1
        else:
            style, index = "named", NAMED_VARS.index(ch)
        if self.style is None:
            self.style = style
        elif self.style != style:
            self.error("named and indexed variables cannot be mixed", start)
        return index

    def factor(self, exp: List[int]):
        index = self.variable()
        power = 1
        if self.peek() == "^":
            self.pos += 1
            at = self.pos
            power = self.integer()
            if power < 1:
                self.error("exponent must be a positive integer", at)
        while len(exp) <= index:
            exp.append(0)
        exp[index] += power

    def term(self) -> Tuple[Fraction, List[int]]:
        coeff = Fraction(1)
        exp: List[int] = []
        ch = self.peek()
        if ch.isdigit():
            num = self.integer()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                at = self.pos
                den = self.integer()
                if den == 0:
                    self.error("zero denominator", at)
            coeff = Fraction(num, den)
            if self.peek() != "*":
                return coeff, exp
            self.pos += 1
        elif ch == "":
            self.error("unexpected end of input")
        self.factor(exp)
        while self.peek() == "*":
            self.pos += 1
            self.factor(exp)
        return coeff, exp

    def parse(self):
        terms = []
        sign = 1
        if self.peek() in self.MINUS:
            sign = -1
            self.pos += 1
        elif self.peek() == "+":
            self.pos += 1
        while True:
            coeff, exp = self.term()
            terms.append((sign * coeff, exp))
            ch = self.peek()
            if ch == "":
                break
            if ch == "+":
                sign = 1
            elif ch in self.MINUS:
                sign = -1
            else:
                self.error(f"unexpected character {ch!r}")
            self.pos += 1
        return terms


def parse_poly(text: str, num_vars: Optional[int] = None) -> PolyGerm:
    """Parse a germ.  The number of variables defaults to the highest variable used.

    >>> parse_poly("x^2 + y^2 + z^4").num_vars
    3
    """
    raw = _Parser(text).parse()
    needed = max((len(e) for _, e in raw), default=0)
    n = needed if num_vars is None else num_vars
    if n < needed:
        raise InvalidGermError(f"polynomial uses {needed} variables but num_vars={num_vars}")
    if n == 0:
        # only constants: report as a non-singular point rather than a 0-variable germ
        raise NotASingularityError("constant polynomial: the origin is not a singular point")
    return PolyGerm.from_terms(n, ((c, e + [0] * (n - len(e))) for c, e in raw))
