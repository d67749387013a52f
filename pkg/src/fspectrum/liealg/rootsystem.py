"""Finite root systems given by simple roots in an orthogonal realization.

Weights are handled internally as integer Dynkin labels (coordinates with
respect to the fundamental weights).  Irreducible weight systems are
generated level by level from the highest weight and their multiplicities
come from Freudenthal's recursion, so nothing about a particular
representation is tabulated here.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Dict, List, Sequence, Tuple

Vector = Tuple[int, ...]


def _dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def _inverse(matrix: List[List[Fraction]]) -> List[List[Fraction]]:
    """Gauss-Jordan inverse over the rationals (matrices here are at most 8x8)."""
    n = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class RootSystem:
    """Root system of a semisimple Lie algebra.

    ``simple_roots`` are vectors in an ambient Euclidean space, with the
    standard inner product.  Exact rationals are accepted.
    """

    def __init__(self, simple_roots: Sequence[Sequence]):
        self.simple_roots = [tuple(Fraction(c) for c in r) for r in simple_roots]
        self.rank = len(self.simple_roots)
        self.ambient_rank = len(self.simple_roots[0])
        gram = [[_dot(a, b) for b in self.simple_roots] for a in self.simple_roots]
        cartan = []
        for i in range(self.rank):
            row = []
            for j in range(self.rank):
                entry = 2 * gram[i][j] / gram[j][j]
                if entry.denominator != 1:
                    raise ValueError("simple roots do not form a crystallographic system")
                row.append(int(entry))
            cartan.append(row)
        # cartan[i][j] = <alpha_i, alpha_j^vee>: row i is the Dynkin label of alpha_i.
        self.cartan = cartan
        inv = _inverse([[Fraction(x) for x in row] for row in cartan])
        self.fundamental_weights = [
            tuple(sum(inv[i][k] * self.simple_roots[k][c] for k in range(self.rank))
                  for c in range(self.ambient_rank))
            for i in range(self.rank)
        ]
        fw_gram = [[_dot(a, b) for b in self.fundamental_weights] for a in self.fundamental_weights]
        self._scale = lcm(*(x.denominator for row in fw_gram for x in row))
        self._gram = [[int(x * self._scale) for x in row] for row in fw_gram]

    # -- inner products ----------------------------------------------------

    def scaled_inner(self, u: Vector, v: Vector) -> int:
        """Inner product of two Dynkin-label vectors times a fixed positive scale."""
        return sum(u[i] * self._gram[i][j] * v[j]
                   for i in range(self.rank) if u[i]
                   for j in range(self.rank) if v[j])

    def simple_root(self, i: int) -> Vector:
        return tuple(self.cartan[i])

    @cached_property
    def positive_roots(self) -> List[Vector]:
        """Positive roots as Dynkin labels, ordered by height."""
        simple = [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]
        found = set(simple)
        layer = list(simple)
        ordered = list(simple)
        while layer:
            nxt = []
            for beta in layer:
                labels = self._root_labels(beta)
                for j in range(self.rank):
                    p = 0
                    probe = list(beta)
                    while True:
                        probe[j] -= 1
                        if tuple(probe) in found:
                            p += 1
                        else:
                            break
                    if p - labels[j] > 0:
                        up = list(beta)
                        up[j] += 1
                        up = tuple(up)
                        if up not in found:
                            found.add(up)
                            nxt.append(up)
            nxt.sort()
            ordered.extend(nxt)
            layer = nxt
        return [self._root_labels(c) for c in ordered]

    def _root_labels(self, coeffs: Sequence[int]) -> Vector:
        return tuple(sum(coeffs[k] * self.cartan[k][j] for k in range(self.rank))
                     for j in range(self.rank))

    @cached_property
    def rho(self) -> Vector:
        return (1,) * self.rank

    @cached_property
    def highest_root(self) -> Vector:
        return max(self.positive_roots, key=lambda a: self.scaled_inner(a, self.rho))

    def dimension(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    # -- representations ---------------------------------------------------

    def weyl_dimension(self, highest: Vector) -> int:
        """Weyl dimension formula; independent of the multiplicity recursion."""
        shifted = tuple(a + b for a, b in zip(highest, self.rho))
        num = Fraction(1)
        for alpha in self.positive_roots:
            num *= Fraction(self.scaled_inner(shifted, alpha), self.scaled_inner(self.rho, alpha))
        assert num.denominator == 1
        return int(num)

    def weight_multiplicities(self, highest: Vector) -> Dict[Vector, int]:
        """All weights of the irreducible module with the given highest weight."""
        highest = tuple(highest)
        if len(highest) != self.rank or any(x < 0 for x in highest):
            raise ValueError(f"not a dominant weight: {highest}")
        simple = [self.simple_root(i) for i in range(self.rank)]
        known = {highest}
        levels = [[highest]]
        while levels[-1]:
            nxt = set()
            for mu in levels[-1]:
                for i, alpha in enumerate(simple):
                    q = 0
                    probe = tuple(a + b for a, b in zip(mu, alpha))
                    while probe in known:
                        q += 1
                        probe = tuple(a + b for a, b in zip(probe, alpha))
                    if q + mu[i] > 0:
                        nxt.add(tuple(a - b for a, b in zip(mu, alpha)))
            known |= nxt
            levels.append(sorted(nxt))

        pos = self.positive_roots
        root_norms = [self.scaled_inner(a, a) for a in pos]
        shifted_top = tuple(a + b for a, b in zip(highest, self.rho))
        top_norm = self.scaled_inner(shifted_top, shifted_top)
        mult: Dict[Vector, int] = {highest: 1}
        for level in levels[1:]:
            for mu in level:
                total = 0
                for alpha, norm in zip(pos, root_norms):
                    base = self.scaled_inner(mu, alpha)
                    k = 1
                    nu = tuple(a + b for a, b in zip(mu, alpha))
                    while nu in mult:
                        total += (base + k * norm) * mult[nu]
                        k += 1
                        nu = tuple(a + b for a, b in zip(nu, alpha))
                shifted = tuple(a + b for a, b in zip(mu, self.rho))
                denom = top_norm - self.scaled_inner(shifted, shifted)
                value, rem = divmod(2 * total, denom)
                if rem:
                    raise ArithmeticError(f"non-integral multiplicity at {mu}")
                mult[mu] = value
        return mult

    def to_ambient(self, weight: Vector) -> Tuple[Fraction, ...]:
        return tuple(sum(weight[i] * self.fundamental_weights[i][c] for i in range(self.rank))
                     for c in range(self.ambient_rank))

    def weight_multiset(self, highest: Vector) -> Tuple[List[Tuple[int, ...]], int]:
        """Weights in ambient coordinates as integer vectors over a common denominator."""
        mult = self.weight_multiplicities(highest)
        points = []
        for mu, m in mult.items():
            points.extend([self.to_ambient(mu)] * m)
        denom = lcm(1, *(c.denominator for p in points for c in p))
        return sorted(tuple(int(c * denom) for c in p) for p in points), denom
