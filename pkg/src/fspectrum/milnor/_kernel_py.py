"""Pure-Python sparse echelon kernel (arbitrary-precision integers)."""

from __future__ import annotations

from math import gcd
from typing import Dict, List, Sequence, Tuple

Row = Tuple[Sequence[int], Sequence[int]]


def echelon_pivots(rows: Sequence[Row], ncols: int) -> List[int]:
    """Pivot columns of the row space of ``rows``.

    Each row is ``(cols, vals)`` with integer values.  The pivot of a row is
    its smallest column; rows are reduced fraction-free against earlier pivots
    so every intermediate value stays an integer.
    """
    pivots: Dict[int, Dict[int, int]] = {}
    for cols, vals in rows:
        row = {c: v for c, v in zip(cols, vals) if v}
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                g = gcd(*row.values())
                if row[lead] < 0:
                    g = -g
                if g != 1:
                    row = {c: v // g for c, v in row.items()}
                pivots[lead] = row
                break
            a, b = prow[lead], row[lead]
            g = gcd(a, b)
            a //= g
            b //= g
            if a != 1:
                row = {c: a * v for c, v in row.items()}
            for c, v in prow.items():
                nv = row.get(c, 0) - b * v
                if nv:
                    row[c] = nv
                else:
                    del row[c]
            if row:
                g = gcd(*row.values())
                if g > 1:
                    row = {c: v // g for c, v in row.items()}
    return sorted(pivots)
