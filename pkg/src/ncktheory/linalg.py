"""Exact sparse row reduction over the rationals.

Vectors are dicts mapping integer column indices to ``int`` or
``Fraction`` coefficients. Rows are stored as primitive integer vectors,
so no rational arithmetic happens inside the elimination loop.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping


def _primitive(vec: dict[int, int]) -> dict[int, int]:
    g = 0
    for c in vec.values():
        g = gcd(g, c)
        if g == 1:
            return vec
    if g > 1:
        return {k: c // g for k, c in vec.items()}
    return vec


def to_integer_vector(vec: Mapping[int, int | Fraction]) -> dict[int, int]:
    """Clear denominators and drop zeros; the result spans the same line."""
    den = 1
    for c in vec.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    out = {}
    for k, c in vec.items():
        if c:
            out[k] = int(c * den)
    return out


class RowEchelon:
    """Incrementally maintained echelon basis of a subspace of Q^N.

    The pivot of each stored row is its largest column index.
    """

    __slots__ = ("rows",)

    def __init__(self) -> None:
        self.rows: dict[int, dict[int, int]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping[int, int | Fraction]) -> dict[int, int]:
        """Return a primitive integer multiple of ``vec`` reduced modulo the span."""
        v = to_integer_vector(vec)
        rows = self.rows
        while v:
            k = max(v)
            row = rows.get(k)
            if row is None:
                return v
            a = row[k]
            b = v[k]
            g = gcd(a, b)
            a //= g
            b //= g
            new = {key: a * c for key, c in v.items()}
            for key, c in row.items():
                val = new.get(key, 0) - b * c
                if val:
                    new[key] = val
                else:
                    new.pop(key, None)
            v = _primitive(new)
        return v

    def add(self, vec: Mapping[int, int | Fraction]) -> bool:
        """Insert ``vec``; return True when it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        k = max(v)
        if v[k] < 0:
            v = {key: -c for key, c in v.items()}
        self.rows[k] = v
        return True

    def contains(self, vec: Mapping[int, int | Fraction]) -> bool:
        return not self.reduce(vec)


def rank(vectors: Iterable[Mapping[int, int | Fraction]], limit: int | None = None) -> int:
    """Rank of a family of sparse vectors; stops early once ``limit`` is reached."""
    ech = RowEchelon()
    for v in vectors:
        ech.add(v)
        if limit is not None and ech.rank >= limit:
            break
    return ech.rank


def matrix_rank(rows: Iterable[Iterable[int | Fraction]]) -> int:
    """Rank of a dense matrix given as an iterable of rows."""
    return rank({j: c for j, c in enumerate(row) if c} for row in rows)
