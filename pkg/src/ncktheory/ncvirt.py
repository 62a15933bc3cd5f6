"""The truncated NC virtual structure sheaf class from obstruction-theory data.

Given the super character ``e`` of a two-term complex (even part in degree
0, odd part in degree -1) and the commutative virtual class ``ovir``, the
d-th class is ``ovir * [S L^+(e)^{<=d}]`` where ``L^j(e) = Lie_{j+1}(e)``
carries upper degree j and the truncation keeps total upper degree <= d
across all symmetric-product factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charring import (Character, RationalCharacter, SuperChar, parse_superchar_or_graded,
                       rational_mul, sym_power)
from .errors import SchemaError
from .freelie import lie_char_table


@dataclass(frozen=True)
class ObstructionTheory:
    """Character data of a perfect obstruction theory plus its virtual class."""

    e: SuperChar
    ovir: RationalCharacter

    def __post_init__(self):
        if self.e.nvars != self.ovir.nvars:
            raise ValueError("e and ovir live in different character rings")

    @property
    def virtual_rank(self) -> int:
        return self.e.even.rank() - self.e.odd.rank()

    def to_json(self) -> dict:
        return {"e": self.e.to_json(), "ovir": self.ovir.to_json()}

    @classmethod
    def from_json(cls, data) -> "ObstructionTheory":
        if not isinstance(data, dict) or "e" not in data or "ovir" not in data:
            raise SchemaError("expected {'e': SuperChar, 'ovir': RationalCharacter}", "$")
        e = parse_superchar_or_graded(data["e"], "$.e")
        ovir = RationalCharacter.from_json(data["ovir"], "$.ovir")
        if e.nvars != ovir.nvars:
            raise SchemaError("e and ovir disagree on nvars", "$")
        return cls(e, ovir)


def s_l_plus_series(e: SuperChar, d: int) -> list[SuperChar]:
    """u-degree coefficients 0..d of prod_{j=1..d} sigma_{u^j}(Lie_{j+1}(e))."""
    if d < 0:
        raise ValueError("d must be >= 0")
    one = SuperChar.one(e.nvars)
    zero = SuperChar.zero(e.nvars)
    series = [one] + [zero] * d
    if d == 0:
        return series
    table = lie_char_table(e, d + 1)
    for j in range(1, d + 1):
        piece = table[j + 1]
        if not piece:
            continue
        sig = [sym_power(k, piece) for k in range(d // j + 1)]
        new = [zero] * (d + 1)
        for i, c in enumerate(series):
            if not c:
                continue
            for k, s in enumerate(sig):
                pos = i + k * j
                if pos > d:
                    break
                if s:
                    new[pos] = new[pos] + c * s
        series = new
    return series


def s_l_plus_truncated(e: SuperChar, d: int) -> Character:
    """K-class of S L^+(e) truncated to upper degree <= d."""
    total = Character.zero(e.nvars)
    for coeff in s_l_plus_series(e, d):
        total = total + coeff.k_class()
    return total


def ncvir_class(ot: ObstructionTheory, d: int) -> RationalCharacter:
    """The d-th NC virtual class ovir * [S L^+(e)^{<=d}]."""
    return rational_mul(ot.ovir, s_l_plus_truncated(ot.e, d))
