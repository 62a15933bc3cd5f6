"""Characters of the free Lie superalgebra on a super vector space.

``Lie_n(W)`` is the tensor-degree-n piece of the Lie sub-superalgebra of
T(W) generated by W. Its characters follow from the PBW factorisation

    sum_n g^n t^n = prod_{m >= 1} sigma_{t^m}(Lie_m),

solved one order at a time. The bracket-span oracle computes the same
dimensions by exact linear algebra in the tensor power.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .charring import SuperChar, sym_power
from .errors import BudgetExceededError
from .linalg import RowEchelon

DEFAULT_WORD_BUDGET = 10**5


@dataclass(frozen=True)
class LieCharTable:
    g: SuperChar
    max_n: int
    table: dict[int, SuperChar]

    def __getitem__(self, n: int) -> SuperChar:
        return self.table[n]


def lie_char_table(g: SuperChar, max_n: int) -> LieCharTable:
    """Characters of Lie_1..Lie_maxn by PBW recursion."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    one = SuperChar.one(g.nvars)
    zero = SuperChar.zero(g.nvars)
    powers = [one]
    for _ in range(max_n):
        powers.append(powers[-1] * g)
    # prod[k] = t^k coefficient of prod_{m < n} sigma_{t^m}(Lie_m)
    prod = [one] + [zero] * max_n
    table: dict[int, SuperChar] = {}
    for n in range(1, max_n + 1):
        lie_n = powers[n] - prod[n]
        table[n] = lie_n
        if not lie_n:
            continue
        kmax = max_n // n
        sig = [sym_power(k, lie_n) for k in range(kmax + 1)]
        new = [zero] * (max_n + 1)
        for i, c in enumerate(prod):
            if not c:
                continue
            for k in range(kmax + 1):
                j = i + k * n
                if j > max_n:
                    break
                if sig[k]:
                    new[j] = new[j] + c * sig[k]
        prod = new
    return LieCharTable(g, max_n, table)


def lie_char(n: int, g: SuperChar) -> SuperChar:
    """Super character of Lie_n(W) for W with character ``g``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return lie_char_table(g, n)[n]


def pbw_reconstruct(table: LieCharTable) -> list[SuperChar]:
    """Coefficients t^0..t^maxn of prod_m sigma_{t^m}(Lie_m)."""
    g = table.g
    max_n = table.max_n
    zero = SuperChar.zero(g.nvars)
    series = [SuperChar.one(g.nvars)] + [zero] * max_n
    for m in range(1, max_n + 1):
        sig = [sym_power(k, table[m]) for k in range(max_n // m + 1)]
        new = [zero] * (max_n + 1)
        for i, c in enumerate(series):
            for k, s in enumerate(sig):
                j = i + k * m
                if j > max_n:
                    break
                new[j] = new[j] + c * s
        series = new
    return series


# bracket-span oracle ----------------------------------------------------------


def _left_normed(letters: tuple[int, ...], parity: list[int]) -> dict[tuple[int, ...], int]:
    """Expand [x1,[x2,...,[x_{n-1},x_n]...]] in the tensor algebra."""
    inner = {(letters[-1],): 1}
    inner_par = parity[letters[-1]]
    for x in reversed(letters[:-1]):
        px = parity[x]
        sign = -1 if (px * inner_par) % 2 == 0 else 1
        out: dict[tuple[int, ...], int] = {}
        for w, c in inner.items():
            left = (x,) + w
            out[left] = out.get(left, 0) + c
            right = w + (x,)
            out[right] = out.get(right, 0) + sign * c
        inner = {w: c for w, c in out.items() if c}
        inner_par = (inner_par + px) % 2
        if not inner:
            break
    return inner


def lie_bracket_span_oracle(n: int, even_dim: int, odd_dim: int,
                            budget: int = DEFAULT_WORD_BUDGET) -> int:
    """Dimension of the span of left-normed super brackets of n generators."""
    if n < 1:
        raise ValueError("n must be >= 1")
    dim = even_dim + odd_dim
    if dim ** n > budget:
        raise BudgetExceededError(f"{dim}^{n} basis words exceed budget {budget}")
    parity = [0] * even_dim + [1] * odd_dim
    # brackets are content-homogeneous, so rank splits over content classes
    by_content: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for letters in product(range(dim), repeat=n):
        key = tuple(sorted(letters))
        by_content.setdefault(key, []).append(letters)
    total = 0
    for content, seqs in by_content.items():
        index: dict[tuple[int, ...], int] = {}
        ech = RowEchelon()
        for letters in seqs:
            vec = _left_normed(letters, parity)
            if not vec:
                continue
            ech.add({index.setdefault(w, len(index)): c for w, c in vec.items()})
        total += ech.rank
    return total
