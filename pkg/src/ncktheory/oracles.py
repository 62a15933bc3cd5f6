"""Brute-force oracles kept independent of the main code paths.

Nothing here is used by the library computations; these exist so tests and
the self-test can cross-check them.

* LR coefficients by counting Littlewood-Richardson tableaux.
* Free Lie dimensions by the Witt necklace formula.
* Schur functors of super vector spaces by ranks of isotypic projectors
  ``sum_sigma chi_lambda(sigma) sigma`` acting with Koszul signs on the
  tensor power, one weight space at a time. Symmetric-group characters come
  from the Frobenius formula.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Sequence

from .charring import Character, SuperChar
from .linalg import RowEchelon


# Littlewood-Richardson tableaux ---------------------------------------------------


def lr_tableau_count(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Number of LR tableaux of skew shape nu/lam and content mu."""
    lam, mu, nu = list(lam), list(mu), list(nu)
    if sum(lam) + sum(mu) != sum(nu) or len(lam) > len(nu):
        return 0
    lam = lam + [0] * (len(nu) - len(lam))
    if any(l > n for l, n in zip(lam, nu)):
        return 0
    rows = [(lam[r], nu[r]) for r in range(len(nu))]
    count = 0
    filling: list[list[int]] = []

    def lattice_ok(words: list[list[int]]) -> bool:
        # reading word: rows top to bottom, each right to left
        seen = [0] * (len(mu) + 1)
        for row in words:
            for v in reversed(row):
                seen[v] += 1
                if v > 1 and seen[v] > seen[v - 1]:
                    return False
        return True

    def rec(r: int, used: list[int]):
        nonlocal count
        if r == len(rows):
            if used == mu:
                count += 1
            return
        start, end = rows[r]
        length = end - start

        def fill_row(pos: int, row: list[int]):
            if pos == length:
                filling.append(row)
                if lattice_ok(filling):
                    new_used = used[:]
                    for v in row:
                        new_used[v - 1] += 1
                    if all(a <= b for a, b in zip(new_used, mu)):
                        rec(r + 1, new_used)
                filling.pop()
                return
            col = start + pos
            lo = row[-1] if row else 1
            # column strictness against the row above
            if r > 0 and col < rows[r - 1][1] and col >= rows[r - 1][0]:
                above = filling[r - 1][col - rows[r - 1][0]]
                lo = max(lo, above + 1)
            for v in range(lo, len(mu) + 1):
                fill_row(pos + 1, row + [v])

        fill_row(0, [])

    if not mu:
        return 1 if lam == nu else 0
    rec(0, [0] * len(mu))
    return count


# Witt formula -------------------------------------------------------------------


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def witt_dimension(n: int, k: int) -> int:
    """Dimension of the degree-n part of the free Lie algebra on k even generators."""
    total = sum(mobius(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


# symmetric group characters ----------------------------------------------------


def _cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            out.append(length)
    return tuple(sorted(out, reverse=True))


def _perm_sign(perm: Sequence[int]) -> int:
    return 1 if sum(c - 1 for c in _cycle_type(perm)) % 2 == 0 else -1


@lru_cache(maxsize=None)
def sn_character(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """chi_lam at cycle type rho: coefficient of x^{lam+delta} in a_delta * p_rho."""
    n = len(lam)
    if n == 0:
        return 1
    delta = tuple(range(n - 1, -1, -1))
    poly: dict[tuple[int, ...], int] = {}
    for perm in permutations(range(n)):
        poly[tuple(delta[perm[i]] for i in range(n))] = _perm_sign(perm)
    for r in rho:
        new: dict[tuple[int, ...], int] = {}
        for e, c in poly.items():
            for i in range(n):
                f = list(e)
                f[i] += r
                key = tuple(f)
                new[key] = new.get(key, 0) + c
        poly = {e: c for e, c in new.items() if c}
    return poly.get(tuple(l + d for l, d in zip(lam, delta)), 0)


# super projectors ----------------------------------------------------------------


def _act(perm: Sequence[int], word: tuple[int, ...], parity: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """sigma . (w_1 (x) ... (x) w_k): factor i moves to slot perm[i], with the Koszul sign."""
    k = len(word)
    out = [0] * k
    for i, w in enumerate(word):
        out[perm[i]] = w
    sign = 1
    for i in range(k):
        if not parity[word[i]]:
            continue
        for j in range(i + 1, k):
            if parity[word[j]] and perm[i] > perm[j]:
                sign = -sign
    return sign, tuple(out)


def _content_words(content: tuple[int, ...]) -> list[tuple[int, ...]]:
    return sorted(set(permutations(content)))


def _contents(nbasis: int, k: int, start: int = 0):
    if k == 0:
        yield ()
        return
    for i in range(start, nbasis):
        for rest in _contents(nbasis, k - 1, i):
            yield (i,) + rest


def schur_projector_superchar(lam: Sequence[int], basis: Sequence[tuple[Sequence[int], int]],
                              nvars: int, use_trace: bool = False) -> SuperChar:
    """Super character of S_lam(V) from projector ranks on V^{(x) k}.

    ``basis`` lists (torus exponent, parity) for a homogeneous basis of V.
    With ``use_trace`` the multiplicity is read from the projector trace
    instead of its rank.
    """
    lam = tuple(lam)
    k = sum(lam)
    parity = [p % 2 for _, p in basis]
    perms = list(permutations(range(k)))
    chi = {perm: sn_character(lam, _cycle_type(perm)) for perm in perms}
    dim_v = sn_character(lam, (1,) * k) if k else 1
    even: dict[tuple[int, ...], int] = {}
    odd: dict[tuple[int, ...], int] = {}
    for content in _contents(len(basis), k):
        words = _content_words(content)
        index = {w: i for i, w in enumerate(words)}
        if use_trace:
            tr = 0
            for perm, c in chi.items():
                for w in words:
                    s, u = _act(perm, w, parity)
                    if u == w:
                        tr += c * s
            mult = Fraction(tr * dim_v, factorial(k)) / dim_v
            if mult.denominator != 1:
                raise ArithmeticError("projector trace is not an integer multiple")
            mult = int(mult)
        else:
            ech = RowEchelon()
            for w in words:
                col: dict[int, int] = {}
                for perm, c in chi.items():
                    if not c:
                        continue
                    s, u = _act(perm, w, parity)
                    col[index[u]] = col.get(index[u], 0) + s * c
                ech.add({i: v for i, v in col.items() if v})
            if ech.rank % dim_v:
                raise ArithmeticError("projector rank is not a multiple of dim V_lambda")
            mult = ech.rank // dim_v
        if not mult:
            continue
        exp = tuple(sum(basis[i][0][t] for i in content) for t in range(nvars))
        par = sum(parity[i] for i in content) % 2
        bucket = odd if par else even
        bucket[exp] = bucket.get(exp, 0) + mult
    return SuperChar(Character(nvars, even), Character(nvars, odd))


def superchar_from_basis(basis: Sequence[tuple[Sequence[int], int]], nvars: int) -> SuperChar:
    even: dict[tuple[int, ...], int] = {}
    odd: dict[tuple[int, ...], int] = {}
    for exp, p in basis:
        bucket = odd if p % 2 else even
        e = tuple(exp)
        bucket[e] = bucket.get(e, 0) + 1
    return SuperChar(Character(nvars, even), Character(nvars, odd))


def sym_projector(k: int, basis, nvars: int) -> SuperChar:
    return schur_projector_superchar((k,) if k else (), basis, nvars)


def ext_projector(k: int, basis, nvars: int) -> SuperChar:
    return schur_projector_superchar((1,) * k, basis, nvars)
