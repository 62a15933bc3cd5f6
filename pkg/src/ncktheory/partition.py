"""Integer partitions and Littlewood-Richardson coefficients."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``. The empty partition is ``Partition()``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        if not all(isinstance(p, int) and not isinstance(p, bool) for p in parts):
            raise TypeError(f"parts must be integers: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def to_json(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p > i) for i in range(lam[0]))


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in lexicographically descending order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(p) for p in _partitions(n, n if max_part is None else max_part)]


def _partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def contains(outer: Partition, inner: Partition) -> bool:
    """True when the diagram of ``inner`` fits inside ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


# Polynomials in this module are dicts {exponent tuple: int}.


def _poly_mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


@lru_cache(maxsize=None)
def _schur_poly(lam: Partition, nvars: int) -> tuple:
    """Schur polynomial via the branching rule s_lam(x1..xn) = sum s_mu(x1..x_{n-1}) x_n^{|lam|-|mu|}."""
    if len(lam) > nvars:
        return ()
    if nvars == 0:
        return (((), 1),) if not lam else ()
    out: dict = {}
    for mu in _interlacing(lam):
        k = lam.weight - mu.weight
        for e, c in _schur_poly(mu, nvars - 1):
            key = e + (k,)
            out[key] = out.get(key, 0) + c
    return tuple(sorted(out.items()))


def _interlacing(lam: Partition) -> Iterator[Partition]:
    """Partitions mu with lam_1 >= mu_1 >= lam_2 >= mu_2 >= ..."""
    parts = list(lam)

    def rec(i: int, prefix: list[int]) -> Iterator[Partition]:
        if i == len(parts):
            yield Partition(prefix)
            return
        lo = parts[i + 1] if i + 1 < len(parts) else 0
        for m in range(parts[i], lo - 1, -1):
            yield from rec(i + 1, prefix + [m])

    yield from rec(0, [])


def _sign(perm: tuple[int, ...]) -> int:
    s = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j = i
            length = 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                s = -s
    return s


def _alternant(exps: tuple[int, ...]) -> dict:
    """a_exps(x1..xn) = det(x_i^{exps_j})."""
    n = len(exps)
    out = {}
    for perm in permutations(range(n)):
        e = tuple(exps[perm[i]] for i in range(n))
        out[e] = out.get(e, 0) + _sign(perm)
    return out


@lru_cache(maxsize=None)
def lr_expand(lam: Partition, mu: Partition) -> dict:
    """Schur expansion ``{nu: N^nu_{lam,mu}}`` of s_lam * s_mu.

    Works in ``len(lam) + len(mu)`` variables, which is enough to see every
    nu that occurs. The coefficient of x^{nu+delta} in a_{lam+delta} * s_mu
    is N^nu_{lam,mu}.
    """
    lam, mu = Partition(lam), Partition(mu)
    n = len(lam) + len(mu)
    if n == 0:
        return {Partition(): 1}
    delta = tuple(range(n - 1, -1, -1))
    padded = tuple(lam) + (0,) * (n - len(lam))
    alt = _alternant(tuple(a + b for a, b in zip(padded, delta)))
    prod = _poly_mul(alt, dict(_schur_poly(mu, n)))
    out = {}
    for e, c in prod.items():
        if c and all(e[i] > e[i + 1] for i in range(n - 1)):
            nu = Partition(a - b for a, b in zip(e, delta))
            out[nu] = c
    return out


def lr_coeff(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """Littlewood-Richardson coefficient: multiplicity of S_nu in S_lam (x) S_mu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.weight + mu.weight != nu.weight:
        return 0
    if not (contains(nu, lam) and contains(nu, mu)):
        return 0
    return lr_expand(lam, mu).get(nu, 0)
