"""Exact torus characters, super characters and their lambda-ring operations.

A :class:`Character` is a Laurent polynomial with integer coefficients in
torus variables ``t1..tk``; it stands for the class of a T-equivariant
vector bundle over a point. A :class:`SuperChar` is an (even, odd) pair,
and ``k_class`` folds it to ``even - odd``.

Symmetric and exterior powers, and Schur functors, of super characters are
computed with super signs: an odd line squares to zero under the
symmetric power.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import lru_cache
from operator import add
from typing import Callable, Iterable, Iterator, Mapping, Sequence, TypeVar

from .errors import ExponentBudgetError, SchemaError
from .partition import Partition, conjugate, lr_coeff, partitions_of, contains

DEFAULT_EXPONENT_BUDGET = 64
_budget = [DEFAULT_EXPONENT_BUDGET]


def get_exponent_budget() -> int:
    return _budget[0]


@contextmanager
def exponent_budget(limit: int) -> Iterator[None]:
    """Temporarily change the maximal allowed |exponent| per variable."""
    old = _budget[0]
    _budget[0] = int(limit)
    try:
        yield
    finally:
        _budget[0] = old


Exponent = tuple[int, ...]


class Character:
    """Sparse integer Laurent polynomial in ``nvars`` torus variables.

    Instances are immutable. ``nvars == 0`` gives plain integers (ranks).
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        self.nvars = int(nvars)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, int] = {}
        for exp, coef in items:
            exp = tuple(int(x) for x in exp)
            if len(exp) != self.nvars:
                raise ValueError(f"exponent {exp} has wrong length for nvars={self.nvars}")
            val = clean.get(exp, 0) + int(coef)
            if val:
                clean[exp] = val
            else:
                clean.pop(exp, None)
        self._check_budget(clean)
        self._terms = clean
        self._hash = None

    @staticmethod
    def _check_budget(terms: Mapping[Exponent, int]) -> None:
        limit = _budget[0]
        for exp in terms:
            for x in exp:
                if x > limit or x < -limit:
                    raise ExponentBudgetError(
                        f"exponent {x} exceeds budget |e| <= {limit}")

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, int]) -> "Character":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        cls._check_budget(terms)
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Character":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, value: int, nvars: int) -> "Character":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, exp: Sequence[int], coef: int = 1) -> "Character":
        return cls(len(exp), {tuple(exp): coef})

    @classmethod
    def variable(cls, i: int, nvars: int, power: int = 1) -> "Character":
        """The character t_{i+1}^power (``i`` is zero-based)."""
        exp = [0] * nvars
        exp[i] = power
        return cls(nvars, {tuple(exp): 1})

    # container protocol -------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in graded lexicographic order of exponent vectors."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Character":
        if isinstance(other, Character):
            if other.nvars != self.nvars:
                raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return Character.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                del out[e]
        return Character._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Character":
        return Character._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Character.zero(self.nvars)
            return Character._raw(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        get = out.get
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(map(add, e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return Character._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Character":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = Character.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, k: int) -> "Character":
        """Divide every coefficient by ``k``; raises if not exact."""
        out = {}
        for e, c in self._terms.items():
            q, r = divmod(c, k)
            if r:
                raise ArithmeticError(f"coefficient {c} not divisible by {k}")
            out[e] = q
        return Character._raw(self.nvars, out)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Character.constant(other, self.nvars)
        if not isinstance(other, Character):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # lambda-ring and evaluation ------------------------------------------

    def adams(self, d: int) -> "Character":
        return adams(d, self)

    def rank(self) -> int:
        """Value at t_i = 1 (the underlying dimension of a genuine character)."""
        return sum(self._terms.values())

    def dual(self) -> "Character":
        return Character._raw(self.nvars, {tuple(-x for x in e): c for e, c in self._terms.items()})

    # serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"nvars": self.nvars,
                "terms": [[list(e), c] for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data, location: str = "character") -> "Character":
        if not isinstance(data, dict) or "nvars" not in data or "terms" not in data:
            raise SchemaError("expected {'nvars': k, 'terms': [...]}", location)
        nvars = data["nvars"]
        if not isinstance(nvars, int) or isinstance(nvars, bool) or nvars < 0:
            raise SchemaError("nvars must be a non-negative integer", location)
        terms = []
        for i, item in enumerate(data["terms"]):
            loc = f"{location}.terms[{i}]"
            if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], list)):
                raise SchemaError("term must be [[exponents...], coefficient]", loc)
            exp, coef = item
            if len(exp) != nvars or not all(isinstance(x, int) and not isinstance(x, bool) for x in exp):
                raise SchemaError(f"exponent vector must be {nvars} integers", loc)
            if not isinstance(coef, int) or isinstance(coef, bool):
                raise SchemaError("coefficient must be an integer", loc)
            terms.append((tuple(exp), coef))
        return cls(nvars, terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                (f"t{i + 1}" if x == 1 else f"t{i + 1}^{x}")
                for i, x in enumerate(exp) if x)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Character({self})"


def adams(d: int, a: Character) -> Character:
    """psi^d: substitute t_i -> t_i^d."""
    if d < 1:
        raise ValueError("Adams operations need d >= 1")
    return Character(a.nvars, {tuple(d * x for x in e): c for e, c in a.items()})


@dataclass(frozen=True)
class SuperChar:
    """Character of a Z/2-graded space: an (even, odd) pair."""

    even: Character
    odd: Character

    def __post_init__(self):
        if self.even.nvars != self.odd.nvars:
            raise ValueError("even and odd parts need the same nvars")

    @property
    def nvars(self) -> int:
        return self.even.nvars

    @classmethod
    def zero(cls, nvars: int) -> "SuperChar":
        z = Character.zero(nvars)
        return cls(z, z)

    @classmethod
    def one(cls, nvars: int) -> "SuperChar":
        return cls(Character.constant(1, nvars), Character.zero(nvars))

    @classmethod
    def from_parity(cls, char: Character, parity: int) -> "SuperChar":
        z = Character.zero(char.nvars)
        return cls(char, z) if parity % 2 == 0 else cls(z, char)

    def __add__(self, other: "SuperChar") -> "SuperChar":
        return SuperChar(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "SuperChar") -> "SuperChar":
        return SuperChar(self.even - other.even, self.odd - other.odd)

    def __neg__(self) -> "SuperChar":
        return SuperChar(-self.even, -self.odd)

    def __mul__(self, other):
        if isinstance(other, int):
            return SuperChar(self.even * other, self.odd * other)
        if isinstance(other, Character):
            return SuperChar(self.even * other, self.odd * other)
        a1, b1, a2, b2 = self.even, self.odd, other.even, other.odd
        return SuperChar(a1 * a2 + b1 * b2, a1 * b2 + b1 * a2)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.even) or bool(self.odd)

    def exact_div(self, k: int) -> "SuperChar":
        return SuperChar(self.even.exact_div(k), self.odd.exact_div(k))

    def parity_shift(self) -> "SuperChar":
        return SuperChar(self.odd, self.even)

    def k_class(self) -> Character:
        return self.even - self.odd

    def total(self) -> Character:
        """Ungraded character even + odd."""
        return self.even + self.odd

    def dimension(self) -> int:
        return self.even.rank() + self.odd.rank()

    def to_json(self) -> dict:
        return {"even": self.even.to_json(), "odd": self.odd.to_json()}

    @classmethod
    def from_json(cls, data, location: str = "superchar") -> "SuperChar":
        if not isinstance(data, dict) or "even" not in data or "odd" not in data:
            raise SchemaError("expected {'even': Character, 'odd': Character}", location)
        even = Character.from_json(data["even"], f"{location}.even")
        odd = Character.from_json(data["odd"], f"{location}.odd")
        if even.nvars != odd.nvars:
            raise SchemaError("even and odd parts disagree on nvars", location)
        return cls(even, odd)

    def __str__(self) -> str:
        return f"(even: {self.even}, odd: {self.odd})"


def k_class(g: SuperChar) -> Character:
    return g.k_class()


# Newton recursions --------------------------------------------------------

R = TypeVar("R", Character, SuperChar)


def newton_h(power_sums: Sequence[R], one: R, k_max: int) -> list[R]:
    """h_0..h_kmax from power sums p_1..p_kmax via k h_k = sum p_i h_{k-i}."""
    h = [one]
    for k in range(1, k_max + 1):
        acc = power_sums[0] * h[k - 1]
        for i in range(2, k + 1):
            acc = acc + power_sums[i - 1] * h[k - i]
        h.append(acc.exact_div(k))
    return h


def newton_e(power_sums: Sequence[R], one: R, k_max: int) -> list[R]:
    """e_0..e_kmax from power sums via k e_k = sum (-1)^{i-1} p_i e_{k-i}."""
    e = [one]
    for k in range(1, k_max + 1):
        acc = power_sums[0] * e[k - 1]
        for i in range(2, k + 1):
            term = power_sums[i - 1] * e[k - i]
            acc = acc - term if i % 2 == 0 else acc + term
        e.append(acc.exact_div(k))
    return e


@lru_cache(maxsize=4096)
def _h_list(a: Character, k_max: int) -> tuple[Character, ...]:
    ps = [adams(d, a) for d in range(1, k_max + 1)]
    return tuple(newton_h(ps, Character.constant(1, a.nvars), k_max))


@lru_cache(maxsize=4096)
def _e_list(a: Character, k_max: int) -> tuple[Character, ...]:
    ps = [adams(d, a) for d in range(1, k_max + 1)]
    return tuple(newton_e(ps, Character.constant(1, a.nvars), k_max))


def complete_homogeneous(k: int, a: Character) -> Character:
    """h_k(a), the character of S^k of an ordinary (even) class a."""
    if k < 0:
        return Character.zero(a.nvars)
    return _h_list(a, k)[k]


def elementary(k: int, a: Character) -> Character:
    """e_k(a), the character of Lambda^k of an ordinary class a."""
    if k < 0:
        return Character.zero(a.nvars)
    return _e_list(a, k)[k]


def _determinant(matrix: Sequence[Sequence[R]], one: R, zero: R) -> R:
    """Determinant by first-row Laplace expansion memoized on the column set."""
    n = len(matrix)
    memo: dict[tuple[int, ...], R] = {}

    def minor(row: int, cols: tuple[int, ...]) -> R:
        if row == n:
            return one
        if cols in memo:
            return memo[cols]
        total = zero
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if not entry:
                continue
            rest = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if not rest:
                continue
            term = entry * rest
            total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


def _jacobi_trudi(lam: Partition, seq: Callable[[int], R], one: R, zero: R) -> R:
    n = len(lam)
    if n == 0:
        return one
    matrix = [[seq(lam[i] - i + j) for j in range(n)] for i in range(n)]
    return _determinant(matrix, one, zero)


@lru_cache(maxsize=8192)
def schur_char(lam: Partition, a: Character) -> Character:
    """s_lam(a) for an ordinary class a, via Jacobi-Trudi in h (or e for wide shapes)."""
    lam = Partition(lam)
    one = Character.constant(1, a.nvars)
    zero = Character.zero(a.nvars)
    if not lam:
        return one
    conj = conjugate(lam)
    if len(conj) < len(lam):
        es = _e_list(a, lam.weight)
        return _jacobi_trudi(conj, lambda k: es[k] if 0 <= k < len(es) else zero, one, zero)
    hs = _h_list(a, lam.weight)
    return _jacobi_trudi(lam, lambda k: hs[k] if 0 <= k < len(hs) else zero, one, zero)


# super operations -----------------------------------------------------------


def power_sum(d: int, g: SuperChar) -> Character:
    """Ungraded power sum psi^d(even) - (-1)^d psi^d(odd).

    Newton's recursion on these reproduces the ungraded characters (even
    plus odd part) of the super symmetric powers of g.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    sign = -1 if d % 2 == 0 else 1
    return adams(d, g.even) + adams(d, g.odd) * sign


def super_power_sum(d: int, g: SuperChar) -> SuperChar:
    """Parity-tracked power sum: psi^d(even) + (-1)^{d+1} psi^d(odd) placed in parity d."""
    odd_part = adams(d, g.odd) * (1 if d % 2 else -1)
    return SuperChar.from_parity(adams(d, g.even), 0) + SuperChar.from_parity(odd_part, d)


def sym_power(k: int, g: SuperChar) -> SuperChar:
    """S^k(V) = sum_{i+j=k} S^i(V_even) (x) Lambda^j(V_odd), the j-part in parity j."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = SuperChar.zero(g.nvars)
    for j in range(k + 1):
        part = complete_homogeneous(k - j, g.even) * elementary(j, g.odd)
        out = out + SuperChar.from_parity(part, j)
    return out


def ext_power(k: int, g: SuperChar) -> SuperChar:
    """Lambda^k(V) = sum_{i+j=k} Lambda^i(V_even) (x) S^j(V_odd), the j-part in parity j."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = SuperChar.zero(g.nvars)
    for j in range(k + 1):
        part = elementary(k - j, g.even) * complete_homogeneous(j, g.odd)
        out = out + SuperChar.from_parity(part, j)
    return out


def sigma_series(g: SuperChar, k_max: int) -> list[SuperChar]:
    """[S^0(g), ..., S^kmax(g)]."""
    return [sym_power(k, g) for k in range(k_max + 1)]


def schur_super(lam: Iterable[int], g: SuperChar) -> SuperChar:
    """Super character of the Schur functor S_lam applied to g.

    S_lam(V0 + V1) = sum N^lam_{mu,nu} S_mu(V0) (x) S_{nu'}(V1), the summand
    sitting in parity |nu|.
    """
    lam = Partition(lam)
    out = SuperChar.zero(g.nvars)
    for w in range(lam.weight + 1):
        for mu in partitions_of(w):
            if not contains(lam, mu):
                continue
            even_part = None
            for nu in partitions_of(lam.weight - w):
                n = lr_coeff(mu, nu, lam)
                if not n:
                    continue
                if even_part is None:
                    even_part = schur_char(mu, g.even)
                    if not even_part:
                        break
                odd_part = schur_char(conjugate(nu), g.odd)
                out = out + SuperChar.from_parity(even_part * odd_part * n, nu.weight)
    return out


def schur_via_power_sums(lam: Iterable[int], g: SuperChar) -> SuperChar:
    """Second route to S_lam(g): Jacobi-Trudi over the super character ring.

    The complete symmetric functions h_k are obtained by Newton's recursion
    from :func:`super_power_sum`, so no Littlewood-Richardson data is used.
    """
    lam = Partition(lam)
    one = SuperChar.one(g.nvars)
    zero = SuperChar.zero(g.nvars)
    if not lam:
        return one
    k = lam.weight
    ps = [super_power_sum(d, g) for d in range(1, k + 1)]
    hs = newton_h(ps, one, k)
    return _jacobi_trudi(lam, lambda i: hs[i] if 0 <= i <= k else zero, one, zero)


# rational and graded classes -------------------------------------------------


@dataclass(frozen=True, eq=False)
class RationalCharacter:
    """A formal quotient numerator/denominator of characters."""

    numerator: Character
    denominator: Character

    def __post_init__(self):
        if not self.denominator:
            raise ZeroDivisionError("denominator must be non-zero")
        if self.numerator.nvars != self.denominator.nvars:
            raise ValueError("numerator and denominator need the same nvars")

    @classmethod
    def from_character(cls, c: Character) -> "RationalCharacter":
        return cls(c, Character.constant(1, c.nvars))

    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    def __eq__(self, other) -> bool:
        if isinstance(other, Character):
            other = RationalCharacter.from_character(other)
        if isinstance(other, int):
            other = RationalCharacter.from_character(Character.constant(other, self.nvars))
        if not isinstance(other, RationalCharacter):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None

    def __mul__(self, other):
        if isinstance(other, RationalCharacter):
            return RationalCharacter(self.numerator * other.numerator,
                                     self.denominator * other.denominator)
        if isinstance(other, (Character, int)):
            return rational_mul(self, other)
        return NotImplemented

    def to_json(self) -> dict:
        return {"num": self.numerator.to_json(), "den": self.denominator.to_json()}

    @classmethod
    def from_json(cls, data, location: str = "rational") -> "RationalCharacter":
        if not isinstance(data, dict) or "num" not in data or "den" not in data:
            raise SchemaError("expected {'num': Character, 'den': Character}", location)
        num = Character.from_json(data["num"], f"{location}.num")
        den = Character.from_json(data["den"], f"{location}.den")
        if not den:
            raise SchemaError("denominator is zero", f"{location}.den")
        if num.nvars != den.nvars:
            raise SchemaError("num and den disagree on nvars", location)
        return cls(num, den)

    def __str__(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"


def rational_mul(r: RationalCharacter, c: Character | int) -> RationalCharacter:
    if isinstance(c, int):
        c = Character.constant(c, r.nvars)
    return RationalCharacter(r.numerator * c, r.denominator)


@dataclass(frozen=True)
class GradedClass:
    """Characters placed in integer cohomological degrees."""

    nvars: int
    components: Mapping[int, Character] = field(default_factory=dict)

    def fold_to_super(self) -> SuperChar:
        even = Character.zero(self.nvars)
        odd = Character.zero(self.nvars)
        for deg, char in self.components.items():
            if deg % 2 == 0:
                even = even + char
            else:
                odd = odd + char
        return SuperChar(even, odd)

    def to_json(self) -> dict:
        return {"nvars": self.nvars,
                "components": [[deg, self.components[deg].to_json()]
                               for deg in sorted(self.components)]}


def parse_superchar_or_graded(data, location: str = "e") -> SuperChar:
    """Accept either a SuperChar or a GradedClass JSON object."""
    if isinstance(data, dict) and "components" in data:
        try:
            nvars = data["nvars"]
            comps = {int(deg): Character.from_json(c, f"{location}.components[{i}]")
                     for i, (deg, c) in enumerate(data["components"])}
        except (TypeError, ValueError, KeyError) as exc:
            if isinstance(exc, SchemaError):
                raise
            raise SchemaError(f"malformed graded class: {exc}", location) from exc
        return GradedClass(nvars, comps).fold_to_super()
    return SuperChar.from_json(data, location)
