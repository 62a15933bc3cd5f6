"""Free graded algebras, the NC filtration and the graded Poisson envelope.

Elements of the free algebra T(W) are rational combinations of words in
the generators of a :class:`GradedGenSet`. Only the parity of a generator's
degree enters the super signs.

``F^d`` is the two-sided ideal spanned by products
``w0 * B1 * w1 * ... * Bm * wm`` in which every ``Bj`` is an iterated
bracket ``[u1,[u2,...,[u_{k-1},u_k]]]`` of words and the excesses
``k_j - 1`` add up to d. Spans are computed by exact row reduction, one
content class (multiset of letters) at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .charring import Character, SuperChar, sym_power
from .errors import BudgetExceededError, SchemaError
from .freelie import lie_char_table
from .linalg import RowEchelon

DEFAULT_BUDGET = 10**5

Word = tuple[int, ...]


@dataclass(frozen=True)
class GradedGenSet:
    """Named generators with their lower (cohomological) degrees."""

    names: tuple[str, ...]
    degrees: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be unique")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, int]]) -> "GradedGenSet":
        pairs = list(pairs)
        return cls(tuple(str(n) for n, _ in pairs), tuple(int(d) for _, d in pairs))

    @classmethod
    def mixed(cls, n_even: int, n_odd: int, even_degree: int = 0,
              odd_degree: int = -1) -> "GradedGenSet":
        names = [f"x{i + 1}" for i in range(n_even)] + [f"y{i + 1}" for i in range(n_odd)]
        degs = [even_degree] * n_even + [odd_degree] * n_odd
        return cls(tuple(names), tuple(degs))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    @property
    def parities(self) -> tuple[int, ...]:
        return tuple(d % 2 for d in self.degrees)

    def word_degree(self, word: Word) -> int:
        return sum(self.degrees[i] for i in word)

    def word_parity(self, word: Word) -> int:
        return self.word_degree(word) % 2

    def superchar(self) -> SuperChar:
        """Character of W with one torus variable per generator."""
        n = len(self)
        even = Character.zero(n)
        odd = Character.zero(n)
        for i, p in enumerate(self.parities):
            if p:
                odd = odd + Character.variable(i, n)
            else:
                even = even + Character.variable(i, n)
        return SuperChar(even, odd)

    def to_json(self) -> dict:
        return {"generators": [[n, d] for n, d in zip(self.names, self.degrees)]}

    @classmethod
    def from_json(cls, data, location: str = "gens") -> "GradedGenSet":
        if not isinstance(data, dict) or not isinstance(data.get("generators"), list):
            raise SchemaError("expected {'generators': [[name, degree], ...]}", location)
        pairs = []
        for i, item in enumerate(data["generators"]):
            if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], str)
                    and isinstance(item[1], int) and not isinstance(item[1], bool)):
                raise SchemaError("generator must be [name, integer degree]",
                                  f"{location}.generators[{i}]")
            pairs.append((item[0], item[1]))
        try:
            return cls.from_pairs(pairs)
        except ValueError as exc:
            raise SchemaError(str(exc), location) from exc


class FreeAlgebraElement:
    """Rational linear combination of words over a :class:`GradedGenSet`."""

    __slots__ = ("gens", "_terms")

    def __init__(self, gens: GradedGenSet, terms: Mapping[Word, Fraction | int] | None = None):
        self.gens = gens
        clean: dict[Word, Fraction] = {}
        if terms:
            n = len(gens)
            for w, c in terms.items():
                w = tuple(w)
                if any(not 0 <= i < n for i in w):
                    raise ValueError(f"word {w} uses an unknown generator")
                c = Fraction(c)
                if c:
                    clean[w] = clean.get(w, 0) + c
                    if not clean[w]:
                        del clean[w]
        self._terms = clean

    @classmethod
    def _raw(cls, gens: GradedGenSet, terms: dict[Word, Fraction]) -> "FreeAlgebraElement":
        obj = cls.__new__(cls)
        obj.gens = gens
        obj._terms = terms
        return obj

    @classmethod
    def word(cls, gens: GradedGenSet, word: Sequence[int], coef=1) -> "FreeAlgebraElement":
        return cls(gens, {tuple(word): coef})

    @classmethod
    def generator(cls, gens: GradedGenSet, name_or_index) -> "FreeAlgebraElement":
        i = gens.index(name_or_index) if isinstance(name_or_index, str) else int(name_or_index)
        return cls(gens, {(i,): 1})

    @classmethod
    def scalar(cls, gens: GradedGenSet, value) -> "FreeAlgebraElement":
        return cls(gens, {(): value})

    @classmethod
    def zero(cls, gens: GradedGenSet) -> "FreeAlgebraElement":
        return cls._raw(gens, {})

    @property
    def terms(self) -> dict[Word, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: "FreeAlgebraElement") -> None:
        if other.gens != self.gens:
            raise ValueError("elements live in different free algebras")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FreeAlgebraElement.scalar(self.gens, other)
        self._check(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return FreeAlgebraElement._raw(self.gens, out)

    __radd__ = __add__

    def __neg__(self):
        return FreeAlgebraElement._raw(self.gens, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return FreeAlgebraElement.zero(self.gens)
            return FreeAlgebraElement._raw(self.gens, {w: c * other for w, c in self._terms.items()})
        self._check(other)
        out: dict[Word, Fraction] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return FreeAlgebraElement._raw(self.gens, {w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FreeAlgebraElement.scalar(self.gens, other)
        if not isinstance(other, FreeAlgebraElement):
            return NotImplemented
        return self.gens == other.gens and self._terms == other._terms

    __hash__ = None

    def degrees(self) -> set[int]:
        return {self.gens.word_degree(w) for w in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Lower degree of a homogeneous element (0 for the zero element)."""
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous element with degrees {sorted(degs)}")
        return degs.pop() if degs else 0

    def homogeneous_parts(self) -> dict[int, "FreeAlgebraElement"]:
        parts: dict[int, dict[Word, Fraction]] = {}
        for w, c in self._terms.items():
            parts.setdefault(self.gens.word_degree(w), {})[w] = c
        return {d: FreeAlgebraElement._raw(self.gens, t) for d, t in parts.items()}

    def to_json(self) -> list:
        out = []
        for w in sorted(self._terms, key=lambda w: (len(w), w)):
            c = self._terms[w]
            coef = c.numerator if c.denominator == 1 else str(c)
            out.append([coef, [self.gens.names[i] for i in w]])
        return out

    @classmethod
    def from_json(cls, gens: GradedGenSet, data, location: str = "element") -> "FreeAlgebraElement":
        if not isinstance(data, list):
            raise SchemaError("element must be a list of [coefficient, [letters]]", location)
        terms: dict[Word, Fraction] = {}
        for i, item in enumerate(data):
            loc = f"{location}[{i}]"
            if not (isinstance(item, list) and len(item) == 2 and isinstance(item[1], list)):
                raise SchemaError("term must be [coefficient, [letters]]", loc)
            coef, letters = item
            try:
                c = Fraction(coef) if not isinstance(coef, bool) else None
            except (TypeError, ValueError):
                c = None
            if c is None:
                raise SchemaError(f"bad coefficient {coef!r}", loc)
            try:
                w = tuple(gens.index(x) for x in letters)
            except ValueError as exc:
                raise SchemaError(f"unknown generator in {letters}", loc) from exc
            terms[w] = terms.get(w, 0) + c
        return cls(gens, terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w in sorted(self._terms, key=lambda w: (len(w), w)):
            c = self._terms[w]
            mono = "*".join(self.gens.names[i] for i in w)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"FreeAlgebraElement({self})"


def super_commutator(x: FreeAlgebraElement, y: FreeAlgebraElement) -> FreeAlgebraElement:
    """[x, y] = xy - (-1)^{|x||y|} yx for homogeneous x and y."""
    if not (x.is_homogeneous() and y.is_homogeneous()):
        raise ValueError("super commutator needs homogeneous inputs")
    sign = -1 if (x.degree() * y.degree()) % 2 else 1
    return x * y - (y * x) * sign


# filtration spans ---------------------------------------------------------------


@dataclass(frozen=True)
class FiltrationReport:
    tensor_degree: int
    dims_by_d: tuple[tuple[int, int], ...]

    @property
    def dims(self) -> list[int]:
        return [dim for _, dim in self.dims_by_d]

    def to_json(self) -> dict:
        return {"n": self.tensor_degree, "dims": [[d, dim] for d, dim in self.dims_by_d]}

    @classmethod
    def from_json(cls, data) -> "FiltrationReport":
        return cls(int(data["n"]), tuple((int(d), int(v)) for d, v in data["dims"]))


def _bracket_shapes(n: int, d: int) -> list[tuple]:
    """Cut patterns for elements of F^d in tensor degree n.

    A shape is a tuple of segments; an int is a plain word of that length,
    a tuple of ints is an iterated bracket of words with those lengths.
    Plain segments are never adjacent, and the bracket excesses sum to d.
    """
    out: list[tuple] = []

    def brackets(length: int, max_excess: int) -> Iterator[tuple[tuple[int, ...], int]]:
        # bracket of k >= 2 words of total length <= length, excess k-1 <= max_excess
        def rec(prefix: tuple[int, ...], left: int):
            if len(prefix) >= 2:
                yield prefix
            if len(prefix) - 1 >= max_excess and len(prefix) >= 2:
                return
            for l in range(1, left + 1):
                yield from rec(prefix + (l,), left - l)
        for b in rec((), length):
            yield b, len(b) - 1

    def rec(prefix: tuple, left: int, excess: int, last_plain: bool):
        if left == 0:
            if excess == 0:
                out.append(prefix)
            return
        if not last_plain:
            for l in range(1, left + 1):
                rec(prefix + (l,), left - l, excess, True)
        if excess > 0:
            for b, ex in brackets(left, excess):
                if ex <= excess:
                    rec(prefix + (b,), left - sum(b), excess - ex, False)

    rec((), n, d, False)
    return out


def _multiset_words(content: Sequence[int]) -> list[Word]:
    """All distinct words with the given letter multiplicities (letter i appears content[i] times)."""
    n = sum(content)
    counts = list(content)
    out: list[Word] = []
    buf = [0] * n

    def rec(pos: int):
        if pos == n:
            out.append(tuple(buf))
            return
        for letter, c in enumerate(counts):
            if c:
                counts[letter] -= 1
                buf[pos] = letter
                rec(pos + 1)
                counts[letter] += 1

    rec(0)
    return out


def _expand_bracket(pieces: Sequence[Word], parity: Sequence[int]) -> dict[Word, int]:
    inner: dict[Word, int] = {pieces[-1]: 1}
    inner_par = sum(parity[i] for i in pieces[-1]) % 2
    for u in reversed(pieces[:-1]):
        pu = sum(parity[i] for i in u) % 2
        sign = -1 if (pu * inner_par) % 2 == 0 else 1
        out: dict[Word, int] = {}
        for w, c in inner.items():
            a = u + w
            out[a] = out.get(a, 0) + c
            b = w + u
            out[b] = out.get(b, 0) + sign * c
        inner = {w: c for w, c in out.items() if c}
        inner_par = (inner_par + pu) % 2
        if not inner:
            break
    return inner


def _shape_vector(word: Word, shape: tuple, parity: Sequence[int]) -> dict[Word, int]:
    acc: dict[Word, int] = {(): 1}
    pos = 0
    for seg in shape:
        if isinstance(seg, int):
            piece = word[pos:pos + seg]
            acc = {w + piece: c for w, c in acc.items()}
            pos += seg
            continue
        pieces = []
        for l in seg:
            pieces.append(word[pos:pos + l])
            pos += l
        br = _expand_bracket(pieces, parity)
        if not br:
            return {}
        new: dict[Word, int] = {}
        for w1, c1 in acc.items():
            for w2, c2 in br.items():
                w = w1 + w2
                new[w] = new.get(w, 0) + c1 * c2
        acc = {w: c for w, c in new.items() if c}
    return acc


@lru_cache(maxsize=None)
def _content_span(parity: tuple[int, ...], content: tuple[int, ...], d: int):
    """(word index, echelon basis) of F^d restricted to one content class."""
    words = _multiset_words(content)
    index = {w: i for i, w in enumerate(words)}
    ech = RowEchelon()
    full = len(words)
    n = sum(content)
    if d == 0:
        for w in words:
            ech.add({index[w]: 1})
        return index, ech
    for shape in _bracket_shapes(n, d):
        for w in words:
            vec = _shape_vector(w, shape, parity)
            if vec:
                ech.add({index[u]: c for u, c in vec.items()})
            if ech.rank == full:
                return index, ech
    return index, ech


@lru_cache(maxsize=None)
def _canonical_dims(key: tuple[tuple[int, int], ...], n: int) -> tuple[int, ...]:
    """dim F^d for d = 0..n on the content class described by (parity, count) pairs."""
    parity = tuple(p for p, _ in key)
    content = tuple(c for _, c in key)
    dims = []
    for d in range(n + 1):
        _, ech = _content_span(parity, content, d)
        dims.append(ech.rank)
        if ech.rank == 0:
            dims.extend([0] * (n - d))
            break
    return tuple(dims)


def _contents(ngens: int, n: int) -> Iterator[tuple[int, ...]]:
    if ngens == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in _contents(ngens - 1, n - first):
            yield (first,) + rest


def _check_budget(gens: GradedGenSet, n: int, budget: int) -> None:
    if len(gens) ** n > budget:
        raise BudgetExceededError(
            f"{len(gens)}^{n} words in tensor degree {n} exceed budget {budget}")


def nc_filtration_dims(gens: GradedGenSet, tensor_degree: int, max_d: int,
                       budget: int = DEFAULT_BUDGET,
                       lower_degree: int | None = None) -> FiltrationReport:
    """dim gr_F^d T(W) in one tensor degree, d = 0..max_d, by exact row reduction.

    With ``lower_degree`` set, only words of that lower degree are counted.
    """
    n = tensor_degree
    if n < 0 or max_d < 0:
        raise ValueError("tensor_degree and max_d must be non-negative")
    _check_budget(gens, n, budget)
    parities = gens.parities
    total = [0] * (n + 2)
    for content in _contents(len(gens), n):
        if lower_degree is not None:
            if sum(c * deg for c, deg in zip(content, gens.degrees)) != lower_degree:
                continue
        key = tuple(sorted((parities[i], c) for i, c in enumerate(content) if c))
        f_dims = _canonical_dims(key, n)
        for d, v in enumerate(f_dims):
            total[d] += v
    dims = tuple((d, total[d] - total[d + 1]) for d in range(max_d + 1))
    return FiltrationReport(n, dims)


def filtration_contains(x: FreeAlgebraElement, d: int) -> bool:
    """True when x lies in F^d T(W)."""
    if d <= 0:
        return True
    parity = x.gens.parities
    ngens = len(x.gens)
    parts: dict[tuple[int, ...], dict[Word, Fraction]] = {}
    for w, c in x.items():
        content = [0] * ngens
        for i in w:
            content[i] += 1
        parts.setdefault(tuple(content), {})[w] = c
    for content, terms in parts.items():
        # relabel the letters actually used so the span cache is shared
        used = [i for i, c in enumerate(content) if c]
        relabel = {old: new for new, old in enumerate(used)}
        sub_parity = tuple(parity[i] for i in used)
        sub_content = tuple(content[i] for i in used)
        index, ech = _content_span(sub_parity, sub_content, d)
        vec = {index[tuple(relabel[i] for i in w)]: c for w, c in terms.items()}
        if not ech.contains(vec):
            return False
    return True


def _truncate_degree(g: SuperChar, n: int) -> SuperChar:
    def cut(c: Character) -> Character:
        return Character(c.nvars, {e: v for e, v in c.items() if sum(e) <= n})
    return SuperChar(cut(g.even), cut(g.odd))


def poisson_envelope_character(gens: GradedGenSet, tensor_degree: int,
                               max_d: int) -> list[SuperChar]:
    """Characters of S(L(W)) in tensor degree n, split by upper degree d = 0..max_d.

    Lie_k(W) sits in upper degree k - 1; one torus variable per generator
    records the content, so total t-degree equals tensor degree.
    """
    n = tensor_degree
    g = gens.superchar()
    nv = g.nvars
    one = SuperChar.one(nv)
    zero = SuperChar.zero(nv)
    if n == 0:
        return [one] + [zero] * max_d
    table = lie_char_table(g, n)
    top = n - 1
    series = [one] + [zero] * top
    for k in range(1, n + 1):
        piece = table[k]
        if not piece:
            continue
        sig = [sym_power(j, piece) for j in range(n // k + 1)]
        new = [zero] * (top + 1)
        for i, c in enumerate(series):
            if not c:
                continue
            for j, s in enumerate(sig):
                pos = i + j * (k - 1)
                if pos > top:
                    break
                if s:
                    new[pos] = new[pos] + _truncate_degree(c * s, n)
        series = new

    def exact(c: Character) -> Character:
        return Character(nv, {e: v for e, v in c.items() if sum(e) == n})

    out = []
    for d in range(max_d + 1):
        s = series[d] if d <= top else zero
        out.append(SuperChar(exact(s.even), exact(s.odd)))
    return out


def poisson_envelope_dims(gens: GradedGenSet, tensor_degree: int, max_d: int,
                          budget: int = DEFAULT_BUDGET,
                          lower_degree: int | None = None) -> FiltrationReport:
    """Predicted dims of gr_F^d T(W): the upper-degree-d part of S(L(W))."""
    if tensor_degree < 0 or max_d < 0:
        raise ValueError("tensor_degree and max_d must be non-negative")
    chars = poisson_envelope_character(gens, tensor_degree, max_d)
    dims = []
    for d, ch in enumerate(chars):
        dim = 0
        for part in (ch.even, ch.odd):
            for e, v in part.items():
                if lower_degree is None or sum(a * b for a, b in zip(e, gens.degrees)) == lower_degree:
                    dim += v
        dims.append((d, dim))
    return FiltrationReport(tensor_degree, tuple(dims))
