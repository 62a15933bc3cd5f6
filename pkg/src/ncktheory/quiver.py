"""Quivers with relations from a truncated graded algebra, and their representations.

A presentation fixes a range [p, q] and, for each weight 1 <= k <= q - p, a
basis of m_k together with the multiplication ``theta``. Arrows from i to j
are the basis elements of m_{j-i}.

Order convention: a path is a tuple of arrows in the order they are
traversed, and its matrix is ``M_last @ ... @ M_first``. For arrows
``a2: i -> j`` and ``a1: j -> k`` the relation is
``theta(a1 (x) a2) - (a2 then a1)``, which is the quiver form of the module
axiom ``x(a1 a2) = x(a1) x(a2)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .errors import SchemaError

Basis = tuple[int, int]          # (weight, index inside m_weight)
Matrix = tuple[tuple[Fraction, ...], ...]


# exact matrices as tuples of tuples -------------------------------------------------


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((Fraction(0),) * cols for _ in range(rows))


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def as_matrix(rows: Sequence[Sequence], nrows: int | None = None,
              ncols: int | None = None) -> Matrix:
    m = tuple(tuple(Fraction(v) for v in row) for row in rows)
    if nrows is not None and len(m) != nrows:
        raise ValueError(f"expected {nrows} rows, got {len(m)}")
    if ncols is not None and any(len(r) != ncols for r in m):
        raise ValueError(f"expected {ncols} columns")
    return m


def matmul(a: Matrix, b: Matrix, inner: int, cols: int) -> Matrix:
    """a (r x inner) @ b (inner x cols); the sizes are passed to survive empty shapes."""
    return tuple(tuple(sum((a[i][t] * b[t][j] for t in range(inner)), Fraction(0))
                       for j in range(cols)) for i in range(len(a)))


def matadd(a: Matrix, b: Matrix, scale=1) -> Matrix:
    return tuple(tuple(x + scale * y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def is_zero_matrix(m: Matrix) -> bool:
    return all(v == 0 for row in m for v in row)


def _fraction_json(v: Fraction):
    return v.numerator if v.denominator == 1 else str(v)


def _parse_fraction(v, location: str) -> Fraction:
    if isinstance(v, bool):
        raise SchemaError(f"bad number {v!r}", location)
    try:
        return Fraction(v)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"bad number {v!r}", location) from exc


# presentation -----------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GradedAlgebraPresentation:
    """m_1..m_{q-p} with bases and products ``theta[(a, b)] = {c: coef}``.

    Basis elements are ``(weight, index)`` pairs. Products landing above
    weight q - p are dropped.
    """

    p: int
    q: int
    names: Mapping[int, tuple[str, ...]]
    theta: Mapping[tuple[Basis, Basis], Mapping[Basis, Fraction]]

    def __post_init__(self):
        if self.q < self.p:
            raise ValueError("need q >= p")
        top = self.q - self.p
        for k in self.names:
            if not 1 <= k <= top:
                raise ValueError(f"weight {k} outside 1..{top}")
        for (a, b), out in self.theta.items():
            for x in (a, b):
                if not self.has(x):
                    raise ValueError(f"theta uses unknown basis element {x}")
            for c, v in out.items():
                if v and (not self.has(c) or c[0] != a[0] + b[0]):
                    raise ValueError(f"theta({a}, {b}) has a bad component {c}")
        bad = self.associator_defects()
        if bad:
            raise ValueError(f"theta is not associative, e.g. on {bad[0]}")

    @property
    def dims(self) -> dict[int, int]:
        return {k: len(self.names.get(k, ())) for k in range(1, self.q - self.p + 1)}

    def has(self, b: Basis) -> bool:
        return 0 <= b[1] < len(self.names.get(b[0], ()))

    def basis(self, weight: int | None = None) -> list[Basis]:
        ks = [weight] if weight is not None else range(1, self.q - self.p + 1)
        return [(k, i) for k in ks for i in range(len(self.names.get(k, ())))]

    def name(self, b: Basis) -> str:
        return self.names[b[0]][b[1]]

    def product(self, a: Basis, b: Basis) -> dict[Basis, Fraction]:
        if a[0] + b[0] > self.q - self.p:
            return {}
        return {c: Fraction(v) for c, v in self.theta.get((a, b), {}).items() if v}

    def _mul_vec(self, u: dict[Basis, Fraction], v: dict[Basis, Fraction]) -> dict[Basis, Fraction]:
        out: dict[Basis, Fraction] = {}
        for a, x in u.items():
            for b, y in v.items():
                for c, z in self.product(a, b).items():
                    out[c] = out.get(c, 0) + x * y * z
        return {c: v for c, v in out.items() if v}

    def associator_defects(self) -> list[tuple[Basis, Basis, Basis]]:
        top = self.q - self.p
        bad = []
        basis = self.basis()
        for a, b, c in product(basis, repeat=3):
            if a[0] + b[0] + c[0] > top:
                continue
            left = self._mul_vec(self._mul_vec({a: 1}, {b: 1}), {c: 1})
            right = self._mul_vec({a: 1}, self._mul_vec({b: 1}, {c: 1}))
            if left != right:
                bad.append((a, b, c))
        return bad

    def to_json(self) -> dict:
        theta = []
        for (a, b) in sorted(self.theta):
            for c, v in sorted(self.theta[(a, b)].items()):
                if v:
                    theta.append([self.name(a), self.name(b), self.name(c), _fraction_json(Fraction(v))])
        return {
            "p": self.p,
            "q": self.q,
            "basis": {str(k): list(self.names[k]) for k in sorted(self.names)},
            "theta": theta,
        }

    @classmethod
    def from_json(cls, data, location: str = "$") -> "GradedAlgebraPresentation":
        if not isinstance(data, dict):
            raise SchemaError("presentation must be an object", location)
        for key in ("p", "q"):
            if not isinstance(data.get(key), int) or isinstance(data.get(key), bool):
                raise SchemaError(f"'{key}' must be an integer", location)
        names: dict[int, tuple[str, ...]] = {}
        if "basis" in data:
            if not isinstance(data["basis"], dict):
                raise SchemaError("basis must map weights to name lists", f"{location}.basis")
            for k, lst in data["basis"].items():
                try:
                    w = int(k)
                except ValueError as exc:
                    raise SchemaError(f"bad weight {k!r}", f"{location}.basis") from exc
                if not (isinstance(lst, list) and all(isinstance(x, str) for x in lst)):
                    raise SchemaError("basis names must be strings", f"{location}.basis.{k}")
                names[w] = tuple(lst)
        elif "dims" in data:
            if not isinstance(data["dims"], dict):
                raise SchemaError("dims must map weights to integers", f"{location}.dims")
            for k, n in data["dims"].items():
                if not isinstance(n, int) or n < 0:
                    raise SchemaError("dimension must be a non-negative integer", f"{location}.dims.{k}")
                names[int(k)] = tuple(f"m{k}_{i + 1}" for i in range(n))
        else:
            raise SchemaError("need 'basis' or 'dims'", location)
        lookup = {}
        for k, lst in names.items():
            for i, n in enumerate(lst):
                if n in lookup:
                    raise SchemaError(f"duplicate basis name {n!r}", f"{location}.basis")
                lookup[n] = (k, i)
        theta: dict[tuple[Basis, Basis], dict[Basis, Fraction]] = {}
        for t, item in enumerate(data.get("theta", [])):
            loc = f"{location}.theta[{t}]"
            if not (isinstance(item, list) and len(item) == 4):
                raise SchemaError("theta entry must be [a, b, c, coef]", loc)
            a, b, c, coef = item
            if a not in lookup or b not in lookup or c not in lookup:
                raise SchemaError("theta entry names an unknown basis element", loc)
            slot = theta.setdefault((lookup[a], lookup[b]), {})
            slot[lookup[c]] = slot.get(lookup[c], 0) + _parse_fraction(coef, loc)
        try:
            return cls(data["p"], data["q"], names, theta)
        except ValueError as exc:
            raise SchemaError(str(exc), location) from exc


# quiver ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Arrow:
    tail: int
    head: int
    basis: Basis

    @property
    def weight(self) -> int:
        return self.head - self.tail


Path = tuple[int, ...]          # arrow indices in traversal order


@dataclass(frozen=True, eq=False)
class Quiver:
    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[dict[Path, Fraction], ...]
    presentation: GradedAlgebraPresentation

    def arrow_index(self, tail: int, basis: Basis) -> int:
        return self._index[(tail, basis)]

    @property
    def _index(self) -> dict[tuple[int, Basis], int]:
        cache = self.__dict__.get("_index_cache")
        if cache is None:
            cache = {(a.tail, a.basis): t for t, a in enumerate(self.arrows)}
            object.__setattr__(self, "_index_cache", cache)
        return cache

    def arrow_count(self, tail: int, head: int) -> int:
        return sum(1 for a in self.arrows if a.tail == tail and a.head == head)

    def to_json(self) -> dict:
        pres = self.presentation
        arrows = [[a.tail, a.head, a.basis[1]] for a in self.arrows]
        rels = []
        for rel in self.relations:
            rels.append([[_fraction_json(c), list(path)]
                         for path, c in sorted(rel.items(), key=lambda kv: (len(kv[0]), kv[0]))])
        return {
            "vertices": list(self.vertices),
            "arrows": arrows,
            "arrow_labels": [pres.name(a.basis) for a in self.arrows],
            "relations": rels,
        }


def build_quiver(pres: GradedAlgebraPresentation) -> Quiver:
    """Vertices p..q, one arrow per basis element of m_{j-i}, relations per composable pair."""
    vertices = tuple(range(pres.p, pres.q + 1))
    arrows = []
    for i in vertices:
        for j in vertices:
            if j > i:
                for b in pres.basis(j - i):
                    arrows.append(Arrow(i, j, b))
    arrows_t = tuple(arrows)
    index = {(a.tail, a.basis): t for t, a in enumerate(arrows_t)}
    relations = []
    for first_idx, first in enumerate(arrows_t):
        for second_idx, second in enumerate(arrows_t):
            if second.tail != first.head:
                continue
            # first = a2 : i -> j, second = a1 : j -> k
            rel: dict[Path, Fraction] = {}
            for c, v in pres.product(second.basis, first.basis).items():
                rel[(index[(first.tail, c)],)] = v
            rel[(first_idx, second_idx)] = Fraction(-1)
            relations.append(rel)
    return Quiver(vertices, arrows_t, tuple(relations), pres)


# representations -----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Rep:
    """Dimension vector (gamma_p..gamma_q) and one matrix per arrow."""

    quiver: Quiver
    gamma: tuple[int, ...]
    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        q = self.quiver
        if len(self.gamma) != len(q.vertices):
            raise ValueError("dimension vector length does not match the vertex count")
        if any(g < 0 for g in self.gamma):
            raise ValueError("dimensions must be non-negative")
        if len(self.matrices) != len(q.arrows):
            raise ValueError("need one matrix per arrow")
        for a, m in zip(q.arrows, self.matrices):
            rows, cols = self.dim(a.head), self.dim(a.tail)
            if len(m) != rows or any(len(r) != cols for r in m):
                raise ValueError(f"matrix for arrow {a} must be {rows}x{cols}")

    def dim(self, vertex: int) -> int:
        return self.gamma[vertex - self.quiver.vertices[0]]

    def matrix(self, arrow: int) -> Matrix:
        return self.matrices[arrow]

    def path_matrix(self, path: Path) -> Matrix:
        arrows = self.quiver.arrows
        start = arrows[path[0]].tail
        cur = identity(self.dim(start))
        size = self.dim(start)
        for t in path:
            a = arrows[t]
            cur = matmul(self.matrices[t], cur, size, self.dim(start))
            size = self.dim(a.head)
        return cur

    @classmethod
    def zero(cls, quiver: Quiver, gamma: Sequence[int]) -> "Rep":
        gamma = tuple(gamma)
        p = quiver.vertices[0]
        mats = tuple(zeros(gamma[a.head - p], gamma[a.tail - p]) for a in quiver.arrows)
        return cls(quiver, gamma, mats)

    def with_matrix(self, arrow: int, m) -> "Rep":
        mats = list(self.matrices)
        mats[arrow] = as_matrix(m)
        return Rep(self.quiver, self.gamma, tuple(mats))

    def to_json(self) -> dict:
        return {
            "gamma": list(self.gamma),
            "matrices": [[[_fraction_json(v) for v in row] for row in m] for m in self.matrices],
        }

    @classmethod
    def from_json(cls, quiver: Quiver, data, location: str = "$.rep") -> "Rep":
        if not isinstance(data, dict) or "gamma" not in data or "matrices" not in data:
            raise SchemaError("rep must have 'gamma' and 'matrices'", location)
        gamma = data["gamma"]
        if not (isinstance(gamma, list) and all(isinstance(g, int) for g in gamma)):
            raise SchemaError("gamma must be a list of integers", f"{location}.gamma")
        mats = []
        for t, m in enumerate(data["matrices"]):
            if not (isinstance(m, list) and all(isinstance(r, list) for r in m)):
                raise SchemaError("matrix must be a list of rows", f"{location}.matrices[{t}]")
            mats.append(tuple(tuple(_parse_fraction(v, f"{location}.matrices[{t}]") for v in r)
                              for r in m))
        try:
            return cls(quiver, tuple(gamma), tuple(mats))
        except ValueError as exc:
            raise SchemaError(str(exc), location) from exc


def satisfies_relations(rep: Rep, quiver: Quiver | None = None) -> bool:
    """True iff every relation evaluates to the zero matrix."""
    quiver = quiver or rep.quiver
    return not relation_violations(rep, quiver)


def relation_violations(rep: Rep, quiver: Quiver | None = None) -> list[int]:
    quiver = quiver or rep.quiver
    bad = []
    for r, rel in enumerate(quiver.relations):
        total = None
        for path, c in rel.items():
            m = rep.path_matrix(path)
            total = tuple(tuple(c * v for v in row) for row in m) if total is None else matadd(total, m, c)
        if total is not None and not is_zero_matrix(total):
            bad.append(r)
    return bad


# the dg-algebra L ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class LElement:
    """A grade-preserving map m^{(x) n} -> End(W), stored per (letters, source vertex).

    ``value[(letters, j)]`` is the matrix W_j -> W_{j + total weight}.
    Missing keys are zero.
    """

    n: int
    gamma: tuple[int, ...]
    p: int
    value: Mapping[tuple[tuple[Basis, ...], int], Matrix]

    def dim(self, vertex: int) -> int:
        return self.gamma[vertex - self.p]

    @property
    def q(self) -> int:
        return self.p + len(self.gamma) - 1

    def get(self, letters: tuple[Basis, ...], j: int) -> Matrix:
        m = self.value.get((letters, j))
        if m is not None:
            return m
        w = sum(a[0] for a in letters)
        return zeros(self.dim(j + w), self.dim(j))

    def nonzero_entries(self) -> list[tuple[tuple[Basis, ...], int, int, int, Fraction]]:
        out = []
        for (letters, j), m in sorted(self.value.items()):
            for r, row in enumerate(m):
                for c, v in enumerate(row):
                    if v:
                        out.append((letters, j, r, c, v))
        return out

    def is_zero(self) -> bool:
        return all(is_zero_matrix(m) for m in self.value.values())

    def __add__(self, other: "LElement") -> "LElement":
        if (self.n, self.gamma, self.p) != (other.n, other.gamma, other.p):
            raise ValueError("shape mismatch")
        out = dict(self.value)
        for key, m in other.value.items():
            out[key] = matadd(out[key], m) if key in out else m
        return LElement(self.n, self.gamma, self.p, _prune(out))

    def compose(self, other: "LElement") -> "LElement":
        """f o f' with the sign (-1)^{mn}."""
        if (self.gamma, self.p) != (other.gamma, other.p):
            raise ValueError("shape mismatch")
        sign = -1 if (self.n * other.n) % 2 else 1
        out: dict = {}
        for (l2, j), m2 in other.value.items():
            mid = j + sum(a[0] for a in l2)
            for (l1, j1), m1 in self.value.items():
                if j1 != mid:
                    continue
                prod = matmul(m1, m2, self.dim(mid), self.dim(j))
                key = (l1 + l2, j)
                scaled = tuple(tuple(sign * v for v in row) for row in prod)
                out[key] = matadd(out[key], scaled) if key in out else scaled
        return LElement(self.n + other.n, self.gamma, self.p, _prune(out))

    def differential(self, pres: GradedAlgebraPresentation) -> "LElement":
        """(df)(a_1..a_{n+1}) = sum_i (-1)^{n-i} f(.. a_i a_{i+1} ..)."""
        n = self.n
        out: dict = {}
        top = self.q
        for letters in product(pres.basis(), repeat=n + 1):
            w = sum(a[0] for a in letters)
            for j in range(self.p, top - w + 1):
                total = None
                for i in range(1, n + 1):
                    sign = 1 if (n - i) % 2 == 0 else -1
                    for c, v in pres.product(letters[i - 1], letters[i]).items():
                        sub = letters[:i - 1] + (c,) + letters[i + 1:]
                        m = self.value.get((sub, j))
                        if m is None:
                            continue
                        total = (tuple(tuple(sign * v * x for x in row) for row in m)
                                 if total is None else matadd(total, m, sign * v))
                if total is not None:
                    out[(letters, j)] = total
        return LElement(n + 1, self.gamma, self.p, _prune(out))


def _prune(value: dict) -> dict:
    return {k: m for k, m in value.items() if not is_zero_matrix(m)}


def rep_to_lelement(rep: Rep) -> LElement:
    """The degree-one element x with x(a) on W_j equal to the arrow matrix of a at j."""
    value = {}
    for a, m in zip(rep.quiver.arrows, rep.matrices):
        value[((a.basis,), a.tail)] = m
    return LElement(1, rep.gamma, rep.quiver.vertices[0], _prune(value))


def mc_residual(x: LElement, pres: GradedAlgebraPresentation,
                gamma: Sequence[int] | None = None) -> LElement:
    """dx + x o x, i.e. (a1, a2) -> x(a1 a2) - x(a1) x(a2)."""
    if x.n != 1:
        raise ValueError("the MC residual is defined on degree-one elements")
    if gamma is not None and tuple(gamma) != x.gamma:
        raise ValueError("dimension vector does not match the element")
    if x.p != pres.p or x.q != pres.q:
        raise ValueError("element and presentation use different ranges")
    return x.differential(pres) + x.compose(x)


# stability ---------------------------------------------------------------------


def thin_subrepresentations(rep: Rep) -> list[frozenset[int]]:
    """Nonzero proper vertex subsets closed under the nonzero arrows."""
    quiver = rep.quiver
    verts = quiver.vertices
    edges = [(a.tail, a.head) for a, m in zip(quiver.arrows, rep.matrices) if not is_zero_matrix(m)]
    out = []
    for mask in range(1, 2 ** len(verts) - 1):
        s = frozenset(v for t, v in enumerate(verts) if mask >> t & 1)
        if all(h in s for t, h in edges if t in s):
            out.append(s)
    return out


def thin_stability(rep: Rep, quiver: Quiver | None = None) -> str:
    """'stable', 'semistable-only' or 'unstable' for a rep with every gamma_i = 1.

    Subobjects are taken in the category of all quiver representations:
    closure under arrows only, relations are not imposed on them.
    """
    if any(g != 1 for g in rep.gamma):
        raise ValueError("thin_stability needs the dimension vector (1, ..., 1)")
    verts = rep.quiver.vertices
    p, q = verts[0], verts[-1]
    stable = True
    for s in thin_subrepresentations(rep):
        lhs = rep.dim(p) * int(q in s)
        rhs = rep.dim(q) * int(p in s)
        if lhs < rhs:
            return "unstable"
        if lhs == rhs:
            stable = False
    return "stable" if stable else "semistable-only"


# P^2 -----------------------------------------------------------------------------


def p2_presentation() -> GradedAlgebraPresentation:
    """C[x1, x2, x3] truncated at weight 2 on the range [0, 2]."""
    zs = [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]
    names = {1: ("x1", "x2", "x3"), 2: tuple(f"z{i}{j}" for i, j in zs)}
    zidx = {ij: t for t, ij in enumerate(zs)}
    theta = {}
    for a in range(3):
        for b in range(3):
            theta[((1, a), (1, b))] = {(2, zidx[(min(a, b) + 1, max(a, b) + 1)]): Fraction(1)}
    return GradedAlgebraPresentation(0, 2, names, theta)


def p2_point_rep(quiver: Quiver | None = None, x1=2, x2=3, y1=None, y2=None) -> Rep:
    """Thin rep with X = (x1, x2, 1) on 0 -> 1, Y = (y1, y2, 1) on 1 -> 2, Z_ij = y_i x_j.

    Y defaults to X so that Z is symmetric.
    """
    quiver = quiver or build_quiver(p2_presentation())
    xs = [Fraction(x1), Fraction(x2), Fraction(1)]
    ys = [Fraction(x1 if y1 is None else y1), Fraction(x2 if y2 is None else y2), Fraction(1)]
    pres = quiver.presentation
    mats = []
    for a in quiver.arrows:
        name = pres.name(a.basis)
        if a.tail == 0 and a.head == 1:
            v = xs[a.basis[1]]
        elif a.tail == 1 and a.head == 2:
            v = ys[a.basis[1]]
        else:
            i, j = int(name[1]) - 1, int(name[2]) - 1
            v = ys[i] * xs[j]
        mats.append(((v,),))
    return Rep(quiver, (1, 1, 1), tuple(mats))


# random presentations and modules -------------------------------------------------


def _multiply_words(kind: str, u: str, v: str) -> tuple[int, str] | None:
    """Product of two basis monomials in one of the model algebras, or None for zero."""
    w = u + v
    if kind in ("powers", "free_trunc"):
        return 1, w
    if kind == "ypoly":            # C[x, y]/(y^2)
        if w.count("y") > 1:
            return None
        return 1, "".join(sorted(w))
    if kind == "exterior":         # Lambda(x, y, z)
        if len(set(w)) < len(w):
            return None
        letters = list(w)
        sign = 1
        for i in range(len(letters)):
            for j in range(len(letters) - 1 - i):
                if letters[j] > letters[j + 1]:
                    letters[j], letters[j + 1] = letters[j + 1], letters[j]
                    sign = -sign
        return sign, "".join(letters)
    if kind == "nc":               # C<x, y>/(yx, y^2)
        if "y" in w[:-1]:
            return None
        return 1, w
    raise ValueError(kind)


_MODEL_BASES = {
    "powers": {1: ["x"], 2: ["xx"], 3: ["xxx"]},
    "ypoly": {1: ["x", "y"], 2: ["xx", "xy"], 3: ["xxx", "xxy"]},
    "exterior": {1: ["x", "y", "z"], 2: ["xy", "xz", "yz"], 3: ["xyz"]},
    "nc": {1: ["x", "y"], 2: ["xx", "xy"], 3: ["xxx", "xxy"]},
}

PRESENTATION_MODELS = tuple(_MODEL_BASES) + ("random_bilinear",)


def model_presentation(kind: str, p: int, q: int, rng: random.Random | None = None,
                       rescale: bool = True) -> GradedAlgebraPresentation:
    """A truncated model algebra on [p, q] (q - p <= 3), optionally with rescaled bases."""
    rng = rng or random.Random(0)
    top = q - p
    if kind == "random_bilinear":
        if top > 2:
            raise ValueError("random_bilinear needs q - p <= 2")
        d1 = rng.randint(1, 3)
        d2 = rng.randint(1, 3) if top == 2 else 0
        names = {1: tuple(f"u{i + 1}" for i in range(d1))}
        if top == 2:
            names[2] = tuple(f"v{i + 1}" for i in range(d2))
        theta = {}
        if top == 2:
            for a in range(d1):
                for b in range(d1):
                    out = {(2, c): Fraction(rng.randint(-2, 2)) for c in range(d2)}
                    out = {c: v for c, v in out.items() if v}
                    if out:
                        theta[((1, a), (1, b))] = out
        return GradedAlgebraPresentation(p, q, names, theta)
    bases = {k: v for k, v in _MODEL_BASES[kind].items() if k <= top}
    scale = {(k, i): Fraction(rng.choice([1, 2, -1, 3])) if rescale else Fraction(1)
             for k, lst in bases.items() for i in range(len(lst))}
    lookup = {w: (k, i) for k, lst in bases.items() for i, w in enumerate(lst)}
    items = [(b, w) for w, b in lookup.items()]
    theta = {}
    for a, u in items:
        for b, v in items:
            if a[0] + b[0] > top:
                continue
            res = _multiply_words(kind, u, v)
            if res is None:
                continue
            sign, w = res
            c = lookup[w]
            theta[(a, b)] = {c: Fraction(sign) * scale[a] * scale[b] / scale[c]}
    names = {k: tuple(lst) for k, lst in bases.items()}
    return GradedAlgebraPresentation(p, q, names, theta)


def random_presentation(rng: random.Random) -> GradedAlgebraPresentation:
    p = rng.randint(0, 2)
    kind = rng.choice(PRESENTATION_MODELS)
    top = rng.randint(1, 2 if kind == "random_bilinear" else 3)
    return model_presentation(kind, p, p + top, rng)


def _random_invertible(n: int, rng: random.Random) -> tuple[Matrix, Matrix]:
    """A random invertible matrix (lower unitriangular times upper triangular) and its inverse."""
    lower = [[Fraction(int(i == j)) if i <= j else Fraction(rng.randint(-2, 2)) for j in range(n)]
             for i in range(n)]
    upper = [[Fraction(rng.choice([1, -1, 2])) if i == j else
              (Fraction(rng.randint(-2, 2)) if i < j else Fraction(0)) for j in range(n)]
             for i in range(n)]
    m = matmul(as_matrix(lower), as_matrix(upper), n, n)
    return m, _inverse(m)


def _inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def module_rep(quiver: Quiver, shifts: Sequence[int], rng: random.Random | None = None) -> Rep:
    """Rep of a direct sum of shifted copies of A, cut to [p, q], in a random graded basis.

    A copy shifted by s has W_{s+k} = A_k (A_0 spanned by the unit), and a
    basis element a acts by left multiplication through theta.
    """
    pres = quiver.presentation
    p, q = pres.p, pres.q
    # basis of W_v: list of (copy, A basis element or None for the unit)
    wbasis: dict[int, list] = {v: [] for v in quiver.vertices}
    for c, s in enumerate(shifts):
        for v in quiver.vertices:
            k = v - s
            if k == 0:
                wbasis[v].append((c, None))
            elif 1 <= k <= q - p:
                wbasis[v].extend((c, b) for b in pres.basis(k))
    gamma = tuple(len(wbasis[v]) for v in quiver.vertices)
    change = {}
    for v in quiver.vertices:
        n = gamma[v - p]
        change[v] = _random_invertible(n, rng) if rng is not None and n else (identity(n), identity(n))
    mats = []
    for a in quiver.arrows:
        src, dst = wbasis[a.tail], wbasis[a.head]
        pos = {e: t for t, e in enumerate(dst)}
        m = [[Fraction(0)] * len(src) for _ in dst]
        for col, (c, b) in enumerate(src):
            image = {a.basis: Fraction(1)} if b is None else pres.product(a.basis, b)
            for tgt, v in image.items():
                m[pos[(c, tgt)]][col] += v
        m = as_matrix(m)
        # conjugate: g_head^{-1} m g_tail
        g_t, _ = change[a.tail]
        _, ginv_h = change[a.head]
        m = matmul(ginv_h, matmul(m, g_t, len(src), len(src)), len(dst), len(src))
        mats.append(m)
    return Rep(quiver, gamma, tuple(mats))


def random_rep(quiver: Quiver, rng: random.Random, max_dim: int = 2) -> Rep:
    gamma = tuple(rng.randint(0, max_dim) for _ in quiver.vertices)
    p = quiver.vertices[0]
    mats = []
    for a in quiver.arrows:
        mats.append(tuple(tuple(Fraction(rng.randint(-2, 2)) for _ in range(gamma[a.tail - p]))
                          for _ in range(gamma[a.head - p])))
    return Rep(quiver, gamma, tuple(mats))


def presentation_report(pres: GradedAlgebraPresentation, rep: Rep | None = None) -> dict:
    """Quiver JSON plus, when a rep is given, relation, MC and stability results."""
    quiver = build_quiver(pres)
    out = {"quiver": quiver.to_json()}
    if rep is not None:
        res = mc_residual(rep_to_lelement(rep), pres)
        out["rep"] = {
            "satisfies_relations": satisfies_relations(rep, quiver),
            "violated_relations": relation_violations(rep, quiver),
            "mc_residual_zero": res.is_zero(),
            "mc_residual": [[[pres.name(a) for a in letters], j, r, c, _fraction_json(v)]
                            for letters, j, r, c, v in res.nonzero_entries()],
            "stability": thin_stability(rep, quiver) if all(g == 1 for g in rep.gamma) else None,
        }
    return out
