"""The noncommutative dg-algebra built from a graded algebra action.

Inputs are a free algebra R, a graded free module P = W (x) R with a chosen
homogeneous basis p_i, the augmentation ideal m of a graded algebra with a
basis and multiplication table ``theta``, and a grade-preserving map
``e_hat`` from m to matrices over R. Matrix entry ``(i, k)`` of ``e_hat(a)``
is the R-coefficient of p_i in ``e_hat(a)(p_k)``, so it is nonzero only when
``deg p_i = deg p_k + weight(a)``.

The algebra is the free product of R with the tensor algebra on generators
``[p_i | a_1,...,a_n | p_j]`` (n >= 2, ``deg p_i = deg p_j + sum weights``),
each of degree 1 - n. Since R is free, the whole thing is a free algebra
whose first letters are the R generators, so elements are
:class:`FreeAlgebraElement` values and R embeds without relabelling.

The Leibniz sign is ``Q(ab) = Q(a) b + (-1)^{deg a} a Q(b)`` with Q(R) = 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Mapping, Sequence

from .charring import Character, SuperChar, sym_power
from .errors import BudgetExceededError, SchemaError
from .freealg import FreeAlgebraElement, GradedGenSet, nc_filtration_dims
from .linalg import RowEchelon

DEFAULT_N_MAX = 4
DEFAULT_BUDGET = 10**5


@dataclass(frozen=True, order=True)
class NcdgGenerator:
    """Generator p_head^dual (x) a_1 (x) ... (x) a_n (x) p_tail."""

    head: int
    letters: tuple[int, ...]
    tail: int

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def degree(self) -> int:
        return 1 - self.n


@dataclass(frozen=True, eq=False)
class NcdgData:
    r_gens: GradedGenSet
    m_basis: tuple[tuple[str, int], ...]
    theta: Mapping[tuple[int, int], Mapping[int, Fraction]]
    p_basis: tuple[tuple[str, int], ...]
    e_hat: Mapping[int, Mapping[tuple[int, int], FreeAlgebraElement]]
    n_max: int = DEFAULT_N_MAX
    _generators: list = field(default=None, init=False, repr=False)

    def __post_init__(self):
        if any(d != 0 for d in self.r_gens.degrees):
            raise ValueError("R generators must sit in degree 0")
        if self.n_max < 2:
            raise ValueError("n_max must be >= 2")
        names = [n for n, _ in self.m_basis]
        if len(set(names)) != len(names):
            raise ValueError("m basis names must be unique")
        if any(w < 1 for _, w in self.m_basis):
            raise ValueError("m basis weights must be >= 1")
        pnames = [n for n, _ in self.p_basis]
        if len(set(pnames)) != len(pnames):
            raise ValueError("P basis names must be unique")
        nm, npb = len(self.m_basis), len(self.p_basis)
        for (a, b), out in self.theta.items():
            if not (0 <= a < nm and 0 <= b < nm):
                raise ValueError(f"theta entry ({a}, {b}) out of range")
            for c, coef in out.items():
                if not 0 <= c < nm:
                    raise ValueError(f"theta target {c} out of range")
                if coef and self.weight(c) != self.weight(a) + self.weight(b):
                    raise ValueError(
                        f"theta({names[a]}, {names[b]}) has a component {names[c]} of the wrong weight")
        for a, mat in self.e_hat.items():
            if not 0 <= a < nm:
                raise ValueError(f"e_hat given for unknown m basis index {a}")
            for (i, k), entry in mat.items():
                if not (0 <= i < npb and 0 <= k < npb):
                    raise ValueError(f"e_hat({names[a]}) entry ({i}, {k}) out of range")
                if entry.gens != self.r_gens:
                    raise ValueError("e_hat entries must be elements of R")
                if entry and self.p_degree(i) != self.p_degree(k) + self.weight(a):
                    raise ValueError(
                        f"e_hat({names[a]}) is not grade preserving at entry "
                        f"({pnames[i]}, {pnames[k]})")

    # basic accessors

    def weight(self, a: int) -> int:
        return self.m_basis[a][1]

    def p_degree(self, i: int) -> int:
        return self.p_basis[i][1]

    def theta_product(self, a: int, b: int) -> dict[int, Fraction]:
        return {c: Fraction(v) for c, v in self.theta.get((a, b), {}).items() if v}

    def e_entry(self, a: int, i: int, k: int) -> FreeAlgebraElement:
        entry = self.e_hat.get(a, {}).get((i, k))
        return entry if entry is not None else FreeAlgebraElement.zero(self.r_gens)

    def generators(self) -> list[NcdgGenerator]:
        """All generators with 2 <= n <= n_max, sorted."""
        if self._generators is not None:
            return self._generators
        out = []
        nm = len(self.m_basis)
        for i, j in product(range(len(self.p_basis)), repeat=2):
            gap = self.p_degree(i) - self.p_degree(j)
            for n in range(2, self.n_max + 1):
                if gap < n:
                    break
                for letters in product(range(nm), repeat=n):
                    if sum(self.weight(a) for a in letters) == gap:
                        out.append(NcdgGenerator(i, letters, j))
        out.sort(key=lambda g: (g.n, g.head, g.letters, g.tail))
        object.__setattr__(self, "_generators", out)
        return out

    def generator_name(self, g: NcdgGenerator) -> str:
        letters = ",".join(self.m_basis[a][0] for a in g.letters)
        return f"[{self.p_basis[g.head][0]}|{letters}|{self.p_basis[g.tail][0]}]"

    def algebra_gens(self) -> GradedGenSet:
        gens = self.generators()
        names = list(self.r_gens.names) + [self.generator_name(g) for g in gens]
        degs = list(self.r_gens.degrees) + [g.degree for g in gens]
        return GradedGenSet(tuple(names), tuple(degs))

    def associator_defects(self) -> list[tuple[int, int, int]]:
        """Triples (a, b, c) of basis elements where (ab)c != a(bc)."""
        nm = len(self.m_basis)
        bad = []
        for a, b, c in product(range(nm), repeat=3):
            left: dict[int, Fraction] = {}
            for ab, u in self.theta_product(a, b).items():
                for z, v in self.theta_product(ab, c).items():
                    left[z] = left.get(z, 0) + u * v
            right: dict[int, Fraction] = {}
            for bc, u in self.theta_product(b, c).items():
                for z, v in self.theta_product(a, bc).items():
                    right[z] = right.get(z, 0) + u * v
            if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
                bad.append((a, b, c))
        return bad

    # JSON

    def to_json(self) -> dict:
        mnames = [n for n, _ in self.m_basis]
        pnames = [n for n, _ in self.p_basis]
        theta = []
        for (a, b) in sorted(self.theta):
            for c, v in sorted(self.theta[(a, b)].items()):
                if v:
                    v = Fraction(v)
                    theta.append([mnames[a], mnames[b], mnames[c],
                                  v.numerator if v.denominator == 1 else str(v)])
        e_hat = {}
        for a in sorted(self.e_hat):
            entries = [[pnames[i], pnames[k], el.to_json()]
                       for (i, k), el in sorted(self.e_hat[a].items()) if el]
            if entries:
                e_hat[mnames[a]] = entries
        return {
            "r_gens": list(self.r_gens.names),
            "m_basis": [[n, w] for n, w in self.m_basis],
            "theta": theta,
            "p_basis": [[n, d] for n, d in self.p_basis],
            "e_hat": e_hat,
            "n_max": self.n_max,
        }

    @classmethod
    def from_json(cls, data, location: str = "$") -> "NcdgData":
        if not isinstance(data, dict):
            raise SchemaError("NcdgData must be an object", location)
        for key in ("r_gens", "m_basis", "theta", "p_basis", "e_hat"):
            if key not in data:
                raise SchemaError(f"missing key '{key}'", location)
        if not (isinstance(data["r_gens"], list) and all(isinstance(x, str) for x in data["r_gens"])):
            raise SchemaError("r_gens must be a list of names", f"{location}.r_gens")
        try:
            r_gens = GradedGenSet(tuple(data["r_gens"]), (0,) * len(data["r_gens"]))
        except ValueError as exc:
            raise SchemaError(str(exc), f"{location}.r_gens") from exc
        m_basis = _name_int_pairs(data["m_basis"], f"{location}.m_basis")
        p_basis = _name_int_pairs(data["p_basis"], f"{location}.p_basis")
        midx = {n: i for i, (n, _) in enumerate(m_basis)}
        pidx = {n: i for i, (n, _) in enumerate(p_basis)}
        theta: dict[tuple[int, int], dict[int, Fraction]] = {}
        if not isinstance(data["theta"], list):
            raise SchemaError("theta must be a list of [a, b, c, coef]", f"{location}.theta")
        for t, item in enumerate(data["theta"]):
            loc = f"{location}.theta[{t}]"
            if not (isinstance(item, list) and len(item) == 4):
                raise SchemaError("theta entry must be [a, b, c, coef]", loc)
            a, b, c, coef = item
            if a not in midx or b not in midx or c not in midx:
                raise SchemaError("theta entry names an unknown m basis element", loc)
            try:
                v = Fraction(coef)
            except (TypeError, ValueError) as exc:
                raise SchemaError(f"bad coefficient {coef!r}", loc) from exc
            slot = theta.setdefault((midx[a], midx[b]), {})
            slot[midx[c]] = slot.get(midx[c], 0) + v
        if not isinstance(data["e_hat"], dict):
            raise SchemaError("e_hat must map m basis names to entry lists", f"{location}.e_hat")
        e_hat: dict[int, dict[tuple[int, int], FreeAlgebraElement]] = {}
        for a, entries in data["e_hat"].items():
            loc = f"{location}.e_hat.{a}"
            if a not in midx:
                raise SchemaError("unknown m basis element", loc)
            if not isinstance(entries, list):
                raise SchemaError("expected a list of [row, col, element]", loc)
            mat: dict[tuple[int, int], FreeAlgebraElement] = {}
            for t, item in enumerate(entries):
                if not (isinstance(item, list) and len(item) == 3):
                    raise SchemaError("entry must be [row, col, element]", f"{loc}[{t}]")
                i, k, el = item
                if i not in pidx or k not in pidx:
                    raise SchemaError("entry names an unknown P basis element", f"{loc}[{t}]")
                mat[(pidx[i], pidx[k])] = FreeAlgebraElement.from_json(r_gens, el, f"{loc}[{t}][2]")
            e_hat[midx[a]] = mat
        n_max = data.get("n_max", DEFAULT_N_MAX)
        if not isinstance(n_max, int) or isinstance(n_max, bool):
            raise SchemaError("n_max must be an integer", f"{location}.n_max")
        try:
            return cls(r_gens, tuple(m_basis), theta, tuple(p_basis), e_hat, n_max)
        except ValueError as exc:
            raise SchemaError(str(exc), location) from exc


def _name_int_pairs(data, location: str) -> list[tuple[str, int]]:
    if not isinstance(data, list):
        raise SchemaError("expected a list of [name, integer]", location)
    out = []
    for i, item in enumerate(data):
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], str)
                and isinstance(item[1], int) and not isinstance(item[1], bool)):
            raise SchemaError("expected [name, integer]", f"{location}[{i}]")
        out.append((item[0], item[1]))
    return out


# the differential ---------------------------------------------------------------


class NcdgDifferential:
    """Q on generators, extended to the whole algebra by the Leibniz rule."""

    def __init__(self, data: NcdgData, images: dict[NcdgGenerator, FreeAlgebraElement],
                 gens: GradedGenSet):
        self.data = data
        self.images = images
        self.gens = gens
        self._offset = len(data.r_gens)
        self._by_letter = {self._offset + t: images[g] for t, g in enumerate(data.generators())}

    def __getitem__(self, g: NcdgGenerator) -> FreeAlgebraElement:
        return self.images[g]

    def image_by_name(self, name: str) -> FreeAlgebraElement:
        idx = self.gens.index(name)
        if idx < self._offset:
            return FreeAlgebraElement.zero(self.gens)
        return self._by_letter[idx]

    def element(self, g: NcdgGenerator) -> FreeAlgebraElement:
        return FreeAlgebraElement.generator(self.gens, self.data.generator_name(g))

    def apply(self, x: FreeAlgebraElement) -> FreeAlgebraElement:
        if x.gens != self.gens:
            raise ValueError("element does not live in this dg-algebra")
        degs = self.gens.degrees
        out: dict[tuple[int, ...], Fraction] = {}
        for word, c in x.items():
            prefix_deg = 0
            for pos, letter in enumerate(word):
                img = self._by_letter.get(letter)
                if img:
                    coef = -c if prefix_deg % 2 else c
                    pre, post = word[:pos], word[pos + 1:]
                    for w, v in img.items():
                        key = pre + w + post
                        out[key] = out.get(key, 0) + coef * v
                prefix_deg += degs[letter]
        return FreeAlgebraElement(self.gens, {w: v for w, v in out.items() if v})

    def to_json(self) -> dict:
        return {self.data.generator_name(g): self.images[g].to_json()
                for g in self.data.generators()}


def _embed(x: FreeAlgebraElement, gens: GradedGenSet) -> FreeAlgebraElement:
    return FreeAlgebraElement._raw(gens, dict(x.terms))


def mu_hat_entry(data: NcdgData, a1: int, a2: int, i: int, j: int) -> FreeAlgebraElement:
    """Entry (i, j) of e_hat(a1 a2) - e_hat(a1) e_hat(a2)."""
    total = FreeAlgebraElement.zero(data.r_gens)
    for c, v in data.theta_product(a1, a2).items():
        total = total + data.e_entry(c, i, j) * v
    for k in range(len(data.p_basis)):
        left = data.e_entry(a1, i, k)
        if left:
            total = total - left * data.e_entry(a2, k, j)
    return total


def build_q(data: NcdgData, budget: int = DEFAULT_BUDGET) -> NcdgDifferential:
    """The differential Q = Q0 + Q1 + Q2 on every generator up to length n_max."""
    gens_list = data.generators()
    if len(gens_list) > budget:
        raise BudgetExceededError(f"{len(gens_list)} generators exceed budget {budget}")
    alg = data.algebra_gens()
    offset = len(data.r_gens)
    index = {g: offset + t for t, g in enumerate(gens_list)}
    npb = len(data.p_basis)

    def gen_word(g: NcdgGenerator) -> tuple[int, ...]:
        return (index[g],)

    images: dict[NcdgGenerator, FreeAlgebraElement] = {}
    for g in gens_list:
        i, letters, j, n = g.head, g.letters, g.tail, g.n
        if n == 2:
            images[g] = _embed(mu_hat_entry(data, letters[0], letters[1], i, j), alg)
            continue
        terms: dict[tuple[int, ...], Fraction] = {}

        def add(word: tuple[int, ...], coef) -> None:
            terms[word] = terms.get(word, 0) + coef

        # (-1)^{n+1} (f a_1) (x) a_2 ... a_n (x) x
        s1 = 1 if n % 2 else -1
        for k in range(npb):
            entry = data.e_entry(letters[0], i, k)
            if entry:
                tgt = NcdgGenerator(k, letters[1:], j)
                for w, v in entry.items():
                    add(w + gen_word(tgt), s1 * v)
        # sum_s (-1)^{n+1-s} f (x) ... a_s a_{s+1} ... (x) x
        for s in range(1, n):
            sign = 1 if (n + 1 - s) % 2 == 0 else -1
            for c, v in data.theta_product(letters[s - 1], letters[s]).items():
                tgt = NcdgGenerator(i, letters[:s - 1] + (c,) + letters[s + 1:], j)
                add(gen_word(tgt), sign * v)
        # - f (x) a_1 ... a_{n-1} (x) a_n x
        for k in range(npb):
            entry = data.e_entry(letters[-1], k, j)
            if entry:
                tgt = NcdgGenerator(i, letters[:-1], k)
                for w, v in entry.items():
                    add(gen_word(tgt) + w, -v)
        # Q2: split after k letters through the degree-matched basis of P
        for k in range(2, n - 1):
            sign = -1 if (n * (k - 2)) % 2 == 0 else 1
            mid_deg = data.p_degree(i) - sum(data.weight(a) for a in letters[:k])
            for m in range(npb):
                if data.p_degree(m) == mid_deg:
                    left = NcdgGenerator(i, letters[:k], m)
                    right = NcdgGenerator(m, letters[k:], j)
                    add(gen_word(left) + gen_word(right), sign)
        images[g] = FreeAlgebraElement(alg, {w: v for w, v in terms.items() if v})
    return NcdgDifferential(data, images, alg)


@dataclass(frozen=True)
class QSquaredVerdict:
    ok: bool
    generator: str | None = None
    residue: FreeAlgebraElement | None = None
    checked: int = 0
    failures: int = 0

    def to_json(self) -> dict:
        out: dict = {"ok": self.ok}
        if not self.ok:
            out["witness"] = {"generator": self.generator, "residue": self.residue.to_json()}
        return out


def check_q_squared(data: NcdgData, budget: int = DEFAULT_BUDGET) -> QSquaredVerdict:
    """Apply Q twice to every generator; ok iff every result is exactly zero.

    The witness is the first failing generator in sorted order.
    """
    q = build_q(data, budget)
    first = None
    failures = 0
    gens = data.generators()
    for g in gens:
        res = q.apply(q[g])
        if res:
            failures += 1
            if first is None:
                first = (data.generator_name(g), res)
    if first is None:
        return QSquaredVerdict(True, checked=len(gens))
    return QSquaredVerdict(False, first[0], first[1], len(gens), failures)


def h0_ideal_generators(data: NcdgData) -> list[FreeAlgebraElement]:
    """Nonzero Q0 images of the length-2 generators, as elements of R."""
    out = []
    for g in data.generators():
        if g.n != 2:
            continue
        rel = mu_hat_entry(data, g.letters[0], g.letters[1], g.head, g.tail)
        if rel and rel not in out:
            out.append(rel)
    return out


# abelianized checks ----------------------------------------------------------


def _abelianize(x: FreeAlgebraElement) -> dict[tuple[int, ...], Fraction]:
    n = len(x.gens)
    out: dict[tuple[int, ...], Fraction] = {}
    for w, c in x.items():
        e = [0] * n
        for i in w:
            e[i] += 1
        key = tuple(e)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def _monomials(weights: Sequence[int], max_weight: int) -> list[tuple[int, ...]]:
    n = len(weights)
    out = []

    def rec(i: int, prefix: list[int], left: int):
        if i == n:
            out.append(tuple(prefix))
            return
        w = weights[i]
        for e in range(left // w + 1):
            rec(i + 1, prefix + [e], left - e * w)

    rec(0, [], max_weight)
    return out


def h0_abelian_slice_dim(data: NcdgData, weights: Sequence[int], max_weight: int,
                         slack: int = 2) -> int:
    """dim of the image of poly_{<=max_weight} in R^ab / J^ab.

    R^ab is the polynomial ring on the R generators with the given positive
    weights and J^ab is generated by the abelianized H0 relations. The
    intersection J^ab with poly_{<=max_weight} is approximated from below by
    the span of monomial multiples of the relations up to weight
    ``max_weight + slack``, so the returned number can only drop as the
    slack grows.
    """
    if len(weights) != len(data.r_gens) or any(w < 1 for w in weights):
        raise ValueError("need one positive weight per R generator")
    rels = [_abelianize(r) for r in h0_ideal_generators(data)]
    top = max_weight + slack

    def wt(e):
        return sum(a * b for a, b in zip(e, weights))

    monos = _monomials(weights, top)
    # low-weight monomials get small column indices so pivots land high first
    monos.sort(key=lambda e: (wt(e), e))
    col = {e: i for i, e in enumerate(monos)}
    boundary = sum(1 for e in monos if wt(e) <= max_weight)
    ech = RowEchelon()
    for r in rels:
        rw = max(wt(e) for e in r)
        for m in _monomials(weights, top - rw):
            ech.add({col[tuple(a + b for a, b in zip(m, e))]: c for e, c in r.items()})
    inside = sum(1 for p in ech.rows if p < boundary)
    return boundary - inside


def abelianization_counts(data: NcdgData, max_len: int = 3,
                          budget: int = DEFAULT_BUDGET) -> list[tuple[int, int, int, int]]:
    """Rows (word length, degree, dim of the abelianized algebra, dim of S(V)).

    The first count comes from row reduction in the free algebra (gr^0 of the
    commutator filtration); the second from the symmetric-power character of
    V = R-generators + dg generators, one torus variable per degree.
    """
    gens = data.algebra_gens()
    degree_values = sorted(set(gens.degrees))
    slot = {d: i for i, d in enumerate(degree_values)}
    nv = len(degree_values)
    even = Character.zero(nv)
    odd = Character.zero(nv)
    for d in gens.degrees:
        v = Character.variable(slot[d], nv)
        if d % 2:
            odd = odd + v
        else:
            even = even + v
    v_char = SuperChar(even, odd)
    rows = []
    for k in range(max_len + 1):
        sym = sym_power(k, v_char)
        predicted: dict[int, int] = {}
        for part in (sym.even, sym.odd):
            for e, c in part.items():
                deg = sum(a * b for a, b in zip(e, degree_values))
                predicted[deg] = predicted.get(deg, 0) + c
        possible = {sum(c) for c in combinations_with_replacement(degree_values, k)} if k else {0}
        for deg in sorted(possible | set(predicted)):
            engine = nc_filtration_dims(gens, k, 0, budget=budget, lower_degree=deg).dims[0]
            rows.append((k, deg, engine, predicted.get(deg, 0)))
    return rows


# Euler characteristic of the x^n example ---------------------------------------


def euler_char_xn(n: int, weight_cutoff: int) -> int:
    """Euler characteristic of C[x] y -> C[x], y -> x^n, summed weight by weight.

    x has weight 1 and y weight n. The map is read off the dg differential of
    the x^n instance. Raises ValueError when the contributions have not been
    zero for at least n + 1 consecutive weights at the cutoff.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if weight_cutoff < 1:
        raise ValueError("weight_cutoff must be >= 1")
    data = xn_instance(n)
    q = build_q(data)
    (y,) = data.generators()
    qy = _abelianize(q[y])
    total = 0
    zero_run = 0
    for w in range(weight_cutoff + 1):
        dim0 = 1                        # x^w
        dim1 = 1 if w >= n else 0       # x^{w-n} y
        ech = RowEchelon()
        if dim1:
            # x^{w-n} * Q(y), keeping the x^w coefficient
            image = {0: c for e, c in qy.items() if (w - n) + e[0] == w}
            ech.add(image)
        rank = ech.rank
        contrib = (dim0 - rank) - (dim1 - rank)
        total += contrib
        zero_run = zero_run + 1 if contrib == 0 else 0
    if zero_run < n + 1:
        raise ValueError(f"weight cutoff {weight_cutoff} too small to see stabilization")
    return total


# worked instances -----------------------------------------------------------------


def _r_elem(gens: GradedGenSet, spec) -> FreeAlgebraElement:
    """Element from an int, a generator name, or a list of (coef, [names])."""
    if isinstance(spec, int):
        return FreeAlgebraElement.scalar(gens, spec)
    if isinstance(spec, str):
        return FreeAlgebraElement.generator(gens, spec)
    return FreeAlgebraElement(gens, {tuple(gens.index(x) for x in w): c for c, w in spec})


def p2_instance(n_max: int = DEFAULT_N_MAX) -> NcdgData:
    """The affine chart of P^2 as a moduli space of three-vertex quiver data."""
    r = GradedGenSet(("x1", "x2", "y1", "y2", "z11", "z12", "z13", "z22", "z23", "z33"),
                     (0,) * 10)
    zs = [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]
    m_basis = tuple([(f"x{a}", 1) for a in (1, 2, 3)] + [(f"z{i}{j}", 2) for i, j in zs])
    zidx = {ij: 3 + t for t, ij in enumerate(zs)}
    theta = {}
    for a in range(3):
        for b in range(3):
            key = (min(a, b) + 1, max(a, b) + 1)
            theta[(a, b)] = {zidx[key]: Fraction(1)}
    p_basis = (("p0", 0), ("p1", 1), ("p2", 2))
    e_hat = {}
    for a in range(3):
        x = _r_elem(r, f"x{a + 1}") if a < 2 else _r_elem(r, 1)
        y = _r_elem(r, f"y{a + 1}") if a < 2 else _r_elem(r, 1)
        e_hat[a] = {(1, 0): x, (2, 1): y}
    for (i, j), t in zidx.items():
        e_hat[t] = {(2, 0): _r_elem(r, f"z{i}{j}")}
    return NcdgData(r, m_basis, theta, p_basis, e_hat, n_max)


def p2_expected_relations() -> list[FreeAlgebraElement]:
    """z_kl - y_k x_l for 1 <= k, l <= 3 with z_kl = z_lk and x3 = y3 = 1."""
    r = p2_instance().r_gens
    out = []
    for k in (1, 2, 3):
        for l in (1, 2, 3):
            z = _r_elem(r, f"z{min(k, l)}{max(k, l)}")
            y = _r_elem(r, f"y{k}") if k < 3 else _r_elem(r, 1)
            x = _r_elem(r, f"x{l}") if l < 3 else _r_elem(r, 1)
            out.append(z - y * x)
    return out


def xn_instance(n: int, n_max: int = DEFAULT_N_MAX) -> NcdgData:
    """R = C<x>, one generator y of degree -1 with Q(y) = x^n."""
    r = GradedGenSet(("x",), (0,))
    m_basis = (("a", 1), ("b", 2))
    theta = {(0, 0): {1: Fraction(1)}}
    p_basis = (("p0", 0), ("p2", 2))
    e_hat = {1: {(1, 0): FreeAlgebraElement.word(r, (0,) * n)}}
    return NcdgData(r, m_basis, theta, p_basis, e_hat, n_max)


# random instances -------------------------------------------------------------------

_MODELS = ("powers", "xyz", "exterior", "truncated", "weight_two")


def _model(kind: str, rng: random.Random):
    """(m_basis, theta) of a small associative graded algebra, randomly rescaled."""
    if kind == "powers":           # x, x^2, x^3 in C[x]/x^4
        basis = [("x1", 1), ("x2", 2), ("x3", 3)]
        raw = {(0, 0): {1: 1}, (0, 1): {2: 1}, (1, 0): {2: 1}}
    elif kind == "xyz":            # two weight-one letters multiplying into z
        basis = [("x", 1), ("y", 1), ("z", 2)]
        raw = {}
        for a in (0, 1):
            for b in (0, 1):
                c = rng.randint(-2, 2)
                if c:
                    raw[(a, b)] = {2: c}
    elif kind == "exterior":       # Lambda(x, y)
        basis = [("x", 1), ("y", 1), ("xy", 2)]
        raw = {(0, 1): {2: 1}, (1, 0): {2: -1}}
    elif kind == "truncated":      # C[x]/x^3
        basis = [("x1", 1), ("x2", 2)]
        raw = {(0, 0): {1: 1}}
    elif kind == "weight_two":     # C[u]/u^3 with u of weight 2
        basis = [("u1", 2), ("u2", 4)]
        raw = {(0, 0): {1: 1}}
    else:
        raise ValueError(f"unknown model {kind!r}")
    scale = [Fraction(rng.choice([1, 1, 2, -1, 3])) for _ in basis]
    # new basis b_i = scale_i * old_i
    theta = {}
    for (a, b), out in raw.items():
        theta[(a, b)] = {c: Fraction(v) * scale[a] * scale[b] / scale[c] for c, v in out.items()}
    return tuple(basis), theta


def _random_r_element(r: GradedGenSet, rng: random.Random, nonzero: bool = False) -> FreeAlgebraElement:
    while True:
        terms = {}
        for _ in range(rng.randint(1, 2)):
            w = tuple(rng.randrange(len(r)) for _ in range(rng.randint(0, 2)))
            terms[w] = terms.get(w, 0) + rng.choice([-2, -1, 1, 2])
        el = FreeAlgebraElement(r, terms)
        if not nonzero and rng.random() < 0.2:
            return FreeAlgebraElement.zero(r)
        if el:
            return el


def _random_p_basis(rng: random.Random, min_gap: int) -> tuple[tuple[str, int], ...]:
    while True:
        size = rng.choice([2, 3, 3])
        degs = sorted(rng.sample(range(5), size))
        if degs[-1] - degs[0] >= min_gap:
            return tuple((f"p{d}", d) for d in degs)


def _random_e_hat(r, m_basis, p_basis, rng, force: set[int] = frozenset()):
    e_hat = {}
    for a, (_, w) in enumerate(m_basis):
        mat = {}
        for i, (_, di) in enumerate(p_basis):
            for k, (_, dk) in enumerate(p_basis):
                if di == dk + w:
                    el = _random_r_element(r, rng, nonzero=a in force)
                    if el:
                        mat[(i, k)] = el
        e_hat[a] = mat
    return e_hat


def random_ncdg_data(rng: random.Random, n_max: int = DEFAULT_N_MAX) -> NcdgData:
    """A random instance with associative theta, |P basis| <= 3, |m basis| <= 3.

    Only instances with at least one generator of length >= 3 are returned.
    """
    r = GradedGenSet(("r1", "r2"), (0, 0))
    while True:
        kind = rng.choice(_MODELS)
        m_basis, theta = _model(kind, rng)
        p_basis = _random_p_basis(rng, 3)
        data = NcdgData(r, m_basis, theta, p_basis,
                        _random_e_hat(r, m_basis, p_basis, rng), n_max)
        # resample instances too small to exercise Q1
        if any(g.n >= 3 for g in data.generators()):
            return data


def mutant_ncdg_data(rng: random.Random, n_max: int = DEFAULT_N_MAX) -> NcdgData:
    """C[x]/x^4 with one product entry rescaled, so theta is not associative."""
    m_basis, theta = _model("powers", rng)
    key = rng.choice([(0, 1), (1, 0)])
    factor = rng.choice([Fraction(2), Fraction(-1), Fraction(3), Fraction(1, 2)])
    theta = {k: dict(v) for k, v in theta.items()}
    theta[key] = {c: v * factor for c, v in theta[key].items()}
    while True:
        p_basis = _random_p_basis(rng, 3)
        degs = [d for _, d in p_basis]
        if any(a - b == 3 for a in degs for b in degs):
            break
    r = GradedGenSet(("r1", "r2"), (0, 0))
    e_hat = _random_e_hat(r, m_basis, p_basis, rng, force={2})
    return NcdgData(r, m_basis, theta, p_basis, e_hat, n_max)
