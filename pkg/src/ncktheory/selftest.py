"""Seeded property suite run by ``ncktheory selftest``.

Each check returns ``(name, ok, detail)``. The seed fixes every random
input, so two runs with the same seed produce identical reports.
"""

from __future__ import annotations

import random
from typing import Callable

from .charring import Character, SuperChar, k_class, schur_super, schur_via_power_sums
from .freealg import GradedGenSet, nc_filtration_dims, poisson_envelope_dims
from .freelie import lie_bracket_span_oracle, lie_char, lie_char_table, pbw_reconstruct
from .ncdgq import check_q_squared, mutant_ncdg_data, p2_instance, random_ncdg_data
from .ncvirt import s_l_plus_truncated
from .oracles import lr_tableau_count, schur_projector_superchar, superchar_from_basis, witt_dimension
from .partition import lr_coeff, partitions_of
from .presets import run_c3, run_p2, run_xn
from .quiver import (build_quiver, mc_residual, module_rep, p2_presentation, random_presentation,
                     random_rep, rep_to_lelement, satisfies_relations)
from .sampling import random_superchar

Check = tuple[str, bool, str]


def _virform(rng: random.Random) -> Check:
    for _ in range(20):
        e = random_superchar(rng)
        s = lambda lam: schur_super(lam, e).k_class()
        d1 = 1 + s((1, 1))
        d2 = d1 + s((2, 1)) + s((2, 2)) + s((1, 1, 1, 1))
        if s_l_plus_truncated(e, 1) != d1 or s_l_plus_truncated(e, 2) != d2:
            return "truncated S L+ at d=1,2", False, f"fails for e = {e}"
    return "truncated S L+ at d=1,2", True, "20 random e"


def _schur_routes(rng: random.Random) -> Check:
    for _ in range(5):
        g = random_superchar(rng, max_rank=3, exp_range=2)
        for n in range(6):
            for lam in partitions_of(n):
                if schur_super(lam, g) != schur_via_power_sums(lam, g):
                    return "two-route Schur", False, f"lambda={list(lam)} g={g}"
    return "two-route Schur", True, "|lambda| <= 5, 5 random g"


def _projectors(rng: random.Random) -> Check:
    for _ in range(6):
        nv = rng.randint(1, 2)
        basis = [(tuple(rng.randint(-2, 2) for _ in range(nv)), rng.randint(0, 1))
                 for _ in range(rng.randint(1, 4))]
        g = superchar_from_basis(basis, nv)
        for k in range(4):
            for lam in partitions_of(k):
                if schur_projector_superchar(lam, basis, nv) != schur_super(lam, g):
                    return "projector oracle", False, f"lambda={list(lam)} basis={basis}"
    return "projector oracle", True, "dim <= 4, k <= 3"


def _acyclic(rng: random.Random) -> Check:
    for _ in range(3):
        g = random_superchar(rng, max_rank=2, exp_range=2)
        h = random_superchar(rng, nvars=g.nvars, max_rank=2, exp_range=2).even
        padded = g + SuperChar(h, h)
        for n in range(6):
            for lam in partitions_of(n):
                if k_class(schur_super(lam, padded)) != k_class(schur_super(lam, g)):
                    return "acyclic summand invariance", False, f"lambda={list(lam)}"
    return "acyclic summand invariance", True, "|lambda| <= 5"


def _lr(_rng: random.Random) -> Check:
    for n in range(6):
        for nu in partitions_of(n):
            for a in range(n + 1):
                for lam in partitions_of(a):
                    for mu in partitions_of(n - a):
                        if lr_coeff(lam, mu, nu) != lr_tableau_count(lam, mu, nu):
                            return "LR vs tableaux", False, f"{lam} {mu} {nu}"
    return "LR vs tableaux", True, "weight <= 5"


def _lie(_rng: random.Random) -> Check:
    g = SuperChar.from_parity(_rank(2), 0)
    dims = [lie_char(n, g).dimension() for n in range(1, 6)]
    witt = [witt_dimension(n, 2) for n in range(1, 6)]
    oracle = [lie_bracket_span_oracle(n, 2, 0) for n in range(1, 6)]
    odd = [lie_char(n, SuperChar.from_parity(_rank(1), 1)).dimension() for n in range(1, 6)]
    ok = dims == witt == oracle == [2, 1, 2, 3, 6] and odd == [1, 1, 0, 0, 0]
    table = lie_char_table(SuperChar(_rank(1), _rank(1)), 5)
    powers = [SuperChar.one(0)]
    for _ in range(5):
        powers.append(powers[-1] * table.g)
    ok = ok and pbw_reconstruct(table) == powers
    return "free Lie dimensions", ok, f"even {dims}, odd {odd}"


def _rank(n: int) -> Character:
    return Character.constant(n, 0)


def _filtration(_rng: random.Random) -> Check:
    for ne in range(4):
        for no in range(4 - ne):
            if ne + no == 0:
                continue
            gens = GradedGenSet.mixed(ne, no, -2, -1)
            for n in range(6):
                a = nc_filtration_dims(gens, n, n)
                b = poisson_envelope_dims(gens, n, n)
                if a.dims != b.dims:
                    return "NC filtration vs Poisson envelope", False, f"({ne},{no}) n={n}"
    return "NC filtration vs Poisson envelope", True, "total dim <= 3, n <= 5"


def _q_squared(rng: random.Random) -> Check:
    if not check_q_squared(p2_instance()).ok:
        return "Q^2 = 0", False, "P^2 instance"
    for t in range(10):
        v = check_q_squared(random_ncdg_data(random.Random(rng.randrange(2**32))))
        if not v.ok:
            return "Q^2 = 0", False, f"random instance {t}: {v.generator}"
    for t in range(3):
        if check_q_squared(mutant_ncdg_data(random.Random(rng.randrange(2**32)))).ok:
            return "Q^2 = 0", False, f"mutant {t} not detected"
    return "Q^2 = 0", True, "P^2, 10 random, 3 mutants detected"


def _quiver(rng: random.Random) -> Check:
    p2 = p2_presentation()
    seen = set()
    for t in range(50):
        pres = p2 if t % 2 == 0 else random_presentation(rng)
        quiver = build_quiver(pres)
        if t % 3 == 0:
            shifts = [rng.randint(pres.p - 1, pres.q) for _ in range(rng.randint(1, 2))]
            rep = module_rep(quiver, shifts, rng)
        else:
            rep = random_rep(quiver, rng)
        a = satisfies_relations(rep, quiver)
        b = mc_residual(rep_to_lelement(rep), pres).is_zero()
        if a != b:
            return "relations vs MC residual", False, f"rep {t}"
        seen.add(a)
    return "relations vs MC residual", True, f"50 reps, outcomes {sorted(seen)}"


def _presets(_rng: random.Random) -> Check:
    c3 = run_c3(1)
    ok = c3["match"] and not c3["alternative"]["match"]
    ok = ok and run_p2()["match"]
    ok = ok and all(run_xn(n, 3)["match"] for n in (1, 2, 3, 5))
    return "bundled examples", ok, "c3, p2, xn"


CHECKS: tuple[Callable[[random.Random], Check], ...] = (
    _virform, _schur_routes, _projectors, _acyclic, _lr, _lie, _filtration,
    _q_squared, _quiver, _presets,
)


def run_selftest(seed: int = 0) -> list[Check]:
    results = []
    for i, check in enumerate(CHECKS):
        # one independent stream per check, so adding a check never shifts the others
        results.append(check(random.Random(seed * 1000 + i)))
    return results
