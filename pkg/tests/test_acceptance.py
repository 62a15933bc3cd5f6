"""Acceptance criteria 1-9, each timed against its runtime limit.

Run under pytest (one PASS/FAIL line per criterion is printed even without
``-s``) or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import time

import pytest

from ncktheory.charring import (Character, RationalCharacter, SuperChar, ext_power, k_class,
                                rational_mul, schur_super, schur_via_power_sums, sym_power)
from ncktheory.freealg import GradedGenSet, nc_filtration_dims, poisson_envelope_dims
from ncktheory.freelie import lie_bracket_span_oracle, lie_char
from ncktheory.ncdgq import (check_q_squared, euler_char_xn, mutant_ncdg_data, p2_instance,
                             random_ncdg_data)
from ncktheory.ncvirt import ObstructionTheory, ncvir_class, s_l_plus_truncated
from ncktheory.oracles import (ext_projector, schur_projector_superchar, superchar_from_basis,
                               sym_projector, witt_dimension)
from ncktheory.partition import partitions_of
from ncktheory.presets import load_preset, run_c3
from ncktheory.quiver import (Rep, build_quiver, mc_residual, p2_point_rep, p2_presentation,
                              rep_to_lelement, satisfies_relations, thin_stability)
from ncktheory.sampling import random_superchars

SEED = 20240611
RANDOM_E = dict(max_nvars=3, max_rank=4, exp_range=3)


def _s(lam, e):
    return schur_super(lam, e).k_class()


def criterion_1():
    for e in random_superchars(SEED, 20, **RANDOM_E):
        if s_l_plus_truncated(e, 1) != 1 + _s((1, 1), e):
            return False, f"d=1 fails for {e}"
    return True, "20 random e"


def criterion_2():
    for e in random_superchars(SEED, 20, **RANDOM_E):
        rhs = 1 + _s((1, 1), e) + _s((2, 1), e) + _s((2, 2), e) + _s((1, 1, 1, 1), e)
        if s_l_plus_truncated(e, 2) != rhs:
            return False, f"d=2 fails for {e}"
    return True, "20 random e"


def criterion_3():
    report = run_c3(1)
    data = load_preset("c3")
    ot = ObstructionTheory.from_json(data["obstruction_theory"])
    target = rational_mul(RationalCharacter.from_json(data["target"]["factor"]),
                          Character.from_json(data["target"]["bracket"]))
    direct = ncvir_class(ot, 1) == target
    ok = direct and report["match"] and not report["alternative"]["match"]
    return ok, (f"display match {direct}, alternative odd part "
                f"{report['alternative']['odd']} match {report['alternative']['match']}")


def criterion_4():
    for n in (1, 2, 3, 5):
        for rank in (0, 1, 2):
            e = SuperChar(Character.constant(rank, 0), Character.constant(rank, 0))
            ot = ObstructionTheory(e, RationalCharacter.from_character(Character.constant(n, 0)))
            for d in range(4):
                if ncvir_class(ot, d) != RationalCharacter.from_character(Character.constant(n, 0)):
                    return False, f"ncvir n={n} rank={rank} d={d}"
        chi = euler_char_xn(n, 10 * n)
        if chi != n:
            return False, f"euler characteristic {chi} for n={n}"
    return True, "n in 1,2,3,5; d <= 3; euler = n"


def criterion_5():
    g = SuperChar(Character.constant(2, 0), Character.zero(0))
    dims = [lie_char(n, g).dimension() for n in range(1, 6)]
    witt = [witt_dimension(n, 2) for n in range(1, 6)]
    oracle = [lie_bracket_span_oracle(n, 2, 0) for n in range(1, 6)]
    odd = SuperChar(Character.zero(0), Character.constant(1, 0))
    odd_dims = [lie_char(n, odd).dimension() for n in range(1, 6)]
    odd_oracle = [lie_bracket_span_oracle(n, 0, 1) for n in range(1, 6)]
    ok = dims == witt == oracle == [2, 1, 2, 3, 6] and odd_dims == odd_oracle == [1, 1, 0, 0, 0]
    return ok, f"even {dims} witt {witt} oracle {oracle}; odd {odd_dims}"


def criterion_6():
    count = 0
    for ne in range(4):
        for no in range(4 - ne):
            if ne + no == 0:
                continue
            for even_deg, odd_deg in ((0, -1), (-2, 1)):
                gens = GradedGenSet.mixed(ne, no, even_deg, odd_deg)
                for n in range(6):
                    a = nc_filtration_dims(gens, n, n)
                    b = poisson_envelope_dims(gens, n, n)
                    count += 1
                    if a.dims != b.dims:
                        return False, f"({ne} even, {no} odd) n={n}: {a.dims} vs {b.dims}"
    return True, f"{count} (generator set, tensor degree) pairs"


def criterion_7():
    if not check_q_squared(p2_instance(4)).ok:
        return False, "P^2 instance"
    rng = random.Random(SEED)
    for t in range(10):
        v = check_q_squared(random_ncdg_data(random.Random(rng.randrange(2 ** 32))))
        if not v.ok:
            return False, f"random instance {t} at {v.generator}"
    for t in range(3):
        v = check_q_squared(mutant_ncdg_data(random.Random(rng.randrange(2 ** 32))))
        if v.ok:
            return False, f"mutant {t} passed"
    return True, "P^2 ok, 10 random ok, 3 mutants caught"


def criterion_8():
    pres = p2_presentation()
    quiver = build_quiver(pres)
    counts = (quiver.arrow_count(0, 1), quiver.arrow_count(0, 2), quiver.arrow_count(1, 2))
    rep = p2_point_rep(quiver)
    relations = satisfies_relations(rep, quiver)
    residual = mc_residual(rep_to_lelement(rep), pres).is_zero()
    all_nonzero = all(m[0][0] != 0 for m in rep.matrices)
    generic = Rep.zero(quiver, (1, 1, 1))
    for a in range(len(quiver.arrows)):
        generic = generic.with_matrix(a, [[a + 1]])
    stable = thin_stability(rep) == thin_stability(generic) == "stable"
    ok = (counts == (3, 6, 3) and len(quiver.relations) == 9 and relations and residual
          and all_nonzero and stable)
    return ok, (f"arrows {counts}, relations {len(quiver.relations)}, point rep relations "
                f"{relations} residual zero {residual}, stable {stable}")


def criterion_9():
    rng = random.Random(SEED)
    # (a) hook expansion against Jacobi-Trudi in power sums
    for e in random_superchars(SEED + 1, 12, max_nvars=2, max_rank=3, exp_range=2):
        for n in range(6):
            for lam in partitions_of(n):
                if schur_super(lam, e) != schur_via_power_sums(lam, e):
                    return False, f"(a) lambda={list(lam)}"
    # (b) closed forms against symmetrizer projectors
    for dim in range(1, 5):
        for n_odd in range(dim + 1):
            basis = [(tuple(rng.randint(-2, 2) for _ in range(2)), int(i < n_odd))
                     for i in range(dim)]
            g = superchar_from_basis(basis, 2)
            for k in range(4):
                if sym_projector(k, basis, 2) != sym_power(k, g):
                    return False, f"(b) sym^{k} basis={basis}"
                if ext_projector(k, basis, 2) != ext_power(k, g):
                    return False, f"(b) ext^{k} basis={basis}"
                for lam in partitions_of(k):
                    if schur_projector_superchar(lam, basis, 2) != schur_super(lam, g):
                        return False, f"(b) lambda={list(lam)} basis={basis}"
    # (c) adding an acyclic pair (h, h) leaves every K-class unchanged
    for e in random_superchars(SEED + 2, 8, max_nvars=2, max_rank=2, exp_range=2):
        h = random_superchars(rng.randrange(10 ** 6), 1, nvars=e.nvars, max_rank=2, exp_range=2)[0].even
        padded = e + SuperChar(h, h)
        for n in range(6):
            for lam in partitions_of(n):
                if k_class(schur_super(lam, padded)) != k_class(schur_super(lam, e)):
                    return False, f"(c) lambda={list(lam)}"
    return True, "(a) |lambda| <= 5, (b) dim <= 4 k <= 3, (c) |lambda| <= 5"


CRITERIA = [
    (1, "truncated S L+ closed form, d = 1", 5.0, criterion_1),
    (2, "truncated S L+ closed form, d = 2", 30.0, criterion_2),
    (3, "equivariant C^3 point", 1.0, criterion_3),
    (4, "rank-zero classes and x^n Euler characteristic", None, criterion_4),
    (5, "free Lie dimensions", 10.0, criterion_5),
    (6, "NC filtration vs Poisson envelope", 60.0, criterion_6),
    (7, "Q^2 = 0", 60.0, criterion_7),
    (8, "P^2 quiver", 1.0, criterion_8),
    (9, "oracle equivalences", 120.0, criterion_9),
]


def evaluate(number, label, limit, fn):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    in_time = limit is None or elapsed < limit
    passed = ok and in_time
    budget = "no limit" if limit is None else f"limit {limit:g}s"
    line = (f"criterion {number}: {'PASS' if passed else 'FAIL'}  {label}  "
            f"[{elapsed:.3f}s, {budget}]  {detail}")
    return passed, ok, in_time, line


@pytest.mark.parametrize("number,label,limit,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, label, limit, fn, capsys):
    passed, ok, in_time, line = evaluate(number, label, limit, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert in_time, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, _, _, line in results:
        print(line)
    raise SystemExit(0 if all(r[0] for r in results) else 1)
