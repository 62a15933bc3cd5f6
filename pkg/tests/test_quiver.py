import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncktheory.errors import SchemaError
from ncktheory.quiver import (PRESENTATION_MODELS, GradedAlgebraPresentation, Rep, build_quiver,
                              mc_residual, model_presentation, module_rep, p2_point_rep,
                              p2_presentation, presentation_report, random_presentation,
                              random_rep, relation_violations, rep_to_lelement,
                              satisfies_relations, thin_stability)

PRES = p2_presentation()
QUIVER = build_quiver(PRES)
Z11 = QUIVER.arrow_index(0, (2, 0))


def test_p2_quiver_shape():
    assert QUIVER.vertices == (0, 1, 2)
    assert [QUIVER.arrow_count(0, 1), QUIVER.arrow_count(1, 2), QUIVER.arrow_count(0, 2)] == [3, 3, 6]
    assert len(QUIVER.relations) == 9


def test_short_range_has_no_relations():
    pres = model_presentation("ypoly", 3, 4, rescale=False)
    quiver = build_quiver(pres)
    assert quiver.relations == ()
    assert quiver.arrow_count(3, 4) == 2


def test_single_vertex_is_stable():
    pres = GradedAlgebraPresentation(1, 1, {}, {})
    quiver = build_quiver(pres)
    rep = Rep.zero(quiver, (1,))
    assert thin_stability(rep) == "stable"


def test_point_rep():
    rep = p2_point_rep(QUIVER)
    assert satisfies_relations(rep, QUIVER)
    assert mc_residual(rep_to_lelement(rep), PRES).is_zero()
    assert thin_stability(rep) == "stable"


def test_perturbed_z11():
    rep = p2_point_rep(QUIVER)
    eps = Fraction(1, 7)
    bumped = rep.with_matrix(Z11, [[rep.matrix(Z11)[0][0] + eps]])
    assert not satisfies_relations(bumped, QUIVER)
    assert len(relation_violations(bumped, QUIVER)) == 1
    entries = mc_residual(rep_to_lelement(bumped), PRES).nonzero_entries()
    assert len(entries) == 1
    assert abs(entries[0][-1]) == eps


def test_zero_rep():
    rep = Rep.zero(QUIVER, (1, 1, 1))
    assert satisfies_relations(rep, QUIVER)
    assert mc_residual(rep_to_lelement(rep), PRES).is_zero()
    assert thin_stability(rep) == "unstable"


def test_stability_labels():
    # only the 0 -> 2 arrows nonzero: {2} and {0, 2} are the subreps, {0, 2} ties
    rep = Rep.zero(QUIVER, (1, 1, 1)).with_matrix(Z11, [[1]])
    assert thin_stability(rep) == "semistable-only"
    with pytest.raises(ValueError):
        thin_stability(Rep.zero(QUIVER, (2, 1, 1)))


@pytest.mark.parametrize("kind", PRESENTATION_MODELS)
def test_module_reps_solve_mc(kind):
    rng = random.Random(PRESENTATION_MODELS.index(kind))
    q = 2 if kind == "random_bilinear" else 3
    pres = model_presentation(kind, 0, q, rng)
    quiver = build_quiver(pres)
    for _ in range(3):
        rep = module_rep(quiver, [rng.randint(-1, q) for _ in range(2)], rng)
        assert satisfies_relations(rep, quiver)
        assert mc_residual(rep_to_lelement(rep), pres).is_zero()


@given(st.integers(0, 10**6))
def test_relations_iff_mc(seed):
    rng = random.Random(seed)
    pres = random_presentation(rng)
    quiver = build_quiver(pres)
    rep = random_rep(quiver, rng)
    assert satisfies_relations(rep, quiver) == mc_residual(rep_to_lelement(rep), pres).is_zero()


def test_non_associative_theta_rejected():
    names = {1: ("x",), 2: ("xx",), 3: ("xxx",)}
    theta = {((1, 0), (1, 0)): {(2, 0): Fraction(1)},
             ((1, 0), (2, 0)): {(3, 0): Fraction(1)},
             ((2, 0), (1, 0)): {(3, 0): Fraction(2)}}
    with pytest.raises(ValueError):
        GradedAlgebraPresentation(0, 3, names, theta)


def test_presentation_json_round_trip():
    for pres in (PRES, random_presentation(random.Random(5))):
        again = GradedAlgebraPresentation.from_json(pres.to_json())
        assert again.to_json() == pres.to_json()
        assert build_quiver(again).to_json() == build_quiver(pres).to_json()


def test_rep_json_round_trip_and_errors():
    rep = p2_point_rep(QUIVER, Fraction(1, 2), 5)
    again = Rep.from_json(QUIVER, rep.to_json())
    assert again.to_json() == rep.to_json()
    bad = rep.to_json()
    bad["matrices"] = bad["matrices"][:-1]
    with pytest.raises(SchemaError):
        Rep.from_json(QUIVER, bad)
    bad = rep.to_json()
    bad["matrices"][0] = [[1, 2]]
    with pytest.raises(SchemaError):
        Rep.from_json(QUIVER, bad)


def test_report():
    out = presentation_report(PRES, p2_point_rep(QUIVER))
    assert out["rep"]["stability"] == "stable"
    assert out["rep"]["satisfies_relations"] is True


@given(st.integers(0, 10**6))
def test_arrow_count_law(seed):
    pres = random_presentation(random.Random(seed))
    quiver = build_quiver(pres)
    dims = pres.dims
    for i in quiver.vertices:
        for j in quiver.vertices:
            assert quiver.arrow_count(i, j) == (dims.get(j - i, 0) if j > i else 0)


def test_relation_completeness_on_module_reps():
    rng = random.Random(17)
    for _ in range(20):
        pres = random_presentation(rng)
        quiver = build_quiver(pres)
        rep = module_rep(quiver, [rng.randint(pres.p - 1, pres.q) for _ in range(rng.randint(1, 2))], rng)
        assert relation_violations(rep, quiver) == []


def test_p2_random_reps_relations_iff_mc():
    rng = random.Random(23)
    outcomes = set()
    for t in range(50):
        rep = module_rep(QUIVER, [rng.randint(-1, 2)], rng) if t % 2 else random_rep(QUIVER, rng)
        a = satisfies_relations(rep, QUIVER)
        assert a == mc_residual(rep_to_lelement(rep), PRES).is_zero()
        outcomes.add(a)
    assert outcomes == {True, False}
