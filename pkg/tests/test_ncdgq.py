import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncktheory.errors import SchemaError
from ncktheory.freealg import FreeAlgebraElement, GradedGenSet
from ncktheory.ncdgq import (NcdgData, abelianization_counts, build_q, check_q_squared,
                             euler_char_xn, h0_abelian_slice_dim, h0_ideal_generators,
                             mu_hat_entry, mutant_ncdg_data, p2_expected_relations, p2_instance,
                             random_ncdg_data, xn_instance)

P2 = p2_instance()
Q_P2 = build_q(P2)


def flat_instance():
    """e_hat(a)^2 = e_hat(a^2) on the nose, so mu_hat vanishes."""
    r = GradedGenSet(("x",), (0,))
    x = FreeAlgebraElement.generator(r, "x")
    m_basis = (("a", 1), ("b", 2))
    theta = {(0, 0): {1: Fraction(1)}}
    p_basis = (("p0", 0), ("p1", 1), ("p2", 2))
    e_hat = {0: {(1, 0): x, (2, 1): x}, 1: {(2, 0): x * x}}
    return NcdgData(r, m_basis, theta, p_basis, e_hat)


def test_xn_differential():
    data = xn_instance(4)
    q = build_q(data)
    (g,) = data.generators()
    assert data.generator_name(g) == "[p2|a,a|p0]"
    assert str(q[g]) == "x*x*x*x"
    assert [str(r) for r in h0_ideal_generators(data)] == ["x*x*x*x"]


def test_p2_differential_and_relations():
    r = P2.r_gens

    def elem(data):
        return FreeAlgebraElement.from_json(r, data)

    q = {k: elem(v) for k, v in Q_P2.to_json().items()}
    assert q["[p2|x1,x2|p0]"] == elem([[1, ["z12"]], [-1, ["y1", "x2"]]])
    assert q["[p2|x2,x1|p0]"] == elem([[1, ["z12"]], [-1, ["y2", "x1"]]])
    assert q["[p2|x3,x3|p0]"] == elem([[1, ["z33"]], [-1, []]])
    rels = h0_ideal_generators(P2)
    expected = p2_expected_relations()
    assert len(rels) == len(expected) == 9
    assert all(r in rels for r in expected)


def test_flat_instance_has_no_relations():
    data = flat_instance()
    q = build_q(data)
    for g in data.generators():
        if g.n == 2:
            assert not q[g]
    assert h0_ideal_generators(data) == []
    assert not mu_hat_entry(data, 0, 0, 2, 0)


def test_q_squared_p2():
    verdict = check_q_squared(P2)
    assert verdict.ok and verdict.to_json() == {"ok": True}
    assert verdict.checked == len(P2.generators())


@pytest.mark.parametrize("seed", range(10))
def test_q_squared_random(seed):
    data = random_ncdg_data(random.Random(seed))
    assert not data.associator_defects()
    assert any(g.n >= 3 for g in data.generators())
    assert check_q_squared(data).ok


@pytest.mark.parametrize("seed", range(3))
def test_q_squared_mutants_are_caught(seed):
    data = mutant_ncdg_data(random.Random(seed))
    assert data.associator_defects()
    verdict = check_q_squared(data)
    assert not verdict.ok
    witness = verdict.to_json()["witness"]
    assert witness["generator"] and witness["residue"]


def test_q_has_degree_one():
    for data in (P2, random_ncdg_data(random.Random(3))):
        q = build_q(data)
        for g in data.generators():
            img = q[g]
            if img:
                assert img.is_homogeneous() and img.degree() == g.degree + 1


@st.composite
def p2_elements(draw):
    gens = Q_P2.gens
    out = FreeAlgebraElement.zero(gens)
    for _ in range(draw(st.integers(1, 3))):
        word = draw(st.lists(st.integers(0, len(gens) - 1), min_size=1, max_size=3))
        out = out + FreeAlgebraElement.word(gens, word, draw(st.integers(-2, 2)))
    return out


@given(p2_elements(), p2_elements())
def test_leibniz_and_square_zero_on_products(a, b):
    q = Q_P2
    assert not q.apply(q.apply(a * b))
    for pa in a.homogeneous_parts().values():
        sign = -1 if pa.degree() % 2 else 1
        assert q.apply(pa * b) == q.apply(pa) * b + sign * (pa * q.apply(b))


def test_json_round_trip_and_errors():
    for data in (P2, xn_instance(3), random_ncdg_data(random.Random(1))):
        again = NcdgData.from_json(data.to_json())
        assert again.to_json() == data.to_json()
        assert build_q(again).to_json() == build_q(data).to_json()
    bad = P2.to_json()
    bad["theta"] = [[0, 1, 0, 1]]
    with pytest.raises(SchemaError):
        NcdgData.from_json(bad)
    with pytest.raises(SchemaError):
        NcdgData.from_json({"r_gens": []})


def test_invalid_grading_rejected():
    r = GradedGenSet(("x",), (0,))
    x = FreeAlgebraElement.generator(r, "x")
    with pytest.raises(ValueError):
        NcdgData(r, (("a", 1),), {}, (("p0", 0), ("p1", 1)), {0: {(0, 1): x}})


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_euler_characteristic(n):
    assert euler_char_xn(n, 10 * n) == n


def test_euler_needs_room_to_stabilize():
    with pytest.raises(ValueError):
        euler_char_xn(5, 4)


def test_p2_h0_abelian_slice():
    # the relations force y = x and z = y x, leaving C[x1, x2]: 1 + 2 + 3 monomials
    weights = [1, 1, 1, 1] + [2] * 6
    assert h0_abelian_slice_dim(P2, weights, 2) == 6


def test_abelianization_counts_agree():
    for data in (P2, random_ncdg_data(random.Random(2))):
        for _k, _deg, engine, symmetric in abelianization_counts(data):
            assert engine == symmetric
