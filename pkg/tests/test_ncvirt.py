import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import superchars
from ncktheory.charring import (Character, RationalCharacter, SuperChar, ext_power, rational_mul,
                                schur_super, sym_power)
from ncktheory.errors import SchemaError
from ncktheory.ncvirt import ObstructionTheory, ncvir_class, s_l_plus_series, s_l_plus_truncated
from ncktheory.presets import run_c3
from ncktheory.sampling import random_superchars


def s(lam, e):
    return schur_super(lam, e).k_class()


def test_degree_zero_is_one():
    e = SuperChar(Character.variable(0, 2), Character.variable(1, 2))
    assert s_l_plus_truncated(e, 0) == Character.constant(1, 2)


@pytest.mark.parametrize("e", random_superchars(11, 20, max_nvars=3, max_rank=4, exp_range=3))
def test_closed_forms_d1_d2(e):
    d1 = 1 + s((1, 1), e)
    assert s_l_plus_truncated(e, 1) == d1
    assert s_l_plus_truncated(e, 2) == d1 + s((2, 1), e) + s((2, 2), e) + s((1, 1, 1, 1), e)


@given(superchars(max_terms=2, exp_range=1))
def test_truncations_are_nested(e):
    series = s_l_plus_series(e, 3)
    running = Character.zero(e.nvars)
    for d in range(4):
        running = running + series[d].k_class()
        assert s_l_plus_truncated(e, d) == running


@pytest.mark.parametrize("n", [1, 2, 3, 5])
@pytest.mark.parametrize("rank", [0, 1, 3])
def test_rank_zero_constant_classes(n, rank):
    e = SuperChar(Character.constant(rank, 0), Character.constant(rank, 0))
    ot = ObstructionTheory(e, RationalCharacter.from_character(Character.constant(n, 0)))
    for d in range(6):
        assert ncvir_class(ot, d) == RationalCharacter.from_character(Character.constant(n, 0))


@given(superchars(max_terms=2, exp_range=1))
def test_ncvir_is_ovir_times_bracket(e):
    ovir = RationalCharacter(e.even + 2, e.odd + 1)
    ot = ObstructionTheory(e, ovir)
    for d in range(3):
        assert ncvir_class(ot, d) == rational_mul(ovir, s_l_plus_truncated(e, d))


def test_c3_example_and_alternative():
    report = run_c3(1)
    assert report["match"] is True
    assert report["alternative"]["match"] is False


def test_obstruction_theory_json():
    e = SuperChar(Character.variable(0, 1), Character.constant(2, 1))
    ot = ObstructionTheory(e, RationalCharacter.from_character(Character.constant(1, 1)))
    back = ObstructionTheory.from_json(ot.to_json())
    assert back.e == ot.e and back.ovir == ot.ovir
    assert ot.virtual_rank == -1


def test_obstruction_theory_schema_errors():
    with pytest.raises(SchemaError):
        ObstructionTheory.from_json({"e": {}})
    good = {"even": {"nvars": 1, "terms": []}, "odd": {"nvars": 1, "terms": []}}
    one = {"nvars": 2, "terms": [[[0, 0], 1]]}
    with pytest.raises(SchemaError):
        ObstructionTheory.from_json({"e": good, "ovir": {"num": one, "den": one}})


def test_random_inputs_are_seeded():
    assert random_superchars(4, 5) == random_superchars(4, 5)
    assert random_superchars(4, 5) != random_superchars(5, 5)
    rng = random.Random(0)
    assert all(g.nvars <= 3 for g in random_superchars(rng.randrange(100), 10))


@given(superchars(max_terms=2, exp_range=1))
def test_acyclic_e_gives_one(e):
    a = SuperChar(e.even, e.even)
    for d in range(6):
        assert s_l_plus_truncated(a, d) == Character.constant(1, e.nvars)


@given(st.integers(0, 3), st.integers(1, 3), st.randoms(use_true_random=False))
def test_rank_equal_e_has_rank_one(rank, nvars, rnd):
    def monomials():
        return sum((Character.monomial([rnd.randint(-2, 2) for _ in range(nvars)])
                    for _ in range(rank)), Character.zero(nvars))
    e = SuperChar(monomials(), monomials())
    for d in range(6):
        assert s_l_plus_truncated(e, d).rank() == 1


def test_c3_bracket_shape():
    t = [Character.variable(i, 3) for i in range(3)]
    even = sum((Character.variable(i, 3, -1) for i in range(3)), Character.zero(3))
    odd = t[0] + t[1] + t[2]
    e = SuperChar(even, odd)
    expected = 1 + ext_power(2, SuperChar(even, Character.zero(3))).even - even * odd \
        + sym_power(2, SuperChar(odd, Character.zero(3))).even
    assert s_l_plus_truncated(e, 1) == expected
