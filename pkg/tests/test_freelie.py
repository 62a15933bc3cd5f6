import pytest
from hypothesis import given

from conftest import superchars
from ncktheory.charring import Character, SuperChar
from ncktheory.errors import BudgetExceededError
from ncktheory.freelie import lie_bracket_span_oracle, lie_char, lie_char_table, pbw_reconstruct
from ncktheory.oracles import witt_dimension


def rank_only(even, odd):
    return SuperChar(Character.constant(even, 0), Character.constant(odd, 0))


def test_two_even_generators():
    g = rank_only(2, 0)
    dims = [lie_char(n, g).dimension() for n in range(1, 6)]
    assert dims == [2, 1, 2, 3, 6]
    assert dims == [witt_dimension(n, 2) for n in range(1, 6)]
    assert dims == [lie_bracket_span_oracle(n, 2, 0) for n in range(1, 6)]


def test_one_even_generator_is_abelian():
    g = rank_only(1, 0)
    assert [lie_char(n, g).dimension() for n in range(1, 7)] == [1, 0, 0, 0, 0, 0]


def test_one_odd_generator():
    x = Character.variable(0, 1)
    g = SuperChar(Character.zero(1), x)
    assert lie_char(2, g) == SuperChar(x * x, Character.zero(1))
    assert lie_char(3, g) == SuperChar.zero(1)
    assert [lie_char(n, g).dimension() for n in range(1, 6)] == [1, 1, 0, 0, 0]


def test_oracle_examples():
    assert lie_bracket_span_oracle(1, 2, 3) == 5
    assert lie_bracket_span_oracle(2, 2, 0) == 1
    assert lie_bracket_span_oracle(3, 2, 0) == 2


@pytest.mark.parametrize("even,odd", [(3, 0), (1, 1), (2, 1), (0, 2), (1, 2)])
def test_character_dims_match_oracle(even, odd):
    g = rank_only(even, odd)
    for n in range(1, 5):
        assert lie_char(n, g).dimension() == lie_bracket_span_oracle(n, even, odd)


def test_three_even_generators_match_witt():
    g = rank_only(3, 0)
    assert [lie_char(n, g).dimension() for n in range(1, 7)] == \
        [witt_dimension(n, 3) for n in range(1, 7)]


def test_oracle_budget():
    with pytest.raises(BudgetExceededError):
        lie_bracket_span_oracle(6, 2, 0, budget=10)


@given(superchars(max_terms=2, exp_range=1))
def test_pbw_reconstructs_tensor_powers(g):
    table = lie_char_table(g, 4)
    powers = [SuperChar.one(g.nvars)]
    for _ in range(4):
        powers.append(powers[-1] * g)
    assert pbw_reconstruct(table) == powers


@given(superchars(max_terms=2, exp_range=1))
def test_table_agrees_with_single_degree(g):
    table = lie_char_table(g, 4)
    for n in range(1, 5):
        assert table[n] == lie_char(n, g)
    assert table[1] == g
