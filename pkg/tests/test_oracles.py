import random

import pytest

from ncktheory.charring import ext_power, k_class, schur_super, sym_power
from ncktheory.oracles import (ext_projector, lr_tableau_count, mobius, schur_projector_superchar,
                               sn_character, superchar_from_basis, sym_projector, witt_dimension)
from ncktheory.partition import partitions_of


def test_mobius_and_witt():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert [witt_dimension(n, 2) for n in range(1, 7)] == [2, 1, 2, 3, 6, 9]


def test_sn_characters():
    # character table of S_3, columns (1,1,1), (2,1), (3)
    assert [sn_character((3,), r) for r in [(1, 1, 1), (2, 1), (3,)]] == [1, 1, 1]
    assert [sn_character((2, 1), r) for r in [(1, 1, 1), (2, 1), (3,)]] == [2, 0, -1]
    assert [sn_character((1, 1, 1), r) for r in [(1, 1, 1), (2, 1), (3,)]] == [1, -1, 1]
    for n in range(1, 6):
        assert sum(sn_character(lam, (1,) * n) ** 2 for lam in partitions_of(n)) == \
            [1, 1, 2, 6, 24, 120][n]


def test_lr_tableaux_small():
    assert lr_tableau_count((1,), (1,), (2,)) == 1
    assert lr_tableau_count((1,), (1,), (1, 1)) == 1
    assert lr_tableau_count((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_tableau_count((2,), (2,), (2, 2)) == 1


def _random_basis(rng, nv, size):
    return [(tuple(rng.randint(-2, 2) for _ in range(nv)), rng.randint(0, 1)) for _ in range(size)]


@pytest.mark.parametrize("seed", range(8))
def test_projectors_match_closed_forms(seed):
    rng = random.Random(seed)
    nv = rng.randint(1, 2)
    basis = _random_basis(rng, nv, rng.randint(1, 4))
    g = superchar_from_basis(basis, nv)
    for k in range(4):
        assert sym_projector(k, basis, nv) == sym_power(k, g)
        assert ext_projector(k, basis, nv) == ext_power(k, g)
        for lam in partitions_of(k):
            assert schur_projector_superchar(lam, basis, nv) == schur_super(lam, g)
            assert schur_projector_superchar(lam, basis, nv, use_trace=True) == schur_super(lam, g)


def test_odd_line_projectors():
    basis = [((1,), 1)]
    sq = sym_projector(2, basis, 1)
    assert not sq.even and not sq.odd
    cube = ext_projector(3, basis, 1)
    assert not cube.even and k_class(cube).coefficient((3,)) == -1
