from hypothesis import given
from hypothesis import strategies as st

from ncktheory.oracles import lr_tableau_count
from ncktheory.partition import Partition, conjugate, lr_coeff, lr_expand, partitions_of


def test_conjugate_examples():
    assert conjugate((2, 1)) == Partition((2, 1))
    assert conjugate((3,)) == Partition((1, 1, 1))
    assert conjugate((4, 2, 1)) == Partition((3, 2, 1, 1))


def test_partitions_of_small():
    assert partitions_of(0) == [Partition(())]
    assert partitions_of(3) == [Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))]
    assert len(partitions_of(5)) == 7
    assert [len(partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_partition_rejects_bad_input():
    for bad in ([1, 2], [-1], [2, -1], [1.5], [True]):
        try:
            Partition(bad)
        except (TypeError, ValueError):
            continue
        raise AssertionError(f"accepted {bad}")


def test_trailing_zeros_are_dropped():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))


def test_lr_examples():
    for lam in partitions_of(4):
        assert lr_coeff(lam, (), lam) == 1
    assert lr_coeff((1,), (1, 1), (2,)) == 0
    assert lr_coeff((1,), (1, 1), (2, 1)) == 1
    assert lr_coeff((1,), (2,), (2, 1)) == 1
    assert lr_coeff((2, 1), (2, 1), (3, 2, 1)) == 2


@given(st.integers(0, 6).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).weight == lam.weight


def test_lr_matches_tableau_count_through_weight_6():
    for n in range(7):
        for a in range(n + 1):
            for lam in partitions_of(a):
                for mu in partitions_of(n - a):
                    expansion = lr_expand(lam, mu)
                    for nu in partitions_of(n):
                        assert expansion.get(nu, 0) == lr_tableau_count(lam, mu, nu)


@given(st.integers(0, 4).flatmap(lambda n: st.sampled_from(partitions_of(n))),
       st.integers(0, 3).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_lr_symmetry_and_conjugation(lam, mu):
    exp = lr_expand(lam, mu)
    assert exp == {k: v for k, v in lr_expand(mu, lam).items()}
    conj = lr_expand(conjugate(lam), conjugate(mu))
    assert {conjugate(nu): c for nu, c in exp.items()} == conj
