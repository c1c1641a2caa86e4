import pytest
from hypothesis import given

from strategies import partitions_st
from schubsplit.errors import InvalidPartition, NotGrassmannian
from schubsplit.partitions import (IntegerSequence, Partition, TypedKStrictPartition, conjugate,
                                   grassmannian_to_partition, is_k_grassmannian, k_strict_partitions,
                                   partition_to_grassmannian, partitions, sort_key, strict_partitions,
                                   typed_k_strict_partitions)
from schubsplit.weyl import SignedPermutation, elements

P = SignedPermutation.parse


def test_partition_basics():
    lam = Partition.parse("(3,1,0)")
    assert lam.parts == (3, 1) and lam.weight == 4 and str(lam) == "(3,1)"
    assert lam[1] == 3 and lam[5] == 0
    assert Partition(()).conjugate() == Partition(())
    assert conjugate(Partition((3, 1))) == Partition((2, 1, 1))
    assert Partition((2, 1)).conjugate() == Partition((2, 1))
    with pytest.raises(InvalidPartition):
        Partition((1, 2))


@given(partitions_st())
def test_conjugation_is_an_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().weight == lam.weight


def test_k_strictness_and_types():
    assert Partition((3, 3)).is_k_strict(3) and not Partition((3, 3)).is_k_strict(2)
    assert str(TypedKStrictPartition.parse("(2,1)#1", 1)) == "(2,1)#1"
    with pytest.raises(InvalidPartition):
        TypedKStrictPartition(Partition((2,)), 1, 1)
    with pytest.raises(InvalidPartition):
        TypedKStrictPartition(Partition((2, 2)), 1)


def test_enumerators():
    assert len(list(partitions(5))) == 7
    assert [p.parts for p in strict_partitions(5)] == [(5,), (4, 1), (3, 2)]
    assert len(list(k_strict_partitions(4, 1))) == 4  # 4, 31, 211, 1111
    typed = list(typed_k_strict_partitions(2, 1))
    assert sorted(str(t) for t in typed) == ["(1,1)#1", "(1,1)#2", "(2)"]


def test_sort_key_orders_by_weight_then_parts():
    lams = [Partition((2, 1)), Partition((3,)), Partition((1, 1, 1)), Partition((4,))]
    assert [str(l) for l in sorted(lams, key=sort_key)] == ["(4)", "(3)", "(2,1)", "(1,1,1)"]


def test_integer_sequence():
    s = IntegerSequence((4, 0, 0))
    assert len(s) == 1 and s.weight == 4 and str(s) == "(4)"


def test_table_examples():
    assert grassmannian_to_partition(P("3,-1,2"), 1).parts == (2, 1)
    assert grassmannian_to_partition(P("1,-3,2"), 1).parts == (4,)
    d = grassmannian_to_partition(P("-2,-1,3", "D"), 1)
    assert d.parts == (1,) and d.type == 2
    assert partition_to_grassmannian(TypedKStrictPartition(Partition((2,)), 1), "BC") == P("2,-1")
    assert partition_to_grassmannian(TypedKStrictPartition(Partition(()), 2), "BC").is_identity()
    assert partition_to_grassmannian(TypedKStrictPartition(Partition((2, 1)), 1, 1), "D") == P("3,-2,-1", "D")


def test_not_grassmannian():
    with pytest.raises(NotGrassmannian):
        grassmannian_to_partition(P("3,2,1"), 1)


@pytest.mark.parametrize("family", ["A", "BC", "D"])
@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_round_trip_on_rank_four(family, k):
    seen = set()
    for w in elements(family, 4):
        if not is_k_grassmannian(w, k):
            continue
        lam = grassmannian_to_partition(w, k)
        assert lam.weight == w.length()
        assert lam not in seen
        seen.add(lam)
        assert partition_to_grassmannian(lam, family) == w
    assert seen


@pytest.mark.parametrize("family", ["BC", "D"])
@pytest.mark.parametrize("k", [1, 2])
def test_partition_side_round_trip(family, k):
    for n in range(0, 7):
        for lam in typed_k_strict_partitions(n, k) if family == "D" else k_strict_partitions(n, k):
            lam = lam if isinstance(lam, TypedKStrictPartition) else TypedKStrictPartition(lam, k)
            w = partition_to_grassmannian(lam, family)
            assert is_k_grassmannian(w, k)
            assert grassmannian_to_partition(w, k) == lam
