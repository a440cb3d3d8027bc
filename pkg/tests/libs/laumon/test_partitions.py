import pytest

from edaha.libs.laumon import EMPTY, Partition, partition_tuples, partitions_of, partitions_up_to
from edaha.libs.laumon.partitions import tuple_size


def test_partitions_of_four():
    parts = [p.parts for p in partitions_of(4)]
    assert len(parts) == 5
    assert parts[0] == (4,)
    assert parts[-1] == (1, 1, 1, 1)


def test_partitions_up_to_counts_every_size():
    # 1 + 1 + 2 + 3
    assert len(list(partitions_up_to(3))) == 7


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 0))
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_part_is_one_based_and_zero_padded():
    lam = Partition((3, 1))
    assert lam.part(1) == 3
    assert lam.part(2) == 1
    assert lam.part(5) == 0
    with pytest.raises(IndexError):
        lam.part(0)


def test_empty_partition():
    assert EMPTY.size == 0
    assert len(EMPTY) == 0
    assert str(EMPTY) == "()"
    assert str(Partition((2, 1))) == "(2,1)"


def test_partition_tuples_by_increasing_size():
    tuples = list(partition_tuples(2, 2))
    assert len(tuples) == 8
    assert tuples[0] == (EMPTY, EMPTY)
    sizes = [tuple_size(t) for t in tuples]
    assert sizes == sorted(sizes)


def test_partition_tuples_rejects_bad_input():
    with pytest.raises(ValueError):
        list(partition_tuples(0, 2))
    with pytest.raises(ValueError):
        list(partitions_of(-1))
