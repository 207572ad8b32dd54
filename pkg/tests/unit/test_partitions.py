"""Тесты разбиений и их раскрашенных вариантов."""

import pytest

from compoq.core.domain.exceptions import (
    BoundTooSmallError,
    InvalidParameterError,
    UnknownNameError,
)
from compoq.core.domain.models import PartSet
from compoq.core.services.partitions import (
    OVERPARTITION_PALETTE,
    P3_PALETTE,
    R_PALETTE,
    S_PALETTE,
    ColorClass,
    PartitionFunction,
    colored_counts,
    count_gap_partitions,
    count_overpartitions,
    count_pod,
    count_ps,
    decorated_count,
    enumerate_decorated,
    enumerate_gap_partitions,
    enumerate_partitions,
    enumerate_pod,
    partition_counts,
    partition_table,
    pod_counts,
    rr_counts,
)
from compoq.core.services.partsets import (
    get_part_set,
    naturals_set,
    polygonal_set,
    residue_set_sk,
)
from compoq.core.services.qgen import named_gf
from tests.fixtures import PARTITIONS_10


class TestPartitionCounts:
    """Тесты для partition_counts."""

    def test_unrestricted(self) -> None:
        assert partition_counts(naturals_set(10), 10) == list(PARTITIONS_10)

    def test_enumeration_agrees(self) -> None:
        parts = polygonal_set(5, 15)
        for n in range(16):
            listed = list(enumerate_partitions(n, parts.members))
            assert len(listed) == count_ps(parts, n)

    def test_p_sk_matches_product(self) -> None:
        for k in (6, 7, 8):
            counts = partition_counts(residue_set_sk(k, 30), 30)
            assert counts == list(named_gf("p-sk", 30, k=k).coeffs)

    def test_bound_too_small(self) -> None:
        with pytest.raises(BoundTooSmallError):
            partition_counts(naturals_set(5), 10)

    def test_negative_size(self) -> None:
        with pytest.raises(InvalidParameterError, match="Size"):
            partition_counts(naturals_set(5), -1)

    @pytest.mark.parametrize(
        "part_set",
        [naturals_set(60), polygonal_set(5, 60), residue_set_sk(7, 60), get_part_set("rr", 60)],
        ids=["naturals", "pentagonal", "s7", "rr"],
    )
    def test_non_decreasing_when_one_is_a_part(self, part_set: PartSet) -> None:
        """Тест: при 1 в наборе p_S(n) не убывает (добавление части 1)."""
        assert 1 in part_set
        counts = [count_ps(part_set, n) for n in range(61)]
        assert all(a <= b for a, b in zip(counts, counts[1:], strict=False))

    def test_partitions_are_non_increasing(self) -> None:
        shapes = [p.parts for p in enumerate_partitions(4)]
        assert shapes == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


class TestPod:
    """Тесты для разбиений с различными нечётными частями."""

    def test_counts(self) -> None:
        assert pod_counts(6) == [1, 1, 1, 2, 3, 4, 5]

    def test_enumeration(self) -> None:
        for n in range(13):
            assert sum(1 for _ in enumerate_pod(n)) == count_pod(n)

    def test_matches_product(self) -> None:
        assert pod_counts(40) == list(named_gf("pod", 40).coeffs)


class TestDecorated:
    """Тесты для раскрашенных разбиений и надразбиений."""

    def test_overpartitions(self) -> None:
        assert [count_overpartitions(n) for n in range(7)] == [1, 2, 4, 8, 14, 24, 40]

    def test_overpartition_beyond_enumeration(self) -> None:
        assert count_overpartitions(35) == named_gf("overpartition", 35)[35]

    def test_at_most_first_copy_overlined(self) -> None:
        for partition in enumerate_decorated(6, OVERPARTITION_PALETTE):
            for index, bar in enumerate(partition.overlined):
                if bar and index > 0:
                    assert partition.parts[index - 1] != partition.parts[index]

    def test_three_colours(self) -> None:
        counts = [decorated_count(n, P3_PALETTE) for n in range(7)]
        assert counts == colored_counts(6, 3) == [1, 3, 9, 22, 51, 108, 221]

    @pytest.mark.parametrize(("palette", "name"), [(R_PALETTE, "r"), (S_PALETTE, "s")])
    def test_palettes_match_products(self, palette: tuple[ColorClass, ...], name: str) -> None:
        expected = named_gf(name, 8).coeffs
        assert tuple(decorated_count(n, palette) for n in range(9)) == expected

    def test_colour_count_must_be_positive(self) -> None:
        with pytest.raises(InvalidParameterError, match="colour"):
            colored_counts(5, 0)


class TestGapPartitions:
    """Тесты для разбиений с разностным условием."""

    def test_gap_condition(self) -> None:
        for partition in enumerate_gap_partitions(12):
            parts = partition.parts
            assert all(a - b >= 2 for a, b in zip(parts, parts[1:], strict=False))

    def test_rogers_ramanujan_counts(self) -> None:
        """Тест: разбиения с разностью частей >= 2 против частей 1, 4 mod 5."""
        assert [count_gap_partitions(n) for n in range(21)] == rr_counts(20)

    def test_rr_small_values(self) -> None:
        assert rr_counts(10) == [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6]


class TestPartitionTable:
    """Тесты для partition_table."""

    @pytest.mark.parametrize("function", list(PartitionFunction))
    def test_every_function_tabulates(self, function: PartitionFunction) -> None:
        values = partition_table(
            function, 8, k=6, part_set=polygonal_set(5, 8)
        )
        assert len(values) == 9
        assert values[0] == 1

    def test_colored(self) -> None:
        assert partition_table("colored", 3, colors=2) == [1, 2, 5, 10]

    def test_p3_is_three_colours(self) -> None:
        assert partition_table("p3", 10) == colored_counts(10, 3)

    def test_ps_needs_part_set(self) -> None:
        with pytest.raises(InvalidParameterError, match="part set"):
            partition_table("ps", 5)

    def test_p_sk_needs_k(self) -> None:
        with pytest.raises(InvalidParameterError, match="needs k"):
            partition_table("p-sk", 5)

    def test_unknown(self) -> None:
        with pytest.raises(UnknownNameError):
            partition_table("plane", 5)
