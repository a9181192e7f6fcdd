#!/usr/bin/env python3
"""
Tests for the even-k block partitions of the base rectangle.
"""

import pytest

from signedmagic.base import smr3_even
from signedmagic.core import Block, params_new
from signedmagic.errors import InadmissibleParametersError, InvalidPartitionError
from signedmagic.even_partitions import (
    base_column_map,
    build_partition_even,
    even_params,
    negation_pairs,
)
from signedmagic.verifier import verify_partition


class TestNegationPairs:
    """Test splitting a base row into {x, -x} pairs."""

    def test_pairs_of_the_first_row(self, base_4):
        pairs = negation_pairs(base_4, 0)
        assert [pair.value for pair in pairs] == [1, 2]
        assert pairs[0].columns == {0, 1}
        assert pairs[1].members == (2, -2)

    def test_row_without_negations_is_rejected(self, fixed_4_12):
        with pytest.raises(InvalidPartitionError):
            negation_pairs(fixed_4_12, 0)

    def test_column_map(self, base_4):
        column_of = base_column_map(base_4)
        assert column_of[1] == 0
        assert column_of[-6] == 0
        assert column_of[6] == 3
        assert len(column_of) == 12


class TestEvenParams:
    """Test the argument checks of the even-k builder."""

    @pytest.mark.parametrize("n,k", [(10, 5), (9, 6), (10, 4), (8, 2)])
    def test_rejected(self, n, k):
        with pytest.raises(InadmissibleParametersError):
            even_params(n, k)

    def test_accepted(self):
        assert even_params(30, 10) == params_new(9, 30, 10)


@pytest.mark.construction
class TestBuildPartitionEven:
    """Test the partition into zero-sum k-blocks for even k."""

    def test_full_rows_when_k_equals_n(self, base_4):
        partition = build_partition_even(4, 4)
        rows = {Block.of(v for _, v in base_4.row(i)) for i in range(3)}
        assert set(partition.blocks) == rows

    @pytest.mark.parametrize(
        "n,k",
        [(8, 6), (10, 6), (12, 4), (20, 6), (30, 10), (40, 12), (32, 8), (50, 10)],
    )
    def test_partition_is_valid(self, n, k):
        partition = build_partition_even(n, k)
        base = smr3_even(n)
        assert len(partition) == 3 * n // k
        report = verify_partition(list(partition), base, k)
        assert report.passed, report.summary()

    @pytest.mark.parametrize("n,k", [(8, 6), (10, 6), (40, 12)])
    def test_mixed_blocks_come_last(self, n, k):
        params = params_new(3 * n // k, n, k)
        base = smr3_even(n)
        row_of = {value: row for (row, _), value in base.cells.items()}
        blocks = list(build_partition_even(n, k))
        mixed = blocks[len(blocks) - params.mixed_count :]
        ordinary = blocks[: len(blocks) - params.mixed_count]
        assert params.mixed_count > 0
        for block in mixed:
            assert {row_of[v] for v in block} == {0, 1, 2}
        for block in ordinary:
            assert len({row_of[v] for v in block}) == 1

    def test_blocks_are_negation_closed(self):
        for block in build_partition_even(20, 6):
            assert block.is_negation_closed()
