#!/usr/bin/env python3
"""
Tests for the odd-k triple families, partitions and the k = 3 squares.
"""

import pytest

from signedmagic.base import row_sets, smr3_even, with_negations
from signedmagic.core import params_new
from signedmagic.errors import InadmissibleParametersError, UnsupportedCaseError
from signedmagic.odd_partitions import (
    FORMULA_S12_FROM,
    build_partition_odd,
    build_s1_s2,
    build_s3,
    odd_params,
    smr_square_k3,
    triple_families,
)
from signedmagic.verifier import (
    required_triples,
    verify_partition,
    verify_s3,
    verify_s12,
    verify_smr,
)


def odd_cases(n_max):
    """Every (n, k) the odd-k builder accepts with n <= n_max."""
    return [
        (n, k)
        for n in range(10, n_max + 1, 2)
        for k in range(5, n, 2)
        if (3 * n) % k == 0
    ]


class TestOddParams:
    """Test the argument checks of the odd-k builders."""

    @pytest.mark.parametrize("n,k", [(10, 4), (15, 5), (10, 3), (20, 7), (10, 15)])
    def test_rejected(self, n, k):
        with pytest.raises(InadmissibleParametersError):
            odd_params(n, k)

    def test_accepted(self):
        params = odd_params(30, 9)
        assert params == params_new(10, 30, 9)
        assert required_triples(params) == 4


@pytest.mark.construction
class TestTripleFamilies:
    """Test the S1, S2 and S3 families."""

    def test_closed_form_s12_at_the_first_formula_case(self):
        assert FORMULA_S12_FROM == 34
        s1, s2 = build_s1_s2(34, 17)
        assert s1 == with_negations([(1, 49, -50), (2, 44, -46)])
        assert s2 == with_negations([(4, 25, -29), (5, 23, -28)])

    def test_tabulated_s12(self):
        s1, s2 = build_s1_s2(10, 5)
        assert s1 == with_negations([(1, 13, -14)])
        assert s2 == with_negations([(4, 7, -11)])

    def test_smallest_s3(self):
        assert build_s3(10, 5) == with_negations([(3, 6, -9)])

    def test_closed_form_s3(self):
        expected = with_negations(
            [
                (3, 45, -48),
                (9, 51, -60),
                (15, 57, -72),
                (21, 63, -84),
                (27, 69, -96),
                (33, 75, -108),
                (39, 81, -120),
                (87, 30, -117),
                (93, 18, -111),
                (99, 6, -105),
            ]
        )
        assert build_s3(90, 5) == expected

    def test_families_bundle(self):
        families = triple_families(30, 9)
        assert len(families.s1) >= 4
        assert families.p == 1
        assert families.alpha == 1

    @pytest.mark.slow
    def test_every_case_up_to_200(self):
        for n, k in odd_cases(200):
            params = params_new(3 * n // k, n, k)
            rowsets = row_sets(n)
            families = triple_families(n, k)
            report = verify_s12(families.s1, families.s2, rowsets, params)
            assert report.passed, report.summary()
            report = verify_s3(families.s3, rowsets, params)
            assert report.passed, report.summary()


@pytest.mark.construction
class TestBuildPartitionOdd:
    """Test the partition into zero-sum k-blocks for odd k."""

    @pytest.mark.parametrize("n,k", [(10, 5), (14, 7), (30, 9), (30, 5), (34, 17)])
    def test_partition_is_valid(self, n, k):
        partition = build_partition_odd(n, k)
        assert len(partition) == 3 * n // k
        report = verify_partition(list(partition), smr3_even(n), k)
        assert report.passed, report.summary()

    def test_blocks_hold_one_seed_triple(self):
        s2 = set(build_s1_s2(10, 5)[1])
        first = build_partition_odd(10, 5).blocks[0]
        assert any(seed.elements <= first.elements for seed in s2)

    def test_mixed_block_is_last(self):
        blocks = build_partition_odd(30, 9).blocks
        base = smr3_even(30)
        row_of = {value: row for (row, _), value in base.cells.items()}
        assert {row_of[v] for v in blocks[-1]} == {0, 1, 2}

    def test_fixed_case_is_unsupported(self):
        with pytest.raises(UnsupportedCaseError):
            build_partition_odd(12, 9)

    @pytest.mark.parametrize("n,k", [(20, 15), (28, 21)])
    def test_planner_dead_end_falls_back_to_direct_split(self, n, k):
        partition = build_partition_odd(n, k)
        assert len(partition) == 4
        report = verify_partition(list(partition), smr3_even(n), k)
        assert report.passed, report.summary()


@pytest.mark.construction
class TestSquareK3:
    """Test the closed-form SMR(n,n;3,3)."""

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 8, 15, 24, 25, 60, 121])
    def test_square(self, n):
        rect = smr_square_k3(n)
        assert verify_smr(rect, params_new(n, n, 3)).passed

    def test_even_rows_negate_base_columns(self, base_10):
        rect = smr_square_k3(10)
        for j in range(10):
            assert {v for _, v in rect.row(j)} == {-v for _, v in base_10.column(j)}

    def test_odd_cells_follow_three_diagonals(self):
        rect = smr_square_k3(7)
        assert set(rect.cells) == {(i, (i + d) % 7) for i in range(7) for d in range(3)}

    def test_three_by_three(self):
        assert smr_square_k3(3).to_rows() == [[3, -1, -2], [-4, 4, 0], [1, -3, 2]]

    def test_too_small(self):
        with pytest.raises(InadmissibleParametersError):
            smr_square_k3(2)
