#!/usr/bin/env python3
"""
Tests for the axiom checks on rectangles, partitions and triple families.
"""

import random

import pytest

from signedmagic.assembler import enumerate_params, generate
from signedmagic.base import row_sets, smr3_even, with_negations
from signedmagic.core import (
    Block,
    Params,
    Partition,
    SparseRectangle,
    column_partition,
    params_new,
    row_partition,
)
from signedmagic.errors import (
    ConstructionDefectError,
    DimensionMismatchError,
    GroundSetMismatchError,
)
from signedmagic.verifier import (
    ensure,
    is_near_orthogonal,
    required_triples,
    verify_mr,
    verify_partition,
    verify_s3,
    verify_s12,
    verify_smr,
)

LO_SHU = [[7, 0, 5], [2, 4, 6], [3, 8, 1]]


class TestVerifySMR:
    """Test the signed magic rectangle check."""

    def test_fixed_array_passes(self, fixed_4_12):
        report = verify_smr(fixed_4_12, params_new(4, 12, 9))
        assert report.passed
        assert bool(report)
        assert report.summary() == "SMR(4,12;9,3): pass"

    def test_wrong_shape_raises(self, fixed_4_12):
        with pytest.raises(DimensionMismatchError):
            verify_smr(fixed_4_12, params_new(3, 12, 12))

    def test_foreign_value(self, fixed_4_12):
        report = verify_smr(fixed_4_12.with_cell(0, 0, 19), params_new(4, 12, 9))
        assert not report.passed
        assert set(report.rules()) >= {
            "row-sum",
            "column-sum",
            "symbols-foreign",
            "symbols-missing",
        }
        assert report.first("symbols-foreign").witness == (0, 0)
        assert report.first("symbols-missing").witness == 1

    def test_empty_cell_breaks_fill(self, fixed_4_12):
        report = verify_smr(fixed_4_12.with_cell(0, 0, None), params_new(4, 12, 9))
        assert "row-fill" in report.rules()
        assert "column-fill" in report.rules()
        assert report.first("row-fill").witness == 0

    def test_duplicate_value(self, fixed_4_12):
        report = verify_smr(fixed_4_12.with_cell(0, 0, 16), params_new(4, 12, 9))
        assert "symbols-duplicate" in report.rules()

    def test_counts_every_violation_but_keeps_the_first(self):
        rect = SparseRectangle.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
        report = verify_smr(rect, params_new(3, 3, 3))
        assert report.counts["row-sum"] == 3
        assert len([v for v in report.violations if v.rule == "row-sum"]) == 1
        assert "(+2 more)" in report.summary()


class TestMetamorphic:
    """Symmetries of an SMR keep it an SMR; a single change breaks it."""

    @pytest.fixture
    def params(self):
        return params_new(4, 12, 9)

    def test_row_permutation(self, fixed_4_12, params):
        assert verify_smr(fixed_4_12.permute_rows([3, 1, 0, 2]), params).passed

    def test_column_permutation(self, fixed_4_12, params):
        order = list(reversed(range(12)))
        assert verify_smr(fixed_4_12.permute_columns(order), params).passed

    def test_negation(self, fixed_4_12, params):
        assert verify_smr(fixed_4_12.negated(), params).passed

    def test_base_rectangles_survive_symmetries(self):
        base = smr3_even(10)
        params = Params.unchecked(3, 10, 10)
        assert verify_smr(base.negated().permute_rows([2, 0, 1]), params).passed

    def test_every_single_entry_mutation_fails(self, fixed_4_12, params):
        for (row, col), value in fixed_4_12.cells.items():
            mutated = fixed_4_12.with_cell(row, col, value + 1)
            assert not verify_smr(mutated, params).passed

    @pytest.mark.slow
    def test_random_generated_rectangles(self):
        rng = random.Random(20240611)
        pool = [p for p in enumerate_params(60) if p.n % 2 == 0 or p.n <= 15]
        for params in rng.sample(pool, 100):
            rect = generate(params.m, params.n, params.k)
            rows = rng.sample(range(params.m), params.m)
            cols = rng.sample(range(params.n), params.n)
            assert verify_smr(rect.permute_rows(rows), params).passed
            assert verify_smr(rect.permute_columns(cols), params).passed
            assert verify_smr(rect.negated(), params).passed
            (row, col), value = rng.choice(sorted(rect.cells.items()))
            mutated = rect.with_cell(row, col, value + rng.choice([-1, 1]))
            assert not verify_smr(mutated, params).passed


class TestVerifyMR:
    """Test the magic rectangle check."""

    def test_lo_shu_is_a_magic_rectangle(self):
        rect = SparseRectangle.from_rows(LO_SHU)
        report = verify_mr(rect, Params.unchecked(3, 3, 3))
        assert report.passed
        assert report.subject == "MR(3,3;3,3)"

    def test_unequal_row_sums(self):
        rect = SparseRectangle.from_rows([[0, 1, 2], [3, 4, 5], [6, 7, 8]])
        report = verify_mr(rect, Params.unchecked(3, 3, 3))
        assert "row-sum" in report.rules()


class TestNearOrthogonal:
    """Test near-orthogonality of two partitions."""

    def test_rows_and_columns_of_a_rectangle(self, base_4):
        assert is_near_orthogonal(row_partition(base_4), column_partition(base_4))

    def test_partition_is_not_near_orthogonal_to_itself(self, base_4):
        rows = row_partition(base_4)
        assert not is_near_orthogonal(rows, rows)

    def test_ground_sets_must_agree(self):
        p1 = Partition.of([Block.of([1, -1])])
        p2 = Partition.of([Block.of([2, -2])])
        with pytest.raises(GroundSetMismatchError):
            is_near_orthogonal(p1, p2)


class TestVerifyPartition:
    """Test the check on block partitions of a base rectangle."""

    def test_worked_example_passes(self, worked_30_9_blocks):
        report = verify_partition(worked_30_9_blocks, smr3_even(30), 9)
        assert report.passed, report.summary()

    def test_rows_of_the_base_are_a_partition(self, base_4):
        blocks = [Block.of(v for _, v in base_4.row(i)) for i in range(3)]
        assert verify_partition(blocks, base_4, 4).passed

    def test_columns_of_the_base_are_not(self, base_4):
        blocks = list(column_partition(base_4))
        report = verify_partition(blocks, base_4, 3)
        assert "near-orthogonal" in report.rules()

    def test_wrong_size_missing_and_foreign(self, base_4):
        blocks = [Block.of([1, -1, 2, -2]), Block.of([7, -7])]
        report = verify_partition(blocks, base_4, 4)
        assert {"block-size", "cover-foreign", "cover-missing"} <= set(report.rules())

    def test_nonzero_sum(self, base_4):
        report = verify_partition([Block.of([1, 2, 4, 5])], base_4, 4)
        assert "block-sum" in report.rules()


class TestTripleFamilies:
    """Test the S1/S2 and S3 triple family checks."""

    def test_required_triples(self):
        assert required_triples(params_new(10, 30, 9)) == 4
        assert required_triples(params_new(6, 10, 5)) == 2
        assert required_triples(params_new(4, 12, 9)) == 2

    def test_valid_s12(self):
        s1 = with_negations([(1, 13, -14)])
        s2 = with_negations([(4, 7, -11)])
        report = verify_s12(s1, s2, row_sets(10), params_new(6, 10, 5))
        assert report.passed, report.summary()

    def test_s12_membership_and_closure(self):
        s1 = [Block.of([1, 13, -14])]
        s2 = with_negations([(13, 1, -14)])
        report = verify_s12(s1, s2, row_sets(10), params_new(6, 10, 5))
        rules = set(report.rules())
        assert {"negation-closed", "membership", "size", "disjoint"} <= rules

    def test_valid_s3(self):
        s3 = with_negations([(3, 6, -9)])
        assert verify_s3(s3, row_sets(10), params_new(6, 10, 5)).passed

    def test_s3_too_small_and_outside_r3(self):
        s3 = [Block.of([1, 2, -3])]
        report = verify_s3(s3, row_sets(10), params_new(6, 10, 5))
        assert {"membership", "size", "negation-closed"} <= set(report.rules())


class TestEnsure:
    """Test the raise-on-failure gate."""

    def test_passing_report(self, fixed_4_12):
        ensure(verify_smr(fixed_4_12, params_new(4, 12, 9)), "fixed array")

    def test_failing_report_raises_with_details(self, fixed_4_12):
        report = verify_smr(fixed_4_12.with_cell(0, 0, 19), params_new(4, 12, 9))
        with pytest.raises(ConstructionDefectError) as excinfo:
            ensure(report, "mutated array")
        assert excinfo.value.report is report
        assert "mutated array failed verification" in str(excinfo.value)
