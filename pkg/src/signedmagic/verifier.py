"""Checks for every defining axiom of signed magic and magic rectangles.

All constructive code passes its output through these functions before
returning it.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence

from .core import (
    Block,
    Params,
    Partition,
    RowSets,
    SparseRectangle,
    symbol_set,
)
from .errors import (
    ConstructionDefectError,
    DuplicateEntryError,
    GroundSetMismatchError,
)


@dataclass(frozen=True)
class Violation:
    """One failed rule with a witness cell, block or value."""

    rule: str
    detail: str
    witness: Any = None


@dataclass
class VerificationReport:
    """Outcome of a verification; keeps the first violation of each rule."""

    subject: str = ""
    violations: List[Violation] = field(default_factory=list)
    counts: Counter = field(default_factory=Counter)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def add(self, rule: str, detail: str, witness: Any = None) -> None:
        if not self.counts[rule]:
            self.violations.append(Violation(rule, detail, witness))
        self.counts[rule] += 1

    def rules(self) -> List[str]:
        return [violation.rule for violation in self.violations]

    def first(self, rule: str) -> Optional[Violation]:
        for violation in self.violations:
            if violation.rule == rule:
                return violation
        return None

    def summary(self) -> str:
        if self.passed:
            return f"{self.subject or 'check'}: pass"
        parts = []
        for violation in self.violations:
            extra = self.counts[violation.rule] - 1
            more = f" (+{extra} more)" if extra else ""
            parts.append(f"{violation.rule}: {violation.detail}{more}")
        return f"{self.subject or 'check'}: fail; " + "; ".join(parts)


def _check_fill_and_sums(
    rect: SparseRectangle,
    params: Params,
    report: VerificationReport,
    row_target: Optional[int],
    col_target: Optional[int],
) -> None:
    row_count = [0] * rect.rows
    col_count = [0] * rect.cols
    row_sum = [0] * rect.rows
    col_sum = [0] * rect.cols
    for (row, col), value in rect.cells.items():
        row_count[row] += 1
        col_count[col] += 1
        row_sum[row] += value
        col_sum[col] += value

    for row in range(rect.rows):
        if row_count[row] != params.k:
            report.add(
                "row-fill",
                f"row {row} has {row_count[row]} filled cells, expected {params.k}",
                row,
            )
    for col in range(rect.cols):
        if col_count[col] != params.s:
            report.add(
                "column-fill",
                f"column {col} has {col_count[col]} filled cells, expected {params.s}",
                col,
            )

    if row_target is None and rect.rows:
        row_target = row_sum[0]
    if col_target is None and rect.cols:
        col_target = col_sum[0]
    for row in range(rect.rows):
        if row_sum[row] != row_target:
            report.add(
                "row-sum", f"row {row} sums to {row_sum[row]}, expected {row_target}", row
            )
    for col in range(rect.cols):
        if col_sum[col] != col_target:
            report.add(
                "column-sum",
                f"column {col} sums to {col_sum[col]}, expected {col_target}",
                col,
            )


def _check_symbols(
    rect: SparseRectangle, expected: Iterable[int], report: VerificationReport
) -> None:
    expected = set(expected)
    seen: Dict[int, tuple] = {}
    for (row, col), value in sorted(rect.cells.items()):
        if value in seen:
            report.add(
                "symbols-duplicate",
                f"{value} at {seen[value]} and {(row, col)}",
                (row, col),
            )
            continue
        seen[value] = (row, col)
        if value not in expected:
            report.add("symbols-foreign", f"{value} at {(row, col)} is not a symbol", (row, col))
    missing = sorted(expected - set(seen), key=lambda v: (abs(v), v < 0))
    if missing:
        report.add("symbols-missing", f"{len(missing)} symbols unused, e.g. {missing[0]}", missing[0])


def verify_smr(rect: SparseRectangle, params: Params) -> VerificationReport:
    """
    Check rect against the SMR(m,n;k,s) axioms.

    Args:
        rect: Candidate array
        params: Target parameters

    Returns:
        Report covering fill counts, symbol coverage and zero line sums

    Raises:
        DimensionMismatchError: If rect is not m x n
    """
    rect.require_shape(params.m, params.n)
    report = VerificationReport(subject=str(params))
    _check_fill_and_sums(rect, params, report, 0, 0)
    _check_symbols(rect, symbol_set(params), report)
    return report


def verify_mr(rect: SparseRectangle, params: Params) -> VerificationReport:
    """
    Check rect against the MR(m,n;r,s) axioms, with r taken from params.k.

    Entries must be exactly 0..mr-1; row sums must agree with each other
    and column sums with each other.
    """
    rect.require_shape(params.m, params.n)
    report = VerificationReport(
        subject=f"MR({params.m},{params.n};{params.k},{params.s})"
    )
    _check_fill_and_sums(rect, params, report, None, None)
    _check_symbols(rect, range(params.m * params.k), report)
    return report


def is_near_orthogonal(p1: Partition, p2: Partition) -> bool:
    """
    True iff every block of p1 meets every block of p2 in at most one element.

    Raises:
        GroundSetMismatchError: If the partitions have different ground sets
    """
    if p1.ground != p2.ground:
        raise GroundSetMismatchError("partitions do not share a ground set")
    owner = p1.block_of()
    for block in p2.blocks:
        hit = set()
        for value in block.elements:
            if owner[value] in hit:
                return False
            hit.add(owner[value])
    return True


def verify_partition(
    blocks: Sequence[Block], base: SparseRectangle, k: int
) -> VerificationReport:
    """
    Check that blocks are zero-sum k-blocks partitioning the base symbols.

    Also checks that no block holds two values from one base column, which
    is what assembly needs.
    """
    report = VerificationReport(subject=f"partition into {k}-blocks")
    try:
        where = base.position_of()
    except DuplicateEntryError as e:
        report.add("base-duplicate", str(e), e.value)
        return report

    owner: Dict[int, int] = {}
    for index, block in enumerate(blocks):
        if len(block) != k:
            report.add("block-size", f"block {index} has {len(block)} elements", block)
        if block.total:
            report.add("block-sum", f"block {index} sums to {block.total}", block)
        columns: Dict[int, int] = {}
        for value in block.key():
            if value in owner:
                report.add(
                    "disjoint", f"{value} in blocks {owner[value]} and {index}", value
                )
                continue
            owner[value] = index
            if value not in where:
                report.add("cover-foreign", f"{value} is not a base entry", value)
                continue
            col = where[value][1]
            if col in columns:
                report.add(
                    "near-orthogonal",
                    f"block {index} holds {columns[col]} and {value}, both in column {col}",
                    block,
                )
            columns[col] = value
    missing = sorted(set(where) - set(owner), key=abs)
    if missing:
        report.add("cover-missing", f"{len(missing)} base entries unused", missing[0])
    return report


def _check_triples(
    blocks: Sequence[Block], report: VerificationReport, label: str
) -> None:
    for block in blocks:
        if len(block) != 3:
            report.add("block-size", f"{label} block {block} is not a 3-subset", block)
        if block.total:
            report.add("zero-sum", f"{label} block {block} sums to {block.total}", block)
    family = {block.elements for block in blocks}
    for block in blocks:
        if block.negated().elements not in family:
            report.add("negation-closed", f"{label} lacks the negation of {block}", block)


def _check_disjoint(blocks: Sequence[Block], report: VerificationReport) -> None:
    owner: Dict[int, int] = {}
    for index, block in enumerate(blocks):
        for value in block.elements:
            if value in owner:
                report.add(
                    "disjoint", f"{value} in {blocks[owner[value]]} and {block}", value
                )
            owner[value] = index


def required_triples(params: Params) -> int:
    """Minimum family size: q, q+1 or q+2 for r = 0, k/3, 2k/3."""
    return params.q + params.mixed_count


def verify_s12(
    s1: Sequence[Block], s2: Sequence[Block], rowsets: RowSets, params: Params
) -> VerificationReport:
    """
    Check the two triple families that seed the R1-heavy and R2-heavy blocks.

    S1 blocks need one element in R1 and two in R2, S2 blocks the reverse.
    Both families must be zero-sum, negation-closed, pairwise disjoint and
    of equal size at least q, q+1 or q+2 according to r.
    """
    report = VerificationReport(subject=f"S1/S2 for n={params.n}, k={params.k}")
    _check_triples(s1, report, "S1")
    _check_triples(s2, report, "S2")
    for label, family, quota in (("S1", s1, (1, 2)), ("S2", s2, (2, 1))):
        for block in family:
            counts = (
                len(block.elements & rowsets.r1.elements),
                len(block.elements & rowsets.r2.elements),
            )
            if counts != quota or sum(counts) != len(block):
                report.add(
                    "membership",
                    f"{label} block {block} has {counts[0]} in R1 and {counts[1]} in R2",
                    block,
                )
    need = required_triples(params)
    if len(s1) != len(s2) or len(s1) < need:
        report.add(
            "size", f"|S1|={len(s1)}, |S2|={len(s2)}, need equal and >= {need}", need
        )
    _check_disjoint(list(s1) + list(s2), report)
    return report


def verify_s3(
    s3: Sequence[Block], rowsets: RowSets, params: Params
) -> VerificationReport:
    """Check the third-row triple family: subsets of R3, zero-sum, closed, large enough."""
    report = VerificationReport(subject=f"S3 for n={params.n}, k={params.k}")
    _check_triples(s3, report, "S3")
    for block in s3:
        outside = block.elements - rowsets.r3.elements
        if outside:
            report.add("membership", f"{block} has {sorted(outside)} outside R3", block)
    need = required_triples(params)
    if len(s3) < need:
        report.add("size", f"|S3|={len(s3)}, need >= {need}", need)
    _check_disjoint(s3, report)
    return report


def ensure(report: VerificationReport, what: str) -> None:
    """
    Raise unless the report passed.

    Raises:
        ConstructionDefectError: If report has violations
    """
    if not report.passed:
        raise ConstructionDefectError(f"{what} failed verification", report)
