"""Zero-sum k-blocks for odd k, built around three triple families.

S1 triples hold one value from the first base row and two from the second,
S2 triples the reverse, S3 triples lie in the third row. Every block is one
triple plus negation pairs from a single row; the one or two mixed blocks
needed when k does not divide n take one triple from each family. The
k=3 squares, which need no triple families, also live here.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .base import (
    has_special_s3,
    row_sets,
    small_case_s12,
    smr3_even,
    special_s3,
    square_k3_odd,
    with_negations,
)
from .block_plan import BlockPlanner, BlockSpec, assemble
from .core import (
    Block,
    Params,
    Partition,
    RowSets,
    SparseRectangle,
    params_new,
)
from .errors import (
    ConstructionDefectError,
    DuplicateEntryError,
    InadmissibleParametersError,
    UnsupportedCaseError,
)
from .even_partitions import base_column_map, negation_pairs
from .search import (
    SearchBudget,
    search_block_partition,
    search_zero_sum_blocks,
)
from .verifier import (
    VerificationReport,
    ensure,
    required_triples,
    verify_partition,
    verify_s3,
    verify_s12,
)

# smallest n the closed-form S1/S2 triples are used for
FORMULA_S12_FROM = 34


@dataclass(frozen=True)
class TripleFamilies:
    """The three negation-closed triple families of one odd-k case."""

    s1: Tuple[Block, ...]
    s2: Tuple[Block, ...]
    s3: Tuple[Block, ...]
    p: int
    alpha: int


def odd_params(n: int, k: int) -> Params:
    """
    Validate an (n, k) pair for the odd-k builders.

    Raises:
        InadmissibleParametersError: If n is odd, k is even or below 5,
            k does not divide 3n, or k >= n
    """
    if n % 2 or k % 2 == 0 or k < 5:
        raise InadmissibleParametersError(
            "the odd-k builder needs even n and odd k >= 5", 0, n, k
        )
    if (3 * n) % k:
        raise InadmissibleParametersError("k must divide 3n", 0, n, k)
    if k >= n:
        raise InadmissibleParametersError(f"k >= n ({k} >= {n})", 0, n, k)
    return params_new(3 * n // k, n, k)


def _formula_s12(params: Params) -> Tuple[List[Block], List[Block]]:
    n, q = params.n, params.q
    p = (q + 3) // 4
    half = 3 * n // 2
    m_triples: List[Tuple[int, int, int]] = []
    n_triples: List[Tuple[int, int, int]] = []
    for i in range(p):
        m_triples.append((3 * i + 1, half - 2 - 12 * i, -(half - 1 - 9 * i)))
        m_triples.append((3 * i + 2, half - 7 - 9 * i, -(half - 5 - 6 * i)))
        if n % 4 == 0:
            h = 3 * n // 4
            n_triples.append(
                (3 * i + 3 * p + 1, h - 2 - 6 * i, -(h - 1 + 3 * (p - i)))
            )
            n_triples.append(
                (3 * i + 3 * p + 2, h - 4 - 6 * i, -(h - 2 + 3 * (p - i)))
            )
        else:
            g = (3 * n - 2) // 4
            n_triples.append((3 * i + 3 * p + 1, g - 6 * i, -(g + 1 + 3 * (p - i))))
            n_triples.append(
                (3 * i + 3 * p + 2, g - 2 - 6 * i, -(g + 3 * (p - i)))
            )
    if params.mixed_count == 2 and q % 4 == 0 and n % 4 == 2:
        g = (3 * n - 2) // 4
        m_triples.append((6 * p + 1, g + 3 * p + 3, -(g + 9 * p + 4)))
        n_triples.append((9 * p + 1, g - 6 * p + 3, -(g + 3 * p + 4)))
    return with_negations(m_triples), with_negations(n_triples)


def _only_short(report: VerificationReport) -> bool:
    return set(report.rules()) == {"size"}


def _search_s12(
    rowsets: RowSets,
    column_of,
    params: Params,
    budget: SearchBudget,
    s1: Sequence[Block] = (),
    s2: Sequence[Block] = (),
) -> Optional[Tuple[List[Block], List[Block]]]:
    need = required_triples(params)
    used = {v for block in list(s1) + list(s2) for v in block.elements}
    ground = Block(
        frozenset((rowsets.r1.elements | rowsets.r2.elements) - used)
    )
    extra1 = search_zero_sum_blocks(
        ground,
        3,
        column_of,
        max(need - len(s1), 0),
        [(rowsets.r1, 1), (rowsets.r2, 2)],
        budget,
    )
    if extra1 is None:
        return None
    ground = Block(ground.elements - {v for b in extra1 for v in b.elements})
    extra2 = search_zero_sum_blocks(
        ground,
        3,
        column_of,
        max(need - len(s2), 0),
        [(rowsets.r1, 2), (rowsets.r2, 1)],
        budget,
    )
    if extra2 is None:
        return None
    return list(s1) + extra1, list(s2) + extra2


def build_s1_s2(
    n: int, k: int, budget: Optional[SearchBudget] = None
) -> Tuple[List[Block], List[Block]]:
    """
    The S1 and S2 triple families for an odd-k case.

    Small cases come from the table, n >= 34 from the closed form. A closed
    form that verifies but is too small is topped up by search; one that
    fails verification is replaced by search outright.

    Args:
        n: Even column count
        k: Odd block size, at least 5
        budget: Limits for the fallback search

    Returns:
        (S1, S2), each listed as triple, negation, triple, negation, ...

    Raises:
        InadmissibleParametersError: If (n, k) is not an odd-k case
        SearchExhaustedError: If the fallback search runs out of budget
        ConstructionDefectError: If no families pass verification
    """
    params = odd_params(n, k)
    budget = budget or SearchBudget()
    rowsets = row_sets(n)
    column_of = base_column_map(smr3_even(n))
    found: Optional[Tuple[List[Block], List[Block]]] = None
    try:
        if n >= FORMULA_S12_FROM:
            found = _formula_s12(params)
        else:
            found = small_case_s12(n, k)
    except (DuplicateEntryError, KeyError):
        found = None
    if found is not None:
        report = verify_s12(found[0], found[1], rowsets, params)
        if report.passed:
            return found
        if _only_short(report):
            found = _search_s12(rowsets, column_of, params, budget, *found)
        else:
            found = None
    if found is None:
        found = _search_s12(rowsets, column_of, params, budget)
    if found is None:
        found = ([], [])
    ensure(verify_s12(found[0], found[1], rowsets, params), f"S1/S2 for n={n}, k={k}")
    return found


def _formula_s3(n: int) -> List[Block]:
    alpha = (n - 8) // 12
    triples = [
        (3 + 6 * i, 6 * alpha + 9 + 6 * i, -(6 * alpha + 12 + 12 * i))
        for i in range(alpha + 1)
    ]
    triples.extend(
        (12 * alpha + 15 + 6 * i, 6 * alpha - 6 - 12 * i, -(18 * alpha + 9 - 6 * i))
        for i in range((alpha - 2) // 2 + 1)
    )
    return with_negations(triples)


def build_s3(n: int, k: int, budget: Optional[SearchBudget] = None) -> List[Block]:
    """
    The S3 triple family, all inside the third base row.

    Raises:
        InadmissibleParametersError: If (n, k) is not an odd-k case
        SearchExhaustedError: If the fallback search runs out of budget
        ConstructionDefectError: If no family passes verification
    """
    params = odd_params(n, k)
    budget = budget or SearchBudget()
    rowsets = row_sets(n)
    need = required_triples(params)
    family: Optional[List[Block]] = None
    try:
        if has_special_s3(n, k):
            family = special_s3(n, k)
        elif n > 30:
            family = _formula_s3(n)
    except DuplicateEntryError:
        family = None
    if family is not None:
        report = verify_s3(family, rowsets, params)
        if report.passed:
            return family
        if not _only_short(report):
            family = None
    used = {v for block in family or () for v in block.elements}
    extra = search_zero_sum_blocks(
        Block(rowsets.r3.elements - used),
        3,
        {},
        need - len(family or ()),
        [(rowsets.r3, 3)],
        budget,
    )
    family = list(family or ()) + list(extra or ())
    ensure(verify_s3(family, rowsets, params), f"S3 for n={n}, k={k}")
    return family


def triple_families(
    n: int, k: int, budget: Optional[SearchBudget] = None
) -> TripleFamilies:
    """All three families together with the p and alpha they are indexed by."""
    params = odd_params(n, k)
    s1, s2 = build_s1_s2(n, k, budget)
    s3 = build_s3(n, k, budget)
    return TripleFamilies(
        s1=tuple(s1),
        s2=tuple(s2),
        s3=tuple(s3),
        p=(params.q + 3) // 4,
        alpha=(n - 8) // 12,
    )


def build_partition_odd(
    n: int, k: int, budget: Optional[SearchBudget] = None
) -> Partition:
    """
    Partition the symbols of smr3_even(n) into 3n/k zero-sum k-blocks, k odd.

    Each of the q R1-heavy blocks is an S2 triple plus (k-3)/2 pairs of the
    first row; R2-heavy blocks pair S1 triples with the second row and R3
    blocks S3 triples with the third. Mixed blocks, one per unit of 3r/k,
    take a triple from every family and (k/3-3)/2 pairs from every row.
    Block order is R1-heavy, R2-heavy, R3, mixed. When the planner finds no
    column-disjoint selection, search_block_partition splits the base
    directly and its block order is kept.

    Raises:
        InadmissibleParametersError: If (n, k) is not an odd-k case
        UnsupportedCaseError: For (12, 9), which only the fixed 4 x 12 array covers
        ConstructionDefectError: If no column-disjoint split exists
        SearchExhaustedError: If the direct split runs out of budget
    """
    params = odd_params(n, k)
    if (n, k) == (12, 9):
        raise UnsupportedCaseError("n=12, k=9 is covered by the fixed 4x12 array")
    families = triple_families(n, k, budget)
    seeds = required_triples(params)
    pools = {
        "S1": families.s1[:seeds],
        "S2": families.s2[:seeds],
        "S3": families.s3[:seeds],
    }
    used = {v for pool in pools.values() for block in pool for v in block.elements}
    base = smr3_even(n)
    pairs_by_row = [
        [pair for pair in negation_pairs(base, row) if pair.value not in used]
        for row in range(3)
    ]
    chunk = (k - 3) // 2
    mixed = [
        BlockSpec(f"mixed-{i}", ((k // 3 - 3) // 2,) * 3, ("S1", "S2", "S3"))
        for i in range(params.mixed_count)
    ]
    heavy = (
        [BlockSpec("r1-heavy", (chunk, 0, 0), ("S2",))] * params.q
        + [BlockSpec("r2-heavy", (0, chunk, 0), ("S1",))] * params.q
        + [BlockSpec("r3", (0, 0, chunk), ("S3",))] * params.q
    )
    planner = BlockPlanner(mixed + heavy, pairs_by_row, pools, base_column_map(base))
    try:
        blocks = planner.plan()
    except ConstructionDefectError:
        blocks = search_block_partition(base, k, budget or SearchBudget())
        if blocks is None:
            raise ConstructionDefectError(
                f"no column-disjoint zero-sum {k}-blocks exist for n={n}"
            )
    else:
        blocks = blocks[len(mixed):] + blocks[: len(mixed)]
    ensure(verify_partition(blocks, base, k), f"odd-k partition for n={n}, k={k}")
    return Partition.of(blocks, base.cells.values())


def smr_square_k3(n: int) -> SparseRectangle:
    """
    An SMR(n,n;3,3) for any n >= 3, in closed form.

    Odd n is square_k3_odd. For even n, row j holds the negations of the
    values in column j of smr3_even(n), each kept in its own base column;
    those negations always sit in three different base columns.

    Raises:
        InadmissibleParametersError: If n < 3
    """
    if n < 3:
        raise InadmissibleParametersError(f"n < 3 (n={n})", n, n, 3)
    if n % 2:
        return square_k3_odd(n)
    base = smr3_even(n)
    blocks = [Block.of(-value for _, value in base.column(col)) for col in range(n)]
    return assemble(base, Partition.of(blocks, base.values()), params_new(n, n, 3))
