"""Zero-sum k-blocks of the base rectangle's symbols for even k."""

from typing import Dict, List

from .base import smr3_even
from .block_plan import BlockPlanner, BlockSpec, NegationPair
from .core import Params, Partition, SparseRectangle, params_new
from .errors import InadmissibleParametersError, InvalidPartitionError
from .verifier import ensure, verify_partition


def negation_pairs(rect: SparseRectangle, row: int) -> List[NegationPair]:
    """
    The {x, -x} pairs of one row with their columns, by ascending |x|.

    Raises:
        InvalidPartitionError: If the row is not closed under negation
    """
    column_of: Dict[int, int] = {value: col for col, value in rect.row(row)}
    pairs = []
    for value in sorted(column_of, key=abs):
        if value == 0 or -value not in column_of:
            raise InvalidPartitionError(f"row {row} is not negation-closed at {value}")
        if value > 0:
            pairs.append(NegationPair(value, column_of[value], column_of[-value]))
    return pairs


def base_column_map(base: SparseRectangle) -> Dict[int, int]:
    return {value: cell[1] for value, cell in base.position_of().items()}


def even_params(n: int, k: int) -> Params:
    """
    Validate an even (n, k) pair for the even-k builder.

    Raises:
        InadmissibleParametersError: If n or k is odd, k < 4, or k does not divide 3n
    """
    if n % 2 or k % 2 or k < 4:
        raise InadmissibleParametersError(
            "the even-k builder needs even n and even k >= 4", 0, n, k
        )
    if (3 * n) % k:
        raise InadmissibleParametersError("k must divide 3n", 0, n, k)
    return params_new(3 * n // k, n, k)


def build_partition_even(n: int, k: int) -> Partition:
    """
    Partition the symbols of smr3_even(n) into 3n/k zero-sum k-blocks.

    Ordinary blocks are k/2 negation pairs from one row. When r = k/3 or
    2k/3, one or two mixed blocks take k/6 pairs from each row with all
    columns distinct; they come last.

    Args:
        n: Even column count
        k: Even block size, at least 4, dividing 3n

    Returns:
        Partition near-orthogonal to the base columns

    Raises:
        InadmissibleParametersError: If (n, k) is not admissible
        ConstructionDefectError: If no column-disjoint mixed block is found
    """
    params = even_params(n, k)
    base = smr3_even(n)
    pairs_by_row = [negation_pairs(base, row) for row in range(3)]
    mixed = [BlockSpec(f"mixed-{i}", (k // 6,) * 3) for i in range(params.mixed_count)]
    ordinary = []
    for row in range(3):
        demand = tuple(k // 2 if i == row else 0 for i in range(3))
        ordinary.extend(
            BlockSpec(f"row-{row}", demand) for _ in range(params.q)
        )
    planner = BlockPlanner(mixed + ordinary, pairs_by_row, {}, base_column_map(base))
    blocks = planner.plan()
    blocks = blocks[len(mixed):] + blocks[: len(mixed)]
    ensure(verify_partition(blocks, base, k), f"even-k partition for n={n}, k={k}")
    return Partition.of(blocks, base.cells.values())
