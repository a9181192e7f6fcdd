"""Rectangles with an odd number of columns.

Shapes with 3 | k fold the rows of the odd k=3 square onto fewer rows.
The fully filled 3 x n array is a 3 x 3 core plus column pairs built
from additive triples; every other shape splits that array into
column-disjoint zero-sum k-blocks and assembles them as rows.
"""

from typing import Iterator, Optional, Tuple

from .base import smr3_from_triples, square_k3_odd
from .block_plan import assemble
from .core import Partition, SparseRectangle, params_new, symbol_set
from .errors import (
    ConstructionDefectError,
    InadmissibleParametersError,
    SearchExhaustedError,
    UnsupportedCaseError,
)
from .search import (
    SearchBudget,
    search_block_partition,
    search_pattern,
    search_sum_triples,
)
from .verifier import ensure, verify_smr


def _cores(top: int) -> Iterator[Tuple[int, int]]:
    """(p, q) with |p|, |q|, |p+q|, |2p+q| distinct and within 1..top."""
    for p in range(1, top + 1):
        for q in range(-top, top + 1):
            magnitudes = {p, abs(q), abs(p + q), abs(2 * p + q)}
            if 0 not in magnitudes and len(magnitudes) == 4 and max(magnitudes) <= top:
                yield p, q


def smr3_odd(n: int, budget: Optional[SearchBudget] = None) -> SparseRectangle:
    """
    Fully filled SMR(3,n) for odd n.

    Cores are tried in order; the first whose leftover magnitudes split
    into additive triples gives the array. Shapes no core fits (n = 5)
    are filled by pattern search.

    Raises:
        InadmissibleParametersError: If n is even or below 3
        SearchExhaustedError: If a search runs out of budget
    """
    if n < 3 or n % 2 == 0:
        raise InadmissibleParametersError("n must be odd and at least 3", 3, n, n)
    budget = budget or SearchBudget()
    top = (3 * n - 1) // 2
    everything = set(range(1, top + 1))
    tried = set()
    for p, q in _cores(top):
        core = frozenset({p, abs(q), abs(p + q), abs(2 * p + q)})
        if core in tried:
            continue
        tried.add(core)
        rest = sorted(everything - core)
        if sum(rest) % 2:
            continue
        triples = search_sum_triples(rest, budget)
        if triples is not None:
            return smr3_from_triples(p, q, triples)

    params = params_new(3, n, n)
    cells = [(row, col) for row in range(3) for col in range(n)]
    result = search_pattern(3, n, cells, list(symbol_set(params)), budget)
    if not result.found:
        raise SearchExhaustedError(
            f"base SMR(3,{n})", result.nodes, result.elapsed_ms
        )
    ensure(verify_smr(result.rectangle, params), f"searched base SMR(3,{n})")
    return result.rectangle


def merged_square(m: int, n: int) -> SparseRectangle:
    """
    SMR(m,n;3n/m,3) for odd n and m | n, by moving row i of the odd k=3
    square to row i mod m.

    Raises:
        InadmissibleParametersError: If (m, n, 3n/m) is not admissible
        UnsupportedCaseError: If n is even or m does not divide n
        ConstructionDefectError: If two folded rows meet in one cell
    """
    if n % 2 == 0 or m <= 0 or n % m:
        raise UnsupportedCaseError(f"folding needs odd n and m | n, got m={m}, n={n}")
    params = params_new(m, n, 3 * n // m)
    cells = {}
    for (row, col), value in square_k3_odd(n).cells.items():
        cell = (row % m, col)
        if cell in cells:
            raise ConstructionDefectError(
                f"folded rows of SMR({n},{n};3,3) meet at {cell}"
            )
        cells[cell] = value
    rect = SparseRectangle(m, n, cells)
    ensure(verify_smr(rect, params), f"folded {params}")
    return rect


def odd_assembly(
    m: int, n: int, k: int, budget: Optional[SearchBudget] = None
) -> Optional[SparseRectangle]:
    """
    SMR(m,n;k,3) for odd n from the blocks of a column-disjoint split of
    smr3_odd(n).

    Returns:
        The assembled rectangle, or None if no split exists

    Raises:
        InadmissibleParametersError: If (m, n, k) is not admissible
        SearchExhaustedError: If a search runs out of budget
    """
    params = params_new(m, n, k)
    budget = budget or SearchBudget()
    base = smr3_odd(n, budget)
    blocks = search_block_partition(base, k, budget)
    if blocks is None:
        return None
    return assemble(base, Partition.of(blocks, base.values()), params)
