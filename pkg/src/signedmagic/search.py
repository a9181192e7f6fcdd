#!/usr/bin/env python3
"""Budgeted backtracking search for small signed magic and magic rectangles.

The searches here are the independent oracle for the constructions and the
producer for shapes no closed form covers. Every search is deterministic:
the same inputs and budget give the same answer. "None exists" is only
reported after the whole tree has been explored.
"""

import bisect
import itertools
import sys
import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Set, Tuple

from .core import Block, Cell, Params, SparseRectangle, symbol_set
from .errors import SearchExhaustedError
from .verifier import ensure, verify_mr, verify_smr

# count_smr refuses anything with more filled cells than this
COUNT_CELL_LIMIT = 16

# wall-clock reads happen once per this many ticks
_CLOCK_STRIDE = 256

Line = Tuple[str, int]


class SearchOutcome(str, Enum):
    FOUND = "found"
    EXHAUSTED = "budget-exhausted"
    NONE_EXISTS = "none-exists"


@dataclass(frozen=True)
class SearchBudget:
    """Node and wall-clock limits for one search call."""

    max_nodes: int = 10_000_000
    max_millis: int = 60_000

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_millis <= 0:
            raise ValueError("search budgets must be positive")


@dataclass
class SearchResult:
    """What a search produced and what it cost."""

    outcome: SearchOutcome
    rectangle: Optional[SparseRectangle] = None
    nodes: int = 0
    elapsed_ms: int = 0

    @property
    def found(self) -> bool:
        return self.outcome is SearchOutcome.FOUND


@dataclass(frozen=True)
class SmrCount:
    """A solution count, exact unless it saturated at the cap."""

    value: int
    saturated: bool = False

    def __str__(self) -> str:
        return f">= {self.value}" if self.saturated else str(self.value)


class _Stop(Exception):
    """Unwinds the recursion when the budget runs out or a caller is satisfied."""


class _Clock:
    """Counts search nodes and enforces both limits of a budget.

    Every loop that can run long calls tick, so the wall-clock limit holds
    even where a single node does a lot of work.
    """

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.exhausted = False
        self._start = time.monotonic()

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            self.exhausted = True
            raise _Stop
        if self.nodes % _CLOCK_STRIDE == 0 and self.elapsed_ms() > self.budget.max_millis:
            self.exhausted = True
            raise _Stop

    def elapsed_ms(self) -> int:
        return int((time.monotonic() - self._start) * 1000)


def _symbol_order(values) -> List[int]:
    """Ascending |v|, +v before -v."""
    return sorted(values, key=lambda v: (abs(v), v < 0))


def _deep_recursion(depth: int):
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * depth + 1000))
    return limit


class _Pool:
    """Unused values, kept sorted so line-sum bounds cost a slice."""

    def __init__(self, values: Sequence[int]):
        self.ascending = sorted(values)
        self.unused = set(values)

    def __contains__(self, value: object) -> bool:
        return value in self.unused

    def take(self, value: int) -> None:
        del self.ascending[bisect.bisect_left(self.ascending, value)]
        self.unused.remove(value)

    def give(self, value: int) -> None:
        bisect.insort(self.ascending, value)
        self.unused.add(value)

    def completes(self, partial: int, remaining: int) -> bool:
        """Can `remaining` distinct unused values bring `partial` to zero?"""
        need = -partial
        if remaining == 0:
            return partial == 0
        if remaining == 1:
            return need in self.unused
        values = self.ascending
        if len(values) < remaining:
            return False
        if remaining == 2:
            low, high = 0, len(values) - 1
            while low < high:
                pair = values[low] + values[high]
                if pair == need:
                    return True
                if pair < need:
                    low += 1
                else:
                    high -= 1
            return False
        return sum(values[:remaining]) <= need <= sum(values[-remaining:])


class _LineFill:
    """
    Put distinct values into a fixed set of cells so that every row and
    every column sums to zero.

    A line with one open cell forces that cell. Otherwise the first row
    with open cells is worked on, branching on its open cell whose column
    still has the most open cells; values go in ascending |v|, +v before
    -v. With sign normalisation on, the first branched value is >= 0,
    which drops one of every solution and its negation.
    """

    def __init__(
        self,
        cells: Sequence[Cell],
        values: Sequence[int],
        clock: _Clock,
        partner: Optional[Dict[Cell, Cell]] = None,
        normalise_sign: bool = False,
    ):
        self.cells = sorted(set(cells))
        self.order = _symbol_order(values)
        self.pool = _Pool(values)
        self.clock = clock
        self.partner = partner or {}
        self.normalise_sign = normalise_sign
        self.members: Dict[Line, List[Cell]] = {}
        for row, col in self.cells:
            self.members.setdefault(("row", row), []).append((row, col))
            self.members.setdefault(("col", col), []).append((row, col))
        self.total = {line: 0 for line in self.members}
        self.open = {line: len(cells) for line, cells in self.members.items()}
        self.rows = sorted({row for row, _ in self.cells})
        self.grid: Dict[Cell, int] = {}
        self.branched = False

    def run(self, on_solution: Callable[[Dict[Cell, int]], bool]) -> bool:
        """Explore; on_solution returns True to stop. Returns True if stopped."""
        self._on_solution = on_solution
        limit = _deep_recursion(len(self.cells))
        try:
            self._extend()
        except _Stop:
            return True
        finally:
            sys.setrecursionlimit(limit)
        return False

    @staticmethod
    def _lines(cell: Cell) -> Tuple[Line, Line]:
        return ("row", cell[0]), ("col", cell[1])

    def _place(self, cell: Cell, value: int) -> None:
        self.grid[cell] = value
        self.pool.take(value)
        for line in self._lines(cell):
            self.total[line] += value
            self.open[line] -= 1

    def _lift(self, cell: Cell) -> None:
        value = self.grid.pop(cell)
        self.pool.give(value)
        for line in self._lines(cell):
            self.total[line] -= value
            self.open[line] += 1

    def _assign(self, cell: Cell, value: int) -> Optional[List[Cell]]:
        if value not in self.pool:
            return None
        mate = self.partner.get(cell)
        if mate is None:
            self._place(cell, value)
            return [cell]
        if value == 0 or mate in self.grid or -value not in self.pool:
            return None
        self._place(cell, value)
        self._place(mate, -value)
        return [cell, mate]

    def _consistent(self, touched: Sequence[Cell]) -> bool:
        for cell in touched:
            for line in self._lines(cell):
                if not self.pool.completes(self.total[line], self.open[line]):
                    return False
        return True

    def _forced(self) -> Optional[Tuple[Cell, int]]:
        for line, count in self.open.items():
            if count == 1:
                for cell in self.members[line]:
                    if cell not in self.grid:
                        return cell, -self.total[line]
        return None

    def _branch_cell(self) -> Optional[Cell]:
        for row in self.rows:
            line = ("row", row)
            if self.open[line]:
                waiting = [cell for cell in self.members[line] if cell not in self.grid]
                return max(waiting, key=lambda cell: (self.open[("col", cell[1])], -cell[1]))
        return None

    def _try(self, cell: Cell, value: int) -> None:
        touched = self._assign(cell, value)
        if touched is None:
            return
        if self._consistent(touched):
            self._extend()
        for member in reversed(touched):
            self._lift(member)

    def _extend(self) -> None:
        self.clock.tick()
        forced = self._forced()
        if forced is not None:
            self._try(*forced)
            return
        cell = self._branch_cell()
        if cell is None:
            if self._on_solution(dict(self.grid)):
                raise _Stop
            return
        first = not self.branched
        self.branched = True
        for value in self.order:
            if first and self.normalise_sign and value < 0:
                continue
            self._try(cell, value)
        if first:
            self.branched = False


def _cyclic_pattern(m: int, n: int, k: int) -> Tuple[Cell, ...]:
    """Row i takes k consecutive columns, wrapping at n.

    Squares start row i at column i, a band of k diagonals; other shapes
    start it at column i*k.
    """
    step = 1 if m == n else k
    return tuple(
        sorted((row, (row * step + t) % n) for row in range(m) for t in range(k))
    )


def _rows_sorted(pattern: Sequence[Cell], m: int) -> Tuple[Cell, ...]:
    columns = [tuple(sorted(c for r, c in pattern if r == row)) for row in range(m)]
    return tuple(
        sorted((row, col) for row, cols in enumerate(sorted(columns)) for col in cols)
    )


def _patterns(
    m: int, n: int, k: int, s: int, clock: _Clock, canonical: bool = True
) -> Iterator[Tuple[Cell, ...]]:
    """Every placement of k cells per row and s per column.

    With canonical on, the column sets of successive rows never decrease,
    so each row permutation class is produced once.
    """
    if m * k != n * s or k > n or s > m:
        return
    count = [0] * n
    chosen: List[Tuple[int, ...]] = []

    def extend(row: int) -> Iterator[Tuple[Cell, ...]]:
        clock.tick()
        if row == m:
            yield tuple(sorted((i, c) for i, cols in enumerate(chosen) for c in cols))
            return
        left = m - row
        must = {c for c in range(n) if s - count[c] == left}
        if len(must) > k:
            return
        free = [c for c in range(n) if count[c] < s]
        for cols in itertools.combinations(free, k):
            clock.tick()
            if canonical and chosen and cols < chosen[-1]:
                continue
            if not must.issubset(cols):
                continue
            for c in cols:
                count[c] += 1
            chosen.append(cols)
            yield from extend(row + 1)
            chosen.pop()
            for c in cols:
                count[c] -= 1

    yield from extend(0)


def _fill_patterns(
    m: int,
    n: int,
    row_fill: int,
    col_fill: int,
    values: Sequence[int],
    clock: _Clock,
    on_solution: Callable[[Dict[Cell, int]], bool],
    canonical: bool = True,
) -> bool:
    """Fill patterns in turn; returns True if stopped.

    Canonical runs try the cyclic pattern first, then every row-sorted
    pattern, and normalise the sign of the first branched value.
    """
    seen = None
    try:
        if canonical and m * row_fill == n * col_fill and row_fill <= n:
            first = _cyclic_pattern(m, n, row_fill)
            if _LineFill(first, values, clock, normalise_sign=True).run(on_solution):
                return True
            seen = _rows_sorted(first, m)
        for pattern in _patterns(m, n, row_fill, col_fill, clock, canonical):
            if pattern == seen:
                continue
            fill = _LineFill(pattern, values, clock, normalise_sign=canonical)
            if fill.run(on_solution):
                return True
    except _Stop:
        return True
    return False


def _run_array_search(
    m: int,
    n: int,
    row_fill: int,
    col_fill: int,
    values: Sequence[int],
    budget: SearchBudget,
) -> Tuple[SearchOutcome, Optional[Dict[Cell, int]], _Clock]:
    clock = _Clock(budget)
    found: List[Dict[Cell, int]] = []

    def keep(cells: Dict[Cell, int]) -> bool:
        found.append(cells)
        return True

    _fill_patterns(m, n, row_fill, col_fill, values, clock, keep)
    if found:
        return SearchOutcome.FOUND, found[0], clock
    if clock.exhausted:
        return SearchOutcome.EXHAUSTED, None, clock
    return SearchOutcome.NONE_EXISTS, None, clock


def search_smr(params: Params, budget: SearchBudget) -> SearchResult:
    """
    Search for an SMR(m,n;k,s) over the signed symbol set.

    Params built with Params.unchecked may be inadmissible; the search then
    explores the whole tree and reports that none exists.

    Returns:
        SearchResult whose rectangle, when found, passes verify_smr
    """
    outcome, cells, clock = _run_array_search(
        params.m, params.n, params.k, params.s, list(symbol_set(params)), budget
    )
    rect = None
    if cells is not None:
        rect = SparseRectangle(params.m, params.n, cells)
        ensure(verify_smr(rect, params), f"searched {params}")
    return SearchResult(outcome, rect, clock.nodes, clock.elapsed_ms())


def search_mr(params: Params, budget: SearchBudget) -> SearchResult:
    """
    Search for a magic rectangle MR(m,n;r,s), r taken from params.k.

    Entries x in 0..mr-1 are searched as 2x-(mr-1), which turns constant
    line sums into zero line sums.
    """
    offset = params.m * params.k - 1
    centred = [2 * x - offset for x in range(params.m * params.k)]
    outcome, cells, clock = _run_array_search(
        params.m, params.n, params.k, params.s, centred, budget
    )
    rect = None
    if cells is not None:
        rect = SparseRectangle(
            params.m,
            params.n,
            {cell: (value + offset) // 2 for cell, value in cells.items()},
        )
        ensure(
            verify_mr(rect, params),
            f"searched MR({params.m},{params.n};{params.k},{params.s})",
        )
    return SearchResult(outcome, rect, clock.nodes, clock.elapsed_ms())


def count_smr(
    params: Params, cap: int, budget: Optional[SearchBudget] = None
) -> SmrCount:
    """
    Count SMR(m,n;k,s) arrays with no symmetry reduction, saturating at cap.

    Only tiny shapes are accepted (at most COUNT_CELL_LIMIT filled cells).

    Raises:
        ValueError: If the shape is too large or cap is not positive
        SearchExhaustedError: If the budget ran out below cap
    """
    if cap <= 0:
        raise ValueError("cap must be positive")
    if params.m * params.k > COUNT_CELL_LIMIT or params.n * params.s > COUNT_CELL_LIMIT:
        raise ValueError(
            f"counting is limited to {COUNT_CELL_LIMIT} filled cells, {params} has more"
        )
    clock = _Clock(budget or SearchBudget())
    total = 0

    def tally(cells: Dict[Cell, int]) -> bool:
        nonlocal total
        total += 1
        return total >= cap

    stopped = _fill_patterns(
        params.m,
        params.n,
        params.k,
        params.s,
        list(symbol_set(params)),
        clock,
        tally,
        canonical=False,
    )
    if stopped and clock.exhausted:
        raise SearchExhaustedError(f"all {params}", clock.nodes, clock.elapsed_ms())
    return SmrCount(total, saturated=stopped)


def search_zero_sum_blocks(
    ground: Block,
    block_size: int,
    column_of: Dict[int, int],
    count: int,
    quotas: Sequence[Tuple[Block, int]],
    budget: SearchBudget,
) -> Optional[List[Block]]:
    """
    Find a negation-closed family of disjoint zero-sum blocks.

    Args:
        ground: Values the blocks may use
        block_size: Elements per block
        column_of: Base column of each value; a block never repeats a column
        count: Family size, even (each block comes with its negation)
        quotas: (row set, how many elements each block takes from it)
        budget: Search limits

    Returns:
        The blocks, each followed by its negation, or None if none exist

    Raises:
        ValueError: If count is odd or the quotas do not add up to block_size
        SearchExhaustedError: If the budget runs out first
    """
    if count % 2:
        raise ValueError("a negation-closed family has an even number of blocks")
    if sum(quota for _, quota in quotas) != block_size:
        raise ValueError("quotas must add up to the block size")
    pools = [
        _symbol_order(row.elements & ground.elements) for row, _ in quotas
    ]
    for pool, (_, quota) in zip(pools, quotas):
        if count * quota > len(pool):
            return None
    if count == 0:
        return []

    clock = _Clock(budget)
    chosen: List[Block] = []
    used: Set[int] = set()

    def extend(start: int) -> bool:
        clock.tick()
        if 2 * len(chosen) == count:
            return True
        for index in range(start, len(candidates)):
            clock.tick()
            block = candidates[index]
            mate = block.negated()
            if block.elements & used or mate.elements & used:
                continue
            chosen.append(block)
            used.update(block.elements | mate.elements)
            if extend(index + 1):
                return True
            chosen.pop()
            used.difference_update(block.elements | mate.elements)
        return False

    limit = _deep_recursion(count)
    try:
        candidates = list(
            _quota_blocks(pools, [quota for _, quota in quotas], column_of, clock)
        )
        found = extend(0)
    except _Stop:
        raise SearchExhaustedError(
            f"{count} zero-sum {block_size}-blocks", clock.nodes, clock.elapsed_ms()
        )
    finally:
        sys.setrecursionlimit(limit)
    if not found:
        return None
    family: List[Block] = []
    for block in chosen:
        family.extend([block, block.negated()])
    return family


def _quota_blocks(
    pools: Sequence[Sequence[int]],
    quotas: Sequence[int],
    column_of: Dict[int, int],
    clock: _Clock,
) -> Iterator[Block]:
    """Zero-sum blocks meeting the quotas, one of each negation pair.

    All slots but the last are enumerated; the last value is whatever
    brings the sum to zero.
    """
    slots = [index for index, quota in enumerate(quotas) for _ in range(quota)]
    ranks = [{v: i for i, v in enumerate(pool)} for pool in pools]

    def extend(slot: int, start: int, picked: List[int], total: int):
        clock.tick()
        pool_index = slots[slot]
        if slot == len(slots) - 1:
            value = -total
            if ranks[pool_index].get(value, -1) >= start:
                yield picked + [value]
            return
        pool = pools[pool_index]
        same_pool = slots[slot + 1] == pool_index
        for position in range(start, len(pool)):
            value = pool[position]
            yield from extend(
                slot + 1,
                position + 1 if same_pool else 0,
                picked + [value],
                total + value,
            )

    for values in extend(0, 0, [], 0):
        if len(set(values)) != len(values) or any(-v in values for v in values):
            continue
        columns = [column_of.get(v, ("free", v)) for v in values]
        if len(set(columns)) != len(columns):
            continue
        block = Block(frozenset(values))
        if _sign_key(block) < _sign_key(block.negated()):
            yield block


def _sign_key(block: Block) -> Tuple[Tuple[int, bool], ...]:
    return tuple(sorted((abs(v), v < 0) for v in block.elements))


class _BlockPartition:
    """
    Split the values of a filled rectangle into zero-sum k-blocks that
    never take two values from one column.

    Blocks are built one at a time around the unplaced value of largest
    magnitude. The other columns are then scanned left to right, each
    giving one value or being skipped; the last value of a block is the
    one that closes its sum. A column holding as many unplaced values as
    there are blocks left to build must give one to the current block.
    """

    def __init__(self, base: SparseRectangle, k: int, clock: _Clock):
        self.k = k
        self.clock = clock
        self.width = base.cols
        self.needed = len(base.values()) // k
        self.column_of = {value: col for _, col, value in base.entries()}
        self.unplaced: List[List[int]] = [[] for _ in range(base.cols)]
        for value in _symbol_order(base.values()):
            self.unplaced[self.column_of[value]].append(value)
        self.waiting = set(base.values())
        self.blocks: List[Block] = []
        # per-block scan state, stacked as blocks nest
        self._scan: List[Tuple[List[int], List[bool], Dict[int, int]]] = []

    def _take(self, value: int) -> int:
        column = self.unplaced[self.column_of[value]]
        index = column.index(value)
        del column[index]
        self.waiting.discard(value)
        return index

    def _put_back(self, value: int, index: int) -> None:
        self.unplaced[self.column_of[value]].insert(index, value)
        self.waiting.add(value)

    def build(self) -> bool:
        """Build the remaining blocks; True once all of them exist."""
        self.clock.tick()
        done = len(self.blocks)
        if done == self.needed:
            return True
        later = self.needed - done - 1
        head = max(self.waiting, key=lambda v: (abs(v), v))
        home = self.column_of[head]
        head_index = self._take(head)
        found = False
        columns = [c for c in range(self.width) if c != home and self.unplaced[c]]
        if len(self.unplaced[home]) <= later and all(
            len(self.unplaced[c]) <= later + 1 for c in columns
        ):
            forced = [len(self.unplaced[c]) > later for c in columns]
            self._scan.append((columns, forced, {c: i for i, c in enumerate(columns)}))
            found = self._pick(0, [head], head)
            self._scan.pop()
        if not found:
            self._put_back(head, head_index)
        return found

    def _reachable(self, index: int, partial: int, need: int) -> bool:
        """Can `need` values from the columns at index onwards close the sum?"""
        columns, forced, _ = self._scan[-1]
        lows: List[int] = []
        highs: List[int] = []
        low = high = 0
        forced_left = 0
        for position in range(index, len(columns)):
            column = self.unplaced[columns[position]]
            if forced[position]:
                forced_left += 1
                low += min(column)
                high += max(column)
            else:
                lows.append(min(column))
                highs.append(max(column))
        free = need - forced_left
        if free < 0 or free > len(lows):
            return False
        if free:
            low += sum(sorted(lows)[:free])
            high += sum(sorted(highs)[-free:])
        return low <= -partial <= high

    def _close(self, chosen: List[int]) -> bool:
        self.blocks.append(Block(frozenset(chosen)))
        if self.build():
            return True
        self.blocks.pop()
        return False

    def _pick(self, index: int, chosen: List[int], partial: int) -> bool:
        self.clock.tick()
        columns, forced, slot = self._scan[-1]
        need = self.k - len(chosen)
        if need == 0:
            return partial == 0 and not any(forced[index:]) and self._close(chosen)
        if not self._reachable(index, partial, need):
            return False
        if need == 1:
            last = -partial
            position = slot.get(self.column_of.get(last, -1), -1)
            if last not in self.waiting or position < index:
                return False
            if any(forced[index:position]) or any(forced[position + 1 :]):
                return False
            last_index = self._take(last)
            if self._close(chosen + [last]):
                return True
            self._put_back(last, last_index)
            return False
        for value in list(self.unplaced[columns[index]]):
            self.clock.tick()
            value_index = self._take(value)
            if self._pick(index + 1, chosen + [value], partial + value):
                return True
            self._put_back(value, value_index)
        return not forced[index] and self._pick(index + 1, chosen, partial)


def search_block_partition(
    base: SparseRectangle, k: int, budget: SearchBudget
) -> Optional[List[Block]]:
    """
    Split the values of a filled rectangle into zero-sum k-blocks, no block
    holding two values of one column.

    Returns:
        The blocks in build order, or None if no such split exists

    Raises:
        SearchExhaustedError: If the budget runs out first
    """
    values = base.values()
    if k <= 0 or not values or len(values) % k:
        return None
    clock = _Clock(budget)
    partition = _BlockPartition(base, k, clock)
    if any(len(column) > partition.needed for column in partition.unplaced):
        return None
    limit = _deep_recursion(partition.needed * (base.cols + 2))
    try:
        found = partition.build()
    except _Stop:
        raise SearchExhaustedError(
            f"a column-disjoint split into zero-sum {k}-blocks",
            clock.nodes,
            clock.elapsed_ms(),
        )
    finally:
        sys.setrecursionlimit(limit)
    return list(partition.blocks) if found else None


def search_sum_triples(
    values: Sequence[int], budget: SearchBudget
) -> Optional[List[Tuple[int, int, int]]]:
    """
    Split distinct positive integers into triples (a, b, a + b).

    The largest unused value is always the sum; its smaller part is tried
    in ascending order.

    Returns:
        The triples with a < b, or None if no split exists

    Raises:
        SearchExhaustedError: If the budget runs out first
    """
    pool = set(values)
    if len(pool) != len(values) or len(pool) % 3 or sum(pool) % 2:
        return None
    clock = _Clock(budget)
    triples: List[Tuple[int, int, int]] = []

    def extend() -> bool:
        clock.tick()
        if not pool:
            return True
        top = max(pool)
        pool.remove(top)
        for a in sorted(pool):
            b = top - a
            if b <= a:
                break
            if b not in pool:
                continue
            pool.difference_update((a, b))
            triples.append((a, b, top))
            if extend():
                return True
            triples.pop()
            pool.update((a, b))
        pool.add(top)
        return False

    limit = _deep_recursion(len(pool))
    try:
        found = extend()
    except _Stop:
        raise SearchExhaustedError(
            "a split into additive triples", clock.nodes, clock.elapsed_ms()
        )
    finally:
        sys.setrecursionlimit(limit)
    return list(triples) if found else None


def search_pattern(
    rows: int,
    cols: int,
    cells: Sequence[Cell],
    values: Sequence[int],
    budget: SearchBudget,
    partner: Optional[Dict[Cell, Cell]] = None,
) -> SearchResult:
    """
    Put values into a fixed set of cells so every line sums to zero.

    Args:
        rows: Row count
        cols: Column count
        cells: Cells to fill; len(cells) must equal len(values)
        values: Symbols, each used once
        budget: Search limits
        partner: Optional cell pairing; a cell and its partner hold v and -v

    Returns:
        SearchResult with the filled rectangle when found
    """
    if len(set(cells)) != len(values):
        raise ValueError("a pattern needs exactly one cell per value")
    clock = _Clock(budget)
    found: List[Dict[Cell, int]] = []

    def keep(grid: Dict[Cell, int]) -> bool:
        found.append(grid)
        return True

    _LineFill(cells, values, clock, partner).run(keep)
    if found:
        return SearchResult(
            SearchOutcome.FOUND,
            SparseRectangle(rows, cols, found[0]),
            clock.nodes,
            clock.elapsed_ms(),
        )
    outcome = SearchOutcome.EXHAUSTED if clock.exhausted else SearchOutcome.NONE_EXISTS
    return SearchResult(outcome, None, clock.nodes, clock.elapsed_ms())
