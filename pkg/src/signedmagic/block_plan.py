#!/usr/bin/env python3
"""Column-disjoint block filling and the blocks-to-rows assembly.

A plan is a list of block specs. Each spec draws zero or more seed triples
from named triple families and a number of negation pairs from each base
row. The planner picks seeds and pairs so that no block holds two values
from one base column, backtracking when a greedy choice runs into a dead
end.
"""

import itertools
import sys
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Sequence, Set, Tuple

from .core import Block, Cell, Params, Partition, SparseRectangle
from .errors import (
    ConstructionDefectError,
    GroundSetMismatchError,
    InvalidPartitionError,
    VerificationError,
)
from .verifier import ensure, verify_smr


class NegationPair(NamedTuple):
    """A value x > 0 and -x from one base row, with their columns."""

    value: int
    column: int
    mate_column: int

    @property
    def members(self) -> Tuple[int, int]:
        return (self.value, -self.value)

    @property
    def columns(self) -> Set[int]:
        return {self.column, self.mate_column}


@dataclass(frozen=True)
class BlockSpec:
    """What one block is made of."""

    label: str
    demand: Tuple[int, int, int]
    seed_pools: Tuple[str, ...] = ()


@dataclass
class BlockPlanner:
    """
    Fill block specs from per-row pair pools and seed families.

    Every pair and every seed must be consumed exactly once, so the
    demands have to add up to the pool sizes.
    """

    specs: Sequence[BlockSpec]
    pairs_by_row: Sequence[Sequence[NegationPair]]
    pools: Dict[str, Sequence[Block]]
    column_of: Dict[int, int]
    max_nodes: int = 500_000
    nodes: int = field(default=0, init=False)

    def plan(self) -> List[Block]:
        """
        Run the search.

        Returns:
            One block per spec, in spec order

        Raises:
            ConstructionDefectError: If the demands do not match the pools,
                or no assignment is found within the node budget
        """
        self._check_totals()
        count = len(self.specs)
        self.nodes = 0
        self._exhausted = False
        self._seeds: List[List[Block]] = [[] for _ in range(count)]
        self._first_seed = [-1] * count
        self._seed_columns: List[Set[int]] = [set() for _ in range(count)]
        self._used_seeds: Dict[str, Set[int]] = {name: set() for name in self.pools}
        self._chosen: List[List[NegationPair]] = [[] for _ in range(count)]
        self._used_pairs: List[Set[int]] = [set() for _ in range(3)]

        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 10 * count + 1000))
        try:
            found = self._assign_seeds(0)
        finally:
            sys.setrecursionlimit(limit)
        if not found:
            if self._exhausted:
                raise ConstructionDefectError(
                    f"no column-disjoint block selection within {self.max_nodes} nodes"
                )
            raise ConstructionDefectError(
                "column-disjoint block selection does not exist for these pools"
            )
        blocks = []
        for index in range(count):
            values: List[int] = []
            for seed in self._seeds[index]:
                values.extend(seed.elements)
            for pair in self._chosen[index]:
                values.extend(pair.members)
            blocks.append(Block.of(values))
        return blocks

    def _check_totals(self) -> None:
        for row in range(3):
            wanted = sum(spec.demand[row] for spec in self.specs)
            if wanted != len(self.pairs_by_row[row]):
                raise ConstructionDefectError(
                    f"row {row} offers {len(self.pairs_by_row[row])} pairs, "
                    f"blocks want {wanted}"
                )
        for name, pool in self.pools.items():
            wanted = sum(spec.seed_pools.count(name) for spec in self.specs)
            if wanted != len(pool):
                raise ConstructionDefectError(
                    f"family {name} offers {len(pool)} seeds, blocks want {wanted}"
                )

    def _tick(self) -> bool:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            self._exhausted = True
        return not self._exhausted

    def _same_shape(self, index: int) -> bool:
        return index > 0 and self.specs[index] == self.specs[index - 1]

    def _assign_seeds(self, index: int) -> bool:
        if index == len(self.specs):
            self._rank_pairs()
            return self._assign_pairs(0)
        return self._seed_slot(index, 0, set())

    def _seed_slot(self, index: int, slot: int, occupied: Set[int]) -> bool:
        spec = self.specs[index]
        if slot == len(spec.seed_pools):
            self._seed_columns[index] = occupied
            return self._assign_seeds(index + 1)
        name = spec.seed_pools[slot]
        start = 0
        if slot == 0 and self._same_shape(index):
            # interchangeable blocks take their first seeds in increasing order
            start = self._first_seed[index - 1] + 1
        for position in range(start, len(self.pools[name])):
            if position in self._used_seeds[name]:
                continue
            seed = self.pools[name][position]
            columns = {self.column_of[v] for v in seed.elements}
            if len(columns) < len(seed) or columns & occupied:
                continue
            if not self._tick():
                return False
            self._used_seeds[name].add(position)
            self._seeds[index].append(seed)
            if slot == 0:
                self._first_seed[index] = position
            if self._seed_slot(index, slot + 1, occupied | columns):
                return True
            self._used_seeds[name].discard(position)
            self._seeds[index].pop()
            if self._exhausted:
                return False
        return False

    def _rank_pairs(self) -> None:
        # pairs that clash with a later block's seeds go first, so they are
        # used up before that block is reached
        self._clashes: List[List[Set[int]]] = []
        for row in range(3):
            clashes = []
            for pair in self.pairs_by_row[row]:
                clashes.append(
                    {
                        index
                        for index, columns in enumerate(self._seed_columns)
                        if self.specs[index].demand[row] and pair.columns & columns
                    }
                )
            self._clashes.append(clashes)

    def _assign_pairs(self, index: int) -> bool:
        if index == len(self.specs):
            return True
        return self._pair_row(index, 0, set(self._seed_columns[index]))

    def _pair_row(self, index: int, row: int, occupied: Set[int]) -> bool:
        if row == 3:
            return self._assign_pairs(index + 1)
        need = self.specs[index].demand[row]
        if need == 0:
            return self._pair_row(index, row + 1, occupied)
        pool = self.pairs_by_row[row]
        clashes = self._clashes[row]
        candidates = [
            position
            for position in range(len(pool))
            if position not in self._used_pairs[row]
            and not (pool[position].columns & occupied)
        ]
        candidates.sort(
            key=lambda position: (
                not any(later > index for later in clashes[position]),
                position,
            )
        )
        for combo in itertools.combinations(candidates, need):
            if not self._tick():
                return False
            columns: Set[int] = set()
            for position in combo:
                columns |= pool[position].columns
            self._used_pairs[row].update(combo)
            self._chosen[index].extend(pool[position] for position in combo)
            if self._pair_row(index, row + 1, occupied | columns):
                return True
            self._used_pairs[row].difference_update(combo)
            del self._chosen[index][-need:]
            if self._exhausted:
                return False
        return False


def assemble(base: SparseRectangle, p2: Partition, params: Params) -> SparseRectangle:
    """
    Turn a zero-sum partition of a base rectangle's symbols into a new rectangle.

    Block i becomes row i; each of its values keeps the column it has in
    the base. Blocks meeting every base column at most once are exactly
    what makes the placement collision-free.

    Args:
        base: Fully filled SMR(s,n) whose columns fix the placement
        p2: Zero-sum k-blocks partitioning the base symbols
        params: Target parameters (m, n, k, s), m being the block count

    Returns:
        The verified SMR(m,n;k,s)

    Raises:
        VerificationError: If base is not a fully filled signed magic rectangle
        GroundSetMismatchError: If p2 does not cover exactly the base symbols
        InvalidPartitionError: If block count, sizes or sums are wrong, or two
            values of one block share a base column
    """
    base_params = Params.unchecked(params.s, params.n, params.n, params.s)
    report = verify_smr(base, base_params)
    if not report.passed:
        raise VerificationError(f"base is not a fully filled {base_params}", report)
    where = base.position_of()
    if p2.ground != frozenset(where):
        raise GroundSetMismatchError("partition and base have different symbols")
    if len(p2) != params.m:
        raise InvalidPartitionError(f"{len(p2)} blocks for {params.m} rows")
    cells: Dict[Cell, int] = {}
    for row, block in enumerate(p2):
        if len(block) != params.k:
            raise InvalidPartitionError(
                f"block {row} has {len(block)} elements, not {params.k}"
            )
        if block.total:
            raise InvalidPartitionError(f"block {row} sums to {block.total}")
        for value in block:
            cell = (row, where[value][1])
            if cell in cells:
                raise InvalidPartitionError(
                    f"cell collision at row {row}, column {cell[1]}: "
                    f"{cells[cell]} and {value}"
                )
            cells[cell] = value
    rect = SparseRectangle(params.m, params.n, cells)
    ensure(verify_smr(rect, params), f"assembled {params}")
    return rect
