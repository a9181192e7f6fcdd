"""Core value types: parameters, symbol sets, sparse rectangles and blocks.

Indices are 0-based throughout. Every type is immutable once built.
"""

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from .errors import (
    DimensionMismatchError,
    DuplicateEntryError,
    InadmissibleParametersError,
    InvalidPartitionError,
)

Cell = Tuple[int, int]


def admissibility_violation(m: int, n: int, k: int, s: int = 3) -> Optional[str]:
    """
    Name the first admissibility condition that (m, n, k) violates.

    Args:
        m: Row count
        n: Column count
        k: Filled cells per row
        s: Filled cells per column

    Returns:
        A short description of the violated condition, or None
    """
    if m <= 0 or n <= 0 or k <= 0 or s <= 0:
        return "m, n, k and s must be positive"
    if m * k != n * s:
        return f"mk != {s}n ({m * k} != {n * s})"
    if s == 3:
        if m < 3:
            return f"m < 3 (m={m})"
        if k < 3:
            return f"k < 3 (k={k})"
        if m > n:
            return f"m > n ({m} > {n})"
        if k > n:
            return f"k > n ({k} > {n})"
    elif m > n * s or k > n:
        return "fill counts exceed the array"
    return None


@dataclass(frozen=True)
class Params:
    """Rectangle parameters with the derived quantities used by the constructions."""

    m: int
    n: int
    k: int
    s: int = 3
    admissible: bool = True
    violation: Optional[str] = None

    @classmethod
    def unchecked(cls, m: int, n: int, k: int, s: int = 3) -> "Params":
        """Build parameters without rejecting inadmissible triples."""
        violation = admissibility_violation(m, n, k, s)
        return cls(m=m, n=n, k=k, s=s, admissible=violation is None, violation=violation)

    @property
    def q(self) -> int:
        return self.n // self.k if self.k > 0 else 0

    @property
    def r(self) -> int:
        return self.n - self.k * self.q

    @property
    def ell(self) -> int:
        """Rows of the target rectangle, sn/k (0 when k does not divide sn)."""
        if self.k <= 0 or (self.s * self.n) % self.k:
            return 0
        return self.s * self.n // self.k

    @property
    def mixed_count(self) -> int:
        """Mixed blocks needed: 0, 1 or 2 for r = 0, k/3, 2k/3."""
        if self.k <= 0:
            return 0
        return 3 * self.r // self.k

    @property
    def cells(self) -> int:
        return self.m * self.k

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.m, self.n, self.k)

    def __str__(self) -> str:
        return f"SMR({self.m},{self.n};{self.k},{self.s})"


def params_new(m: int, n: int, k: int) -> Params:
    """
    Validate an SMR(m,n;k,3) parameter triple.

    Args:
        m: Row count
        n: Column count
        k: Filled cells per row

    Returns:
        Admissible Params with s=3

    Raises:
        InadmissibleParametersError: If mk != 3n or a bound 3 <= m,k <= n fails
    """
    params = Params.unchecked(m, n, k, 3)
    if not params.admissible:
        raise InadmissibleParametersError(params.violation, m, n, k)
    return params


@dataclass(frozen=True)
class SymbolSet:
    """The symmetric interval of symbols, with 0 present only when mk is odd."""

    lo: int
    hi: int
    contains_zero: bool

    def __contains__(self, value: object) -> bool:
        if not isinstance(value, int) or isinstance(value, bool):
            return False
        if value == 0:
            return self.contains_zero
        return self.lo <= value <= self.hi

    def __iter__(self) -> Iterator[int]:
        for value in range(self.lo, self.hi + 1):
            if value != 0 or self.contains_zero:
                yield value

    def __len__(self) -> int:
        return self.hi - self.lo + (1 if self.contains_zero else 0)

    def as_frozenset(self) -> FrozenSet[int]:
        return frozenset(self)


def symbol_set(params: Params) -> SymbolSet:
    """Return X for the given parameters, chosen by the parity of mk."""
    size = params.m * params.k
    if size % 2:
        half = (size - 1) // 2
        return SymbolSet(lo=-half, hi=half, contains_zero=True)
    half = size // 2
    return SymbolSet(lo=-half, hi=half, contains_zero=False)


@dataclass(frozen=True)
class SparseRectangle:
    """An m x n grid holding only its filled cells."""

    rows: int
    cols: int
    cells: Mapping[Cell, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("rectangle dimensions must be non-negative")
        frozen = {}
        for (row, col), value in self.cells.items():
            if not (0 <= row < self.rows and 0 <= col < self.cols):
                raise IndexError(
                    f"cell ({row}, {col}) outside a {self.rows}x{self.cols} array"
                )
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"cell ({row}, {col}) holds non-integer {value!r}")
            frozen[(row, col)] = value
        object.__setattr__(self, "cells", MappingProxyType(frozen))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Optional[int]]]) -> "SparseRectangle":
        """Build a rectangle from nested lists, None marking an empty cell."""
        width = max((len(row) for row in rows), default=0)
        cells = {}
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                if value is not None:
                    cells[(i, j)] = value
        return cls(rows=len(rows), cols=width, cells=cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseRectangle):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and dict(self.cells) == dict(other.cells)
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, frozenset(self.cells.items())))

    def get(self, row: int, col: int) -> Optional[int]:
        return self.cells.get((row, col))

    def to_rows(self) -> List[List[Optional[int]]]:
        grid: List[List[Optional[int]]] = [[None] * self.cols for _ in range(self.rows)]
        for (row, col), value in self.cells.items():
            grid[row][col] = value
        return grid

    def row(self, index: int) -> List[Tuple[int, int]]:
        """Filled (column, value) pairs of one row, by column."""
        return sorted(
            (col, value) for (row, col), value in self.cells.items() if row == index
        )

    def column(self, index: int) -> List[Tuple[int, int]]:
        """Filled (row, value) pairs of one column, by row."""
        return sorted(
            (row, value) for (row, col), value in self.cells.items() if col == index
        )

    def entries(self) -> List[Tuple[int, int, int]]:
        """All (row, col, value) triples sorted by (row, col)."""
        return sorted((row, col, value) for (row, col), value in self.cells.items())

    def values(self) -> List[int]:
        return [value for _, _, value in self.entries()]

    def permute_rows(self, order: Sequence[int]) -> "SparseRectangle":
        """Row i of the result is row order[i] of this rectangle."""
        position = {source: target for target, source in enumerate(order)}
        return SparseRectangle(
            self.rows,
            self.cols,
            {(position[r], c): v for (r, c), v in self.cells.items()},
        )

    def permute_columns(self, order: Sequence[int]) -> "SparseRectangle":
        """Column j of the result is column order[j] of this rectangle."""
        position = {source: target for target, source in enumerate(order)}
        return SparseRectangle(
            self.rows,
            self.cols,
            {(r, position[c]): v for (r, c), v in self.cells.items()},
        )

    def negated(self) -> "SparseRectangle":
        return SparseRectangle(
            self.rows, self.cols, {cell: -v for cell, v in self.cells.items()}
        )

    def shifted(self, offset: int) -> "SparseRectangle":
        return SparseRectangle(
            self.rows, self.cols, {cell: v + offset for cell, v in self.cells.items()}
        )

    def with_cell(self, row: int, col: int, value: Optional[int]) -> "SparseRectangle":
        """Copy with one cell replaced (or emptied when value is None)."""
        cells = dict(self.cells)
        if value is None:
            cells.pop((row, col), None)
        else:
            cells[(row, col)] = value
        return SparseRectangle(self.rows, self.cols, cells)

    def require_shape(self, rows: int, cols: int) -> None:
        if (self.rows, self.cols) != (rows, cols):
            raise DimensionMismatchError(rows, cols, self.rows, self.cols)

    def position_of(self) -> Dict[int, Cell]:
        """Map each value to its cell; raises on a repeated value."""
        where: Dict[int, Cell] = {}
        for (row, col), value in sorted(self.cells.items()):
            if value in where:
                raise DuplicateEntryError(value, f"cells {where[value]} and {(row, col)}")
            where[value] = (row, col)
        return where


@dataclass(frozen=True)
class Block:
    """A finite set of distinct integers."""

    elements: FrozenSet[int] = frozenset()

    @classmethod
    def of(cls, values: Iterable[int]) -> "Block":
        """Build a block, rejecting repeated values."""
        values = list(values)
        elements = frozenset(values)
        if len(elements) != len(values):
            seen = set()
            for value in values:
                if value in seen:
                    raise DuplicateEntryError(value, "block")
                seen.add(value)
        return cls(elements)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, value: object) -> bool:
        return value in self.elements

    def __repr__(self) -> str:
        return "{" + ", ".join(str(v) for v in self.key()) + "}"

    @property
    def total(self) -> int:
        return sum(self.elements)

    def key(self) -> Tuple[int, ...]:
        """Deterministic ordering key: elements by |x|, positive first."""
        return tuple(sorted(self.elements, key=lambda v: (abs(v), v < 0)))

    def negated(self) -> "Block":
        return Block(frozenset(-v for v in self.elements))

    def is_negation_closed(self) -> bool:
        return all(-v in self.elements for v in self.elements)

    def union(self, other: "Block") -> "Block":
        return Block.of(list(self.elements) + list(other.elements))


@dataclass(frozen=True)
class Partition:
    """A family of pairwise disjoint blocks covering a ground set."""

    blocks: Tuple[Block, ...]
    ground: FrozenSet[int]

    @classmethod
    def of(
        cls, blocks: Iterable[Block], ground: Optional[Iterable[int]] = None
    ) -> "Partition":
        """
        Build a partition, checking disjointness and coverage.

        Args:
            blocks: The blocks, in order
            ground: Ground set; defaults to the union of the blocks

        Raises:
            InvalidPartitionError: If blocks overlap or do not cover the ground set
        """
        blocks = tuple(blocks)
        seen: Dict[int, int] = {}
        for index, block in enumerate(blocks):
            for value in block.elements:
                if value in seen:
                    raise InvalidPartitionError(
                        f"value {value} in blocks {seen[value]} and {index}"
                    )
                seen[value] = index
        union = frozenset(seen)
        ground = union if ground is None else frozenset(ground)
        if union != ground:
            missing = sorted(ground - union)
            extra = sorted(union - ground)
            raise InvalidPartitionError(
                f"blocks do not cover the ground set (missing {missing[:5]}, "
                f"foreign {extra[:5]})"
            )
        return cls(blocks=blocks, ground=ground)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self) -> Dict[int, int]:
        """Map each ground element to the index of its block."""
        return {v: i for i, block in enumerate(self.blocks) for v in block.elements}


@dataclass(frozen=True)
class RowSets:
    """The value sets of the three rows of the base 3 x n rectangle."""

    r1: Block
    r2: Block
    r3: Block

    def __post_init__(self):
        rows = (self.r1, self.r2, self.r3)
        for i in range(3):
            if not rows[i].is_negation_closed():
                raise InvalidPartitionError(f"row set {i + 1} is not negation-closed")
            for j in range(i + 1, 3):
                common = rows[i].elements & rows[j].elements
                if common:
                    raise InvalidPartitionError(
                        f"row sets {i + 1} and {j + 1} share {sorted(common)[:3]}"
                    )

    def as_tuple(self) -> Tuple[Block, Block, Block]:
        return (self.r1, self.r2, self.r3)

    def row_of(self, value: int) -> Optional[int]:
        """0-based row holding value, or None."""
        for index, row in enumerate(self.as_tuple()):
            if value in row:
                return index
        return None


def _line_partition(rect: SparseRectangle, by_column: bool) -> Partition:
    rect.position_of()
    count = rect.cols if by_column else rect.rows
    buckets: List[List[int]] = [[] for _ in range(count)]
    for (row, col), value in rect.cells.items():
        buckets[col if by_column else row].append(value)
    return Partition.of(Block.of(bucket) for bucket in buckets)


def column_partition(rect: SparseRectangle) -> Partition:
    """
    One block per column holding that column's filled values.

    Raises:
        DuplicateEntryError: If a value occupies more than one cell
    """
    return _line_partition(rect, by_column=True)


def row_partition(rect: SparseRectangle) -> Partition:
    """One block per row holding that row's filled values."""
    return _line_partition(rect, by_column=False)
