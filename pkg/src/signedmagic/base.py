"""Closed-form and tabulated building blocks.

The fully filled 3 x n base rectangles (closed form for even n, a core plus
additive triples for odd n), their row sets, the odd k=3 square, the
magic-rectangle shift, negation doubling, the fixed 4 x 12 array and the
tabulated triple families for small cases.
"""

from typing import Dict, List, Sequence, Tuple

from .core import Block, Params, RowSets, SparseRectangle
from .errors import InadmissibleParametersError, VerificationError
from .verifier import ensure, verify_mr, verify_smr

# 3 x 2 and 3 x 4 arrays; the general formula starts at n = 6.
_SMALL_BASES: Dict[int, Tuple[Tuple[int, ...], ...]] = {
    2: ((1, -1), (2, -2), (-3, 3)),
    4: ((1, -1, 2, -2), (5, 4, -5, -4), (-6, -3, 3, 6)),
}

_FIXED_4_12 = (
    (1, 16, -17, -12, 12, None, None, -6, 6, -3, 3, None),
    (17, -1, None, None, -16, 13, 5, -5, -13, None, 8, -8),
    (None, None, 2, -2, 4, -9, 9, None, 7, 10, -11, -10),
    (-18, -15, 15, 14, None, -4, -14, 11, None, -7, None, 18),
)

# (n, k) -> (S1 seeds, S2 seeds); negations are added on lookup.
_SMALL_S12: Dict[Tuple[int, int], Tuple[Tuple[Tuple[int, int, int], ...], ...]] = {
    (10, 5): (((1, 13, -14),), ((4, 7, -11),)),
    (12, 9): (((1, 16, -17),), ((4, 7, -11),)),
    (14, 7): (((1, 19, -20),), ((4, 10, -14),)),
    (18, 9): (((1, 25, -26),), ((4, 13, -17),)),
    (20, 5): (((1, 28, -29), (2, 23, -25)), ((4, 13, -17), (5, 11, -16))),
    (20, 15): (((1, 28, -29),), ((4, 13, -17),)),
    (22, 11): (((1, 31, -32),), ((4, 16, -20),)),
    (24, 9): (((1, 34, -35), (2, 29, -31)), ((4, 16, -20), (5, 14, -19))),
    (26, 13): (((1, 37, -38),), ((4, 19, -23),)),
    (28, 7): (((1, 40, -41), (2, 35, -37)), ((4, 19, -23), (5, 17, -22))),
    (28, 21): (((1, 40, -41),), ((4, 19, -23),)),
    (30, 5): (
        ((1, 43, -44), (2, 38, -40), (4, 31, -35)),
        ((7, 22, -29), (10, 16, -26), (8, 20, -28)),
    ),
    (30, 9): (((1, 43, -44), (2, 38, -40)), ((4, 22, -26), (5, 20, -25))),
    (30, 15): (((1, 43, -44),), ((4, 22, -26),)),
}

_S3_SMALLEST = ((3, 6, -9),)
_S3_PAIRED = ((3, 27, -30), (6, 12, -18))
_S3_THIRTY_FIVE = ((3, 42, -45), (6, 33, -39), (9, 21, -30))

_S3_SMALLEST_CASES = {(12, 9), (20, 15), (28, 21)}
_S3_PAIRED_CASES = {(20, 5), (24, 9), (28, 7), (30, 9)}


def with_negations(seeds: Sequence[Sequence[int]]) -> List[Block]:
    """Blocks for each seed followed by its negation."""
    blocks = []
    for seed in seeds:
        block = Block.of(seed)
        blocks.extend([block, block.negated()])
    return blocks


def _top_entry(j: int, p: int) -> int:
    residue = j % 4
    if residue == 0:
        return -(3 * p - 2) // 2
    if residue == 1:
        return (3 * p - 1) // 2
    if residue == 2:
        return -(3 * p - 1) // 2
    return (3 * p - 2) // 2


def _bottom_entry(j: int, p: int, half: int, n: int) -> int:
    if j == 1:
        return -3 * half
    if j == n:
        return 3 * half
    if j % 2 == 0:
        return -3 * (half - p)
    return 3 * (half - p + 1)


def smr3_even(n: int) -> SparseRectangle:
    """
    Fully filled SMR(3,n) for even n; every row is negation-closed.

    Args:
        n: Even column count, at least 2

    Returns:
        The verified 3 x n base rectangle

    Raises:
        InadmissibleParametersError: If n is odd or below 2
    """
    if n < 2 or n % 2:
        raise InadmissibleParametersError("n must be even and at least 2", 3, n, n)
    if n in _SMALL_BASES:
        rect = SparseRectangle.from_rows(_SMALL_BASES[n])
    else:
        half = n // 2
        top, bottom = [], []
        # j and p = ceil(j/2) are 1-based here and only here
        for j in range(1, n + 1):
            p = (j + 1) // 2
            top.append(_top_entry(j, p))
            bottom.append(_bottom_entry(j, p, half, n))
        middle = [-(a + c) for a, c in zip(top, bottom)]
        rect = SparseRectangle.from_rows([top, middle, bottom])
    ensure(verify_smr(rect, Params.unchecked(3, n, n)), f"base SMR(3,{n})")
    return rect


def _pm(values) -> List[int]:
    out = []
    for value in values:
        out.extend([value, -value])
    return out


def row_sets(n: int) -> RowSets:
    """
    The value sets of the three rows of smr3_even(n), in closed form.

    Raises:
        InadmissibleParametersError: If n is odd or below 2
    """
    if n < 2 or n % 2:
        raise InadmissibleParametersError("n must be even and at least 2", 3, n, n)
    last = (n - 2) // 2
    if n % 4 == 0:
        split = n // 4
        r1 = _pm(3 * i + 1 for i in range(split)) + _pm(3 * i + 2 for i in range(split))
        r2 = _pm(3 * i + 1 for i in range(split, last + 1)) + _pm(
            3 * i + 2 for i in range(split, last + 1)
        )
    else:
        r1 = _pm(3 * i + 1 for i in range((n - 2) // 4 + 1)) + _pm(
            3 * i + 2 for i in range((n - 6) // 4 + 1)
        )
        r2 = _pm(3 * i + 1 for i in range((n + 2) // 4, last + 1)) + _pm(
            3 * i + 2 for i in range((n - 2) // 4, last + 1)
        )
    r3 = _pm(3 * i for i in range(1, n // 2 + 1))
    return RowSets(Block.of(r1), Block.of(r2), Block.of(r3))


def mr_to_smr(mr: SparseRectangle, params: Params) -> SparseRectangle:
    """
    Shift a magic rectangle MR(m,n;r,s) with mr odd onto the signed symbols.

    Args:
        mr: Magic rectangle over 0..mr-1
        params: Its parameters, r carried in params.k

    Returns:
        The verified signed magic rectangle, every entry moved by -(mr-1)/2

    Raises:
        InadmissibleParametersError: If mr is even
        VerificationError: If mr is not a magic rectangle
    """
    count = params.m * params.k
    if count % 2 == 0:
        raise InadmissibleParametersError(
            f"the shift needs m*r odd, got {count}", params.m, params.n, params.k
        )
    report = verify_mr(mr, params)
    if not report.passed:
        raise VerificationError("input is not a magic rectangle", report)
    smr = mr.shifted(-(count - 1) // 2)
    ensure(verify_smr(smr, params), "shifted magic rectangle")
    return smr


def negation_double(half: SparseRectangle) -> SparseRectangle:
    """
    Place -A to the right of A.

    A must have zero-sum columns and entries whose absolute values are
    1..N, each exactly once. The result is a signed magic rectangle with
    twice the columns and twice the row fill.

    Raises:
        VerificationError: If A does not meet those conditions
    """
    magnitudes = sorted(abs(v) for v in half.cells.values())
    if magnitudes != list(range(1, len(magnitudes) + 1)):
        raise VerificationError("entries must have absolute values 1..N, each once")
    for col in range(half.cols):
        column = half.column(col)
        if sum(value for _, value in column):
            raise VerificationError(f"column {col} does not sum to zero")
    cells = dict(half.cells)
    for (row, col), value in half.cells.items():
        cells[(row, col + half.cols)] = -value
    doubled = SparseRectangle(half.rows, 2 * half.cols, cells)
    k = len(doubled.row(0)) if doubled.rows else 0
    s = len(doubled.column(0)) if doubled.cols else 0
    ensure(
        verify_smr(doubled, Params.unchecked(doubled.rows, doubled.cols, k, s)),
        "negation-doubled array",
    )
    return doubled


def fixed_smr_4_12() -> SparseRectangle:
    """The tabulated SMR(4,12;9,3), which no general case covers."""
    rect = SparseRectangle.from_rows(_FIXED_4_12)
    ensure(verify_smr(rect, Params.unchecked(4, 12, 9)), "fixed SMR(4,12;9,3)")
    return rect


def small_case_s12(n: int, k: int) -> Tuple[List[Block], List[Block]]:
    """
    Tabulated S1 and S2 triple families for the small odd-k cases.

    Raises:
        KeyError: If (n, k) is not tabulated
    """
    if (n, k) not in _SMALL_S12:
        raise KeyError(f"no tabulated triple families for n={n}, k={k}")
    s1, s2 = _SMALL_S12[(n, k)]
    return with_negations(s1), with_negations(s2)


def has_special_s3(n: int, k: int) -> bool:
    return n == 2 * k or (n, k) in _S3_SMALLEST_CASES | _S3_PAIRED_CASES | {(30, 5)}


def special_s3(n: int, k: int) -> List[Block]:
    """
    Tabulated third-row triple families for the cases the general formula skips.

    Raises:
        KeyError: If (n, k) is outside the special families
    """
    if n == 2 * k or (n, k) in _S3_SMALLEST_CASES:
        return with_negations(_S3_SMALLEST)
    if (n, k) in _S3_PAIRED_CASES:
        return with_negations(_S3_PAIRED)
    if (n, k) == (30, 5):
        return with_negations(_S3_THIRTY_FIVE)
    raise KeyError(f"no tabulated third-row family for n={n}, k={k}")


def smr3_from_triples(
    p: int, q: int, triples: Sequence[Tuple[int, int, int]]
) -> SparseRectangle:
    """
    Fully filled SMR(3,n) for odd n from a 3 x 3 core and additive triples.

    The core columns are (p, -(2p+q), p+q), (q, 0, -q) and
    (-(p+q), 2p+q, -p); every triple (a, b, a+b) adds the columns
    (a, b, -(a+b)) and (-a, -b, a+b).

    Raises:
        ConstructionDefectError: If the magnitudes are not 1..(3n-1)/2
    """
    columns = [(p, -(2 * p + q), p + q), (q, 0, -q), (-(p + q), 2 * p + q, -p)]
    for a, b, total in triples:
        columns.extend([(a, b, -total), (-a, -b, total)])
    n = len(columns)
    rect = SparseRectangle(
        3,
        n,
        {
            (row, col): column[row]
            for col, column in enumerate(columns)
            for row in range(3)
        },
    )
    ensure(
        verify_smr(rect, Params.unchecked(3, n, n)),
        f"base SMR(3,{n}) from core ({p}, {q})",
    )
    return rect


def square_k3_odd(n: int) -> SparseRectangle:
    """
    SMR(n,n;3,3) for odd n on the cells (i,i), (i,i+1), (i,i+2) mod n.

    Row i holds L_i, L_{n-1-i} - L_i and -L_{n-1-i}. L_0 = n, and for
    j = 1..(n-1)/2 the pair L_j, L_{n-j} is n + w, n - w, where |w| runs
    through h, 1, h-1, 2, ... with alternating sign.

    Raises:
        InadmissibleParametersError: If n is even or below 3
    """
    if n < 3 or n % 2 == 0:
        raise InadmissibleParametersError("n must be odd and at least 3", n, n, 3)
    half = n // 2
    lead = [n] * n
    for j in range(1, half + 1):
        if j % 2:
            offset = half - (j - 1) // 2
        else:
            offset = -(j // 2)
        lead[j] = n + offset
        lead[n - j] = n - offset
    cells = {}
    for i in range(n):
        mirror = lead[n - 1 - i]
        cells[(i, i)] = lead[i]
        cells[(i, (i + 1) % n)] = mirror - lead[i]
        cells[(i, (i + 2) % n)] = -mirror
    rect = SparseRectangle(n, n, cells)
    ensure(verify_smr(rect, Params.unchecked(n, n, 3)), f"SMR({n},{n};3,3)")
    return rect
