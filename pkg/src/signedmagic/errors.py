"""Exception hierarchy for signedmagic."""

from typing import Optional


class SignedMagicError(Exception):
    """Base class for every error raised by the package."""


class InadmissibleParametersError(SignedMagicError, ValueError):
    """Raised when (m, n, k) violates an admissibility condition."""

    def __init__(self, condition: str, m: int, n: int, k: int):
        self.condition = condition
        self.m = m
        self.n = n
        self.k = k
        super().__init__(f"inadmissible parameters (m={m}, n={n}, k={k}): {condition}")


class DimensionMismatchError(SignedMagicError, ValueError):
    """Raised when a rectangle does not have the expected shape."""

    rule = "dimensions"

    def __init__(self, expected_rows: int, expected_cols: int, rows: int, cols: int):
        self.expected = (expected_rows, expected_cols)
        self.actual = (rows, cols)
        super().__init__(
            f"expected a {expected_rows}x{expected_cols} array, got {rows}x{cols}"
        )


class DuplicateEntryError(SignedMagicError, ValueError):
    """Raised when a value occurs in more than one cell or block."""

    def __init__(self, value: int, where: str = ""):
        self.value = value
        suffix = f" ({where})" if where else ""
        super().__init__(f"value {value} occurs more than once{suffix}")


class InvalidPartitionError(SignedMagicError, ValueError):
    """Raised when blocks are not a partition of the stated ground set."""


class GroundSetMismatchError(SignedMagicError, ValueError):
    """Raised when two partitions do not share a ground set."""


class VerificationError(SignedMagicError):
    """Raised when an input that must be valid fails verification."""

    def __init__(self, message: str, report=None):
        self.report = report
        if report is not None and not report.passed:
            message = f"{message}: {report.summary()}"
        super().__init__(message)


class ConstructionDefectError(VerificationError):
    """Raised when a construction yields output the verifier rejects."""


class SearchExhaustedError(SignedMagicError):
    """Raised when a search budget runs out before an answer is found."""

    def __init__(self, what: str, nodes: int, elapsed_ms: Optional[int] = None):
        self.what = what
        self.nodes = nodes
        self.elapsed_ms = elapsed_ms
        timing = f", {elapsed_ms} ms" if elapsed_ms is not None else ""
        super().__init__(
            f"desk-scale limit reached while searching for {what} "
            f"({nodes} nodes{timing})"
        )


class RectangleParseError(SignedMagicError, ValueError):
    """Raised when a CSV or JSON rectangle cannot be parsed."""


class UnsupportedCaseError(SignedMagicError, ValueError):
    """Raised when a builder is asked for a case it does not construct."""
