"""
Shared pytest configuration and fixtures for signedmagic tests.
"""

from pathlib import Path
import pytest
from click.testing import CliRunner

from signedmagic.base import smr3_even
from signedmagic.core import Block, SparseRectangle
from signedmagic.search import SearchBudget

# ============================================================================
# Path Configuration
# ============================================================================


@pytest.fixture
def test_dir():
    """Get test directory path."""
    return Path(__file__).parent


@pytest.fixture
def fixtures_dir(test_dir):
    """Get fixtures directory path."""
    return test_dir / "fixtures"


def _fixture_file(fixtures_dir: Path, name: str) -> Path:
    path = fixtures_dir / name
    if not path.exists():
        pytest.skip(f"Test file not found: {path}")
    return path


@pytest.fixture
def fixed_4_12_file(fixtures_dir):
    """CSV of the tabulated SMR(4,12;9,3)."""
    return _fixture_file(fixtures_dir, "smr_4_12_9.csv")


@pytest.fixture
def mutated_4_12_file(fixtures_dir):
    """The same array with one entry changed from 1 to 19."""
    return _fixture_file(fixtures_dir, "smr_4_12_9_mutated.csv")


@pytest.fixture
def not_integers_file(fixtures_dir):
    return _fixture_file(fixtures_dir, "not_integers.csv")


@pytest.fixture
def small_sweep_file(fixtures_dir):
    """Batch file with four small admissible triples."""
    return _fixture_file(fixtures_dir, "sweep_small.txt")


@pytest.fixture
def mixed_sweep_file(fixtures_dir):
    """Batch file with a good triple, a malformed line and an inadmissible triple."""
    return _fixture_file(fixtures_dir, "sweep_mixed.txt")


@pytest.fixture
def comments_sweep_file(fixtures_dir):
    return _fixture_file(fixtures_dir, "sweep_comments.txt")


# ============================================================================
# Arrays and Blocks
# ============================================================================

FIXED_4_12_ROWS = [
    [1, 16, -17, -12, 12, None, None, -6, 6, -3, 3, None],
    [17, -1, None, None, -16, 13, 5, -5, -13, None, 8, -8],
    [None, None, 2, -2, 4, -9, 9, None, 7, 10, -11, -10],
    [-18, -15, 15, 14, None, -4, -14, 11, None, -7, None, 18],
]

BASE_10_ROWS = [
    [1, -1, 2, -2, 4, -4, 5, -5, 7, -7],
    [14, 13, -14, 11, -13, 10, -11, 8, -10, -8],
    [-15, -12, 12, -9, 9, -6, 6, -3, 3, 15],
]

# The ten 9-blocks of a worked SMR(10,30;9,3), transcribed by hand.
WORKED_30_9_BLOCKS = [
    [7, -7, 8, -8, 10, -10, -5, -20, 25],
    [11, -11, 13, -13, 14, -14, -4, -22, 26],
    [16, -16, 17, -17, 19, -19, 5, 20, -25],
    [23, -23, 28, -28, 29, -29, -1, -43, 44],
    [31, -31, 32, -32, 34, -34, -2, -38, 40],
    [35, -35, 37, -37, 41, -41, 2, 38, -40],
    [6, -6, 12, -12, 24, -24, 3, 15, -18],
    [27, -27, 33, -33, 36, -36, 9, 21, -30],
    [39, -39, 42, -42, 45, -45, -9, -21, 30],
    [1, 43, -44, 4, 22, -26, -3, -15, 18],
]


@pytest.fixture
def fixed_4_12():
    return SparseRectangle.from_rows(FIXED_4_12_ROWS)


@pytest.fixture
def base_10():
    """The 3 x 10 base array as printed in the literature."""
    return SparseRectangle.from_rows(BASE_10_ROWS)


@pytest.fixture
def worked_30_9_blocks():
    return [Block.of(row) for row in WORKED_30_9_BLOCKS]


@pytest.fixture
def base_4():
    return smr3_even(4)


@pytest.fixture
def small_budget():
    """A budget small enough to make tests fail fast instead of hanging."""
    return SearchBudget(max_nodes=2_000_000, max_millis=20_000)


@pytest.fixture
def runner():
    """Click test runner; stderr is kept apart from stdout."""
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        return CliRunner()


# ============================================================================
# Custom Markers
# ============================================================================


def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line(
        "markers", "integration: mark test as an end-to-end pipeline test"
    )
    config.addinivalue_line("markers", "slow: mark test as slow running")
    config.addinivalue_line("markers", "cli: mark test as a CLI test")
    config.addinivalue_line(
        "markers", "search: mark test as exercising the search oracle"
    )
    config.addinivalue_line(
        "markers", "construction: mark test as checking a closed-form construction"
    )


# ============================================================================
# Async Support
# ============================================================================

# This ensures that pytest-asyncio is properly configured
pytest_plugins = ("pytest_asyncio",)
