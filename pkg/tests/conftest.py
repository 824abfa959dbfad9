import pytest

from ranklens import BimatrixGame, validate_dataset

# Filled by test_acceptance.py; one entry per criterion number.
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[number]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {number}: {verdict} ({detail})")


@pytest.fixture
def diag_dataset():
    """Two diagonal choices observed on the full 2x2 game."""
    return validate_dataset([((1, 1), (1, 2), (1, 2)), ((2, 2), (1, 2), (1, 2))], 2)


@pytest.fixture
def known_rank_one_game():
    """The canonical rank-1 rationalization of the diagonal 2x2 dataset."""
    return BimatrixGame.from_rows([[2, 7], [1, 8]], [[2, 1], [7, 8]])


@pytest.fixture
def contradictory_dataset():
    """Choice (1,1) on the full game against choice (2,1) on column 1: the
    row player would need A[1,1] > A[2,1] > A[1,1]."""
    return validate_dataset([((1, 1), (1, 2), (1, 2)), ((2, 1), (1, 2), (1,))], 2)


@pytest.fixture
def nested_dataset():
    """Full 2x2 with choice (1,1) and inner {2}x{2} with choice (2,2)."""
    return validate_dataset([((1, 1), (1, 2), (1, 2)), ((2, 2), (2,), (2,))], 2)


@pytest.fixture
def crossing_strips_dataset():
    """Two crossing half-grids sharing the choice (2,2)."""
    return validate_dataset([((2, 2), (1, 2), (2,)), ((2, 2), (2,), (1, 2))], 2)
