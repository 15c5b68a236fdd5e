import pytest

from planetrees.objects import enumerate_trees
from planetrees.bijections import dgr_inv
from planetrees.objects import LatticePath

# the 13-edge tree with 3 old and 4 young leaves used throughout the examples
FIGURE_DGR = "UUUUDUUUDDDDUDUDUDDDUDUUDD"

_acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def figure_tree():
    return dgr_inv(LatticePath("dyck", FIGURE_DGR))


@pytest.fixture(scope="session")
def trees():
    """Memoised tree lists for the small sizes many tests share."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = list(enumerate_trees(n))
        return cache[n]

    return get


@pytest.fixture
def criterion():
    def record(number: int, ok: bool, detail: str = ""):
        status = "PASS" if ok else "FAIL"
        _acceptance_lines.append(f"criterion {number:>2}: {status}  {detail}".rstrip())
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
