import pytest

from bettisplit import corpus
from bettisplit.exactla import GF2, GF3, GF5, QQ

FIELDS = [QQ, GF2, GF3, GF5]

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def cx():
    """Corpus complexes by name: ``cx("rp2")``."""
    return corpus.get


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
