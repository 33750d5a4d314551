import sys
from pathlib import Path

import pytest

SAMPLE_DIR = Path(__file__).resolve().parent.parent / "src" / "stoprake" / "data" / "sample_pl"


@pytest.fixture(scope="session")
def sample_dir():
    assert len(list(SAMPLE_DIR.glob("*.txt"))) == 50
    return SAMPLE_DIR


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)
