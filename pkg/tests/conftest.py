import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from monopos.corpus import generate_connected_graphs  # noqa: E402


@pytest.fixture(scope="session")
def small_connected():
    """Connected graphs up to order 6, one per isomorphism class."""
    return [g for n in range(1, 7) for g in generate_connected_graphs(n)]


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion, then assert it."""

    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
