from pathlib import Path

import pytest

from semunify import parse_problem

PROBLEMS = Path(__file__).resolve().parents[1] / "demos" / "problems"


@pytest.fixture
def problem():
    def load(name):
        return parse_problem((PROBLEMS / name).read_text(encoding="utf-8"))

    return load


# filled by test_acceptance; printed at the end of every run
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda l: int(l.split()[1])):
            terminalreporter.write_line(line)
