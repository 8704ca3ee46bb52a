import pytest

CRITERIA_LINES: list[str] = []


@pytest.fixture(scope="session")
def criteria_lines():
    return CRITERIA_LINES


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
