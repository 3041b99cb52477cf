"""Shared fixtures and the acceptance-criteria summary report."""
import pytest

CRITERIA_RESULTS = []


@pytest.fixture
def criterion():
    """Record one acceptance-criterion outcome and assert it."""

    def record(number, name, ok):
        CRITERIA_RESULTS.append((number, name, bool(ok)))
        assert ok, "criterion %02d (%s) failed" % (number, name)

    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok in sorted(CRITERIA_RESULTS):
        terminalreporter.write_line(
            "criterion %02d %-38s %s" % (number, name, "PASS" if ok else "FAIL")
        )
