import pytest

_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def acceptance_report():
    """Record one line per acceptance criterion, printed after the run."""

    def record(name: str, ok: bool, detail: str = ""):
        _RESULTS.append((name, ok, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())
