import pytest

from qcongr import harness


@pytest.fixture(scope="session")
def shipped_claims():
    return harness.load_claims()


@pytest.fixture(scope="session")
def full_tables(shipped_claims):
    # one scan-sized table per sequence, shared by every harness test
    return harness.build_tables(50000, harness.needed_moduli(shipped_claims))


@pytest.fixture(scope="session")
def full_summary(shipped_claims, full_tables):
    return harness.run_all(50000, shipped_claims, tables=full_tables)


def pytest_configure(config):
    config.acceptance_lines = {}


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion, then assert it."""

    def record(number, ok, detail):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        request.config.acceptance_lines[number] = line
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.acceptance_lines
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
