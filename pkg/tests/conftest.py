import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from endvertex.constructions import load_catalog  # noqa: E402


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def realized(catalog):
    """Every bundled catalog group, realized once per session."""
    return {e.label: e.realize() for e in catalog}


ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion and return the verdict."""
    lines = request.config.stash[ACCEPTANCE]

    def record(number: int, title: str, failures: list) -> bool:
        ok = not failures
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title} [tolerance: exact]"
        if failures:
            line += f"  failures: {failures[:5]}"
        lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
