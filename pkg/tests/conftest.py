import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

import pytest

from spinhl.exact import ModelParams

_ACCEPTANCE_LINES = []


def record_acceptance(num, desc, passed):
    line = f"ACCEPTANCE {num:2d} [{'PASS' if passed else 'FAIL'}] {desc}"
    _ACCEPTANCE_LINES.append(line)
    print(line)
    assert passed, line


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


SPECTRAL = [f"1/{i + 4}" for i in range(20)]


@pytest.fixture
def params():
    """Primary fixture parameter point."""
    return ModelParams.make("1/3", "-1/2", "1/2", SPECTRAL)


@pytest.fixture
def all_points():
    """The three generic parameter points used by exact checks."""
    return [
        ModelParams.make("1/3", "-1/2", "1/2", SPECTRAL),
        ModelParams.make("2/5", "-1/3", "1/2", SPECTRAL),
        ModelParams.make("1/7", "-3/5", "1/2", SPECTRAL),
    ]
