import math
import sys

import pytest

from glasser.verify import DEFAULT_A_GRID, DEFAULT_B_GRID

SQRT3 = math.sqrt(3.0)


@pytest.fixture(scope="session")
def default_grid():
    return [(a, b) for a in DEFAULT_A_GRID for b in DEFAULT_B_GRID]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip("]"))):
        terminalreporter.write_line(line)
