import sys

import pytest

from tukeyspectra import finite


@pytest.fixture
def five():
    # r=0 < a=1, b=2; a < c=3, d=4
    return finite.FinitePoset.from_pairs(5, [(0, 1), (0, 2), (1, 3), (1, 4)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
