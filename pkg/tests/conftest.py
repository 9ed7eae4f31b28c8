import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import random_polygon_points  # noqa: E402

from ehrhart.polytope import DegenerateError, RationalPolytope  # noqa: E402


def random_polygons(seed, count, max_den=6, bound=3):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        try:
            out.append(RationalPolytope.polygon(random_polygon_points(rng, max_den, bound)))
        except DegenerateError:
            continue
    return out


@pytest.fixture(scope="session")
def small_polygons():
    return random_polygons(1234, 25)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criteria")


_criteria = {}


def pytest_runtest_makereport(item, call):
    fn = getattr(item, "function", None)
    crit = getattr(fn, "criterion", None)
    if crit is None:
        return
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        _criteria[crit] = call.excinfo is None


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(_criteria.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {number:>2}. {title}")
