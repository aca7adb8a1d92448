import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sl3webs.bijection import verify_sign  # noqa: E402
from sl3webs.signs_tableaux import enumerate_fillings, sign_strings  # noqa: E402

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _CRITERIA[n] = (title, "PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, verdict = _CRITERIA[n]
        terminalreporter.write_line(f"{verdict} criterion {n}: {title}")


@pytest.fixture(scope="session")
def corpus():
    """Every (sign string, filling) pair of weight at most 12."""
    return [(s, T) for weight in (0, 3, 6, 9, 12) for s in sign_strings(weight) for T in enumerate_fillings(s)]


@pytest.fixture(scope="session")
def bijection_sweep():
    start = time.perf_counter()
    reports = [verify_sign(s) for weight in (0, 3, 6, 9, 12) for s in sign_strings(weight)]
    return reports, time.perf_counter() - start
