import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from chiralatlas.groups import parse_group  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def c5c4():
    return parse_group(str(DATA / "c5_c4.txt"))


@pytest.fixture(scope="session")
def groups():
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = parse_group(spec)
        return cache[spec]

    return get


_CRITERIA = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        name = report.nodeid.split("::test_criterion_")[1].split("[")[0]
        ok = report.outcome == "passed"
        _CRITERIA[name] = _CRITERIA.get(name, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda s: int(s.split("_")[0])):
        num, _, label = name.partition("_")
        status = "PASS" if _CRITERIA[name] else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {num}: {label.replace('_', ' ')}")
