import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from twogroups.catalog import CATALOG_SPECS, build_gpgd  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def catalog():
    return {s: build_gpgd(s) for s in CATALOG_SPECS}


@pytest.fixture(params=CATALOG_SPECS)
def member(request, catalog):
    return catalog[request.param]


# one line per acceptance criterion, filled in by test_acceptance.py
VERDICTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)
