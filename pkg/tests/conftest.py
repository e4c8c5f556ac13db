import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from foxcup.words import parse_presentation

from .acceptance_log import RESULTS

settings.register_profile("default", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("quick", max_examples=50, deadline=None)
settings.load_profile(os.environ.get("FOXCUP_HYPOTHESIS_PROFILE", "default"))

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def pi1_m1():
    return parse_presentation((FIXTURES / "pi1_M1.pres").read_text())


@pytest.fixture(scope="session")
def pi1_m2():
    return parse_presentation((FIXTURES / "pi1_M2.pres").read_text())


def pytest_terminal_summary(terminalreporter):
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
