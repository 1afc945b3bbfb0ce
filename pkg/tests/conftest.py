import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from x0gonality.curve import fixture_labels, load_curve, reduce_mod_p

DATA = Path(__file__).parent / "data"
TEST_CURVES = DATA / "curves"

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running computations")


@pytest.fixture(scope="session")
def hecke_counts():
    """#X(F_{p^k}) for k = 1..4 from Hecke traces (independent oracle)."""
    return json.loads((DATA / "hecke_counts.json").read_text())


@pytest.fixture(scope="session")
def reduced():
    cache = {}

    def get(label, p, directory=None):
        key = (label, p, directory)
        if key not in cache:
            cache[key] = reduce_mod_p(load_curve(label, directory), p)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def small_curve():
    def get(name, p):
        return reduce_mod_p(load_curve(name, TEST_CURVES), p)

    return get


def shipped_labels():
    return sorted(fixture_labels())


ACCEPTANCE = []


def acceptance_line(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}"
    ACCEPTANCE.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":").split("/")[0])):
            terminalreporter.write_line(line)
