import numpy as np
import pytest

from borsuk_lab.sphere import make_map, symmetric_icosphere


@pytest.fixture(scope="session")
def antipodal():
    return make_map("antipodal")


@pytest.fixture(scope="session")
def example1():
    return make_map("example1")


@pytest.fixture(scope="session")
def antipodal_mesh(antipodal):
    return symmetric_icosphere(3, antipodal)


@pytest.fixture(scope="session")
def example1_mesh(example1):
    return symmetric_icosphere(3, example1)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
