from pathlib import Path

import pytest

from subfield_codes.codefile import CodeFile
from subfield_codes.gf import build_field

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def f4():
    return build_field(2, 1, 2, [1, 1, 1])


@pytest.fixture(scope="session")
def f16():
    """F_16 = F_2[a]/(a^4 + a + 1), viewed over F_4."""
    return build_field(2, 2, 2, [1, 1, 0, 0, 1])


@pytest.fixture(scope="session")
def f9():
    return build_field(3, 1, 2)


def load(name):
    return CodeFile.read(FIXTURES / f"{name}.code")


@pytest.fixture(scope="session")
def example1():
    return load("example1").code()


@pytest.fixture(scope="session")
def example2():
    return load("example2").code()


@pytest.fixture(scope="session")
def gf2_17():
    return load("gf2_17").code()


@pytest.fixture(scope="session")
def mds16():
    return load("mds16").code()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        status, title, elapsed = RESULTS[number]
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title} ({elapsed:.2f}s)")
