import pytest

from rzsearch import catalog
from rzsearch.board import play
from rzsearch.geometry import parse_grid


def after(p, *moves):
    """Play grid names in order from ``p``."""
    for m in moves:
        p = play(p, parse_grid(m, p.size))
    return p


@pytest.fixture
def corner_eye():
    return catalog.get("corner_eye").position()


@pytest.fixture
def corner_eye_lines(corner_eye):
    """The three positions reached after each of Black's tried moves and White's reply."""
    return {
        "null": after(corner_eye, "D1", "E2"),
        "split": after(corner_eye, "E2", "D1"),
        "inner": after(corner_eye, "F2", "E2"),
    }


@pytest.fixture
def killall_rules():
    return catalog.get("corner_eye").rules()


@pytest.fixture
def entry():
    return catalog.get


def pytest_addoption(parser):
    parser.addoption("--regen-oracle", action="store_true", default=False,
                     help="recompute the brute-force verdict fixtures instead of reading them")


@pytest.fixture(scope="session")
def regen_oracle(request):
    return request.config.getoption("--regen-oracle")
