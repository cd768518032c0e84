from __future__ import annotations

import pytest

from monodromy import H2StarContext, nielsen_setup
from nielsen import build_group


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="also run computations over a minute")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def sym3():
    return build_group("sym3")


@pytest.fixture(scope="session")
def sym4():
    return build_group("sym4")


@pytest.fixture(scope="session")
def g0_setup():
    """Sigma (120 S4 classes), Omega (40 S3 classes) and the braid action at b=6."""
    return nielsen_setup("sym4", 6)


@pytest.fixture(scope="session")
def g1_setup():
    """5460 S4 classes over 364 S3 classes at b=8."""
    return nielsen_setup("sym4", 8)


@pytest.fixture(scope="session")
def g0_h2star(g0_setup):
    return H2StarContext(g0_setup)
