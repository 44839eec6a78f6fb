import pytest

from quadland.sim import SimConfig, default_specs


@pytest.fixture(scope="session")
def config():
    return SimConfig()


@pytest.fixture(scope="session")
def specs():
    return default_specs()
