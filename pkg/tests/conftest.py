import pytest

from hapslink import (
    CloudConfig,
    ModeConfigs,
    RadioParams,
    ScenarioGeometry,
)

D_DEFAULT = 60000.0
H_DEFAULT = 20000.0


@pytest.fixture
def radio():
    return RadioParams()


@pytest.fixture
def configs():
    return ModeConfigs.defaults()


@pytest.fixture
def cloud():
    return CloudConfig()


@pytest.fixture
def geom_mid():
    return ScenarioGeometry(D=D_DEFAULT, H=H_DEFAULT, x=30000.0)


@pytest.fixture
def geom_gnb():
    """Platform directly above the gNB."""
    return ScenarioGeometry(D=D_DEFAULT, H=H_DEFAULT, x=D_DEFAULT)


def geom_at(x, D=D_DEFAULT, H=H_DEFAULT):
    return ScenarioGeometry(D=D, H=H, x=x)
