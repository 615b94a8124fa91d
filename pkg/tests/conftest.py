import numpy as np
import pytest

from fixtures import TOL, annulus, box, face_curves, seven_curves, spadjor


@pytest.fixture
def tol():
    return TOL


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def unit_square():
    return box(0, 0, 1, 1)


@pytest.fixture
def ring():
    return annulus()


@pytest.fixture
def seven():
    return spadjor(*seven_curves())


@pytest.fixture
def face():
    return spadjor(*face_curves())


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Keep local .env settings out of the tests"""
    for name in (
        "YINSET_EPSILON",
        "YINSET_LOG_DIR",
        "YINSET_VALIDATE_RESULTS",
        "YINSET_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
