import random

import pytest

from raylab.model import build_model


@pytest.fixture
def m3():
    return build_model(3)


@pytest.fixture
def m6():
    return build_model(6)


@pytest.fixture
def m12():
    return build_model(12)


@pytest.fixture
def m16():
    return build_model(16)


@pytest.fixture
def rng():
    return random.Random(20240901)
