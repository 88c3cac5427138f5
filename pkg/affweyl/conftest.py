"""
Shared fixtures: one context per preset, built once per test session.
"""

import pytest

from affweyl.config import Settings
from affweyl.context import WeylContext
from affweyl.element_parser import parse_element


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full lemma sweeps over the rank-3 presets (deselect with -m \"not slow\")")


@pytest.fixture(scope="session")
def settings():
    return Settings()


@pytest.fixture(scope="session")
def gl2(settings):
    return WeylContext.load("GL2", settings)


@pytest.fixture(scope="session")
def pgl2(settings):
    return WeylContext.load("PGL2", settings)


@pytest.fixture(scope="session")
def gl3(settings):
    return WeylContext.load("GL3", settings)


@pytest.fixture(scope="session")
def pgl3(settings):
    return WeylContext.load("PGL3", settings)


@pytest.fixture
def elem(gl2):
    """Parse a GL2 element literal"""
    return lambda text: parse_element(text, gl2.coxeter)
