"""Pytest configuration and fixtures for tests."""
import os

os.environ.setdefault("APP_ENV", "test")

import pytest  # noqa: E402

from delaylab.core.circuit.engine import SimulationEngine  # noqa: E402
from delaylab.core.delays.engine import DelayEngine  # noqa: E402
from delaylab.core.lab.corpus import generate_corpus  # noqa: E402
from delaylab.core.lab.engine import PropertyEngine  # noqa: E402
from delaylab.schemas.lab import CorpusConfig  # noqa: E402

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")


@pytest.fixture
def delay_engine():
    """Provide a DelayEngine with the default enumeration policy."""
    return DelayEngine()


@pytest.fixture
def property_engine(delay_engine):
    """Provide a PropertyEngine sharing the delay engine."""
    return PropertyEngine(delay_engine)


@pytest.fixture
def simulation_engine(delay_engine):
    """Provide a SimulationEngine sharing the delay engine."""
    return SimulationEngine(delay_engine)


@pytest.fixture(scope="session")
def small_corpus():
    """A seeded corpus with the constants, a step and a pulse."""
    return generate_corpus(CorpusConfig(seed=7, count=16, max_edges=3, horizon=8, time_grid_denominator=2))


@pytest.fixture
def data_path():
    return lambda name: os.path.join(DATA_DIR, name)
