"""Core engine registry for singleton instances.

Engines are created lazily on first use and share one :class:`DelayEngine`,
whose enumeration policy comes from ``configs/lab.yml``.
"""
from functools import lru_cache
from typing import Any, Dict

from delaylab.config import Config
from delaylab.core.circuit.engine import SimulationEngine
from delaylab.core.delays.engine import DelayEngine
from delaylab.core.lab.engine import PropertyEngine
from delaylab.schemas.delays import EnumerationPolicy
from delaylab.utils.logger import logger


def load_enumeration_policy() -> EnumerationPolicy:
    try:
        section = Config.load_yaml("lab").get("enumeration", {})
    except FileNotFoundError:
        logger.warning("configs/lab.yml not found, using the default enumeration policy")
        section = {}
    return EnumerationPolicy(**section)


# ---------------------------------------------------------------------------
# Lazy-singleton helpers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def get_delay_engine() -> DelayEngine:
    """Return a singleton :class:`DelayEngine` instance."""
    return DelayEngine(load_enumeration_policy())


@lru_cache(maxsize=None)
def get_property_engine() -> PropertyEngine:
    """Return a singleton :class:`PropertyEngine` instance."""
    return PropertyEngine(get_delay_engine())


@lru_cache(maxsize=None)
def get_simulation_engine() -> SimulationEngine:
    """Return a singleton :class:`SimulationEngine` instance."""
    return SimulationEngine(get_delay_engine())


_ALL_ENGINE_GETTERS = [
    get_delay_engine,
    get_property_engine,
    get_simulation_engine,
]


def initialize_core_engines() -> Dict[str, Any]:
    """Eagerly instantiate and return all core engines."""
    instances: Dict[str, Any] = {}
    for getter in _ALL_ENGINE_GETTERS:
        instances[getter.__name__.replace("get_", "")] = getter()
    return instances
