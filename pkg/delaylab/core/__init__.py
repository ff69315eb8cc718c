"""Core package.

Provides helpers to access singleton instances of core engines.
"""

from .registry import (  # noqa: F401
    get_delay_engine,
    get_property_engine,
    get_simulation_engine,
    initialize_core_engines,
)

__all__ = [
    "get_delay_engine",
    "get_property_engine",
    "get_simulation_engine",
    "initialize_core_engines",
]
