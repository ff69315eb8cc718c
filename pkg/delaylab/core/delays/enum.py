"""
Enumerations for delay-condition capabilities.
"""
from enum import Enum


class Capability(str, Enum):
    MEMBERSHIP = "membership"
    ENUMERATE = "enumerate"
    DETERMINISTIC = "deterministic"
