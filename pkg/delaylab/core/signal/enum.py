"""
Enumerations for the signal algebra.
"""
from enum import Enum, IntEnum


class Bit(IntEnum):
    ZERO = 0
    ONE = 1

    def __invert__(self) -> "Bit":
        return Bit(1 - self.value)


class BoolOp(str, Enum):
    AND = "and"
    OR = "or"
    XOR = "xor"

    def apply(self, a: int, b: int) -> int:
        if self is BoolOp.AND:
            return a & b
        if self is BoolOp.OR:
            return a | b
        return a ^ b
