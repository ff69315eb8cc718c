from enum import Enum
from typing import Tuple


class GateKind(str, Enum):
    AND = "and"
    OR = "or"
    XOR = "xor"
    NAND = "nand"
    NOR = "nor"
    NOT = "not"
    TABLE = "tt"

    def table(self, arity: int) -> Tuple[int, ...]:
        """Truth table rows for ``arity`` operands, first operand most significant."""
        if self is GateKind.TABLE:
            raise ValueError("explicit truth-table gates carry their own table")
        if self is GateKind.NOT:
            if arity != 1:
                raise ValueError(f"not takes exactly one operand, got {arity}")
            return (1, 0)
        rows = []
        for index in range(1 << arity):
            ones = bin(index).count("1")
            if self in (GateKind.AND, GateKind.NAND):
                value = int(ones == arity)
            elif self in (GateKind.OR, GateKind.NOR):
                value = int(ones > 0)
            else:
                value = ones & 1
            rows.append(1 - value if self in (GateKind.NAND, GateKind.NOR) else value)
        return tuple(rows)
