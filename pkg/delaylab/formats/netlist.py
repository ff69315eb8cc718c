"""
Netlist text format.

    input u
    delay a = pure(1) u
    gate w = xor u a
    delay x = window_all(2,2) w
    gate m = tt:0110 u a
    delay q = pure(1/2) n init=1
    output x
"""
from typing import List, Optional

from delaylab.core.circuit.enum import GateKind
from delaylab.core.circuit.netlist import DelayNode, Gate, Netlist
from delaylab.exceptions import DCSyntaxError, NetlistError, NetlistSyntaxError
from delaylab.formats.dc_language import parse_dc_prefix
from delaylab.formats.utils import PathLike, strip_comment, tokens

NAMED_GATES = {kind.value for kind in GateKind if kind is not GateKind.TABLE}


def _header(parts, lineno: int) -> str:
    """Check ``<keyword> <name> =`` and return the name."""
    if len(parts) < 3 or parts[2][0] != "=":
        raise NetlistSyntaxError(f"expected '{parts[0][0]} <name> = ...'", lineno, parts[0][1])
    return parts[1][0]


def _gate(parts, lineno: int) -> Gate:
    name = _header(parts, lineno)
    if len(parts) < 5:
        raise NetlistSyntaxError("gate needs a kind and at least one operand", lineno, parts[2][1])
    kind, col = parts[3]
    operands = tuple(token for token, _ in parts[4:])
    try:
        if kind.startswith("tt:"):
            bits = kind[3:]
            if not bits or set(bits) - {"0", "1"}:
                raise NetlistSyntaxError(f"bad truth table '{kind}'", lineno, col)
            return Gate(name, GateKind.TABLE, operands, tuple(int(b) for b in bits))
        if kind not in NAMED_GATES:
            raise NetlistSyntaxError(f"unknown gate kind '{kind}'", lineno, col)
        return Gate(name, GateKind(kind), operands)
    except NetlistSyntaxError:
        raise
    except NetlistError as e:
        raise NetlistSyntaxError(e.message, lineno, col) from None


def _delay(line: str, parts, lineno: int) -> DelayNode:
    name = _header(parts, lineno)
    if len(parts) < 4:
        raise NetlistSyntaxError("delay needs a delay condition and an operand", lineno, parts[2][1])
    start = parts[3][1] - 1
    try:
        dc, end = parse_dc_prefix(line[start:], lineno, start)
    except DCSyntaxError as e:
        raise NetlistSyntaxError(e.reason, lineno, e.column) from None

    rest = [(token, start + end + col) for token, col in tokens(line[start + end:])]
    if not rest:
        raise NetlistSyntaxError(f"delay '{name}' has no operand", lineno, start + end + 1)
    (operand, _), options = rest[0], rest[1:]
    init: Optional[int] = None
    for token, col in options:
        if token in ("init=0", "init=1"):
            init = int(token[-1])
        else:
            raise NetlistSyntaxError(f"unexpected '{token}', expected init=0 or init=1", lineno, col)
    return DelayNode(name, dc, operand, init)


def parse_netlist(text: str) -> Netlist:
    inputs: List[str] = []
    nodes = []
    outputs: List[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = strip_comment(raw)
        parts = tokens(line)
        if not parts:
            continue
        keyword, column = parts[0]
        if keyword in ("input", "output"):
            if len(parts) != 2:
                raise NetlistSyntaxError(f"expected '{keyword} <name>'", lineno, column)
            (inputs if keyword == "input" else outputs).append(parts[1][0])
        elif keyword == "gate":
            nodes.append(_gate(parts, lineno))
        elif keyword == "delay":
            nodes.append(_delay(line, parts, lineno))
        else:
            raise NetlistSyntaxError(f"unknown directive '{keyword}'", lineno, column)
    return Netlist(tuple(inputs), tuple(nodes), tuple(outputs))


def read_netlist(path: PathLike) -> Netlist:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_netlist(handle.read())
