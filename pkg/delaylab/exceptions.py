"""
Exceptions for delaylab.
"""
from typing import Any, Dict, List, Optional


class DelayLabError(Exception):
    """Base exception class for delaylab errors."""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        error_data: Optional[Dict[str, Any]] = None,
    ):
        self.message = message
        self.error_code = error_code
        self.error_data = error_data or {}

        error_message = message
        if error_code is not None:
            error_message = f"{error_message} (Error code: {error_code})"

        super().__init__(error_message)


# ---------------------------------------------------------------------------
# Signal algebra
# ---------------------------------------------------------------------------

class SignalError(DelayLabError):
    """Errors raised by the signal algebra."""
    pass


class NotASignal(SignalError):
    """The requested function is not a signal (edge before 0, isolated point, ...)."""

    def __init__(self, message: str, error_data: Optional[Dict[str, Any]] = None):
        super().__init__(message, "not_a_signal", error_data)


class NonCanonicalSignal(SignalError):
    """Edge list not strictly increasing or containing a negative time."""

    def __init__(self, message: str, error_data: Optional[Dict[str, Any]] = None):
        super().__init__(message, "non_canonical_signal", error_data)


class BadWindow(SignalError):
    """Window parameters violate 0 <= m <= d."""

    def __init__(self, d: Any, m: Any):
        super().__init__(
            f"window requires 0 <= m <= d, got d={d}, m={m}",
            "bad_window",
            {"d": str(d), "m": str(m)},
        )


# ---------------------------------------------------------------------------
# Delay conditions
# ---------------------------------------------------------------------------

class DelayConditionError(DelayLabError):
    """Errors raised while building or evaluating delay conditions."""
    pass


class InvalidDelay(DelayConditionError):
    """A delay parameter is out of range."""

    def __init__(self, message: str):
        super().__init__(message, "invalid_delay")


class NotStable(DelayConditionError):
    """The (input, output) couple does not satisfy the stability condition."""

    def __init__(self, u: Any, x: Any):
        super().__init__(
            f"({u}, {x}) does not satisfy the stability condition",
            "not_stable",
            {"u": str(u), "x": str(x)},
        )


class NotDeterministic(DelayConditionError):
    """The delay condition has no deterministic transform."""

    def __init__(self, dc: Any):
        super().__init__(f"{dc} is not deterministic", "not_deterministic", {"dc": str(dc)})


class NotEnumerable(DelayConditionError):
    """The delay condition cannot enumerate its members."""

    def __init__(self, dc: Any):
        super().__init__(f"{dc} cannot enumerate its members", "not_enumerable", {"dc": str(dc)})


class EmptyDelaySet(DelayConditionError):
    """A meet is empty on an exercised input."""

    def __init__(self, dc: Any, u: Any):
        super().__init__(
            f"{dc} has no member for input {u}",
            "empty_delay_set",
            {"dc": str(dc), "u": str(u)},
        )


# ---------------------------------------------------------------------------
# Netlists and simulation
# ---------------------------------------------------------------------------

class NetlistError(DelayLabError):
    """Malformed netlist."""
    pass


class DuplicateName(NetlistError):
    def __init__(self, name: str):
        super().__init__(f"name '{name}' is defined more than once", "duplicate_name", {"name": name})


class DanglingReference(NetlistError):
    def __init__(self, node: str, operand: str):
        super().__init__(
            f"node '{node}' references undefined operand '{operand}'",
            "dangling_reference",
            {"node": node, "operand": operand},
        )


class ZeroDelayCycle(NetlistError):
    """A feedback loop without strictly positive lookahead."""

    def __init__(self, cycle: List[str]):
        self.cycle = list(cycle)
        super().__init__(
            f"cycle without positive lookahead: {' -> '.join(self.cycle)}",
            "zero_delay_cycle",
            {"cycle": self.cycle},
        )


class UnsupportedDelayModel(NetlistError):
    def __init__(self, node: str, dc: Any):
        super().__init__(
            f"delay node '{node}' uses non-simulable model {dc}",
            "unsupported_delay_model",
            {"node": node, "dc": str(dc)},
        )


class GateFanInExceeded(NetlistError):
    def __init__(self, node: str, fan_in: int, limit: int):
        super().__init__(
            f"gate '{node}' has {fan_in} operands, limit is {limit}",
            "gate_fan_in_exceeded",
            {"node": node, "fan_in": fan_in},
        )


class SimulationError(DelayLabError):
    """Errors raised by the simulator."""
    pass


class HorizonExceeded(SimulationError):
    def __init__(self, node: str, horizon: Any):
        super().__init__(
            f"node '{node}' has not settled by horizon {horizon}",
            "horizon_exceeded",
            {"node": node, "horizon": str(horizon)},
        )


class InvalidStimulus(SimulationError):
    def __init__(self, message: str):
        super().__init__(message, "invalid_stimulus")


class UnstableInitialState(SimulationError):
    def __init__(self, nodes: List[str]):
        super().__init__(
            f"feedback through {', '.join(nodes)} has no constant initial state",
            "unstable_initial_state",
            {"nodes": list(nodes)},
        )


# ---------------------------------------------------------------------------
# File formats
# ---------------------------------------------------------------------------

class FormatError(DelayLabError):
    """Parse or write error with an optional source position."""

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        error_code: Optional[str] = None,
    ):
        self.reason = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column or 1}: {message}"
        super().__init__(message, error_code, {"line": line, "column": column})


class WaveSyntaxError(FormatError):
    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        error_code: str = "wave_syntax",
    ):
        super().__init__(message, line, column, error_code)


class NonCanonicalEdges(WaveSyntaxError):
    """A wave-file edge list that is not strictly increasing or has a negative time."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(message, line, column, "non_canonical_signal")


class DCSyntaxError(FormatError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        super().__init__(message, line, column, "dc_syntax")


class NetlistSyntaxError(FormatError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        super().__init__(message, line, column, "netlist_syntax")


class ExportError(FormatError):
    def __init__(self, message: str):
        super().__init__(message, error_code="io_error")
