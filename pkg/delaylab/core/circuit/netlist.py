"""
Netlists of instantaneous gates and deterministic delay nodes.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from delaylab.core.circuit.enum import GateKind
from delaylab.core.delays.descriptors import DelayCondition
from delaylab.core.signal.signal import Signal
from delaylab.exceptions import InvalidStimulus, NetlistError


@dataclass(frozen=True)
class Gate:
    name: str
    kind: GateKind
    operands: Tuple[str, ...]
    table: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", GateKind(self.kind))
        object.__setattr__(self, "operands", tuple(self.operands))
        if not self.operands:
            raise NetlistError(f"gate '{self.name}' has no operands", "bad_gate")
        if self.kind is GateKind.TABLE:
            if len(self.table) != 1 << len(self.operands) or set(self.table) - {0, 1}:
                raise NetlistError(
                    f"gate '{self.name}' needs {1 << len(self.operands)} table bits, got {len(self.table)}",
                    "bad_gate",
                )
        else:
            try:
                table = self.kind.table(len(self.operands))
            except ValueError as e:
                raise NetlistError(f"gate '{self.name}': {e}", "bad_gate") from e
            object.__setattr__(self, "table", table)


@dataclass(frozen=True)
class DelayNode:
    name: str
    dc: DelayCondition
    operand: str
    init: Optional[int] = None

    @property
    def operands(self) -> Tuple[str, ...]:
        return (self.operand,)


Node = Union[Gate, DelayNode]


@dataclass(frozen=True)
class Netlist:
    inputs: Tuple[str, ...] = ()
    nodes: Tuple[Node, ...] = ()
    outputs: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "outputs", tuple(self.outputs))

    @property
    def names(self) -> Tuple[str, ...]:
        return self.inputs + tuple(n.name for n in self.nodes)

    def node(self, name: str) -> Optional[Node]:
        return next((n for n in self.nodes if n.name == name), None)

    def delay_nodes(self) -> Iterator[DelayNode]:
        return (n for n in self.nodes if isinstance(n, DelayNode))


@dataclass(frozen=True)
class Stimulus:
    """A signal for every input port."""

    signals: Dict[str, Signal] = field(default_factory=dict)

    @classmethod
    def of(cls, signals: Mapping[str, Signal]) -> "Stimulus":
        return cls(dict(signals))

    def check(self, netlist: Netlist, horizon=None) -> None:
        missing = [name for name in netlist.inputs if name not in self.signals]
        if missing:
            raise InvalidStimulus(f"no stimulus for input(s) {', '.join(missing)}")
        unknown = sorted(set(self.signals) - set(netlist.inputs))
        if unknown:
            raise InvalidStimulus(f"stimulus for unknown input(s) {', '.join(unknown)}")
        if horizon is None:
            return
        for name, s in self.signals.items():
            if s.edges and s.edges[-1] > horizon:
                raise InvalidStimulus(f"input '{name}' switches at {s.edges[-1]}, past horizon {horizon}")

    def __getitem__(self, name: str) -> Signal:
        return self.signals[name]
