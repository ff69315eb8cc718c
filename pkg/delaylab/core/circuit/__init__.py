from delaylab.core.circuit.engine import SimulationEngine
from delaylab.core.circuit.enum import GateKind
from delaylab.core.circuit.netlist import DelayNode, Gate, Netlist, Stimulus

__all__ = ["DelayNode", "Gate", "GateKind", "Netlist", "SimulationEngine", "Stimulus"]
