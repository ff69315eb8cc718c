"""
Exact simulation of gate/delay netlists.

Gates compute instantaneously; delay nodes apply a deterministic delay
condition to their operand. Feedback is resolved by advancing time in steps
of the smallest lookahead found on the delay nodes that break the loops.
"""
from fractions import Fraction
from typing import Dict, List, Optional, Set

import networkx as nx

from delaylab.config import Config
from delaylab.core.circuit.netlist import DelayNode, Gate, Netlist, Stimulus
from delaylab.core.delays.descriptors import is_deterministic, lookahead
from delaylab.core.delays.engine import DelayEngine
from delaylab.core.delays.metrics import transmission_delay
from delaylab.core.signal import operations as ops
from delaylab.core.signal.signal import Signal
from delaylab.core.signal.utils import TimeLike, as_time
from delaylab.exceptions import (
    DanglingReference,
    DuplicateName,
    GateFanInExceeded,
    HorizonExceeded,
    SimulationError,
    UnstableInitialState,
    UnsupportedDelayModel,
    ZeroDelayCycle,
)
from delaylab.schemas.delays import TransmissionDelayReport
from delaylab.utils.logger import logger

Assignment = Dict[str, Signal]


class SimulationEngine:
    """Validates and simulates netlists."""

    def __init__(self, delay_engine: Optional[DelayEngine] = None, max_fan_in: int = Config.MAX_GATE_FAN_IN):
        self.delays = delay_engine or DelayEngine()
        self.max_fan_in = max_fan_in

    # ------------------------------------------------------------------
    # Validation
    # ------------------------------------------------------------------
    def validate(self, netlist: Netlist) -> nx.DiGraph:
        """Check the netlist and return its dependency graph.

        Edges run from operand to node. Edges into delay nodes with positive
        lookahead are marked ``causal``; every cycle must contain one.
        """
        seen: Set[str] = set()
        for name in netlist.names:
            if name in seen:
                raise DuplicateName(name)
            seen.add(name)

        graph = nx.DiGraph()
        graph.add_nodes_from(netlist.inputs, kind="input")
        for node in netlist.nodes:
            if isinstance(node, Gate):
                if len(node.operands) > self.max_fan_in:
                    raise GateFanInExceeded(node.name, len(node.operands), self.max_fan_in)
                graph.add_node(node.name, kind="gate", lookahead=Fraction(0))
            else:
                step = lookahead(node.dc)
                if step is None or not is_deterministic(node.dc):
                    raise UnsupportedDelayModel(node.name, node.dc)
                graph.add_node(node.name, kind="delay", lookahead=step)
        for node in netlist.nodes:
            for operand in node.operands:
                if operand not in seen:
                    raise DanglingReference(node.name, operand)
                causal = isinstance(node, DelayNode) and graph.nodes[node.name]["lookahead"] > 0
                graph.add_edge(operand, node.name, causal=causal)
        for name in netlist.outputs:
            if name not in seen:
                raise DanglingReference("output", name)

        instantaneous = self._instantaneous(graph)
        try:
            cycle = nx.find_cycle(instantaneous)
        except nx.NetworkXNoCycle:
            return graph
        raise ZeroDelayCycle([edge[0] for edge in cycle] + [cycle[0][0]])

    @staticmethod
    def _instantaneous(graph: nx.DiGraph) -> nx.DiGraph:
        return nx.subgraph_view(graph, filter_edge=lambda a, b: not graph.edges[a, b]["causal"])

    # ------------------------------------------------------------------
    # Simulation
    # ------------------------------------------------------------------
    def simulate(
        self, netlist: Netlist, stimulus: Stimulus, horizon: Optional[TimeLike] = None
    ) -> Assignment:
        graph = self.validate(netlist)
        horizon = None if horizon is None else as_time(horizon)
        stimulus.check(netlist, horizon)

        if nx.is_directed_acyclic_graph(graph):
            values = self._evaluate(netlist, stimulus, {}, nx.topological_sort(graph))
        else:
            if horizon is None:
                raise SimulationError("a horizon is required to simulate feedback loops", "horizon_required")
            values = self._simulate_feedback(netlist, graph, stimulus, horizon)

        logger.info(f"Simulated {len(values)} nodes (horizon={horizon})")
        return {name: values[name] for name in netlist.names}

    def _evaluate(self, netlist: Netlist, stimulus: Stimulus, state: Assignment, order) -> Assignment:
        """One pass in ``order``; delay nodes found in ``state`` are taken from it."""
        values: Assignment = dict(state)
        for name in order:
            if name in values:
                continue
            node = netlist.node(name)
            if node is None:
                values[name] = stimulus[name]
            elif isinstance(node, Gate):
                values[name] = ops.tabulate(node.table, [values[op] for op in node.operands])
            else:
                values[name] = self.delays.apply(node.dc, values[node.operand])
        return values

    def _simulate_feedback(
        self, netlist: Netlist, graph: nx.DiGraph, stimulus: Stimulus, horizon: Fraction
    ) -> Assignment:
        looping = {name for scc in nx.strongly_connected_components(graph) for name in scc
                   if len(scc) > 1 or graph.has_edge(name, name)}
        state_nodes = [
            n for n in netlist.delay_nodes() if n.name in looping and graph.nodes[n.name]["lookahead"] > 0
        ]
        state_names = {n.name for n in state_nodes}
        step = min(graph.nodes[name]["lookahead"] for name in state_names)
        # cutting the edges into loop delays leaves a DAG
        cut = nx.subgraph_view(graph, filter_edge=lambda a, b: b not in state_names)
        order = list(nx.topological_sort(cut))

        state = self._initial_state(netlist, stimulus, state_nodes, order)
        known = Fraction(0)
        while known < horizon + step:
            values = self._evaluate(netlist, stimulus, state, order)
            known += step
            state = {
                n.name: ops.truncate(self.delays.apply(n.dc, values[n.operand]), known)
                for n in state_nodes
            }
            logger.debug(f"feedback sweep: loop state exact up to t={known}")

        values = self._evaluate(netlist, stimulus, state, order)
        for n in state_nodes:
            if self.delays.apply(n.dc, values[n.operand]) != state[n.name]:
                raise HorizonExceeded(n.name, horizon)
        for name in sorted(looping):
            if values[name].last_edge > horizon:
                raise HorizonExceeded(name, horizon)
        return values

    def _initial_state(
        self, netlist: Netlist, stimulus: Stimulus, state_nodes: List[DelayNode], order
    ) -> Assignment:
        """Constant pre-history: every loop delay holds its operand's value before time 0."""
        early = Stimulus({name: Signal.constant(s.initial) for name, s in stimulus.signals.items()})
        state = {n.name: Signal.constant(n.init or 0) for n in state_nodes}
        changing: List[str] = []
        for _ in range(2 * len(state_nodes) + 2):
            values = self._evaluate(netlist, early, state, order)
            following = {n.name: Signal.constant(values[n.operand].initial) for n in state_nodes}
            changing = sorted(name for name in state if following[name] != state[name])
            if not changing:
                return state
            state = following
        raise UnstableInitialState(changing)

    # ------------------------------------------------------------------
    # Reports
    # ------------------------------------------------------------------
    def path_delay_report(
        self,
        netlist: Netlist,
        stimulus: Stimulus,
        input_name: str,
        output_name: str,
        horizon: Optional[TimeLike] = None,
    ) -> TransmissionDelayReport:
        values = self.simulate(netlist, stimulus, horizon)
        for name in (input_name, output_name):
            if name not in values:
                raise SimulationError(f"unknown node '{name}'", "unknown_node")
        return transmission_delay(values[input_name], values[output_name])
