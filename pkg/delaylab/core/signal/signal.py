"""
Canonical Boolean signals over exact real time.

A signal is stored as its value on (-inf, first edge) plus the strictly
increasing list of times where the value flips. Every listed edge is a
genuine value change, so equal functions have equal representations.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Tuple

from delaylab.core.signal.enum import Bit
from delaylab.core.signal.intervals import Interval, IntervalSet
from delaylab.core.signal.utils import TimeLike, as_bit, as_time, format_time
from delaylab.exceptions import NonCanonicalSignal


@dataclass(frozen=True)
class Signal:
    initial: Bit
    edges: Tuple[Fraction, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "initial", as_bit(self.initial))
        edges = tuple(as_time(e) for e in self.edges)
        for k, e in enumerate(edges):
            if e < 0:
                raise NonCanonicalSignal(f"edge {e} is negative", {"edges": [str(x) for x in edges]})
            if k and e <= edges[k - 1]:
                raise NonCanonicalSignal(
                    f"edges must be strictly increasing, got {edges[k - 1]} then {e}",
                    {"edges": [str(x) for x in edges]},
                )
        object.__setattr__(self, "edges", edges)

    # Constructors ---------------------------------------------------------
    @classmethod
    def constant(cls, value) -> "Signal":
        return cls(as_bit(value), ())

    @classmethod
    def from_breakpoints(cls, initial, points: Iterable[Tuple[TimeLike, int]]) -> "Signal":
        """Build from (time, value-from-time-on) pairs sorted by time.

        Pairs that do not change the value are dropped.
        """
        current = as_bit(initial)
        edges: List[Fraction] = []
        for t, value in points:
            value = as_bit(value)
            if value != current:
                edges.append(as_time(t))
                current = value
        return cls(as_bit(initial), tuple(edges))

    # Evaluation -----------------------------------------------------------
    def at(self, t: TimeLike) -> Bit:
        """Value at t; right-continuous at every edge."""
        flips = bisect_right(self.edges, as_time(t))
        return Bit(self.initial ^ (flips & 1))

    def left_limit(self, t: TimeLike) -> Bit:
        """x(t-0), the value on (t - eps, t)."""
        flips = bisect_left(self.edges, as_time(t))
        return Bit(self.initial ^ (flips & 1))

    @property
    def final_value(self) -> Bit:
        return Bit(self.initial ^ (len(self.edges) & 1))

    @property
    def is_constant(self) -> bool:
        return not self.edges

    @property
    def last_edge(self) -> Fraction:
        """Settling time; 0 for constants."""
        return self.edges[-1] if self.edges else Fraction(0)

    def rising_edges(self) -> List[Fraction]:
        # value after edge k is initial ^ ((k + 1) & 1)
        return [e for k, e in enumerate(self.edges) if self.initial ^ ((k + 1) & 1)]

    def falling_edges(self) -> List[Fraction]:
        return [e for k, e in enumerate(self.edges) if not self.initial ^ ((k + 1) & 1)]

    def ones(self) -> IntervalSet:
        """The set where the signal is 1, as left-closed right-open runs."""
        parts = []
        value, start = self.initial, None
        for e in self.edges:
            if value:
                parts.append(Interval(start, start is not None, e, False))
            value, start = Bit(1 - value), e
        if value:
            parts.append(Interval(start, start is not None, None, False))
        return IntervalSet(tuple(parts))

    def zeros(self) -> IntervalSet:
        return self.ones().complement()

    def sort_key(self) -> Tuple[int, int, Tuple[Fraction, ...]]:
        """Canonical order: fewer edges first, then initial value, then edges."""
        return (len(self.edges), int(self.initial), self.edges)

    def __str__(self) -> str:
        edges = ", ".join(format_time(e) for e in self.edges)
        return f"sig({int(self.initial)}; {edges})" if edges else f"sig({int(self.initial)};)"

    __repr__ = __str__


ZERO = Signal.constant(0)
ONE = Signal.constant(1)


def sig(initial, *edges: TimeLike) -> Signal:
    """Shorthand used throughout: ``sig(0, 2, 5)`` is sig(0; 2, 5)."""
    return Signal(initial, tuple(as_time(e) for e in edges))
