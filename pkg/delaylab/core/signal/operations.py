"""
Operations of the signal algebra.

Window operators are computed by interval arithmetic on the 1-region of the
input, never by sampling, so closed/open boundaries come out exact.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Union

from delaylab.core.signal.enum import Bit, BoolOp
from delaylab.core.signal.intervals import Interval, IntervalSet
from delaylab.core.signal.signal import Signal
from delaylab.core.signal.utils import TimeLike, as_time
from delaylab.exceptions import BadWindow, NotASignal

Domain = Union[IntervalSet, Iterable[TimeLike]]


def evaluate(s: Signal, t: TimeLike) -> Bit:
    return s.at(t)


def left_limit(s: Signal, t: TimeLike) -> Bit:
    return s.left_limit(t)


def rising_edges(s: Signal) -> List[Fraction]:
    return s.rising_edges()


def falling_edges(s: Signal) -> List[Fraction]:
    return s.falling_edges()


def final_value(s: Signal) -> Bit:
    return s.final_value


def from_characteristic(parts: IntervalSet) -> Signal:
    """The signal equal to the characteristic function of ``parts``.

    Every finite lower endpoint must be closed and every finite upper
    endpoint open, and all of them must be >= 0.
    """
    if parts.is_empty():
        return Signal.constant(0)
    initial = 1 if parts.parts[0].lo is None else 0
    edges: List[Fraction] = []
    for part in parts.parts:
        if part.lo is not None:
            if not part.lo_closed:
                raise NotASignal(f"{part} has an open left endpoint", {"part": str(part)})
            edges.append(part.lo)
        if part.hi is not None:
            if part.hi_closed:
                raise NotASignal(f"{part} is not right-continuous", {"part": str(part)})
            edges.append(part.hi)
    if edges and edges[0] < 0:
        raise NotASignal(f"{parts} switches at negative time {edges[0]}", {"parts": str(parts)})
    return Signal(initial, tuple(edges))


def translate(s: Signal, d: TimeLike) -> Signal:
    """s o tau^d, i.e. t -> s(t - d)."""
    d = as_time(d)
    if s.edges and s.edges[0] + d < 0:
        raise NotASignal(
            f"translating {s} by {d} puts an edge at {s.edges[0] + d}",
            {"signal": str(s), "d": str(d)},
        )
    return Signal(s.initial, tuple(e + d for e in s.edges))


def negate(s: Signal) -> Signal:
    return Signal(Bit(1 - s.initial), s.edges)


def combine(op: Union[BoolOp, str], s1: Signal, s2: Signal) -> Signal:
    op = BoolOp(op)
    times = sorted(set(s1.edges) | set(s2.edges))
    initial = op.apply(s1.initial, s2.initial)
    return Signal.from_breakpoints(initial, ((t, op.apply(s1.at(t), s2.at(t))) for t in times))


def tabulate(table: Sequence[int], signals: Sequence[Signal]) -> Signal:
    """Pointwise truth table; row index has the first signal as MSB."""
    if len(table) != 1 << len(signals):
        raise ValueError(f"truth table of {len(table)} rows does not fit {len(signals)} operands")

    def row(values: Iterable[int]) -> int:
        index = 0
        for v in values:
            index = (index << 1) | int(v)
        return table[index]

    times = sorted({e for s in signals for e in s.edges})
    initial = row(s.initial for s in signals)
    return Signal.from_breakpoints(initial, ((t, row(s.at(t) for s in signals)) for t in times))


def _check_window(d: Fraction, m: Fraction) -> None:
    if m < 0 or m > d:
        raise BadWindow(d, m)


def window_all(u: Signal, d: TimeLike, m: TimeLike) -> Signal:
    """x(t) = 1 iff u is 1 on the whole closed window [t-d, t-d+m]."""
    d, m = as_time(d), as_time(m)
    _check_window(d, m)
    # [s, s+m] fits in a run [a, b) iff a <= s < b - m
    parts = []
    for run in u.ones().parts:
        lo = None if run.lo is None else run.lo + d
        hi = None if run.hi is None else run.hi - m + d
        parts.append(Interval(lo, True, hi, False))
    return from_characteristic(IntervalSet(tuple(parts)))


def window_any(u: Signal, d: TimeLike, m: TimeLike) -> Signal:
    """x(t) = 1 iff u is 1 somewhere on the closed window [t-d, t-d+m]."""
    d, m = as_time(d), as_time(m)
    _check_window(d, m)
    # [s, s+m] meets a run [a, b) iff a - m <= s < b
    parts = []
    for run in u.ones().parts:
        lo = None if run.lo is None else run.lo - m + d
        hi = None if run.hi is None else run.hi + d
        parts.append(Interval(lo, True, hi, False))
    return from_characteristic(IntervalSet(tuple(parts)))


def _as_domain(domain: Domain) -> IntervalSet:
    if isinstance(domain, IntervalSet):
        for part in domain.parts:
            if part.lo is None or part.hi is None or not (part.lo_closed and part.hi_closed):
                raise ValueError(f"only finite sets and closed bounded intervals are supported, got {part}")
        return domain
    return IntervalSet.points(as_time(t) for t in domain)


def all_over(s: Signal, domain: Domain) -> Bit:
    """The meet of s over ``domain``; 1 on the empty set."""
    return Bit(int(s.ones().covers(_as_domain(domain))))


def any_over(s: Signal, domain: Domain) -> Bit:
    """The join of s over ``domain``; 0 on the empty set."""
    return Bit(int(not s.zeros().covers(_as_domain(domain))))


def truncate(s: Signal, horizon: TimeLike) -> Signal:
    """Equal to s on (-inf, horizon), frozen at s(horizon - 0) afterwards."""
    horizon = as_time(horizon)
    return Signal(s.initial, tuple(e for e in s.edges if e < horizon))
