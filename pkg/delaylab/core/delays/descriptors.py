"""
Delay conditions as immutable expression trees.

``Serial(outer, inner)`` is the serial connection outer o inner: the input
goes through ``inner`` first, then each of its outputs through ``outer``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, FrozenSet, Iterable, Optional

from delaylab.core.delays.enum import Capability
from delaylab.core.signal.signal import Signal
from delaylab.core.signal.utils import TimeLike, as_time, format_time
from delaylab.exceptions import InvalidDelay

SetPredicate = Callable[[Signal], bool]
FamilyPredicate = Callable[[Signal, Signal], bool]
Generator = Callable[[Signal, int], Iterable[Signal]]


class DelayCondition:
    """Base class of every descriptor node."""

    def __repr__(self) -> str:
        return str(self)


@dataclass(frozen=True, repr=False)
class Ident(DelayCondition):
    def __str__(self) -> str:
        return "ident"


@dataclass(frozen=True, repr=False)
class Pure(DelayCondition):
    d: Fraction

    def __post_init__(self):
        object.__setattr__(self, "d", as_time(self.d))
        if self.d < 0:
            raise InvalidDelay(f"pure delay must be >= 0, got {self.d}")

    def __str__(self) -> str:
        return f"pure({format_time(self.d)})"


@dataclass(frozen=True, repr=False)
class StartupMask(DelayCondition):
    """x = u . chi_[d, inf) for some d >= 0."""

    def __str__(self) -> str:
        return "startup"


@dataclass(frozen=True, repr=False)
class SolSC(DelayCondition):
    """Every output satisfying the stability condition."""

    def __str__(self) -> str:
        return "solsc"


@dataclass(frozen=True, repr=False)
class _Window(DelayCondition):
    d: Fraction
    m: Fraction

    def __post_init__(self):
        object.__setattr__(self, "d", as_time(self.d))
        object.__setattr__(self, "m", as_time(self.m))
        if self.m < 0 or self.m > self.d:
            raise InvalidDelay(f"window requires 0 <= m <= d, got d={self.d}, m={self.m}")

    keyword = ""

    def __str__(self) -> str:
        return f"{self.keyword}({format_time(self.d)},{format_time(self.m)})"


@dataclass(frozen=True, repr=False)
class WindowAll(_Window):
    keyword = "window_all"


@dataclass(frozen=True, repr=False)
class WindowAny(_Window):
    keyword = "window_any"


@dataclass(frozen=True, repr=False)
class Meet(DelayCondition):
    left: DelayCondition
    right: DelayCondition

    def __str__(self) -> str:
        return f"meet({self.left},{self.right})"


@dataclass(frozen=True, repr=False)
class MeetSet(DelayCondition):
    """i(u) intersected with a fixed set of signals given by its predicate."""

    inner: DelayCondition
    predicate: SetPredicate
    name: str = "U"

    def __str__(self) -> str:
        return f"meet_set({self.inner},{self.name})"


@dataclass(frozen=True, repr=False)
class MeetFam(DelayCondition):
    """i(u) intersected with phi(u); ``phi(u, x)`` decides x in phi(u)."""

    inner: DelayCondition
    phi: FamilyPredicate
    name: str = "phi"

    def __str__(self) -> str:
        return f"meet_fam({self.inner},{self.name})"


@dataclass(frozen=True, repr=False)
class Join(DelayCondition):
    left: DelayCondition
    right: DelayCondition

    def __str__(self) -> str:
        return f"join({self.left},{self.right})"


@dataclass(frozen=True, repr=False)
class Serial(DelayCondition):
    outer: DelayCondition
    inner: DelayCondition

    def __str__(self) -> str:
        return f"serial({self.outer},{self.inner})"


@dataclass(frozen=True, repr=False)
class UserPredicate(DelayCondition):
    name: str
    predicate: FamilyPredicate
    generator: Optional[Generator] = None

    def __str__(self) -> str:
        return f"user({self.name})"


@dataclass(frozen=True, repr=False)
class Selected(DelayCondition):
    """Deterministic choice of the canonically least member of ``inner``."""

    inner: DelayCondition

    def __str__(self) -> str:
        return f"select({self.inner})"


# ---------------------------------------------------------------------------
# Combinators
# ---------------------------------------------------------------------------

def meet(i: DelayCondition, j: DelayCondition) -> DelayCondition:
    return Meet(i, j)


def meet_set(i: DelayCondition, predicate: SetPredicate, name: str = "U") -> DelayCondition:
    return MeetSet(i, predicate, name)


def meet_fam(i: DelayCondition, phi: FamilyPredicate, name: str = "phi") -> DelayCondition:
    return MeetFam(i, phi, name)


def join(i: DelayCondition, j: DelayCondition) -> DelayCondition:
    return Join(i, j)


def serial(i: DelayCondition, j: DelayCondition) -> DelayCondition:
    """i o j: feed the input through j, then through i."""
    return Serial(i, j)


def pure(d: TimeLike) -> DelayCondition:
    return Pure(as_time(d))


IDENT = Ident()
STARTUP = StartupMask()
SOL_SC = SolSC()


# ---------------------------------------------------------------------------
# Capabilities
# ---------------------------------------------------------------------------

def is_deterministic(dc: DelayCondition) -> bool:
    if isinstance(dc, (Ident, Pure, WindowAll, WindowAny, Selected)):
        return True
    if isinstance(dc, Meet):
        # a non-empty meet with a singleton is that singleton
        return is_deterministic(dc.left) or is_deterministic(dc.right)
    if isinstance(dc, (MeetSet, MeetFam)):
        return is_deterministic(dc.inner)
    if isinstance(dc, Serial):
        return is_deterministic(dc.outer) and is_deterministic(dc.inner)
    return False


def is_enumerable(dc: DelayCondition) -> bool:
    if isinstance(dc, (Ident, Pure, WindowAll, WindowAny, StartupMask, SolSC)):
        return True
    if isinstance(dc, Selected):
        return is_enumerable(dc.inner)
    if isinstance(dc, Meet):
        return is_deterministic(dc) or is_enumerable(dc.left) or is_enumerable(dc.right)
    if isinstance(dc, (MeetSet, MeetFam)):
        return is_enumerable(dc.inner)
    if isinstance(dc, (Join, Serial)):
        first, second = (dc.left, dc.right) if isinstance(dc, Join) else (dc.outer, dc.inner)
        return is_enumerable(first) and is_enumerable(second)
    if isinstance(dc, UserPredicate):
        return dc.generator is not None
    return False


def capabilities(dc: DelayCondition) -> FrozenSet[Capability]:
    caps = {Capability.MEMBERSHIP}
    if is_enumerable(dc):
        caps.add(Capability.ENUMERATE)
    if is_deterministic(dc):
        caps.add(Capability.DETERMINISTIC)
    return frozenset(caps)


def lookahead(dc: DelayCondition) -> Optional[Fraction]:
    """How far ahead the output is fixed by the past input; None if not simulable."""
    if isinstance(dc, Ident):
        return Fraction(0)
    if isinstance(dc, Pure):
        return dc.d
    if isinstance(dc, (WindowAll, WindowAny)):
        return dc.d - dc.m
    if isinstance(dc, Serial):
        outer, inner = lookahead(dc.outer), lookahead(dc.inner)
        if outer is None or inner is None:
            return None
        return outer + inner
    return None
