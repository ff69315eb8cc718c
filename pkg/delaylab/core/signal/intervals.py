"""
Finite unions of rational intervals.

An endpoint of ``None`` stands for -inf (as a lower bound) or +inf (as an
upper bound); infinite endpoints are always open.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from delaylab.core.signal.utils import as_time


@dataclass(frozen=True)
class Interval:
    lo: Optional[Fraction]
    lo_closed: bool
    hi: Optional[Fraction]
    hi_closed: bool

    def __post_init__(self):
        if self.lo is not None:
            object.__setattr__(self, "lo", as_time(self.lo))
        else:
            object.__setattr__(self, "lo_closed", False)
        if self.hi is not None:
            object.__setattr__(self, "hi", as_time(self.hi))
        else:
            object.__setattr__(self, "hi_closed", False)

    def is_empty(self) -> bool:
        if self.lo is None or self.hi is None:
            return False
        if self.lo < self.hi:
            return False
        return not (self.lo == self.hi and self.lo_closed and self.hi_closed)

    def contains(self, t: Fraction) -> bool:
        if self.lo is not None and (t < self.lo or (t == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (t > self.hi or (t == self.hi and not self.hi_closed)):
            return False
        return True

    def reflect(self, c: Fraction) -> "Interval":
        lo = None if self.hi is None else c - self.hi
        hi = None if self.lo is None else c - self.lo
        return Interval(lo, self.hi_closed, hi, self.lo_closed)

    def shift(self, d: Fraction) -> "Interval":
        lo = None if self.lo is None else self.lo + d
        hi = None if self.hi is None else self.hi + d
        return Interval(lo, self.lo_closed, hi, self.hi_closed)

    def __str__(self) -> str:
        if self.lo is not None and self.lo == self.hi:
            return f"{{{self.lo}}}"
        left = "(-inf" if self.lo is None else ("[" if self.lo_closed else "(") + str(self.lo)
        right = "inf)" if self.hi is None else str(self.hi) + ("]" if self.hi_closed else ")")
        return f"{left}, {right}"


def _lower_key(part: Interval) -> Tuple:
    if part.lo is None:
        return (0,)
    return (1, part.lo, 0 if part.lo_closed else 1)


def _touches(left: Interval, right: Interval) -> bool:
    """True when ``right`` (starting no earlier) overlaps or abuts ``left``."""
    if left.hi is None or right.lo is None:
        return True
    if right.lo < left.hi:
        return True
    return right.lo == left.hi and (left.hi_closed or right.lo_closed)


def _max_upper(a: Interval, b: Interval) -> Tuple[Optional[Fraction], bool]:
    if a.hi is None or b.hi is None:
        return None, False
    if a.hi == b.hi:
        return a.hi, a.hi_closed or b.hi_closed
    return (a.hi, a.hi_closed) if a.hi > b.hi else (b.hi, b.hi_closed)


def normalize(parts: Iterable[Interval]) -> Tuple[Interval, ...]:
    """Sort, drop empty parts and merge overlapping or adjacent ones."""
    ordered = sorted((p for p in parts if not p.is_empty()), key=_lower_key)
    merged: List[Interval] = []
    for part in ordered:
        if merged and _touches(merged[-1], part):
            last = merged[-1]
            hi, hi_closed = _max_upper(last, part)
            merged[-1] = Interval(last.lo, last.lo_closed, hi, hi_closed)
        else:
            merged.append(part)
    return tuple(merged)


@dataclass(frozen=True)
class IntervalSet:
    """Normalized finite union of disjoint, non-adjacent intervals."""

    parts: Tuple[Interval, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "parts", normalize(self.parts))

    # Constructors ---------------------------------------------------------
    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls(())

    @classmethod
    def everything(cls) -> "IntervalSet":
        return cls((Interval(None, False, None, False),))

    @classmethod
    def closed(cls, lo, hi) -> "IntervalSet":
        return cls((Interval(lo, True, hi, True),))

    @classmethod
    def open(cls, lo, hi) -> "IntervalSet":
        return cls((Interval(lo, False, hi, False),))

    @classmethod
    def half_open(cls, lo, hi) -> "IntervalSet":
        """[lo, hi); ``hi=None`` means [lo, inf)."""
        return cls((Interval(lo, True, hi, False),))

    @classmethod
    def at_least(cls, lo) -> "IntervalSet":
        return cls((Interval(lo, True, None, False),))

    @classmethod
    def points(cls, times: Iterable) -> "IntervalSet":
        return cls(tuple(Interval(t, True, t, True) for t in times))

    # Queries --------------------------------------------------------------
    def is_empty(self) -> bool:
        return not self.parts

    def contains(self, t) -> bool:
        t = as_time(t)
        return any(part.contains(t) for part in self.parts)

    __contains__ = contains

    def covers(self, other: "IntervalSet") -> bool:
        """True iff ``other`` is a subset of this set."""
        return other.intersection(self.complement()).is_empty()

    # Algebra --------------------------------------------------------------
    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self.parts + other.parts)

    def complement(self) -> "IntervalSet":
        gaps: List[Interval] = []
        lo, lo_closed = None, False
        for part in self.parts:
            if part.lo is not None:
                gaps.append(Interval(lo, lo_closed, part.lo, not part.lo_closed))
            if part.hi is None:
                return IntervalSet(tuple(gaps))
            lo, lo_closed = part.hi, not part.hi_closed
        gaps.append(Interval(lo, lo_closed, None, False))
        return IntervalSet(tuple(gaps))

    def intersection(self, other: "IntervalSet") -> "IntervalSet":
        return self.complement().union(other.complement()).complement()

    def reflect(self, c) -> "IntervalSet":
        """The set {c - t : t in self}."""
        c = as_time(c)
        return IntervalSet(tuple(part.reflect(c) for part in self.parts))

    def shift(self, d) -> "IntervalSet":
        d = as_time(d)
        return IntervalSet(tuple(part.shift(d) for part in self.parts))

    def __str__(self) -> str:
        if not self.parts:
            return "{}"
        return " U ".join(str(part) for part in self.parts)


NON_NEGATIVE = IntervalSet.at_least(0)
