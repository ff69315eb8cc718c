"""
Delay engine: membership, deterministic transforms and bounded enumeration.
"""
from __future__ import annotations

import random
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from delaylab.core.delays.descriptors import (
    DelayCondition,
    Ident,
    Join,
    Meet,
    MeetFam,
    MeetSet,
    Pure,
    Selected,
    Serial,
    SolSC,
    StartupMask,
    UserPredicate,
    WindowAll,
    WindowAny,
    is_deterministic,
    is_enumerable,
)
from delaylab.core.delays.metrics import stable, transmission_delay
from delaylab.core.signal import operations as ops
from delaylab.core.signal.intervals import NON_NEGATIVE, IntervalSet
from delaylab.core.signal.signal import Signal
from delaylab.exceptions import EmptyDelaySet, InvalidDelay, NotDeterministic, NotEnumerable
from delaylab.schemas.delays import EnumerationPolicy, TransmissionDelayReport
from delaylab.schemas.verdicts import Verdict, VerdictStatus
from delaylab.utils.logger import logger

HOLDS, FAILS, UNKNOWN = VerdictStatus.holds, VerdictStatus.fails, VerdictStatus.unknown


@dataclass(frozen=True)
class Enumeration:
    members: Tuple[Signal, ...]
    complete: bool


def _unique(candidates: Iterable[Signal], budget: int) -> Tuple[Tuple[Signal, ...], bool]:
    """First ``budget`` distinct candidates and whether the source was exhausted."""
    seen: Dict[Signal, None] = {}
    iterator = iter(candidates)
    for x in iterator:
        if x in seen:
            continue
        if len(seen) == budget:
            return tuple(seen), False
        seen[x] = None
    return tuple(seen), True


def _interleave(*sources: Iterable[Signal]) -> Iterator[Signal]:
    iterators = [iter(s) for s in sources]
    while iterators:
        for it in list(iterators):
            try:
                yield next(it)
            except StopIteration:
                iterators.remove(it)


def startup_feasible_delays(u: Signal, x: Signal) -> IntervalSet:
    """All d >= 0 with x = u . chi_[d, inf)."""
    x_ones, u_ones = x.ones(), u.ones()
    if not u_ones.covers(x_ones):
        return IntervalSet.empty()
    feasible = NON_NEGATIVE
    if x_ones.parts:
        first = x_ones.parts[0]
        if first.lo is None:
            return IntervalSet.empty()
        # every 1 of x lies in [d, inf)
        feasible = feasible.intersection(IntervalSet.closed(0, first.lo))
    masked = u_ones.intersection(x.zeros())
    if masked.parts:
        last = masked.parts[-1]
        if last.hi is None:
            return IntervalSet.empty()
        # every 1 of u removed by the mask lies in (-inf, d)
        bound = IntervalSet.at_least(last.hi) if not last.hi_closed else IntervalSet.open(last.hi, None)
        feasible = feasible.intersection(bound)
    return feasible


def startup_mask(u: Signal, d: Fraction) -> Signal:
    """u . chi_[d, inf)."""
    return ops.combine("and", u, Signal(0, (d,)))


class DelayEngine:
    """Core engine answering membership, apply and enumerate for any descriptor."""

    NONEMPTY_CACHE_SIZE = 4096

    def __init__(self, policy: Optional[EnumerationPolicy] = None):
        self.policy = policy or EnumerationPolicy()
        # (meet, input) pairs already shown non-empty, least recently used first
        self._nonempty_checked: OrderedDict[Tuple[DelayCondition, Signal], None] = OrderedDict()

    # ------------------------------------------------------------------
    # Stability and transmission delays
    # ------------------------------------------------------------------
    def stable(self, u: Signal, x: Signal) -> int:
        return stable(u, x)

    def transmission_delay(self, u: Signal, x: Signal) -> TransmissionDelayReport:
        return transmission_delay(u, x)

    # ------------------------------------------------------------------
    # Membership
    # ------------------------------------------------------------------
    def member(self, dc: DelayCondition, u: Signal, x: Signal) -> Verdict:
        status = self.decide(dc, u, x)
        if status is HOLDS:
            return Verdict.holds()
        if status is FAILS:
            return Verdict.fails({"u": u, "x": x})
        return Verdict.unknown(f"witness budget of {self.policy.witness_budget} exhausted")

    def decide(self, dc: DelayCondition, u: Signal, x: Signal) -> VerdictStatus:
        """Three-valued membership of x in dc(u)."""
        if isinstance(dc, (Ident, Pure, WindowAll, WindowAny, Selected)):
            return HOLDS if self.apply(dc, u) == x else FAILS
        if isinstance(dc, StartupMask):
            return FAILS if startup_feasible_delays(u, x).is_empty() else HOLDS
        if isinstance(dc, SolSC):
            return HOLDS if stable(u, x) else FAILS
        if isinstance(dc, UserPredicate):
            return HOLDS if dc.predicate(u, x) else FAILS
        if isinstance(dc, Meet):
            self._ensure_nonempty(dc, u)
            return self._conjunction(self.decide(dc.left, u, x), self.decide(dc.right, u, x))
        if isinstance(dc, MeetSet):
            self._ensure_nonempty(dc, u)
            return self._conjunction(self.decide(dc.inner, u, x), HOLDS if dc.predicate(x) else FAILS)
        if isinstance(dc, MeetFam):
            self._ensure_nonempty(dc, u)
            return self._conjunction(self.decide(dc.inner, u, x), HOLDS if dc.phi(u, x) else FAILS)
        if isinstance(dc, Join):
            left = self.decide(dc.left, u, x)
            if left is HOLDS:
                return HOLDS
            return self._disjunction(left, self.decide(dc.right, u, x))
        if isinstance(dc, Serial):
            return self._decide_serial(dc, u, x)
        raise TypeError(f"Unknown delay condition {dc!r}")

    @staticmethod
    def _conjunction(a: VerdictStatus, b: VerdictStatus) -> VerdictStatus:
        if FAILS in (a, b):
            return FAILS
        return HOLDS if a is HOLDS and b is HOLDS else UNKNOWN

    @staticmethod
    def _disjunction(a: VerdictStatus, b: VerdictStatus) -> VerdictStatus:
        if HOLDS in (a, b):
            return HOLDS
        return FAILS if a is FAILS and b is FAILS else UNKNOWN

    def _decide_serial(self, dc: Serial, u: Signal, y: Signal) -> VerdictStatus:
        # every member of a DC is stable with its input, serial connections included
        if not stable(u, y):
            return FAILS
        if isinstance(dc.outer, Ident):
            return self.decide(dc.inner, u, y)
        if isinstance(dc.inner, Ident):
            return self.decide(dc.outer, u, y)
        if isinstance(dc.outer, SolSC):
            # any member of the inner condition is stable with u, hence with y
            return HOLDS
        if is_deterministic(dc.inner):
            return self.decide(dc.outer, self.apply(dc.inner, u), y)
        if not is_enumerable(dc.inner):
            logger.debug(f"{dc}: inner condition is opaque, membership of {y} left open")
            return UNKNOWN
        witnesses = self._enumerate(dc.inner, u, self.policy.witness_budget)
        saw_unknown = False
        for x in witnesses.members:
            status = self.decide(dc.outer, x, y)
            if status is HOLDS:
                logger.debug(f"{dc}: witness {x} for {y}")
                return HOLDS
            saw_unknown = saw_unknown or status is UNKNOWN
        if witnesses.complete and not saw_unknown:
            return FAILS
        logger.debug(f"{dc}: no witness for {y} among {len(witnesses.members)} candidates")
        return UNKNOWN

    def _ensure_nonempty(self, dc: DelayCondition, u: Signal) -> None:
        """Raise EmptyDelaySet when the meet is provably empty on u."""
        key = (dc, u)
        if key in self._nonempty_checked:
            self._nonempty_checked.move_to_end(key)
            return
        if isinstance(dc, Meet):
            pairs = [(dc.left, lambda x, other=dc.right: self.decide(other, u, x)),
                     (dc.right, lambda x, other=dc.left: self.decide(other, u, x))]
        elif isinstance(dc, MeetSet):
            pairs = [(dc.inner, lambda x: HOLDS if dc.predicate(x) else FAILS)]
        else:
            pairs = [(dc.inner, lambda x: HOLDS if dc.phi(u, x) else FAILS)]

        # search the side that is cheapest to list
        pairs.sort(key=lambda p: (not is_deterministic(p[0]), not is_enumerable(p[0])))
        side, test = pairs[0]
        if is_enumerable(side):
            candidates = self._enumerate(side, u, self.policy.witness_budget)
            verdicts = [test(x) for x in candidates.members]
            if HOLDS not in verdicts:
                if candidates.complete and all(v is FAILS for v in verdicts):
                    raise EmptyDelaySet(dc, u)
                logger.warning(f"{dc}: could not establish a member for {u}")
        self._nonempty_checked[key] = None
        if len(self._nonempty_checked) > self.NONEMPTY_CACHE_SIZE:
            self._nonempty_checked.popitem(last=False)

    def clear_caches(self) -> None:
        self._nonempty_checked.clear()

    # ------------------------------------------------------------------
    # Deterministic transform
    # ------------------------------------------------------------------
    def apply(self, dc: DelayCondition, u: Signal) -> Signal:
        if isinstance(dc, Ident):
            return u
        if isinstance(dc, Pure):
            return ops.translate(u, dc.d)
        if isinstance(dc, WindowAll):
            return ops.window_all(u, dc.d, dc.m)
        if isinstance(dc, WindowAny):
            return ops.window_any(u, dc.d, dc.m)
        if isinstance(dc, Serial) and is_deterministic(dc):
            return self.apply(dc.outer, self.apply(dc.inner, u))
        if isinstance(dc, Meet) and is_deterministic(dc):
            single, other = (dc.left, dc.right) if is_deterministic(dc.left) else (dc.right, dc.left)
            x = self.apply(single, u)
            status = self.decide(other, u, x)
            if status is FAILS:
                raise EmptyDelaySet(dc, u)
            if status is UNKNOWN:
                logger.warning(f"{dc}: membership of {x} in {other} undecided")
            return x
        if isinstance(dc, (MeetSet, MeetFam)) and is_deterministic(dc):
            x = self.apply(dc.inner, u)
            accepted = dc.predicate(x) if isinstance(dc, MeetSet) else dc.phi(u, x)
            if not accepted:
                raise EmptyDelaySet(dc, u)
            return x
        if isinstance(dc, Selected):
            candidates = self._enumerate(dc.inner, u, self.policy.witness_budget)
            if not candidates.members:
                raise EmptyDelaySet(dc, u)
            return min(candidates.members, key=Signal.sort_key)
        raise NotDeterministic(dc)

    def select_deterministic(self, dc: DelayCondition) -> DelayCondition:
        """A deterministic condition included in ``dc``."""
        if is_deterministic(dc):
            return dc
        if not is_enumerable(dc):
            raise NotEnumerable(dc)
        return Selected(dc)

    # ------------------------------------------------------------------
    # Enumeration
    # ------------------------------------------------------------------
    def enumerate(self, dc: DelayCondition, u: Signal, budget: int) -> List[Signal]:
        if budget < 0:
            raise InvalidDelay(f"enumeration budget must be >= 0, got {budget}")
        result = self._enumerate(dc, u, budget)
        logger.debug(f"enumerate {dc} on {u}: {len(result.members)} members (complete={result.complete})")
        return list(result.members)

    def is_complete(self, dc: DelayCondition, u: Signal, budget: int) -> bool:
        """Whether ``enumerate`` with this budget lists every member."""
        return self._enumerate(dc, u, budget).complete

    def _enumerate(self, dc: DelayCondition, u: Signal, budget: int) -> Enumeration:
        if not is_enumerable(dc):
            raise NotEnumerable(dc)
        if is_deterministic(dc):
            members = (self.apply(dc, u),) if budget else ()
            return Enumeration(members, bool(budget))
        if isinstance(dc, StartupMask):
            members, exhausted = _unique(self._startup_candidates(u), budget)
            complete = exhausted and u.ones().intersection(NON_NEGATIVE).is_empty()
            return Enumeration(members, complete)
        if isinstance(dc, SolSC):
            members, _ = _unique(self._stable_candidates(u), budget)
            return Enumeration(members, False)
        if isinstance(dc, Join):
            left = self._enumerate(dc.left, u, budget)
            right = self._enumerate(dc.right, u, budget)
            members, exhausted = _unique(_interleave(left.members, right.members), budget)
            return Enumeration(members, exhausted and left.complete and right.complete)
        if isinstance(dc, Serial):
            return self._enumerate_serial(dc, u, budget)
        if isinstance(dc, (Meet, MeetSet, MeetFam)):
            return self._enumerate_meet(dc, u, budget)
        if isinstance(dc, UserPredicate):
            candidates = (x for x in dc.generator(u, budget) if dc.predicate(u, x))
            members, _ = _unique(candidates, budget)
            return Enumeration(members, False)
        raise NotEnumerable(dc)

    def _enumerate_serial(self, dc: Serial, u: Signal, budget: int) -> Enumeration:
        inner = self._enumerate(dc.inner, u, budget)
        complete = inner.complete
        outputs: List[Signal] = []
        for x in inner.members:
            outer = self._enumerate(dc.outer, x, budget)
            complete = complete and outer.complete
            outputs.extend(outer.members)
        members, exhausted = _unique(outputs, budget)
        return Enumeration(members, complete and exhausted)

    def _enumerate_meet(self, dc: DelayCondition, u: Signal, budget: int) -> Enumeration:
        self._ensure_nonempty(dc, u)
        if isinstance(dc, Meet):
            side = dc.left if is_enumerable(dc.left) else dc.right
        else:
            side = dc.inner
        search = max(budget, self.policy.witness_budget)
        candidates = self._enumerate(side, u, search)
        accepted, undecided = [], False
        for x in candidates.members:
            status = self.decide(dc, u, x)
            if status is HOLDS:
                accepted.append(x)
            undecided = undecided or status is UNKNOWN
        members, exhausted = _unique(accepted, budget)
        return Enumeration(members, candidates.complete and exhausted and not undecided)

    # Candidate streams ------------------------------------------------
    def _grid(self) -> List[Fraction]:
        den = self.policy.grid_denominator
        top = int(self.policy.horizon * den)
        return [Fraction(k, den) for k in range(top + 1)]

    def _startup_candidates(self, u: Signal) -> Iterator[Signal]:
        cut_points = sorted({Fraction(0), *u.edges, *self._grid()})
        for d in cut_points:
            yield startup_mask(u, d)

    def _stable_candidates(self, u: Signal) -> Iterator[Signal]:
        final = u.final_value
        offsets = self.policy.settle_offsets
        yield u
        for s in offsets:
            yield ops.translate(u, s)
        yield Signal.constant(final)
        for s in offsets:
            yield Signal(1 - final, (s,))
        yield from self._random_stable(u)

    def _random_stable(self, u: Signal) -> Iterator[Signal]:
        rng = random.Random(f"{self.policy.seed}:{u}")
        grid = self._grid()
        for _ in range(self.policy.random_attempts):
            count = rng.randint(0, min(4, len(grid)))
            edges = sorted(rng.sample(grid, count))
            initial = rng.randint(0, 1)
            if (initial + len(edges)) % 2 != u.final_value:
                if edges:
                    edges.pop()
                else:
                    initial = 1 - initial
            yield Signal(initial, tuple(edges))
