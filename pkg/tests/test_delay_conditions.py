"""Tests for delay conditions, their combinators and the stability metrics."""
from fractions import Fraction

import pytest

from delaylab.core.delays.descriptors import (
    IDENT,
    SOL_SC,
    STARTUP,
    Meet,
    Pure,
    Selected,
    UserPredicate,
    WindowAll,
    WindowAny,
    capabilities,
    is_deterministic,
    is_enumerable,
    join,
    lookahead,
    meet,
    meet_fam,
    meet_set,
    pure,
    serial,
)
from delaylab.core.delays.engine import DelayEngine, startup_feasible_delays
from delaylab.core.delays.enum import Capability
from delaylab.core.delays.metrics import stable, transmission_delay
from delaylab.core.signal import operations as ops
from delaylab.core.signal.signal import ONE, ZERO, sig
from delaylab.exceptions import EmptyDelaySet, InvalidDelay, NotDeterministic, NotEnumerable, NotStable
from delaylab.schemas.delays import Classification
from delaylab.schemas.verdicts import VerdictStatus

HOLDS, FAILS, UNKNOWN = VerdictStatus.holds, VerdictStatus.fails, VerdictStatus.unknown


# ---------------------------------------------------------------------------
# Stability and transmission delays
# ---------------------------------------------------------------------------

def test_stable():
    """Stability compares edge counts parity and final values."""
    assert stable(sig(0, 2), sig(0, 100)) == 1
    assert stable(sig(0, 2), ZERO) == 0
    assert stable(ONE, sig(0, 3)) == 1


def test_transmission_delay_rising():
    """A rising step delayed by 3 reports d = 3."""
    report = transmission_delay(sig(0, 2), sig(0, 5))
    assert report.d == 3
    assert report.classification is Classification.rising
    assert str(report) == "d = 3 (rising)"


def test_transmission_delay_is_clamped_at_zero():
    """An output that switches first reports d = 0."""
    report = transmission_delay(sig(0, 2), sig(0, 1))
    assert report.d == 0
    assert report.classification is Classification.rising


def test_transmission_delay_constant_input_is_unclassified():
    """A constant input gives an unclassified delay."""
    report = transmission_delay(ONE, sig(0, 4))
    assert report.d == 4
    assert report.t1_star == 0
    assert report.classification is Classification.unclassified


def test_transmission_delay_falling():
    """A falling transition is classified as falling."""
    report = transmission_delay(sig(1, 4), sig(1, 5))
    assert report.d == 1
    assert report.classification is Classification.falling


def test_transmission_delay_requires_stability():
    """Unstable pairs have no transmission delay."""
    with pytest.raises(NotStable):
        transmission_delay(sig(0, 2), ZERO)


# ---------------------------------------------------------------------------
# Descriptors
# ---------------------------------------------------------------------------

def test_descriptor_validation():
    """Negative delays and windows with m > d are rejected."""
    with pytest.raises(InvalidDelay):
        Pure(-1)
    with pytest.raises(InvalidDelay):
        WindowAll(1, 2)
    assert str(WindowAny(Fraction(3, 2), Fraction(1, 2))) == "window_any(3/2,1/2)"
    assert str(serial(pure(2), join(IDENT, SOL_SC))) == "serial(pure(2),join(ident,solsc))"


def test_capabilities():
    """Capabilities report determinism and enumerability."""
    assert is_deterministic(serial(pure(1), WindowAll(2, 1)))
    assert not is_deterministic(serial(pure(1), SOL_SC))
    assert is_deterministic(meet(pure(2), SOL_SC))
    assert not is_enumerable(UserPredicate("opaque", lambda u, x: True))
    assert capabilities(SOL_SC) == {Capability.MEMBERSHIP, Capability.ENUMERATE}
    assert Capability.DETERMINISTIC in capabilities(pure(3))


def test_lookahead():
    """Lookahead is d for pure delays, d - m for windows and adds over serial."""
    assert lookahead(IDENT) == 0
    assert lookahead(pure(Fraction(1, 2))) == Fraction(1, 2)
    assert lookahead(WindowAll(2, 1)) == 1
    assert lookahead(serial(pure(1), WindowAny(3, 1))) == 3
    assert lookahead(SOL_SC) is None


# ---------------------------------------------------------------------------
# Membership and apply
# ---------------------------------------------------------------------------

def test_member_of_builtins(delay_engine):
    """Membership of the built-in delay conditions."""
    assert delay_engine.member(pure(3), sig(0, 2), sig(0, 5)).is_holds
    assert delay_engine.member(STARTUP, sig(0, 2, 5), sig(0, 3, 5)).is_holds
    verdict = delay_engine.member(SOL_SC, sig(0, 2), sig(1, 7))
    assert verdict.is_fails
    assert verdict.counterexample == {"u": sig(0, 2), "x": sig(1, 7)}


def test_startup_feasible_delays():
    """The startup mask admits an interval of delays."""
    assert startup_feasible_delays(sig(0, 2, 5), sig(0, 3, 5)).contains(3)
    assert startup_feasible_delays(sig(0, 2, 5), sig(0, 3, 5)).parts[0].hi == 3
    # any d in [0, 2] keeps the whole pulse
    feasible = startup_feasible_delays(sig(0, 2, 5), sig(0, 2, 5))
    assert feasible.contains(0) and feasible.contains(2) and not feasible.contains(Fraction(5, 2))
    assert startup_feasible_delays(sig(0, 2), sig(0, 1)).is_empty()
    # a mask never ends a run early
    assert startup_feasible_delays(sig(0, 2, 5), sig(0, 2, 4)).is_empty()


def test_apply(delay_engine):
    """apply computes the output of deterministic conditions."""
    assert delay_engine.apply(pure(3), sig(0, 2)) == sig(0, 5)
    assert delay_engine.apply(WindowAll(1, 1), sig(0, 2, 5)) == sig(0, 3, 5)
    assert delay_engine.apply(serial(pure(2), pure(3)), sig(0, 1)) == sig(0, 6)
    assert delay_engine.apply(IDENT, sig(1, 4)) == sig(1, 4)


def test_apply_requires_determinism(delay_engine):
    """apply on a non-deterministic condition raises NotDeterministic."""
    with pytest.raises(NotDeterministic):
        delay_engine.apply(SOL_SC, sig(0, 2))


def test_member_agrees_with_apply(delay_engine, small_corpus):
    """For deterministic conditions membership is equality with apply."""
    for dc in (pure(1), WindowAll(2, 1), WindowAny(2, 1), serial(WindowAll(1, 1), pure(2))):
        for u in small_corpus:
            assert delay_engine.member(dc, u, delay_engine.apply(dc, u)).is_holds


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def test_enumerate_deterministic_is_singleton(delay_engine):
    """Deterministic conditions enumerate one member."""
    assert delay_engine.enumerate(pure(2), sig(0, 1), 10) == [sig(0, 3)]


def test_enumerate_solsc(delay_engine):
    """Sol_SC enumeration starts with the input and its settled variants."""
    members = delay_engine.enumerate(SOL_SC, sig(0, 2), 3)
    assert len(members) == 3
    assert {sig(0, 2), sig(0, 7)} <= set(members)
    assert all(stable(sig(0, 2), x) for x in members)


def test_enumerate_is_reproducible(delay_engine):
    """Enumeration is reproducible for a fixed seed."""
    first = delay_engine.enumerate(SOL_SC, sig(1, 3), 20)
    assert first == delay_engine.enumerate(SOL_SC, sig(1, 3), 20)
    assert len(first) == 20
    assert all(stable(sig(1, 3), x) for x in first)


def test_enumerate_join(delay_engine):
    """A join of pure delays enumerates both shifts, completely."""
    members = delay_engine.enumerate(join(pure(1), pure(2)), sig(0, 0), 10)
    assert set(members) == {sig(0, 1), sig(0, 2)}
    assert delay_engine.is_complete(join(pure(1), pure(2)), sig(0, 0), 10)


def test_enumerate_startup(delay_engine):
    """The startup mask of sig(1;0) is ZERO."""
    u = sig(0, 2, 5)
    members = delay_engine.enumerate(STARTUP, u, 40)
    assert sig(0, 3, 5) in members
    assert u in members and ZERO in members
    for x in members:
        assert delay_engine.member(STARTUP, u, x).is_holds
    # u has no 1 at or after time 0, so every mask gives the constant 0
    assert delay_engine.enumerate(STARTUP, sig(1, 0), 5) == [ZERO]
    assert delay_engine.is_complete(STARTUP, sig(1, 0), 5)


def test_enumerate_requires_a_generator(delay_engine):
    """A user predicate without a generator cannot be enumerated."""
    opaque = UserPredicate("same", lambda u, x: u == x)
    with pytest.raises(NotEnumerable):
        delay_engine.enumerate(opaque, ZERO, 3)
    generated = UserPredicate("same", lambda u, x: u == x, generator=lambda u, budget: [u, ops.negate(u)])
    assert delay_engine.enumerate(generated, sig(0, 1), 3) == [sig(0, 1)]


# ---------------------------------------------------------------------------
# Meet and join
# ---------------------------------------------------------------------------

def test_meet_with_solsc_is_the_pure_delay(delay_engine, small_corpus):
    """Meeting a pure delay with Sol_SC keeps the pure delay."""
    dc = meet(pure(2), SOL_SC)
    for u in small_corpus:
        assert delay_engine.member(dc, u, ops.translate(u, 2)).is_holds
        assert delay_engine.apply(dc, u) == ops.translate(u, 2)


def test_disjoint_meet_is_empty(delay_engine):
    """A meet with no common member raises EmptyDelaySet."""
    with pytest.raises(EmptyDelaySet):
        delay_engine.member(meet(pure(1), pure(2)), sig(0, 0), sig(0, 1))
    # on a constant input both shifts coincide
    assert delay_engine.member(meet(pure(1), pure(2)), ONE, ONE).is_holds


def test_nonempty_checks_are_bounded(small_corpus):
    """Meets rebuilt per call do not grow the non-emptiness cache without limit."""
    engine = DelayEngine()
    engine.NONEMPTY_CACHE_SIZE = 3
    for k, u in enumerate(small_corpus):
        late = meet_set(SOL_SC, lambda x, k=k: x.is_constant or x.edges[0] >= 0, f"late{k}")
        assert engine.member(meet(pure(2), SOL_SC), u, ops.translate(u, 2)).is_holds
        engine.decide(late, u, u)
    assert 0 < len(engine._nonempty_checked) <= 3
    engine.clear_caches()
    assert len(engine._nonempty_checked) == 0


def test_join_membership(delay_engine):
    """A join holds when either side holds."""
    assert delay_engine.member(join(pure(1), pure(2)), sig(0, 0), sig(0, 2)).is_holds
    assert delay_engine.member(join(pure(1), pure(2)), sig(0, 0), sig(0, 3)).is_fails


def test_meet_set_and_meet_fam(delay_engine):
    """meet_set and meet_fam filter members by their predicate."""
    late = meet_set(join(pure(1), pure(3)), lambda x: x.is_constant or x.edges[0] >= 3, "late")
    assert delay_engine.enumerate(late, sig(0, 1), 5) == [sig(0, 4)]
    assert delay_engine.member(late, sig(0, 1), sig(0, 2)).is_fails

    bounded = meet_fam(SOL_SC, lambda u, x: len(x.edges) <= len(u.edges), "no_new_edges")
    assert delay_engine.member(bounded, sig(0, 2), sig(0, 5)).is_holds
    assert delay_engine.member(bounded, sig(0, 2), sig(0, 1, 2, 5)).is_fails


# ---------------------------------------------------------------------------
# Serial connection
# ---------------------------------------------------------------------------

def test_serial_of_solsc_finds_a_witness(delay_engine):
    """Sol_SC after Sol_SC finds an intermediate witness."""
    assert delay_engine.member(serial(SOL_SC, SOL_SC), sig(0, 2), sig(0, 9)).is_holds
    assert delay_engine.member(serial(SOL_SC, SOL_SC), sig(0, 2), ZERO).is_fails


def test_serial_over_opaque_inner_is_unknown(delay_engine):
    """An opaque inner condition leaves serial membership unknown."""
    opaque = UserPredicate("stable", lambda u, x: stable(u, x) == 1)
    verdict = delay_engine.member(serial(pure(1), opaque), sig(0, 2), sig(0, 5))
    assert verdict.status is UNKNOWN
    # the stability condition still refutes
    assert delay_engine.member(serial(pure(1), opaque), sig(0, 2), ZERO).is_fails


def test_serial_unit(delay_engine, small_corpus):
    """ident is a unit of the serial connection."""
    for dc in (pure(2), SOL_SC, STARTUP, join(pure(1), pure(2))):
        for u in small_corpus:
            for x in small_corpus:
                plain = delay_engine.decide(dc, u, x)
                assert delay_engine.decide(serial(dc, IDENT), u, x) is plain
                assert delay_engine.decide(serial(IDENT, dc), u, x) is plain


def test_serial_pure_delays_compose(delay_engine, small_corpus):
    """Serial pure delays add up."""
    for u in small_corpus:
        left = delay_engine.apply(serial(pure(Fraction(1, 2)), pure(3)), u)
        assert left == delay_engine.apply(pure(Fraction(7, 2)), u)


def test_serial_with_finite_inner_is_exact(delay_engine):
    """A finite inner enumeration decides serial membership exactly."""
    dc = serial(join(pure(1), pure(2)), join(pure(0), pure(2)))
    u = sig(0, 1)
    assert set(delay_engine.enumerate(dc, u, 10)) == {sig(0, 2), sig(0, 3), sig(0, 4), sig(0, 5)}
    assert delay_engine.decide(dc, u, sig(0, 6)) is FAILS
    assert delay_engine.decide(dc, u, sig(0, 5)) is HOLDS


# ---------------------------------------------------------------------------
# Deterministic selection
# ---------------------------------------------------------------------------

def test_select_deterministic(delay_engine, small_corpus):
    """select_deterministic picks one member per input."""
    selected = delay_engine.select_deterministic(SOL_SC)
    assert isinstance(selected, Selected)
    assert delay_engine.apply(selected, sig(0, 2)) == ONE
    assert delay_engine.select_deterministic(pure(2)) == pure(2)
    for j in (SOL_SC, STARTUP, join(pure(1), pure(2))):
        chosen = delay_engine.select_deterministic(j)
        for u in small_corpus:
            assert delay_engine.member(j, u, delay_engine.apply(chosen, u)).is_holds


def test_select_requires_enumeration(delay_engine):
    """Selecting from a non-enumerable condition raises NotEnumerable."""
    with pytest.raises(NotEnumerable):
        delay_engine.select_deterministic(UserPredicate("opaque", lambda u, x: True))


def test_meet_of_joins_keeps_common_members(delay_engine):
    """A meet of joins keeps the shifts both sides share."""
    dc = Meet(join(pure(1), pure(2)), join(pure(2), pure(3)))
    assert delay_engine.enumerate(dc, sig(0, 1), 5) == [sig(0, 3)]
