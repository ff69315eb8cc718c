"""Tests for the interval-set algebra."""
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from delaylab.core.signal.intervals import NON_NEGATIVE, Interval, IntervalSet
from tests.strategies import signals, times


def test_normalization_merges_adjacent_parts():
    """Touching intervals merge."""
    s = IntervalSet.half_open(0, 2).union(IntervalSet.closed(2, 3))
    assert s == IntervalSet.closed(0, 3)
    assert len(s.parts) == 1


def test_open_gap_is_kept():
    """A single missing point stays a gap."""
    s = IntervalSet.half_open(0, 2).union(IntervalSet.open(2, 3))
    assert len(s.parts) == 2
    assert 2 not in s
    assert Fraction(5, 2) in s


def test_empty_parts_are_dropped():
    """Empty intervals disappear."""
    assert IntervalSet((Interval(3, True, 3, False),)).is_empty()
    assert IntervalSet((Interval(4, True, 2, True),)).is_empty()
    assert not IntervalSet.points([3]).is_empty()


def test_complement():
    """The complement flips closedness at every boundary."""
    c = IntervalSet.half_open(1, 2).complement()
    assert 1 not in c and 0 in c and 2 in c
    assert IntervalSet.everything().complement().is_empty()
    assert IntervalSet.empty().complement() == IntervalSet.everything()


def test_intersection_and_covers():
    """Intersection and cover test."""
    a = IntervalSet.closed(0, 5)
    b = IntervalSet.half_open(3, 8)
    assert a.intersection(b) == IntervalSet.closed(3, 5)
    assert NON_NEGATIVE.covers(b)
    assert not b.covers(a)


def test_reflect_swaps_closedness():
    """Reflection swaps the ends and their closedness."""
    # {5 - t : t in [3, inf)} = (-inf, 2]
    r = IntervalSet.at_least(3).reflect(5)
    assert r == IntervalSet((Interval(None, False, 2, True),))
    assert str(r.intersection(NON_NEGATIVE)) == "[0, 2]"


def test_shift():
    """Shifting moves both ends."""
    shifted = IntervalSet.half_open(1, 2).shift(Fraction(1, 2))
    assert shifted == IntervalSet.half_open(Fraction(3, 2), Fraction(5, 2))


def test_str():
    """Interval sets render in interval notation."""
    assert str(IntervalSet.empty()) == "{}"
    assert str(IntervalSet.at_least(0)) == "[0, inf)"
    assert str(IntervalSet.points([1, 3])) == "{1} U {3}"


@given(signals(), signals())
@settings(deadline=None)
def test_de_morgan(a, b):
    """Complement turns unions into intersections."""
    x, y = a.ones(), b.ones()
    assert x.intersection(y).complement() == x.complement().union(y.complement())


@given(signals(), times())
@settings(deadline=None)
def test_ones_and_zeros_partition_the_line(s, t):
    """ones and zeros are disjoint and cover the line."""
    assert (t in s.ones()) != (t in s.zeros())
    assert (t in s.ones()) == bool(s.at(t))


@given(signals(), st.integers(-4, 20))
@settings(deadline=None)
def test_reflection_membership(s, k):
    """t is in the reflection about c iff c - t is in the set."""
    c = Fraction(k, 2)
    reflected = s.ones().reflect(c)
    for t in list(s.edges) + [Fraction(-1), Fraction(0)]:
        assert (c - t in reflected) == (t in s.ones())
