"""Tests for the corpus generator and the property checkers."""
from fractions import Fraction

import pytest

from delaylab.core.delays.descriptors import (
    SOL_SC,
    STARTUP,
    UserPredicate,
    WindowAll,
    WindowAny,
    pure,
    serial,
)
from delaylab.core.lab.corpus import generate_corpus
from delaylab.core.lab.engine import PropertyEngine, constancy_witness
from delaylab.core.signal import operations as ops
from delaylab.core.signal.signal import ONE, ZERO, sig
from delaylab.exceptions import NotEnumerable
from delaylab.schemas.lab import CorpusConfig
from delaylab.schemas.verdicts import VerdictStatus

SHIFTS = [Fraction(-3), Fraction(-1, 2), Fraction(2)]


# ---------------------------------------------------------------------------
# Corpus
# ---------------------------------------------------------------------------

def test_corpus_of_constants():
    """A corpus of two holds the constants."""
    assert generate_corpus(CorpusConfig(count=2, max_edges=0)) == [ZERO, ONE]


def test_corpus_is_deterministic():
    """The same config gives the same corpus."""
    cfg = CorpusConfig(seed=3, count=25, max_edges=4, horizon=6)
    assert generate_corpus(cfg) == generate_corpus(cfg)


def test_corpus_contains_step_and_pulse(small_corpus):
    """The corpus starts with the constants, a step and a pulse."""
    assert len(small_corpus) == 16
    assert small_corpus[:4] == [ZERO, ONE, sig(0, 2), sig(0, 2, 3)]
    assert len(set(small_corpus)) == len(small_corpus)
    for s in small_corpus:
        assert len(s.edges) <= 3
        assert all(0 <= e <= 8 for e in s.edges)


def test_corpus_stops_when_the_grid_is_exhausted():
    """A small grid caps the corpus size."""
    assert generate_corpus(CorpusConfig(count=10, max_edges=0)) == [ZERO, ONE]


# ---------------------------------------------------------------------------
# Determinism and inclusion
# ---------------------------------------------------------------------------

def test_check_determinism(property_engine, small_corpus):
    """Deterministic conditions pass the determinism check."""
    assert property_engine.check_determinism(pure(2), small_corpus, 5).is_holds
    assert property_engine.check_determinism(WindowAll(2, 1), small_corpus, 5).is_holds


def test_check_determinism_of_solsc(property_engine):
    """Sol_SC fails determinism with two distinct responses."""
    verdict = property_engine.check_determinism(SOL_SC, [sig(0, 2)], 5)
    assert verdict.is_fails
    assert verdict.counterexample == {"u": sig(0, 2), "x1": sig(0, 2), "x2": sig(0, 7)}


def test_check_determinism_requires_enumeration(property_engine):
    """Checking a non-enumerable condition raises NotEnumerable."""
    with pytest.raises(NotEnumerable):
        property_engine.check_determinism(UserPredicate("opaque", lambda u, x: True), [ZERO], 3)


def test_check_inclusion(property_engine, small_corpus):
    """Inclusion holds into Sol_SC and fails between distinct shifts."""
    assert property_engine.check_inclusion(pure(2), SOL_SC, small_corpus, 5).is_holds
    assert property_engine.check_inclusion(STARTUP, STARTUP, small_corpus, 6).is_holds
    verdict = property_engine.check_inclusion(SOL_SC, pure(2), [sig(0, 2)], 5)
    assert verdict.is_fails
    u, x = verdict.counterexample["u"], verdict.counterexample["x"]
    assert property_engine.delays.member(SOL_SC, u, x).is_holds
    assert property_engine.delays.member(pure(2), u, x).is_fails


# ---------------------------------------------------------------------------
# Time invariance
# ---------------------------------------------------------------------------

def test_check_time_invariance_holds(property_engine, small_corpus):
    """Pure and windowed delays are time invariant."""
    assert property_engine.check_time_invariance(pure(3), small_corpus, SHIFTS, 4).is_holds
    assert property_engine.check_time_invariance(WindowAll(2, 1), small_corpus, SHIFTS, 4).is_holds
    assert property_engine.check_time_invariance(WindowAny(2, 1), small_corpus, SHIFTS, 4).is_holds


def test_solsc_is_time_variable(property_engine):
    """Sol_SC fails time invariance on sig(1;) shifted by -2."""
    verdict = property_engine.check_time_invariance(SOL_SC, [ONE], [-2], 8)
    assert verdict.is_fails
    assert verdict.counterexample == {"u": ONE, "x": sig(0, 1), "d": -2}


# ---------------------------------------------------------------------------
# Constancy
# ---------------------------------------------------------------------------

def test_constancy_witness_of_a_single_pair():
    """The feasible offsets of one pair."""
    witness = constancy_witness([(sig(0, 3), sig(0, 5))])
    assert str(witness.feasible_dr) == "[0, 2]"
    assert str(witness.feasible_df) == "[0, inf)"
    assert witness.is_constant


def test_constancy_witness_without_pairs():
    """No pairs leave every offset feasible."""
    witness = constancy_witness([])
    assert str(witness.feasible_dr) == "[0, inf)"
    assert str(witness.feasible_df) == "[0, inf)"


def test_window_outputs_admit_their_witness(delay_engine, small_corpus):
    """Window outputs admit (d, d - m) for all and (d - m, d) for any."""
    for d, m in [(0, 0), (1, 1), (2, 1), (Fraction(3, 2), Fraction(1, 2))]:
        all_pairs = [(u, delay_engine.apply(WindowAll(d, m), u)) for u in small_corpus]
        any_pairs = [(u, delay_engine.apply(WindowAny(d, m), u)) for u in small_corpus]
        assert constancy_witness(all_pairs).admits(d, d - m)
        assert constancy_witness(any_pairs).admits(d - m, d)


def test_check_constancy(property_engine, small_corpus):
    """Constancy holds for windows and fails for Sol_SC."""
    verdict = property_engine.check_constancy(pure(2), small_corpus, 4)
    assert verdict.is_holds
    assert "d_r in" in verdict.detail
    assert property_engine.check_constancy(SOL_SC, [sig(0, 2)], 10).is_fails


def test_check_constancy_inequalities(property_engine, small_corpus):
    """A wrong rising offset breaks the inequality at the reported edge."""
    assert property_engine.check_constancy_inequalities(WindowAll(2, 1), small_corpus, 2, 1, 4).is_holds
    verdict = property_engine.check_constancy_inequalities(WindowAll(2, 1), [sig(0, 2)], 3, 1, 4)
    assert verdict.is_fails
    assert verdict.counterexample == {"u": sig(0, 2), "x": sig(0, 4), "t": 4}


# ---------------------------------------------------------------------------
# Symmetry and the DC axiom
# ---------------------------------------------------------------------------

def test_check_symmetry(property_engine, small_corpus):
    """Pure delays and Sol_SC are symmetric."""
    assert property_engine.check_symmetry(pure(2), small_corpus, 4).is_holds
    assert property_engine.check_symmetry(SOL_SC, small_corpus, 4).is_holds


def test_candidate_outputs_are_bounded_per_input(delay_engine):
    """Each input sees a fixed-width slice of the corpus, its members and its negation."""
    engine = PropertyEngine(delay_engine, candidate_width=2)
    corpus = [ZERO, ONE, sig(0, 2), sig(0, 2, 3)]
    assert engine.candidates(pure(2), corpus, 3, 4) == [sig(0, 2, 3), ZERO, sig(0, 4, 5), sig(1, 2, 3)]
    # duplicates collapse: pure(2) of ZERO is ZERO, its negation ONE is already in the slice
    assert engine.candidates(pure(2), corpus, 0, 4) == [ZERO, ONE]
    members = delay_engine.enumerate(SOL_SC, ONE, 4)
    assert len(engine.candidates(SOL_SC, corpus * 200, 5, 4)) <= 2 + len(members) + 1


def test_window_all_is_not_symmetric(property_engine, delay_engine):
    """window_all(2,2) fails symmetry on the width-1 pulse."""
    verdict = property_engine.check_symmetry(WindowAll(2, 2), [sig(0, 2, 3)], 4)
    assert verdict.is_fails
    u, x = verdict.counterexample["u"], verdict.counterexample["x"]
    assert (u, x) == (sig(0, 2, 3), ZERO)
    # replaying the counterexample reproduces the mismatch
    assert delay_engine.decide(WindowAll(2, 2), u, x) is VerdictStatus.holds
    assert delay_engine.decide(WindowAll(2, 2), ops.negate(u), ops.negate(x)) is VerdictStatus.fails


def test_check_dc_axiom(property_engine, small_corpus):
    """Every enumerated member is stable with its input."""
    assert property_engine.check_dc_axiom(serial(SOL_SC, pure(1)), small_corpus, 5).is_holds
    assert property_engine.check_dc_axiom(STARTUP, small_corpus, 5).is_holds
