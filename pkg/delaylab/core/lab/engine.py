"""
Property checkers for delay conditions.

Universal claims are falsified against a finite corpus: ``holds`` means no
counterexample was found with the given enumeration budget.
"""
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from delaylab.core.delays.descriptors import DelayCondition, is_enumerable
from delaylab.core.delays.engine import DelayEngine
from delaylab.core.signal import operations as ops
from delaylab.core.signal.intervals import NON_NEGATIVE, IntervalSet
from delaylab.core.signal.signal import Signal
from delaylab.core.signal.utils import TimeLike, as_time
from delaylab.exceptions import NotASignal, NotEnumerable
from delaylab.schemas.lab import ConstancyWitness
from delaylab.schemas.verdicts import Verdict, VerdictStatus
from delaylab.utils.logger import format_verdict_log, logger

Pair = Tuple[Signal, Signal]


def constancy_witness(pairs: Iterable[Pair]) -> ConstancyWitness:
    """Anticipation offsets (d_r, d_f) consistent with every (u, x) pair."""
    feasible_dr, feasible_df = NON_NEGATIVE, NON_NEGATIVE
    for u, x in pairs:
        feasible_dr, feasible_df = _narrow(feasible_dr, feasible_df, u, x)
    return ConstancyWitness(feasible_dr=feasible_dr, feasible_df=feasible_df)


def _narrow(dr: IntervalSet, df: IntervalSet, u: Signal, x: Signal) -> Tuple[IntervalSet, IntervalSet]:
    # u(t - d) = 1  <=>  d in {t - s : s in ones(u)}
    ones, zeros = u.ones(), u.zeros()
    for t in x.rising_edges():
        dr = dr.intersection(ones.reflect(t))
    for t in x.falling_edges():
        df = df.intersection(zeros.reflect(t))
    return dr, df


class PropertyEngine:
    """Corpus-relative checkers for determinism, order, time invariance, constancy and symmetry."""

    CANDIDATE_WIDTH = 16

    def __init__(self, delay_engine: Optional[DelayEngine] = None, candidate_width: int = CANDIDATE_WIDTH):
        self.delays = delay_engine or DelayEngine()
        self.candidate_width = candidate_width

    def _members(self, i: DelayCondition, u: Signal, budget: int) -> List[Signal]:
        if not is_enumerable(i):
            raise NotEnumerable(i)
        return self.delays.enumerate(i, u, budget)

    def candidates(self, i: DelayCondition, corpus: Sequence[Signal], k: int, budget: int) -> List[Signal]:
        """
        Candidate outputs for u = corpus[k]: the next ``candidate_width`` corpus
        signals (cyclically, u first), the enumerated members of i(u), then not u.
        """
        u = corpus[k]
        width = min(self.candidate_width, len(corpus))
        found = dict.fromkeys(corpus[(k + n) % len(corpus)] for n in range(width))
        if is_enumerable(i):
            found.update(dict.fromkeys(self.delays.enumerate(i, u, budget)))
        found.setdefault(ops.negate(u))
        return list(found)

    @staticmethod
    def _report(check: str, dc: DelayCondition, verdict: Verdict) -> Verdict:
        message = format_verdict_log(
            f"{check} of {dc}", verdict.status.value, verdict.rendered_counterexample()
        )
        if verdict.is_fails:
            logger.bind(dc=str(dc)).warning(message)
        else:
            logger.bind(dc=str(dc)).debug(message)
        return verdict

    # ------------------------------------------------------------------
    # Determinism and inclusion
    # ------------------------------------------------------------------
    def check_determinism(self, i: DelayCondition, corpus: Sequence[Signal], budget: int) -> Verdict:
        for u in corpus:
            members = self._members(i, u, max(budget, 2))
            if len(members) > 1:
                verdict = Verdict.fails({"u": u, "x1": members[0], "x2": members[1]})
                return self._report("determinism", i, verdict)
        return self._report("determinism", i, Verdict.holds())

    def check_inclusion(
        self, i: DelayCondition, j: DelayCondition, corpus: Sequence[Signal], budget: int
    ) -> Verdict:
        undecided = 0
        for u in corpus:
            for x in self._members(i, u, budget):
                status = self.delays.decide(j, u, x)
                if status is VerdictStatus.fails:
                    verdict = Verdict.fails({"u": u, "x": x}, f"not a member of {j}")
                    return self._report("inclusion", i, verdict)
                undecided += status is VerdictStatus.unknown
        if undecided:
            return self._report("inclusion", i, Verdict.unknown(f"{undecided} memberships in {j} undecided"))
        return self._report("inclusion", i, Verdict.holds())

    # ------------------------------------------------------------------
    # Time invariance
    # ------------------------------------------------------------------
    def check_time_invariance(
        self, i: DelayCondition, corpus: Sequence[Signal], shifts: Sequence[TimeLike], budget: int
    ) -> Verdict:
        shifts = [as_time(d) for d in shifts]
        undecided = 0
        for u in corpus:
            for x in self._members(i, u, budget):
                for d in shifts:
                    status = self._shifted_member(i, u, x, d)
                    if status is VerdictStatus.fails:
                        return self._report("time invariance", i, Verdict.fails({"u": u, "x": x, "d": d}))
                    undecided += status is VerdictStatus.unknown
            for d in shifts:
                if d < 0:
                    continue
                # converse: members of i(u o tau^d) shift back into i(u)
                shifted = ops.translate(u, d)
                for x in self._members(i, shifted, budget):
                    status = self._shifted_member(i, shifted, x, -d)
                    if status is VerdictStatus.fails:
                        return self._report(
                            "time invariance", i, Verdict.fails({"u": shifted, "x": x, "d": -d})
                        )
                    undecided += status is VerdictStatus.unknown
        if undecided:
            return self._report("time invariance", i, Verdict.unknown(f"{undecided} memberships undecided"))
        return self._report("time invariance", i, Verdict.holds())

    def _shifted_member(self, i: DelayCondition, u: Signal, x: Signal, d: Fraction) -> VerdictStatus:
        """Whether x o tau^d is a member of i(u o tau^d); holds vacuously when u o tau^d is no signal."""
        try:
            shifted_u = ops.translate(u, d)
        except NotASignal:
            return VerdictStatus.holds
        try:
            shifted_x = ops.translate(x, d)
        except NotASignal:
            return VerdictStatus.fails
        return self.delays.decide(i, shifted_u, shifted_x)

    # ------------------------------------------------------------------
    # Constancy
    # ------------------------------------------------------------------
    def constancy_witness(self, pairs: Iterable[Pair]) -> ConstancyWitness:
        return constancy_witness(pairs)

    def check_constancy(self, i: DelayCondition, corpus: Sequence[Signal], budget: int) -> Verdict:
        dr, df = NON_NEGATIVE, NON_NEGATIVE
        for u in corpus:
            for x in self._members(i, u, budget):
                dr, df = _narrow(dr, df, u, x)
                if dr.is_empty() or df.is_empty():
                    side = "d_r" if dr.is_empty() else "d_f"
                    verdict = Verdict.fails({"u": u, "x": x}, f"no feasible {side} left")
                    return self._report("constancy", i, verdict)
        return self._report("constancy", i, Verdict.holds(f"d_r in {dr}, d_f in {df}"))

    def check_constancy_inequalities(
        self, i: DelayCondition, corpus: Sequence[Signal], d_r: TimeLike, d_f: TimeLike, budget: int
    ) -> Verdict:
        """Every rising edge t of x needs u(t - d_r) = 1, every falling edge u(t - d_f) = 0."""
        d_r, d_f = as_time(d_r), as_time(d_f)
        for u in corpus:
            for x in self._members(i, u, budget):
                broken = [t for t in x.rising_edges() if not u.at(t - d_r)]
                broken += [t for t in x.falling_edges() if u.at(t - d_f)]
                if broken:
                    verdict = Verdict.fails({"u": u, "x": x, "t": broken[0]})
                    return self._report("constancy inequalities", i, verdict)
        return self._report("constancy inequalities", i, Verdict.holds())

    # ------------------------------------------------------------------
    # Symmetry and the DC axiom
    # ------------------------------------------------------------------
    def check_symmetry(self, i: DelayCondition, corpus: Sequence[Signal], budget: int) -> Verdict:
        undecided = 0
        for k, u in enumerate(corpus):
            for x in self.candidates(i, corpus, k, budget):
                direct = self.delays.decide(i, u, x)
                mirrored = self.delays.decide(i, ops.negate(u), ops.negate(x))
                if VerdictStatus.unknown in (direct, mirrored):
                    undecided += 1
                elif direct is not mirrored:
                    return self._report("symmetry", i, Verdict.fails({"u": u, "x": x}))
        if undecided:
            return self._report("symmetry", i, Verdict.unknown(f"{undecided} pairs undecided"))
        return self._report("symmetry", i, Verdict.holds())

    def check_dc_axiom(self, i: DelayCondition, corpus: Sequence[Signal], budget: int) -> Verdict:
        for u in corpus:
            for x in self._members(i, u, budget):
                if not self.delays.stable(u, x):
                    return self._report("dc axiom", i, Verdict.fails({"u": u, "x": x}))
        return self._report("dc axiom", i, Verdict.holds())
