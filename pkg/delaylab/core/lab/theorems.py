"""
Executable laws of the delay-condition algebra.

Each law runs the checkers over a seeded corpus and is reported with the
verdict it is expected to reach. Some laws are expected to fail: they
reproduce known counterexamples (Sol_SC is neither deterministic nor time
invariant, window_all is not symmetric, a meet does not distribute over a
serial connection).
"""
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from delaylab.config import Config
from delaylab.core.delays.descriptors import (
    IDENT,
    SOL_SC,
    STARTUP,
    DelayCondition,
    WindowAll,
    WindowAny,
    join,
    meet,
    meet_set,
    pure,
    serial,
)
from delaylab.core.lab.corpus import generate_corpus
from delaylab.core.lab.engine import PropertyEngine
from delaylab.core.signal import operations as ops
from delaylab.core.signal.intervals import IntervalSet
from delaylab.core.signal.signal import Signal, sig
from delaylab.core.signal.utils import as_time
from delaylab.schemas.lab import CorpusConfig, LawResult, TheoremReport
from delaylab.schemas.verdicts import Verdict, VerdictStatus
from delaylab.utils.logger import logger

Thunk = Callable[[], Verdict]

P = pure


def first_failure(checks: Iterable[Thunk]) -> Verdict:
    """Run checks lazily; the first ``fails`` wins, then the first ``unknown``."""
    pending: Optional[Verdict] = None
    for check in checks:
        verdict = check()
        if verdict.is_fails:
            return verdict
        if verdict.is_unknown and pending is None:
            pending = verdict
    return pending or Verdict.holds()


def first_edge_at_least(bound: Fraction) -> Callable[[Signal], bool]:
    return lambda x: x.is_constant or x.edges[0] >= bound


def _sample_times(u: Signal, out: Signal, d: Fraction, m: Fraction) -> List[Fraction]:
    marks = set(out.edges)
    for e in u.edges:
        marks.update((e, e + d, e + d - m))
    marks = sorted(marks) or [Fraction(0)]
    points = set(marks)
    points.update((a + b) / 2 for a, b in zip(marks, marks[1:]))
    points.update((marks[0] - 1, marks[-1] + 1))
    return sorted(points)


class TheoremSuite:
    def __init__(self, engine: PropertyEngine, corpus: Sequence[Signal], settings: Dict[str, Any]):
        self.engine = engine
        self.delays = engine.delays
        self.corpus = list(corpus)
        self.budget = int(settings.get("budget", Config.DEFAULT_BUDGET))
        self.window_grid = [(as_time(d), as_time(m)) for d, m in settings.get("window_grid", [])]
        self.shifts = [as_time(d) for d in settings.get("shifts", [])]

    # Finite non-deterministic conditions with complete enumerations
    JOIN_12 = join(P(1), P(2))
    JOIN_23 = join(P(2), P(3))
    JOIN_02 = join(P(0), P(2))

    def laws(self) -> List[Tuple[str, VerdictStatus, Thunk]]:
        holds, fails = VerdictStatus.holds, VerdictStatus.fails
        return [
            ("closure.dc_axiom", holds, self.closure_dc_axiom),
            ("closure.determinism", holds, self.closure_determinism),
            ("closure.symmetry", holds, self.closure_symmetry),
            ("closure.time_invariance", holds, self.closure_time_invariance),
            ("constancy.inheritance", holds, self.constancy_inheritance),
            ("join.preserves_properties", holds, self.join_preserves),
            ("meet.deterministic_operand", holds, self.meet_deterministic_operand),
            ("meet.inclusion", holds, self.meet_inclusion),
            ("meet.preserves_properties", holds, self.meet_preserves),
            ("order.reflexive", holds, self.order_reflexive),
            ("order.selection_included", holds, self.order_selection_included),
            ("order.solsc_universal", holds, self.order_solsc_universal),
            ("order.transitive", holds, self.order_transitive),
            ("pure.composition", holds, self.pure_composition),
            ("pure.properties", holds, self.pure_properties),
            ("serial.associativity", holds, self.serial_associativity),
            ("serial.distributivity", holds, self.serial_distributivity),
            ("serial.meet_inclusion", holds, self.serial_meet_inclusion),
            ("serial.meet_strictness", fails, self.serial_meet_strictness),
            ("serial.meet_with_set", holds, self.serial_meet_with_set),
            ("serial.monotonicity", holds, self.serial_monotonicity),
            ("serial.unit", holds, self.serial_unit),
            ("solsc.nondeterminism", fails, self.solsc_nondeterminism),
            ("solsc.symmetry", holds, self.solsc_symmetry),
            ("solsc.time_variance", fails, self.solsc_time_variance),
            ("window.duality", holds, self.window_duality),
            ("window.oracle_equivalence", holds, self.window_oracle),
            ("window_all.asymmetry", fails, self.window_all_asymmetry),
            ("window_all.constancy", holds, lambda: self.window_constancy(WindowAll)),
            ("window_all.determinism", holds, lambda: self.window_determinism(WindowAll)),
            ("window_all.time_invariance", holds, lambda: self.window_time_invariance(WindowAll)),
            ("window_any.constancy", holds, lambda: self.window_constancy(WindowAny)),
            ("window_any.determinism", holds, lambda: self.window_determinism(WindowAny)),
            ("window_any.time_invariance", holds, lambda: self.window_time_invariance(WindowAny)),
        ]

    # ------------------------------------------------------------------
    # Helpers
    # ------------------------------------------------------------------
    def _members(self, dc: DelayCondition, u: Signal) -> frozenset:
        return frozenset(self.delays.enumerate(dc, u, self.budget))

    def _same_members(self, left: DelayCondition, right: DelayCondition) -> Verdict:
        for u in self.corpus:
            a, b = self._members(left, u), self._members(right, u)
            if a != b:
                x = min(a ^ b, key=Signal.sort_key)
                return Verdict.fails({"u": u, "x": x}, f"{left} and {right} differ")
        return Verdict.holds()

    def _includes(self, small: DelayCondition, large: DelayCondition, corpus=None) -> Thunk:
        return lambda: self.engine.check_inclusion(small, large, corpus or self.corpus, self.budget)

    def _windows(self, kind) -> List[DelayCondition]:
        return [kind(d, m) for d, m in self.window_grid]

    # ------------------------------------------------------------------
    # Windowed delays
    # ------------------------------------------------------------------
    def window_oracle(self) -> Verdict:
        for u in self.corpus:
            for d, m in self.window_grid:
                for name, op, reduce in (("window_all", ops.window_all, ops.all_over),
                                         ("window_any", ops.window_any, ops.any_over)):
                    out = op(u, d, m)
                    for t in _sample_times(u, out, d, m):
                        expected = reduce(u, IntervalSet.closed(t - d, t - d + m))
                        if out.at(t) != expected:
                            return Verdict.fails(
                                {"u": u, "d": d, "m": m, "t": t}, f"{name} disagrees with its definition"
                            )
        return Verdict.holds()

    def window_duality(self) -> Verdict:
        for u in self.corpus:
            for d, m in self.window_grid:
                if ops.negate(ops.window_all(u, d, m)) != ops.window_any(ops.negate(u), d, m):
                    return Verdict.fails({"u": u, "d": d, "m": m})
        return Verdict.holds()

    def window_determinism(self, kind) -> Verdict:
        return first_failure(
            (lambda dc=dc: self.engine.check_determinism(dc, self.corpus, self.budget))
            for dc in self._windows(kind)
        )

    def window_time_invariance(self, kind) -> Verdict:
        return first_failure(
            (lambda dc=dc: self.engine.check_time_invariance(dc, self.corpus, self.shifts, self.budget))
            for dc in self._windows(kind)
        )

    def window_constancy(self, kind) -> Verdict:
        def witness(dc):
            # window_all anticipates rises by d and falls by d - m; window_any the reverse
            if kind is WindowAll:
                return dc.d, dc.d - dc.m
            return dc.d - dc.m, dc.d

        return first_failure(
            (
                lambda dc=dc: self.engine.check_constancy_inequalities(
                    dc, self.corpus, *witness(dc), self.budget
                )
            )
            for dc in self._windows(kind)
        )

    def window_all_asymmetry(self) -> Verdict:
        return self.engine.check_symmetry(WindowAll(2, 2), [sig(0, 2, 3)], self.budget)

    # ------------------------------------------------------------------
    # Pure delays and Sol_SC
    # ------------------------------------------------------------------
    def pure_composition(self) -> Verdict:
        pairs = [(Fraction(0), Fraction(0)), (Fraction(2), Fraction(3)), (Fraction(1, 2), Fraction(3, 2))]
        for u in self.corpus:
            for a, b in pairs:
                if self.delays.apply(serial(P(a), P(b)), u) != self.delays.apply(P(a + b), u):
                    return Verdict.fails({"u": u, "a": a, "b": b})
        return Verdict.holds()

    def pure_properties(self) -> Verdict:
        dc = P(3)
        return first_failure([
            lambda: self.engine.check_determinism(dc, self.corpus, self.budget),
            lambda: self.engine.check_time_invariance(dc, self.corpus, self.shifts, self.budget),
            lambda: self.engine.check_symmetry(dc, self.corpus, self.budget),
        ])

    def solsc_nondeterminism(self) -> Verdict:
        return self.engine.check_determinism(SOL_SC, self.corpus, self.budget)

    def solsc_time_variance(self) -> Verdict:
        return self.engine.check_time_invariance(SOL_SC, [sig(1)], [-2], self.budget)

    def solsc_symmetry(self) -> Verdict:
        return self.engine.check_symmetry(SOL_SC, self.corpus, self.budget)

    # ------------------------------------------------------------------
    # Order
    # ------------------------------------------------------------------
    def _builtins(self) -> List[DelayCondition]:
        return [
            IDENT,
            P(2),
            STARTUP,
            SOL_SC,
            WindowAll(2, 1),
            WindowAny(2, 1),
            self.JOIN_12,
            serial(self.JOIN_12, STARTUP),
        ]

    def order_solsc_universal(self) -> Verdict:
        return first_failure(self._includes(dc, SOL_SC) for dc in self._builtins())

    def order_reflexive(self) -> Verdict:
        return first_failure(self._includes(dc, dc) for dc in self._builtins())

    def order_transitive(self) -> Verdict:
        chain = [P(2), self.JOIN_12, SOL_SC]
        return first_failure([
            self._includes(chain[0], chain[1]),
            self._includes(chain[1], chain[2]),
            self._includes(chain[0], chain[2]),
        ])

    def order_selection_included(self) -> Verdict:
        checks = []
        for j in (SOL_SC, STARTUP, self.JOIN_12):
            selected = self.delays.select_deterministic(j)
            checks.append(lambda s=selected: self.engine.check_determinism(s, self.corpus, self.budget))
            checks.append(self._includes(selected, j))
        return first_failure(checks)

    # ------------------------------------------------------------------
    # Meet and join
    # ------------------------------------------------------------------
    def meet_inclusion(self) -> Verdict:
        both = meet(self.JOIN_12, self.JOIN_23)
        return first_failure([self._includes(both, self.JOIN_12), self._includes(both, self.JOIN_23)])

    def meet_deterministic_operand(self) -> Verdict:
        dc = meet(P(2), SOL_SC)

        def agrees_with_shift() -> Verdict:
            for u in self.corpus:
                if self.delays.apply(dc, u) != ops.translate(u, 2):
                    return Verdict.fails({"u": u})
            return Verdict.holds()

        return first_failure(
            [lambda: self.engine.check_determinism(dc, self.corpus, self.budget), agrees_with_shift]
        )

    def _preserves(self, dc: DelayCondition) -> Verdict:
        return first_failure([
            lambda: self.engine.check_time_invariance(dc, self.corpus, self.shifts, self.budget),
            lambda: self.engine.check_symmetry(dc, self.corpus, self.budget),
        ])

    def join_preserves(self) -> Verdict:
        time_invariant = join(P(1), WindowAll(2, 1))
        symmetric = join(P(1), SOL_SC)
        return first_failure([
            lambda: self.engine.check_time_invariance(time_invariant, self.corpus, self.shifts, self.budget),
            lambda: self.engine.check_symmetry(symmetric, self.corpus, self.budget),
        ])

    def meet_preserves(self) -> Verdict:
        return self._preserves(meet(self.JOIN_12, self.JOIN_23))

    # ------------------------------------------------------------------
    # Serial connection
    # ------------------------------------------------------------------
    def serial_unit(self) -> Verdict:
        def unit(dc: DelayCondition) -> Verdict:
            for k, u in enumerate(self.corpus):
                for x in self.engine.candidates(dc, self.corpus, k, self.budget):
                    plain = self.delays.decide(dc, u, x)
                    if self.delays.decide(serial(dc, IDENT), u, x) is not plain:
                        return Verdict.fails({"u": u, "x": x}, f"{dc} o ident")
                    if self.delays.decide(serial(IDENT, dc), u, x) is not plain:
                        return Verdict.fails({"u": u, "x": x}, f"ident o {dc}")
            return Verdict.holds()

        return first_failure((lambda dc=dc: unit(dc)) for dc in (P(2), SOL_SC, STARTUP, self.JOIN_12))

    def serial_associativity(self) -> Verdict:
        i, j, k = self.JOIN_12, self.JOIN_23, self.JOIN_02
        return self._same_members(serial(serial(i, j), k), serial(i, serial(j, k)))

    def serial_distributivity(self) -> Verdict:
        i, j, k = self.JOIN_12, self.JOIN_23, self.JOIN_02
        return first_failure([
            lambda: self._same_members(serial(join(i, j), k), join(serial(i, k), serial(j, k))),
            lambda: self._same_members(serial(k, join(i, j)), join(serial(k, i), serial(k, j))),
        ])

    def serial_meet_with_set(self) -> Verdict:
        i, j = self.JOIN_12, self.JOIN_02
        late = first_edge_at_least(Fraction(2))
        return first_failure([
            lambda: self._same_members(
                serial(meet_set(i, late, "late"), j), meet_set(serial(i, j), late, "late")
            ),
            self._includes(serial(i, meet_set(self.JOIN_23, late, "late")), serial(i, self.JOIN_23)),
        ])

    def serial_meet_inclusion(self) -> Verdict:
        i, j, k = self.JOIN_12, self.JOIN_23, self.JOIN_02
        return first_failure([
            self._includes(serial(meet(i, j), k), meet(serial(i, k), serial(j, k))),
            self._includes(serial(i, meet(j, k)), meet(serial(i, j), serial(i, k))),
        ])

    def serial_meet_strictness(self) -> Verdict:
        i, j, k = join(P(0), P(2)), join(P(0), P(1)), join(P(0), P(1))
        small, large = meet(serial(i, k), serial(j, k)), serial(meet(i, j), k)
        return self.engine.check_inclusion(small, large, self.corpus, self.budget)

    def serial_monotonicity(self) -> Verdict:
        i, j, k = P(2), self.JOIN_12, self.JOIN_02
        return first_failure([
            self._includes(i, j),
            self._includes(serial(i, k), serial(j, k)),
            self._includes(serial(k, i), serial(k, j)),
        ])

    # ------------------------------------------------------------------
    # Closure of the serial connection
    # ------------------------------------------------------------------
    def closure_dc_axiom(self) -> Verdict:
        pairs = [(SOL_SC, STARTUP), (STARTUP, SOL_SC), (WindowAll(2, 1), STARTUP), (self.JOIN_12, SOL_SC)]
        return first_failure(
            (lambda a=a, b=b: self.engine.check_dc_axiom(serial(a, b), self.corpus, self.budget))
            for a, b in pairs
        )

    def closure_determinism(self) -> Verdict:
        dcs = [serial(WindowAll(2, 1), P(1)), serial(WindowAny(3, 1), WindowAll(1, 1))]
        return first_failure(
            (lambda dc=dc: self.engine.check_determinism(dc, self.corpus, self.budget)) for dc in dcs
        )

    def closure_time_invariance(self) -> Verdict:
        dcs = [serial(WindowAny(2, 1), P(Fraction(3, 2))), serial(self.JOIN_12, self.JOIN_02)]
        return first_failure(
            (lambda dc=dc: self.engine.check_time_invariance(dc, self.corpus, self.shifts, self.budget))
            for dc in dcs
        )

    def closure_symmetry(self) -> Verdict:
        dcs = [serial(P(1), P(2)), serial(SOL_SC, P(1)), serial(self.JOIN_12, P(1))]
        return first_failure(
            (lambda dc=dc: self.engine.check_symmetry(dc, self.corpus, self.budget)) for dc in dcs
        )

    def constancy_inheritance(self) -> Verdict:
        # both operands admit (d_r, d_f) = (2, 1)
        constant = join(WindowAll(2, 1), WindowAll(3, 2))
        included = [WindowAll(3, 2), meet(constant, SOL_SC), self.delays.select_deterministic(constant)]
        checks = [lambda: self.engine.check_constancy(constant, self.corpus, self.budget)]
        for dc in included:
            checks.append(self._includes(dc, constant))
            checks.append(lambda dc=dc: self.engine.check_constancy(dc, self.corpus, self.budget))
        return first_failure(checks)

    # ------------------------------------------------------------------
    def run(self, seed: int) -> TheoremReport:
        self.delays.clear_caches()
        results = []
        for name, expected, check in sorted(self.laws(), key=lambda law: law[0]):
            verdict = check()
            result = LawResult(name=name, expected=expected, verdict=verdict)
            log = logger.bind(law=name)
            if result.passed:
                log.debug(f"{name}: {verdict.status.value}")
            else:
                log.warning(f"{name}: expected {expected.value}, got {verdict}")
            results.append(result)
        return TheoremReport(seed=seed, corpus_size=len(self.corpus), laws=tuple(results))


def load_suite_settings() -> Dict[str, Any]:
    lab = Config.load_yaml("lab")
    return {"suite": lab.get("suite", {}), "corpus": lab.get("corpus", {})}


def run_theorem_suite(
    seed: int,
    engine: Optional[PropertyEngine] = None,
    settings: Optional[Dict[str, Any]] = None,
) -> TheoremReport:
    settings = settings or load_suite_settings()
    suite_cfg = dict(settings.get("suite", {}))
    corpus_cfg = dict(settings.get("corpus", {}))
    corpus_cfg.update(seed=seed, count=suite_cfg.get("corpus_count", corpus_cfg.get("count", 60)))
    corpus = generate_corpus(CorpusConfig(**corpus_cfg))

    logger.info(f"Running theorem suite (seed={seed}, corpus={len(corpus)})")
    report = TheoremSuite(engine or PropertyEngine(), corpus, suite_cfg).run(seed)
    as_expected = len(report.laws) - len(report.failures())
    logger.info(f"Theorem suite finished: {as_expected}/{len(report.laws)} as expected")
    return report
