"""
Pydantic models for the property lab and the theorem report.
"""
import json
from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from delaylab.core.signal.intervals import IntervalSet
from delaylab.core.signal.utils import as_time
from delaylab.schemas.verdicts import Verdict, VerdictStatus


class CorpusConfig(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    seed: int = 42
    count: int = 60
    max_edges: int = 4
    horizon: Fraction = Fraction(10)
    time_grid_denominator: int = 2

    @field_validator("horizon", mode="before")
    @classmethod
    def coerce_horizon(cls, v):
        return as_time(v)

    @model_validator(mode="after")
    def check_ranges(self):
        if self.count < 0 or self.max_edges < 0:
            raise ValueError("count and max_edges must be >= 0")
        if self.horizon < 0:
            raise ValueError("horizon must be >= 0")
        if self.time_grid_denominator <= 0:
            raise ValueError("time_grid_denominator must be positive")
        return self


class ConstancyWitness(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    feasible_dr: IntervalSet
    feasible_df: IntervalSet

    @property
    def is_constant(self) -> bool:
        return not (self.feasible_dr.is_empty() or self.feasible_df.is_empty())

    def admits(self, d_r, d_f) -> bool:
        return self.feasible_dr.contains(d_r) and self.feasible_df.contains(d_f)


class LawResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    name: str
    expected: VerdictStatus = VerdictStatus.holds
    verdict: Verdict

    @property
    def passed(self) -> bool:
        return self.verdict.status is self.expected

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        suffix = "" if self.expected is VerdictStatus.holds else f" (expected {self.expected.value})"
        return f"{mark} {self.name}: {self.verdict}{suffix}"

    def record(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected.value,
            "verdict": self.verdict.status.value,
            "passed": self.passed,
            "counterexample": self.verdict.rendered_counterexample(),
            "detail": self.verdict.detail,
        }


class TheoremReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    seed: int
    corpus_size: int
    laws: Tuple[LawResult, ...]

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws)

    def failures(self) -> List[LawResult]:
        return [law for law in self.laws if not law.passed]

    def to_text(self) -> str:
        lines = [law.line() for law in self.laws]
        lines.append(
            f"{len(self.laws) - len(self.failures())}/{len(self.laws)} laws as expected "
            f"(seed {self.seed}, corpus {self.corpus_size}; holds means no counterexample found)"
        )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "seed": self.seed,
            "corpus_size": self.corpus_size,
            "passed": self.passed,
            "laws": [law.record() for law in self.laws],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def find_law(report: TheoremReport, name: str) -> Optional[LawResult]:
    return next((law for law in report.laws if law.name == name), None)
