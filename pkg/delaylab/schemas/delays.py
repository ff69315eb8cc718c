from enum import Enum
from fractions import Fraction
from typing import List

from pydantic import BaseModel, ConfigDict, field_validator

from delaylab.core.signal.utils import as_time, format_time


class Classification(str, Enum):
    rising = "rising"
    falling = "falling"
    unclassified = "unclassified"


class TransmissionDelayReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    d: Fraction
    t1_star: Fraction
    t2_star: Fraction
    classification: Classification

    @field_validator("d", "t1_star", "t2_star", mode="before")
    @classmethod
    def coerce_time(cls, v):
        return as_time(v)

    @field_validator("d")
    @classmethod
    def non_negative(cls, v):
        if v < 0:
            raise ValueError("transmission delay must be >= 0")
        return v

    def __str__(self) -> str:
        return f"d = {format_time(self.d)} ({self.classification.value})"


class EnumerationPolicy(BaseModel):
    """How non-deterministic delay conditions sample their members."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    seed: int = 1729
    grid_denominator: int = 2
    horizon: Fraction = Fraction(12)
    settle_offsets: List[Fraction] = [Fraction(5), Fraction(1), Fraction(1, 2)]
    witness_budget: int = 24
    random_attempts: int = 64

    @field_validator("horizon", mode="before")
    @classmethod
    def coerce_horizon(cls, v):
        return as_time(v)

    @field_validator("settle_offsets", mode="before")
    @classmethod
    def coerce_offsets(cls, v):
        offsets = [as_time(x) for x in v]
        if any(x <= 0 for x in offsets):
            raise ValueError("settle offsets must be positive")
        return offsets

    @field_validator("grid_denominator", "witness_budget")
    @classmethod
    def positive(cls, v):
        if v <= 0:
            raise ValueError("must be positive")
        return v
