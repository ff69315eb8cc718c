"""
Three-valued results of membership queries and property checks.
"""
from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict

from delaylab.core.signal.utils import format_time


class VerdictStatus(str, Enum):
    holds = "holds"
    fails = "fails"
    unknown = "unknown"


def render_value(value: Any) -> Any:
    """Serialize counterexample values: signals and times as text."""
    from fractions import Fraction

    if isinstance(value, Fraction):
        return format_time(value)
    if isinstance(value, (list, tuple)):
        return [render_value(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


class Verdict(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    status: VerdictStatus
    counterexample: Optional[Dict[str, Any]] = None
    detail: Optional[str] = None

    @classmethod
    def holds(cls, detail: Optional[str] = None) -> "Verdict":
        return cls(status=VerdictStatus.holds, detail=detail)

    @classmethod
    def fails(cls, counterexample: Dict[str, Any], detail: Optional[str] = None) -> "Verdict":
        return cls(status=VerdictStatus.fails, counterexample=counterexample, detail=detail)

    @classmethod
    def unknown(cls, detail: Optional[str] = None) -> "Verdict":
        return cls(status=VerdictStatus.unknown, detail=detail)

    @property
    def is_holds(self) -> bool:
        return self.status is VerdictStatus.holds

    @property
    def is_fails(self) -> bool:
        return self.status is VerdictStatus.fails

    @property
    def is_unknown(self) -> bool:
        return self.status is VerdictStatus.unknown

    def rendered_counterexample(self) -> Optional[Dict[str, Any]]:
        if self.counterexample is None:
            return None
        return {k: render_value(v) for k, v in self.counterexample.items()}

    def __str__(self) -> str:
        text = self.status.value
        rendered = self.rendered_counterexample()
        if rendered:
            text += " [" + ", ".join(f"{k}={v}" for k, v in rendered.items()) + "]"
        if self.detail:
            text += f" ({self.detail})"
        return text
