"""
Signal algebra package initialization.
"""
from delaylab.core.signal.enum import Bit, BoolOp
from delaylab.core.signal.intervals import Interval, IntervalSet
from delaylab.core.signal.signal import ONE, ZERO, Signal, sig
from delaylab.core.signal.utils import as_time, format_time

__all__ = [
    "Bit",
    "BoolOp",
    "Interval",
    "IntervalSet",
    "ONE",
    "ZERO",
    "Signal",
    "sig",
    "as_time",
    "format_time",
]
