"""
VCD export with exact integer timestamps.

VCD time is integral, so every time is multiplied by the least common
multiple of all edge denominators. The factor is written to the header
comment.
"""
import math
from typing import Iterable, List, Mapping, Tuple

from vcd import VCDWriter

from delaylab.core.signal.signal import Signal
from delaylab.formats.utils import PathLike, atomic_open
from delaylab.utils.logger import logger

TIMESCALE = "1 ns"
SCOPE = "delaylab"


def time_scale(signals: Iterable[Signal]) -> int:
    return math.lcm(1, *(e.denominator for s in signals for e in s.edges))


def value_changes(signals: Mapping[str, Signal], scale: int) -> List[Tuple[int, str, int]]:
    """(scaled time, name, value) in time order."""
    changes = []
    for name, s in signals.items():
        value = int(s.initial)
        for e in s.edges:
            value ^= 1
            changes.append((int(e * scale), name, value))
    return sorted(changes)


def export_vcd(signals: Mapping[str, Signal], path: PathLike) -> int:
    """Write ``signals`` as a VCD file; return the time scale used."""
    scale = time_scale(signals.values())
    comment = f"time scale {scale}: timestamp = time * {scale}"
    with atomic_open(path) as handle:
        with VCDWriter(handle, timescale=TIMESCALE, comment=comment) as writer:
            variables = {
                name: writer.register_var(SCOPE, name, "wire", size=1, init=int(s.initial))
                for name, s in signals.items()
            }
            for timestamp, name, value in value_changes(signals, scale):
                writer.change(variables[name], timestamp, value)
    logger.info(f"Wrote {len(signals)} signals to {path} (scale {scale})")
    return scale

