"""
Wave files: one signal per line.

    # comment
    signal u 0 @ 2 5
    signal x 1 @ 3/2 7/2
    signal c 1

Times are integers or ``p/q`` rationals; decimals are rejected.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterator, Tuple

from delaylab.core.signal.signal import Signal
from delaylab.core.signal.utils import RATIONAL_PATTERN, as_time, format_time
from delaylab.exceptions import NonCanonicalEdges, WaveSyntaxError
from delaylab.formats.utils import PathLike, atomic_write, strip_comment, tokens


@dataclass(frozen=True)
class WaveFile:
    signals: Dict[str, Signal] = field(default_factory=dict)

    def __getitem__(self, name: str) -> Signal:
        try:
            return self.signals[name]
        except KeyError:
            raise WaveSyntaxError(f"no signal named '{name}'") from None

    def __contains__(self, name: str) -> bool:
        return name in self.signals

    def items(self) -> Iterator[Tuple[str, Signal]]:
        return iter(self.signals.items())


def parse_wavefile(text: str) -> WaveFile:
    signals: Dict[str, Signal] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = tokens(strip_comment(raw))
        if not parts:
            continue
        keyword, column = parts[0]
        if keyword != "signal":
            raise WaveSyntaxError(f"unknown directive '{keyword}'", lineno, column)
        if len(parts) < 3:
            raise WaveSyntaxError("expected 'signal <name> <initial> [@ <edges>]'", lineno, column)

        (name, name_col), (initial, init_col) = parts[1], parts[2]
        if name in signals:
            raise WaveSyntaxError(f"signal '{name}' defined twice", lineno, name_col)
        if initial not in ("0", "1"):
            raise WaveSyntaxError(f"initial value must be 0 or 1, got '{initial}'", lineno, init_col)

        rest = parts[3:]
        if rest:
            marker, marker_col = rest[0]
            if marker != "@":
                raise WaveSyntaxError(
                    f"expected '@' before the edge list, got '{marker}'", lineno, marker_col
                )
            rest = rest[1:]
        edges = []
        for token, col in rest:
            if not RATIONAL_PATTERN.match(token):
                raise WaveSyntaxError(f"'{token}' is not an integer or p/q rational", lineno, col)
            try:
                edge = as_time(token)
            except ValueError as e:
                raise WaveSyntaxError(str(e), lineno, col) from None
            if edge < 0:
                raise NonCanonicalEdges(f"edge {token} is negative", lineno, col)
            if edges and edge <= edges[-1]:
                previous = format_time(edges[-1])
                raise NonCanonicalEdges(
                    f"edges must be strictly increasing, got {previous} then {token}", lineno, col
                )
            edges.append(edge)
        signals[name] = Signal(int(initial), tuple(edges))
    return WaveFile(signals)


def format_signal_line(name: str, s: Signal) -> str:
    line = f"signal {name} {int(s.initial)}"
    if s.edges:
        line += " @ " + " ".join(format_time(e) for e in s.edges)
    return line


def print_wavefile(wave: WaveFile) -> str:
    return "".join(format_signal_line(name, s) + "\n" for name, s in wave.items())


def read_wavefile(path: PathLike) -> WaveFile:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_wavefile(handle.read())


def write_wavefile(wave: WaveFile, path: PathLike) -> None:
    atomic_write(path, print_wavefile(wave))
