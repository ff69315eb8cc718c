"""
Stability condition and transmission delays for transitions.

Signals here are eventually constant, so "u eventually a implies x
eventually a" reduces to equality of final values.
"""
from delaylab.core.signal.enum import Bit
from delaylab.core.signal.signal import Signal
from delaylab.exceptions import NotStable
from delaylab.schemas.delays import Classification, TransmissionDelayReport


def stable(u: Signal, x: Signal) -> Bit:
    return Bit(int(u.final_value == x.final_value))


def transmission_delay(u: Signal, x: Signal) -> TransmissionDelayReport:
    if not stable(u, x):
        raise NotStable(u, x)
    # settling times; 0 by definition for constants
    t1_star, t2_star = u.last_edge, x.last_edge
    d = max(t2_star - t1_star, 0)

    u_rises = bool(u.edges) and t1_star in u.rising_edges()
    u_falls = bool(u.edges) and t1_star in u.falling_edges()
    x_rises = bool(x.edges) and t2_star in x.rising_edges()
    x_falls = bool(x.edges) and t2_star in x.falling_edges()

    if u_rises and x_rises:
        classification = Classification.rising
    elif u_falls and x_falls:
        classification = Classification.falling
    else:
        classification = Classification.unclassified

    return TransmissionDelayReport(
        d=d, t1_star=t1_star, t2_star=t2_star, classification=classification
    )
