from delaylab.core.delays.descriptors import (
    IDENT,
    SOL_SC,
    STARTUP,
    DelayCondition,
    Ident,
    Join,
    Meet,
    MeetFam,
    MeetSet,
    Pure,
    Selected,
    Serial,
    SolSC,
    StartupMask,
    UserPredicate,
    WindowAll,
    WindowAny,
    capabilities,
    is_deterministic,
    is_enumerable,
    join,
    lookahead,
    meet,
    meet_fam,
    meet_set,
    pure,
    serial,
)
from delaylab.core.delays.engine import DelayEngine
from delaylab.core.delays.metrics import stable, transmission_delay

__all__ = [
    "IDENT",
    "SOL_SC",
    "STARTUP",
    "DelayCondition",
    "DelayEngine",
    "Ident",
    "Join",
    "Meet",
    "MeetFam",
    "MeetSet",
    "Pure",
    "Selected",
    "Serial",
    "SolSC",
    "StartupMask",
    "UserPredicate",
    "WindowAll",
    "WindowAny",
    "capabilities",
    "is_deterministic",
    "is_enumerable",
    "join",
    "lookahead",
    "meet",
    "meet_fam",
    "meet_set",
    "pure",
    "serial",
    "stable",
    "transmission_delay",
]
