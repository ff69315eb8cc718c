"""
Parser for delay-condition expressions.

    expr   := 'ident' | 'startup' | 'solsc'
            | 'pure' '(' time ')'
            | ('window_all' | 'window_any') '(' time ',' time ')'
            | ('meet' | 'join' | 'serial') '(' expr ',' expr ')'
            | 'select' '(' expr ')'
    time   := integer | integer '/' integer

``str(dc)`` of every parsed descriptor parses back to an equal descriptor.
"""
import re
from typing import Callable, Dict, Optional, Tuple

from delaylab.core.delays.descriptors import (
    IDENT,
    SOL_SC,
    STARTUP,
    DelayCondition,
    Pure,
    Selected,
    WindowAll,
    WindowAny,
    join,
    meet,
    serial,
)
from delaylab.core.signal.utils import as_time
from delaylab.exceptions import DCSyntaxError, InvalidDelay

LEXEME = re.compile(r"\s*(?:(?P<time>-?\d+(?:/\d+)?)|(?P<word>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[(),]))")

Token = Tuple[str, str, int]  # kind, text, 0-based offset

CONSTANTS: Dict[str, DelayCondition] = {"ident": IDENT, "startup": STARTUP, "solsc": SOL_SC}
BINARY: Dict[str, Callable[[DelayCondition, DelayCondition], DelayCondition]] = {
    "meet": meet,
    "join": join,
    "serial": serial,
}
WINDOWS = {"window_all": WindowAll, "window_any": WindowAny}


class _Parser:
    def __init__(self, text: str, line: Optional[int], offset: int):
        self.text = text
        self.line = line
        self.offset = offset
        self.pos = 0

    def error(self, message: str, at: Optional[int] = None) -> DCSyntaxError:
        at = self.pos if at is None else at
        return DCSyntaxError(message, self.line, self.offset + at + 1)

    def next(self) -> Token:
        m = LEXEME.match(self.text, self.pos)
        if not m:
            rest = self.text[self.pos:].lstrip()
            at = len(self.text) - len(rest)
            if not rest:
                raise self.error("unexpected end of expression", at)
            raise self.error(f"unexpected character '{rest[0]}'", at)
        self.pos = m.end()
        kind = m.lastgroup
        return kind, m.group(kind), m.start(kind)

    def expect(self, punct: str) -> None:
        kind, text, at = self.next()
        if text != punct:
            raise self.error(f"expected '{punct}', got '{text}'", at)

    def time(self):
        kind, text, at = self.next()
        if kind != "time":
            raise self.error(f"expected a time, got '{text}'", at)
        try:
            return as_time(text)
        except ValueError as e:
            raise self.error(str(e), at) from None

    def expr(self) -> DelayCondition:
        kind, word, at = self.next()
        if kind != "word":
            raise self.error(f"expected a delay condition, got '{word}'", at)
        try:
            if word in CONSTANTS:
                return CONSTANTS[word]
            self.expect("(")
            if word == "pure":
                result = Pure(self.time())
            elif word in WINDOWS:
                d = self.time()
                self.expect(",")
                result = WINDOWS[word](d, self.time())
            elif word in BINARY:
                left = self.expr()
                self.expect(",")
                result = BINARY[word](left, self.expr())
            elif word == "select":
                result = Selected(self.expr())
            else:
                raise self.error(f"unknown delay condition '{word}'", at)
            self.expect(")")
            return result
        except InvalidDelay as e:
            raise self.error(e.message, at) from None


def parse_dc_prefix(text: str, line: Optional[int] = None, offset: int = 0) -> Tuple[DelayCondition, int]:
    """Parse one expression at the start of ``text``; return it and the index after it."""
    parser = _Parser(text, line, offset)
    return parser.expr(), parser.pos


def parse_dc(text: str, line: Optional[int] = None, offset: int = 0) -> DelayCondition:
    dc, end = parse_dc_prefix(text, line, offset)
    rest = text[end:]
    if rest.strip():
        at = end + len(rest) - len(rest.lstrip())
        raise DCSyntaxError(f"unexpected trailing text '{rest.strip()}'", line, offset + at + 1)
    return dc

