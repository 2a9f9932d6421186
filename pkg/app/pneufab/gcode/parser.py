"""
G-code parser for the emitted dialect subset.

Comments are parenthesised and may not nest. Each line holds at most one G or
M word; lines with only axis words reuse the modal G0/G1.
"""

import logging
import math
import re
from typing import List, Optional, Tuple

from pneufab.errors import GCodeError
from pneufab.gcode.constants import (
    DWELL,
    FEED,
    G_CODES,
    LETTERS,
    M_CODES,
    RAPID,
    SPINDLE_OFF,
    SPINDLE_ON,
)
from pneufab.gcode.program import GLine, GProgram, Word
from pneufab.toolpath.profile import MachineProfile

logger = logging.getLogger(__name__)

WORD_RE = re.compile(r"([A-Z])([-+]?(?:\d+(?:\.\d*)?|\.\d+))")
LETTER_RE = re.compile(r"[A-Z]")


def _split_comment(raw: str, number: int) -> Tuple[str, Optional[str]]:
    code, comment, depth = [], [], 0
    for column, ch in enumerate(raw, start=1):
        if ch == "(":
            if depth:
                raise GCodeError("E_GCODE_SYNTAX", "nested comment", number, column)
            depth = 1
        elif ch == ")":
            if not depth:
                raise GCodeError("E_GCODE_SYNTAX", "unbalanced ')'", number, column)
            depth = 0
        elif depth:
            comment.append(ch)
        else:
            code.append(ch)
    if depth:
        raise GCodeError("E_GCODE_SYNTAX", "unterminated comment", number)
    return "".join(code), ("".join(comment) if comment or "(" in raw else None)


def _tokenize(code: str, number: int) -> List[Word]:
    compact = "".join(code.split()).upper()
    words, pos = [], 0
    while pos < len(compact):
        match = WORD_RE.match(compact, pos)
        if match is None:
            if LETTER_RE.match(compact, pos) and compact[pos] not in LETTERS:
                raise GCodeError("E_UNSUPPORTED_WORD", f"word '{compact[pos]}' is not supported", number, pos + 1)
            raise GCodeError("E_GCODE_SYNTAX", f"cannot read '{compact[pos:pos + 12]}'", number, pos + 1)
        letter, value = match.group(1), float(match.group(2))
        if letter not in LETTERS:
            raise GCodeError("E_UNSUPPORTED_WORD", f"word '{letter}' is not supported", number, pos + 1)
        if not math.isfinite(value):
            raise GCodeError("E_GCODE_SYNTAX", f"number out of range in '{match.group(0)}'", number, pos + 1)
        words.append(Word(letter, value))
        pos = match.end()
    return words


def _check_line(words: List[Word], number: int, m_codes: Tuple[int, ...], io_codes: Tuple[int, ...]) -> None:
    letters = [w.letter for w in words]
    duplicated = sorted({l for l in letters if letters.count(l) > 1})
    if duplicated:
        raise GCodeError("E_GCODE_SYNTAX", f"repeated word {duplicated[0]}", number)
    commands = [w for w in words if w.letter in "GM"]
    if len(commands) > 1:
        raise GCodeError("E_GCODE_SYNTAX", "more than one G/M word on a line", number)

    command = commands[0] if commands else None
    if command is not None:
        code = command.value
        allowed = G_CODES if command.letter == "G" else m_codes
        if code != int(code) or int(code) not in allowed:
            raise GCodeError("E_UNSUPPORTED_WORD", f"{command.letter}{code:g} is not supported", number)

    is_motion = command is None or (command.letter == "G" and command.value in (RAPID, FEED))
    for word in words:
        if word.letter in "XYZAF" and not is_motion:
            raise GCodeError("E_GCODE_SYNTAX", f"{word.letter} word outside a motion line", number)
        if word.letter == "F" and word.value <= 0:
            raise GCodeError("E_GCODE_SYNTAX", "feed must be > 0", number)

    p = next((w.value for w in words if w.letter == "P"), None)
    needs_p = command is not None and (
        (command.letter == "G" and command.value == DWELL)
        or (command.letter == "M" and command.value in io_codes)
    )
    if needs_p and p is None:
        raise GCodeError("E_GCODE_SYNTAX", f"{command.letter}{int(command.value)} needs a P word", number)
    if p is not None:
        if not needs_p:
            raise GCodeError("E_GCODE_SYNTAX", "P word without G4 or an output M-code", number)
        if p < 0 or (command.letter == "M" and p != int(p)):
            raise GCodeError("E_GCODE_SYNTAX", f"bad P value {p:g}", number)


def parse_gcode(text: str, profile: Optional[MachineProfile] = None) -> GProgram:
    """Parse ``text`` into a GProgram.

    Raises:
        GCodeError: E_GCODE_SYNTAX (with line) or E_UNSUPPORTED_WORD.
    """
    profile = profile or MachineProfile()
    io_codes = (profile.output_on, profile.output_off)
    m_codes = tuple(sorted(set(M_CODES) | set(io_codes)))
    lines = []
    for number, raw in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        code, comment = _split_comment(raw, number)
        words = _tokenize(code, number)
        if words:
            _check_line(words, number, m_codes, io_codes)
        if words or comment is not None:
            lines.append(GLine(number, tuple(words), comment))
    logger.debug(f"Parsed {len(lines)} G-code lines (M-codes {', '.join(map(str, m_codes))}, "
                 f"spindle M{SPINDLE_ON}/M{SPINDLE_OFF})")
    return GProgram(tuple(lines), text)
