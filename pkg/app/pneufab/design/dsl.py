"""
Line-oriented `[section]` / `key = value` grammar shared by design files,
material files and machine profiles.

    line    := blank | comment | section | entry
    section := "[" ident "]"
    entry   := ident "=" value ("," value)*
    value   := number | ident | quoted-string

`#` starts a comment anywhere outside a quoted string. Every diagnostic
carries the 1-based line and column.
"""

import math
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from pneufab.design.constants import ANGLE_SUFFIX, LENGTH_SUFFIX, MAX_ANGLE_DEG
from pneufab.errors import DesignError

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
NUMBER_RE = re.compile(r"-?[0-9]+(?:\.[0-9]+)?")
WHITESPACE = " \t"


@dataclass(frozen=True)
class Token:
    kind: str  # NUMBER, IDENT or STRING
    text: str
    column: int


@dataclass(frozen=True)
class Entry:
    key: str
    raw: str
    line: int
    values: Tuple[Token, ...]


@dataclass(frozen=True)
class Section:
    name: str
    line: int
    entries: Tuple[Entry, ...]

    def get(self, key: str) -> Optional[Entry]:
        for entry in self.entries:
            if entry.key == key:
                return entry
        return None

    def keys(self) -> List[str]:
        return [entry.key for entry in self.entries]


@dataclass(frozen=True)
class DesignDocument:
    sections: Tuple[Section, ...] = field(default_factory=tuple)

    def section(self, name: str) -> Optional[Section]:
        for section in self.sections:
            if section.name == name:
                return section
        return None

    def names(self) -> List[str]:
        return [section.name for section in self.sections]


class _LineScanner:
    """Cursor over one source line."""

    def __init__(self, text: str, line: int):
        self.text = text
        self.line = line
        self.pos = 0

    @property
    def column(self) -> int:
        return self.pos + 1

    def error(self, message: str) -> DesignError:
        return DesignError("E_SYNTAX", message, self.line, self.column)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in WHITESPACE:
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text) or self.text[self.pos] == "#"

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = repr(self.peek()) if self.peek() else "end of line"
            raise self.error(f"expected '{char}', found {found}")
        self.pos += 1

    def ident(self) -> str:
        match = IDENT_RE.match(self.text, self.pos)
        if not match:
            raise self.error("expected identifier")
        self.pos = match.end()
        return match.group(0)

    def finish(self) -> None:
        self.skip_ws()
        if not self.at_end():
            raise self.error(f"unexpected {self.peek()!r}")

    def value(self) -> Token:
        column = self.column
        char = self.peek()
        if char == '"':
            return Token("STRING", self._string(), column)
        if char == "-" or char.isdigit():
            match = NUMBER_RE.match(self.text, self.pos)
            if not match:
                raise self.error("malformed number")
            self.pos = match.end()
            self._expect_delimiter()
            return Token("NUMBER", match.group(0), column)
        if IDENT_RE.match(self.text, self.pos):
            text = self.ident()
            self._expect_delimiter()
            return Token("IDENT", text, column)
        if not char or char == "#":
            raise self.error("missing value")
        raise self.error(f"unexpected {char!r}")

    def _expect_delimiter(self) -> None:
        char = self.peek()
        if char and char not in WHITESPACE + ",#":
            raise self.error(f"unexpected {char!r} after value")

    def _string(self) -> str:
        start_column = self.column
        self.pos += 1
        chars: List[str] = []
        while self.pos < len(self.text):
            char = self.text[self.pos]
            if char == '"':
                self.pos += 1
                self._expect_delimiter()
                return "".join(chars)
            if char == "\\":
                nxt = self.text[self.pos + 1] if self.pos + 1 < len(self.text) else ""
                if nxt not in ('"', "\\"):
                    raise self.error("unsupported escape sequence")
                chars.append(nxt)
                self.pos += 2
                continue
            chars.append(char)
            self.pos += 1
        raise DesignError("E_SYNTAX", "unterminated string", self.line, start_column)


def parse_design(text: str) -> DesignDocument:
    """Parse DSL text into a DesignDocument.

    Raises:
        DesignError: E_SYNTAX, E_DUP_SECTION or E_DUP_KEY with line numbers.
    """
    sections: List[Section] = []
    section_lines: Dict[str, int] = {}
    current_name: Optional[str] = None
    current_line = 0
    entries: List[Entry] = []
    key_lines: Dict[str, int] = {}

    def close_section() -> None:
        if current_name is not None:
            sections.append(Section(current_name, current_line, tuple(entries)))

    for lineno, line_text in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        scanner = _LineScanner(line_text, lineno)
        scanner.skip_ws()
        if scanner.at_end():
            continue

        if scanner.peek() == "[":
            scanner.pos += 1
            scanner.skip_ws()
            name = scanner.ident()
            scanner.skip_ws()
            scanner.expect("]")
            scanner.finish()
            if name in section_lines:
                raise DesignError(
                    "E_DUP_SECTION",
                    f"duplicate section [{name}] (first at line {section_lines[name]})",
                    lineno,
                )
            close_section()
            section_lines[name] = lineno
            current_name, current_line = name, lineno
            entries, key_lines = [], {}
            continue

        if current_name is None:
            raise scanner.error("entry before any [section] header")
        key = scanner.ident()
        scanner.skip_ws()
        scanner.expect("=")
        scanner.skip_ws()
        raw_start = scanner.pos
        values = [scanner.value()]
        raw_end = scanner.pos
        scanner.skip_ws()
        while scanner.peek() == ",":
            scanner.pos += 1
            scanner.skip_ws()
            values.append(scanner.value())
            raw_end = scanner.pos
            scanner.skip_ws()
        scanner.finish()
        if key in key_lines:
            raise DesignError(
                "E_DUP_KEY",
                f"duplicate key '{key}' in [{current_name}] (lines {key_lines[key]} and {lineno})",
                lineno,
            )
        key_lines[key] = lineno
        entries.append(Entry(key, line_text[raw_start:raw_end], lineno, tuple(values)))

    close_section()
    return DesignDocument(tuple(sections))


# ---------------------------------------------------------------------------
# Entry value helpers (design files, material files, machine profiles)
# ---------------------------------------------------------------------------

def single_value(entry: Entry):
    if len(entry.values) != 1:
        raise DesignError("E_BAD_VALUE", f"'{entry.key}' takes a single value", entry.line)
    return entry.values[0]


def number_value(entry: Entry) -> float:
    token = single_value(entry)
    if token.kind != "NUMBER":
        raise DesignError("E_BAD_VALUE", f"'{entry.key}' must be a number, got {token.text!r}", entry.line)
    value = float(token.text)
    if not math.isfinite(value):
        raise DesignError("E_BAD_VALUE", f"'{entry.key}' is out of range", entry.line)
    return value


def integer_value(entry: Entry) -> int:
    token = single_value(entry)
    if token.kind != "NUMBER" or "." in token.text:
        raise DesignError("E_BAD_VALUE", f"'{entry.key}' must be an integer, got {token.text!r}", entry.line)
    return int(token.text)


def text_value(entry: Entry) -> str:
    """Identifier or quoted string."""
    token = single_value(entry)
    if token.kind == "NUMBER":
        raise DesignError("E_BAD_VALUE", f"'{entry.key}' must be a name, got {token.text!r}", entry.line)
    return token.text


def ident_value(entry: Entry) -> str:
    token = single_value(entry)
    if token.kind != "IDENT":
        raise DesignError("E_BAD_VALUE", f"'{entry.key}' must be an identifier, got {token.text!r}", entry.line)
    return token.text


def unit_checked(entry: Entry) -> float:
    """Number with the unit rule implied by the key suffix."""
    value = number_value(entry)
    if entry.key.endswith(LENGTH_SUFFIX) and value <= 0:
        raise DesignError("E_BAD_VALUE", f"length '{entry.key}' must be > 0, got {value}", entry.line)
    if entry.key.endswith(ANGLE_SUFFIX) and not 0 <= value < MAX_ANGLE_DEG:
        raise DesignError("E_BAD_VALUE", f"angle '{entry.key}' must be in [0, 90), got {value}", entry.line)
    return value


def reject_unknown(section: Section, allowed) -> None:
    for entry in section.entries:
        if entry.key not in allowed:
            raise DesignError("E_UNKNOWN_KEY", f"unknown key '{entry.key}' in [{section.name}]", entry.line)


def require(section: Optional[Section], name: str) -> Section:
    if section is None:
        raise DesignError("E_MISSING_KEY", f"missing section [{name}]")
    return section


def require_entry(section: Section, key: str) -> Entry:
    entry = section.get(key)
    if entry is None:
        raise DesignError("E_MISSING_KEY", f"missing key '{key}' in [{section.name}]", section.line)
    return entry
