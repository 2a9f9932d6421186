"""
Parsed G-code program: lines of words with their source line numbers.
"""

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple


@dataclass(frozen=True)
class Word:
    letter: str
    value: float


@dataclass(frozen=True)
class GLine:
    number: int  # 1-based source line
    words: Tuple[Word, ...] = ()
    comment: Optional[str] = None

    def value(self, letter: str) -> Optional[float]:
        for word in self.words:
            if word.letter == letter:
                return word.value
        return None

    @property
    def command(self) -> Optional[str]:
        """``G0``/``M64``-style command word, None for modal or comment-only lines."""
        for word in self.words:
            if word.letter in "GM":
                return f"{word.letter}{int(word.value)}"
        return None

    @property
    def empty(self) -> bool:
        return not self.words


@dataclass(frozen=True)
class GProgram:
    lines: Tuple[GLine, ...]
    text: str

    def __iter__(self) -> Iterator[GLine]:
        return iter(self.lines)

    def __len__(self) -> int:
        return len(self.lines)
