"""
Toolpath actions in machine coordinates.
"""

import math
from dataclasses import dataclass
from typing import Iterator, List, Tuple, Union

Coord3 = Tuple[float, float, float]


@dataclass(frozen=True)
class Rapid:
    to: Coord3


@dataclass(frozen=True)
class Move:
    to: Coord3
    feed: float


@dataclass(frozen=True)
class ToolSelect:
    tool: str


@dataclass(frozen=True)
class ChannelOn:
    channel: str


@dataclass(frozen=True)
class ChannelOff:
    channel: str


@dataclass(frozen=True)
class Dwell:
    ms: int


@dataclass(frozen=True)
class KnifeAngle:
    deg: float


ToolAction = Union[Rapid, Move, ToolSelect, ChannelOn, ChannelOff, Dwell, KnifeAngle]


def motion_time(start: Coord3, end: Coord3, feed: float) -> float:
    """Seconds to travel start -> end at ``feed`` mm/min."""
    return math.dist(start, end) / feed * 60.0


@dataclass(frozen=True)
class Toolpath:
    name: str
    actions: Tuple[ToolAction, ...]
    start: Coord3
    header: Tuple[str, ...] = ()
    weld_order: Tuple[int, ...] = ()
    # sheet cut indices in cutting order, -1 for the outline
    cut_order: Tuple[int, ...] = ()
    weld_feed: float = 0.0

    def motions(self) -> Iterator[Tuple[str, Coord3, float]]:
        """(tool, target, blade angle) for every Rapid and Move in order."""
        tool, angle = "", 0.0
        for action in self.actions:
            if isinstance(action, ToolSelect):
                tool = action.tool
            elif isinstance(action, KnifeAngle):
                angle = action.deg
            elif isinstance(action, (Rapid, Move)):
                yield tool, action.to, angle

    def channel_events(self) -> List[Tuple[str, bool]]:
        return [
            (a.channel, isinstance(a, ChannelOn))
            for a in self.actions
            if isinstance(a, (ChannelOn, ChannelOff))
        ]

    def first_cut_index(self) -> int:
        for i, action in enumerate(self.actions):
            if isinstance(action, ToolSelect) and action.tool == "cut":
                return i
        return len(self.actions)
