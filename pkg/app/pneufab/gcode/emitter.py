"""
Toolpath -> G-code text.

Output is byte-deterministic: fixed word order, 3-decimal coordinates, F only
when the feed changes, LF line endings.
"""

import logging
from typing import List, Optional, Tuple

from pneufab.design.typed import format_number
from pneufab.gcode.constants import (
    ABSOLUTE,
    AXES,
    COORD_DECIMALS,
    DWELL,
    DWELL_DECIMALS,
    FEED,
    MILLIMETRES,
    PROGRAM_COMMENT_PREFIX,
    PROGRAM_END,
    RAPID,
    SPINDLE_OFF,
    SPINDLE_ON,
    TOOL_COMMENT_PREFIX,
)
from pneufab.gcode.parser import parse_gcode
from pneufab.gcode.program import GProgram
from pneufab.geometry import snap
from pneufab.toolpath import (
    ChannelOff,
    ChannelOn,
    Dwell,
    KnifeAngle,
    MachineProfile,
    Move,
    Rapid,
    Toolpath,
    ToolSelect,
)

logger = logging.getLogger(__name__)


def _coord(value: float) -> str:
    return f"{snap(value):.{COORD_DECIMALS}f}"


def _comment(text: str) -> str:
    return "(" + text.replace("(", "[").replace(")", "]").replace("\n", " ") + ")"


class _Emitter:
    def __init__(self, tp: Toolpath, machine: MachineProfile):
        self.machine = machine
        self.pos = tp.start
        self.feed: Optional[float] = None
        self.pending_angle: Optional[float] = None
        self.lines: List[str] = []

    def motion(self, g: int, to: Tuple[float, float, float], feed: Optional[float] = None) -> None:
        # X and Y always, Z only when it changes
        words = [f"G{g}"] + [f"{axis}{_coord(v)}" for axis, v in zip(AXES[:2], to[:2])]
        if _coord(to[2]) != _coord(self.pos[2]):
            words.append(f"{AXES[2]}{_coord(to[2])}")
        if self.pending_angle is not None:
            words.append(f"A{_coord(self.pending_angle)}")
            self.pending_angle = None
        if feed is not None and feed != self.feed:
            words.append(f"F{format_number(feed)}")
            self.feed = feed
        self.lines.append(" ".join(words))
        self.pos = to

    def channel(self, name: str, on: bool) -> None:
        m = self.machine
        if m.uses_spindle(name):
            self.lines.append(f"M{SPINDLE_ON if on else SPINDLE_OFF}")
        else:
            self.lines.append(f"M{m.output_on if on else m.output_off} P{m.output(name)}")


def emit(tp: Toolpath, machine: MachineProfile) -> GProgram:
    """G-code for ``tp``; the result is parsed back, so emitted words are always in the dialect."""
    out = _Emitter(tp, machine)
    out.lines.append(_comment(PROGRAM_COMMENT_PREFIX + tp.name))
    out.lines.extend(_comment(line) for line in tp.header)
    out.lines += [f"G{MILLIMETRES}", f"G{ABSOLUTE}"]

    for action in tp.actions:
        if isinstance(action, Rapid):
            out.motion(RAPID, action.to)
        elif isinstance(action, Move):
            out.motion(FEED, action.to, action.feed)
        elif isinstance(action, KnifeAngle):
            out.pending_angle = action.deg
        elif isinstance(action, ToolSelect):
            out.lines.append(_comment(TOOL_COMMENT_PREFIX + action.tool))
        elif isinstance(action, ChannelOn):
            out.channel(action.channel, True)
        elif isinstance(action, ChannelOff):
            out.channel(action.channel, False)
        elif isinstance(action, Dwell):
            out.lines.append(f"G{DWELL} P{action.ms / 1000:.{DWELL_DECIMALS}f}")
    out.lines.append(f"M{PROGRAM_END}")

    text = "\n".join(out.lines) + "\n"
    logger.debug(f"Emitted {len(out.lines)} lines for {tp.name}")
    return parse_gcode(text, machine)
