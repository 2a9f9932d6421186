"""
Single-pass G-code re-simulation: modal state, motion timing, channel
timeline and envelope checks.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from pneufab.errors import GCodeError
from pneufab.gcode.constants import (
    AXES,
    DWELL,
    FEED,
    PROGRAM_END,
    RAPID,
    SPINDLE_OFF,
    SPINDLE_ON,
    TOOL_COMMENT_PREFIX,
)
from pneufab.gcode.program import GProgram
from pneufab.toolpath import MachineProfile
from pneufab.toolpath.constants import KNIFE_OSCILLATION, WELDER_POWER

logger = logging.getLogger(__name__)

Coord3 = Tuple[float, float, float]


@dataclass(frozen=True)
class Segment:
    tool: str
    kind: str  # "rapid" or "feed"
    start: Coord3
    end: Coord3
    feed: float
    time: float
    angle: float
    line: int

    @property
    def length(self) -> float:
        return math.dist(self.start, self.end)


@dataclass(frozen=True)
class WelderInterval:
    start_s: float
    end_s: float
    arc_length: float

    @property
    def duration(self) -> float:
        return self.end_s - self.start_s


@dataclass(frozen=True)
class ChannelEvent:
    time: float
    channel: str
    on: bool
    line: int


@dataclass(frozen=True)
class Excursion:
    line: int
    point: Coord3
    amount: float  # mm outside the travel box


@dataclass
class SimReport:
    segments: List[Segment] = field(default_factory=list)
    welder_on: List[WelderInterval] = field(default_factory=list)
    timeline: List[ChannelEvent] = field(default_factory=list)
    excursions: List[Excursion] = field(default_factory=list)
    job_time: float = 0.0
    dwell_time: float = 0.0
    cut_length: float = 0.0

    @property
    def max_excursion(self) -> float:
        return max((e.amount for e in self.excursions), default=0.0)

    @property
    def weld_length(self) -> float:
        return sum(i.arc_length for i in self.welder_on)

    @property
    def within_envelope(self) -> bool:
        return not self.excursions

    def summary_lines(self) -> List[str]:
        lines = [
            f"job time {self.job_time:.1f} s",
            f"weld length {self.weld_length:.3f} mm",
            f"cut length {self.cut_length:.3f} mm",
            f"segments {len(self.segments)}, welder pulses {len(self.welder_on)}",
        ]
        if self.excursions:
            worst = max(self.excursions, key=lambda e: e.amount)
            lines.append(f"envelope excursions {len(self.excursions)}, "
                         f"max {self.max_excursion:.3f} mm (line {worst.line})")
        else:
            lines.append("envelope ok")
        return lines


def _outside(point: Coord3, travel: Coord3) -> float:
    return max(max(0.0 - v, v - limit, 0.0) for v, limit in zip(point, travel))


class _Machine:
    """Modal interpreter state."""

    def __init__(self, machine: MachineProfile):
        self.m = machine
        self.pos: Coord3 = machine.home
        self.motion: Optional[int] = None
        self.feed: Optional[float] = None
        self.tool = ""
        self.angle = 0.0
        self.time = 0.0
        self.channels: Dict[int, str] = {out: name for name, out in machine.channel_map.items()}
        self.welder_since: Optional[float] = None
        self.welder_arc = 0.0


def simulate(program: GProgram, machine: MachineProfile) -> SimReport:
    """Integrate ``program`` on ``machine`` starting from home.

    Raises:
        GCodeError: E_NO_FEED when G1 runs before any F word.
    """
    state = _Machine(machine)
    report = SimReport()

    def switch(channel: str, on: bool, line: int) -> None:
        report.timeline.append(ChannelEvent(state.time, channel, on, line))
        if channel != WELDER_POWER:
            return
        if on and state.welder_since is None:
            state.welder_since, state.welder_arc = state.time, 0.0
        elif not on and state.welder_since is not None:
            report.welder_on.append(WelderInterval(state.welder_since, state.time, state.welder_arc))
            state.welder_since = None

    for line in program:
        if line.comment is not None and line.comment.startswith(TOOL_COMMENT_PREFIX):
            state.tool = line.comment[len(TOOL_COMMENT_PREFIX):].strip()
        if line.empty:
            continue
        g, m = line.value("G"), line.value("M")

        if m is not None:
            m = int(m)
            if m == PROGRAM_END:
                break
            if m in (SPINDLE_ON, SPINDLE_OFF):
                switch(KNIFE_OSCILLATION, m == SPINDLE_ON, line.number)
            else:
                out = int(line.value("P"))
                if out not in state.channels:
                    raise GCodeError("E_GCODE_SYNTAX", f"output P{out} is not mapped to a channel", line.number)
                switch(state.channels[out], m == machine.output_on, line.number)
            continue

        if g is not None and int(g) == DWELL:
            seconds = line.value("P")
            state.time += seconds
            report.dwell_time += seconds
            continue
        if g is not None and int(g) in (RAPID, FEED):
            state.motion = int(g)
        elif g is not None:
            continue  # G21 / G90: the only modes the dialect has

        if line.value("F") is not None:
            state.feed = line.value("F")
        if line.value("A") is not None:
            state.angle = line.value("A")
        targets = [line.value(axis) for axis in AXES]
        if all(t is None for t in targets) and line.value("A") is None:
            continue
        if state.motion is None:
            raise GCodeError("E_GCODE_SYNTAX", "axis words before any G0/G1", line.number)

        end = tuple(old if t is None else t for t, old in zip(targets, state.pos))
        if state.motion == FEED:
            if state.feed is None:
                raise GCodeError("E_NO_FEED", "G1 before any F word", line.number)
            feed, kind = state.feed, "feed"
        else:
            feed, kind = machine.rapid_rate, "rapid"
        seconds = math.dist(state.pos, end) / feed * 60.0
        segment = Segment(state.tool, kind, state.pos, end, feed, seconds, state.angle, line.number)
        report.segments.append(segment)
        state.time += seconds

        if state.welder_since is not None:
            state.welder_arc += segment.length
        if (kind == "feed" and state.tool == "cut"
                and segment.start[2] < machine.surface_z and segment.end[2] < machine.surface_z):
            report.cut_length += math.dist(segment.start[:2], segment.end[:2])
        amount = _outside(end, machine.travel)
        if amount > 0:
            report.excursions.append(Excursion(line.number, end, amount))
        state.pos = end

    if state.welder_since is not None:
        report.welder_on.append(WelderInterval(state.welder_since, state.time, state.welder_arc))
    report.job_time = state.time
    logger.debug(f"Simulated {len(report.segments)} segments, job time {report.job_time:.2f} s, "
                 f"{len(report.excursions)} excursion(s)")
    return report
