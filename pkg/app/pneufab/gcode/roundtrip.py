"""
Compare a planned Toolpath with the re-simulation of a G-code program.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Tuple

from pneufab.gcode.constants import ROUNDTRIP_TOLERANCE
from pneufab.gcode.emitter import emit
from pneufab.gcode.parser import parse_gcode
from pneufab.gcode.program import GProgram
from pneufab.gcode.simulator import SimReport, simulate
from pneufab.toolpath import ChannelOff, ChannelOn, MachineProfile, Move, Rapid, Toolpath
from pneufab.toolpath.constants import WELDER_POWER

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RoundtripReport:
    planned_vertices: int
    simulated_vertices: int
    max_deviation: float  # mm
    worst_index: int  # -1 when nothing deviates
    max_angle_deviation: float
    tools_match: bool
    channels_match: bool
    planned_weld_on: float
    simulated_weld_on: float
    sim: SimReport

    @property
    def weld_on_deviation(self) -> float:
        return abs(self.planned_weld_on - self.simulated_weld_on)

    @property
    def passed(self) -> bool:
        return (
            self.planned_vertices == self.simulated_vertices
            and self.max_deviation <= ROUNDTRIP_TOLERANCE
            and self.max_angle_deviation <= ROUNDTRIP_TOLERANCE
            and self.tools_match
            and self.channels_match
            and self.weld_on_deviation <= ROUNDTRIP_TOLERANCE
        )

    def lines(self) -> List[str]:
        status = "ok" if self.passed else "MISMATCH"
        return [
            f"round trip {status}: {self.simulated_vertices}/{self.planned_vertices} vertices, "
            f"max deviation {self.max_deviation:.6f} mm at {self.worst_index}",
            f"welder-on length planned {self.planned_weld_on:.6f} mm, simulated {self.simulated_weld_on:.6f} mm",
        ]


def planned_weld_on_length(tp: Toolpath) -> float:
    """Move length travelled while the welder is powered."""
    here, on, total = tp.start, False, 0.0
    for action in tp.actions:
        if isinstance(action, ChannelOn) and action.channel == WELDER_POWER:
            on = True
        elif isinstance(action, ChannelOff) and action.channel == WELDER_POWER:
            on = False
        elif isinstance(action, (Rapid, Move)):
            if on:
                total += math.dist(here, action.to)
            here = action.to
    return total


def compare_program(tp: Toolpath, program: GProgram, machine: MachineProfile) -> RoundtripReport:
    sim = simulate(program, machine)
    planned: List[Tuple[str, Tuple[float, float, float], float]] = list(tp.motions())
    worst, worst_index, angle_dev, tools_match = 0.0, -1, 0.0, True
    for i, ((tool, to, angle), segment) in enumerate(zip(planned, sim.segments)):
        deviation = math.dist(to, segment.end)
        if deviation > worst:
            worst, worst_index = deviation, i
        angle_dev = max(angle_dev, abs(angle - segment.angle))
        tools_match = tools_match and tool == segment.tool

    channels = [(e.channel, e.on) for e in sim.timeline]
    report = RoundtripReport(
        planned_vertices=len(planned),
        simulated_vertices=len(sim.segments),
        max_deviation=worst,
        worst_index=worst_index,
        max_angle_deviation=angle_dev,
        tools_match=tools_match,
        channels_match=channels == tp.channel_events(),
        planned_weld_on=planned_weld_on_length(tp),
        simulated_weld_on=sim.weld_length,
        sim=sim,
    )
    logger.debug(report.lines()[0])
    return report


def roundtrip_check(tp: Toolpath, machine: MachineProfile) -> RoundtripReport:
    """simulate(parse(emit(tp))) against ``tp``."""
    return compare_program(tp, parse_gcode(emit(tp, machine).text, machine), machine)
