"""
Welder power scheduling along a weld path.

The ultrasonic welder may only switch at whole multiples of its minimum
switching interval, so pulsed periods are quantized to that grid.
"""

import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, List

from pneufab.errors import ToolpathError
from pneufab.geometry import Polyline, length
from pneufab.toolpath.constants import CONTINUOUS, DEFAULT_DUTY, DEFAULT_PERIOD_MS, PULSED

if TYPE_CHECKING:
    from pneufab.toolpath.profile import MachineProfile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeldMode:
    kind: str = CONTINUOUS
    duty: float = DEFAULT_DUTY  # percent on
    period_ms: float = DEFAULT_PERIOD_MS

    def __post_init__(self):
        if self.kind not in (CONTINUOUS, PULSED):
            raise ToolpathError("E_BAD_VALUE", f"unknown weld mode '{self.kind}'")
        if self.kind == PULSED and not 0 < self.duty < 100:
            raise ToolpathError("E_BAD_VALUE", f"duty {self.duty:g}% outside (0, 100)")

    @property
    def pulsed(self) -> bool:
        return self.kind == PULSED

    def label(self) -> str:
        if not self.pulsed:
            return CONTINUOUS
        return f"{PULSED} {self.duty:g}% / {self.period_ms:g} ms"


def parse_weld_mode(text: str) -> WeldMode:
    """``continuous`` or ``pulsed:<duty%>:<period_ms>`` (duty and period optional)."""
    parts = text.strip().split(":")
    if parts[0] == CONTINUOUS and len(parts) == 1:
        return WeldMode()
    if parts[0] != PULSED or len(parts) > 3:
        raise ToolpathError("E_BAD_VALUE", f"weld mode must be continuous or pulsed:<duty>:<period_ms>, got '{text}'")
    try:
        duty = float(parts[1]) if len(parts) > 1 else DEFAULT_DUTY
        period = float(parts[2]) if len(parts) > 2 else DEFAULT_PERIOD_MS
    except ValueError:
        raise ToolpathError("E_BAD_VALUE", f"weld mode numbers unreadable in '{text}'")
    return WeldMode(PULSED, duty, period)


@dataclass(frozen=True)
class WeldEvent:
    arc: float  # mm from the path start
    time_ms: float
    on: bool


def pulse_timing(mode: WeldMode, machine: "MachineProfile"):
    """(period, on time) in ms, both whole multiples of the switching floor."""
    floor = machine.welder_min_switch
    if mode.period_ms < 2 * floor:
        raise ToolpathError(
            "E_PULSE_TOO_SHORT",
            f"pulse period {mode.period_ms:g} ms is below twice the {floor} ms switching floor",
        )
    steps = max(2, math.floor(mode.period_ms / floor + 0.5))
    on_steps = min(max(math.floor(mode.duty / 100 * steps + 0.5), 1), steps - 1)
    return steps * floor, on_steps * floor


def weld_schedule(path: Polyline, feed: float, mode: WeldMode,
                  machine: "MachineProfile") -> List[WeldEvent]:
    """Power events along ``path`` traversed at ``feed`` mm/min.

    Continuous: on at the start, off at the end. Pulsed: whole pulses that
    finish inside the traversal; positions are time × feed.
    """
    if feed <= 0:
        raise ToolpathError("E_BAD_VALUE", f"weld feed must be > 0, got {feed}")
    total = length(path)
    if not mode.pulsed:
        return [WeldEvent(0.0, 0.0, True), WeldEvent(total, total / feed * 60000.0, False)]

    period, on_ms = pulse_timing(mode, machine)
    duration = total / feed * 60000.0
    events: List[WeldEvent] = []
    t = 0.0
    while t + on_ms <= duration + 1e-9:
        events.append(WeldEvent(t * feed / 60000.0, t, True))
        events.append(WeldEvent((t + on_ms) * feed / 60000.0, t + on_ms, False))
        t += period
    logger.debug(f"Pulsed schedule: {len(events) // 2} pulses over {duration:.0f} ms "
                 f"(period {period} ms, on {on_ms} ms)")
    return events
