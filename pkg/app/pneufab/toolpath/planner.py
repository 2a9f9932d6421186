"""
Plan a validated PatternSheet into a dual-tool Toolpath.

Phase 1 welds every weld path with the welder stage lowered; phase 2 cuts
the interior cuts and then the outline, so the part stays registered until
the end. Weld-phase coordinates are shifted by the tool offset so the welder
tip, not the knife, lands on the sheet point.
"""

import logging
import math
from typing import Callable, List, Optional, Sequence, Tuple

from pneufab.errors import ToolpathError
from pneufab.geometry import Polyline, length, point_at
from pneufab.materials import MaterialTable, builtin_table, feed_rate_for
from pneufab.patterns.models import PatternSheet
from pneufab.toolpath.actions import (
    ChannelOff,
    ChannelOn,
    Dwell,
    KnifeAngle,
    Move,
    Rapid,
    Toolpath,
    ToolAction,
    ToolSelect,
    motion_time,
)
from pneufab.toolpath.constants import KNIFE_OSCILLATION, WELDER_POWER, WELDER_STAGE
from pneufab.toolpath.knife import knife_orientation
from pneufab.toolpath.ordering import order_paths
from pneufab.toolpath.profile import MachineProfile
from pneufab.toolpath.welder import WeldEvent, WeldMode, weld_schedule
from pneufab.validate import ValidationReport, validate_sheet

logger = logging.getLogger(__name__)

Coord3 = Tuple[float, float, float]
LAYER_ROLES = {2: ("bottom", "top"), 3: ("bottom", "middle", "top")}


class _Builder:
    """Appends actions while tracking position and elapsed time.

    Welder power switches closer together than the switching floor get a
    whole-millisecond dwell in front of them.
    """

    def __init__(self, machine: MachineProfile):
        self.machine = machine
        self.actions: List[ToolAction] = []
        self.pos: Coord3 = machine.home
        self.time = 0.0
        self.angle: Optional[float] = None
        self._power_switched_at: Optional[float] = None

    def rapid(self, to: Coord3) -> None:
        self.time += motion_time(self.pos, to, self.machine.rapid_rate)
        self.pos = to
        self.actions.append(Rapid(to))

    def move(self, to: Coord3, feed: float) -> None:
        if to == self.pos:
            return
        self.time += motion_time(self.pos, to, feed)
        self.pos = to
        self.actions.append(Move(to, feed))

    def knife(self, angle: float) -> None:
        if angle != self.angle:
            self.angle = angle
            self.actions.append(KnifeAngle(round(angle, 3) + 0.0))

    def tool(self, name: str) -> None:
        self.actions.append(ToolSelect(name))

    def dwell(self, ms: int) -> None:
        self.time += ms / 1000.0
        self.actions.append(Dwell(ms))

    def channel(self, name: str, on: bool) -> None:
        if name == WELDER_POWER:
            if self._power_switched_at is not None:
                short = self.machine.welder_min_switch - (self.time - self._power_switched_at) * 1000.0
                if short > 1e-6:
                    self.dwell(math.ceil(short - 1e-9))
            self._power_switched_at = self.time
        self.actions.append(ChannelOn(name) if on else ChannelOff(name))


def _weld_feed(sheet: PatternSheet, machine: MachineProfile, materials: MaterialTable) -> float:
    if machine.weld_feed is not None:
        return machine.weld_feed
    if sheet.design_ref is None:
        raise ToolpathError("E_BAD_VALUE", "sheet carries no design; set a weld feed in the machine profile")
    return feed_rate_for(materials, sheet.design_ref.layers)


def _header(sheet: PatternSheet, materials: MaterialTable, feed: float, mode: WeldMode,
            report: ValidationReport) -> Tuple[str, ...]:
    lines = []
    if sheet.design_ref is not None:
        names = sheet.design_ref.layers.layers
        for i, (role, name) in enumerate(zip(LAYER_ROLES[len(names)], names), start=1):
            ptfe = materials.lookup(name).ptfe_layers
            lines.append(f"layer {i} {role}: {name}, PTFE sheets per side: {ptfe}")
    lines.append(f"weld feed {feed:g} mm/min, {mode.label()}")
    for finding in report.findings:
        lines.append(f"{finding.severity} {finding.code}: {finding.message}")
    return tuple(lines)


def _closed_coords(path: Polyline) -> List[Tuple[float, float]]:
    coords = path.coords()
    if path.closed:
        coords.append(coords[0])
    return coords


def _weld_path(b: _Builder, path: Polyline, events: Sequence[WeldEvent], feed: float) -> None:
    m = b.machine
    coords = _closed_coords(path)
    total = length(path)
    arcs = [0.0]
    for a, c in zip(coords, coords[1:]):
        arcs.append(arcs[-1] + math.dist(a, c))

    entry = m.weld_point(*coords[0])
    b.rapid((entry[0], entry[1], m.z_safe))
    b.move((entry[0], entry[1], m.z_weld), m.plunge_feed)

    # vertices sort before events at the same arc position
    items = [(arcs[k], 0, coords[k]) for k in range(1, len(coords))]
    items += [(min(e.arc, total), 1, e) for e in events]
    for arc, kind, item in sorted(items, key=lambda t: (t[0], t[1])):
        if kind == 0:
            x, y = m.weld_point(*item)
        else:
            x, y = m.weld_point(*point_at(path, arc))
        b.move((x, y, m.z_weld), feed)
        if kind == 1:
            b.channel(WELDER_POWER, item.on)

    b.rapid((b.pos[0], b.pos[1], m.z_safe))


def _cut_path(b: _Builder, path: Polyline) -> None:
    m = b.machine
    knife = knife_orientation(path, m.corner_lift_deg)
    points = [m.cut_point(x, y) for x, y in _closed_coords(path)]
    lifts = set(knife.lifts)

    b.rapid((points[0][0], points[0][1], m.z_safe))
    b.knife(knife.angles[0])
    b.move((points[0][0], points[0][1], m.z_cut), m.plunge_feed)
    for k in range(len(points) - 1):
        x, y = points[k]
        if k in lifts:
            b.rapid((x, y, m.z_lift))
            b.knife(knife.angles[k])
            # carries the blade turn
            b.rapid((x, y, m.z_lift))
            b.move((x, y, m.z_cut), m.plunge_feed)
        else:
            b.knife(knife.angles[k])
        b.move((points[k + 1][0], points[k + 1][1], m.z_cut), m.cut_feed)
    b.rapid((b.pos[0], b.pos[1], m.z_safe))


def _outline_from(sheet: PatternSheet, here: Tuple[float, float]) -> Polyline:
    """Outline as a closed path starting at the vertex nearest ``here``."""
    coords = sheet.outline.coords()
    start = min(range(len(coords)), key=lambda i: (math.dist(coords[i], here), i))
    return Polyline.from_coords(coords[start:] + coords[:start], closed=True)


def _sheet_position(b: _Builder, to_sheet: Callable[[float, float], Tuple[float, float]]) -> Tuple[float, float]:
    return to_sheet(b.pos[0], b.pos[1])


def plan(sheet: PatternSheet, machine: MachineProfile, materials: Optional[MaterialTable] = None,
         mode: Optional[WeldMode] = None, report: Optional[ValidationReport] = None) -> Toolpath:
    """Weld phase then cut phase, outline last.

    Raises:
        ToolpathError: E_BED_EXCEEDED when the sheet does not fit the travel,
            E_NOT_VALIDATED when the sheet has validation errors.
    """
    materials = materials if materials is not None else builtin_table()
    mode = mode or WeldMode()
    report = report if report is not None else validate_sheet(sheet, machine)
    bed = [f for f in report.findings if f.code == "BED_EXCEEDED"]
    if bed:
        raise ToolpathError("E_BED_EXCEEDED", bed[0].message)
    if not report.passed:
        codes = ", ".join(sorted({f.code for f in report.errors()}))
        raise ToolpathError("E_NOT_VALIDATED", f"{sheet.name} has validation errors ({codes})")

    feed = _weld_feed(sheet, machine, materials)
    ox, oy = machine.work_origin
    tx, ty = machine.tool_offset
    b = _Builder(machine)
    b.rapid((machine.home[0], machine.home[1], machine.z_safe))

    # phase 1: welding
    b.tool("weld")
    b.channel(WELDER_STAGE, True)
    weld_order = order_paths(sheet.weld_paths, _sheet_position(b, lambda x, y: (x - ox + tx, y - oy + ty)))
    for path in weld_order.oriented(sheet.weld_paths):
        _weld_path(b, path, weld_schedule(path, feed, mode, machine), feed)
    b.channel(WELDER_STAGE, False)
    weld_time = b.time

    # phase 2: cutting, outline last
    b.tool("cut")
    b.channel(KNIFE_OSCILLATION, True)
    cut_order = order_paths(sheet.cut_paths, _sheet_position(b, lambda x, y: (x - ox, y - oy)))
    for path in cut_order.oriented(sheet.cut_paths):
        _cut_path(b, path)
    _cut_path(b, _outline_from(sheet, _sheet_position(b, lambda x, y: (x - ox, y - oy))))
    b.channel(KNIFE_OSCILLATION, False)
    b.rapid((machine.home[0], machine.home[1], machine.z_safe))

    for action in b.actions:
        if isinstance(action, (Rapid, Move)) and not machine.within_travel(action.to):
            raise ToolpathError("E_BED_EXCEEDED", f"motion to {action.to} leaves the {machine.travel} travel")

    logger.debug(
        f"Planned {sheet.name}: {len(sheet.weld_paths)} weld / {len(sheet.cut_paths) + 1} cut paths, "
        f"weld feed {feed:g} mm/min, weld phase {weld_time:.1f} s, total {b.time:.1f} s"
    )
    return Toolpath(
        name=sheet.name,
        actions=tuple(b.actions),
        start=machine.home,
        header=_header(sheet, materials, feed, mode, report),
        weld_order=weld_order.order,
        cut_order=cut_order.order + (-1,),
        weld_feed=feed,
    )
