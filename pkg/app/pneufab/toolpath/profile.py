"""
Machine profile: travel envelope, Z levels, tool offset, welder timing,
channel mapping and feeds.
"""

import logging
from dataclasses import dataclass, field, fields, replace
from types import MappingProxyType
from typing import Mapping, Optional, Tuple

from pneufab.design.dsl import integer_value, number_value, parse_design, reject_unknown, text_value
from pneufab.errors import DesignError, ToolpathError
from pneufab.geometry import snap
from pneufab.toolpath.constants import (
    CHANNEL_MAP,
    CORNER_LIFT_DEG,
    CUT_DEPTH,
    CUT_FEED,
    HOME,
    KNIFE_MODES,
    KNIFE_OSCILLATION,
    LIFT_HEIGHT,
    OUTPUT_OFF_MCODE,
    OUTPUT_ON_MCODE,
    PLUNGE_FEED,
    PROFILE_KEYS,
    PROFILE_SECTIONS,
    RAPID_RATE,
    SAFE_Z,
    SURFACE_Z,
    TOOL_OFFSET,
    TRAVEL,
    WELDER_MIN_SWITCH_MS,
    WELDER_POWER_W,
    WORK_ORIGIN,
)

logger = logging.getLogger(__name__)

Coord3 = Tuple[float, float, float]


@dataclass(frozen=True)
class MachineProfile:
    travel: Coord3 = TRAVEL
    rapid_rate: float = RAPID_RATE
    safe_z: float = SAFE_Z
    cut_depth: float = CUT_DEPTH
    surface_z: float = SURFACE_Z
    lift_height: float = LIFT_HEIGHT
    tool_offset: Tuple[float, float] = TOOL_OFFSET
    work_origin: Tuple[float, float] = WORK_ORIGIN
    home: Coord3 = HOME
    welder_min_switch: int = WELDER_MIN_SWITCH_MS
    corner_lift_deg: float = CORNER_LIFT_DEG
    welder_power_w: float = WELDER_POWER_W
    channel_map: Mapping[str, int] = field(default_factory=lambda: MappingProxyType(dict(CHANNEL_MAP)))
    knife_mode: str = "spindle"
    output_on: int = OUTPUT_ON_MCODE
    output_off: int = OUTPUT_OFF_MCODE
    cut_feed: float = CUT_FEED
    plunge_feed: float = PLUNGE_FEED
    weld_feed: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "channel_map", MappingProxyType(dict(self.channel_map)))
        if any(t <= 0 for t in self.travel):
            raise ToolpathError("E_BAD_VALUE", f"travel must be > 0, got {self.travel}")
        if self.welder_min_switch < WELDER_MIN_SWITCH_MS:
            raise ToolpathError(
                "E_BAD_VALUE",
                f"welder_min_switch {self.welder_min_switch} ms is below {WELDER_MIN_SWITCH_MS} ms",
            )
        missing = sorted(set(CHANNEL_MAP) - set(self.channel_map))
        if missing:
            raise ToolpathError("E_BAD_VALUE", f"channel map lacks {', '.join(missing)}")
        if len(set(self.channel_map.values())) != len(self.channel_map):
            raise ToolpathError("E_BAD_VALUE", "channels must map to distinct outputs")
        if self.output_on == self.output_off:
            raise ToolpathError("E_BAD_VALUE", "output on/off M-codes must differ")
        if self.knife_mode not in KNIFE_MODES:
            raise ToolpathError("E_BAD_VALUE", f"knife_mode must be one of {', '.join(KNIFE_MODES)}")
        for name in ("rapid_rate", "cut_feed", "plunge_feed", "safe_z", "lift_height"):
            if getattr(self, name) <= 0:
                raise ToolpathError("E_BAD_VALUE", f"{name} must be > 0")
        if self.weld_feed is not None and self.weld_feed <= 0:
            raise ToolpathError("E_BAD_VALUE", "weld feed override must be > 0")
        if self.cut_depth >= 0:
            raise ToolpathError("E_BAD_VALUE", "cut_depth must be below the mat surface (< 0)")
        if not 0 < self.corner_lift_deg < 180:
            raise ToolpathError("E_BAD_VALUE", "corner_lift_deg must be in (0, 180)")

    # Z levels
    @property
    def z_safe(self) -> float:
        return snap(self.surface_z + self.safe_z)

    @property
    def z_cut(self) -> float:
        return snap(self.surface_z + self.cut_depth)

    @property
    def z_weld(self) -> float:
        return snap(self.surface_z)

    @property
    def z_lift(self) -> float:
        return snap(self.surface_z + self.lift_height)

    def weld_point(self, x: float, y: float) -> Tuple[float, float]:
        """Gantry position that puts the welder tip on sheet point (x, y)."""
        return (
            snap(x + self.work_origin[0] - self.tool_offset[0]),
            snap(y + self.work_origin[1] - self.tool_offset[1]),
        )

    def cut_point(self, x: float, y: float) -> Tuple[float, float]:
        return snap(x + self.work_origin[0]), snap(y + self.work_origin[1])

    def output(self, channel: str) -> int:
        return self.channel_map[channel]

    def uses_spindle(self, channel: str) -> bool:
        return channel == KNIFE_OSCILLATION and self.knife_mode == "spindle"

    def within_travel(self, point: Coord3) -> bool:
        return all(0.0 <= v <= limit for v, limit in zip(point, self.travel))


def load_machine_profile(text: str, base: Optional[MachineProfile] = None) -> MachineProfile:
    """Read a machine file ([machine], [channels], [feeds]) over ``base``."""
    base = base or MachineProfile()
    doc = parse_design(text)
    for section in doc.sections:
        if section.name not in PROFILE_SECTIONS:
            raise DesignError("E_UNKNOWN_KEY", f"unknown section [{section.name}]", section.line)
        reject_unknown(section, {key for s, key, _, _ in PROFILE_KEYS if s == section.name})

    values = {}
    for section_name, key, name, kind in PROFILE_KEYS:
        section = doc.section(section_name)
        entry = section.get(key) if section else None
        if entry is None:
            continue
        if kind == "integer":
            values[name] = integer_value(entry)
        elif kind == "text":
            values[name] = text_value(entry)
        else:
            values[name] = number_value(entry)

    def pair(prefix: str, current: Tuple[float, ...]) -> Tuple[float, ...]:
        axes = ("x", "y", "z")[: len(current)]
        return tuple(values.pop(f"{prefix}_{a}", c) for a, c in zip(axes, current))

    changes = {
        "travel": pair("travel", base.travel),
        "tool_offset": pair("tool_offset", base.tool_offset),
        "work_origin": pair("work_origin", base.work_origin),
        "home": pair("home", base.home),
        "channel_map": {ch: values.pop(ch, out) for ch, out in base.channel_map.items()},
    }
    known = {f.name for f in fields(MachineProfile)}
    changes.update({k: v for k, v in values.items() if k in known})
    profile = replace(base, **changes)
    logger.debug(f"Machine profile: travel {profile.travel}, origin {profile.work_origin}, "
                 f"tool offset {profile.tool_offset}")
    return profile
