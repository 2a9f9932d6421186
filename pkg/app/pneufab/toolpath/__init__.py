"""Machine profile, path ordering, welder/knife planning and the Toolpath IR."""

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
from pneufab.toolpath.knife import KnifePlan, knife_orientation
from pneufab.toolpath.ordering import PathOrder, nearest_neighbour_travel, order_paths, sequence_travel
from pneufab.toolpath.planner import plan
from pneufab.toolpath.profile import MachineProfile, load_machine_profile
from pneufab.toolpath.summary import summarize
from pneufab.toolpath.welder import WeldEvent, WeldMode, parse_weld_mode, pulse_timing, weld_schedule

__all__ = [
    'ChannelOff',
    'ChannelOn',
    'Dwell',
    'KnifeAngle',
    'KnifePlan',
    'MachineProfile',
    'Move',
    'PathOrder',
    'Rapid',
    'ToolAction',
    'ToolSelect',
    'Toolpath',
    'WeldEvent',
    'WeldMode',
    'knife_orientation',
    'load_machine_profile',
    'motion_time',
    'nearest_neighbour_travel',
    'order_paths',
    'parse_weld_mode',
    'plan',
    'pulse_timing',
    'sequence_travel',
    'summarize',
    'weld_schedule',
]
