"""G-code emission, parsing and re-simulation."""

from pneufab.gcode.emitter import emit
from pneufab.gcode.parser import parse_gcode
from pneufab.gcode.program import GLine, GProgram, Word
from pneufab.gcode.roundtrip import RoundtripReport, compare_program, planned_weld_on_length, roundtrip_check
from pneufab.gcode.simulator import ChannelEvent, Excursion, Segment, SimReport, WelderInterval, simulate

__all__ = [
    'ChannelEvent',
    'Excursion',
    'GLine',
    'GProgram',
    'RoundtripReport',
    'Segment',
    'SimReport',
    'WelderInterval',
    'Word',
    'compare_program',
    'emit',
    'parse_gcode',
    'planned_weld_on_length',
    'roundtrip_check',
    'simulate',
]
