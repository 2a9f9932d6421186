"""Pattern sheets and the per-family generators."""

from pneufab.patterns.dump import dump_sheet
from pneufab.patterns.generators import (
    gen_antagonistic,
    gen_bending,
    gen_kirigami,
    gen_linear_pneunet,
    gen_rect_pouch,
    gen_twisting,
    generate,
)
from pneufab.patterns.models import (
    Chamber,
    ChamberGraph,
    Channel,
    Inlet,
    PatternSheet,
    ProcessSettings,
    SheetNote,
)

__all__ = [
    'Chamber',
    'ChamberGraph',
    'Channel',
    'Inlet',
    'PatternSheet',
    'ProcessSettings',
    'SheetNote',
    'dump_sheet',
    'gen_antagonistic',
    'gen_bending',
    'gen_kirigami',
    'gen_linear_pneunet',
    'gen_rect_pouch',
    'gen_twisting',
    'generate',
]
