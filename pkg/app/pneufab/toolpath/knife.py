"""
Tangential knife orientation: the blade follows the segment heading and is
lifted to turn at sharp corners.
"""

import math
from dataclasses import dataclass
from typing import List, Tuple

from pneufab.geometry import Polyline, heading_deg
from pneufab.toolpath.constants import CORNER_LIFT_DEG


@dataclass(frozen=True)
class KnifePlan:
    # one unwrapped blade angle per segment
    angles: Tuple[float, ...]
    # arc position where each segment starts
    arcs: Tuple[float, ...]
    # vertex indices (interior) where the blade is lifted to turn
    lifts: Tuple[int, ...]


def _wrap(delta: float) -> float:
    """Angle difference folded into (-180, 180]."""
    delta = math.fmod(delta, 360.0)
    if delta <= -180.0:
        delta += 360.0
    elif delta > 180.0:
        delta -= 360.0
    return delta


def knife_orientation(path: Polyline, threshold_deg: float = CORNER_LIFT_DEG) -> KnifePlan:
    """Blade angle per segment; closed paths include the closing segment."""
    coords = path.coords()
    if path.closed:
        coords.append(coords[0])
    angles: List[float] = []
    arcs: List[float] = []
    lifts: List[int] = []
    arc = 0.0
    for k, (a, b) in enumerate(zip(coords, coords[1:])):
        heading = heading_deg(a, b)
        if not angles:
            angles.append(heading)
        else:
            turn = _wrap(heading - angles[-1])
            angles.append(angles[-1] + turn)
            if abs(turn) > threshold_deg:
                lifts.append(k)
        arcs.append(arc)
        arc += math.dist(a, b)
    return KnifePlan(tuple(angles), tuple(arcs), tuple(lifts))
