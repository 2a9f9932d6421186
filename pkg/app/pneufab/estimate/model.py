"""
First-order contraction of pouch-motor pneunets and the measured reference
results.

Each inflated pouch zone of flat length l is treated as an inextensible strip
that rounds into a semicircular arc, so it shortens to (2/pi) l. Welded zones
do not shorten.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional

import pandas as pd

from pneufab.design.models import ActuatorDesign, Family
from pneufab.errors import EstimateError
from pneufab.estimate.constants import REFERENCE_NOTES, REFERENCE_RESULTS, SUPPORTED_FAMILIES
from pneufab.patterns.models import ProcessSettings

logger = logging.getLogger(__name__)

MAX_CONTRACTION = 1.0 - 2.0 / math.pi


@dataclass(frozen=True)
class ReferenceResult:
    family: str
    variant: str
    width: Optional[float]
    pressure_kpa: float
    strain: float  # signed; negative is extension
    note: str = ""

    def __post_init__(self):
        if self.pressure_kpa < 0:
            raise EstimateError("E_BAD_VALUE", f"pressure {self.pressure_kpa} kPa below zero")
        if not abs(self.strain) < 1:
            raise EstimateError("E_BAD_VALUE", f"strain {self.strain} outside (-1, 1)")


def contraction_from_fraction(fraction: float) -> float:
    """Ideal contraction when ``fraction`` of the length is pouch zone."""
    return MAX_CONTRACTION * min(max(fraction, 0.0), 1.0)


def pouch_fraction(design: ActuatorDesign, settings: Optional[ProcessSettings] = None) -> float:
    """Share of the actuator length taken by pouch zones (between weld edges)."""
    settings = settings or ProcessSettings()
    p = design.params
    # same pouch count as the pneunet generator (round half up)
    n = max(1, math.floor(p.length / p.pouch_pitch + 0.5))
    pouches = p.length - 2 * settings.seal_inset - n * settings.weld_width
    return max(pouches, 0.0) / p.length


def estimate_linear_contraction(design: ActuatorDesign, settings: Optional[ProcessSettings] = None) -> float:
    """Upper-bound contraction strain of a linear or bending pneunet.

    Raises:
        EstimateError: E_UNSUPPORTED_FAMILY for other families.
    """
    family = design.family.value if isinstance(design.family, Family) else str(design.family)
    if family not in SUPPORTED_FAMILIES:
        raise EstimateError(
            "E_UNSUPPORTED_FAMILY",
            f"no contraction model for {family}; supported: {', '.join(SUPPORTED_FAMILIES)}",
        )
    fraction = pouch_fraction(design, settings)
    strain = contraction_from_fraction(fraction)
    logger.debug(f"{design.name}: pouch fraction {fraction:.4f}, ideal contraction {strain:.4f}")
    return strain


def reference_table() -> List[ReferenceResult]:
    return [ReferenceResult(*row) for row in REFERENCE_RESULTS]


def reference_notes() -> List[str]:
    return list(REFERENCE_NOTES)


def reference_frame() -> pd.DataFrame:
    frame = pd.DataFrame([vars(r) for r in reference_table()])
    frame["width"] = frame["width"].map(lambda w: "-" if pd.isna(w) else f"{w:g}")
    return frame.rename(columns={"pressure_kpa": "pressure [kPa]"})
