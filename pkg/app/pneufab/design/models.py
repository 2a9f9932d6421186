"""
Typed actuator designs.
"""

from dataclasses import dataclass, fields
from enum import Enum
from typing import Tuple, Union

from pneufab.design.constants import DEFAULT_INLET_WIDTH, THREE_LAYER_FAMILIES
from pneufab.errors import DesignError


class Family(str, Enum):
    RECT_POUCH = "rect_pouch"
    LINEAR_PNEUNET = "linear_pneunet"
    BENDING_PNEUNET = "bending_pneunet"
    ANTAGONISTIC_PNEUNET = "antagonistic_pneunet"
    TWISTING_PNEUNET = "twisting_pneunet"
    KIRIGAMI = "kirigami"

    @property
    def layer_count(self) -> int:
        return 3 if self.value in THREE_LAYER_FAMILIES else 2


@dataclass(frozen=True)
class RectPouchParams:
    width: float
    height: float


@dataclass(frozen=True)
class PneuNetParams:
    """Linear, bending and antagonistic pneunets share one parameter set."""

    width: float
    length: float
    pouch_pitch: float = 20.0
    channel_gap: float = 6.0


@dataclass(frozen=True)
class TwistingParams:
    width: float
    length: float
    incline_deg: float
    pouch_pitch: float = 20.0
    channel_gap: float = 6.0


@dataclass(frozen=True)
class KirigamiParams:
    width: float
    height: float
    cut_length: float = 20.0
    ligament: float = 5.0
    row_pitch: float = 10.0
    margin: float = 10.0
    channel_width: float = 10.0


FamilyParams = Union[RectPouchParams, PneuNetParams, TwistingParams, KirigamiParams]

PARAMS_CLASS = {
    Family.RECT_POUCH: RectPouchParams,
    Family.LINEAR_PNEUNET: PneuNetParams,
    Family.BENDING_PNEUNET: PneuNetParams,
    Family.ANTAGONISTIC_PNEUNET: PneuNetParams,
    Family.TWISTING_PNEUNET: TwistingParams,
    Family.KIRIGAMI: KirigamiParams,
}


@dataclass(frozen=True)
class InletSpec:
    chamber_id: str
    edge: str
    offset: float


@dataclass(frozen=True)
class LayerStack:
    """Material names bottom to top, plus explicit inlets (empty = generator default)."""

    layers: Tuple[str, ...]
    inlets: Tuple[InletSpec, ...] = ()


@dataclass(frozen=True)
class ActuatorDesign:
    name: str
    family: Family
    layers: LayerStack
    params: FamilyParams
    inlet_width: float = DEFAULT_INLET_WIDTH

    def __post_init__(self):
        expected = PARAMS_CLASS[self.family]
        if not isinstance(self.params, expected):
            raise DesignError(
                "E_BAD_VALUE",
                f"{self.family.value} needs {expected.__name__}, got {type(self.params).__name__}",
            )
        if len(self.layers.layers) != self.family.layer_count:
            raise DesignError(
                "E_BAD_VALUE",
                f"{self.family.value} needs {self.family.layer_count} layers, "
                f"got {len(self.layers.layers)}",
            )
        if self.inlet_width <= 0:
            raise DesignError("E_BAD_VALUE", "inlet_width must be > 0")
        for f in fields(self.params):
            value = getattr(self.params, f.name)
            if f.name == "incline_deg":
                if not 0 <= value < 90:
                    raise DesignError("E_BAD_VALUE", f"incline_deg {value} outside [0, 90)")
            elif value <= 0:
                raise DesignError("E_BAD_VALUE", f"{f.name} must be > 0, got {value}")
