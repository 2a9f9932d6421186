"""
Pattern sheet types: what the welder and the knife will draw, and the chamber
graph that says which pouches inflate from which inlet.
"""

from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Tuple

import networkx as nx

from pneufab.design.models import ActuatorDesign
from pneufab.geometry import Point, Polygon, Polyline
from pneufab.patterns.constants import CUT_CLEARANCE, NOTE_SEVERITY, SEAL_INSET, WELD_WIDTH


@dataclass(frozen=True)
class ProcessSettings:
    seal_inset: float = SEAL_INSET
    weld_width: float = WELD_WIDTH
    cut_clearance: float = CUT_CLEARANCE

    def scaled(self, k: float) -> "ProcessSettings":
        return replace(
            self,
            seal_inset=self.seal_inset * k,
            weld_width=self.weld_width * k,
            cut_clearance=self.cut_clearance * k,
        )


@dataclass(frozen=True)
class Chamber:
    id: str
    region: Polygon
    layers: Tuple[int, int] = (0, 1)

    @property
    def network(self) -> str:
        return f"{self.layers[0]}-{self.layers[1]}"


@dataclass(frozen=True)
class Channel:
    a: str
    b: str
    gap: Polyline


@dataclass(frozen=True)
class ChamberGraph:
    chambers: Tuple[Chamber, ...] = ()
    channels: Tuple[Channel, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "chambers", tuple(self.chambers))
        object.__setattr__(self, "channels", tuple(self.channels))

    def ids(self) -> List[str]:
        return [c.id for c in self.chambers]

    def get(self, chamber_id: str) -> Optional[Chamber]:
        for chamber in self.chambers:
            if chamber.id == chamber_id:
                return chamber
        return None

    def networks(self) -> Dict[str, List[str]]:
        """Network name -> chamber ids, in declaration order."""
        result: Dict[str, List[str]] = {}
        for chamber in self.chambers:
            result.setdefault(chamber.network, []).append(chamber.id)
        return result

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for chamber in self.chambers:
            graph.add_node(chamber.id, network=chamber.network)
        for channel in self.channels:
            graph.add_edge(channel.a, channel.b)
        return graph


@dataclass(frozen=True)
class Inlet:
    """Gap in the perimeter seam opening into ``chamber_id``."""

    chamber_id: str
    gap: Polyline
    edge: str = ""
    offset: float = 0.0

    @property
    def width(self) -> float:
        return self.gap.start.distance_to(self.gap.end)


@dataclass(frozen=True)
class SheetNote:
    code: str
    message: str

    @property
    def severity(self) -> str:
        return NOTE_SEVERITY.get(self.code, "note")


@dataclass(frozen=True)
class PatternSheet:
    outline: Polygon
    weld_paths: Tuple[Polyline, ...]
    cut_paths: Tuple[Polyline, ...]
    chambers: ChamberGraph
    inlets: Tuple[Inlet, ...]
    design_ref: Optional[ActuatorDesign] = None
    sheet_origin: Point = Point(0.0, 0.0)
    notes: Tuple[SheetNote, ...] = ()
    inlet_width: Optional[float] = None
    settings: ProcessSettings = field(default_factory=ProcessSettings)

    def __post_init__(self):
        for name in ("weld_paths", "cut_paths", "inlets", "notes"):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    @property
    def name(self) -> str:
        return self.design_ref.name if self.design_ref else "sheet"

    @property
    def declared_inlet_width(self) -> Optional[float]:
        if self.inlet_width is not None:
            return self.inlet_width
        return self.design_ref.inlet_width if self.design_ref else None
