"""
Material table: fabric identity, weight class, coating and welding feed.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Optional, Sequence

import pandas as pd

from pneufab.design.dsl import integer_value, number_value, parse_design, reject_unknown, text_value
from pneufab.errors import MaterialError
from pneufab.materials.constants import (
    BUILTIN_MATERIALS,
    CLASS_FEED_RATES,
    COATINGS,
    HEAVIEST_CLASS,
    MATERIAL_FILE_KEYS,
    WEIGHT_CLASS_LIMITS,
    WEIGHT_CLASSES,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Material:
    name: str
    description: str
    areal_weight: float
    weight_class: str
    coating: str
    weld_feed: float
    ptfe_layers: int = 1

    def __post_init__(self):
        if self.weld_feed <= 0:
            raise MaterialError("E_BAD_VALUE", f"{self.name}: weld_feed must be > 0")
        if self.areal_weight < 0:
            raise MaterialError("E_BAD_VALUE", f"{self.name}: areal_weight must be >= 0")
        if self.ptfe_layers not in (1, 2):
            raise MaterialError("E_BAD_VALUE", f"{self.name}: ptfe_layers must be 1 or 2")
        if self.weight_class not in WEIGHT_CLASSES:
            raise MaterialError("E_BAD_VALUE", f"{self.name}: unknown weight class '{self.weight_class}'")
        if self.coating not in COATINGS:
            raise MaterialError("E_BAD_VALUE", f"{self.name}: unknown coating '{self.coating}'")


class MaterialTable(Mapping):
    """Immutable name -> Material map."""

    def __init__(self, materials: Iterable[Material]):
        entries = {}
        for material in materials:
            if material.name in entries:
                raise MaterialError("E_BAD_VALUE", f"duplicate material '{material.name}'")
            entries[material.name] = material
        self._entries = MappingProxyType(dict(sorted(entries.items())))

    def __getitem__(self, name: str) -> Material:
        return self._entries[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def lookup(self, name: str, line: Optional[int] = None) -> Material:
        if name not in self._entries:
            raise MaterialError("E_UNKNOWN_MATERIAL", f"unknown material '{name}'", line)
        return self._entries[name]


def classify_weight(areal_weight: float) -> str:
    for limit, weight_class in WEIGHT_CLASS_LIMITS:
        if areal_weight <= limit:
            return weight_class
    return HEAVIEST_CLASS


def class_feed(weight_class: str, name: str) -> float:
    if weight_class not in CLASS_FEED_RATES:
        raise MaterialError("E_BAD_VALUE", f"{name}: class '{weight_class}' has no default feed, set weld_feed_mm_min")
    return CLASS_FEED_RATES[weight_class]


def builtin_table() -> MaterialTable:
    materials = []
    for name, description, weight, weight_class, coating, feed, ptfe in BUILTIN_MATERIALS:
        weight_class = weight_class or classify_weight(weight)
        feed = feed if feed is not None else class_feed(weight_class, name)
        materials.append(Material(name, description, weight, weight_class, coating, feed, ptfe))
    return MaterialTable(materials)


def _layer_names(layers) -> Sequence[str]:
    # Accepts a LayerStack or a plain sequence of names
    return getattr(layers, "layers", layers)


def feed_rate_for(table: MaterialTable, layers) -> float:
    """Welding feed for a stack: the slowest material governs the seam."""
    names = _layer_names(layers)
    if not names:
        raise MaterialError("E_UNKNOWN_MATERIAL", "empty layer stack")
    return min(table.lookup(name).weld_feed for name in names)


def feed_policy_note(table: MaterialTable, layers) -> Optional[str]:
    """Report note when the min rule had to pick between different feeds."""
    names = _layer_names(layers)
    feeds = sorted({table.lookup(name).weld_feed for name in names})
    if len(feeds) < 2:
        return None
    feed_list = "/".join(f"{f:g}" for f in feeds)
    return f"mixed stack ({', '.join(names)}): feeds {feed_list} mm/min, slowest ({feeds[0]:g}) used"


def load_material_file(text: str, base: Optional[MaterialTable] = None) -> MaterialTable:
    """Merge a material file (one section per material) over ``base``.

    Keys present in the file replace the base entry's fields; new materials
    need either a weight class with a default speed or an explicit feed.
    """
    base = base if base is not None else builtin_table()
    merged = dict(base.items())
    doc = parse_design(text)
    for section in doc.sections:
        reject_unknown(section, set(MATERIAL_FILE_KEYS))
        values = {}
        for entry in section.entries:
            if entry.key in ("description", "weight_class", "coating"):
                values[entry.key] = text_value(entry)
            elif entry.key == "ptfe_layers":
                values[entry.key] = integer_value(entry)
            else:
                values[entry.key] = number_value(entry)

        current = merged.get(section.name)
        weight = values.get("areal_weight_gsm", current.areal_weight if current else 0.0)
        if "weight_class" in values:
            weight_class = values["weight_class"]
        elif current and "areal_weight_gsm" not in values:
            weight_class = current.weight_class
        else:
            weight_class = classify_weight(weight)
        if "weld_feed_mm_min" in values:
            feed = values["weld_feed_mm_min"]
        elif current and weight_class == current.weight_class:
            feed = current.weld_feed
        else:
            feed = class_feed(weight_class, section.name)

        if current:
            logger.debug(f"Material '{section.name}' overridden by user file")
        merged[section.name] = Material(
            name=section.name,
            description=values.get("description", current.description if current else section.name),
            areal_weight=weight,
            weight_class=weight_class,
            coating=values.get("coating", current.coating if current else "none"),
            weld_feed=feed,
            ptfe_layers=values.get("ptfe_layers", current.ptfe_layers if current else 1),
        )
    return MaterialTable(merged.values())


def materials_frame(table: MaterialTable) -> pd.DataFrame:
    """Tabular view of the table for the `materials` command."""
    rows = [
        {
            "name": m.name,
            "class": m.weight_class,
            "coating": m.coating,
            "g/m2": f"{m.areal_weight:g}" if m.areal_weight else "-",
            "weld feed": f"{m.weld_feed:g} mm/min",
            "ptfe": m.ptfe_layers,
            "description": m.description,
        }
        for m in table.values()
    ]
    return pd.DataFrame(rows, columns=["name", "class", "coating", "g/m2", "weld feed", "ptfe", "description"])
