"""
DesignDocument <-> ActuatorDesign conversion.

to_typed consumes every key exactly once and reports the offending line;
serialize_design writes the canonical form (fixed section order, sorted keys,
shortest round-tripping numbers).
"""

import logging
import math
from typing import TYPE_CHECKING, Dict, List, Tuple

import numpy as np

from pneufab.design.constants import (
    DEFAULT_INLET_WIDTH,
    FAMILIES,
    FAMILY_PARAM_KEYS,
    INLET_EDGES,
    INLET_KEY_PREFIX,
    SECTION_ORDER,
)
from pneufab.design.dsl import (
    IDENT_RE,
    DesignDocument,
    Entry,
    Section,
    ident_value,
    reject_unknown,
    require,
    require_entry,
    text_value,
    unit_checked,
)
from pneufab.design.models import (
    PARAMS_CLASS,
    ActuatorDesign,
    Family,
    InletSpec,
    LayerStack,
)
from pneufab.errors import DesignError, MaterialError

if TYPE_CHECKING:
    from pneufab.materials.table import MaterialTable

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# to_typed
# ---------------------------------------------------------------------------

def _parse_inlet(entry: Entry) -> InletSpec:
    if len(entry.values) != 3:
        raise DesignError("E_BAD_VALUE", f"'{entry.key}' needs chamber_id, edge, offset", entry.line)
    chamber, edge, offset = entry.values
    if chamber.kind != "IDENT":
        raise DesignError("E_BAD_VALUE", f"inlet chamber id must be an identifier, got {chamber.text!r}", entry.line)
    if edge.text not in INLET_EDGES or edge.kind != "IDENT":
        raise DesignError("E_BAD_VALUE", f"inlet edge must be one of {', '.join(INLET_EDGES)}", entry.line)
    if offset.kind != "NUMBER" or float(offset.text) < 0:
        raise DesignError("E_BAD_VALUE", f"inlet offset must be a number >= 0, got {offset.text!r}", entry.line)
    if not math.isfinite(float(offset.text)):
        raise DesignError("E_BAD_VALUE", f"inlet offset in '{entry.key}' is out of range", entry.line)
    return InletSpec(chamber.text, edge.text, float(offset.text))


def _inlet_keys(section: Section) -> List[Entry]:
    inlets = []
    for entry in section.entries:
        if entry.key.startswith(INLET_KEY_PREFIX):
            suffix = entry.key[len(INLET_KEY_PREFIX):]
            if not (suffix.isascii() and suffix.isdigit()) or suffix.startswith("0"):
                raise DesignError("E_UNKNOWN_KEY", f"unknown key '{entry.key}' in [layers]", entry.line)
            inlets.append(entry)
    return sorted(inlets, key=lambda e: int(e.key[len(INLET_KEY_PREFIX):]))


def _layers(section: Section, family: Family, materials: "MaterialTable") -> LayerStack:
    inlet_entries = _inlet_keys(section)
    allowed = {"bottom", "middle", "top"} | {e.key for e in inlet_entries}
    reject_unknown(section, allowed)

    names = []
    for key in ("bottom", "middle", "top"):
        entry = section.get(key)
        if entry is None:
            if key != "middle":
                raise DesignError("E_MISSING_KEY", f"missing key '{key}' in [layers]", section.line)
            continue
        name = ident_value(entry)
        if name not in materials:
            raise MaterialError("E_UNKNOWN_MATERIAL", f"unknown material '{name}'", entry.line)
        names.append(name)

    if len(names) != family.layer_count:
        raise DesignError(
            "E_BAD_VALUE",
            f"{family.value} needs {family.layer_count} layers, got {len(names)}",
            section.line,
        )

    inlets = tuple(_parse_inlet(e) for e in inlet_entries)
    if family.layer_count == 3:
        if len(inlets) != 2:
            raise DesignError("E_BAD_VALUE", f"{family.value} needs exactly 2 inlets, got {len(inlets)}", section.line)
        if inlets[0].chamber_id == inlets[1].chamber_id:
            raise DesignError("E_BAD_VALUE", "antagonistic inlets must feed distinct chambers", section.line)
    elif len(inlets) > 1:
        raise DesignError("E_BAD_VALUE", f"{family.value} takes at most 1 inlet, got {len(inlets)}", section.line)
    return LayerStack(tuple(names), inlets)


def _params(section: Section, family: Family):
    table = FAMILY_PARAM_KEYS[family.value]
    reject_unknown(section, {key for key, _, _ in table})
    values: Dict[str, float] = {}
    for key, field_name, default in table:
        entry = section.get(key)
        if entry is None:
            if default is None:
                raise DesignError("E_MISSING_KEY", f"missing key '{key}' in [params]", section.line)
            values[field_name] = default
        else:
            values[field_name] = unit_checked(entry)
    return PARAMS_CLASS[family](**values)


def to_typed(doc: DesignDocument, materials: "MaterialTable") -> ActuatorDesign:
    """Resolve a parsed document into an ActuatorDesign.

    Raises:
        DesignError: E_UNKNOWN_KEY, E_MISSING_KEY or E_BAD_VALUE.
        MaterialError: E_UNKNOWN_MATERIAL.
    """
    for section in doc.sections:
        if section.name not in SECTION_ORDER:
            raise DesignError("E_UNKNOWN_KEY", f"unknown section [{section.name}]", section.line)

    design = require(doc.section("design"), "design")
    reject_unknown(design, {"name", "type", "inlet_width_mm"})
    name = text_value(require_entry(design, "name"))
    type_entry = require_entry(design, "type")
    family_name = ident_value(type_entry)
    if family_name not in FAMILIES:
        raise DesignError("E_BAD_VALUE", f"unknown actuator type '{family_name}'", type_entry.line)
    family = Family(family_name)

    width_entry = design.get("inlet_width_mm")
    inlet_width = unit_checked(width_entry) if width_entry else DEFAULT_INLET_WIDTH

    layers = _layers(require(doc.section("layers"), "layers"), family, materials)
    params = _params(require(doc.section("params"), "params"), family)
    logger.debug(f"Typed design '{name}' ({family.value}, {len(layers.layers)} layers)")
    return ActuatorDesign(name, family, layers, params, inlet_width)


# ---------------------------------------------------------------------------
# serialize_design
# ---------------------------------------------------------------------------

def format_number(value: float) -> str:
    """Shortest positional decimal that parses back to the same float."""
    return np.format_float_positional(float(value), trim="-")


def format_text(value: str) -> str:
    if IDENT_RE.fullmatch(value):
        return value
    escaped = value.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def _section_text(name: str, items: List[Tuple[str, str]]) -> str:
    lines = [f"[{name}]"] + [f"{key} = {value}" for key, value in sorted(items)]
    return "\n".join(lines) + "\n"


def serialize_design(d: ActuatorDesign) -> str:
    design = [
        ("name", format_text(d.name)),
        ("type", d.family.value),
        ("inlet_width_mm", format_number(d.inlet_width)),
    ]

    layer_keys = ("bottom", "top") if len(d.layers.layers) == 2 else ("bottom", "middle", "top")
    layers = list(zip(layer_keys, d.layers.layers))
    for i, inlet in enumerate(d.layers.inlets, start=1):
        layers.append((
            f"{INLET_KEY_PREFIX}{i}",
            f"{inlet.chamber_id}, {inlet.edge}, {format_number(inlet.offset)}",
        ))

    params = [
        (key, format_number(getattr(d.params, field_name)))
        for key, field_name, _ in FAMILY_PARAM_KEYS[d.family.value]
    ]
    return "\n".join([
        _section_text("design", design),
        _section_text("layers", layers),
        _section_text("params", params),
    ])
