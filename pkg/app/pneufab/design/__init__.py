"""Actuator design types and the design DSL."""

from pneufab.design.dsl import DesignDocument, Entry, Section, Token, parse_design
from pneufab.design.models import (
    ActuatorDesign,
    Family,
    InletSpec,
    KirigamiParams,
    LayerStack,
    PneuNetParams,
    RectPouchParams,
    TwistingParams,
)
from pneufab.design.typed import format_number, serialize_design, to_typed

__all__ = [
    'ActuatorDesign',
    'DesignDocument',
    'Entry',
    'Family',
    'InletSpec',
    'KirigamiParams',
    'LayerStack',
    'PneuNetParams',
    'RectPouchParams',
    'Section',
    'Token',
    'TwistingParams',
    'format_number',
    'parse_design',
    'serialize_design',
    'to_typed',
]
