"""Fabric materials and welding speeds."""

from pneufab.materials.table import (
    Material,
    MaterialTable,
    builtin_table,
    classify_weight,
    feed_policy_note,
    feed_rate_for,
    load_material_file,
    materials_frame,
)

__all__ = [
    'Material',
    'MaterialTable',
    'builtin_table',
    'classify_weight',
    'feed_policy_note',
    'feed_rate_for',
    'load_material_file',
    'materials_frame',
]
