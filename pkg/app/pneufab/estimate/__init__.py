"""Pouch-motor contraction model and measured reference results."""

from pneufab.estimate.model import (
    MAX_CONTRACTION,
    ReferenceResult,
    contraction_from_fraction,
    estimate_linear_contraction,
    pouch_fraction,
    reference_frame,
    reference_notes,
    reference_table,
)

__all__ = [
    'MAX_CONTRACTION',
    'ReferenceResult',
    'contraction_from_fraction',
    'estimate_linear_contraction',
    'pouch_fraction',
    'reference_frame',
    'reference_notes',
    'reference_table',
]
