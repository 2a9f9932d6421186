"""Sheet validation: findings instead of exceptions."""

from pneufab.validate.validator import (
    Finding,
    Tolerances,
    ValidationReport,
    check_connectivity,
    validate_sheet,
)

__all__ = [
    'Finding',
    'Tolerances',
    'ValidationReport',
    'check_connectivity',
    'validate_sheet',
]
