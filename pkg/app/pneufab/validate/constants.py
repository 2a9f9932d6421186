"""
Validation finding codes and severities.
"""

# (code, severity, check)
FINDING_CODES = (
    ("NO_INLET", "error", "seam"),
    ("SEAM_OPEN", "error", "seam"),
    ("INLET_BLOCKED", "error", "seam"),
    ("INLET_GAP_MISMATCH", "error", "seam"),
    ("CUT_CLEARANCE", "error", "clearance"),
    ("CUT_IN_CHAMBER", "error", "containment"),
    ("CUT_OUTSIDE_OUTLINE", "error", "containment"),
    ("REGION_CROSSES_WELD", "error", "regions"),
    ("CHAMBER_OVERLAP", "error", "regions"),
    ("WELD_CROSSING", "warning", "regions"),
    ("INLET_UNKNOWN_CHAMBER", "error", "connectivity"),
    ("INLET_NOT_ON_CHAMBER", "error", "connectivity"),
    ("CHANNEL_UNKNOWN_CHAMBER", "error", "connectivity"),
    ("CHANNEL_TOO_NARROW", "error", "connectivity"),
    ("CROSS_NETWORK_CHANNEL", "error", "connectivity"),
    ("CHAMBER_UNREACHABLE", "error", "connectivity"),
    ("BED_EXCEEDED", "error", "bed"),
    ("INLET_TOO_NARROW", "error", "inlet"),
)

CODE_SEVERITY = {code: severity for code, severity, _ in FINDING_CODES}

# Uncovered seam pieces shorter than this are float noise (mm)
MIN_OPEN_LENGTH = 1e-4

# Clearance comparisons forgive this much (mm)
CLEARANCE_EPS = 1e-9
