"""
Process constants shared by the pattern generators and the validator.

None of these are published for the welding platform; they are chosen so the
published sheet sizes (kirigami 100/125/150 × 150 mm) come out feasible.
"""

# Seam centerline distance from the outline (mm)
SEAL_INSET = 5.0

# Welder tip footprint, used for clearance maths only (mm)
WELD_WIDTH = 3.0

# Minimum distance between any cut and any weld centerline (mm)
CUT_CLEARANCE = 3.0

# Smallest inlet that takes a barbed fitting (mm)
MIN_INLET_WIDTH = 6.0

# Channel width enforced for families without a channel_gap parameter (mm)
MIN_CHANNEL_GAP = 6.0

# Clipping half-planes extend this many sheet diagonals past the sheet
HALF_PLANE_REACH = 10.0

# Default inlet for every family: (chamber id, edge)
DEFAULT_INLET_CHAMBER = "c0"
DEFAULT_INLET_EDGE = "bottom"

# Chamber id prefixes
PNEUNET_PREFIX = "c"
LOWER_NETWORK_PREFIX = "l"
UPPER_NETWORK_PREFIX = "u"
PASSAGE_PREFIX = "p"
BAND_PREFIX = "b"

# Sheet note codes: (code, severity)
SHEET_NOTES = (
    ("SYMMETRIC_STACK", "warning"),
    ("MIXED_FEED_STACK", "note"),
)
NOTE_SEVERITY = {code: severity for code, severity in SHEET_NOTES}
