"""
Design DSL vocabulary: families, sections, keys and defaults.
"""

# Actuator families, in the order the CLI lists them
FAMILIES = (
    "rect_pouch",
    "linear_pneunet",
    "bending_pneunet",
    "antagonistic_pneunet",
    "twisting_pneunet",
    "kirigami",
)

# Canonical section order for serialization
SECTION_ORDER = ("design", "layers", "params")

DEFAULT_INLET_WIDTH = 8.0
INLET_EDGES = ("bottom", "top", "left", "right")
INLET_KEY_PREFIX = "inlet_"

# Families that weld three layers into two chamber networks
THREE_LAYER_FAMILIES = ("antagonistic_pneunet",)

# Parameter keys per family: (dsl_key, field_name, default or None if required)
_PNEUNET_KEYS = (
    ("width_mm", "width", None),
    ("length_mm", "length", None),
    ("pouch_pitch_mm", "pouch_pitch", 20.0),
    ("channel_gap_mm", "channel_gap", 6.0),
)

FAMILY_PARAM_KEYS = {
    "rect_pouch": (
        ("width_mm", "width", None),
        ("height_mm", "height", None),
    ),
    "linear_pneunet": _PNEUNET_KEYS,
    "bending_pneunet": _PNEUNET_KEYS,
    "antagonistic_pneunet": _PNEUNET_KEYS,
    "twisting_pneunet": _PNEUNET_KEYS + (("incline_deg", "incline_deg", None),),
    "kirigami": (
        ("width_mm", "width", None),
        ("height_mm", "height", None),
        ("cut_length_mm", "cut_length", 20.0),
        ("ligament_mm", "ligament", 5.0),
        ("row_pitch_mm", "row_pitch", 10.0),
        ("margin_mm", "margin", 10.0),
        ("channel_width_mm", "channel_width", 10.0),
    ),
}

# Unit suffixes: lengths must be > 0, angles in [0, 90)
LENGTH_SUFFIX = "_mm"
ANGLE_SUFFIX = "_deg"
MAX_ANGLE_DEG = 90.0
