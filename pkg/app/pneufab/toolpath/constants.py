"""
Machine defaults for the dual-tool welding/cutting gantry.

Only the travel envelope, the 250 ms welder switching floor and the 500 W
welder rating are published for the platform; every other value is a profile
default the operator can override in a machine file.
"""

# Travel envelope (mm)
TRAVEL = (720.0, 420.0, 110.0)

RAPID_RATE = 3000.0  # mm/min
SAFE_Z = 10.0  # mm above the mat surface
CUT_DEPTH = -1.0  # mm relative to the mat surface
SURFACE_Z = 20.0  # mat surface height (mm)
LIFT_HEIGHT = 2.0  # mm above the surface for corner lifts
WORK_ORIGIN = (100.0, 50.0)  # sheet origin on the bed (mm)
TOOL_OFFSET = (50.0, 0.0)  # knife reference to welder tip (mm)
HOME = (0.0, 0.0, 0.0)

WELDER_MIN_SWITCH_MS = 250
CORNER_LIFT_DEG = 15.0
WELDER_POWER_W = 500.0

# Feeds (mm/min)
CUT_FEED = 1000.0
PLUNGE_FEED = 300.0

# Logical channels and their default outputs
WELDER_POWER = "welder_power"
WELDER_STAGE = "welder_stage"
KNIFE_OSCILLATION = "knife_oscillation"
CHANNEL_MAP = {
    WELDER_POWER: 1,
    WELDER_STAGE: 2,
    KNIFE_OSCILLATION: 3,
}

# Digital output M-codes (on, off)
OUTPUT_ON_MCODE = 64
OUTPUT_OFF_MCODE = 65

# "spindle" drives the knife with M3/M5, "output" with the digital output pair
KNIFE_MODES = ("spindle", "output")

# Machine file keys: (section, dsl_key, field, kind)
PROFILE_KEYS = (
    ("machine", "travel_x_mm", "travel_x", "number"),
    ("machine", "travel_y_mm", "travel_y", "number"),
    ("machine", "travel_z_mm", "travel_z", "number"),
    ("machine", "rapid_rate_mm_min", "rapid_rate", "number"),
    ("machine", "safe_z_mm", "safe_z", "number"),
    ("machine", "cut_depth_mm", "cut_depth", "number"),
    ("machine", "surface_z_mm", "surface_z", "number"),
    ("machine", "lift_height_mm", "lift_height", "number"),
    ("machine", "tool_offset_x_mm", "tool_offset_x", "number"),
    ("machine", "tool_offset_y_mm", "tool_offset_y", "number"),
    ("machine", "work_origin_x_mm", "work_origin_x", "number"),
    ("machine", "work_origin_y_mm", "work_origin_y", "number"),
    ("machine", "home_x_mm", "home_x", "number"),
    ("machine", "home_y_mm", "home_y", "number"),
    ("machine", "home_z_mm", "home_z", "number"),
    ("machine", "welder_min_switch_ms", "welder_min_switch", "integer"),
    ("machine", "corner_lift_deg", "corner_lift_deg", "number"),
    ("machine", "welder_power_w", "welder_power_w", "number"),
    ("machine", "knife_mode", "knife_mode", "text"),
    ("channels", WELDER_POWER, WELDER_POWER, "integer"),
    ("channels", WELDER_STAGE, WELDER_STAGE, "integer"),
    ("channels", KNIFE_OSCILLATION, KNIFE_OSCILLATION, "integer"),
    ("channels", "output_on_mcode", "output_on", "integer"),
    ("channels", "output_off_mcode", "output_off", "integer"),
    ("feeds", "cut_mm_min", "cut_feed", "number"),
    ("feeds", "plunge_mm_min", "plunge_feed", "number"),
    ("feeds", "weld_mm_min", "weld_feed", "number"),
)
PROFILE_SECTIONS = ("machine", "channels", "feeds")

# Weld modes
CONTINUOUS = "continuous"
PULSED = "pulsed"
DEFAULT_DUTY = 50.0
DEFAULT_PERIOD_MS = 500.0

# Ordering improvements below this are float noise (mm)
IMPROVEMENT_EPS = 1e-9

# Up to this many paths the visit order is solved exactly (subset DP, 2^n states)
EXACT_ORDER_LIMIT = 8
