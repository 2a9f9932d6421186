"""
G-code dialect subset shared by the emitter, parser and simulator.
"""

# Word letters the parser accepts
LETTERS = "GMXYZAFP"
AXES = ("X", "Y", "Z")

RAPID = 0
FEED = 1
DWELL = 4
MILLIMETRES = 21
ABSOLUTE = 90
G_CODES = (RAPID, FEED, DWELL, MILLIMETRES, ABSOLUTE)

SPINDLE_ON = 3
SPINDLE_OFF = 5
PROGRAM_END = 30
# M64/M65 are profile-configurable and added per machine
M_CODES = (SPINDLE_ON, SPINDLE_OFF, PROGRAM_END)

COORD_DECIMALS = 3
DWELL_DECIMALS = 3

# Comment that switches the tool the simulator attributes motion to
TOOL_COMMENT_PREFIX = "tool "
PROGRAM_COMMENT_PREFIX = "pneufab program: "

# Round-trip acceptance (mm, degrees)
ROUNDTRIP_TOLERANCE = 1e-6
