"""
Measured actuator results kept beside the geometric model.
"""

# (family, variant, width mm or None, pressure kPa, strain, note)
REFERENCE_RESULTS = (
    ("linear_pneunet", "tpu_nylon", None, 50.0, 0.34, "maximum contraction"),
    ("linear_pneunet", "velostat", None, 50.0, 0.32, "conductive linear actuator"),
    ("kirigami", "w100", 100.0, 50.0, -0.17, "height 150 mm"),
    ("kirigami", "w125", 125.0, 50.0, -0.40, "height 150 mm"),
    ("kirigami", "w150", 150.0, 50.0, -0.42, "height 150 mm"),
)

REFERENCE_NOTES = (
    "kirigami actuators held 100 kPa without delamination",
    "kirigami actuator lifted a 50 g load",
)

SUPPORTED_FAMILIES = ("linear_pneunet", "bending_pneunet")
