"""
Built-in fabric table and weight-class welding speeds.
"""

WEIGHT_CLASSES = ("light", "medium", "heavy", "film", "conductive")
COATINGS = ("TPU", "PU", "none")

# Welding feed by weight class for coated textiles (mm/min)
CLASS_FEED_RATES = {
    "light": 200.0,
    "medium": 160.0,
    "heavy": 100.0,
}

# Areal weight upper bounds (g/m²) for classifying coated textiles
WEIGHT_CLASS_LIMITS = (
    (200.0, "light"),
    (350.0, "medium"),
)
HEAVIEST_CLASS = "heavy"

# (name, description, areal_weight_gsm, weight_class, coating, weld_feed_mm_min, ptfe_layers)
# None for weight_class means "classify by areal weight"; None for the feed means
# "take the class speed".
BUILTIN_MATERIALS = (
    ("tpu_nylon_light", "TPU-coated nylon, lightweight", 170.0, "light", "TPU", 200.0, 1),
    ("tpu_nylon_medium", "TPU-coated nylon, medium-weight", 275.0, "medium", "TPU", 160.0, 1),
    ("tpu_nylon_heavy", "TPU-coated nylon, heavy-weight", 450.0, "heavy", "TPU", 100.0, 1),
    ("velostat", "Velostat conductive film", 0.0, "conductive", "none", 250.0, 1),
    ("pet_film", "PET film (non-textile)", 0.0, "film", "none", 120.0, 2),
    ("tpu_ripstop_20d", "TPU-coated 20D ripstop nylon", 0.0, "light", "TPU", None, 1),
    ("pu_polyester", "PU-coated polyester", 240.0, None, "PU", None, 1),
    ("pu_nylon", "PU-coated nylon", 130.0, None, "PU", None, 1),
)

# Material file keys
MATERIAL_FILE_KEYS = (
    "description",
    "areal_weight_gsm",
    "weight_class",
    "coating",
    "weld_feed_mm_min",
    "ptfe_layers",
)
