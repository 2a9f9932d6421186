"""
Preview styling. 1 mm = 1 SVG user unit.
"""

PADDING = 10.0  # mm around the drawing
DECIMALS = 3

SVG_NS = "http://www.w3.org/2000/svg"

# class -> (stroke, stroke width, fill)
STYLES = {
    "bed": ("#b0b0b0", 0.5, "none"),
    "outline": ("#000000", 0.4, "none"),
    "welds": ("#d62728", 0.8, "none"),
    "cuts": ("#1f77b4", 0.3, "none"),
    "chambers": ("none", 0.0, "#ffe9a8"),
    "inlets": ("#2ca02c", 1.0, "none"),
    "rapids": ("#9467bd", 0.2, "none"),
    "weld-moves": ("#d62728", 0.8, "none"),
    "cut-moves": ("#1f77b4", 0.3, "none"),
}

# Drawing order, bottom to top
SHEET_GROUPS = ("bed", "chambers", "outline", "welds", "cuts", "inlets")
TOOLPATH_GROUPS = ("bed", "rapids", "weld-moves", "cut-moves")
