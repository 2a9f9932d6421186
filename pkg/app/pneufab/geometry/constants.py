"""
Numeric tolerances for the 2D kernel.
"""

# Coordinate equality
COORD_EPS = 1e-9

# Points within this distance of a polygon edge classify as boundary
BOUNDARY_BAND = 1e-9

# Smallest polygon area the offset operation accepts (mm²)
DEGENERATE_AREA = 1e-6

# Segments per quarter circle for round joins: chord error r·(1 − cos(π/128)),
# below 0.1 mm up to r ≈ 330 mm.
OFFSET_QUAD_SEGS = 32

# Generated coordinates live on a 1 µm grid (matches 3-decimal G-code)
GRID_DECIMALS = 3
GRID_STEP = 10.0 ** -GRID_DECIMALS
