"""
Minimal 2D kernel: points, polylines, polygons and the handful of queries the
pattern generators and validator need.

Value types are immutable. Predicates and distances delegate to shapely,
whose orientation tests are robust; lengths are plain numpy sums.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from shapely.geometry import LineString
from shapely.geometry import Point as ShapelyPoint
from shapely.geometry import Polygon as ShapelyPolygon
from shapely.geometry.polygon import orient
from shapely.validation import explain_validity

from pneufab.errors import GeometryError
from pneufab.geometry.constants import (
    BOUNDARY_BAND,
    COORD_EPS,
    DEGENERATE_AREA,
    GRID_DECIMALS,
    OFFSET_QUAD_SEGS,
)

logger = logging.getLogger(__name__)

Coord = Tuple[float, float]


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError("E_BAD_GEOMETRY", f"non-finite point ({self.x}, {self.y})")

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Polyline:
    """Ordered points; closed polylines imply the segment back to the start."""

    points: Tuple[Point, ...]
    closed: bool = False

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        minimum = 3 if self.closed else 2
        if len(pts) < minimum:
            raise GeometryError(
                "E_BAD_GEOMETRY", f"polyline needs at least {minimum} points, got {len(pts)}"
            )
        for i in range(1, len(pts)):
            if pts[i - 1].distance_to(pts[i]) <= COORD_EPS:
                raise GeometryError("E_BAD_GEOMETRY", f"repeated point at index {i}")
        if self.closed and pts[0].distance_to(pts[-1]) <= COORD_EPS:
            raise GeometryError("E_BAD_GEOMETRY", "closed polyline repeats its first point")

    @classmethod
    def from_coords(cls, coords: Iterable[Sequence[float]], closed: bool = False) -> "Polyline":
        return cls(tuple(Point(float(x), float(y)) for x, y in coords), closed)

    def coords(self) -> List[Coord]:
        return [(p.x, p.y) for p in self.points]

    @property
    def start(self) -> Point:
        return self.points[0]

    @property
    def end(self) -> Point:
        return self.points[0] if self.closed else self.points[-1]

    def reversed(self) -> "Polyline":
        return Polyline(tuple(reversed(self.points)), self.closed)


@dataclass(frozen=True)
class Polygon:
    """Closed simple ring; positive signed area means counterclockwise."""

    points: Tuple[Point, ...]

    def __post_init__(self):
        ring = Polyline(tuple(self.points), closed=True)
        object.__setattr__(self, "points", ring.points)
        if signed_area(self) == 0.0:
            raise GeometryError("E_DEGENERATE", "polygon has zero area")

    @classmethod
    def from_coords(cls, coords: Iterable[Sequence[float]]) -> "Polygon":
        return cls(tuple(Point(float(x), float(y)) for x, y in coords))

    def coords(self) -> List[Coord]:
        return [(p.x, p.y) for p in self.points]

    def as_polyline(self) -> Polyline:
        return Polyline(self.points, closed=True)

    @property
    def area(self) -> float:
        return abs(signed_area(self))


class Containment(str, Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


# ---------------------------------------------------------------------------
# shapely bridges
# ---------------------------------------------------------------------------

def as_line(p: Polyline) -> LineString:
    coords = p.coords()
    if p.closed:
        coords.append(coords[0])
    return LineString(coords)


def as_shape(poly: Polygon) -> ShapelyPolygon:
    return ShapelyPolygon(poly.coords())


def polygon_from_shape(shape: ShapelyPolygon) -> Polygon:
    """Counterclockwise exterior ring of a shapely polygon.

    Holes are dropped: growing a concave ring can close a bay into a hole, and
    the filled region is the conservative clearance zone.
    """
    if shape.interiors:
        logger.debug(f"Dropping {len(shape.interiors)} hole(s) from offset result")
    ring = list(orient(shape, 1.0).exterior.coords)[:-1]
    cleaned: List[Coord] = []
    for x, y in ring:
        if cleaned and math.hypot(x - cleaned[-1][0], y - cleaned[-1][1]) <= COORD_EPS:
            continue
        cleaned.append((x, y))
    return Polygon.from_coords(cleaned)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def signed_area(poly: Polygon) -> float:
    pts = np.asarray(poly.coords(), dtype=float)
    x, y = pts[:, 0], pts[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def length(p: Polyline) -> float:
    """Sum of segment lengths, closing segment included for closed polylines."""
    pts = np.asarray(p.coords(), dtype=float)
    if p.closed:
        pts = np.vstack([pts, pts[:1]])
    return float(np.hypot(*np.diff(pts, axis=0).T).sum())


def offset(poly: Polygon, d: float) -> List[Polygon]:
    """Round-joined offset; d > 0 grows, d < 0 shrinks, collapse gives [].

    Raises:
        GeometryError: E_DEGENERATE below the minimum area, E_NOT_SIMPLE for a
            self-intersecting ring.
    """
    if poly.area < DEGENERATE_AREA:
        raise GeometryError("E_DEGENERATE", f"polygon area {poly.area:.3g} mm² below {DEGENERATE_AREA}")
    shape = as_shape(poly)
    if not shape.is_valid:
        raise GeometryError("E_NOT_SIMPLE", f"polygon is not simple: {explain_validity(shape)}")
    if d == 0:
        return [poly]
    grown = shape.buffer(d, quad_segs=OFFSET_QUAD_SEGS, join_style="round")
    if grown.is_empty:
        return []
    parts = [grown] if isinstance(grown, ShapelyPolygon) else list(grown.geoms)
    return [polygon_from_shape(part) for part in parts if part.area >= DEGENERATE_AREA]


def min_distance(a: Polyline, b: Polyline) -> float:
    return float(as_line(a).distance(as_line(b)))


def intersects(a: Polyline, b: Polyline) -> bool:
    """True when any segments touch or cross, endpoints included."""
    return bool(as_line(a).intersects(as_line(b)))


def contains(poly: Polygon, p: Point) -> Containment:
    shape = as_shape(poly)
    pt = ShapelyPoint(p.x, p.y)
    if shape.exterior.distance(pt) <= BOUNDARY_BAND:
        return Containment.BOUNDARY
    return Containment.INSIDE if shape.contains(pt) else Containment.OUTSIDE


# ---------------------------------------------------------------------------
# Helpers used by generators and planners
# ---------------------------------------------------------------------------

def snap(value: float) -> float:
    """Round to the 1 µm grid (never returns -0.0)."""
    return round(value, GRID_DECIMALS) + 0.0


def snap_down(value: float) -> float:
    """Largest grid value not above ``value`` (float noise below 1e-6 µm ignored)."""
    scale = 10 ** GRID_DECIMALS
    return math.floor(round(value * scale, 6)) / scale + 0.0


def snap_up(value: float) -> float:
    scale = 10 ** GRID_DECIMALS
    return math.ceil(round(value * scale, 6)) / scale + 0.0


def snap_coords(coords: Iterable[Sequence[float]]) -> List[Coord]:
    return [(snap(x), snap(y)) for x, y in coords]


def rectangle(x0: float, y0: float, x1: float, y1: float) -> Polygon:
    """Axis-aligned counterclockwise rectangle."""
    return Polygon.from_coords([(x0, y0), (x1, y0), (x1, y1), (x0, y1)])


def segment(a: Coord, b: Coord) -> Polyline:
    return Polyline.from_coords([a, b])


def bbox(coords: Iterable[Sequence[float]]) -> Tuple[float, float, float, float]:
    pts = np.asarray(list(coords), dtype=float)
    return (
        float(pts[:, 0].min()),
        float(pts[:, 1].min()),
        float(pts[:, 0].max()),
        float(pts[:, 1].max()),
    )


def translate(p: Polyline, dx: float, dy: float) -> Polyline:
    return Polyline.from_coords([(x + dx, y + dy) for x, y in p.coords()], p.closed)


def rotate_about(p: Polyline, center: Coord, degrees: float) -> Polyline:
    a = math.radians(degrees)
    c, s = math.cos(a), math.sin(a)
    cx, cy = center
    return Polyline.from_coords(
        [(cx + c * (x - cx) - s * (y - cy), cy + s * (x - cx) + c * (y - cy)) for x, y in p.coords()],
        p.closed,
    )


def heading_deg(a: Coord, b: Coord) -> float:
    return math.degrees(math.atan2(b[1] - a[1], b[0] - a[0]))


def point_at(p: Polyline, arc: float) -> Coord:
    """Point at arc length ``arc`` from the start (clamped to the path)."""
    point = as_line(p).interpolate(max(0.0, arc))
    return (point.x, point.y)
