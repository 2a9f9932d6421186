"""2D geometry kernel."""

from pneufab.geometry.kernel import (
    Containment,
    Point,
    Polygon,
    Polyline,
    as_line,
    as_shape,
    bbox,
    contains,
    heading_deg,
    intersects,
    length,
    min_distance,
    offset,
    point_at,
    polygon_from_shape,
    rectangle,
    rotate_about,
    segment,
    signed_area,
    snap,
    snap_coords,
    snap_down,
    snap_up,
    translate,
)

__all__ = [
    'Containment',
    'Point',
    'Polygon',
    'Polyline',
    'as_line',
    'as_shape',
    'bbox',
    'contains',
    'heading_deg',
    'intersects',
    'length',
    'min_distance',
    'offset',
    'point_at',
    'polygon_from_shape',
    'rectangle',
    'rotate_about',
    'segment',
    'signed_area',
    'snap',
    'snap_coords',
    'snap_down',
    'snap_up',
    'translate',
]
