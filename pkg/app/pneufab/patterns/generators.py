"""
Family generators: design parameters in, PatternSheet out.

Sheet coordinates put the outline at (0, 0)-(w, h); pneunets run their length
along y. Every generated coordinate sits on the 1 µm grid so the G-code
written later reproduces it exactly.
"""

import logging
import math
from dataclasses import replace
from typing import List, Optional, Sequence, Tuple

from shapely.geometry import LineString
from shapely.geometry import Point as ShapelyPoint
from shapely.geometry import Polygon as ShapelyPolygon
from shapely.geometry import box
from shapely.ops import nearest_points, substring

from pneufab.design.constants import DEFAULT_INLET_WIDTH
from pneufab.design.models import (
    ActuatorDesign,
    Family,
    InletSpec,
    KirigamiParams,
    LayerStack,
    PneuNetParams,
    TwistingParams,
)
from pneufab.errors import PatternError, PatternInfeasible
from pneufab.geometry import Polygon, Polyline, as_shape, signed_area, snap, snap_coords, snap_down, snap_up
from pneufab.geometry.constants import COORD_EPS, DEGENERATE_AREA
from pneufab.materials import MaterialTable, builtin_table, feed_policy_note
from pneufab.patterns.constants import (
    BAND_PREFIX,
    DEFAULT_INLET_CHAMBER,
    DEFAULT_INLET_EDGE,
    HALF_PLANE_REACH,
    LOWER_NETWORK_PREFIX,
    MIN_CHANNEL_GAP,
    PASSAGE_PREFIX,
    PNEUNET_PREFIX,
    UPPER_NETWORK_PREFIX,
)
from pneufab.patterns.models import (
    Chamber,
    ChamberGraph,
    Channel,
    Inlet,
    PatternSheet,
    ProcessSettings,
    SheetNote,
)

logger = logging.getLogger(__name__)

Coord = Tuple[float, float]

# Tolerance for "gap lies on the chamber boundary"
_ON_BOUNDARY = 1e-6


# ---------------------------------------------------------------------------
# Grid helpers
# ---------------------------------------------------------------------------

def _grid_points(coords: Sequence[Sequence[float]], closed: bool = False) -> List[Coord]:
    points: List[Coord] = []
    for point in snap_coords(coords):
        if points and points[-1] == point:
            continue
        points.append(point)
    if closed and len(points) > 1 and points[0] == points[-1]:
        points.pop()
    return points


def _path(coords: Sequence[Sequence[float]], closed: bool = False) -> Polyline:
    return Polyline.from_coords(_grid_points(coords, closed), closed)


def _region(coords: Sequence[Sequence[float]]) -> Polygon:
    """Counterclockwise grid polygon starting at its lowest, then leftmost vertex."""
    points = _grid_points(coords, closed=True)
    polygon = Polygon.from_coords(points)
    if signed_area(polygon) < 0:
        points.reverse()
    start = min(range(len(points)), key=lambda i: (points[i][1], points[i][0]))
    return Polygon.from_coords(points[start:] + points[:start])


def _rect(x0: float, y0: float, x1: float, y1: float) -> Polygon:
    return _region([(x0, y0), (x1, y0), (x1, y1), (x0, y1)])


# ---------------------------------------------------------------------------
# Seam and inlets
# ---------------------------------------------------------------------------

def _check_sheet(width: float, height: float, settings: ProcessSettings) -> None:
    s = settings.seal_inset
    if width <= 2 * s or height <= 2 * s:
        raise PatternInfeasible(
            f"{width:g} × {height:g} mm sheet leaves no room inside the {s:g} mm seal inset",
            "SEAM_OPEN",
        )


def _inlet_gap(spec: InletSpec, width: float, height: float, inlet_width: float,
               settings: ProcessSettings) -> Tuple[Coord, Coord]:
    """Gap endpoints on the seam for an inlet measured along its outline edge."""
    s = settings.seal_inset
    horizontal = spec.edge in ("bottom", "top")
    extent = width if horizontal else height
    lo, hi = snap(spec.offset - inlet_width / 2), snap(spec.offset + inlet_width / 2)
    if lo <= s or hi >= extent - s:
        raise PatternInfeasible(
            f"inlet at {spec.offset:g} mm on the {spec.edge} edge does not fit between the seam corners",
            "INLET_GAP_MISMATCH",
        )
    fixed = snap({"bottom": s, "top": height - s, "left": s, "right": width - s}[spec.edge])
    if horizontal:
        return (lo, fixed), (hi, fixed)
    return (fixed, lo), (fixed, hi)


def _seam(width: float, height: float, gaps: Sequence[Tuple[Coord, Coord]],
          settings: ProcessSettings) -> List[Polyline]:
    """Perimeter seam inset by the seal inset, one open polyline between consecutive gaps."""
    s = settings.seal_inset
    ring_coords = _grid_points([(s, s), (width - s, s), (width - s, height - s), (s, height - s)])
    if not gaps:
        return [_path(ring_coords, closed=True)]

    ring = LineString(ring_coords + ring_coords[:1])
    perimeter = ring.length
    spans = sorted(
        tuple(sorted((ring.project(ShapelyPoint(a)), ring.project(ShapelyPoint(b)))))
        for a, b in gaps
    )
    for (_, end), (start, _) in zip(spans, spans[1:]):
        if start <= end + COORD_EPS:
            raise PatternInfeasible("inlet gaps overlap on the seam", "INLET_GAP_MISMATCH")

    doubled = LineString(ring_coords + ring_coords + ring_coords[:1])
    pieces = []
    for k, (_, end) in enumerate(spans):
        following = spans[(k + 1) % len(spans)][0]
        if k == len(spans) - 1:
            following += perimeter
        pieces.append(_path(substring(doubled, end, following).coords))
    return pieces


def _resolve_inlets(specs: Sequence[InletSpec], gaps: Sequence[Tuple[Coord, Coord]],
                    graph: ChamberGraph) -> Tuple[Inlet, ...]:
    inlets = []
    for spec, (a, b) in zip(specs, gaps):
        chamber = graph.get(spec.chamber_id)
        if chamber is None:
            raise PatternInfeasible(
                f"inlet names unknown chamber '{spec.chamber_id}'", "INLET_UNKNOWN_CHAMBER"
            )
        boundary = as_shape(chamber.region).exterior.buffer(_ON_BOUNDARY)
        if not boundary.contains(LineString([a, b])):
            raise PatternInfeasible(
                f"inlet on the {spec.edge} edge at {spec.offset:g} mm does not open into chamber "
                f"'{spec.chamber_id}'",
                "INLET_NOT_ON_CHAMBER",
            )
        inlets.append(Inlet(spec.chamber_id, _path([a, b]), spec.edge, spec.offset))
    return tuple(inlets)


def _build_sheet(width: float, height: float, interior_welds: Sequence[Polyline],
                 cut_paths: Sequence[Polyline], graph: ChamberGraph, specs: Sequence[InletSpec],
                 inlet_width: float, settings: ProcessSettings) -> PatternSheet:
    if inlet_width >= min(width, height):
        raise PatternInfeasible(
            f"inlet width {inlet_width:g} mm does not fit the {min(width, height):g} mm edge",
            "INLET_GAP_MISMATCH",
        )
    gaps = [_inlet_gap(spec, width, height, inlet_width, settings) for spec in specs]
    inlets = _resolve_inlets(specs, gaps, graph)
    seam = _seam(width, height, gaps, settings)
    return PatternSheet(
        outline=_rect(0.0, 0.0, width, height),
        weld_paths=tuple(seam) + tuple(interior_welds),
        cut_paths=tuple(cut_paths),
        chambers=graph,
        inlets=inlets,
        inlet_width=inlet_width,
        settings=settings,
    )


def _default_inlet(width: float, inlets: Sequence[InletSpec],
                   chamber_id: str = DEFAULT_INLET_CHAMBER,
                   offset: Optional[float] = None) -> Tuple[InletSpec, ...]:
    if inlets:
        return tuple(inlets)
    return (InletSpec(chamber_id, DEFAULT_INLET_EDGE, width / 2 if offset is None else offset),)


# ---------------------------------------------------------------------------
# Rectangular pouch
# ---------------------------------------------------------------------------

def gen_rect_pouch(width: float, height: float, inlet_width: float = DEFAULT_INLET_WIDTH,
                   inlets: Sequence[InletSpec] = (),
                   settings: Optional[ProcessSettings] = None) -> PatternSheet:
    settings = settings or ProcessSettings()
    _check_sheet(width, height, settings)
    s = settings.seal_inset
    graph = ChamberGraph((Chamber(DEFAULT_INLET_CHAMBER, _rect(s, s, width - s, height - s)),))
    return _build_sheet(width, height, (), (), graph, _default_inlet(width, inlets),
                        inlet_width, settings)


# ---------------------------------------------------------------------------
# Pneunets
# ---------------------------------------------------------------------------

def _pneunet_rows(width: float, length: float, pitch: float, gap: float,
                  settings: ProcessSettings) -> List[float]:
    """Chamber boundaries along y: seam, interior line positions, seam."""
    _check_sheet(width, length, settings)
    s, ww = settings.seal_inset, settings.weld_width
    if width - 2 * s - gap < ww:
        raise PatternInfeasible(
            f"channel gap {gap:g} mm leaves transverse welds shorter than the {ww:g} mm weld width",
            "CHANNEL_TOO_NARROW",
        )
    # round half up
    n = max(1, math.floor(length / pitch + 0.5))
    ys = [snap(s)] + [snap(length / 2 + (k - n / 2) * pitch) for k in range(1, n)] + [snap(length - s)]
    for lo, hi in zip(ys, ys[1:]):
        if hi - lo < ww:
            raise PatternInfeasible(
                f"pouch between y={lo:g} and y={hi:g} mm is narrower than the {ww:g} mm weld width",
                "REGION_CROSSES_WELD",
            )
    return ys


def _linear_geometry(width: float, length: float, pitch: float, gap: float,
                     settings: ProcessSettings):
    """Transverse welds, channel gap segments and chamber regions of a linear pneunet."""
    s = settings.seal_inset
    ys = _pneunet_rows(width, length, pitch, gap, settings)
    welds, channels = [], []
    for k, y in enumerate(ys[1:-1], start=1):
        if k % 2:
            welds.append(_path([(s, y), (width - s - gap, y)]))
            channels.append(_path([(width - s - gap, y), (width - s, y)]))
        else:
            welds.append(_path([(width - s, y), (s + gap, y)]))
            channels.append(_path([(s, y), (s + gap, y)]))
    regions = [_rect(s, lo, width - s, hi) for lo, hi in zip(ys, ys[1:])]
    return welds, channels, regions


def _free_end_trim(free: Coord, direction: Coord, gap: float, width: float, length: float,
                   settings: ProcessSettings) -> float:
    """Distance to walk from the free end toward the attached end to open ``gap``."""
    s = settings.seal_inset
    x, y = free
    walls = (
        (x - s, direction[0]),
        (width - s - x, -direction[0]),
        (y - s, direction[1]),
        (length - s - y, -direction[1]),
    )
    trim = max([0.0] + [(gap - dist) / rate for dist, rate in walls if rate > COORD_EPS])
    if any(dist + rate * trim < gap - COORD_EPS for dist, rate in walls):
        raise PatternInfeasible(
            f"inclined weld at ({x:.3f}, {y:.3f}) cannot keep a {gap:g} mm opening",
            "CHANNEL_TOO_NARROW",
        )
    return trim


def _half_plane(center: Coord, u: Coord, normal: Coord, reach: float) -> ShapelyPolygon:
    cx, cy = center
    return ShapelyPolygon([
        (cx - reach * u[0], cy - reach * u[1]),
        (cx + reach * u[0], cy + reach * u[1]),
        (cx + reach * (u[0] + normal[0]), cy + reach * (u[1] + normal[1])),
        (cx + reach * (normal[0] - u[0]), cy + reach * (normal[1] - u[1])),
    ])


def _twisting_geometry(params: TwistingParams, settings: ProcessSettings):
    width, length, gap = params.width, params.length, params.channel_gap
    if params.incline_deg == 0:
        return _linear_geometry(width, length, params.pouch_pitch, gap, settings)

    s, ww = settings.seal_inset, settings.weld_width
    ys = _pneunet_rows(width, length, params.pouch_pitch, gap, settings)
    theta = math.radians(params.incline_deg)
    u = (math.cos(theta), math.sin(theta))
    normal = (-u[1], u[0])
    interior = box(s, s, width - s, length - s)
    reach = HALF_PLANE_REACH * math.hypot(width, length)

    welds, channels, centers = [], [], []
    for k, y in enumerate(ys[1:-1], start=1):
        # midpoint of the linear line this one replaces
        center = ((width - gap) / 2 if k % 2 else (width + gap) / 2, y)
        chord = LineString([
            (center[0] - reach * u[0], y - reach * u[1]),
            (center[0] + reach * u[0], y + reach * u[1]),
        ]).intersection(interior)
        if chord.is_empty or chord.geom_type != "LineString" or chord.length <= ww:
            raise PatternInfeasible(f"inclined weld {k} does not fit inside the seam", "REGION_CROSSES_WELD")
        lo, hi = sorted([chord.coords[0], chord.coords[-1]])
        attached, free = (lo, hi) if k % 2 else (hi, lo)
        span = math.dist(attached, free)
        direction = ((attached[0] - free[0]) / span, (attached[1] - free[1]) / span)
        trim = _free_end_trim(free, direction, gap, width, length, settings)
        if span - trim < ww:
            raise PatternInfeasible(
                f"inclined weld {k} is shorter than the weld width once its {gap:g} mm opening is cut",
                "CHANNEL_TOO_NARROW",
            )
        tip = (free[0] + trim * direction[0], free[1] + trim * direction[1])
        wall = nearest_points(interior.exterior, ShapelyPoint(tip))[0]
        welds.append(_path([attached, tip]))
        channels.append(_path([tip, (wall.x, wall.y)]))
        centers.append(center)

    offsets = [c[0] * normal[0] + c[1] * normal[1] for c in centers]
    for k, (a, b) in enumerate(zip(offsets, offsets[1:]), start=1):
        if b - a < ww:
            raise PatternInfeasible(
                f"inclined welds {k} and {k + 1} sit {b - a:.3f} mm apart, below the weld width",
                "REGION_CROSSES_WELD",
            )

    regions = []
    for j in range(len(ys) - 1):
        shape = interior
        if j > 0:
            shape = shape.intersection(_half_plane(centers[j - 1], u, normal, reach))
        if j < len(centers):
            shape = shape.intersection(_half_plane(centers[j], u, (-normal[0], -normal[1]), reach))
        if shape.geom_type != "Polygon" or shape.area < DEGENERATE_AREA:
            raise PatternInfeasible(f"inclined pouch {j} collapses", "REGION_CROSSES_WELD")
        regions.append(_region(list(shape.exterior.coords)[:-1]))
    return welds, channels, regions


def _chain(regions: Sequence[Polygon], gaps: Sequence[Polyline], prefix: str,
           layers: Tuple[int, int] = (0, 1)) -> Tuple[List[Chamber], List[Channel]]:
    chambers = [Chamber(f"{prefix}{j}", region, layers) for j, region in enumerate(regions)]
    channels = [
        Channel(f"{prefix}{k - 1}", f"{prefix}{k}", gap) for k, gap in enumerate(gaps, start=1)
    ]
    return chambers, channels


def _single_network_sheet(width: float, length: float, geometry, inlet_width: float,
                          inlets: Sequence[InletSpec], settings: ProcessSettings) -> PatternSheet:
    welds, gaps, regions = geometry
    chambers, channels = _chain(regions, gaps, PNEUNET_PREFIX)
    return _build_sheet(width, length, welds, (), ChamberGraph(chambers, channels),
                        _default_inlet(width, inlets), inlet_width, settings)


def gen_linear_pneunet(params: PneuNetParams, inlet_width: float = DEFAULT_INLET_WIDTH,
                       inlets: Sequence[InletSpec] = (),
                       settings: Optional[ProcessSettings] = None) -> PatternSheet:
    settings = settings or ProcessSettings()
    geometry = _linear_geometry(params.width, params.length, params.pouch_pitch,
                                params.channel_gap, settings)
    return _single_network_sheet(params.width, params.length, geometry, inlet_width, inlets, settings)


def gen_twisting(params: TwistingParams, inlet_width: float = DEFAULT_INLET_WIDTH,
                 inlets: Sequence[InletSpec] = (),
                 settings: Optional[ProcessSettings] = None) -> PatternSheet:
    settings = settings or ProcessSettings()
    geometry = _twisting_geometry(params, settings)
    return _single_network_sheet(params.width, params.length, geometry, inlet_width, inlets, settings)


def gen_bending(params: PneuNetParams, layers: LayerStack,
                materials: Optional[MaterialTable] = None,
                inlet_width: float = DEFAULT_INLET_WIDTH,
                settings: Optional[ProcessSettings] = None) -> PatternSheet:
    """Linear pneunet geometry; the layer asymmetry carries the bending."""
    if len(layers.layers) != 2:
        raise PatternError("E_BAD_VALUE", f"bending needs 2 layers, got {len(layers.layers)}")
    table = materials if materials is not None else builtin_table()
    sheet = gen_linear_pneunet(params, inlet_width, layers.inlets, settings)

    bottom, top = (table.lookup(name) for name in layers.layers)
    if bottom.name == top.name or (bottom.areal_weight > 0 and bottom.areal_weight == top.areal_weight):
        message = (f"bending stack {bottom.name}/{top.name} is symmetric; "
                   f"expect contraction rather than bending")
        logger.warning(message)
        sheet = replace(sheet, notes=sheet.notes + (SheetNote("SYMMETRIC_STACK", message),))
    return sheet


def gen_antagonistic(params: PneuNetParams, inlets: Sequence[InletSpec],
                     layers: Optional[LayerStack] = None,
                     inlet_width: float = DEFAULT_INLET_WIDTH,
                     settings: Optional[ProcessSettings] = None) -> PatternSheet:
    """One weld pattern through three layers: networks l* (0-1) and u* (1-2)."""
    if layers is not None and len(layers.layers) != 3:
        raise PatternError("E_BAD_VALUE", f"antagonistic needs 3 layers, got {len(layers.layers)}")
    if len(inlets) != 2:
        raise PatternError("E_BAD_VALUE", f"antagonistic needs exactly 2 inlets, got {len(inlets)}")
    settings = settings or ProcessSettings()
    welds, gaps, regions = _linear_geometry(params.width, params.length, params.pouch_pitch,
                                            params.channel_gap, settings)
    lower, lower_channels = _chain(regions, gaps, LOWER_NETWORK_PREFIX, (0, 1))
    upper, upper_channels = _chain(regions, gaps, UPPER_NETWORK_PREFIX, (1, 2))
    graph = ChamberGraph(lower + upper, lower_channels + upper_channels)

    networks = {graph.get(spec.chamber_id).network for spec in inlets if graph.get(spec.chamber_id)}
    if len(networks) == 1:
        raise PatternInfeasible("both inlets feed the same chamber network", "CHAMBER_UNREACHABLE")
    return _build_sheet(params.width, params.length, welds, (), graph, inlets, inlet_width, settings)


# ---------------------------------------------------------------------------
# Kirigami
# ---------------------------------------------------------------------------

def _kirigami_rows(params: KirigamiParams) -> int:
    if params.height <= 2 * params.margin:
        return 0
    return math.floor((params.height - 2 * params.margin) / params.row_pitch) + 1


def _kirigami_checks(params: KirigamiParams, inlet_width: float, settings: ProcessSettings) -> None:
    s, ww, cc = settings.seal_inset, settings.weld_width, settings.cut_clearance
    if params.ligament < cc:
        raise PatternInfeasible(
            f"ligament {params.ligament:g} mm is below the {cc:g} mm cut clearance", "CUT_CLEARANCE"
        )
    if params.margin < s + cc:
        raise PatternInfeasible(
            f"margin {params.margin:g} mm is below seal inset plus cut clearance ({s + cc:g} mm)",
            "CUT_CLEARANCE",
        )
    if params.row_pitch < 2 * cc + ww:
        raise PatternInfeasible(
            f"row pitch {params.row_pitch:g} mm leaves no band between sealed strips "
            f"(needs {2 * cc + ww:g} mm)",
            "REGION_CROSSES_WELD",
        )
    if params.channel_width <= inlet_width:
        raise PatternInfeasible(
            f"channel width {params.channel_width:g} mm does not exceed the {inlet_width:g} mm inlet",
            "INLET_GAP_MISMATCH",
        )
    if params.channel_width < MIN_CHANNEL_GAP:
        raise PatternInfeasible(
            f"channel width {params.channel_width:g} mm is below {MIN_CHANNEL_GAP:g} mm",
            "CHANNEL_TOO_NARROW",
        )
    if params.width - 2 * s - params.channel_width < 2 * cc:
        raise PatternInfeasible(
            f"{params.width:g} mm sheet leaves no room for cuts beside the channel", "CUT_CLEARANCE"
        )


def _row_cuts(y: float, lo_x: float, hi_x: float, phase: float, params: KirigamiParams) -> List[Polyline]:
    period = params.cut_length + params.ligament
    first = math.floor((lo_x - phase) / period) - 1
    last = math.ceil((hi_x - phase) / period) + 1
    cuts = []
    for k in range(first, last + 1):
        a = max(phase + k * period, lo_x)
        b = min(phase + k * period + params.cut_length, hi_x)
        if b - a >= params.ligament - COORD_EPS:
            cuts.append(_path([(a, y), (b, y)]))
    return cuts


def gen_kirigami(params: KirigamiParams, inlet_width: float = DEFAULT_INLET_WIDTH,
                 inlets: Sequence[InletSpec] = (),
                 settings: Optional[ProcessSettings] = None) -> PatternSheet:
    """Staggered cut rows in sealed strips, one serpentine channel bottom to top.

    Row i sits in a strip welded at ±cut_clearance around it. Even strips hang
    off the left seam and odd strips off the right one, each leaving a passage
    of channel_width at its free end. Passages p_i and the bands b_i between
    strips chain into a single path p0, b0, p1, ... from the inlet under p0.
    """
    settings = settings or ProcessSettings()
    _check_sheet(params.width, params.height, settings)
    _kirigami_checks(params, inlet_width, settings)
    rows = _kirigami_rows(params)
    if rows == 0:
        logger.debug("Kirigami sheet has no cut rows, generating a plain pouch")
        return gen_rect_pouch(params.width, params.height, inlet_width, inlets, settings)

    s, cc = settings.seal_inset, settings.cut_clearance
    w, h, m, cw = params.width, params.height, params.margin, params.channel_width
    period = params.cut_length + params.ligament
    ys = [snap(m + i * params.row_pitch) for i in range(rows)]
    lows = [snap(s)] + [snap_down(y - cc) for y in ys[1:]]
    highs = [snap_up(y + cc) for y in ys[:-1]] + [snap(h - s)]

    welds, cuts, chambers, channels = [], [], [], []
    for i, y in enumerate(ys):
        left_attached = i % 2 == 0
        attach = s if left_attached else w - s
        free = snap(w - s - cw) if left_attached else snap(s + cw)
        wall = [(attach, lows[i]), (free, lows[i]), (free, highs[i]), (attach, highs[i])]
        if i == 0:
            wall = wall[1:]
        if i == rows - 1:
            wall = wall[:-1]
        welds.append(_path(wall))

        if left_attached:
            lo_x, hi_x = max(m, s + cc), min(w - m, free - cc)
            passage = (free, w - s)
        else:
            lo_x, hi_x = max(m, free + cc), min(w - m, w - s - cc)
            passage = (s, free)
        row_cuts = _row_cuts(y, snap_up(lo_x), snap_down(hi_x), m + (period / 2 if i % 2 else 0.0), params)
        if not row_cuts:
            raise PatternInfeasible(f"cut row {i} at y={y:g} mm has no room for a cut", "CUT_CLEARANCE")
        cuts.extend(row_cuts)

        chambers.append(Chamber(f"{PASSAGE_PREFIX}{i}", _rect(passage[0], lows[i], passage[1], highs[i])))
        if i > 0:
            channels.append(Channel(f"{BAND_PREFIX}{i - 1}", f"{PASSAGE_PREFIX}{i}",
                                    _path([(passage[0], lows[i]), (passage[1], lows[i])])))
        if i < rows - 1:
            chambers.append(Chamber(f"{BAND_PREFIX}{i}", _rect(s, highs[i], w - s, lows[i + 1])))
            channels.append(Channel(f"{PASSAGE_PREFIX}{i}", f"{BAND_PREFIX}{i}",
                                    _path([(passage[0], highs[i]), (passage[1], highs[i])])))

    logger.debug(f"Kirigami {w:g}×{h:g}: {rows} rows, {len(cuts)} cuts, {len(chambers)} chambers")
    specs = _default_inlet(w, inlets, f"{PASSAGE_PREFIX}0", w - s - cw / 2)
    return _build_sheet(w, h, welds, cuts, ChamberGraph(chambers, channels), specs, inlet_width, settings)


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

def generate(design: ActuatorDesign, settings: Optional[ProcessSettings] = None,
             materials: Optional[MaterialTable] = None) -> PatternSheet:
    settings = settings or ProcessSettings()
    table = materials if materials is not None else builtin_table()
    params, iw, inlets = design.params, design.inlet_width, design.layers.inlets

    if design.family is Family.RECT_POUCH:
        sheet = gen_rect_pouch(params.width, params.height, iw, inlets, settings)
    elif design.family is Family.LINEAR_PNEUNET:
        sheet = gen_linear_pneunet(params, iw, inlets, settings)
    elif design.family is Family.BENDING_PNEUNET:
        sheet = gen_bending(params, design.layers, table, iw, settings)
    elif design.family is Family.ANTAGONISTIC_PNEUNET:
        sheet = gen_antagonistic(params, inlets, design.layers, iw, settings)
    elif design.family is Family.TWISTING_PNEUNET:
        sheet = gen_twisting(params, iw, inlets, settings)
    else:
        sheet = gen_kirigami(params, iw, inlets, settings)

    notes = sheet.notes
    mixed = feed_policy_note(table, design.layers)
    if mixed:
        logger.warning(mixed)
        notes += (SheetNote("MIXED_FEED_STACK", mixed),)

    logger.debug(
        f"Generated {design.name} ({design.family.value}): {len(sheet.weld_paths)} welds, "
        f"{len(sheet.cut_paths)} cuts, {len(sheet.chambers.chambers)} chambers"
    )
    return replace(sheet, design_ref=design, notes=notes)
