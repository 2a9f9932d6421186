"""
Manufacturability and airtightness-by-construction checks on a PatternSheet.

Checks run in a fixed order (seam, clearance, containment, region audit,
connectivity, bed, inlet width, sheet notes) and never raise: every problem
becomes a finding on the report.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional, Tuple

import networkx as nx
from shapely.geometry import Point as ShapelyPoint
from shapely.ops import linemerge, unary_union

from pneufab.geometry import as_line, as_shape, bbox, length, min_distance
from pneufab.geometry.constants import DEGENERATE_AREA, GRID_STEP
from pneufab.patterns.constants import (
    CUT_CLEARANCE,
    MIN_CHANNEL_GAP,
    MIN_INLET_WIDTH,
    SEAL_INSET,
    WELD_WIDTH,
)
from pneufab.patterns.models import ChamberGraph, PatternSheet
from pneufab.validate.constants import CLEARANCE_EPS, CODE_SEVERITY, MIN_OPEN_LENGTH

if TYPE_CHECKING:
    from pneufab.toolpath.profile import MachineProfile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tolerances:
    seal_inset: float = SEAL_INSET
    weld_width: float = WELD_WIDTH
    cut_clearance: float = CUT_CLEARANCE
    min_inlet_width: float = MIN_INLET_WIDTH
    min_channel_gap: float = MIN_CHANNEL_GAP
    # generated geometry is exact to the coordinate grid
    grid: float = GRID_STEP

    @classmethod
    def for_sheet(cls, sheet: PatternSheet) -> "Tolerances":
        settings = sheet.settings
        return cls(
            seal_inset=settings.seal_inset,
            weld_width=settings.weld_width,
            cut_clearance=settings.cut_clearance,
        )


@dataclass(frozen=True)
class Finding:
    severity: str
    code: str
    message: str
    ref: str = ""

    def line(self) -> str:
        return f"{self.severity} {self.code} {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    findings: Tuple[Finding, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.errors()

    def errors(self) -> List[Finding]:
        return [f for f in self.findings if f.severity == "error"]

    def codes(self) -> List[str]:
        return [f.code for f in self.findings]

    def lines(self) -> List[str]:
        return [f.line() for f in self.findings]

    def text(self, name: str = "sheet") -> str:
        status = "PASSED" if self.passed else "FAILED"
        out = [f"validation {name}: {status} ({len(self.errors())} error(s), {len(self.findings)} finding(s))"]
        out.extend(self.lines())
        return "\n".join(out) + "\n"


@dataclass
class _Collector:
    findings: List[Finding] = field(default_factory=list)

    def add(self, code: str, message: str, ref: str = "", severity: Optional[str] = None) -> None:
        self.findings.append(Finding(severity or CODE_SEVERITY[code], code, message, ref))


def _fmt_point(x: float, y: float) -> str:
    return f"({x:.3f}, {y:.3f})"


# ---------------------------------------------------------------------------
# (a) seam closure
# ---------------------------------------------------------------------------

def _check_seam(sheet: PatternSheet, tol: Tolerances, out: _Collector) -> None:
    inset = as_shape(sheet.outline).buffer(-tol.seal_inset, join_style="mitre")
    if inset.is_empty or inset.geom_type != "Polygon":
        out.add("SEAM_OPEN", f"outline leaves no room for a seam at {tol.seal_inset:g} mm inset", "outline")
        return
    ring = inset.exterior

    if sheet.weld_paths:
        covered = unary_union([as_line(p) for p in sheet.weld_paths]).buffer(tol.grid, cap_style="flat")
        uncovered = ring.difference(covered)
    else:
        uncovered = ring
    if uncovered.is_empty:
        pieces = []
    else:
        merged = linemerge(uncovered) if uncovered.geom_type == "MultiLineString" else uncovered
        pieces = [g for g in getattr(merged, "geoms", [merged]) if g.length > MIN_OPEN_LENGTH]

    if not sheet.inlets:
        out.add("NO_INLET", "perimeter seam has no inlet gap", "seam")

    matched = set()
    for k, inlet in enumerate(sheet.inlets):
        mid = as_line(inlet.gap).interpolate(0.5, normalized=True)
        if ring.distance(mid) > tol.grid:
            out.add("INLET_GAP_MISMATCH", f"inlet {k} ({inlet.chamber_id}) does not sit on the seam", f"inlet {k}")
            continue
        hits = [i for i, piece in enumerate(pieces) if piece.distance(mid) <= tol.grid]
        if not hits:
            out.add("INLET_BLOCKED", f"inlet {k} ({inlet.chamber_id}) is welded shut", f"inlet {k}")
            continue
        matched.update(hits)
        declared = sheet.declared_inlet_width or inlet.width
        opening = pieces[hits[0]].length
        if abs(opening - declared) > 2 * tol.grid:
            out.add(
                "INLET_GAP_MISMATCH",
                f"inlet {k} ({inlet.chamber_id}) opens {opening:.3f} mm, declared {declared:g} mm",
                f"inlet {k}",
            )

    for i, piece in enumerate(pieces):
        if i in matched:
            continue
        x, y = piece.interpolate(0.5, normalized=True).coords[0]
        out.add("SEAM_OPEN", f"seam open over {piece.length:.3f} mm near {_fmt_point(x, y)}", "seam")


# ---------------------------------------------------------------------------
# (b) cut clearance, (c) cut containment
# ---------------------------------------------------------------------------

def _check_clearance(sheet: PatternSheet, tol: Tolerances, out: _Collector) -> None:
    for i, cut in enumerate(sheet.cut_paths):
        for j, weld in enumerate(sheet.weld_paths):
            gap = min_distance(cut, weld)
            if gap < tol.cut_clearance - CLEARANCE_EPS:
                out.add(
                    "CUT_CLEARANCE",
                    f"cut {i} is {gap:.3f} mm from weld {j} (needs {tol.cut_clearance:g} mm)",
                    f"cut {i}",
                )


def _check_containment(sheet: PatternSheet, out: _Collector) -> None:
    outline = as_shape(sheet.outline)
    regions = [(c.id, as_shape(c.region)) for c in sheet.chambers.chambers]
    for i, cut in enumerate(sheet.cut_paths):
        line = as_line(cut)
        if not outline.covers(line):
            out.add("CUT_OUTSIDE_OUTLINE", f"cut {i} leaves the outline", f"cut {i}")
        for chamber_id, region in regions:
            if region.relate_pattern(line, "T********"):
                out.add("CUT_IN_CHAMBER", f"cut {i} enters chamber {chamber_id}", f"cut {i}")


# ---------------------------------------------------------------------------
# Region audit
# ---------------------------------------------------------------------------

def _check_regions(sheet: PatternSheet, tol: Tolerances, out: _Collector) -> None:
    welds = [as_line(p) for p in sheet.weld_paths]
    shapes = {c.id: as_shape(c.region) for c in sheet.chambers.chambers}

    for chamber in sheet.chambers.chambers:
        core = shapes[chamber.id].buffer(-tol.weld_width / 2)
        if core.is_empty:
            continue
        for j, weld in enumerate(welds):
            if core.intersects(weld):
                out.add("REGION_CROSSES_WELD", f"weld {j} runs through chamber {chamber.id}", f"chamber {chamber.id}")

    for a, b in combinations(sheet.chambers.chambers, 2):
        if a.network != b.network:
            continue
        overlap = shapes[a.id].intersection(shapes[b.id]).area
        if overlap > DEGENERATE_AREA:
            out.add("CHAMBER_OVERLAP", f"chambers {a.id} and {b.id} overlap by {overlap:.3f} mm²", f"chamber {a.id}")

    for (i, a), (j, b) in combinations(enumerate(sheet.weld_paths), 2):
        hit = welds[i].intersection(welds[j])
        if hit.is_empty:
            continue
        ends = [
            ShapelyPoint(p.x, p.y)
            for path in (a, b) if not path.closed
            for p in (path.start, path.end)
        ]
        for part in getattr(hit, "geoms", [hit]):
            if part.geom_type != "Point":
                out.add("WELD_CROSSING", f"welds {i} and {j} overlap over {part.length:.3f} mm", f"weld {i}")
                continue
            at_junction = any(part.distance(end) <= tol.grid for end in ends)
            if not at_junction:
                out.add("WELD_CROSSING", f"welds {i} and {j} cross at {_fmt_point(part.x, part.y)}", f"weld {i}")


# ---------------------------------------------------------------------------
# (d) connectivity
# ---------------------------------------------------------------------------

def check_connectivity(graph: ChamberGraph, inlets: Iterable[str], min_gap: float = 0.0) -> Dict[str, List[str]]:
    """Unreachable chamber ids per network, walking only same-network channels at least ``min_gap`` wide."""
    full = graph.to_networkx()
    networks = graph.networks()
    open_edges = {
        frozenset((c.a, c.b))
        for c in graph.channels
        if length(c.gap) >= min_gap
        and c.a in full and c.b in full
        and full.nodes[c.a]["network"] == full.nodes[c.b]["network"]
    }
    walkable = nx.subgraph_view(full, filter_edge=lambda u, v: frozenset((u, v)) in open_edges)

    sources = [i for i in inlets if i in full]
    result = {}
    for network, ids in networks.items():
        reached = set()
        for source in sources:
            if full.nodes[source]["network"] == network:
                reached |= nx.node_connected_component(walkable, source)
        result[network] = [i for i in ids if i not in reached]
    return result


def _required_gap(sheet: PatternSheet, tol: Tolerances) -> float:
    params = sheet.design_ref.params if sheet.design_ref else None
    return getattr(params, "channel_gap", tol.min_channel_gap)


def _check_connectivity(sheet: PatternSheet, tol: Tolerances, out: _Collector) -> None:
    graph = sheet.chambers
    known = {c.id: c for c in graph.chambers}

    for k, inlet in enumerate(sheet.inlets):
        chamber = known.get(inlet.chamber_id)
        if chamber is None:
            out.add("INLET_UNKNOWN_CHAMBER", f"inlet {k} names unknown chamber '{inlet.chamber_id}'", f"inlet {k}")
        elif not as_shape(chamber.region).exterior.buffer(tol.grid).contains(as_line(inlet.gap)):
            out.add("INLET_NOT_ON_CHAMBER", f"inlet {k} does not open into chamber {inlet.chamber_id}", f"inlet {k}")

    required = _required_gap(sheet, tol)
    for k, channel in enumerate(graph.channels):
        ref = f"channel {k}"
        missing = [i for i in (channel.a, channel.b) if i not in known]
        if missing:
            out.add("CHANNEL_UNKNOWN_CHAMBER", f"channel {k} names unknown chamber '{missing[0]}'", ref)
            continue
        width = length(channel.gap)
        if width < required - tol.grid:
            out.add(
                "CHANNEL_TOO_NARROW",
                f"channel {channel.a}-{channel.b} is {width:.3f} mm wide (needs {required:g} mm)",
                ref,
            )
        if known[channel.a].network != known[channel.b].network:
            out.add("CROSS_NETWORK_CHANNEL", f"channel {channel.a}-{channel.b} joins two networks", ref)

    unreachable = check_connectivity(graph, [i.chamber_id for i in sheet.inlets], required - tol.grid)
    for network, ids in unreachable.items():
        for chamber_id in ids:
            out.add("CHAMBER_UNREACHABLE", f"chamber {chamber_id} (network {network}) has no path to an inlet",
                    f"chamber {chamber_id}")


# ---------------------------------------------------------------------------
# (e) bed fit, (f) inlet width
# ---------------------------------------------------------------------------

def _check_bed(sheet: PatternSheet, machine: "MachineProfile", out: _Collector) -> None:
    x0, y0, x1, y1 = bbox(sheet.outline.coords())
    ox, oy = machine.work_origin
    tx, ty = machine.tool_offset
    travel_x, travel_y = machine.travel[0], machine.travel[1]
    for tool, dx, dy in (("cut", ox, oy), ("weld", ox - tx, oy - ty)):
        lo_x, lo_y, hi_x, hi_y = x0 + dx, y0 + dy, x1 + dx, y1 + dy
        if lo_x < 0 or lo_y < 0 or hi_x > travel_x or hi_y > travel_y:
            out.add(
                "BED_EXCEEDED",
                f"{tool} phase spans {_fmt_point(lo_x, lo_y)}-{_fmt_point(hi_x, hi_y)}, "
                f"travel is {travel_x:g} × {travel_y:g} mm",
                tool,
            )


def _check_inlet_width(sheet: PatternSheet, tol: Tolerances, out: _Collector) -> None:
    for k, inlet in enumerate(sheet.inlets):
        width = sheet.declared_inlet_width or inlet.width
        if width < tol.min_inlet_width - CLEARANCE_EPS:
            out.add("INLET_TOO_NARROW", f"inlet {k} is {width:g} mm, fittings need {tol.min_inlet_width:g} mm",
                    f"inlet {k}")


def validate_sheet(sheet: PatternSheet, machine: Optional["MachineProfile"] = None,
                   tolerances: Optional[Tolerances] = None) -> ValidationReport:
    """Run every check; the bed check is skipped when no machine is given."""
    tol = tolerances or Tolerances.for_sheet(sheet)
    out = _Collector()
    _check_seam(sheet, tol, out)
    _check_clearance(sheet, tol, out)
    _check_containment(sheet, out)
    _check_regions(sheet, tol, out)
    _check_connectivity(sheet, tol, out)
    if machine is not None:
        _check_bed(sheet, machine, out)
    _check_inlet_width(sheet, tol, out)
    for note in sheet.notes:
        out.add(note.code, note.message, "sheet", severity=note.severity)

    report = ValidationReport(tuple(out.findings))
    logger.debug(f"Validated {sheet.name}: {len(report.errors())} error(s), {len(report.findings)} finding(s)")
    return report
