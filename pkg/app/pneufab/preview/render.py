"""
SVG previews of pattern sheets and toolpaths.

Model coordinates are written unchanged; the Y flip happens once, on the
top-level group. Output is byte-deterministic.
"""

import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union
from xml.sax.saxutils import escape, quoteattr

from pneufab.geometry import bbox
from pneufab.patterns.models import PatternSheet
from pneufab.preview.constants import DECIMALS, PADDING, SHEET_GROUPS, STYLES, SVG_NS, TOOLPATH_GROUPS
from pneufab.toolpath import MachineProfile, Move, Rapid, Toolpath, ToolSelect

logger = logging.getLogger(__name__)

Coord = Tuple[float, float]


@dataclass(frozen=True)
class RenderStyle:
    # class -> (stroke, stroke width, fill)
    styles: Mapping[str, Tuple[str, float, str]] = field(default_factory=lambda: MappingProxyType(dict(STYLES)))
    padding: float = PADDING

    def attrs(self, group: str) -> str:
        stroke, width, fill = self.styles[group]
        return f'stroke="{stroke}" stroke-width="{_num(width)}" fill="{fill}"'


def _num(v: float) -> str:
    return f"{round(v, DECIMALS) + 0.0:.{DECIMALS}f}"


def _path(coords: Sequence[Coord], closed: bool) -> str:
    head, *rest = coords
    d = f"M {_num(head[0])} {_num(head[1])}"
    if rest:
        d += " L " + " ".join(f"{_num(x)} {_num(y)}" for x, y in rest)
    if closed:
        d += " Z"
    return f'<path d="{d}"/>'


def _line(a: Coord, b: Coord) -> str:
    return f'<line x1="{_num(a[0])}" y1="{_num(a[1])}" x2="{_num(b[0])}" y2="{_num(b[1])}"/>'


def _rect(x: float, y: float, w: float, h: float) -> str:
    return f'<rect x="{_num(x)}" y="{_num(y)}" width="{_num(w)}" height="{_num(h)}"/>'


def _document(title: str, groups: Dict[str, List[str]], order: Iterable[str], extent: List[Coord],
              style: RenderStyle) -> str:
    minx, miny, maxx, maxy = bbox(extent)
    pad = style.padding
    width, height = maxx - minx + 2 * pad, maxy - miny + 2 * pad
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="{SVG_NS}" version="1.1" width="{_num(width)}mm" height="{_num(height)}mm" '
        f'viewBox="{_num(minx - pad)} {_num(-(maxy + pad))} {_num(width)} {_num(height)}">',
        f"<title>{escape(title)}</title>",
        '<g transform="scale(1,-1)">',
    ]
    for name in order:
        if name not in groups:
            continue
        out.append(f"<g id={quoteattr(name)} {style.attrs(name)}>")
        out.extend(groups[name])
        out.append("</g>")
    out += ["</g>", "</svg>"]
    return "\n".join(out) + "\n"


def _sheet_groups(sheet: PatternSheet, machine: Optional[MachineProfile]) -> Tuple[Dict[str, List[str]], List[Coord]]:
    groups: Dict[str, List[str]] = {}
    extent = list(sheet.outline.coords())
    if machine is not None:
        # bed in sheet coordinates
        x0, y0 = -machine.work_origin[0], -machine.work_origin[1]
        groups["bed"] = [_rect(x0, y0, machine.travel[0], machine.travel[1])]
        extent += [(x0, y0), (x0 + machine.travel[0], y0 + machine.travel[1])]
    groups["chambers"] = [_path(c.region.coords(), True) for c in sheet.chambers.chambers]
    groups["outline"] = [_path(sheet.outline.coords(), True)]
    groups["welds"] = [_path(p.coords(), p.closed) for p in sheet.weld_paths]
    groups["cuts"] = [_path(p.coords(), p.closed) for p in sheet.cut_paths]
    groups["inlets"] = [_line(*i.gap.coords()[:2]) for i in sheet.inlets]
    return groups, extent


def _toolpath_groups(tp: Toolpath, machine: Optional[MachineProfile]) -> Tuple[Dict[str, List[str]], List[Coord]]:
    groups: Dict[str, List[str]] = {name: [] for name in TOOLPATH_GROUPS if name != "bed"}
    extent: List[Coord] = [tp.start[:2]]
    if machine is not None:
        groups["bed"] = [_rect(0.0, 0.0, machine.travel[0], machine.travel[1])]
        extent += [(0.0, 0.0), machine.travel[:2]]

    tool, here = "", tp.start[:2]
    run: List[Coord] = []

    def flush():
        if len(run) > 1:
            groups[f"{tool}-moves"].append(_path(run, False))
        run.clear()

    for action in tp.actions:
        if isinstance(action, ToolSelect):
            flush()
            tool = action.tool
        elif isinstance(action, Rapid):
            flush()
            groups["rapids"].append(_line(here, action.to[:2]))
            here = action.to[:2]
        elif isinstance(action, Move):
            if not run:
                run.append(here)
            here = action.to[:2]
            if here != run[-1]:
                run.append(here)
        extent.append(here)
    flush()
    return groups, extent


def render_svg(subject: Union[PatternSheet, Toolpath], style: Optional[RenderStyle] = None,
               machine: Optional[MachineProfile] = None) -> str:
    """SVG text for a sheet (sheet coordinates) or a toolpath (machine XY)."""
    style = style or RenderStyle()
    if isinstance(subject, PatternSheet):
        groups, extent = _sheet_groups(subject, machine)
        order = SHEET_GROUPS
    else:
        groups, extent = _toolpath_groups(subject, machine)
        order = TOOLPATH_GROUPS
    logger.debug(f"Rendering {subject.name}: " + ", ".join(f"{k} {len(v)}" for k, v in sorted(groups.items())))
    return _document(subject.name, groups, order, extent, style)
