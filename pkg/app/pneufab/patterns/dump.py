"""
Plain-text geometry dump, one primitive per line, for golden tests and
`preview --format txt`.

    sheet <name> <family>
    origin <x> <y>
    outline <x y ...>
    weld <index> open|closed <x y ...>
    cut <index> open|closed <x y ...>
    chamber <id> <network> <x y ...>
    channel <a> <b> <x y ...>
    inlet <chamber> <edge> <x y ...>
    note <severity> <code> <message>
"""

from typing import Iterable, Sequence

from pneufab.patterns.models import PatternSheet


def _coords(coords: Iterable[Sequence[float]]) -> str:
    return " ".join(f"{x:.3f} {y:.3f}" for x, y in coords)


def dump_sheet(sheet: PatternSheet) -> str:
    family = sheet.design_ref.family.value if sheet.design_ref else "-"
    lines = [
        f"sheet {sheet.name} {family}",
        f"origin {sheet.sheet_origin.x:.3f} {sheet.sheet_origin.y:.3f}",
        f"outline {_coords(sheet.outline.coords())}",
    ]
    for kind, paths in (("weld", sheet.weld_paths), ("cut", sheet.cut_paths)):
        for i, path in enumerate(paths):
            lines.append(f"{kind} {i} {'closed' if path.closed else 'open'} {_coords(path.coords())}")
    for chamber in sheet.chambers.chambers:
        lines.append(f"chamber {chamber.id} {chamber.network} {_coords(chamber.region.coords())}")
    for channel in sheet.chambers.channels:
        lines.append(f"channel {channel.a} {channel.b} {_coords(channel.gap.coords())}")
    for inlet in sheet.inlets:
        lines.append(f"inlet {inlet.chamber_id} {inlet.edge or '-'} {_coords(inlet.gap.coords())}")
    for note in sheet.notes:
        lines.append(f"note {note.severity} {note.code} {note.message}")
    return "\n".join(lines) + "\n"
