import xml.etree.ElementTree as ET

from pneufab.patterns import dump_sheet
from pneufab.preview import RenderStyle, render_svg
from pneufab.toolpath import plan

NS = {"svg": "http://www.w3.org/2000/svg"}


def _groups(svg):
    root = ET.fromstring(svg.encode("utf-8"))
    return root, {g.get("id"): g for g in root.iter(f"{{{NS['svg']}}}g") if g.get("id")}


def test_sheet_preview_layers(load_sheet):
    svg = render_svg(load_sheet("rect_pouch"))
    root, groups = _groups(svg)
    assert list(groups) == ["chambers", "outline", "welds", "cuts", "inlets"]
    assert len(groups["welds"]) == 1
    assert len(groups["cuts"]) == 0
    assert groups["inlets"][0].get("x1") == "26.000"
    assert root.get("viewBox") == "-10.000 -50.000 80.000 60.000"
    assert root.get("width") == "80.000mm"
    assert root.find("svg:title", NS).text == "rect_pouch"


def test_sheet_preview_shows_bed(load_sheet, machine):
    _, groups = _groups(render_svg(load_sheet("rect_pouch"), machine=machine))
    bed = groups["bed"][0]
    assert (bed.get("x"), bed.get("y"), bed.get("width"), bed.get("height")) == (
        "-100.000", "-50.000", "720.000", "420.000")


def test_kirigami_preview_draws_every_cut(load_sheet):
    sheet = load_sheet("kirigami_125")
    _, groups = _groups(render_svg(sheet))
    assert len(groups["cuts"]) == len(sheet.cut_paths)
    assert len(groups["chambers"]) == len(sheet.chambers.chambers)


def test_preview_is_deterministic(load_sheet):
    assert render_svg(load_sheet("twisting_30")) == render_svg(load_sheet("twisting_30"))


def test_custom_style(load_sheet):
    style = RenderStyle(styles={**RenderStyle().styles, "welds": ("#000", 2.0, "none")}, padding=0.0)
    svg = render_svg(load_sheet("rect_pouch"), style)
    root, groups = _groups(svg)
    assert groups["welds"].get("stroke-width") == "2.000"
    assert root.get("viewBox") == "0.000 -40.000 60.000 40.000"


def test_toolpath_preview(load_sheet, machine):
    tp = plan(load_sheet("kirigami_100"), machine)
    _, groups = _groups(render_svg(tp, machine=machine))
    assert list(groups) == ["bed", "rapids", "weld-moves", "cut-moves"]
    assert len(groups["weld-moves"]) >= len(tp.weld_order)
    assert len(groups["cut-moves"]) >= len(tp.cut_order)
    assert len(groups["rapids"]) > 0


def test_text_dump_matches_sheet(load_sheet):
    sheet = load_sheet("linear")
    lines = dump_sheet(sheet).splitlines()
    assert sum(line.startswith("weld ") for line in lines) == len(sheet.weld_paths)
    assert sum(line.startswith("chamber ") for line in lines) == 6
    assert sum(line.startswith("channel ") for line in lines) == 5
