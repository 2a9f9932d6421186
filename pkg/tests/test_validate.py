from dataclasses import replace

import numpy as np
import pytest

from conftest import CORPUS
from pneufab.geometry import Polyline, bbox, rectangle
from pneufab.patterns import Chamber, ChamberGraph, Channel, gen_rect_pouch
from pneufab.toolpath import MachineProfile
from pneufab.validate import check_connectivity, validate_sheet


def _segment(*coords):
    return Polyline.from_coords(coords)


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_designs_pass(load_sheet, machine, name):
    report = validate_sheet(load_sheet(name), machine)
    assert report.passed, report.text(name)


def test_missing_inlet(load_sheet):
    sheet = replace(load_sheet("rect_pouch"), inlets=())
    codes = validate_sheet(sheet).codes()
    assert "NO_INLET" in codes
    assert "SEAM_OPEN" in codes
    assert "CHAMBER_UNREACHABLE" in codes


def test_inlet_welded_shut(load_sheet):
    sheet = load_sheet("rect_pouch")
    ring = Polyline.from_coords([(5, 5), (55, 5), (55, 35), (5, 35)], closed=True)
    report = validate_sheet(replace(sheet, weld_paths=(ring,)))
    assert report.codes() == ["INLET_BLOCKED"]
    assert not report.passed


def test_open_seam_reported_with_position(load_sheet):
    sheet = load_sheet("rect_pouch")
    right = Polyline.from_coords([(34, 5), (55, 5), (55, 35), (40, 35)])
    left = Polyline.from_coords([(30, 35), (5, 35), (5, 5), (26, 5)])
    report = validate_sheet(replace(sheet, weld_paths=(right, left)))
    assert report.codes() == ["SEAM_OPEN"]
    assert "open over 10.000 mm near (35.000, 35.000)" in report.findings[0].message


@pytest.mark.parametrize("cut,code", [
    (((1, 3), (50, 3)), "CUT_CLEARANCE"),
    (((20, 20), (40, 20)), "CUT_IN_CHAMBER"),
    (((-10, -5), (-2, -5)), "CUT_OUTSIDE_OUTLINE"),
])
def test_bad_cuts(load_sheet, cut, code):
    sheet = replace(load_sheet("rect_pouch"), cut_paths=(_segment(*cut),))
    report = validate_sheet(sheet)
    assert code in report.codes()
    assert not report.passed


def test_weld_through_chamber(load_sheet):
    sheet = load_sheet("linear")
    sheet = replace(sheet, weld_paths=sheet.weld_paths + (_segment((10, 12), (30, 12)),))
    assert "REGION_CROSSES_WELD" in validate_sheet(sheet).codes()


def test_narrow_channel_cuts_off_downstream_chambers(load_sheet):
    sheet = load_sheet("linear")
    channels = list(sheet.chambers.channels)
    channels[0] = replace(channels[0], gap=_segment((29, 20), (31, 20)))
    sheet = replace(sheet, chambers=replace(sheet.chambers, channels=tuple(channels)))
    report = validate_sheet(sheet)
    assert "CHANNEL_TOO_NARROW" in report.codes()
    unreachable = [f.ref for f in report.findings if f.code == "CHAMBER_UNREACHABLE"]
    assert unreachable == [f"chamber c{i}" for i in range(1, 6)]


def test_bed_exceeded_names_both_tools(load_sheet):
    small = MachineProfile(travel=(100.0, 100.0, 110.0))
    report = validate_sheet(load_sheet("rect_pouch"), small)
    assert [f.ref for f in report.findings if f.code == "BED_EXCEEDED"] == ["cut", "weld"]
    assert validate_sheet(load_sheet("rect_pouch")).passed


def test_narrow_inlet():
    report = validate_sheet(gen_rect_pouch(60, 40, inlet_width=4))
    assert report.codes() == ["INLET_TOO_NARROW"]


def test_notes_do_not_fail(load_sheet):
    report = validate_sheet(load_sheet("bending"))
    assert report.passed
    assert "note MIXED_FEED_STACK" in report.text("bending")


def test_report_text_header(load_sheet):
    text = validate_sheet(load_sheet("linear")).text("linear")
    assert text.splitlines()[0] == "validation linear: PASSED (0 error(s), 0 finding(s))"


def test_check_connectivity_per_network():
    graph = ChamberGraph(
        (
            Chamber("a", rectangle(0, 0, 10, 10)),
            Chamber("b", rectangle(0, 10, 10, 20)),
            Chamber("c", rectangle(0, 20, 10, 30)),
            Chamber("x", rectangle(20, 0, 30, 10), (1, 2)),
        ),
        (Channel("a", "b", _segment((2, 10), (8, 10))), Channel("b", "c", _segment((2, 20), (4, 20)))),
    )
    assert check_connectivity(graph, ["a"]) == {"0-1": [], "1-2": ["x"]}
    assert check_connectivity(graph, ["a"], min_gap=6) == {"0-1": ["c"], "1-2": ["x"]}
    assert check_connectivity(graph, ["a", "x"], min_gap=6)["1-2"] == []


def _errors(sheet, machine):
    return {(f.code, f.message) for f in validate_sheet(sheet, machine).errors()}


@pytest.mark.parametrize("name", ["rect_pouch", "linear", "kirigami_100", "antagonistic"])
def test_added_cuts_never_clear_errors(load_sheet, machine, name):
    rng = np.random.default_rng(len(name))
    sheet = load_sheet(name)
    x0, y0, x1, y1 = bbox(sheet.outline.coords())
    for _ in range(8):
        errors = _errors(sheet, machine)
        a, b = rng.uniform((x0 - 10, y0 - 10), (x1 + 10, y1 + 10), size=(2, 2))
        if np.hypot(*(a - b)) < 0.5:
            continue
        sheet = replace(sheet, cut_paths=sheet.cut_paths + (_segment(tuple(a), tuple(b)),))
        assert errors <= _errors(sheet, machine)


def test_added_narrow_channel_never_clears_errors(load_sheet, machine):
    sheet = load_sheet("linear")
    sheet = replace(sheet, cut_paths=(_segment((1.0, 1.0), (30.0, 60.0)),))
    before = _errors(sheet, machine)
    assert before
    channels = sheet.chambers.channels + (Channel("c0", "c2", _segment((10.0, 30.0), (11.0, 30.0))),)
    sheet = replace(sheet, chambers=ChamberGraph(sheet.chambers.chambers, channels))
    after = _errors(sheet, machine)
    assert before <= after
    assert any(code == "CHANNEL_TOO_NARROW" for code, _ in after)
