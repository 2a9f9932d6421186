"""Byte-for-byte comparison of emitted G-code and SVG previews against tests/golden/.

Regenerate with ``pytest tests/test_golden.py --update-golden``; designs with
no golden file are skipped until then.
"""

import pytest

from conftest import CORPUS, GOLDEN
from pneufab.gcode import emit
from pneufab.preview import render_svg
from pneufab.toolpath import plan


def _check(request, target, text):
    if request.config.getoption("--update-golden"):
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(text.encode("utf-8"))
        return
    if not target.exists():
        pytest.skip(f"no golden {target.name}; run with --update-golden")
    assert text.encode("utf-8") == target.read_bytes()


@pytest.mark.parametrize("name", CORPUS)
def test_gcode_matches_golden(request, load_sheet, machine, materials, name):
    text = emit(plan(load_sheet(name), machine, materials), machine).text
    _check(request, GOLDEN / f"{name}.gcode", text)


@pytest.mark.parametrize("name", CORPUS)
def test_svg_matches_golden(request, load_sheet, name):
    _check(request, GOLDEN / f"{name}.svg", render_svg(load_sheet(name)))


def test_rect_pouch_golden_is_checked_in():
    assert (GOLDEN / "rect_pouch.gcode").exists()
    assert (GOLDEN / "rect_pouch.svg").exists()
