"""End-to-end checks over every shipped design."""

import numpy as np
import pytest

from conftest import CORPUS
from pneufab.gcode import emit, parse_gcode, roundtrip_check, simulate
from pneufab.geometry import length
from pneufab.toolpath import WeldMode, plan
from pneufab.validate import validate_sheet

# emitted coordinates carry three decimals, so simulated times drift by microseconds
TIME_SLACK_S = 1e-4


@pytest.mark.parametrize("name", CORPUS)
def test_design_compiles_and_round_trips(load_sheet, machine, materials, name):
    sheet = load_sheet(name)
    report = validate_sheet(sheet, machine)
    assert report.passed, report.text(name)

    tp = plan(sheet, machine, materials, report=report)
    program = emit(tp, machine)
    assert program.text.splitlines()[-1] == "M30"

    check = roundtrip_check(tp, machine)
    assert check.passed, check.lines()
    assert check.sim.within_envelope


@pytest.mark.parametrize("name", CORPUS)
def test_continuous_weld_on_equals_weld_length(load_sheet, machine, materials, name):
    sheet = load_sheet(name)
    sim = simulate(parse_gcode(emit(plan(sheet, machine, materials), machine).text, machine), machine)
    assert sim.weld_length == pytest.approx(sum(length(p) for p in sheet.weld_paths), abs=1e-6)
    assert len(sim.welder_on) == len(sheet.weld_paths)


def test_pulsed_power_respects_switching_floor(load_sheet, machine, materials):
    rng = np.random.default_rng(7)
    sheets = {name: load_sheet(name) for name in ("rect_pouch", "linear", "twisting_30")}
    floor_s = machine.welder_min_switch / 1000.0
    for _ in range(50):
        name = sorted(sheets)[rng.integers(len(sheets))]
        mode = WeldMode("pulsed", float(rng.uniform(5, 95)), float(rng.uniform(500, 1500)))
        tp = plan(sheets[name], machine, materials, mode)
        sim = simulate(parse_gcode(emit(tp, machine).text, machine), machine)
        for interval in sim.welder_on:
            assert interval.duration >= floor_s - TIME_SLACK_S, (name, mode)
        for before, after in zip(sim.welder_on, sim.welder_on[1:]):
            assert after.start_s - before.end_s >= floor_s - TIME_SLACK_S, (name, mode)
