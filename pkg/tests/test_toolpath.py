import itertools
import math
from dataclasses import replace

import numpy as np
import pytest

from conftest import MACHINES
from pneufab.errors import DesignError, ToolpathError
from pneufab.geometry import Polyline, segment
from pneufab.toolpath import (
    ChannelOff,
    ChannelOn,
    Dwell,
    KnifeAngle,
    MachineProfile,
    Move,
    Rapid,
    ToolSelect,
    WeldMode,
    knife_orientation,
    load_machine_profile,
    nearest_neighbour_travel,
    order_paths,
    parse_weld_mode,
    plan,
    pulse_timing,
    sequence_travel,
    summarize,
    weld_schedule,
)
from pneufab.validate import ValidationReport


def _random_segments(rng, n):
    paths = []
    while len(paths) < n:
        a, b = rng.uniform(0, 200, size=(2, 2)).round(3)
        if np.hypot(*(a - b)) > 1:
            paths.append(segment(tuple(a), tuple(b)))
    return paths


# ---------------------------------------------------------------------------
# Ordering
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("seed", range(5))
def test_order_never_worse_than_baselines(seed):
    rng = np.random.default_rng(seed)
    paths = _random_segments(rng, 25)
    start = (0.0, 0.0)
    order = order_paths(paths, start)
    assert sorted(order.order) == list(range(25))
    assert order.travel <= sequence_travel(paths, start) + 1e-9
    assert order.travel <= nearest_neighbour_travel(paths, start) + 1e-9


def test_order_is_deterministic():
    paths = _random_segments(np.random.default_rng(7), 15)
    assert order_paths(paths, (0.0, 0.0)) == order_paths(paths, (0.0, 0.0))


def test_open_paths_entered_from_nearer_end():
    paths = [segment((10, 0), (0, 0))]
    order = order_paths(paths, (0.0, 0.0))
    assert order.reversed == (True,)
    assert order.travel == 0.0
    assert order.oriented(paths)[0].start.x == 0.0


def test_closed_paths_keep_their_start():
    square = Polyline.from_coords([(10, 10), (20, 10), (20, 20), (10, 20)], closed=True)
    order = order_paths([square, segment((0, 5), (5, 5))], (0.0, 0.0))
    assert order.order == (1, 0)
    assert order.reversed == (False, False)
    assert order.entries[1].x == 10.0


def test_order_empty():
    assert order_paths([], (0.0, 0.0)).travel == 0.0


# ---------------------------------------------------------------------------
# Welder
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("text,expected", [
    ("continuous", WeldMode()),
    ("pulsed", WeldMode("pulsed", 50.0, 500.0)),
    ("pulsed:30:1000", WeldMode("pulsed", 30.0, 1000.0)),
])
def test_parse_weld_mode(text, expected):
    assert parse_weld_mode(text) == expected


@pytest.mark.parametrize("text", ["steady", "pulsed:x:500", "pulsed:50:500:1", "pulsed:0:500"])
def test_parse_weld_mode_rejects(text):
    with pytest.raises(ToolpathError, match="E_BAD_VALUE"):
        parse_weld_mode(text)


@pytest.mark.parametrize("duty,period,expected", [
    (50, 500, (500, 250)),
    (30, 1000, (1000, 250)),
    (90, 1000, (1000, 750)),
    (50, 620, (500, 250)),
])
def test_pulse_timing_on_switching_grid(machine, duty, period, expected):
    assert pulse_timing(WeldMode("pulsed", duty, period), machine) == expected


def test_pulse_period_below_floor(machine):
    with pytest.raises(ToolpathError, match="E_PULSE_TOO_SHORT"):
        pulse_timing(WeldMode("pulsed", 50, 400), machine)


def test_continuous_schedule(machine):
    events = weld_schedule(segment((0, 0), (100, 0)), 160.0, WeldMode(), machine)
    assert [(e.arc, e.on) for e in events] == [(0.0, True), (100.0, False)]
    assert events[-1].time_ms == pytest.approx(37500.0)


def test_pulsed_schedule_whole_pulses(machine):
    events = weld_schedule(segment((0, 0), (100, 0)), 160.0, WeldMode("pulsed", 50, 500), machine)
    assert len(events) == 150
    times = [e.time_ms for e in events]
    assert all(b - a >= 250 - 1e-9 for a, b in zip(times, times[1:]))
    assert events[-1].arc <= 100.0


# ---------------------------------------------------------------------------
# Knife
# ---------------------------------------------------------------------------

def test_knife_lifts_at_square_corners():
    square = Polyline.from_coords([(0, 0), (10, 0), (10, 10), (0, 10)], closed=True)
    knife = knife_orientation(square)
    assert knife.angles == pytest.approx((0.0, 90.0, 180.0, 270.0))
    assert knife.lifts == (1, 2, 3)
    assert knife.arcs == pytest.approx((0.0, 10.0, 20.0, 30.0))


def test_knife_follows_gentle_turns():
    path = Polyline.from_coords([(0, 0), (10, 0), (20, 1.7), (30, 5)])
    knife = knife_orientation(path)
    assert knife.lifts == ()
    assert knife.angles[0] == 0.0
    assert knife.angles[1] == pytest.approx(9.648, abs=1e-3)


def test_knife_unwraps_across_180():
    path = Polyline.from_coords([(0, 0), (-10, 1), (-20, -1)])
    knife = knife_orientation(path)
    assert knife.angles[1] - knife.angles[0] == pytest.approx(11.31 + 5.71, abs=0.01)


# ---------------------------------------------------------------------------
# Planner
# ---------------------------------------------------------------------------

def test_plan_phases_and_offsets(load_sheet, machine):
    tp = plan(load_sheet("rect_pouch"), machine)
    actions = list(tp.actions)
    assert actions[0] == Rapid((0.0, 0.0, 30.0))
    assert actions[1] == ToolSelect("weld")
    assert actions[2] == ChannelOn("welder_stage")
    # seam entered at its end nearer home, welder tip shifted by the tool offset
    assert actions[3] == Rapid((76.0, 55.0, 30.0))
    assert actions[4] == Move((76.0, 55.0, 20.0), 300.0)
    assert tp.weld_order == (0,)
    assert tp.cut_order == (-1,)
    assert tp.weld_feed == 200.0
    assert actions[-2] == ChannelOff("knife_oscillation")
    assert actions[-1] == Rapid((0.0, 0.0, 30.0))


def test_weld_and_cut_depths(load_sheet, machine):
    tp = plan(load_sheet("kirigami_100"), machine)
    cut_at = tp.first_cut_index()
    weld_moves = [a for a in tp.actions[:cut_at] if isinstance(a, Move)]
    cut_moves = [a for a in tp.actions[cut_at:] if isinstance(a, Move)]
    assert {a.feed for a in weld_moves} == {160.0, 300.0}
    assert all(a.to[2] == 20.0 for a in weld_moves)
    assert {a.to[2] for a in cut_moves} == {19.0}
    assert {a.feed for a in cut_moves} == {1000.0, 300.0}


def test_outline_cut_last(load_sheet, machine):
    sheet = load_sheet("kirigami_125")
    tp = plan(sheet, machine)
    assert tp.cut_order[-1] == -1
    assert sorted(tp.cut_order[:-1]) == list(range(len(sheet.cut_paths)))
    cut_moves = [a.to for a in tp.actions[tp.first_cut_index():] if isinstance(a, Move)]
    outline = {(100.0, 50.0), (225.0, 50.0), (225.0, 200.0), (100.0, 200.0)}
    tail = [(x, y) for x, y, _ in cut_moves[-8:]]
    assert set(tail) == outline


def test_outline_corners_lift_knife(load_sheet, machine):
    tp = plan(load_sheet("rect_pouch"), machine)
    angles = [a.deg for a in tp.actions[tp.first_cut_index():] if isinstance(a, KnifeAngle)]
    assert angles == [0.0, 90.0, 180.0, 270.0]
    lifts = [a for a in tp.actions[tp.first_cut_index():] if isinstance(a, Rapid) and a.to[2] == 22.0]
    assert len(lifts) == 6


def test_continuous_weld_one_power_cycle_per_path(load_sheet, machine):
    sheet = load_sheet("linear")
    tp = plan(sheet, machine)
    events = [e for e in tp.channel_events() if e[0] == "welder_power"]
    assert len(events) == 2 * len(sheet.weld_paths)
    assert events[0] == ("welder_power", True)


def test_short_weld_gets_switching_dwell(load_sheet, machine):
    sheet = load_sheet("rect_pouch")
    sheet = replace(sheet, weld_paths=sheet.weld_paths + (segment((30, 20), (30.5, 20)),))
    tp = plan(sheet, machine, report=ValidationReport())
    actions = list(tp.actions)
    dwells = [i for i, a in enumerate(actions) if isinstance(a, Dwell)]
    assert [actions[i].ms for i in dwells] == [100]
    assert actions[dwells[0] + 1] == ChannelOff("welder_power")


def test_pulsed_header_and_events(load_sheet, machine):
    tp = plan(load_sheet("rect_pouch"), machine, mode=parse_weld_mode("pulsed:50:500"))
    assert tp.header == (
        "layer 1 bottom: tpu_nylon_light, PTFE sheets per side: 1",
        "layer 2 top: tpu_nylon_light, PTFE sheets per side: 1",
        "weld feed 200 mm/min, pulsed 50% / 500 ms",
    )
    power = [e for e in tp.channel_events() if e[0] == "welder_power"]
    assert len(power) == 2 * 91


def test_plan_refuses_unvalidated_sheet(load_sheet, machine):
    sheet = replace(load_sheet("rect_pouch"), inlets=())
    with pytest.raises(ToolpathError, match="E_NOT_VALIDATED"):
        plan(sheet, machine)


def test_plan_refuses_oversized_sheet(load_sheet):
    with pytest.raises(ToolpathError, match="E_BED_EXCEEDED"):
        plan(load_sheet("kirigami_150"), MachineProfile(travel=(200.0, 200.0, 110.0)))


def test_machine_weld_feed_override(load_sheet):
    tp = plan(load_sheet("rect_pouch"), MachineProfile(weld_feed=120.0))
    assert tp.weld_feed == 120.0


def test_summary_rows(load_sheet, machine):
    tp = plan(load_sheet("rect_pouch"), machine)
    frame = summarize(tp, machine)
    assert list(frame["phase"]) == ["travel", "weld", "cut", "total"]
    weld = frame[frame["phase"] == "weld"].iloc[0]
    assert weld["paths"] == 1
    assert weld["feeds"] == "200/300"
    total = frame[frame["phase"] == "total"].iloc[0]
    assert total["time_s"] == pytest.approx(frame["time_s"][:3].sum(), abs=0.02)


# ---------------------------------------------------------------------------
# Machine profile
# ---------------------------------------------------------------------------

def test_default_machine_file_matches_builtin_defaults():
    text = (MACHINES / "default.machine").read_text(encoding="utf-8")
    assert load_machine_profile(text) == MachineProfile()


def test_machine_file_overrides():
    profile = load_machine_profile("[machine]\ntravel_x_mm = 500\n[feeds]\nweld_mm_min = 120\n"
                                   "[channels]\nwelder_power = 7\n")
    assert profile.travel == (500.0, 420.0, 110.0)
    assert profile.weld_feed == 120.0
    assert profile.output("welder_power") == 7


def test_machine_file_rejects_unknown_section():
    with pytest.raises(DesignError, match="E_UNKNOWN_KEY"):
        load_machine_profile("[laser]\npower = 5\n")


@pytest.mark.parametrize("changes", [
    {"welder_min_switch": 100},
    {"cut_depth": 1.0},
    {"channel_map": {"welder_power": 1, "welder_stage": 1, "knife_oscillation": 3}},
    {"knife_mode": "laser"},
])
def test_machine_profile_rejects(changes):
    with pytest.raises(ToolpathError, match="E_BAD_VALUE"):
        MachineProfile(**changes)


def test_z_levels(machine):
    assert (machine.z_safe, machine.z_weld, machine.z_cut, machine.z_lift) == (30.0, 20.0, 19.0, 22.0)
    assert machine.weld_point(10, 10) == (60.0, 60.0)
    assert machine.cut_point(10, 10) == (110.0, 60.0)


# ---------------------------------------------------------------------------
# Worked examples
# ---------------------------------------------------------------------------

def _brute_force_travel(paths, start):
    ends = [((p.start.x, p.start.y), (p.end.x, p.end.y)) for p in paths]
    best = np.inf
    for perm in itertools.permutations(range(len(paths))):
        for flips in itertools.product((False, True), repeat=len(paths)):
            here, total = start, 0.0
            for i, flip in zip(perm, flips):
                entry, exit_ = ends[i][::-1] if flip else ends[i]
                total += math.dist(here, entry)
                here = exit_
            best = min(best, total)
    return best


def test_collinear_segments_left_to_right():
    paths = [segment((40, 0), (50, 0)), segment((0, 0), (10, 0)), segment((20, 0), (30, 0))]
    order = order_paths(paths, (0.0, 0.0))
    assert order.order == (1, 2, 0)
    assert order.reversed == (False, False, False)
    assert order.travel == pytest.approx(20.0)
    assert order.travel == pytest.approx(_brute_force_travel(paths, (0.0, 0.0)))


def test_single_path_identity():
    order = order_paths([segment((5, 5), (9, 5))], (0.0, 0.0))
    assert order.order == (0,) and order.reversed == (False,)


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("seed", range(4))
def test_small_instances_are_optimal(n, seed):
    paths = _random_segments(np.random.default_rng(100 * n + seed), n)
    best = _brute_force_travel(paths, (0.0, 0.0))
    assert order_paths(paths, (0.0, 0.0)).travel == pytest.approx(best, abs=1e-9)


@pytest.mark.parametrize("seed", range(100))
def test_fifty_path_instances(seed):
    rng = np.random.default_rng(1000 + seed)
    paths = _random_segments(rng, 50)
    shuffled = [paths[i] for i in rng.permutation(50)]
    start = (0.0, 0.0)
    planned = order_paths(shuffled, start).travel
    nearest = nearest_neighbour_travel(shuffled, start)
    assert planned <= nearest + 1e-9
    assert nearest <= sequence_travel(shuffled, start)


def test_pulsed_160mm_at_160(machine):
    events = weld_schedule(segment((0, 0), (160, 0)), 160.0, WeldMode("pulsed", 50, 500), machine)
    assert sum(e.on for e in events) == 120
    assert events[-1].time_ms <= 60000.0


def test_pulse_period_100ms(machine):
    with pytest.raises(ToolpathError, match="E_PULSE_TOO_SHORT"):
        weld_schedule(segment((0, 0), (160, 0)), 160.0, WeldMode("pulsed", 50, 100), machine)


def test_straight_cut_has_no_lifts():
    knife = knife_orientation(segment((0, 0), (50, 0)))
    assert knife.angles == (0.0,)
    assert knife.lifts == ()


def test_right_angle_single_lift():
    knife = knife_orientation(Polyline.from_coords([(0, 0), (10, 0), (10, 10)]))
    assert knife.lifts == (1,)


def test_mixed_stack_welds_at_slowest_feed(load_sheet, machine):
    tp = plan(load_sheet("bending"), machine)
    weld_moves = [a for a in tp.actions[:tp.first_cut_index()] if isinstance(a, Move)]
    assert {a.feed for a in weld_moves if a.feed != machine.plunge_feed} == {100.0}


def test_rect_pouch_one_weld_one_cut_traversal(load_sheet, machine):
    tp = plan(load_sheet("rect_pouch"), machine)
    assert len(tp.weld_order) == 1
    assert len(tp.cut_order) == 1
    plunges = [a for a in tp.actions if isinstance(a, Move) and a.feed == machine.plunge_feed]
    # one weld plunge, one cut plunge plus three corner re-plunges
    assert len(plunges) == 5
