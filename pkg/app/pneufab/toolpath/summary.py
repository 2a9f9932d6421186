"""
Per-phase toolpath summary as a DataFrame (printed by ``pneufab plan``).
"""

import math

import pandas as pd

from pneufab.toolpath.actions import Dwell, Move, Rapid, Toolpath, ToolSelect, motion_time
from pneufab.toolpath.profile import MachineProfile

SUMMARY_COLUMNS = ["phase", "paths", "feed_mm", "rapid_mm", "dwell_ms", "time_s", "feeds"]


def summarize(tp: Toolpath, machine: MachineProfile) -> pd.DataFrame:
    """One row per tool phase plus the leading and trailing travel."""
    rows = {}

    def row(phase: str) -> dict:
        return rows.setdefault(phase, {
            "phase": phase, "paths": 0, "feed_mm": 0.0, "rapid_mm": 0.0,
            "dwell_ms": 0, "time_s": 0.0, "feeds": set(),
        })

    phase, here = "travel", tp.start
    for action in tp.actions:
        if isinstance(action, ToolSelect):
            phase = action.tool
            row(phase)
        elif isinstance(action, Rapid):
            r = row(phase)
            r["rapid_mm"] += math.dist(here, action.to)
            r["time_s"] += motion_time(here, action.to, machine.rapid_rate)
            here = action.to
        elif isinstance(action, Move):
            r = row(phase)
            r["feed_mm"] += math.dist(here, action.to)
            r["time_s"] += motion_time(here, action.to, action.feed)
            r["feeds"].add(action.feed)
            here = action.to
        elif isinstance(action, Dwell):
            r = row(phase)
            r["dwell_ms"] += action.ms
            r["time_s"] += action.ms / 1000.0

    if "weld" in rows:
        rows["weld"]["paths"] = len(tp.weld_order)
    if "cut" in rows:
        rows["cut"]["paths"] = len(tp.cut_order)

    frame = pd.DataFrame(list(rows.values()), columns=SUMMARY_COLUMNS)
    frame["feeds"] = frame["feeds"].map(lambda s: "/".join(f"{f:g}" for f in sorted(s)))
    total = {
        "phase": "total",
        "paths": int(frame["paths"].sum()),
        "feed_mm": frame["feed_mm"].sum(),
        "rapid_mm": frame["rapid_mm"].sum(),
        "dwell_ms": int(frame["dwell_ms"].sum()),
        "time_s": frame["time_s"].sum(),
        "feeds": "",
    }
    frame = pd.concat([frame, pd.DataFrame([total])], ignore_index=True)
    return frame.round({"feed_mm": 3, "rapid_mm": 3, "time_s": 2})
