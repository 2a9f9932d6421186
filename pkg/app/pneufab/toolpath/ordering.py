"""
Visit order for a set of paths. Small sets are solved exactly; larger ones
start from nearest neighbour and apply 2-opt with direction flips and
single-path relocation until nothing improves.

Open paths may be entered from either end; closed paths start and end at
their first vertex. Travel is the straight-line distance between the exit of
one path and the entry of the next, starting from ``start``.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np
from scipy.spatial.distance import cdist

from pneufab.geometry import Point, Polyline
from pneufab.toolpath.constants import EXACT_ORDER_LIMIT, IMPROVEMENT_EPS

logger = logging.getLogger(__name__)

Visit = Tuple[int, bool]  # (path index, traversed reversed)


@dataclass(frozen=True)
class PathOrder:
    order: Tuple[int, ...]
    reversed: Tuple[bool, ...]
    entries: Tuple[Point, ...]
    travel: float

    def oriented(self, paths: Sequence[Polyline]) -> List[Polyline]:
        return [paths[i].reversed() if flip else paths[i] for i, flip in zip(self.order, self.reversed)]


class _Endpoints:
    def __init__(self, paths: Sequence[Polyline]):
        self.heads = np.array([[p.start.x, p.start.y] for p in paths], dtype=float)
        self.tails = np.array([[p.end.x, p.end.y] for p in paths], dtype=float)
        self.closed = [p.closed for p in paths]

    def entry(self, visit: Visit) -> np.ndarray:
        index, flip = visit
        return self.tails[index] if flip else self.heads[index]

    def exit(self, visit: Visit) -> np.ndarray:
        index, flip = visit
        return self.heads[index] if flip else self.tails[index]


def tour_travel(points: _Endpoints, tour: Sequence[Visit], start: np.ndarray) -> float:
    total, here = 0.0, start
    for visit in tour:
        total += float(np.hypot(*(points.entry(visit) - here)))
        here = points.exit(visit)
    return total


def _nearest_neighbour(points: _Endpoints, start: np.ndarray) -> List[Visit]:
    n = len(points.closed)
    remaining = np.ones(n, dtype=bool)
    here = start
    tour: List[Visit] = []
    for _ in range(n):
        d = cdist(here[None, :], np.vstack([points.heads, points.tails]))[0]
        d[:n][~remaining] = np.inf
        d[n:][~remaining] = np.inf
        # reversed entry only for open paths; ties go to the lowest index, forward first
        d[n:][np.array(points.closed)] = np.inf
        forward, backward = d[:n], d[n:]
        best = min(range(n), key=lambda i: (min(forward[i], backward[i]), i))
        visit = (best, bool(backward[best] < forward[best]))
        tour.append(visit)
        remaining[best] = False
        here = points.exit(visit)
    return tour


def _two_opt_pass(points: _Endpoints, tour: List[Visit], start: np.ndarray) -> bool:
    """One sweep of segment reversals (a one-path reversal is a direction flip)."""
    improved = False
    n = len(tour)
    for i in range(n):
        entries = np.array([points.entry(v) for v in tour])
        exits = np.array([points.exit(v) for v in tour])
        before_i = start if i == 0 else exits[i - 1]
        js = np.arange(i, n)
        has_next = js + 1 < n
        nxt = entries[np.minimum(js + 1, n - 1)]

        before = np.hypot(*(entries[i] - before_i)) + np.where(
            has_next, np.hypot(*(nxt - exits[js]).T), 0.0
        )
        after = np.hypot(*(exits[js] - before_i).T) + np.where(
            has_next, np.hypot(*(nxt - entries[i]).T), 0.0
        )
        delta = after - before
        k = int(np.argmin(delta))
        if delta[k] < -IMPROVEMENT_EPS:
            j = i + k
            segment = [(index, not flip and not points.closed[index]) for index, flip in reversed(tour[i:j + 1])]
            tour[i:j + 1] = segment
            improved = True
    return improved


def _relocate_pass(points: _Endpoints, tour: List[Visit], start: np.ndarray) -> bool:
    """Move single paths to a cheaper slot (either direction)."""
    improved = False
    for i in range(len(tour)):
        entries = np.array([points.entry(v) for v in tour])
        exits = np.array([points.exit(v) for v in tour])
        before = start if i == 0 else exits[i - 1]
        gain = math.dist(before, entries[i])
        if i + 1 < len(tour):
            gain += math.dist(exits[i], entries[i + 1]) - math.dist(before, entries[i + 1])

        rest = tour[:i] + tour[i + 1:]
        # slot k inserts between a[k] and b[k]; the last slot has no successor
        a = np.vstack([start[None, :], np.delete(exits, i, axis=0)])
        b = np.delete(entries, i, axis=0)
        bridge = np.zeros(len(a))
        bridge[:-1] = np.hypot(*(b - a[:-1]).T)

        index = tour[i][0]
        options = [(index, False)] if points.closed[index] else [(index, False), (index, True)]
        costs = np.empty((len(a), len(options)))
        for col, option in enumerate(options):
            e, x = points.entry(option), points.exit(option)
            costs[:, col] = np.hypot(*(a - e).T) - bridge
            costs[:-1, col] += np.hypot(*(b - x).T)
        delta = costs - gain
        # first minimum in (slot, direction) order
        slot, col = np.unravel_index(int(np.argmin(delta)), delta.shape)
        if delta[slot, col] < -IMPROVEMENT_EPS:
            tour[:] = rest[:slot] + [options[col]] + rest[slot:]
            improved = True
    return improved


def _exact(points: _Endpoints, start: np.ndarray) -> List[Visit]:
    """Optimal tour by dynamic programming over visited subsets."""
    n = len(points.closed)
    visits = [(i, flip) for i in range(n) for flip in ((False,) if points.closed[i] else (False, True))]
    entry = {v: tuple(points.entry(v)) for v in visits}
    exit_ = {v: tuple(points.exit(v)) for v in visits}
    origin = tuple(start)

    # (subset, last visit) -> (travel, previous visit)
    best = {(1 << v[0], v): (math.dist(origin, entry[v]), None) for v in visits}
    for mask in range(1, 1 << n):
        for v in visits:
            state = best.get((mask, v))
            if state is None:
                continue
            for w in visits:
                bit = 1 << w[0]
                if mask & bit:
                    continue
                cost = state[0] + math.dist(exit_[v], entry[w])
                key = (mask | bit, w)
                if key not in best or cost < best[key][0] - IMPROVEMENT_EPS:
                    best[key] = (cost, v)

    full = (1 << n) - 1
    last = min((v for v in visits if (full, v) in best), key=lambda v: best[(full, v)][0])
    tour, mask = [], full
    while last is not None:
        tour.append(last)
        last, mask = best[(mask, last)][1], mask & ~(1 << last[0])
    return tour[::-1]


def _improve(points: _Endpoints, tour: List[Visit], start: np.ndarray) -> List[Visit]:
    tour = list(tour)
    while True:
        changed = _two_opt_pass(points, tour, start)
        changed = _relocate_pass(points, tour, start) or changed
        if not changed:
            return tour


def order_paths(paths: Sequence[Polyline], start: Union[Point, Tuple[float, float]]) -> PathOrder:
    """Deterministic visit order; never worse than visiting in input order."""
    if not paths:
        return PathOrder((), (), (), 0.0)
    here = np.array([start.x, start.y] if isinstance(start, Point) else start, dtype=float)
    points = _Endpoints(paths)

    if len(paths) <= EXACT_ORDER_LIMIT:
        tour = _exact(points, here)
        travel = tour_travel(points, tour, here)
    else:
        candidates = [
            _improve(points, _nearest_neighbour(points, here), here),
            _improve(points, [(i, False) for i in range(len(paths))], here),
        ]
        travels = [tour_travel(points, t, here) for t in candidates]
        pick = 0 if travels[0] <= travels[1] + IMPROVEMENT_EPS else 1
        tour, travel = candidates[pick], travels[pick]

    entries = tuple(Point(*map(float, points.entry(v))) for v in tour)
    logger.debug(f"Ordered {len(paths)} paths, travel {travel:.3f} mm")
    return PathOrder(
        order=tuple(i for i, _ in tour),
        reversed=tuple(flip for _, flip in tour),
        entries=entries,
        travel=travel,
    )


def nearest_neighbour_travel(paths: Sequence[Polyline], start: Tuple[float, float]) -> float:
    """Travel of the plain nearest-neighbour tour (benchmark for the improved order)."""
    here = np.array(start, dtype=float)
    points = _Endpoints(paths)
    return tour_travel(points, _nearest_neighbour(points, here), here)


def sequence_travel(paths: Sequence[Polyline], start: Tuple[float, float]) -> float:
    """Travel when visiting ``paths`` as given, each entered at its start."""
    here = np.array(start, dtype=float)
    points = _Endpoints(paths)
    return tour_travel(points, [(i, False) for i in range(len(paths))], here)
