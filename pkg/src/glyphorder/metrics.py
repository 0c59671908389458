"""Learning curves, efficiencies, and clustering diagnostics.

A learning order induces a step function F(C): cumulative usage
frequency against cumulative learning cost. Frequency is credited only
once an item's full cost is paid, so each step jumps at the right edge
of its cost interval. Final efficiency is F at the horizon C0; mean
efficiency is the exact average of F over [0, C0], i.e. the area under
the step function divided by C0. Items are consumed in order while the
running cost stays within C0; the first item over budget ends the curve,
and nothing after it is counted.

Hierarchal orders pay each item exactly once. For non-hierarchal orders
(someone learning by rote, most frequent first) the charging mode prices
an item together with all its still-unlearned closure members, who are
not thereby learned: they cost full price again at their own positions.

Clustering diagnostics measure how far each item sits from the nearest
preceding direct component (d1) and from the nearest other item sharing
a direct component, in either direction (d2), as running prefix
averages over the order.
"""

from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .network import DecompositionNetwork
from .ordering import LearningOrder, validate_topological

DEFAULT_HORIZONS = (500.0, 1500.0)
COMPARISON_HORIZON = 4000.0


class NotTopological(Exception):
    """Hierarchal accounting demanded, but the order violates hierarchy."""

    def __init__(self, violations):
        self.violations = list(violations)
        preview = ", ".join("%s before %s" % (v.compound, v.component)
                            for v in self.violations[:3])
        more = "" if len(self.violations) <= 3 else ", ..."
        super().__init__("%d hierarchy violations (%s%s)" % (len(self.violations), preview, more))


class NonPositiveHorizon(ValueError):
    """The evaluation horizon C0 must be positive."""


class MissingCost(Exception):
    """Charging mode met an unlearned component with no known cost."""


class CostMode(Enum):
    """How an order's items are priced when building its curve."""

    HIERARCHAL = "hierarchal"
    CHARGE_UNLEARNED = "charge-unlearned"


@dataclass(frozen=True)
class LearningCurve:
    """The step function F(C) plus the derived summary numbers.

    `points` holds the jump corners (C, F), C strictly increasing;
    `counts` gives how many items each corner settles (zero-cost items
    merge into the preceding corner). `n_learned` items were fully paid
    within the horizon `c0`.
    """

    points: tuple[tuple[float, float], ...]
    counts: tuple[int, ...]
    c0: float
    final_efficiency: float
    mean_efficiency: float
    n_learned: int


def _step_area(points: Sequence[tuple[float, float]], c0: float) -> float:
    """Exact area under the step function on [0, c0]; F is 0 before the
    first corner and holds each corner's value until the next."""
    if not points:
        return 0.0
    cs = np.array([p[0] for p in points], dtype=float)
    fs = np.array([p[1] for p in points], dtype=float)
    edges = np.append(cs, c0)
    return float(np.sum(fs * np.diff(edges)))


def curve(net: DecompositionNetwork, order: LearningOrder, c0: float,
          mode: CostMode = CostMode.HIERARCHAL,
          cost_lookup: dict[str, float] | None = None) -> LearningCurve:
    """Build the learning curve of `order` evaluated at horizon `c0`.

    Hierarchal mode requires a violation-free order and charges each
    item its own cost. Charge-unlearned mode accepts any order; an item
    pays for itself plus every closure member not yet learned, and those
    members still pay full price at their own positions later. Costs of
    members outside the order come from `cost_lookup`.

    Raises:
        NonPositiveHorizon: c0 <= 0.
        NotTopological: hierarchal mode on a violating order.
        MissingCost: charging mode found no cost for an absent member.
    """
    if c0 <= 0:
        raise NonPositiveHorizon("c0 must be positive, got %r" % (c0,))
    if mode is CostMode.HIERARCHAL:
        violations = validate_topological(net, order)
        if violations:
            raise NotTopological(violations)

    own_cost = {item.glyph: item.cost for item in order}
    charge_costs = dict(cost_lookup) if cost_lookup else {}
    charge_costs.update(own_cost)

    points: list[tuple[float, float]] = []
    counts: list[int] = []
    cum_cost = 0.0
    cum_freq = 0.0
    n_learned = 0
    learned: set[str] = set()

    for item in order:
        eff_cost = item.cost
        if mode is CostMode.CHARGE_UNLEARNED:
            for member in net.closure(item.glyph):
                if member in learned:
                    continue
                try:
                    eff_cost += charge_costs[member]
                except KeyError:
                    raise MissingCost(member) from None
        if cum_cost + eff_cost > c0:
            break
        cum_cost += eff_cost
        cum_freq += item.freq
        learned.add(item.glyph)
        n_learned += 1
        if points and points[-1][0] == cum_cost:
            points[-1] = (cum_cost, cum_freq)
            counts[-1] += 1
        else:
            points.append((cum_cost, cum_freq))
            counts.append(1)

    final = points[-1][1] if points else 0.0
    mean = _step_area(points, c0) / c0
    return LearningCurve(points=tuple(points), counts=tuple(counts), c0=c0,
                         final_efficiency=final, mean_efficiency=mean,
                         n_learned=n_learned)


def at_horizon(cv: LearningCurve, h: float) -> tuple[int, float, float]:
    """(n_learned, final, mean) of a stored curve at a smaller horizon.

    Valid for 0 < h <= cv.c0: consumption is a prefix property, so
    truncating the stored corners reproduces a fresh evaluation at h.
    """
    if h <= 0:
        raise NonPositiveHorizon("horizon must be positive, got %r" % (h,))
    if h > cv.c0:
        raise ValueError("horizon %g exceeds the curve's c0 %g" % (h, cv.c0))
    kept = [(c, f) for (c, f) in cv.points if c <= h]
    n = sum(cnt for (c, _), cnt in zip(cv.points, cv.counts) if c <= h)
    final = kept[-1][1] if kept else 0.0
    mean = _step_area(kept, h) / h
    return n, final, mean


@dataclass(frozen=True)
class ClusterRow:
    """Prefix averages at prefix length n; None when nothing is defined."""

    n: int
    avg_d1: float | None
    avg_d2: float | None


@dataclass(frozen=True)
class ClusterStats:
    """Running clustering averages; rows below min_reported_n are noisy."""

    rows: tuple[ClusterRow, ...]
    min_reported_n: int = 250


def cluster_stats(net: DecompositionNetwork, order: LearningOrder | Sequence[str],
                  max_n: int | None = None, min_reported_n: int = 250) -> ClusterStats:
    """Distance-to-component diagnostics over prefixes of the order.

    For the item at position i (1-based): d1 is the distance back to the
    nearest preceding direct component present in the order; d2 is the
    distance, either direction, to the nearest other item sharing a
    direct component. Both are measured against the full order; the
    prefix length only restricts which positions enter the averages.
    Undefined values (no components present, no sharer) are skipped.
    """
    ids = order.ids() if isinstance(order, LearningOrder) else list(order)
    limit = len(ids) if max_n is None else min(max_n, len(ids))
    pos = {g: k for k, g in enumerate(ids)}

    # Positions of the order's items per direct component they contain.
    member_pos: dict[str, list[int]] = {}
    for k, glyph in enumerate(ids):
        for comp in set(net.node(glyph).components):
            member_pos.setdefault(comp, []).append(k)
    for vals in member_pos.values():
        vals.sort()

    d1 = np.full(len(ids), np.nan)
    d2 = np.full(len(ids), np.nan)
    for k, glyph in enumerate(ids):
        comps = set(net.node(glyph).components)
        best1 = None
        best2 = None
        for comp in comps:
            at = pos.get(comp)
            if at is not None and at < k:
                dist = k - at
                if best1 is None or dist < best1:
                    best1 = dist
            for other in _nearest(member_pos.get(comp, ()), k):
                if best2 is None or other < best2:
                    best2 = other
        if best1 is not None:
            d1[k] = best1
        if best2 is not None:
            d2[k] = best2

    rows = []
    have1 = np.cumsum(~np.isnan(d1))
    have2 = np.cumsum(~np.isnan(d2))
    sum1 = np.cumsum(np.nan_to_num(d1))
    sum2 = np.cumsum(np.nan_to_num(d2))
    for n in range(1, limit + 1):
        avg1 = float(sum1[n - 1] / have1[n - 1]) if have1[n - 1] else None
        avg2 = float(sum2[n - 1] / have2[n - 1]) if have2[n - 1] else None
        rows.append(ClusterRow(n=n, avg_d1=avg1, avg_d2=avg2))
    return ClusterStats(rows=tuple(rows), min_reported_n=min_reported_n)


def _nearest(positions: Sequence[int], k: int) -> list[int]:
    """Distances from k to its nearest neighbors (excluding k) in a
    sorted position list; empty when k is the only occupant."""
    out = []
    at = bisect_left(positions, k)
    below = at - 1
    above = at + 1 if at < len(positions) and positions[at] == k else at
    if below >= 0:
        out.append(k - positions[below])
    if above < len(positions):
        out.append(positions[above] - k)
    return out


def table_report(curves: Sequence[LearningCurve], horizons: Sequence[float] = DEFAULT_HORIZONS,
                 labels: Sequence[str] | None = None) -> str:
    """Summary table: one row per curve per horizon.

    Columns: label, c0, n_learned, lambda_f, lambda_avg (efficiencies to
    3 decimals). Horizons must not exceed each curve's own c0. An empty
    curve list yields an empty report.
    """
    if not curves:
        return ""
    if labels is None:
        labels = ["order-%d" % (k + 1) for k in range(len(curves))]
    lines = ["label,c0,n_learned,lambda_f,lambda_avg"]
    for label, cv in zip(labels, curves):
        for h in horizons:
            n, final, mean = at_horizon(cv, h)
            lines.append("%s,%g,%d,%.3f,%.3f" % (label, h, n, final, mean))
    return "\n".join(lines) + "\n"


def serialize_curve_csv(cv: LearningCurve) -> str:
    """Curve CSV: cum_cost,cum_freq corner rows."""
    lines = ["cum_cost,cum_freq"]
    for c, f in cv.points:
        lines.append("%.6f,%.9f" % (c, f))
    return "\n".join(lines) + "\n"


def curve_summary_json(cv: LearningCurve) -> str:
    """JSON sidecar with the curve's summary numbers."""
    payload = {
        "c0": cv.c0,
        "lambda_f": round(cv.final_efficiency, 12),
        "lambda_avg": round(cv.mean_efficiency, 12),
        "n_learned": cv.n_learned,
    }
    return json.dumps(payload, sort_keys=True) + "\n"


def serialize_cluster_csv(stats: ClusterStats) -> str:
    """Cluster CSV: n,avg_d1,avg_d2 with blanks for undefined averages."""
    lines = ["n,avg_d1,avg_d2"]
    for row in stats.rows:
        a1 = "%.3f" % row.avg_d1 if row.avg_d1 is not None else ""
        a2 = "%.3f" % row.avg_d2 if row.avg_d2 is not None else ""
        lines.append("%d,%s,%s" % (row.n, a1, a2))
    return "\n".join(lines) + "\n"
