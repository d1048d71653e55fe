"""Figure-data exports: fidelity contours and optimal-protocol curves.

Two export kinds, each available as CSV (flat grid, pinned header) or
JSON (grid plus overlay polylines and marked points):

* channel-plane maps over ``(tau, y)`` for a fixed alphabet and
  steering budget, one per steering direction
  (columns ``tau,y,f_avg,unphysical,eb,sb_ba,sb_ab,accessible,secure``);
* budget-plane maps of the optimal fidelity over ``(lambda, s)``
  (columns ``lambda,s,f_opt,threshold,secure``).

Grid cells are emitted in row-major order, outer loop over the first
axis.  Cell values for unphysical channels are null.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivergentEnergyError
from .fidelity import (
    SECURITY_TOL,
    _avg_fidelity_raw,
    f_opt,
    no_cloning_threshold,
    optimal_channel,
    s_ab_min,
)
from .gaussian import TOL, Direction
from .teleport import (
    cross_steerability,
    cross_steerability_limit,
    optimal_resource_fixed_sab,
    optimal_resource_fixed_sba,
)

SCHEMA_VERSION = 1

FIG1_COLUMNS = [
    "tau", "y", "f_avg", "unphysical", "eb", "sb_ba", "sb_ab",
    "accessible", "secure",
]
FIG2_COLUMNS = ["lambda", "s", "f_opt", "threshold", "secure"]

# Parameter range for the optimal-protocol overlay curve.
_CURVE_S_MAX = 6.0
_CURVE_S_STEP = 0.02


@dataclass(frozen=True)
class Axis:
    """Uniform grid ``start, start + step, ..., stop`` (inclusive)."""

    start: float
    stop: float
    step: float

    def __post_init__(self):
        if self.step <= 0.0 or self.stop < self.start:
            raise ValueError("axis needs step > 0 and stop >= start")

    @property
    def count(self) -> int:
        return int(round((self.stop - self.start) / self.step)) + 1

    def values(self) -> np.ndarray:
        return self.start + self.step * np.arange(self.count)

    def describe(self) -> dict:
        return {
            "min": self.start,
            "max": self.stop,
            "step": self.step,
            "count": self.count,
        }


def _direction_for_kind(kind: str) -> Direction:
    if kind in ("fig1a", "fig2a"):
        return Direction.B_TO_A
    if kind in ("fig1b", "fig2b"):
        return Direction.A_TO_B
    raise ValueError(f"unknown export kind {kind!r}")


def _budget_pair(direction: Direction, lam: float, steering: float):
    """Full budget (s_ba, s_ab) implied by one fixed steering budget.

    The direction not constrained by the user inherits the cross
    steerability of the optimal resource; when the optimum sits at the
    infinite-energy endpoint the family infimum is used instead.
    """
    tau, _, clamped = optimal_channel(lam, steering, direction)
    if clamped:
        cross = cross_steerability_limit(direction, tau, steering)
    elif direction is Direction.B_TO_A:
        cross = cross_steerability(optimal_resource_fixed_sba(tau, steering))
    else:
        cross = cross_steerability(optimal_resource_fixed_sab(tau, steering))
    if direction is Direction.B_TO_A:
        return steering, cross
    return cross, steering


def _optimal_curve(lam: float, direction: Direction) -> list:
    """Optimal channel per budget, ``[s, tau, y, clamped]`` rows."""
    rows = []
    steps = int(round(_CURVE_S_MAX / _CURVE_S_STEP))
    for k in range(steps + 1):
        s = k * _CURVE_S_STEP
        tau, y, clamped = optimal_channel(lam, s, direction)
        rows.append([s, tau, y, clamped])
    return rows


def _no_cloning_curve(lam: float, taus: np.ndarray) -> list:
    """Threshold contour ``F(tau, y) = threshold`` solved for ``y``."""
    f_star = no_cloning_threshold(lam)
    points = []
    for tau in taus:
        y = 2.0 / f_star - 2.0 * (1.0 - math.sqrt(tau)) ** 2 / lam - 1.0 - tau
        if y >= abs(1.0 - tau) - TOL:
            points.append([float(tau), y])
    return points


def build_fig1(
    kind: str,
    lam: float,
    steering: float,
    tau_axis: Axis,
    y_axis: Axis,
) -> dict:
    """Channel-plane export for one steering direction.

    Parameters
    ----------
    kind : str
        ``fig1a`` (fixed B->A budget) or ``fig1b`` (fixed A->B budget).
    lam : float
        Alphabet width.
    steering : float
        The fixed steering budget.
    tau_axis, y_axis : Axis
        Grid axes.
    """
    direction = _direction_for_kind(kind)
    s_ba, s_ab = _budget_pair(direction, lam, steering)
    threshold = no_cloning_threshold(lam)

    taus = tau_axis.values()
    ys = y_axis.values()
    tt = taus[:, None]
    yy = ys[None, :]

    unphysical = yy < np.abs(1.0 - tt) - TOL
    physical = ~unphysical
    f_avg = np.broadcast_to(
        _avg_fidelity_raw(tt, yy, lam), (len(taus), len(ys))
    )
    eb = physical & (yy >= 1.0 + tt - TOL)
    sb_ba = physical & (yy >= 0.5 * (1.0 + np.abs(2.0 * tt - 1.0)) - TOL)
    sb_ab = physical & (yy >= np.maximum(np.abs(1.0 - tt), 1.0) - TOL)
    acc = (
        physical
        & (yy >= math.exp(-s_ba) * tt - TOL)
        & (yy >= math.exp(-s_ab) - TOL)
    )
    secure = physical & (f_avg > threshold + SECURITY_TOL)

    tau_opt, y_opt, clamped = optimal_channel(lam, steering, direction)
    if direction is Direction.B_TO_A:
        tau_ref, y_ref, _ = optimal_channel(lam, 0.0, direction)
    else:
        s_min = s_ab_min(lam)
        tau_ref, y_ref, _ = optimal_channel(lam, s_min, direction)

    envelope = [
        [float(t), max(math.exp(-s_ba) * float(t), math.exp(-s_ab))]
        for t in taus
    ]
    if direction is Direction.B_TO_A:
        sb_line = [[float(t), 0.5 * (1.0 + abs(2.0 * t - 1.0))] for t in taus]
    else:
        sb_line = [[float(t), max(abs(1.0 - t), 1.0)] for t in taus]

    grid = {
        "tau": [float(t) for t in taus],
        "y": [float(v) for v in ys],
        "f_avg": [
            [None if unphysical[i, j] else float(f_avg[i, j]) for j in range(len(ys))]
            for i in range(len(taus))
        ],
        "unphysical": unphysical.astype(int).tolist(),
        "eb": eb.astype(int).tolist(),
        "sb_ba": sb_ba.astype(int).tolist(),
        "sb_ab": sb_ab.astype(int).tolist(),
        "accessible": acc.astype(int).tolist(),
        "secure": secure.astype(int).tolist(),
    }
    overlays = {
        "cp_boundary": [[float(t), abs(1.0 - float(t))] for t in taus],
        "eb_boundary": [[float(t), 1.0 + float(t)] for t in taus],
        "sb_boundary": sb_line,
        "accessible_boundary": envelope,
        "no_cloning": _no_cloning_curve(lam, taus),
        "optimal_curve": _optimal_curve(lam, direction),
        "points": {
            "optimal": [tau_opt, y_opt],
            "boundary": [tau_ref, y_ref],
        },
    }
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "params": {
            "direction": direction.value,
            "lambda": lam,
            "s_ba": s_ba,
            "s_ab": s_ab,
            "threshold": threshold,
            "optimal_clamped": bool(clamped),
            "tau_axis": tau_axis.describe(),
            "y_axis": y_axis.describe(),
        },
        "data": {"grid": grid, "overlays": overlays},
    }


def build_fig2(kind: str, lam_axis: Axis, s_axis: Axis) -> dict:
    """Budget-plane export of the optimal fidelity for one direction."""
    direction = _direction_for_kind(kind)
    lams = lam_axis.values()
    svals = s_axis.values()
    if lams[0] <= 0.0:
        raise ValueError("lambda axis must start above 0")

    f_grid = np.empty((len(lams), len(svals)))
    for i, lam in enumerate(lams):
        for j, s in enumerate(svals):
            f_grid[i, j] = f_opt(float(lam), float(s), direction)
    thresholds = np.array([no_cloning_threshold(float(lam)) for lam in lams])
    secure = f_grid > thresholds[:, None] + SECURITY_TOL

    if direction is Direction.B_TO_A:
        boundary = [[float(lam), 0.0] for lam in lams]
    else:
        boundary = [[float(lam), s_ab_min(float(lam))] for lam in lams]

    grid = {
        "lambda": [float(v) for v in lams],
        "s": [float(v) for v in svals],
        "f_opt": f_grid.tolist(),
        "threshold": thresholds.tolist(),
        "secure": secure.astype(int).tolist(),
    }
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "params": {
            "direction": direction.value,
            "lambda_axis": lam_axis.describe(),
            "s_axis": s_axis.describe(),
        },
        "data": {"grid": grid, "overlays": {"secure_boundary": boundary}},
    }


def fig1_rows(export: dict):
    """Flatten a channel-plane export into pinned-schema CSV rows."""
    grid = export["data"]["grid"]
    taus, ys = grid["tau"], grid["y"]
    for i, tau in enumerate(taus):
        for j, y in enumerate(ys):
            unphys = bool(grid["unphysical"][i][j])
            yield [
                tau,
                y,
                None if unphys else grid["f_avg"][i][j],
                unphys,
                bool(grid["eb"][i][j]),
                bool(grid["sb_ba"][i][j]),
                bool(grid["sb_ab"][i][j]),
                bool(grid["accessible"][i][j]),
                bool(grid["secure"][i][j]),
            ]


def fig2_rows(export: dict):
    """Flatten a budget-plane export into pinned-schema CSV rows."""
    grid = export["data"]["grid"]
    for i, lam in enumerate(grid["lambda"]):
        for j, s in enumerate(grid["s"]):
            yield [
                lam,
                s,
                grid["f_opt"][i][j],
                grid["threshold"][i],
                bool(grid["secure"][i][j]),
            ]
