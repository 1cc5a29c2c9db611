"""Transfer-window detection and min-max parameter sweeps.

A System bundles a cluster geometry with the initial node.  fp_value and
fn_value evaluate the two sweep objectives on a uniform time grid: the
worst-case best transfer probability over all target nodes, and the
worst-case best pairwise negativity over all node pairs.  sweep1d and
sweep2d scan them over the coupling-strength parameter delta = b**-3,
and hpst_times locates the per-node arrival peaks and the transfer
window (the time by which every node has been reached with probability
at least P0).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .dynamics import probability_grid, tau_grid
from .geometry import (
    FIELD_ALONG_B,
    FIELD_PERPENDICULAR,
    coupling_matrix,
    delta_to_b,
    layout_chain2,
    layout_parallelepiped,
    layout_rectangle,
)
from .hamiltonian import Spectrum, build_D, diagonalize

__all__ = [
    "DISPLAY_MARGIN",
    "System",
    "PeakRecord",
    "SweepResult",
    "fp_value",
    "fn_value",
    "hpst_times",
    "sweep1d",
    "sweep2d",
]

SYSTEM_KINDS = ("chain2", "rect-perp", "rect-along", "box")

_KIND_NODES = {"chain2": 2, "rect-perp": 4, "rect-along": 4, "box": 8}

# Interval membership uses fp >= p0 - margin.  Window endpoints are
# conventionally quoted at two decimals, so a grid point whose best
# probability rounds to the threshold (e.g. 0.8953 printing as 0.90)
# belongs to the window.  margin=0 gives the strict cut.
DISPLAY_MARGIN = 0.005


@dataclass(frozen=True)
class System:
    """A cluster geometry plus the initially excited node.

    kind selects the layout: 'chain2' (two nodes, no parameters),
    'rect-perp' / 'rect-along' (rectangle with side b = delta**(-1/3),
    field perpendicular to the plane or along side b) and 'box'
    (rectangular parallelepiped, delta1 for the in-plane side and
    delta2 for the height).
    """

    kind: str
    delta: float | None = None
    delta1: float | None = None
    delta2: float | None = None
    k0: int = 1

    def __post_init__(self):
        if self.kind not in SYSTEM_KINDS:
            raise ValueError(f"unknown system kind {self.kind!r}")
        need_delta = self.kind in ("rect-perp", "rect-along")
        need_pair = self.kind == "box"
        if need_delta and self.delta is None:
            raise ValueError(f"{self.kind} requires delta")
        if need_pair and (self.delta1 is None or self.delta2 is None):
            raise ValueError("box requires delta1 and delta2")
        if not need_delta and self.delta is not None:
            raise ValueError(f"{self.kind} takes no delta")
        if not need_pair and (self.delta1 is not None or self.delta2 is not None):
            raise ValueError(f"{self.kind} takes no delta1/delta2")
        if not 1 <= self.k0 <= self.n_nodes:
            raise ValueError(f"k0={self.k0} outside 1..{self.n_nodes}")

    @property
    def n_nodes(self) -> int:
        return _KIND_NODES[self.kind]

    def layout(self):
        if self.kind == "chain2":
            return layout_chain2()
        if self.kind == "rect-perp":
            return layout_rectangle(delta_to_b(self.delta), FIELD_PERPENDICULAR)
        if self.kind == "rect-along":
            return layout_rectangle(delta_to_b(self.delta), FIELD_ALONG_B)
        return layout_parallelepiped(delta_to_b(self.delta1), delta_to_b(self.delta2))

    def spectrum(self) -> Spectrum:
        return diagonalize(build_D(coupling_matrix(self.layout())))


@dataclass(frozen=True)
class PeakRecord:
    """Earliest high-probability arrival at one target node."""

    target: int
    tau_star: float
    p_star: float


@dataclass(frozen=True)
class SweepResult:
    """Outcome of a parameter sweep.

    grid holds the swept points (delta values, or (delta1, delta2) rows
    for 2D), fp and optionally fn the objectives per point, hpst the
    per-point membership flags and intervals the maximal contiguous
    flagged runs (1D only; empty tuple for 2D).
    """

    grid: np.ndarray
    fp: np.ndarray
    fn: np.ndarray | None
    intervals: tuple
    hpst: np.ndarray
    p0: float
    margin: float


def _uniform_grid(lo: float, hi: float, step: float, strict: bool) -> np.ndarray:
    if step <= 0:
        raise ValueError("step must be positive")
    if hi < lo or (strict and hi <= lo):
        raise ValueError(f"degenerate range [{lo}, {hi}]")
    n = round((hi - lo) / step)
    return lo + step * np.arange(n + 1)


def _probabilities(system: System, taus: np.ndarray) -> np.ndarray:
    return probability_grid(system.spectrum(), system.k0, taus)


def fp_value(system: System, T: float, dtau: float) -> float:
    """min over target nodes of the best transfer probability in [0, T].

    All N nodes count as targets, the initial node included (its
    objective is the return probability).
    """
    probs = _probabilities(system, tau_grid(T, dtau))
    return float(probs.max(axis=1).min())


def fn_value(system: System, T: float, dtau: float) -> float:
    """min over unordered node pairs of the best pairwise negativity."""
    probs = _probabilities(system, tau_grid(T, dtau))
    n = probs.shape[0]
    best = np.inf
    for i in range(n):
        for j in range(i + 1, n):
            sig = 1.0 - probs[i] - probs[j]
            neg = np.sqrt(sig * sig + 4.0 * probs[i] * probs[j]) - sig
            best = min(best, float(neg.max()))
    return best


def _refine(taus: np.ndarray, y: np.ndarray, i: int, dtau: float):
    """Parabolic vertex through (i-1, i, i+1); grid point if flat or at an edge."""
    if i == 0 or i == len(y) - 1:
        return float(taus[i]), float(y[i])
    d2 = y[i - 1] - 2.0 * y[i] + y[i + 1]
    if d2 >= -1e-300:
        return float(taus[i]), float(y[i])
    h = 0.5 * (y[i - 1] - y[i + 1]) / d2
    return float(taus[i] + h * dtau), float(y[i] - 0.25 * (y[i - 1] - y[i + 1]) * h)


def hpst_times(system: System, T: float, dtau: float, p0: float = 0.9):
    """Per-node arrival peaks and the transfer window.

    For each target m, finds the earliest local maximum of P_{k0 m} on
    the time grid with grid value at least p0 (the grid boundaries
    count as maxima) and refines it by parabolic interpolation through
    the neighboring points.  Returns (records, window) where window is
    the largest tau_star once every node has a record, and None while
    any node is missing one.
    """
    taus = tau_grid(T, dtau)
    probs = _probabilities(system, taus)
    records = []
    for m in range(1, system.n_nodes + 1):
        y = probs[m - 1]
        left = np.r_[True, y[1:] >= y[:-1]]
        right = np.r_[y[:-1] >= y[1:], True]
        for i in np.nonzero(left & right & (y >= p0))[0]:
            tau_star, p_star = _refine(taus, y, int(i), dtau)
            records.append(PeakRecord(m, tau_star, p_star))
            break
    window = max(r.tau_star for r in records) if len(records) == system.n_nodes else None
    return records, window


def _rect_fp(delta: float, mode: str, k0: int, taus: np.ndarray) -> float:
    spec = diagonalize(build_D(coupling_matrix(layout_rectangle(delta_to_b(delta), mode))))
    return float(probability_grid(spec, k0, taus).max(axis=1).min())


def _intervals_from_flags(grid: np.ndarray, flags: np.ndarray) -> tuple:
    runs = []
    start = None
    for k, on in enumerate(flags):
        if on and start is None:
            start = k
        elif not on and start is not None:
            runs.append((float(grid[start]), float(grid[k - 1])))
            start = None
    if start is not None:
        runs.append((float(grid[start]), float(grid[-1])))
    return tuple(runs)


def _ordered_map(fn, items, threads: int):
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def sweep1d(
    mode: str,
    delta_range,
    delta_step: float,
    T: float,
    dtau: float,
    P0: float = 0.9,
    with_fn: bool = False,
    margin: float = DISPLAY_MARGIN,
    threads: int = 1,
) -> SweepResult:
    """Scan the rectangle objectives over delta for the given field mode."""
    if mode not in (FIELD_PERPENDICULAR, FIELD_ALONG_B):
        raise ValueError(f"unknown field mode {mode!r}")
    lo, hi = delta_range
    grid = _uniform_grid(float(lo), float(hi), float(delta_step), strict=True)
    taus = tau_grid(T, dtau)
    fp = np.array(_ordered_map(lambda d: _rect_fp(d, mode, 1, taus), grid, threads))
    fn = None
    if with_fn:
        kind = "rect-perp" if mode == FIELD_PERPENDICULAR else "rect-along"
        fn = np.array(
            _ordered_map(lambda d: fn_value(System(kind, delta=d), T, dtau), grid, threads)
        )
    flags = fp >= P0 - margin
    return SweepResult(grid, fp, fn, _intervals_from_flags(grid, flags), flags, P0, margin)


def sweep2d(
    delta1_range,
    delta2_range,
    steps,
    T: float,
    dtau: float,
    P0: float = 0.9,
    margin: float = DISPLAY_MARGIN,
    threads: int = 1,
) -> SweepResult:
    """Scan the parallelepiped fp objective over the (delta1, delta2) grid.

    steps is one shared grid step or a (step1, step2) pair.  Either
    range may be a single point (lo == hi).
    """
    try:
        step1, step2 = steps
    except TypeError:
        step1 = step2 = steps
    g1 = _uniform_grid(float(delta1_range[0]), float(delta1_range[1]), float(step1), strict=False)
    g2 = _uniform_grid(float(delta2_range[0]), float(delta2_range[1]), float(step2), strict=False)
    if g1.size * g2.size > 1_000_000:
        raise ValueError(f"sweep grid has {g1.size * g2.size} points, cap is 1000000")
    grid = np.array([(d1, d2) for d1 in g1 for d2 in g2])

    def point_fp(pair):
        d1, d2 = pair
        return fp_value(System("box", delta1=float(d1), delta2=float(d2)), T, dtau)

    fp = np.array(_ordered_map(point_fp, grid, threads))
    flags = fp >= P0 - margin
    return SweepResult(grid, fp, None, (), flags, P0, margin)
