"""Power majorization of positive vectors.

``y`` is power majorized by ``x`` when the margin
``D(p) = sum(x**p) - sum(y**p)`` is nonnegative for every ``p >= 1`` and
nonpositive for every ``0 < p < 1``.  The all-p statement is checked on a
finite exponent grid with local refinement, so a positive verdict means
"verified on grid".
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional, Sequence

import numpy as np

from .vectors import as_vector

DEFAULT_TOL = 1e-9
DEFAULT_P_MAX = 64.0
# margins this close to p = 1 vanish legitimately when the sums agree
UNIT_WINDOW = 1e-3


def _positive(x: Sequence[float], name: str) -> np.ndarray:
    arr = as_vector(x, name)
    if np.any(arr <= 0):
        raise ValueError(f"{name} must have strictly positive entries")
    return arr


def power_sum(x: Sequence[float], p: float) -> float:
    """``sum(x_i**p)`` as ``exp(p*log(x_i))`` with numpy's pairwise summation."""
    if not p > 0:
        raise ValueError("p must be positive")
    arr = _positive(x, "x")
    return float(np.sum(np.exp(p * np.log(arr))))


def margin(x: Sequence[float], y: Sequence[float], p: float) -> float:
    a = _positive(x, "x")
    b = _positive(y, "y")
    if a.size != b.size:
        raise ValueError(f"length mismatch: {a.size} != {b.size}")
    return power_sum(a, p) - power_sum(b, p)


@dataclass(frozen=True)
class ExponentGrid:
    points: tuple[float, ...]
    p_max: float
    refinement_depth: int = 20

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.size == 0 or np.any(pts <= 0):
            raise ValueError("grid points must be positive")
        if np.any(np.diff(pts) <= 0):
            raise ValueError("grid points must be strictly increasing")
        if 1.0 not in self.points:
            raise ValueError("grid must contain p = 1")
        if not (pts[0] < 1.0 and pts[-1] > 1.0):
            raise ValueError("grid must sample both p < 1 and p > 1")
        if self.refinement_depth < 0:
            raise ValueError("refinement_depth must be nonnegative")


def default_grid(p_max: float = DEFAULT_P_MAX, refinement_depth: int = 20) -> ExponentGrid:
    """50 log-spaced points in [0.01, 0.99], then 1, then 100 in [1.01, p_max]."""
    if not p_max > 1.01:
        raise ValueError("p_max must exceed 1.01")
    low = np.geomspace(0.01, 0.99, 50)
    high = np.geomspace(1.01, p_max, 100)
    pts = np.concatenate([low, [1.0], high])
    return ExponentGrid(tuple(pts.tolist()), float(p_max), refinement_depth)


@dataclass(frozen=True)
class PowerMajorizationReport:
    """Verdict for "y is power majorized by x" on a sampled exponent grid.

    ``min_margin_high`` is the smallest D(p) seen for p >= 1 and
    ``max_margin_low`` the largest for 0 < p < 1.  ``violating_p`` is the first
    violating exponent in the p >= 1 branch, or in the p < 1 branch if the
    high branch is clean.  ``extrapolation_flag`` records that beyond
    ``p_max`` the margin is still growing with ``max(x) > max(y)``, which is
    what justifies stopping the grid there.
    """

    holds: bool
    min_margin_high: float
    max_margin_low: float
    violating_p: Optional[float]
    sum_gap_at_1: float
    grid_size: int
    refined: bool
    extrapolation_flag: bool
    verified_on: str = "grid"

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "PowerMajorizationReport":
        return cls(
            holds=bool(d["holds"]),
            min_margin_high=float(d["min_margin_high"]),
            max_margin_low=float(d["max_margin_low"]),
            violating_p=None if d["violating_p"] is None else float(d["violating_p"]),
            sum_gap_at_1=float(d["sum_gap_at_1"]),
            grid_size=int(d["grid_size"]),
            refined=bool(d["refined"]),
            extrapolation_flag=bool(d["extrapolation_flag"]),
            verified_on=str(d.get("verified_on", "grid")),
        )


class _MarginSamples:
    """Accumulates D(p) and the scaled tolerance at every evaluated exponent."""

    def __init__(self, x: np.ndarray, y: np.ndarray, tol: float):
        self.logx = np.log(x)
        self.logy = np.log(y)
        self.tol = tol
        self.p: list[np.ndarray] = []
        self.d: list[np.ndarray] = []
        self.b: list[np.ndarray] = []

    def evaluate(self, ps: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        sx = np.exp(np.outer(ps, self.logx)).sum(axis=1)
        sy = np.exp(np.outer(ps, self.logy)).sum(axis=1)
        d = sx - sy
        b = self.tol * np.maximum(1.0, sx)
        self.p.append(ps)
        self.d.append(d)
        self.b.append(b)
        return d, b

    def collect(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        ps = np.concatenate(self.p)
        ps, idx = np.unique(ps, return_index=True)
        return ps, np.concatenate(self.d)[idx], np.concatenate(self.b)[idx]


def _slack(ps: np.ndarray, d: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Distance of D(p) inside the allowed side, in scaled tolerances; < 0 is a violation."""
    signed = np.where(ps >= 1.0, d, -d)
    return (signed + b) / b


def _refine(samples: _MarginSamples, lo: np.ndarray, hi: np.ndarray, depth: int) -> None:
    """Bisect every interval toward its most adverse margin, all intervals at once.

    Each level evaluates the two quarter points and the midpoint, then keeps
    the half whose quarter point has the smaller slack.
    """
    for _ in range(depth):
        mid = 0.5 * (lo + hi)
        left, right = 0.5 * (lo + mid), 0.5 * (mid + hi)
        samples.evaluate(mid)
        dl, bl = samples.evaluate(left)
        dr, br = samples.evaluate(right)
        go_left = _slack(left, dl, bl) <= _slack(right, dr, br)
        hi = np.where(go_left, mid, hi)
        lo = np.where(go_left, lo, mid)


def power_majorizes(
    x: Sequence[float],
    y: Sequence[float],
    grid: Optional[ExponentGrid] = None,
    tol: float = DEFAULT_TOL,
) -> PowerMajorizationReport:
    """Decide on ``grid`` whether ``y`` is power majorized by ``x``.

    The tolerance at each exponent is ``tol * max(1, sum(x**p))``.  Any sample
    whose margin is within ten tolerances of zero (outside a small window
    around p = 1) triggers bisection on its neighbouring intervals up to
    ``grid.refinement_depth`` levels before the verdict is taken.
    """
    a = _positive(x, "x")
    b = _positive(y, "y")
    if a.size != b.size:
        raise ValueError(f"length mismatch: {a.size} != {b.size}")
    if not tol > 0:
        raise ValueError("tol must be positive")
    grid = grid or default_grid()
    pts = np.asarray(grid.points)
    samples = _MarginSamples(a, b, tol)
    d, bound = samples.evaluate(pts)

    near_zero = (np.abs(d) <= 10.0 * bound) & (np.abs(pts - 1.0) > UNIT_WINDOW)
    intervals = set()
    for i in np.flatnonzero(near_zero):
        p = pts[i]
        for j in (i - 1, i + 1):
            if not 0 <= j < pts.size:
                continue
            q = pts[j]
            # a refinement interval never straddles p = 1
            if (p < 1.0) != (q < 1.0) or abs(q - 1.0) <= UNIT_WINDOW:
                q = 1.0 - UNIT_WINDOW if p < 1.0 else 1.0 + UNIT_WINDOW
            if q != p:
                intervals.add((min(p, q), max(p, q)))
    refined = bool(intervals) and grid.refinement_depth > 0
    if refined:
        lo, hi = np.array(sorted(intervals)).T
        _refine(samples, lo, hi, grid.refinement_depth)

    ps, ds, bs = samples.collect()
    high = ps >= 1.0
    min_high = float(ds[high].min())
    max_low = float(ds[~high].max()) if np.any(~high) else float("-inf")

    bad = _slack(ps, ds, bs) < 0
    violating = None
    for branch in (high, ~high):
        hits = ps[branch & bad]
        if hits.size:
            violating = float(hits[0])
            break

    # past p_max the largest entries dominate; growth there justifies stopping
    tail = d[-3:]
    extrapolation = bool(a.max() > b.max() and tail[0] < tail[1] < tail[2])
    if violating is None and b.max() > a.max() * (1.0 + tol):
        violating = _tail_violation(a, b, grid.p_max)

    return PowerMajorizationReport(
        holds=violating is None,
        min_margin_high=min_high,
        max_margin_low=max_low,
        violating_p=violating,
        sum_gap_at_1=float(d[pts == 1.0][0]),
        grid_size=int(ps.size),
        refined=refined,
        extrapolation_flag=extrapolation,
    )


def _tail_violation(a: np.ndarray, b: np.ndarray, p_max: float, max_doublings: int = 60) -> Optional[float]:
    """Find p > p_max with D(p) < 0 when ``max(y) > max(x)``.

    Sums are scaled by ``max(y)**p`` so large exponents do not overflow.
    """
    m = b.max()
    la, lb = np.log(a / m), np.log(b / m)
    p = p_max
    for _ in range(max_doublings):
        p *= 2.0
        if np.sum(np.exp(p * la)) < np.sum(np.exp(p * lb)):
            return float(p)
    return None
