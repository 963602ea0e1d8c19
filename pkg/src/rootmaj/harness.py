"""Randomized check that coefficient majorization gives root power majorization."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .polyfact import roots
from .powermaj import default_grid, power_majorizes
from .vectors import majorizes, random_majorization_pair


@dataclass(frozen=True)
class TrialFailure:
    trial: int
    u: tuple[float, ...]
    v: tuple[float, ...]
    violating_p: Optional[float]


@dataclass(frozen=True)
class TheoremSummary:
    trials: int
    passed: int
    failed: int
    negate: bool
    worst_min_margin_high: float
    worst_max_margin_low: float
    first_failure: Optional[TrialFailure]
    seed: int

    @property
    def ok(self) -> bool:
        # in negate mode every instance breaks the hypothesis and should be caught
        return self.failed == self.trials if self.negate else self.failed == 0

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.first_failure is not None:
            d["first_failure"]["u"] = list(self.first_failure.u)
            d["first_failure"]["v"] = list(self.first_failure.v)
        d["ok"] = self.ok
        return d


def trial_seed(seed: int, trial: int) -> int:
    """Independent, reproducible sub-seed for one trial."""
    return int(np.random.SeedSequence([seed, trial]).generate_state(1)[0])


def draw_instance(
    seed: int, trial: int, n_max: int, negate: bool = False
) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """One (u, v) pair: v < u by at most 2n T-transforms, or with one entry pushed up."""
    rng = np.random.default_rng(trial_seed(seed, trial))
    n = int(rng.integers(1, n_max + 1))
    k = int(rng.integers(0, 2 * n + 1))
    u, v = random_majorization_pair(n, k, (1.0, 10.0), seed=int(rng.integers(2**32)))
    if negate:
        w = list(v)
        i = int(rng.integers(n))
        w[i] += float(rng.uniform(0.5, 2.0))
        v = tuple(w)
    return u, v


def verify_theorem(
    trials: int = 1000,
    n_max: int = 6,
    seed: int = 0,
    tol: float = 1e-9,
    p_max: float = 64.0,
    negate: bool = False,
) -> TheoremSummary:
    if trials < 1 or n_max < 1:
        raise ValueError("trials and n_max must be positive")
    grid = default_grid(p_max)
    passed = 0
    worst_high = np.inf
    worst_low = -np.inf
    first = None
    for t in range(trials):
        u, v = draw_instance(seed, t, n_max, negate)
        if negate and majorizes(u, v, tol).holds:
            raise AssertionError("negated instance is still majorized")
        rep = power_majorizes(roots(u), roots(v), grid, tol)
        worst_high = min(worst_high, rep.min_margin_high)
        worst_low = max(worst_low, rep.max_margin_low)
        if rep.holds:
            passed += 1
        elif first is None:
            first = TrialFailure(t, u, v, rep.violating_p)
    return TheoremSummary(
        trials=trials,
        passed=passed,
        failed=trials - passed,
        negate=negate,
        worst_min_margin_high=float(worst_high),
        worst_max_margin_low=float(worst_low),
        first_failure=first,
        seed=seed,
    )
