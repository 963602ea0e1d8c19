"""Measure how well ``recover_factorization`` inverts ``expand``.

Draws random u in [1, 10]^n, expands, recovers, and bins the forward error
max|u_rec - u| by the smallest gap between entries of u.  Also reports the
backward error of the recovered coefficients.  Clustered u are
ill-conditioned: their roots move by about sqrt(eps) under rounding of the
coefficients, which the bins make visible.
"""

import argparse
from dataclasses import dataclass

import numpy as np

from rootmaj.polyfact import expand, recover_factorization


@dataclass
class Config:
    samples: int = 5000
    n_max: int = 6
    seed: int = 0
    bins: tuple = (0.0, 1e-3, 1e-2, 0.1, 1.0, 10.0)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    cfg = Config(a.samples, a.n_max, a.seed)

    rng = np.random.default_rng(cfg.seed)
    gaps, fwd, bwd, errors = [], [], [], 0
    for _ in range(cfg.samples):
        n = int(rng.integers(2, cfg.n_max + 1))
        u = np.sort(rng.uniform(1.0, 10.0, n))[::-1]
        c = np.array(expand(u).coeffs)
        try:
            got = np.array(recover_factorization(c).u)
        except ValueError:
            errors += 1
            continue
        gaps.append(float(np.min(-np.diff(u))))
        fwd.append(float(np.max(np.abs(got - u))))
        back = np.array(expand(got).coeffs)
        bwd.append(float(np.max(np.abs(back - c)) / np.abs(c).max()))
    gaps, fwd, bwd = map(np.array, (gaps, fwd, bwd))

    print(f"{'min gap in':>22} {'count':>6} {'max fwd err':>12} {'max bwd err':>12}")
    for lo, hi in zip(cfg.bins, cfg.bins[1:]):
        m = (gaps >= lo) & (gaps < hi)
        if m.any():
            print(f"[{lo:8.0e}, {hi:8.0e}) {m.sum():>6} {fwd[m].max():>12.2e} {bwd[m].max():>12.2e}")
    print(f"recovery errors raised: {errors}")


if __name__ == "__main__":
    main()
