"""Run the randomized theorem check over several master seeds.

With ``--negate`` every instance breaks the majorization hypothesis; the
script then reports how many were caught by the power-sum check.
"""

import argparse
import time
from dataclasses import dataclass

from rootmaj.harness import verify_theorem


@dataclass
class Config:
    seeds: tuple = (0, 1, 2, 3, 4)
    trials: int = 1000
    n_max: int = 6
    p_max: float = 64.0
    tol: float = 1e-9
    negate: bool = False


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, nargs="+", default=list(Config.seeds))
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--p-max", type=float, default=Config.p_max)
    ap.add_argument("--negate", action="store_true")
    a = ap.parse_args()
    cfg = Config(tuple(a.seeds), a.trials, a.n_max, a.p_max, negate=a.negate)

    print(f"{'seed':>6} {'passed':>7} {'failed':>7} {'min D, p>=1':>13} {'max D, p<1':>13} {'secs':>6}")
    all_ok = True
    for seed in cfg.seeds:
        t0 = time.perf_counter()
        s = verify_theorem(cfg.trials, cfg.n_max, seed, cfg.tol, cfg.p_max, cfg.negate)
        dt = time.perf_counter() - t0
        all_ok &= s.ok
        print(f"{seed:>6} {s.passed:>7} {s.failed:>7} {s.worst_min_margin_high:>13.3e} "
              f"{s.worst_max_margin_low:>13.3e} {dt:>6.1f}")
        if s.first_failure and not cfg.negate:
            print("   first failure:", s.first_failure)
    print("ok" if all_ok else "NOT ok")
    raise SystemExit(0 if all_ok else 1)


if __name__ == "__main__":
    main()
