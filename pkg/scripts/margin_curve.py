"""Tabulate D(p) = sum x^p - sum y^p over an exponent range as CSV.

Defaults to the eigenvalues of the 4x4 example; pass --x/--y to use other
root vectors, or --u/--v to use the roots of prod(t^2 - 2u_i t + 1).
"""

import argparse
import csv
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from rootmaj.linalg import klemes_example
from rootmaj.polyfact import roots
from rootmaj.powermaj import margin
from rootmaj.vectors import parse_vector


@dataclass
class Config:
    p_min: float = 0.01
    p_max: float = 8.0
    num: int = 200
    x: Optional[tuple] = None
    y: Optional[tuple] = None


def curve(cfg: Config):
    if cfg.x is None or cfg.y is None:
        b = klemes_example()
        x, y = b.x, b.y
    else:
        x, y = cfg.x, cfg.y
    ps = np.geomspace(cfg.p_min, cfg.p_max, cfg.num)
    return [(float(p), margin(x, y, float(p))) for p in ps]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p-min", type=float, default=Config.p_min)
    ap.add_argument("--p-max", type=float, default=Config.p_max)
    ap.add_argument("--num", type=int, default=Config.num)
    ap.add_argument("--x")
    ap.add_argument("--y")
    ap.add_argument("--u")
    ap.add_argument("--v")
    a = ap.parse_args()
    x = y = None
    if a.u and a.v:
        x, y = roots(parse_vector(a.u)), roots(parse_vector(a.v))
    elif a.x and a.y:
        x, y = parse_vector(a.x), parse_vector(a.y)
    rows = curve(Config(a.p_min, a.p_max, a.num, x, y))
    w = csv.writer(sys.stdout)
    w.writerow(["p", "D"])
    for p, d in rows:
        w.writerow([f"{p:.6g}", f"{d:.12g}"])


if __name__ == "__main__":
    main()
