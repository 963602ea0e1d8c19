"""Reproduce the 4x4 Gram matrix example and print each verdict with its margins."""

import argparse
import json
from dataclasses import asdict, dataclass

from rootmaj.linalg import klemes_example
from rootmaj.powermaj import margin


@dataclass
class Config:
    tol: float = 1e-9
    p_max: float = 64.0
    sample_p: tuple = (0.01, 0.1, 0.5, 0.9, 1.0, 1.01, 1.5, 2.0, 3.0, 10.0)
    as_json: bool = False


def run(cfg: Config) -> dict:
    b = klemes_example(cfg.tol, cfg.p_max)
    table = {p: margin(b.x, b.y, p) for p in cfg.sample_p}
    return {"config": asdict(cfg), "bundle": b.to_dict(), "margins": table}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tol", type=float, default=Config.tol)
    ap.add_argument("--p-max", type=float, default=Config.p_max)
    ap.add_argument("--json", action="store_true")
    a = ap.parse_args()
    cfg = Config(tol=a.tol, p_max=a.p_max, as_json=a.json)
    res = run(cfg)
    if cfg.as_json:
        print(json.dumps(res, indent=2, sort_keys=True, default=str))
        return
    b = res["bundle"]
    print("X =", b["X"])
    print("Y =", b["Y"])
    print("char poly X:", b["notes"]["char_poly_X"])
    print("char poly Y:", b["notes"]["char_poly_Y"])
    print("u =", b["u"], " v =", b["v"])
    print("x =", [round(t, 6) for t in b["x"]])
    print("y =", [round(t, 6) for t in b["y"]])
    print("coefficients majorized:", b["coefficient_majorization"]["holds"])
    print("roots majorized:       ", b["root_majorization"]["holds"],
          "(fails at k =", b["root_majorization"]["failing_k"], ")")
    print("roots power majorized: ", b["root_power_majorization"]["holds"])
    print("\n     p        D(p) = sum x^p - sum y^p")
    for p, d in res["margins"].items():
        print(f"{p:8.3f}  {d: .6e}")


if __name__ == "__main__":
    main()
