"""Command-line front end.

Exit codes: 0 the checked verdict holds, 1 it fails, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import linalg, polyfact, powermaj, schur
from .harness import verify_theorem
from .vectors import majorizes, parse_vector

EXIT_HOLDS, EXIT_FAILS, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    tol: float = 1e-9
    p_max: float = 64.0
    trials: int = 1000
    n_max: int = 6
    seed: int = 0
    output_format: str = "json"

    def __post_init__(self):
        if not (self.tol > 0 and math.isfinite(self.tol)):
            raise ValueError("--tol must be a positive number")
        if not self.p_max > 1.01:
            raise ValueError("--p-max must exceed 1.01")
        if self.trials < 1 or self.n_max < 1:
            raise ValueError("--trials and --n-max must be positive")
        if self.output_format not in ("json", "text"):
            raise ValueError("--output-format must be json or text")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    # subcommand copies default to SUPPRESS so they don't clobber flags given before the subcommand
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--tol", type=float, default=d(1e-9))
    p.add_argument("--p-max", type=float, default=d(64.0))
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--trials", type=int, default=d(1000))
    p.add_argument("--n-max", type=int, default=d(6))
    p.add_argument("--output-format", choices=("json", "text"), default=d("json"))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rootmaj", description=__doc__)
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help):
        sp = sub.add_parser(name, help=help)
        _add_globals(sp, suppress=True)
        return sp

    sp = add("majorize", "is v majorized by u")
    sp.add_argument("--u", required=True)
    sp.add_argument("--v", required=True)

    sp = add("power-majorize", "is y power majorized by x")
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)

    sp = add("roots", "roots of prod(t^2 - 2u_i t + 1)")
    sp.add_argument("--u", required=True)

    sp = add("expand", "coefficients of prod(t^2 - 2u_i t + 1)")
    sp.add_argument("--u", required=True)

    sp = add("factor", "recover u from palindromic coefficients")
    sp.add_argument("--coeffs", required=True)

    sp = add("verify-theorem", "random instances of the root power majorization theorem")
    sp.add_argument("--negate", action="store_true", help="break the hypothesis on purpose")

    add("klemes", "reproduce the 4x4 Gram matrix example")

    sp = add("schur-check", "Schur condition and proof sign suites at one exponent")
    sp.add_argument("--p", type=float, required=True)
    return parser


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".12g")
    if isinstance(value, (list, tuple)):
        if value and isinstance(value[0], (list, tuple)):
            return "; ".join(_fmt(row) for row in value)
        return ", ".join(_fmt(v) for v in value)
    return str(value)


def _write_text(payload: dict, out, indent: str = "") -> None:
    for key in sorted(payload):
        val = payload[key]
        if isinstance(val, dict):
            out.write(f"{indent}{key}:\n")
            _write_text(val, out, indent + "  ")
        else:
            out.write(f"{indent}{key}: {_fmt(val)}\n")


def _emit(payload: dict, cfg: RunConfig, out) -> None:
    if cfg.output_format == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        _write_text(payload, out)


def cmd_majorize(args, cfg: RunConfig, out) -> int:
    rep = majorizes(parse_vector(args.u), parse_vector(args.v), cfg.tol)
    _emit(rep.to_dict(), cfg, out)
    return EXIT_HOLDS if rep.holds else EXIT_FAILS


def cmd_powermajorize(args, cfg: RunConfig, out) -> int:
    rep = powermaj.power_majorizes(
        parse_vector(args.x), parse_vector(args.y), powermaj.default_grid(cfg.p_max), cfg.tol
    )
    _emit(rep.to_dict(), cfg, out)
    return EXIT_HOLDS if rep.holds else EXIT_FAILS


def cmd_roots(args, cfg: RunConfig, out) -> int:
    rts = sorted(polyfact.roots(parse_vector(args.u)), reverse=True)
    _emit({"roots": rts}, cfg, out)
    return EXIT_HOLDS


def cmd_expand(args, cfg: RunConfig, out) -> int:
    poly = polyfact.expand(parse_vector(args.u))
    _emit({"coeffs": list(poly.coeffs), "polynomial": str(poly)}, cfg, out)
    return EXIT_HOLDS


def cmd_factor(args, cfg: RunConfig, out) -> int:
    f = polyfact.recover_factorization(parse_vector(args.coeffs), tol=cfg.tol)
    _emit({"u": list(f.u)}, cfg, out)
    return EXIT_HOLDS


def cmd_verify_theorem(args, cfg: RunConfig, out) -> int:
    summary = verify_theorem(
        trials=cfg.trials,
        n_max=cfg.n_max,
        seed=cfg.seed,
        tol=cfg.tol,
        p_max=cfg.p_max,
        negate=args.negate,
    )
    _emit(summary.to_dict(), cfg, out)
    return EXIT_HOLDS if summary.ok else EXIT_FAILS


def cmd_klemes(args, cfg: RunConfig, out) -> int:
    bundle = linalg.klemes_example(tol=cfg.tol, p_max=cfg.p_max)
    _emit(bundle.to_dict(), cfg, out)
    return EXIT_HOLDS if bundle.matches_expected else EXIT_FAILS


def cmd_schur_check(args, cfg: RunConfig, out) -> int:
    p = args.p
    if not (p > 0 and math.isfinite(p)):
        raise ValueError("--p must be positive")
    rep = schur.schur_condition_check(
        p, schur.pair_grid(), description="20x20 evenly spaced pairs in [1.01, 10]^2"
    )
    signs = schur.sign_suite(p)
    passed = rep.passed and all(s["passed"] for s in signs.values())
    _emit({"schur_condition": rep.to_dict(), "sign_suite": signs, "passed": passed}, cfg, out)
    return EXIT_HOLDS if passed else EXIT_FAILS


COMMANDS = {
    "majorize": cmd_majorize,
    "power-majorize": cmd_powermajorize,
    "roots": cmd_roots,
    "expand": cmd_expand,
    "factor": cmd_factor,
    "verify-theorem": cmd_verify_theorem,
    "klemes": cmd_klemes,
    "schur-check": cmd_schur_check,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(
            tol=args.tol,
            p_max=args.p_max,
            trials=args.trials,
            n_max=args.n_max,
            seed=args.seed,
            output_format=args.output_format,
        )
        return COMMANDS[args.command](args, cfg, out)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"rootmaj {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
