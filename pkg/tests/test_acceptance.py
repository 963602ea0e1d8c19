"""End-to-end acceptance checks, one test per criterion.

Each test records a one-line PASS/FAIL verdict; the lines are printed in the
terminal summary (see conftest.py) as well as to stdout under ``-s``.
"""

import math
import time

import numpy as np

from rootmaj.linalg import KLEMES_A, KLEMES_B, char_poly, gram, sym_eigenvalues
from rootmaj.polyfact import recover_factorization, roots
from rootmaj.powermaj import default_grid, margin, power_majorizes, power_sum
from rootmaj.harness import verify_theorem
from rootmaj.schur import (
    chebyshev_pair_sum,
    g,
    g_prime,
    g_prime_theta_form,
    h,
    key_inequality,
    pair_grid,
    phi,
    schur_condition_check,
    sign_suite,
    t_grid,
    theta_grid,
)
from rootmaj.vectors import majorizes

from .conftest import ACCEPTANCE_LINES

X_EXPECTED = [[4, 2, 1, 2], [2, 2, 1, 1], [1, 1, 1, 1], [2, 1, 1, 2]]
Y_EXPECTED = [[4, 2, 1, 0], [2, 2, 1, 1], [1, 1, 1, 1], [0, 1, 1, 2]]
HIGH_P = (1.0, 1.5, 2.0, 5.0, 20.0)
LOW_P = (0.1, 0.5, 0.9)


def record(number, name, ok, detail):
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {name}: {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    assert ok, line


def best_time(fn, repeats=5):
    fn()
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def klemes_roots():
    X, Y = gram(KLEMES_A), gram(KLEMES_B)
    return sym_eigenvalues(X), sym_eigenvalues(Y)


def test_criterion_01_gram_exact():
    X, Y = gram(KLEMES_A), gram(KLEMES_B)
    elapsed = best_time(lambda: (gram(KLEMES_A), gram(KLEMES_B)))
    ok = X.tolist() == X_EXPECTED and Y.tolist() == Y_EXPECTED and elapsed < 1e-3
    record(1, "Klemes Gram matrices exact", ok, f"runtime {elapsed * 1e6:.1f} us")


def test_criterion_02_char_poly_and_factors():
    X, Y = gram(KLEMES_A), gram(KLEMES_B)
    px, py = char_poly(X), char_poly(Y)
    off = max(
        max(abs(a - b) for a, b in zip(px.coeffs, (1, -9, 16, -9, 1))),
        max(abs(a - b) for a, b in zip(py.coeffs, (1, -9, 20, -9, 1))),
    )
    u = recover_factorization(px).u
    v = recover_factorization(py).u
    err = max(max(abs(a - b) for a, b in zip(u, (3.5, 1.0))), max(abs(a - b) for a, b in zip(v, (3.0, 1.5))))
    ok = off <= 1e-9 and err <= 1e-9 and len(u) == len(v) == 2
    record(2, "characteristic polynomials and factorization", ok, f"coeff err {off:.1e}, u/v err {err:.1e}")


def test_criterion_03_coefficient_majorization():
    rep = majorizes((7, 2), (6, 3))
    ok = rep.holds and rep.prefix_margins == (1.0, 0.0)
    record(3, "coefficient majorization", ok, f"margins {rep.prefix_margins}")


def test_criterion_04_root_non_majorization():
    x, y = klemes_roots()
    rep = majorizes(x, y)
    ok = (not rep.holds) and rep.failing_k == 2 and abs(rep.prefix_margins[1] - (-0.592)) <= 1e-3
    record(4, "roots not majorized", ok, f"failing_k {rep.failing_k}, margin {rep.prefix_margins[1]:.6f}")


def test_criterion_05_root_power_majorization():
    x, y = klemes_roots()
    grid = default_grid(64)
    rep = power_majorizes(x, y, grid)
    elapsed = best_time(lambda: power_majorizes(x, y, grid), repeats=3)
    d1 = margin(x, y, 1.0)
    ok = (
        rep.holds
        and rep.min_margin_high >= -1e-9
        and rep.max_margin_low <= 1e-9
        and abs(d1) <= 1e-9
        and elapsed < 1.0
    )
    record(
        5,
        "roots power majorized",
        ok,
        f"min_high {rep.min_margin_high:.2e}, max_low {rep.max_margin_low:.2e}, D(1) {d1:.1e}, {elapsed * 1e3:.1f} ms",
    )


def test_criterion_06_theorem_property_suite():
    t0 = time.perf_counter()
    summary = verify_theorem(trials=1000, n_max=6, seed=0)
    elapsed = time.perf_counter() - t0
    ok = summary.failed == 0 and summary.passed == 1000 and elapsed < 60.0
    record(6, "random theorem instances", ok, f"{summary.passed}/1000 pass in {elapsed:.1f} s")


def test_criterion_07_schur_convexity_suite():
    ts = t_grid(200)
    worst_high = min(g_prime(float(t), p) for p in HIGH_P for t in ts)
    worst_low = max(g_prime(float(t), p) for p in LOW_P for t in ts)
    grid = pair_grid(1.01, 10.0, 20)
    reports = [schur_condition_check(p, grid) for p in HIGH_P + LOW_P]
    ok = worst_high >= -1e-12 and worst_low <= 1e-12 and all(r.passed for r in reports)
    worst_schur = min(r.min_schur_product for r in reports)
    record(
        7,
        "Schur-convexity suite",
        ok,
        f"min g' (p>=1) {worst_high:.2e}, max g' (p<1) {worst_low:.2e}, worst Schur product {worst_schur:.2e}",
    )


def test_criterion_08_proof_function_identities():
    all_p = HIGH_P + LOW_P
    h_zero = all(h(0.0, p) == 0.0 for p in all_p)
    suites = {p: sign_suite(p) for p in all_p}
    h_signs = all(s["h"]["passed"] and s["h_prime"]["passed"] for s in suites.values())
    key_one = max(abs(key_inequality(float(th), 1.0)) for th in theta_grid())
    rel = 0.0
    for p in all_p:
        for t in t_grid(200):
            ref = g_prime(float(t), p)
            alt = g_prime_theta_form(float(t), p)
            # g' is identically zero at p = 1
            rel = max(rel, abs(alt - ref) / abs(ref) if ref != 0.0 else abs(alt))
    ok = h_zero and h_signs and key_one <= 1e-12 and rel <= 1e-9
    record(
        8,
        "proof-function identities",
        ok,
        f"h(0)=0 {h_zero}, h/h' signs {h_signs}, |key(th,1)| {key_one:.1e}, theta-form rel {rel:.1e}",
    )


def test_criterion_09_oracle_equivalences():
    rng = np.random.default_rng(9)
    phi_rel = 0.0
    for _ in range(1000):
        u = rng.uniform(1.0, 10.0, int(rng.integers(1, 7)))
        p = float(rng.uniform(0.01, 20.0))
        ref = power_sum(roots(u), p)
        phi_rel = max(phi_rel, abs(phi(u, p) - ref) / ref)
    cheb_rel = 0.0
    for p in range(1, 11):
        for u in np.linspace(1.0, 10.0, 37):
            ref = chebyshev_pair_sum(float(u), p)
            cheb_rel = max(cheb_rel, abs(phi((float(u),), p) - ref) / ref)
    fd_rel = 0.0
    for p in HIGH_P[1:] + LOW_P + (3.0, 10.0):
        for t in np.geomspace(1.01, 100.0, 40):
            t = float(t)
            step = 1e-5 * t
            fd = (g(t + step, p) - g(t - step, p)) / (2 * step)
            ref = g_prime(t, p)
            fd_rel = max(fd_rel, abs(fd - ref) / abs(ref))
    ok = phi_rel <= 1e-10 and cheb_rel <= 1e-9 and fd_rel <= 1e-5
    record(
        9,
        "oracle equivalences",
        ok,
        f"phi vs power_sum {phi_rel:.1e}, phi vs Chebyshev {cheb_rel:.1e}, g' vs FD {fd_rel:.1e}",
    )


def test_criterion_10_linear_algebra_consistency():
    worst = 0.0
    traces, dets = [], []
    for A in (KLEMES_A, KLEMES_B):
        M = gram(A)
        ev = np.array(sym_eigenvalues(M))
        rt = np.sort(roots(recover_factorization(char_poly(M))))[::-1]
        worst = max(worst, float(np.max(np.abs(ev - rt))))
        traces.append(float(ev.sum()))
        dets.append(float(np.prod(ev)))
    trace_err = max(abs(t - 9.0) for t in traces)
    det_err = max(abs(d - 1.0) for d in dets)
    ok = worst <= 1e-8 and trace_err <= 1e-8 and det_err <= 1e-8 and not math.isnan(worst)
    record(
        10,
        "linear-algebra consistency",
        ok,
        f"eig vs roots {worst:.1e}, trace err {trace_err:.1e}, det err {det_err:.1e}",
    )
