"""Numerical checks of the Schur-convexity argument for root power sums.

The root pair of ``t^2 - 2u t + 1`` contributes
``phi_1(u) = (u + sqrt(u^2-1))**p + (u - sqrt(u^2-1))**p`` to the power sum,
and ``d phi_1 / du = p * g(u)`` with

    g(t) = ((t + s)**p - (t - s)**p) / s,   s = sqrt(t^2 - 1).

Schur-convexity of ``phi(u) = sum phi_1(u_i)`` for p >= 1 (concavity for
0 < p < 1) reduces to g being increasing (decreasing) on t > 1, which in turn
reduces to the sign of ``key_inequality`` on 0 < theta < 1 and, where
p*theta < 1, to the sign of the log-difference ``h`` and its derivative.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

import numpy as np

from .polyfact import quadratic_roots
from .vectors import as_vector

DEFAULT_FD_STEP = 1e-6
FD_RTOL = 1e-5
SIGN_TOL = 1e-12
THETA_SERIES_CUTOFF = 0.1
SINH_SERIES_CUTOFF = 0.1


def _check_p(p: float) -> None:
    if not p > 0:
        raise ValueError("p must be positive")


def _check_t(t: float, hint: str = "") -> None:
    if not t > 1.0:
        raise ValueError(f"t must exceed 1, got {t!r}{hint}")


def phi(u: Sequence[float], p: float) -> float:
    """``sum_i (u_i + sqrt(u_i^2-1))**p + (u_i - sqrt(u_i^2-1))**p``."""
    _check_p(p)
    arr = as_vector(u, "u")
    if np.any(arr < 1.0):
        raise ValueError("every u_i must be >= 1")
    total = 0.0
    for ui in arr:
        big, small = quadratic_roots(float(ui))
        total += big**p + small**p
    return total


def g(t: float, p: float) -> float:
    """Derivative of one root pair's power sum divided by p; defined for t > 1 only."""
    _check_p(p)
    _check_t(t, "; use g_limit_at_1 for the t -> 1 limit")
    big, small = quadratic_roots(t)
    s = math.sqrt((t - 1.0) * (t + 1.0))
    return (big**p - small**p) / s


def g_limit_at_1(p: float) -> float:
    """``lim_{t -> 1+} g(t, p) = 2p``."""
    _check_p(p)
    return 2.0 * p


def g_prime(t: float, p: float) -> float:
    """Closed-form derivative of ``g`` in t.

    With ``t = cosh(L)`` the numerator
    ``p*(a**p + b**p) - (a**p - b**p) * t / s`` becomes
    ``(p - 1)*sinh((p+1)L) - (p + 1)*sinh((p-1)L)``, which is evaluated as
    ``(p^2 - 1) * (sinh((p+1)L)/(p+1) - sinh((p-1)L)/(p-1))``.  The form has
    no cancellation at p = 1 and keeps the sign exact near t = 1, where the
    literal expression loses every significant digit.  For small L the
    difference of the two sinh terms is summed as a series, which keeps full
    relative accuracy as t -> 1.
    """
    _check_p(p)
    _check_t(t)
    s2 = (t - 1.0) * (t + 1.0)
    L = math.acosh(t)
    if L < SINH_SERIES_CUTOFF and (p + 1.0) * L < 8.0:
        gap = _sinhc_gap_series(p, L)
    else:
        gap = _sinhc(p + 1.0, L) - _sinhc(p - 1.0, L)
    return (p - 1.0) * (p + 1.0) * gap / (s2 * math.sqrt(s2))


def _sinhc_gap_series(p: float, L: float, max_terms: int = 500) -> float:
    """``sinh((p+1)L)/(p+1) - sinh((p-1)L)/(p-1)`` as a power series in L.

    The k-th coefficient ``(1+p)^(2k) - (1-p)^(2k)`` is summed as
    ``2 sum_{m odd} C(2k, m) p^m``, so every term is positive and nothing cancels.
    """
    total = 0.0
    L2 = L * L
    scale = L  # L^(2k+1) / (2k+1)!
    for k in range(1, max_terms):
        n = 2 * k
        scale *= L2 / ((n) * (n + 1))
        coeff = 2.0 * sum(math.comb(n, m) * p**m for m in range(1, n, 2))
        term = coeff * scale
        total += term
        if term <= 1e-17 * total:
            break
    return total


def _sinhc(a: float, L: float) -> float:
    """``sinh(a*L)/a`` with the limit ``L`` at a = 0."""
    if a == 0.0:
        return L
    return math.sinh(a * L) / a


def g_prime_literal(t: float, p: float) -> float:
    """The derivative exactly as written: ``(p(a^p + b^p) - (a^p - b^p) t/s) / (t^2 - 1)``."""
    _check_p(p)
    _check_t(t)
    s = math.sqrt((t - 1.0) * (t + 1.0))
    a, b = t + s, t - s
    return (p * a**p + p * b**p - (a**p - b**p) * t / s) / (t * t - 1.0)


def g_prime_theta_form(t: float, p: float) -> float:
    """``t^p/(t^2-1) * (p(1+th)^p + p(1-th)^p - ((1+th)^p - (1-th)^p)/th)``, th = theta_of_t(t)."""
    _check_p(p)
    th = theta_of_t(t)
    if th < THETA_SERIES_CUTOFF:
        bracket = _theta_bracket_series(th, p)
    else:
        bracket = p * (1 + th) ** p + p * (1 - th) ** p - ((1 + th) ** p - (1 - th) ** p) / th
    return t**p / ((t - 1.0) * (t + 1.0)) * bracket


def _theta_bracket_series(th: float, p: float, max_terms: int = 1000) -> float:
    """The bracket expanded binomially: ``2 sum_{j>=1} C(p,2j) 2j(p+1)/(2j+1) th^(2j)``.

    The constant terms cancel exactly, which the direct form can only do in
    floating point, losing about ``1/th^2`` in relative accuracy.
    """
    binom = 1.0  # C(p, 2j), starting at j = 0
    x2 = th * th
    power = 1.0
    total = 0.0
    for j in range(1, max_terms):
        k = 2 * j
        binom *= (p - k + 2) * (p - k + 1) / ((k - 1) * k)
        power *= x2
        term = binom * k * (p + 1) / (k + 1) * power
        total += term
        if k > p and abs(term) <= 1e-17 * abs(total):
            break
    return 2.0 * total


def theta_of_t(t: float) -> float:
    _check_t(t)
    return math.sqrt((t - 1.0) * (t + 1.0)) / t


def key_inequality(theta: float, p: float) -> float:
    """``(p*theta - 1)(1 + theta)**p + (p*theta + 1)(1 - theta)**p``.

    Nonnegative for p >= 1 and nonpositive for 0 < p < 1 on 0 < theta < 1;
    it equals ``theta**3 * t**(2-p) * g_prime(t, p)`` under the substitution.
    """
    _check_p(p)
    if not 0.0 < theta < 1.0:
        raise ValueError("theta must lie in (0, 1)")
    return (p * theta - 1.0) * (1.0 + theta) ** p + (p * theta + 1.0) * (1.0 - theta) ** p


def _check_h_domain(theta: float, p: float) -> None:
    _check_p(p)
    if not (0.0 <= theta < 1.0 and p * theta < 1.0):
        raise ValueError("outside p*theta<1 regime: need 0 <= theta < min(1, 1/p)")


def h(theta: float, p: float) -> float:
    """``log((p th + 1)(1 - th)^p) - log((1 - p th)(1 + th)^p)`` via log1p."""
    _check_h_domain(theta, p)
    return (
        math.log1p(p * theta)
        + p * math.log1p(-theta)
        - math.log1p(-p * theta)
        - p * math.log1p(theta)
    )


def h_prime(theta: float, p: float) -> float:
    _check_h_domain(theta, p)
    return 2.0 * p / (1.0 - p * p * theta * theta) - 2.0 * p / (1.0 - theta * theta)


def chebyshev_pair_sum(u: float, p: int) -> float:
    """``2 * T_p(u)`` from ``T_0 = 1, T_1 = u, T_{k+1} = 2u T_k - T_{k-1}``.

    For integer p this equals ``phi((u,), p)``; it shares no code with it.
    """
    if int(p) != p or p < 0:
        raise ValueError("p must be a nonnegative integer")
    if u < 1.0:
        raise ValueError("u must be >= 1")
    prev, cur = 1.0, float(u)
    if p == 0:
        return 2.0
    for _ in range(int(p) - 1):
        prev, cur = cur, 2.0 * u * cur - prev
    return 2.0 * cur


@dataclass(frozen=True)
class SchurCheckReport:
    """Outcome of the finite-difference Schur condition on a grid of pairs.

    ``min_schur_product`` is the smallest value of
    ``sign * (u1 - u2) * (d1 - d2) / (|u1 - u2| * max(|d1|, |d2|))`` with
    ``d_k`` the finite-difference partials and ``sign = -1`` for 0 < p < 1.
    The normalisation makes the finite-difference tolerance relative.
    ``min_raw_product`` is the unnormalised minimum.
    """

    p: float
    grid_description: str
    min_schur_product: float
    min_raw_product: float
    passed: bool
    tol: float = FD_RTOL

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "SchurCheckReport":
        return cls(
            p=float(d["p"]),
            grid_description=str(d["grid_description"]),
            min_schur_product=float(d["min_schur_product"]),
            min_raw_product=float(d["min_raw_product"]),
            passed=bool(d["passed"]),
            tol=float(d["tol"]),
        )


def _phi_pair(u1: float, u2: float, p: float) -> float:
    return phi((u1, u2), p)


def schur_condition_check(
    p: float,
    u_grid: Iterable[tuple[float, float]],
    fd_step: float = DEFAULT_FD_STEP,
    tol: float = FD_RTOL,
    description: str = "",
) -> SchurCheckReport:
    """Check ``(u1 - u2)(dphi/du1 - dphi/du2)`` has the regime's sign on ``u_grid``.

    Partials are central differences of the two-variable restriction of phi
    with step ``fd_step * max(1, u)``.
    """
    _check_p(p)
    pairs = [(float(a), float(b)) for a, b in u_grid]
    if not pairs:
        raise ValueError("u_grid is empty")
    sign = 1.0 if p >= 1.0 else -1.0
    worst = math.inf
    worst_raw = math.inf
    for u1, u2 in pairs:
        h1 = fd_step * max(1.0, u1)
        h2 = fd_step * max(1.0, u2)
        if u1 - h1 <= 1.0 or u2 - h2 <= 1.0:
            raise ValueError(f"grid point ({u1}, {u2}) too close to the t = 1 singularity")
        d1 = (_phi_pair(u1 + h1, u2, p) - _phi_pair(u1 - h1, u2, p)) / (2 * h1)
        d2 = (_phi_pair(u1, u2 + h2, p) - _phi_pair(u1, u2 - h2, p)) / (2 * h2)
        raw = sign * (u1 - u2) * (d1 - d2)
        scale = abs(u1 - u2) * max(abs(d1), abs(d2))
        rel = raw / scale if scale > 0 else 0.0
        worst = min(worst, rel)
        worst_raw = min(worst_raw, raw)
    return SchurCheckReport(
        p=float(p),
        grid_description=description or f"{len(pairs)} pairs",
        min_schur_product=float(worst),
        min_raw_product=float(worst_raw),
        passed=bool(worst >= -tol),
        tol=tol,
    )


def pair_grid(lo: float = 1.01, hi: float = 10.0, num: int = 20) -> list[tuple[float, float]]:
    """All ordered pairs from ``num`` evenly spaced points in ``[lo, hi]``."""
    pts = np.linspace(lo, hi, num)
    return [(float(a), float(b)) for a in pts for b in pts]


def t_grid(num: int = 200, t_max: float = 100.0) -> np.ndarray:
    """Log-spaced ``t - 1`` from 1e-6 to ``t_max - 1``."""
    return 1.0 + np.geomspace(1e-6, t_max - 1.0, num)


def theta_grid(num: int = 200, hi: float = 0.999) -> np.ndarray:
    return np.linspace(hi / num, hi, num)


def sign_suite(p: float, tol: float = SIGN_TOL) -> dict:
    """Regime sign checks for g', key_inequality, h and h' at a single p.

    Returns a dict of ``{name: {"passed": bool, "extreme": float}}`` where the
    extreme is the worst signed value seen (minimum for p >= 1, maximum for
    p < 1).  ``h`` and ``h'`` are sampled on their domain theta < min(1, 1/p).
    """
    _check_p(p)
    sign = 1.0 if p >= 1.0 else -1.0
    ts = t_grid()
    thetas = theta_grid()
    h_hi = min(0.999, 0.999 / p)
    h_thetas = np.linspace(0.0, h_hi, 200)
    series = {
        "g_prime": [g_prime(float(t), p) for t in ts],
        "key_inequality": [key_inequality(float(th), p) for th in thetas],
        "h": [h(float(th), p) for th in h_thetas],
        "h_prime": [h_prime(float(th), p) for th in h_thetas],
    }
    out = {}
    for name, vals in series.items():
        signed = sign * np.asarray(vals)
        worst = float(signed.min())
        out[name] = {"passed": bool(worst >= -tol), "extreme": sign * worst}
    return out
