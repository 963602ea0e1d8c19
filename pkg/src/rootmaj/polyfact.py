"""Palindromic quadratic factorizations ``P(t) = prod_i (t^2 - 2 u_i t + 1)``.

With every ``u_i >= 1`` each factor has the real roots ``u_i +- sqrt(u_i^2 - 1)``,
whose product is 1.  Coefficients are stored in descending degree order with
the leading 1 kept explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .vectors import as_vector


@dataclass(frozen=True)
class QuadraticFactorization:
    u: tuple[float, ...]

    def __post_init__(self):
        arr = as_vector(self.u, "u")
        if np.any(arr < 1.0):
            raise ValueError(f"every u_i must be >= 1, got {float(arr.min())!r}")
        object.__setattr__(self, "u", tuple(arr.tolist()))

    @property
    def degree(self) -> int:
        return 2 * len(self.u)


@dataclass(frozen=True)
class PolynomialCoefficients:
    coeffs: tuple[float, ...]

    def __post_init__(self):
        arr = as_vector(self.coeffs, "coeffs")
        if arr[0] != 1.0:
            raise ValueError("polynomial must be monic (leading coefficient 1)")
        object.__setattr__(self, "coeffs", tuple(arr.tolist()))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_palindromic(self, rtol: float = 1e-9) -> bool:
        c = np.asarray(self.coeffs)
        return bool(np.all(np.abs(c - c[::-1]) <= rtol * np.abs(c).max()))

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)


FactorLike = Union[QuadraticFactorization, Sequence[float]]
PolyLike = Union[PolynomialCoefficients, Sequence[float]]


def _u_array(f: FactorLike) -> np.ndarray:
    if not isinstance(f, QuadraticFactorization):
        f = QuadraticFactorization(tuple(f))
    return np.asarray(f.u, dtype=float)


def _coeff_array(p: PolyLike) -> np.ndarray:
    if isinstance(p, PolynomialCoefficients):
        return np.asarray(p.coeffs, dtype=float)
    return as_vector(p, "coeffs")


def format_polynomial(coeffs: Sequence[float], var: str = "t") -> str:
    """Render descending coefficients, e.g. ``t^4 - 9t^3 + 16t^2 - 9t + 1``."""
    deg = len(coeffs) - 1
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        e = deg - k
        mag = abs(c)
        num = f"{mag:.12g}"
        if e == 0:
            body = num
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{num}{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def expand(f: FactorLike) -> PolynomialCoefficients:
    """Multiply out ``prod_i (t^2 - 2 u_i t + 1)``."""
    u = _u_array(f)
    c = np.array([1.0])
    for ui in u:
        c = np.convolve(c, [1.0, -2.0 * ui, 1.0])
    return PolynomialCoefficients(tuple(c.tolist()))


def quadratic_roots(ui: float) -> tuple[float, float]:
    """``(u + sqrt(u^2-1), u - sqrt(u^2-1))``; the small root is taken as 1/large."""
    if ui < 1.0:
        raise ValueError(f"u must be >= 1, got {ui!r}")
    big = ui + math.sqrt((ui - 1.0) * (ui + 1.0))
    return big, 1.0 / big


def roots(f: FactorLike) -> tuple[float, ...]:
    """Closed-form roots, ordered factor by factor as (large, small)."""
    out: list[float] = []
    for ui in _u_array(f):
        out.extend(quadratic_roots(float(ui)))
    return tuple(out)


def evaluate(p: PolyLike, t: float) -> float:
    acc = 0.0
    for c in _coeff_array(p):
        acc = acc * t + c
    return acc


def _eval_with_derivative(c: np.ndarray, t: float) -> tuple[float, float]:
    val, der = 0.0, 0.0
    for ck in c:
        der = der * t + val
        val = val * t + ck
    return val, der


def _deflate_quadratic(c: np.ndarray, b: float) -> tuple[np.ndarray, np.ndarray]:
    """Divide by ``t^2 + b t + 1``; returns (quotient, remainder of length 2).

    Plain forward division, used only for the exact factor ``(t - 1)^2``.
    """
    c = c.astype(float).copy()
    m = c.size - 3
    q = np.zeros(m + 1)
    for k in range(m + 1):
        q[k] = c[k]
        c[k + 1] -= b * q[k]
        c[k + 2] -= q[k]
    return q, c[-2:]


def _deflate_pair(c: np.ndarray, big: float, small: float) -> tuple[np.ndarray, float]:
    """Remove the roots ``big >= 1 >= small``.

    Forward division is stable only for the smallest root and backward
    division only for the largest, so each root is taken out from its own end.
    Returns the quotient and the larger of the two division residues.
    """
    n = c.size - 1
    fwd = np.empty(n)
    acc = 0.0
    for k in range(n):
        acc = c[k] + small * acc
        fwd[k] = acc
    res_small = c[n] + small * acc
    m = n - 1
    q = np.empty(m)
    acc = 0.0
    for k in range(m, 0, -1):
        acc = (acc - fwd[k]) / big
        q[k - 1] = acc
    res_big = fwd[0] - acc
    return q, max(abs(res_small), abs(res_big))


def _symmetrize(c: np.ndarray) -> np.ndarray:
    return 0.5 * (c + c[::-1])


def _bisect(c: np.ndarray, lo: float, hi: float, iters: int = 200) -> float:
    flo = _eval_with_derivative(c, lo)[0]
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = _eval_with_derivative(c, mid)[0]
        if fm == 0.0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
        if hi - lo <= 4 * np.finfo(float).eps * hi:
            break
    return 0.5 * (lo + hi)


def _newton_monotone(c: np.ndarray, start: float, max_iter: int = 500) -> float:
    """Newton iteration from outside the root set.

    For a real-rooted polynomial started above the largest root (or below the
    smallest) the iterates move monotonically onto that extreme root.  Failure
    to settle means the polynomial is not real-rooted.
    """
    t = start
    direction = 0.0
    for _ in range(max_iter):
        val, der = _eval_with_derivative(c, t)
        if val == 0.0:
            return t
        if der == 0.0 or not math.isfinite(der):
            break
        step = val / der
        t_new = t - step
        if not math.isfinite(t_new):
            break
        if abs(step) <= 1e-15 * max(1.0, abs(t)):
            return t_new
        # a reversal after the monotone phase is roundoff noise at the root
        if direction and np.sign(step) != direction:
            if abs(val) <= 1e-6 * np.abs(c).max() * max(1.0, abs(t)) ** (c.size - 1):
                return t
            break
        direction = np.sign(step)
        t = t_new
    raise ValueError("not in theorem domain: real root search did not converge")


def _polish(c: np.ndarray, r: float, rel_window: float = 1e-5) -> float:
    """Refine an approximate simple root: bisection if a bracket exists, then Newton."""
    delta = rel_window * abs(r)
    lo, hi = r - delta, r + delta
    flo = _eval_with_derivative(c, lo)[0]
    fhi = _eval_with_derivative(c, hi)[0]
    if flo * fhi < 0:
        r = _bisect(c, lo, hi)
    val, der = _eval_with_derivative(c, r)
    for _ in range(5):
        if der == 0.0 or val == 0.0:
            break
        r_new = r - val / der
        if not (lo <= r_new <= hi):
            break
        val_new, der_new = _eval_with_derivative(c, r_new)
        if abs(val_new) >= abs(val):
            break
        r, val, der = r_new, val_new, der_new
    return r


def _polish_large(c: np.ndarray, r: float) -> float:
    """Polish a root ``r > 1`` as ``1/r`` on the reversed coefficients.

    Horner evaluation beyond 1 loses accuracy with the size of ``t**deg``;
    the reversed polynomial has the root ``1/r`` inside the unit interval.
    """
    return 1.0 / _polish(c[::-1], 1.0 / r)


def recover_factorization(
    p: PolyLike, tol: float = 1e-9, pair_tol: float = 1e-6
) -> QuadraticFactorization:
    """Invert :func:`expand`: find the ``u_i`` with ``p(t) = prod(t^2 - 2u_i t + 1)``.

    Each round takes the current palindromic quotient, strips a double root at
    t = 1 if present, otherwise locates the largest root (Newton from the
    Cauchy bound, bracketed and polished) and, independently, the smallest
    positive root (Newton from 0), each polished against the original
    polynomial.  The two must be reciprocal within ``pair_tol``; their mean is
    ``u_i`` and the quotient is deflated by the whole quadratic.  A final
    joint least-squares fit of all ``u_i`` to the coefficients follows.
    Returns ``u`` sorted descending.

    ``tol`` governs the double-root test at t = 1, relative to the largest
    coefficient.  ``pair_tol`` is looser by default because clustered roots of
    a degree-12 polynomial are only determined to about 1e-7 relative by
    double-precision coefficients.
    """
    c = _coeff_array(p)
    if c[0] != 1.0:
        raise ValueError("polynomial must be monic")
    deg = c.size - 1
    if deg == 0 or deg % 2:
        raise ValueError("not palindromic: degree must be positive and even")
    scale = np.abs(c).max()
    if np.any(np.abs(c - c[::-1]) > 1e-9 * scale):
        raise ValueError("not palindromic")
    # all roots positive forces strictly alternating coefficient signs
    signs = np.sign(c) * (-1.0) ** np.arange(deg + 1)
    if np.any(signs <= 0):
        raise ValueError("not in theorem domain: roots are not all real and positive")

    q = _symmetrize(c)
    us: list[float] = []
    while q.size > 1:
        qscale = np.abs(q).max()
        v1, d1 = _eval_with_derivative(q, 1.0)
        if abs(v1) <= tol * qscale and abs(d1) <= tol * qscale:
            us.append(1.0)
            q, _ = _deflate_quadratic(q, -2.0)
            q = _symmetrize(q)
            continue
        bound = 1.0 + np.abs(q[1:]).max()
        # roots of the deflated quotient carry deflation error; polish on the input
        r = _polish_large(c, _polish_large(q, _newton_monotone(q, bound)))
        s = _polish(c, _polish(q, _newton_monotone(q, 0.0)))
        if r <= 0 or s <= 0:
            raise ValueError("not in theorem domain: nonpositive root")
        if abs(r * s - 1.0) > pair_tol:
            raise ValueError(
                f"roots not in reciprocal pairs: largest {r:.17g} and smallest {s:.17g} "
                f"have product {r * s:.17g}"
            )
        ui = 0.5 * (r + s)
        q_next, residue = _deflate_pair(q, r, s)
        if residue > pair_tol * qscale:
            raise ValueError("not in theorem domain: quadratic deflation left a remainder")
        us.append(max(ui, 1.0))
        q = _symmetrize(q_next)
    us = _refine_u(_symmetrize(c), np.array(us)).tolist()
    us.sort(reverse=True)
    return QuadraticFactorization(tuple(us))


def _product(u: np.ndarray) -> np.ndarray:
    c = np.array([1.0])
    for ui in u:
        c = np.convolve(c, [1.0, -2.0 * ui, 1.0])
    return c


def _refine_u(c: np.ndarray, u: np.ndarray, max_iter: int = 10) -> np.ndarray:
    """Gauss-Newton on ``expand(u) = c`` over coefficients 1..n, in relative terms.

    The root-by-root stage matches each root on its own and, for clustered
    u, leaves coefficient residuals far above rounding level.  Fitting all u
    jointly brings them down to a few ulps.  Rows are weighted by ``1/|c_k|``
    since the coefficients alternate in sign and are each computed to a few
    ulps.  A step is kept only if it lowers the weighted residual.
    """
    n = u.size
    rows = slice(1, n + 1)
    w = 1.0 / np.abs(c[rows])

    def residual(v):
        return (_product(v)[rows] - c[rows]) * w

    r = residual(u)
    best = float(np.linalg.norm(r))
    for _ in range(max_iter):
        if best == 0.0:
            break
        # d/du_i prod_j (t^2 - 2u_j t + 1) = -2t prod_{j != i}(...)
        J = np.empty((n, n))
        for i in range(n):
            col = np.convolve(_product(np.delete(u, i)), [-2.0, 0.0])
            J[:, i] = np.concatenate([[0.0], col])[rows] * w
        step = np.linalg.lstsq(J, r, rcond=None)[0]
        trial = np.maximum(u - step, 1.0)
        r_trial = residual(trial)
        err = float(np.linalg.norm(r_trial))
        if not err < best:
            break
        u, r, best = trial, r_trial, err
    return u

