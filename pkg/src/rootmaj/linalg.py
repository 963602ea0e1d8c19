"""Small dense symmetric matrices and the Klemeš 4x4 example.

``A A^T`` and ``B B^T`` for the two fixed 0/±1 matrices below have
characteristic polynomials ``(t^2-7t+1)(t^2-2t+1)`` and
``(t^2-6t+1)(t^2-3t+1)``.  The eigenvalues of the second are not majorized
by those of the first, yet they are power majorized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .polyfact import PolynomialCoefficients, recover_factorization
from .powermaj import PowerMajorizationReport, default_grid, power_majorizes
from .vectors import MajorizationReport, majorizes

MAX_CHAR_POLY_DIM = 12
SYMMETRY_TOL = 1e-12

KLEMES_A = np.array(
    [
        [1, 1, 1, 1],
        [0, 1, 1, 0],
        [0, 0, 1, 0],
        [0, 0, 1, 1],
    ]
)
KLEMES_B = np.array(
    [
        [1, 1, 1, 1],
        [0, 1, 1, 0],
        [0, 0, 1, 0],
        [0, 0, 1, -1],
    ]
)


def as_matrix(data, square: bool = False) -> np.ndarray:
    """Validate a 2-D finite array (nested lists are fine); integer input stays integer."""
    arr = np.asarray(data)
    if arr.dtype.kind not in "iuf":
        arr = arr.astype(float)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError("matrix must be a nonempty 2-D array")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    if square and arr.shape[0] != arr.shape[1]:
        raise ValueError(f"matrix must be square, got {arr.shape}")
    return arr


def check_symmetric(M, tol: float = SYMMETRY_TOL) -> np.ndarray:
    arr = as_matrix(M, square=True)
    if np.any(np.abs(arr - arr.T) > tol):
        raise ValueError("matrix is not symmetric")
    return arr


def gram(A) -> np.ndarray:
    """``A @ A.T``; exact for integer input."""
    arr = as_matrix(A)
    return arr @ arr.T


def char_poly(M, integer_tol: float = 1e-9) -> PolynomialCoefficients:
    """Coefficients of ``det(tI - M)`` by the Faddeev-LeVerrier recursion.

    ``N_k = M N_{k-1} + c_{k-1} I`` and ``c_k = -tr(M N_k) / k`` with
    ``N_1 = I``, ``c_0 = 1``.  For integer-entry input the coefficients are
    integers; each is checked to lie within ``integer_tol`` of one and rounded.
    """
    arr = check_symmetric(M)
    n = arr.shape[0]
    if n > MAX_CHAR_POLY_DIM:
        raise ValueError(f"dimension {n} exceeds {MAX_CHAR_POLY_DIM}")
    Mf = arr.astype(float)
    coeffs = [1.0]
    N = np.eye(n)
    for k in range(1, n + 1):
        MN = Mf @ N
        c = -np.trace(MN) / k
        coeffs.append(c)
        N = MN + c * np.eye(n)
    if arr.dtype.kind in "iu":
        rounded = np.rint(coeffs)
        off = np.abs(np.asarray(coeffs) - rounded).max()
        if off > integer_tol:
            raise ValueError(f"integer matrix gave non-integer coefficients (off by {off:g})")
        coeffs = rounded.tolist()
    return PolynomialCoefficients(tuple(float(c) for c in coeffs))


def sym_eigenvalues(M, tol: float = 1e-12, max_sweeps: int = 100) -> tuple[float, ...]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted descending.

    Sweeps stop once the off-diagonal Frobenius norm falls below
    ``tol * max(1, ||M||_F)``.
    """
    S = check_symmetric(M).astype(float).copy()
    n = S.shape[0]
    target = tol * max(1.0, float(np.linalg.norm(S)))
    off_mask = ~np.eye(n, dtype=bool)

    def off_norm() -> float:
        return float(np.linalg.norm(S[off_mask]))

    for _ in range(max_sweeps):
        if off_norm() <= target:
            return tuple(sorted(np.diag(S).tolist(), reverse=True))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = S[p, q]
                if apq == 0.0:
                    continue
                # rotation angle that zeroes S[p, q]; the smaller root keeps |angle| <= pi/4
                tau = (S[q, q] - S[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                S = rot.T @ S @ rot
                S[p, q] = S[q, p] = 0.0
    if off_norm() <= target:
        return tuple(sorted(np.diag(S).tolist(), reverse=True))
    raise ValueError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


@dataclass
class ExampleBundle:
    A: list
    B: list
    X: list
    Y: list
    char_poly_X: list
    char_poly_Y: list
    u: list
    v: list
    x: list
    y: list
    coefficient_majorization: MajorizationReport
    root_majorization: MajorizationReport
    root_power_majorization: PowerMajorizationReport
    notes: dict = field(default_factory=dict)

    @property
    def matches_expected(self) -> bool:
        return (
            self.coefficient_majorization.holds
            and not self.root_majorization.holds
            and self.root_power_majorization.holds
        )

    def to_dict(self) -> dict:
        return {
            "A": self.A,
            "B": self.B,
            "X": self.X,
            "Y": self.Y,
            "char_poly_X": self.char_poly_X,
            "char_poly_Y": self.char_poly_Y,
            "u": self.u,
            "v": self.v,
            "x": self.x,
            "y": self.y,
            "coefficient_majorization": self.coefficient_majorization.to_dict(),
            "root_majorization": self.root_majorization.to_dict(),
            "root_power_majorization": self.root_power_majorization.to_dict(),
            "matches_expected": self.matches_expected,
            "notes": self.notes,
        }


def klemes_example(tol: float = 1e-9, p_max: float = 64.0) -> ExampleBundle:
    X = gram(KLEMES_A)
    Y = gram(KLEMES_B)
    px, py = char_poly(X), char_poly(Y)
    u = recover_factorization(px).u
    v = recover_factorization(py).u
    x = sym_eigenvalues(X)
    y = sym_eigenvalues(Y)
    coef = majorizes([2 * ui for ui in u], [2 * vi for vi in v], tol)
    return ExampleBundle(
        A=KLEMES_A.tolist(),
        B=KLEMES_B.tolist(),
        X=X.tolist(),
        Y=Y.tolist(),
        char_poly_X=list(px.coeffs),
        char_poly_Y=list(py.coeffs),
        u=list(u),
        v=list(v),
        x=list(x),
        y=list(y),
        coefficient_majorization=coef,
        root_majorization=majorizes(x, y, tol),
        root_power_majorization=power_majorizes(x, y, default_grid(p_max), tol),
        notes={
            "char_poly_X": str(px),
            "char_poly_Y": str(py),
            "expected": "coefficients majorized, roots not majorized, roots power majorized",
        },
    )
