"""Majorization of real vectors.

``v`` is majorized by ``u`` (written ``v < u``) when every partial sum of the
k largest entries of ``v`` is at most the corresponding sum for ``u`` and the
full sums agree.  The partial-sum test in :func:`majorizes` is the source of
truth; :func:`hlp_check` is a sampled convex-function cross-check.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

DEFAULT_TOL = 1e-9


def as_vector(values: Iterable[float], name: str = "vector") -> np.ndarray:
    """Coerce ``values`` to a 1-D float array, rejecting empty or non-finite input."""
    arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    if arr.size == 0:
        raise ValueError("empty input")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} has non-finite entries")
    return arr


def parse_vector(text: str) -> tuple[float, ...]:
    """Parse a JSON array, comma-separated or whitespace-separated list of numbers.

    A leading ``@`` reads the remainder as a path and parses the file contents.
    """
    text = text.strip()
    if text.startswith("@"):
        text = Path(text[1:]).read_text().strip()
    if text.startswith("["):
        data = json.loads(text)
        if not isinstance(data, list) or not all(
            isinstance(x, (int, float)) and not isinstance(x, bool) for x in data
        ):
            raise ValueError("expected a JSON array of numbers")
        values = [float(x) for x in data]
    else:
        values = [float(tok) for tok in text.replace(",", " ").split()]
    return tuple(as_vector(values).tolist())


def sort_descending(v: Sequence[float]) -> tuple[float, ...]:
    arr = as_vector(v)
    # stable: equal entries keep their input order
    order = np.argsort(-arr, kind="stable")
    return tuple(arr[order].tolist())


@dataclass(frozen=True)
class MajorizationReport:
    """Verdict for ``v < u`` with the prefix margins that decided it.

    ``prefix_margins[k-1]`` is (sum of k largest of u) - (sum of k largest of v).
    ``failing_k`` is 1-based and names the smallest violating prefix.
    """

    holds: bool
    prefix_margins: tuple[float, ...]
    failing_k: Optional[int]
    total_sum_gap: float

    def to_dict(self) -> dict:
        d = asdict(self)
        d["prefix_margins"] = list(self.prefix_margins)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "MajorizationReport":
        return cls(
            holds=bool(d["holds"]),
            prefix_margins=tuple(float(x) for x in d["prefix_margins"]),
            failing_k=None if d["failing_k"] is None else int(d["failing_k"]),
            total_sum_gap=float(d["total_sum_gap"]),
        )


def _check_pair(u: Sequence[float], v: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    a = as_vector(u, "u")
    b = as_vector(v, "v")
    if a.size != b.size:
        raise ValueError(f"length mismatch: {a.size} != {b.size}")
    return a, b


def majorizes(u: Sequence[float], v: Sequence[float], tol: float = DEFAULT_TOL) -> MajorizationReport:
    """Test whether ``v`` is majorized by ``u``.

    Each prefix comparison uses the absolute tolerance ``tol`` scaled by
    ``max(1, |larger prefix sum|)``.  For k < n the margin may not drop below
    ``-tol``; at k = n it must be within ``tol`` of zero.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    a, b = _check_pair(u, v)
    su = np.cumsum(np.sort(a)[::-1])
    sv = np.cumsum(np.sort(b)[::-1])
    margins = su - sv
    scale = np.maximum(1.0, np.maximum(np.abs(su), np.abs(sv)))
    n = a.size
    failing = None
    for k in range(n):
        bound = tol * scale[k]
        bad = abs(margins[k]) > bound if k == n - 1 else margins[k] < -bound
        if bad:
            failing = k + 1
            break
    return MajorizationReport(
        holds=failing is None,
        prefix_margins=tuple(margins.tolist()),
        failing_k=failing,
        total_sum_gap=float(su[-1] - sv[-1]),
    )


def hlp_check(
    u: Sequence[float],
    v: Sequence[float],
    knots: Iterable[float],
    tol: float = DEFAULT_TOL,
) -> bool:
    """Compare sums of the hinge functions ``max(s - a, 0)`` over ``knots``.

    Returns True iff the hinge sum of ``v`` never exceeds that of ``u`` by more
    than ``tol``.  Hinges are the extreme rays of the convex functions, so this
    is a necessary condition for ``v < u``; it is an oracle for
    :func:`majorizes`, never a substitute.
    """
    a, b = _check_pair(u, v)
    ks = np.asarray(list(knots), dtype=float)
    if ks.size == 0:
        raise ValueError("knots must be nonempty")
    hu = np.maximum(a[None, :] - ks[:, None], 0.0).sum(axis=1)
    hv = np.maximum(b[None, :] - ks[:, None], 0.0).sum(axis=1)
    return bool(np.all(hv <= hu + tol))


def t_transform(u: Sequence[float], i: int, j: int, lam: float) -> tuple[float, ...]:
    """Replace ``(u_i, u_j)`` by ``(lam*u_i + (1-lam)*u_j, (1-lam)*u_i + lam*u_j)``."""
    if not 0.0 <= lam <= 1.0:
        raise ValueError("lam must lie in [0, 1]")
    w = as_vector(u).copy()
    a, b = w[i], w[j]
    w[i] = lam * a + (1.0 - lam) * b
    w[j] = (1.0 - lam) * a + lam * b
    return tuple(w.tolist())


def random_majorization_pair(
    n: int,
    num_transforms: int,
    entry_range: tuple[float, float] = (1.0, 10.0),
    seed: int = 0,
    allow_below_one: bool = False,
) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Draw ``u`` uniformly from ``[lo, hi]**n`` and build ``v < u`` by T-transforms.

    Entries of ``v`` stay inside ``[lo, hi]`` because each T-transform is a
    convex combination.  ``lo < 1`` is rejected unless ``allow_below_one`` is
    set, since the root-vector theorem needs every coefficient at least 1.
    """
    lo, hi = entry_range
    if n < 1:
        raise ValueError("n must be positive")
    if num_transforms < 0:
        raise ValueError("num_transforms must be nonnegative")
    if not hi > lo:
        raise ValueError("entry_range must satisfy hi > lo")
    if lo < 1 and not allow_below_one:
        raise ValueError("entry_range lower bound must be >= 1")
    if lo <= 0:
        raise ValueError("entry_range must be positive")
    rng = np.random.default_rng(seed)
    u = rng.uniform(lo, hi, size=n)
    v = u.copy()
    if n >= 2:
        for _ in range(num_transforms):
            i, j = rng.choice(n, size=2, replace=False)
            lam = rng.uniform()
            a, b = v[i], v[j]
            v[i] = lam * a + (1.0 - lam) * b
            v[j] = (1.0 - lam) * a + lam * b
    # roundoff in the convex combinations can leave an entry an ulp outside
    v = np.clip(v, lo, hi)
    return tuple(u.tolist()), tuple(v.tolist())
