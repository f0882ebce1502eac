"""Schatten p-norms, Ky Fan k-norms, and the Fan dominance test.

Fan dominance (Ky Fan norm comparison at every k) is equivalent to norm
domination in every unitarily invariant norm, so "for all unitarily
invariant norms" claims are decided exactly by ``fan_dominates`` and
spot-checked on a small Schatten family.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import BadK, DimMismatch, InvalidP
from .linalg import as_complex_matrix, singular_values

#: Schatten exponents used when spot-checking unitarily-invariant-norm claims.
SPOT_CHECK_PS = (1.0, 1.5, 2.0, 3.0, math.inf)


def schatten(x, p: float) -> float:
    """Schatten p-norm (sum s_i^p)^(1/p); p = inf is the operator norm."""
    if not (p >= 1.0):
        raise InvalidP(f"Schatten exponent must satisfy p >= 1, got {p}")
    s = singular_values(x)
    if math.isinf(p):
        return float(s[0])
    top = float(s[0])
    if top == 0.0:
        return 0.0
    return top * float(np.sum((s / top) ** p)) ** (1.0 / p)


def ky_fan(x, k: int) -> float:
    """Ky Fan k-norm: sum of the k largest singular values."""
    s = singular_values(x)
    if not 1 <= k <= s.size:
        raise BadK(f"k must be in 1..{s.size}, got {k}")
    return float(np.sum(s[:k]))


def fan_dominates(x, y, tol: float = 1e-9) -> tuple[bool, np.ndarray]:
    """Whether every Ky Fan norm of X is bounded by that of Y.

    Returns the verdict and the per-k gaps ky_fan(Y, k) - ky_fan(X, k);
    the verdict is true when every gap is >= -tol. By Fan dominance this
    decides |||X||| <= |||Y||| for every unitarily invariant norm.
    """
    x = as_complex_matrix(x)
    y = as_complex_matrix(y)
    if x.shape != y.shape:
        raise DimMismatch(f"dimension mismatch {x.shape} vs {y.shape}")
    gaps = np.cumsum(singular_values(y)) - np.cumsum(singular_values(x))
    return bool(gaps.min() >= -tol), gaps
