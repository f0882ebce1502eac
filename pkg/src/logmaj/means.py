"""Matrix means on the positive semi-definite cone.

Three two-variable means built from spectral powers:

* ``geometric_mean(a, b, t)``      -- A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}
* ``generalized_mean(a, b, r, t)`` -- A^{r/2} (A^{-1/2} B A^{-1/2})^t A^{r/2}
* ``natural_natural(a, b)``        -- A^{1/2} (B^{1/2} A^{-1} B^{1/2})^{1/2} A^{1/2}

Each takes an ``eps`` argument: 0 means the strictly positive definite path
(SingularMatrix on rank-deficient input where an inverse is needed), while
eps > 0 shifts both arguments by eps*I first. On singular inputs the value
is defined as the eps -> 0 limit; ``mean_limit`` realizes that limit with a
fixed ladder of shifts and a stabilization test.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .errors import DimMismatch, NonConvergedLimit, SingularMatrix
from .linalg import (
    as_complex_matrix,
    eig_hermitian,
    hermitian_part,
    matrix_power,
    power_from_eig,
    zero_clamp,
)

#: Relative rungs of the epsilon-regularization ladder.
LADDER_RUNGS = (1e-6, 1e-8, 1e-10)

#: Two consecutive rungs must agree to this relative Frobenius tolerance.
LADDER_AGREEMENT = 1e-7


def _pair(a, b, eps: float) -> tuple[np.ndarray, np.ndarray]:
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    if a.shape != b.shape:
        raise DimMismatch(f"dimension mismatch {a.shape} vs {b.shape}")
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    if eps > 0:
        shift = eps * np.eye(a.shape[0])
        return a + shift, b + shift
    return a, b


def generalized_mean(a, b, r: float, t: float, eps: float = 0.0) -> np.ndarray:
    """A^{r/2} (A^{-1/2} B A^{-1/2})^t A^{r/2}.

    Reduces to the weighted geometric mean at r = 1 and to A^r at t = 0.
    Parameters outside the mean range 0 <= t <= 1 are evaluated formally;
    domain enforcement belongs to the registry.
    """
    a, b = _pair(a, b, eps)
    dec_a = eig_hermitian(a)
    if t == 0:
        return power_from_eig(dec_a, r)
    if dec_a.eigenvalues.min() <= zero_clamp(dec_a.eigenvalues):
        raise SingularMatrix("mean of a singular matrix requires eps > 0")
    inv_half = power_from_eig(dec_a, -0.5)
    x = hermitian_part(inv_half @ b @ inv_half)
    r_half = power_from_eig(dec_a, r / 2.0)
    return hermitian_part(r_half @ matrix_power(x, t) @ r_half)


def geometric_mean(a, b, t: float, eps: float = 0.0) -> np.ndarray:
    """Weighted geometric mean A #_t B (A # B at t = 1/2)."""
    return generalized_mean(a, b, 1.0, t, eps)


def natural_natural(a, b, eps: float = 0.0) -> np.ndarray:
    """A^{1/2} (B^{1/2} A^{-1} B^{1/2})^{1/2} A^{1/2}.

    Dominates A # B in log-majorization; defined here for positive definite
    pairs, with the eps shift extending it to the semi-definite boundary.
    """
    a, b = _pair(a, b, eps)
    dec_a = eig_hermitian(a)
    dec_b = eig_hermitian(b)
    clamped = dec_a.eigenvalues.min() <= zero_clamp(dec_a.eigenvalues) or dec_b.eigenvalues.min() <= zero_clamp(dec_b.eigenvalues)
    if clamped:
        raise SingularMatrix("natural_natural of singular input requires eps > 0")
    b_half = power_from_eig(dec_b, 0.5)
    inner = hermitian_part(b_half @ power_from_eig(dec_a, -1.0) @ b_half)
    a_half = power_from_eig(dec_a, 0.5)
    return hermitian_part(a_half @ matrix_power(inner, 0.5) @ a_half)


def epsilon_ladder(a, b) -> tuple[float, ...]:
    """Absolute shift magnitudes: the relative rungs times lambda_max(A + B)."""
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    lam = float(eig_hermitian(a + b).eigenvalues.max(initial=0.0))
    return tuple(r * lam for r in LADDER_RUNGS)


def mean_limit(fn: Callable[[float], np.ndarray], a, b) -> np.ndarray:
    """Evaluate the eps -> 0 limit of ``fn(eps)`` down the ladder.

    ``fn`` computes the mean at one absolute shift. The value at a rung is
    accepted once it agrees with the previous rung to LADDER_AGREEMENT in
    relative Frobenius norm.

    Raises
    ------
    NonConvergedLimit
        If no two consecutive rungs agree.
    """
    rungs = epsilon_ladder(a, b)
    prev = None
    for eps in rungs:
        cur = fn(eps)
        if prev is not None:
            scale = max(float(np.linalg.norm(cur)), 1e-300)
            if float(np.linalg.norm(cur - prev)) <= LADDER_AGREEMENT * scale:
                return cur
        prev = cur
    raise NonConvergedLimit("epsilon ladder did not stabilize")
