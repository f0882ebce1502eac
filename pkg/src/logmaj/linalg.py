"""Dense complex matrix arithmetic and spectral machinery.

Everything operates on square ``numpy`` arrays of ``complex128``. Spectra are
returned as real vectors sorted in decreasing order. The Hermitian eigensolver
is a cyclic complex Jacobi iteration: at desk scale (n <= 64) it is simple,
unconditionally stable, and computes small eigenvalues of graded positive
definite matrices to high relative accuracy, which the determinant legs of
log-majorization checks depend on.
"""

from __future__ import annotations

import json
from typing import NamedTuple, Sequence

import numpy as np

from .errors import (
    DimMismatch,
    LengthMismatch,
    NonConvergence,
    SingularMatrix,
    UnsupportedShape,
)

try:
    import numba

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

#: Unit roundoff of IEEE double precision (2^-53).
UNIT_ROUNDOFF = float(np.finfo(np.float64).eps) / 2.0

#: Off-diagonal convergence threshold, relative to the Frobenius norm.
JACOBI_OFF_TOL = 1e-14

#: Hard cap on Jacobi sweeps before NonConvergence is raised.
JACOBI_MAX_SWEEPS = 100


def as_complex_matrix(m) -> np.ndarray:
    """Validate and return a square, finite complex matrix."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimMismatch(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.view(np.float64))):
        raise ValueError("matrix has non-finite entries")
    return a


def adjoint(x) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(x, dtype=np.complex128).conj().T


def matmul(x, y) -> np.ndarray:
    """Matrix product with a dimension check."""
    x = as_complex_matrix(x)
    y = as_complex_matrix(y)
    if x.shape != y.shape:
        raise DimMismatch(f"cannot multiply {x.shape} by {y.shape}")
    return x @ y


def hermitian_part(m) -> np.ndarray:
    """Return (M + M*)/2."""
    a = np.asarray(m, dtype=np.complex128)
    return (a + a.conj().T) / 2.0


def frobenius(m) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(np.asarray(m)))


def zero_clamp(eigenvalues: np.ndarray) -> float:
    """Threshold below which eigenvalues of a PSD matrix count as exact zeros.

    Set at 64*n*u*lambda_max where u is the unit roundoff.
    """
    w = np.asarray(eigenvalues, dtype=np.float64)
    lam_max = float(w.max(initial=0.0))
    return 64.0 * w.size * UNIT_ROUNDOFF * max(lam_max, 0.0)


def _jacobi_sweeps(a, v, off_tol, max_sweeps):  # pragma: no cover - jitted
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                m = abs(a[p, q])
                if m > off:
                    off = m
        if off <= off_tol:
            return sweep, True
        skip = 0.01 * off_tol
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = a[p, q]
                r = abs(beta)
                if r <= skip:
                    continue
                alpha = a[p, p].real
                gamma = a[q, q].real
                tau = (alpha - gamma) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                sigma = t * c
                e = beta / r
                s = sigma * np.conj(e)
                sbar = sigma * e
                for i in range(n):
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = c * aip + s * aiq
                    a[i, q] = -sbar * aip + c * aiq
                for i in range(n):
                    api = a[p, i]
                    aqi = a[q, i]
                    a[p, i] = c * api + sbar * aqi
                    a[q, i] = -s * api + c * aqi
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = complex(a[p, p].real, 0.0)
                a[q, q] = complex(a[q, q].real, 0.0)
                for i in range(n):
                    vip = v[i, p]
                    viq = v[i, q]
                    v[i, p] = c * vip + s * viq
                    v[i, q] = -sbar * vip + c * viq
    off = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            m = abs(a[p, q])
            if m > off:
                off = m
    return max_sweeps, off <= off_tol


if _HAVE_NUMBA:
    _jacobi_sweeps = numba.njit(cache=True, nogil=True)(_jacobi_sweeps)


class EigenDecomposition(NamedTuple):
    """Eigenvalues (real, decreasing) and unitary eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def eig_hermitian(m) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.

    The input is symmetrized to (M + M*)/2 before iterating. Rotations sweep
    the upper triangle cyclically until the largest off-diagonal modulus drops
    below ``JACOBI_OFF_TOL`` times the Frobenius norm of the input, with a
    hard cap of ``JACOBI_MAX_SWEEPS`` sweeps.

    Raises
    ------
    NonConvergence
        If the sweep cap is reached with off-diagonal mass above threshold.
    """
    a = np.array(hermitian_part(as_complex_matrix(m)), order="C")
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    _, ok = _jacobi_sweeps(a, v, JACOBI_OFF_TOL * float(np.linalg.norm(a)), JACOBI_MAX_SWEEPS)
    if not ok:
        raise NonConvergence(f"Jacobi failed to converge in {JACOBI_MAX_SWEEPS} sweeps")
    w = np.diag(a).real.copy()
    order = np.argsort(-w, kind="stable")
    return EigenDecomposition(w[order], v[:, order])


def power_from_eig(dec: EigenDecomposition, t: float) -> np.ndarray:
    """Spectral power V diag(w^t) V* with the zero-clamp convention.

    Eigenvalues below the clamp are exact zeros: 0^t = 0 for t > 0 and
    0^0 = 1 (so A^0 = I for every PSD A). Negative powers of clamped
    eigenvalues raise SingularMatrix.
    """
    w, v = dec
    clamp = zero_clamp(w)
    # reject clearly indefinite inputs; negatives within 1e-6 of the top are
    # accumulated roundoff from congruence products and clamp to zero
    if w.size and w.min() < -1e-6 * max(float(w.max()), 0.0):
        raise ValueError(f"matrix is not PSD (lambda_min = {w.min():.3e})")
    wc = np.where(w <= clamp, 0.0, w)
    if t < 0 and np.any(wc == 0.0):
        raise SingularMatrix(f"negative power {t} of a singular PSD matrix")
    with np.errstate(divide="ignore"):
        if t == 0:
            wt = np.ones_like(wc)
        else:
            wt = np.where(wc == 0.0, 0.0, wc**float(t))
    return hermitian_part((v * wt) @ v.conj().T)


def matrix_power(m, t: float) -> np.ndarray:
    """Real power of a positive semi-definite matrix.

    Raises
    ------
    SingularMatrix
        If t < 0 and some eigenvalue falls below the zero clamp.
    """
    return power_from_eig(eig_hermitian(m), t)


def is_definite(m) -> bool:
    """True when all eigenvalues sit strictly above the zero clamp."""
    w = eig_hermitian(m).eigenvalues
    return bool(w.min() > zero_clamp(w))


def psd_project(m) -> np.ndarray:
    """Clamp eigenvalues below the zero threshold to exact zeros."""
    dec = eig_hermitian(m)
    w = np.where(dec.eigenvalues <= zero_clamp(dec.eigenvalues), 0.0, dec.eigenvalues)
    return hermitian_part((dec.eigenvectors * w) @ dec.eigenvectors.conj().T)


def singular_values(x) -> np.ndarray:
    """Singular values of X, decreasing.

    Equal to the square roots of the eigenvalues of X*X. Hermitian inputs
    short-circuit to |eigenvalues|; general inputs go through the Hermitian
    dilation [[0, X], [X*, 0]] (eigenvalues +/- s_i), which avoids squaring
    the condition number the way forming X*X would.
    """
    a = as_complex_matrix(x)
    n = a.shape[0]
    if np.linalg.norm(a - a.conj().T) <= 1e-13 * max(np.linalg.norm(a), 1e-300):
        w = eig_hermitian(a).eigenvalues
        return np.sort(np.abs(w))[::-1]
    h = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    h[:n, n:] = a
    h[n:, :n] = a.conj().T
    w = eig_hermitian(h).eigenvalues
    return np.maximum(w[:n], 0.0)


def eigenvalues_of_product(a, b) -> np.ndarray:
    """Eigenvalues of the product of two PSD matrices, decreasing.

    Returned as the (real, nonnegative) spectrum of A^{1/2} B A^{1/2}, which
    equals the spectrum of AB by similarity. Computed as the squared singular
    values of B^{1/2} A^{1/2} for relative accuracy on the small end.
    """
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    if a.shape != b.shape:
        raise DimMismatch(f"dimension mismatch {a.shape} vs {b.shape}")
    g = matrix_power(b, 0.5) @ matrix_power(a, 0.5)
    s = singular_values(g)
    return s * s


def word_eigenvalues(factors: Sequence[tuple[np.ndarray, str]]) -> np.ndarray:
    """Real spectrum of a product of Hermitian factors, sorted by modulus.

    ``factors`` is the product left to right as (matrix, kind) pairs with
    kind in {"psd", "hermitian"}. The spectrum is obtained by cyclically
    rotating the word and splitting a PSD factor P = P^{1/2} P^{1/2} so that
    the rest of the word is a palindrome W; the result P^{1/2} W P^{1/2} is
    Hermitian with the same spectrum as the original word, and its
    eigenvalues are computed by the Jacobi solver. Signed values are
    returned, sorted by decreasing modulus. Repeated factors must be the
    same array object (or bitwise-equal copies).

    Raises
    ------
    UnsupportedShape
        If no rotation produces a Hermitian palindrome (the word is then not
        known to have a real spectrum).
    """
    fs = [(as_complex_matrix(m), kind) for m, kind in factors]
    if not fs:
        raise UnsupportedShape("empty word")
    for m, kind in fs:
        if kind not in ("psd", "hermitian"):
            raise ValueError(f"unknown factor kind {kind!r}")
        if m.shape != fs[0][0].shape:
            raise DimMismatch("word factors have mixed dimensions")
    m = len(fs)
    for j in range(m):
        pivot, kind = fs[j]
        if kind != "psd":
            continue
        rest = [fs[(j + k) % m] for k in range(1, m)]
        if not _is_palindrome(rest):
            continue
        return _palindrome_spectrum(pivot, rest)
    raise UnsupportedShape("word admits no Hermitian palindrome rearrangement")


def _is_palindrome(rest: list[tuple[np.ndarray, str]]) -> bool:
    for k in range(len(rest) // 2):
        if not np.array_equal(rest[k][0], rest[-1 - k][0]):
            return False
    return True


def _palindrome_spectrum(pivot: np.ndarray, rest: list[tuple[np.ndarray, str]]) -> np.ndarray:
    """Spectrum of pivot^{1/2} * (palindrome) * pivot^{1/2}.

    With right half R, the word is G* C G for G = R . pivot^{1/2}; an even
    palindrome (C = I) or PSD center gives squared singular values of
    C^{1/2} G, an indefinite Hermitian center is diagonalized directly.
    """
    half = matrix_power(pivot, 0.5)
    k = len(rest)
    right = rest[(k + 1) // 2 :]
    g = half
    for mat, _ in reversed(right):
        g = mat @ g
    if k % 2 == 0:
        s = singular_values(g)
        return s * s
    center, ckind = rest[k // 2]
    if ckind == "psd":
        s = singular_values(matrix_power(center, 0.5) @ g)
        return s * s
    w = eig_hermitian(g.conj().T @ center @ g).eigenvalues
    return w[np.argsort(-np.abs(w), kind="stable")]


def eigenvalue_moduli(x) -> np.ndarray:
    """Moduli of the (possibly complex) eigenvalues of X, decreasing.

    Products of three or more PSD factors generically have complex spectra,
    so this falls back to the general dense eigensolver; it is the only
    operation in the package that does.
    """
    a = as_complex_matrix(x)
    return np.sort(np.abs(np.linalg.eigvals(a)))[::-1]


def det(m) -> complex | float:
    """Determinant: eigenvalue product for Hermitian inputs, LU otherwise."""
    a = as_complex_matrix(m)
    if np.linalg.norm(a - a.conj().T) <= 1e-13 * max(np.linalg.norm(a), 1e-300):
        return float(np.prod(eig_hermitian(a).eigenvalues))
    d = complex(np.linalg.det(a))
    return d


def signed_det_parts(m) -> tuple[complex | float, int]:
    """Determinant as (mantissa, base-2 exponent) to dodge under/overflow.

    |mantissa| lies in [1, 2) (or is 0); Hermitian inputs get a real
    mantissa carrying the sign.
    """
    a = as_complex_matrix(m)
    hermitian = np.linalg.norm(a - a.conj().T) <= 1e-13 * max(np.linalg.norm(a), 1e-300)
    if hermitian:
        w = eig_hermitian(a).eigenvalues
        if np.any(w == 0.0):
            return 0.0, 0
        sign = float(np.prod(np.sign(w)))
        log2 = float(np.sum(np.log2(np.abs(w))))
    else:
        sgn, logabs = np.linalg.slogdet(a)
        if logabs == -np.inf:
            return 0.0, 0
        sign = complex(sgn)
        log2 = float(logabs / np.log(2.0))
    exp = int(np.floor(log2))
    return sign * 2.0 ** (log2 - exp), exp


def hadamard(x, y) -> np.ndarray:
    """Elementwise product of two spectra, re-sorted decreasing."""
    xv = np.asarray(x, dtype=np.float64)
    yv = np.asarray(y, dtype=np.float64)
    if xv.shape != yv.shape or xv.ndim != 1:
        raise LengthMismatch(f"spectra shapes {xv.shape} vs {yv.shape}")
    return np.sort(xv * yv)[::-1]


def matrix_to_json(m) -> dict:
    """Serialize to {"n": ..., "entries": [[[re, im], ...], ...]} row-major."""
    a = as_complex_matrix(m)
    n = a.shape[0]
    entries = [[[float(a[i, j].real), float(a[i, j].imag)] for j in range(n)] for i in range(n)]
    return {"n": n, "entries": entries}


def matrix_from_json(obj: dict | str) -> np.ndarray:
    """Parse the matrix file format; bare reals are shorthand for [re, 0]."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    n = int(obj["n"])
    rows = obj["entries"]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DimMismatch(f"entries do not form an {n}x{n} matrix")
    a = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(rows):
        for j, cell in enumerate(row):
            if isinstance(cell, (int, float)):
                a[i, j] = complex(cell, 0.0)
            else:
                a[i, j] = complex(float(cell[0]), float(cell[1]))
    return as_complex_matrix(a)
