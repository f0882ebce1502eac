"""Weak log-majorization, log-majorization, and reverse relations.

A spectrum x is weakly log-majorized by y when every prefix product of the
decreasingly sorted entries of x is bounded by the corresponding prefix
product of y; log-majorization additionally requires equality of the full
products. Margins are reported on the log scale:

    margin[k] = sum_{i<=k} log y_i - sum_{i<=k} log x_i

so negative margins are violations. Zeros use sentinel arithmetic: a
position where both prefix products vanish counts as satisfied (margin 0),
a zero prefix on the right-hand side only is an unconditional failure
(margin -inf), and a zero prefix on the left only is trivially satisfied
(margin +inf).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import LengthMismatch
from .linalg import UNIT_ROUNDOFF

#: Default absolute tolerance on log-scale margins.
DEFAULT_TOL = 1e-9

#: Default tolerance on the determinant leg of log-majorization.
DEFAULT_TOL_DET = 1e-8


@dataclass(frozen=True)
class MajorizationVerdict:
    """Outcome of one majorization comparison.

    ``k_margins`` has one entry per prefix length; ``det_gap`` is the
    absolute full-product gap (log kinds only); ``min_margin`` is the worst
    margin over the prefixes the relation constrains (all k for weak_log,
    k < n for log).
    """

    kind: str
    k_margins: np.ndarray = field(repr=False)
    det_gap: float | None
    holds: bool
    min_margin: float

    def as_json(self) -> dict:
        return {
            "kind": self.kind,
            "k_margins": [float(v) for v in self.k_margins],
            "det_gap": None if self.det_gap is None else float(self.det_gap),
            "holds": bool(self.holds),
            "min_margin": float(self.min_margin),
        }


def _clamp(v: np.ndarray) -> np.ndarray:
    """Zero out entries of magnitude below the linalg-core clamp (64*n*u*max)."""
    top = max(float(v[0]), 0.0)
    return np.where(np.abs(v) <= 64.0 * v.size * UNIT_ROUNDOFF * top, 0.0, v)


def _prepare(x, y) -> tuple[np.ndarray, np.ndarray]:
    xv = np.sort(np.asarray(x, dtype=np.float64))[::-1]
    yv = np.sort(np.asarray(y, dtype=np.float64))[::-1]
    if xv.ndim != 1 or xv.shape != yv.shape:
        raise LengthMismatch(f"spectra shapes {np.shape(x)} vs {np.shape(y)}")
    if xv.size == 0:
        raise LengthMismatch("empty spectra")
    xv = _clamp(xv)
    yv = _clamp(yv)
    if xv[-1] < 0 or yv[-1] < 0:
        raise ValueError("spectra must be nonnegative")
    return xv, yv


def _margins(xv: np.ndarray, yv: np.ndarray) -> np.ndarray:
    """Per-prefix log margins with sentinel handling of zeros.

    Computed from elementwise ratios so that common scale factors cancel;
    sorted-decreasing inputs put zeros at the tail, and the first zero index
    on either side decides the sentinel region.
    """
    n = xv.size
    ix = int(np.argmax(xv == 0.0)) if xv[-1] == 0.0 else n
    iy = int(np.argmax(yv == 0.0)) if yv[-1] == 0.0 else n
    both = min(ix, iy)
    margins = np.empty(n, dtype=np.float64)
    if both:
        with np.errstate(divide="ignore"):
            margins[:both] = np.cumsum(np.log(yv[:both] / xv[:both]))
    margins[both:] = 0.0
    if ix < iy:
        margins[ix:iy] = np.inf
    elif iy < ix:
        margins[iy:ix] = -np.inf
    return margins


def weak_log_majorizes(x, y, tol: float = DEFAULT_TOL) -> MajorizationVerdict:
    """Verdict on x being weakly log-majorized by y (all prefixes)."""
    xv, yv = _prepare(x, y)
    margins = _margins(xv, yv)
    mn = float(margins.min())
    return MajorizationVerdict("weak_log", margins, None, bool(mn >= -tol), mn)


def log_majorizes(
    x,
    y,
    tol: float = DEFAULT_TOL,
    tol_det: float = DEFAULT_TOL_DET,
    kind: str = "log",
) -> MajorizationVerdict:
    """Verdict on x being log-majorized by y (prefixes plus determinant leg)."""
    xv, yv = _prepare(x, y)
    margins = _margins(xv, yv)
    det_gap = float(abs(margins[-1]))
    mn = float(margins[:-1].min()) if xv.size > 1 else np.inf
    holds = bool(mn >= -tol and det_gap <= tol_det)
    return MajorizationVerdict(kind, margins, det_gap, holds, mn)


def reverse_log_majorizes(
    x, y, tol: float = DEFAULT_TOL, tol_det: float = DEFAULT_TOL_DET
) -> MajorizationVerdict:
    """Verdict on x log-majorizing y (arguments swapped into log_majorizes)."""
    return log_majorizes(y, x, tol, tol_det, kind="reverse_log")
