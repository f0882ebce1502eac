"""Sub-check results and the margin conventions shared by catalog entries.

Every relation evaluates to one or more SubChecks carrying a margin vector.
Margin conventions by kind:

* ``log`` / ``weak_log`` / ``reverse_log``: per-prefix log-scale margins and
  (log kinds) the determinant gap, from the majorization module.
* ``loewner``: a single margin lambda_min(RHS - LHS) / lambda_max(RHS).
* ``norm_leq``: log ||RHS||_p - log ||LHS||_p per Schatten exponent.
* ``fan``: log Ky Fan gaps per k.
* ``sv_wise``: log s_j(RHS) - log s_j(LHS) per index j.
* ``spectrum_union``: the single margin -max|sorted spectra difference|.

Negative margins beyond tolerance are violations throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import eig_hermitian, singular_values
from .majorization import log_majorizes, reverse_log_majorizes, weak_log_majorizes
from .norms import ky_fan, schatten


@dataclass(frozen=True)
class Tolerances:
    """Suite tolerances: log-margin, determinant-leg, and violation strictness."""

    tol: float = 1e-9
    tol_det: float = 1e-8
    strictness: float = 1e-6

    def widened(self, slack: float) -> "Tolerances":
        return Tolerances(self.tol + slack, self.tol_det + slack, self.strictness)


@dataclass(frozen=True)
class SubCheck:
    """One evaluated relation leg: margins, verdict, and whether it is asserted.

    Non-asserted legs are reported (and their violations surfaced) but do not
    enter the entry's holds/min_margin.
    """

    name: str
    kind: str
    margins: np.ndarray = field(repr=False)
    det_gap: float | None
    holds: bool
    min_margin: float
    asserted: bool = True

    def as_json(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "margins": [float(v) for v in np.atleast_1d(self.margins)],
            "det_gap": None if self.det_gap is None else float(self.det_gap),
            "holds": bool(self.holds),
            "min_margin": float(self.min_margin),
            "asserted": bool(self.asserted),
        }


def log_check(name: str, x, y, tols: Tolerances, asserted: bool = True) -> SubCheck:
    v = log_majorizes(x, y, tols.tol, tols.tol_det)
    return SubCheck(name, v.kind, v.k_margins, v.det_gap, v.holds, v.min_margin, asserted)


def wlog_check(name: str, x, y, tols: Tolerances) -> SubCheck:
    v = weak_log_majorizes(x, y, tols.tol)
    return SubCheck(name, v.kind, v.k_margins, None, v.holds, v.min_margin)


def reverse_log_check(name: str, x, y, tols: Tolerances) -> SubCheck:
    v = reverse_log_majorizes(x, y, tols.tol, tols.tol_det)
    return SubCheck(name, v.kind, v.k_margins, v.det_gap, v.holds, v.min_margin)


def loewner_check(name: str, lhs, rhs, tols: Tolerances) -> SubCheck:
    """RHS - LHS is PSD up to tol, measured relative to lambda_max(RHS)."""
    gap = eig_hermitian(rhs - lhs).eigenvalues
    scale = float(eig_hermitian(rhs).eigenvalues.max())
    margin = float(gap.min()) / scale
    margins = np.array([margin])
    return SubCheck(name, "loewner", margins, None, bool(margin >= -tols.tol), margin)


def norm_check(name: str, lhs, rhs, ps, tols: Tolerances, asserted: bool = True) -> SubCheck:
    margins = np.array([math.log(schatten(rhs, p)) - math.log(schatten(lhs, p)) for p in ps])
    mn = float(margins.min())
    return SubCheck(name, "norm_leq", margins, None, bool(mn >= -tols.tol), mn, asserted)


def fan_check(name: str, lhs, rhs, tols: Tolerances) -> SubCheck:
    n = lhs.shape[0]
    margins = np.array(
        [math.log(ky_fan(rhs, k)) - math.log(ky_fan(lhs, k)) for k in range(1, n + 1)]
    )
    mn = float(margins.min())
    return SubCheck(name, "fan", margins, None, bool(mn >= -tols.tol), mn)


def sv_wise_check(name: str, lhs, rhs, tols: Tolerances) -> SubCheck:
    with np.errstate(divide="ignore"):
        ls = np.log(singular_values(lhs))
        rs = np.log(singular_values(rhs))
    margins = np.where(np.isneginf(ls) & np.isneginf(rs), 0.0, rs - ls)
    mn = float(margins.min())
    return SubCheck(name, "sv_wise", margins, None, bool(mn >= -tols.tol), mn)


def spectrum_union_check(name: str, block_spectrum, union_spectrum, tols: Tolerances) -> SubCheck:
    x = np.sort(np.asarray(block_spectrum))[::-1]
    y = np.sort(np.asarray(union_spectrum))[::-1]
    margin = -float(np.max(np.abs(x - y)))
    margins = np.array([margin])
    return SubCheck(name, "spectrum_union", margins, None, bool(margin >= -tols.tol), margin)
