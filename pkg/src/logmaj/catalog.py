"""The inequality catalog: each entry is a parameterized, checkable predicate.

Entries pair a parameter-domain sampler with an evaluator producing
SubChecks. Samplers are expressed as total transforms from the unit cube so
the search module can perturb parameters without leaving the domain and can
snap coordinates to the boundary. Rank-deficient stress trials use the
``psd_*`` fields: ``psd_mode`` says whether the entry evaluates singular
inputs directly or through the epsilon ladder, ``psd_inputs`` lists which
inputs may be rank-deficient, and ``psd_transform`` (when present) restricts
parameters so every exponent stays nonnegative on the shifted path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .checks import (
    SubCheck,
    Tolerances,
    fan_check,
    loewner_check,
    log_check,
    norm_check,
    reverse_log_check,
    spectrum_union_check,
    sv_wise_check,
    wlog_check,
)
from .errors import SingularMatrix
from .linalg import (
    eig_hermitian,
    eigenvalue_moduli,
    eigenvalues_of_product,
    hadamard,
    hermitian_part,
    is_definite,
    matrix_power,
    power_from_eig,
    singular_values,
    word_eigenvalues,
)
from .means import generalized_mean, geometric_mean, natural_natural

SCHATTEN_SET = (1.0, 1.5, 2.0, 3.0, float("inf"))

Evaluator = Callable[[list[np.ndarray], dict, Tolerances], list[SubCheck]]
Transform = Callable[[np.ndarray], dict]


@dataclass(frozen=True)
class InequalityDefinition:
    """One catalog entry: domain, expressions, relation, and evaluator."""

    id: str
    status: str
    relation: str
    inputs: tuple[str, ...]
    lhs: str
    rhs: str
    source: str
    domain: str
    evaluate: Evaluator = field(repr=False)
    n_params: int = 0
    param_names: tuple[str, ...] = ()
    transform: Transform | None = field(default=None, repr=False)
    params_ok: Callable[[dict], bool] | None = field(default=None, repr=False)
    psd_mode: str = "none"
    psd_inputs: tuple[int, ...] = ()
    psd_transform: Transform | None = field(default=None, repr=False)
    valid_transform: Transform | None = field(default=None, repr=False)
    boundary_transform: Transform | None = field(default=None, repr=False)
    cond_weight: Callable[[dict], float] | None = field(default=None, repr=False)
    refuted_by: str | None = None

    def as_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "relation": self.relation,
            "inputs": list(self.inputs),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "source": self.source,
            "domain": self.domain,
            "params": list(self.param_names),
            "psd_mode": self.psd_mode,
            "has_valid_domain": self.valid_transform is not None,
            "refuted_by": self.refuted_by,
        }


def _aff(u: float, lo: float, hi: float) -> float:
    return lo + float(u) * (hi - lo)


def _relative_floor(m) -> float:
    w = eig_hermitian(m).eigenvalues
    top = float(w.max(initial=0.0))
    return float(w.min()) / top if top > 0 else 0.0


def _tmean(a, b, t):
    """A #_t B, exact on the PSD boundary when at least one argument is PD.

    Evaluates from whichever side is further from singular, using the
    symmetry A #_t B = B #_(1-t) A; a singular A with definite B is the
    epsilon-limit value without any ladder.
    """
    if _relative_floor(a) >= _relative_floor(b):
        return geometric_mean(a, b, t)
    return geometric_mean(b, a, 1.0 - t)


def _rmean(a, b, r, t):
    """A #_{r,t} B with the same boundary handling, valid for r >= 1.

    Uses A #_{r,t} B = A^((r-1)/2) (A #_t B) A^((r-1)/2) when A is singular.
    """
    if is_definite(a):
        return generalized_mean(a, b, r, t)
    if r < 1.0:
        raise SingularMatrix("generalized mean on singular A requires r >= 1")
    ar = matrix_power(a, (r - 1.0) / 2.0)
    return hermitian_part(ar @ _tmean(a, b, t) @ ar)


# --------------------------------------------------------------------------
# evaluators
# --------------------------------------------------------------------------


def _ev_zou1(mats, prm, tols):
    a, b = mats
    gm = _tmean(a, b, 0.5)
    lhs = singular_values(matrix_power(a, 0.5) @ gm @ matrix_power(b, 0.5))
    return [log_check("s(A^1/2 (A#B) B^1/2) <=log s(AB)", lhs, singular_values(a @ b), tols)]


def _ev_conj11(mats, prm, tols):
    a, b = mats
    t = prm["t"]
    gm = _tmean(a, b, t)
    lhs = singular_values(matrix_power(a, t) @ gm @ matrix_power(b, 1.0 - t))
    return [log_check("s(A^t (A#_t B) B^(1-t)) <=log s(AB)", lhs, singular_values(a @ b), tols)]


def _pair_of_means(a, b, r, s, t):
    m1 = _rmean(a, b, r, t)
    m2 = _rmean(a, b, s, 1.0 - t)
    return m1, m2


def _ev_ls_eig(mats, prm, tols):
    a, b = mats
    r, s, t = prm["r"], prm["s"], prm["t"]
    m1, m2 = _pair_of_means(a, b, r, s, t)
    lhs = eigenvalues_of_product(m1, m2)
    rhs = eigenvalues_of_product(matrix_power(a, r + s - 1.0), b)
    return [log_check("eig(M_rt M_s1t) <=log eig(A^(r+s-1) B)", lhs, rhs, tols)]


def _ev_conj12(mats, prm, tols):
    a, b = mats
    r, s, t = prm["r"], prm["s"], prm["t"]
    m1, m2 = _pair_of_means(a, b, r, s, t)
    lhs = singular_values(m1 @ m2)
    rhs = singular_values(matrix_power(a, r + s - 1.0) @ b)
    return [log_check("s(M_rt M_s1t) <=log s(A^(r+s-1) B)", lhs, rhs, tols)]


def _ev_lem21(mats, prm, tols):
    a, b = mats
    p, q = prm["p"], prm["q"]
    dec = eig_hermitian(a)
    ap = power_from_eig(dec, p)
    aq = power_from_eig(dec, -q)
    apq = power_from_eig(dec, p - q)
    lhs = word_eigenvalues([(ap, "psd"), (b, "hermitian"), (aq, "psd"), (b, "hermitian")])
    rhs = word_eigenvalues([(apq, "psd"), (b, "hermitian"), (b, "hermitian")])
    return [reverse_log_check("eig(A^p B A^-q B) >=log eig(A^(p-q) B^2)", lhs, rhs, tols)]


def _ev_lem22(mats, prm, tols):
    x, w = mats
    pp, qp, rp, shrink = prm["p_prime"], prm["q_prime"], prm["r_prime"], prm["shrink"]
    dec_x = eig_hermitian(x)
    x_half = power_from_eig(dec_x, 0.5)
    w_top = eig_hermitian(w).eigenvalues.max()
    y = hermitian_part(x_half @ (w * (shrink / w_top)) @ x_half)
    mid = hermitian_part(
        power_from_eig(dec_x, rp / 2.0) @ matrix_power(y, pp) @ power_from_eig(dec_x, rp / 2.0)
    )
    lhs = matrix_power(mid, 1.0 / qp)
    rhs = power_from_eig(dec_x, (pp + rp) / qp)
    return [loewner_check("X^((p'+r')/q') >= (X^(r'/2) Y^p' X^(r'/2))^(1/q')", lhs, rhs, tols)]


def _ev_thm21(mats, prm, tols):
    a, b = mats
    p, r, s, t = prm["p"], prm["r"], prm["s"], prm["t"]
    m1, m2 = _pair_of_means(a, b, r, s, t)
    lhs = eigenvalues_of_product(matrix_power(m1, p), matrix_power(m2, p))
    rhs = eigenvalues_of_product(matrix_power(a, r + s - 1.0), b) ** p
    return [log_check("eig(M^p N^p) <=log eig(A^(r+s-1) B)^p", lhs, rhs, tols)]


def _ev_thm21_steps(mats, prm, tols):
    a, b = mats
    p, r, s, t, hyp = prm["p"], prm["r"], prm["s"], prm["t"], prm["hyp_scale"]
    dec_a = eig_hermitian(a)
    g = power_from_eig(dec_a, (r + s - 1.0) / 2.0)
    top = eig_hermitian(hermitian_part(g @ b @ g)).eigenvalues.max()
    b = b * (hyp / top)
    m1, m2 = _pair_of_means(a, b, r, s, t)
    mid = power_from_eig(dec_a, r * p - (r + s) * p * t)
    return [
        loewner_check("(A#_{r,t}B)^p <= A^(rp-(r+s)pt)", matrix_power(m1, p), mid, tols),
        loewner_check("A^(rp-(r+s)pt) <= (A#_{s,1-t}B)^-p", mid, matrix_power(m2, -p), tols),
    ]


def _ev_zz_chain(mats, prm, tols):
    a, b = mats
    p, r, s = prm["p"], prm["r"], prm["s"]
    dec_a = eig_hermitian(a)
    lhs = eigenvalues_of_product(power_from_eig(dec_a, r + s - 1.0), b) ** p
    rhs = eigenvalues_of_product(power_from_eig(dec_a, p * (r + s - 1.0)), matrix_power(b, p))
    return [log_check("eig(A^(r+s-1) B)^p <=log eig(A^(p(r+s-1)) B^p)", lhs, rhs, tols)]


def _ev_cor21(mats, prm, tols):
    a, b = mats
    p, t = prm["p"], prm["t"]
    m1 = _tmean(a, b, t)
    m2 = _tmean(a, b, 1.0 - t)
    lhs = eigenvalues_of_product(matrix_power(m1, p), matrix_power(m2, p))
    rhs = eigenvalues_of_product(a, b) ** p
    return [log_check("eig((A#_t B)^p (A#_(1-t) B)^p) <=log eig(AB)^p", lhs, rhs, tols)]


def _ev_conj21(mats, prm, tols):
    a, b = mats
    p, r, s, t = prm["p"], prm["r"], prm["s"], prm["t"]
    m1, m2 = _pair_of_means(a, b, r, s, t)
    lhs = eigenvalues_of_product(matrix_power(m1, p), matrix_power(m2, p))
    rhs = eigenvalues_of_product(matrix_power(a, p * (r + s - 1.0)), matrix_power(b, p))
    return [log_check("eig(M^p N^p) <=log eig(A^(p(r+s-1)) B^p)", lhs, rhs, tols)]


def _ev_lem31(mats, prm, tols):
    p, h = mats
    signed = word_eigenvalues([(p, "psd"), (h, "hermitian")])
    x1 = np.sort(np.abs(signed))[::-1]
    x2 = singular_values(p @ h)
    lam_p = eig_hermitian(p).eigenvalues
    lam_h = np.sort(np.abs(eig_hermitian(h).eigenvalues))[::-1]
    x3 = hadamard(lam_p, lam_h)
    return [
        log_check("|eig(PH)| <=log s(PH)", x1, x2, tols),
        wlog_check("s(PH) <=wlog eig(P^2)^1/2 o eig(H^2)^1/2", x2, x3, tols),
    ]


def _ev_thm31(mats, prm, tols):
    a, b = mats
    gm = _tmean(a, b, 0.5)
    s_mid = singular_values(matrix_power(a, 0.5) @ gm @ matrix_power(b, 0.5))
    lam_ab = eigenvalues_of_product(a, b)
    s_ab = singular_values(a @ b)
    return [
        log_check("s(A^1/2 (A#B) B^1/2) <=log eig(AB)", s_mid, lam_ab, tols),
        log_check("eig(AB) <=log s(AB)", lam_ab, s_ab, tols),
    ]


def _ev_rmk31(mats, prm, tols):
    a, b = mats
    return [log_check("s(AB) <=log eig(AB)", singular_values(a @ b), eigenvalues_of_product(a, b), tols)]


def _ev_thm32(mats, prm, tols):
    a, b = mats
    t = prm["t"]
    gm = _tmean(a, b, t)
    word = matrix_power(a, t) @ gm @ matrix_power(b, 1.0 - t)
    lhs = eigenvalue_moduli(word)
    return [log_check("|eig(A^t (A#_t B) B^(1-t))| <=log eig(AB)", lhs, eigenvalues_of_product(a, b), tols)]


def _ev_thm32_step(mats, prm, tols):
    a, b = mats
    t = prm["t"]
    dec_a = eig_hermitian(a)
    inv_half = power_from_eig(dec_a, -0.5)
    x = hermitian_part(inv_half @ b @ inv_half)
    g = power_from_eig(dec_a, t) @ matrix_power(x, t) @ power_from_eig(dec_a, 0.5) @ matrix_power(b, 0.5 - t)
    lhs = singular_values(g) ** 2
    return [log_check("eig(B^(1/2-t) A^1/2 X^t A^2t X^t A^1/2 B^(1/2-t)) <=log eig(AB)", lhs, eigenvalues_of_product(a, b), tols)]


def _ev_lem32(mats, prm, tols):
    a, b = mats
    p, q = prm["p"], prm["q"]
    dec = eig_hermitian(a)
    ap = power_from_eig(dec, p)
    aq = power_from_eig(dec, q)
    apq = power_from_eig(dec, p + q)
    lhs = word_eigenvalues([(ap, "psd"), (b, "hermitian"), (aq, "psd"), (b, "hermitian")])
    rhs = word_eigenvalues([(apq, "psd"), (b, "hermitian"), (b, "hermitian")])
    return [log_check("eig(A^p B A^q B) <=log eig(A^(p+q) B^2)", lhs, rhs, tols)]


def _thm33_word(a, b, t):
    gm = geometric_mean(a, b, t)
    return singular_values(matrix_power(a, t) @ gm @ matrix_power(b, 1.0 - t))


def _ev_thm33a(mats, prm, tols):
    a, b = mats
    rhs = singular_values(matrix_power(a, 1.5) @ b @ matrix_power(a, -0.5))
    return [log_check("s(A^t (A#_t B) B^(1-t)) <=log s(A^3/2 B A^-1/2)", _thm33_word(a, b, prm["t"]), rhs, tols)]


def _ev_thm33b(mats, prm, tols):
    a, b = mats
    rhs = singular_values(matrix_power(b, 1.5) @ a @ matrix_power(b, -0.5))
    return [log_check("s(A^t (A#_t B) B^(1-t)) <=log s(B^3/2 A B^-1/2)", _thm33_word(a, b, prm["t"]), rhs, tols)]


def _ev_rem3_close(mats, prm, tols):
    a, b = mats
    s_ab = singular_values(a @ b)
    rhs_a = singular_values(matrix_power(a, 1.5) @ b @ matrix_power(a, -0.5))
    rhs_b = singular_values(matrix_power(b, 1.5) @ a @ matrix_power(b, -0.5))
    return [
        log_check("s(AB) <=log s(A^3/2 B A^-1/2)", s_ab, rhs_a, tols),
        log_check("s(AB) <=log s(B^3/2 A B^-1/2)", s_ab, rhs_b, tols),
    ]


def _sym_cross(a, b):
    g = matrix_power(a, 0.5) @ matrix_power(b, 0.5)
    return hermitian_part(g + g.conj().T)


def _ev_bly11(mats, prm, tols):
    a, b = mats
    lhs = a + b + 2.0 * _tmean(a, b, 0.5)
    rhs = a + b + _sym_cross(a, b)
    checks = [norm_check("||A+B+2(A#B)||_p <= ||A+B+A^1/2B^1/2+B^1/2A^1/2||_p", lhs, rhs, SCHATTEN_SET, tols)]
    fan = fan_check("fan dominance (exploratory)", lhs, rhs, tols)
    checks.append(SubCheck(fan.name, fan.kind, fan.margins, None, fan.holds, fan.min_margin, asserted=False))
    return checks


def _ev_prop41(mats, prm, tols):
    a, b = mats
    n = a.shape[0]
    block = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    block[:n, :n] = a
    block[:n, n:] = b
    block[n:, :n] = b
    block[n:, n:] = a
    x = eig_hermitian(block).eigenvalues
    y = np.concatenate([eig_hermitian(a + b).eigenvalues, eig_hermitian(a - b).eigenvalues])
    return [spectrum_union_check("eig([[A,B],[B,A]]) = eig(A+B) u eig(A-B)", x, y, tols)]


def _ev_thm41(mats, prm, tols):
    a, b, d = mats
    c = a + b + d
    lhs = hermitian_part(c + _sym_cross(a, b))
    rhs = hermitian_part(c + geometric_mean(a, b, 0.5) + natural_natural(a, b))
    return [sv_wise_check("s_j(C + A^1/2B^1/2 + B^1/2A^1/2) <= s_j(C + A#B + A natnat B)", lhs, rhs, tols)]


def _ev_cor41(mats, prm, tols):
    a, b = mats
    lhs = hermitian_part(a + b + _sym_cross(a, b))
    rhs = hermitian_part(a + b + geometric_mean(a, b, 0.5) + natural_natural(a, b))
    return [fan_check("|||A+B+A^1/2B^1/2+B^1/2A^1/2||| <= |||A+B+A#B+A natnat B|||", lhs, rhs, tols)]


def _ev_thm42(mats, prm, tols):
    a, b = mats
    nn = natural_natural(a, b)
    lhs = a + b + geometric_mean(a, b, 0.5) + nn
    rhs = a + b + 2.0 * nn
    return [norm_check("||A+B+A#B+A natnat B||_p <= ||A+B+2(A natnat B)||_p", lhs, rhs, (1.0, 2.0), tols)]


def _ev_lem41(mats, prm, tols):
    a, b = mats
    x = eig_hermitian(geometric_mean(a, b, 0.5)).eigenvalues
    y = eig_hermitian(natural_natural(a, b)).eigenvalues
    return [log_check("eig(A#B) <=log eig(A natnat B)", x, y, tols)]


def _ev_lem42(mats, prm, tols):
    a, b = mats
    x = eigenvalues_of_product(a, geometric_mean(a, b, 0.5))
    y = eigenvalues_of_product(a, natural_natural(a, b))
    return [log_check("eig(A(A#B)) <=log eig(A(A natnat B))", x, y, tols)]


def _ev_rel_w(mats, prm, tols):
    a, b = mats
    t, k = prm["t"], prm["k"]
    dec_a = eig_hermitian(a)
    dec_b = eig_hermitian(b)
    inv_half = power_from_eig(dec_a, -0.5)
    x = hermitian_part(inv_half @ b @ inv_half)
    a_kh = power_from_eig(dec_a, k / 2.0)
    lhs1 = singular_values(matrix_power(x, t / 2.0) @ a_kh) ** 2
    mid = eigenvalues_of_product(power_from_eig(dec_a, k - t), power_from_eig(dec_b, t))
    b_half = power_from_eig(dec_b, 0.5)
    z = hermitian_part(b_half @ power_from_eig(dec_a, -1.0) @ b_half)
    rhs2 = singular_values(matrix_power(z, t / 2.0) @ a_kh) ** 2
    return [
        log_check("eig(A^k/2 X^t A^k/2) <=log eig(A^(k-t) B^t)", lhs1, mid, tols),
        log_check("eig(A^(k-t) B^t) <=log eig(A^k/2 Z^t A^k/2)", mid, rhs2, tols),
    ]


def _ev_lem43(mats, prm, tols):
    a, b = mats
    x = eigenvalues_of_product(b, geometric_mean(a, b, 0.5))
    y = eigenvalues_of_product(b, natural_natural(a, b))
    return [log_check("eig(B(A#B)) <=log eig(B(A natnat B))", x, y, tols)]


def _ev_conj41(mats, prm, tols):
    a, b = mats
    nn = natural_natural(a, b)
    lhs = a + b + geometric_mean(a, b, 0.5) + nn
    rhs = a + b + 2.0 * nn
    return [norm_check("||A+B+A#B+A natnat B||_p <= ||A+B+2(A natnat B)||_p", lhs, rhs, SCHATTEN_SET, tols)]


def _ev_final_chain(mats, prm, tols):
    a, b = mats
    gm = _tmean(a, b, 0.5)
    nn = natural_natural(a, b)
    first = a + b + 2.0 * gm
    mid = a + b + _sym_cross(a, b)
    last = a + b + 2.0 * nn
    return [
        norm_check("||A+B+2(A#B)||_p <= ||A+B+A^1/2B^1/2+B^1/2A^1/2||_p", first, mid, SCHATTEN_SET, tols),
        norm_check("||A+B+A^1/2B^1/2+B^1/2A^1/2||_p <= ||A+B+2(A natnat B)||_p (conjecture-dependent)", mid, last, SCHATTEN_SET, tols, asserted=False),
    ]


# --------------------------------------------------------------------------
# parameter transforms (unit cube -> domain)
# --------------------------------------------------------------------------


def _tf_t01(u):
    return {"t": float(u[0])}


def _tf_t01_boundary(u):
    return {"t": 0.0 if u[0] < 0.5 else 1.0}


def _tf_rst(u):
    r = _aff(u[0], -2.0, 2.0)
    s = _aff(u[1], -2.0, 2.0)
    if abs(r + s) < 0.05:
        s += 0.1 if r + s >= 0 else -0.1
    return {"r": r, "s": s, "t": float(u[2])}


def _tf_rst_psd(u):
    return {"r": _aff(u[0], 1.0, 2.0), "s": _aff(u[1], 1.0, 2.0), "t": float(u[2])}


def _tf_rst_boundary(u):
    prm = _tf_rst(u)
    prm["t"] = 0.0 if u[2] < 0.5 else 1.0
    if u[1] < 0.25:
        prm["s"] = -prm["r"] + (0.05 if u[0] < 0.5 else -0.05)
    return prm


def _tf_conj12_valid(u):
    r = _aff(u[0], 0.0, 2.5)
    s = _aff(u[1], 0.0, 2.5)
    if r + s < 0.05:
        r += 0.05
        s += 0.05
    lo = r / (2.0 * (r + s))
    return {"r": r, "s": s, "t": lo + 0.5 * float(u[2])}


def _tf_pq(u):
    return {"p": 2.0 * float(u[0]), "q": 2.0 * float(u[1])}


def _tf_lem22(u):
    def c2(u1, u2, u3):
        qp = _aff(u1, 0.5, 1.0)
        rp = _aff(u2, -1.0, -0.02)
        lo = max(0.01, -rp * (1.0 - qp))
        hi = min(1.0, qp - rp * (1.0 - qp))
        return {"branch": "C2", "p_prime": _aff(u3, lo, hi), "q_prime": qp, "r_prime": rp}

    if u[0] < 0.5:
        prm = c2(u[1], u[2], u[3])
    else:
        qp = _aff(u[1], 0.05, 0.45)
        rp = _aff(u[2], -1.0, -0.02)
        c1lo = -rp * (1.0 - qp)
        c3lo = (c1lo - qp) / (1.0 - 2.0 * qp)
        c3hi = c1lo / (1.0 - 2.0 * qp)
        lo = max(0.01, c1lo, c3lo)
        hi = min(1.0, qp + c1lo, c3hi)
        if lo < hi:
            prm = {"branch": "C3", "p_prime": _aff(u[3], lo, hi), "q_prime": qp, "r_prime": rp}
        else:
            prm = c2(u[1], u[2], u[3])
    prm["shrink"] = _aff(u[4], 0.1, 0.9)
    return prm


def _thm21_t_interval(p, r, s):
    lo = (r * p - r) / ((r + s) * p)
    return lo, lo + 1.0 / p


def _tf_thm21(u):
    p = _aff(u[0], 1.0, 2.0)
    sign = 1.0 if u[1] < 0.5 else -1.0
    r = sign * _aff(u[2], 0.05, 2.0)
    s = sign * _aff(u[3], 0.05, 2.0)
    lo, hi = _thm21_t_interval(p, r, s)
    return {"p": p, "r": r, "s": s, "t": _aff(u[4], lo, hi)}


def _tf_thm21_psd(u):
    p = _aff(u[0], 1.0, 2.0)
    r = _aff(u[2], 1.0, 2.0)
    s = _aff(u[3], 1.0, 2.0)
    lo, hi = _thm21_t_interval(p, r, s)
    return {"p": p, "r": r, "s": s, "t": _aff(u[4], lo, hi)}


def _tf_thm21_steps(u):
    prm = _tf_thm21(u)
    prm["hyp_scale"] = _aff(u[5], 0.2, 0.95)
    return prm


def _tf_zz(u):
    p = _aff(u[0], 1.0, 2.0)
    sign = 1.0 if u[1] < 0.5 else -1.0
    return {"p": p, "r": sign * _aff(u[2], 0.05, 2.0), "s": sign * _aff(u[3], 0.05, 2.0)}


def _tf_zz_psd(u):
    return {"p": _aff(u[0], 1.0, 2.0), "r": _aff(u[2], 1.0, 2.0), "s": _aff(u[3], 1.0, 2.0)}


def _tf_cor21(u):
    p = _aff(u[0], 1.0, 2.0)
    return {"p": p, "t": (p - 1.0) / (2.0 * p) + float(u[1]) / p}


def _tf_thm22(u):
    p = _aff(u[0], 2.0, 4.0)
    return {"p": p, "t": (p - 1.0) / (2.0 * p) + float(u[1]) / p}


def _tf_conj21(u):
    p = _aff(u[0], 1.0, 4.0)
    if u[1] < 0.5:
        r, s = _aff(u[2], 1.0, 3.0), _aff(u[3], 1.0, 3.0)
    else:
        r, s = _aff(u[2], -2.0, 0.0), _aff(u[3], -2.0, 0.0)
        if abs(r + s - 1.0) < 1e-12:
            r -= 0.01
    return {"p": p, "r": r, "s": s, "t": float(u[4])}


def _tf_conj21_boundary(u):
    p = 1.0 if u[0] < 0.5 else 2.0
    if u[1] < 0.5:
        r = s = 1.0
    else:
        r = s = 0.0
    return {"p": p, "r": r, "s": s, "t": 0.0 if u[4] < 0.5 else 1.0}


def _tf_ex21(u):
    s = _aff(u[0], -1.0, 1.0)
    r = _aff(u[1], (1.0 - s) / 2.0, 2.5)
    return {"r": r, "s": s, "t": 0.0}


def _tf_thm32_step(u):
    return {"t": 0.5 * float(u[0])}


def _tf_thm33a(u):
    return {"t": _aff(u[0], 0.5, 1.0)}


def _tf_thm33b(u):
    return {"t": _aff(u[0], 0.0, 0.5)}


def _tf_rel_w(u):
    t = float(u[0])
    return {"t": t, "k": _aff(u[1], t, 2.0)}


# --------------------------------------------------------------------------
# condition-number budgets: the largest exponent stack an entry applies to
# its inputs; sampled conditioning shrinks accordingly
# --------------------------------------------------------------------------


def _cw_rst(prm):
    return 1.0 + max(abs(prm["r"]), abs(prm["s"]), abs(prm["r"] + prm["s"] - 1.0))


def _cw_thm21(prm):
    return prm["p"] * _cw_rst(prm)


def _cw_zz(prm):
    return prm["p"] * (1.0 + abs(prm["r"] + prm["s"] - 1.0))


def _cw_2p(prm):
    return 2.0 * prm["p"]


def _cw_conj21(prm):
    r, s, p = prm["r"], prm["s"], prm["p"]
    return p * (1.0 + max(abs(r) + abs(s), abs(r + s - 1.0)))


def _cw_pq(prm):
    return 2.0 + prm["p"] + prm["q"]


def _cw_lem22(prm):
    pp, qp, rp = prm["p_prime"], prm["q_prime"], prm["r_prime"]
    return max((abs(rp) + 2.0 * pp) / qp, abs(pp + rp) / qp, 1.0)


def _cw_relw(prm):
    return 1.0 + prm["k"]


def _cw_thm33(prm):
    return 3.5


# --------------------------------------------------------------------------
# domain validators for the coupled entries
# --------------------------------------------------------------------------


def _ok_thm21(prm):
    p, r, s = prm["p"], prm["r"], prm["s"]
    if not (1.0 <= p <= 2.0) or r * s < 0 or abs(r + s) < 1e-12:
        return False
    lo, hi = _thm21_t_interval(p, r, s)
    return lo - 1e-12 <= prm["t"] <= hi + 1e-12


def _ok_lem22(prm):
    pp, qp, rp = prm["p_prime"], prm["q_prime"], prm["r_prime"]
    if not (0.0 < pp <= 1.0 and 0.0 < qp <= 1.0 and -1.0 <= rp < 0.0):
        return False
    if not (-rp * (1.0 - qp) - 1e-12 <= pp <= qp - rp * (1.0 - qp) + 1e-12):
        return False
    if qp >= 0.5:
        return True
    return (
        (-rp * (1.0 - qp) - qp) / (1.0 - 2.0 * qp) - 1e-12
        <= pp
        <= -rp * (1.0 - qp) / (1.0 - 2.0 * qp) + 1e-12
    )


def _ok_ex21(prm):
    return prm["t"] == 0.0 and prm["s"] <= 1.0 + 1e-12 and 2.0 * prm["r"] + prm["s"] >= 1.0 - 1e-12


def _ok_rel_w(prm):
    return 0.0 <= prm["t"] <= 1.0 and prm["t"] <= prm["k"] <= 2.0


# --------------------------------------------------------------------------
# the catalog
# --------------------------------------------------------------------------

_D = InequalityDefinition

CATALOG: tuple[InequalityDefinition, ...] = (
    _D(
        "ZOU-1", "theorem", "log", ("psd", "psd"),
        "s(A^1/2 (A#B) B^1/2)", "s(AB)", "Zou's inequality (1)", "A, B >= 0",
        _ev_zou1, psd_mode="direct", psd_inputs=(0, 1),
    ),
    _D(
        "CONJ-1.1", "conjecture", "log", ("psd", "psd"),
        "s(A^t (A#_t B) B^(1-t))", "s(AB)", "Conjecture 1.1", "A, B >= 0; 0 <= t <= 1",
        _ev_conj11, 1, ("t",), _tf_t01, psd_mode="direct", psd_inputs=(0, 1),
        boundary_transform=_tf_t01_boundary,
    ),
    _D(
        "LS-EIG", "theorem", "log", ("psd", "psd"),
        "eig((A#_{r,t}B)(A#_{s,1-t}B))", "eig(A^(r+s-1) B)", "relation (2)",
        "A, B >= 0; r, s real; 0 <= t <= 1",
        _ev_ls_eig, 3, ("r", "s", "t"), _tf_rst, psd_mode="direct", psd_inputs=(0, 1),
        psd_transform=_tf_rst_psd, cond_weight=_cw_rst,
    ),
    _D(
        "CONJ-1.2", "conjecture", "log", ("psd", "psd"),
        "s((A#_{r,t}B)(A#_{s,1-t}B))", "s(A^(r+s-1) B)", "Conjecture 1.2 / relation (ss)",
        "A, B >= 0; r, s real; 0 <= t <= 1 (refuted at t = 0; valid domain: r, s >= 0 with r/(r+s) <= 2t <= (2r+s)/(r+s))",
        _ev_conj12, 3, ("r", "s", "t"), _tf_rst, psd_mode="direct", psd_inputs=(0, 1),
        psd_transform=_tf_rst_psd, valid_transform=_tf_conj12_valid, cond_weight=_cw_rst,
        boundary_transform=_tf_rst_boundary, refuted_by="EX-2.1",
    ),
    _D(
        "LEM-2.1", "lemma", "reverse_log", ("pd", "hermitian"),
        "eig(A^p B A^-q B)", "eig(A^(p-q) B^2)", "Lemma 2.1", "A > 0, B Hermitian; p, q >= 0",
        _ev_lem21, 2, ("p", "q"), _tf_pq, cond_weight=_cw_pq,
    ),
    _D(
        "EX-2.1", "example_refutation", "log", ("pd", "pd"),
        "s((A#_{r,0}B)(A#_{s,1}B))", "s(A^(r+s-1) B)", "Example 2.1",
        "t = 0; s - 1 <= 0; 2r + s - 1 >= 0 (expects strict violation)",
        _ev_conj12, 2, ("r", "s"), _tf_ex21, params_ok=_ok_ex21,
    ),
    _D(
        "LEM-2.2", "lemma", "loewner_leq", ("pd", "pd"),
        "(X^(r'/2) Y^p' X^(r'/2))^(1/q')", "X^((p'+r')/q')", "Lemma 2.2",
        "0 < Y <= X; 0 < p', q' <= 1; -1 <= r' < 0; condition (C1) and one of (C2)/(C3)",
        _ev_lem22, 5, ("branch", "p_prime", "q_prime", "r_prime", "shrink"), _tf_lem22,
        params_ok=_ok_lem22, cond_weight=_cw_lem22,
    ),
    _D(
        "THM-2.1", "theorem", "log", ("psd", "psd"),
        "eig((A#_{r,t}B)^p (A#_{s,1-t}B)^p)", "eig(A^(r+s-1) B)^p", "Theorem 2.1",
        "1 <= p <= 2; r, s same sign; (rp-r)/((r+s)p) <= t <= (rp+s)/((r+s)p)",
        _ev_thm21, 5, ("p", "r", "s", "t"), _tf_thm21, params_ok=_ok_thm21,
        psd_mode="direct", psd_inputs=(0, 1), psd_transform=_tf_thm21_psd,
        cond_weight=_cw_thm21,
    ),
    _D(
        "THM-2.1-STEPS", "lemma", "loewner_leq", ("pd", "pd"),
        "(A#_{r,t}B)^p and A^(rp-(r+s)pt)", "A^(rp-(r+s)pt) and (A#_{s,1-t}B)^-p",
        "relations (3) and (4)",
        "THM-2.1 domain, under A^((r+s-1)/2) B A^((r+s-1)/2) <= I",
        _ev_thm21_steps, 6, ("p", "r", "s", "t", "hyp_scale"), _tf_thm21_steps,
        cond_weight=_cw_thm21,
    ),
    _D(
        "ZZ-CHAIN", "theorem", "log", ("psd", "psd"),
        "eig(A^(r+s-1) B)^p", "eig(A^(p(r+s-1)) B^p)", "relation (zz) tail",
        "1 <= p <= 2; r, s same sign",
        _ev_zz_chain, 4, ("p", "r", "s"), _tf_zz,
        psd_mode="direct", psd_inputs=(0, 1), psd_transform=_tf_zz_psd,
        cond_weight=_cw_zz,
    ),
    _D(
        "COR-2.1", "corollary", "log", ("psd", "psd"),
        "eig((A#_t B)^p (A#_(1-t) B)^p)", "eig(AB)^p", "Corollary 2.1",
        "1 <= p <= 2; (p-1)/2p <= t <= (p+1)/2p",
        _ev_cor21, 2, ("p", "t"), _tf_cor21, psd_mode="direct", psd_inputs=(0, 1),
        cond_weight=_cw_2p,
    ),
    _D(
        "THM-2.2", "theorem", "log", ("psd", "psd"),
        "eig((A#_t B)^p (A#_(1-t) B)^p)", "eig(AB)^p", "Theorem 2.2",
        "p >= 2; (p-1)/2p <= t <= (p+1)/2p",
        _ev_cor21, 2, ("p", "t"), _tf_thm22, psd_mode="direct", psd_inputs=(0, 1),
        cond_weight=_cw_2p,
    ),
    _D(
        "CONJ-2.1", "conjecture", "log", ("pd", "pd"),
        "eig((A#_{r,t}B)^p (A#_{s,1-t}B)^p)", "eig(A^(p(r+s-1)) B^p)", "Conjecture 2.1",
        "p >= 1; 0 <= t <= 1; r, s >= 1 or r, s <= 0",
        _ev_conj21, 5, ("p", "r", "s", "t"), _tf_conj21,
        boundary_transform=_tf_conj21_boundary, cond_weight=_cw_conj21,
    ),
    _D(
        "LEM-3.1", "lemma", "log+weak_log", ("psd", "hermitian"),
        "|eig(PH)| and s(PH)", "s(PH) and eig(P^2)^1/2 o eig(H^2)^1/2", "Lemma 3.1",
        "block [[P^2, PH], [HP, H^2]] >= 0 from P >= 0, H Hermitian",
        _ev_lem31, psd_mode="direct", psd_inputs=(0,),
    ),
    _D(
        "THM-3.1", "theorem", "log", ("psd", "psd"),
        "s(A^1/2 (A#B) B^1/2) and eig(AB)", "eig(AB) and s(AB)", "Theorem 3.1", "A, B >= 0",
        _ev_thm31, psd_mode="direct", psd_inputs=(0, 1),
    ),
    _D(
        "RMK-3.1", "example_refutation", "log", ("pd", "pd"),
        "s(AB)", "eig(AB)", "Remark 3.1", "t = 0 instance (expects strict violation)",
        _ev_rmk31,
    ),
    _D(
        "THM-3.2", "theorem", "log", ("psd", "psd"),
        "|eig(A^t (A#_t B) B^(1-t))|", "eig(AB)", "Theorem 3.2", "A, B >= 0; 0 <= t <= 1",
        _ev_thm32, 1, ("t",), _tf_t01, psd_mode="direct", psd_inputs=(0, 1),
    ),
    _D(
        "THM-3.2-STEP", "lemma", "log", ("psd", "psd"),
        "eig(B^(1/2-t) A^1/2 X^t A^2t X^t A^1/2 B^(1/2-t))", "eig(AB)", "relation (10)",
        "0 <= t <= 1/2, X = A^-1/2 B A^-1/2",
        _ev_thm32_step, 1, ("t",), _tf_thm32_step, psd_mode="direct", psd_inputs=(1,),
    ),
    _D(
        "LEM-3.2", "lemma", "log", ("psd", "hermitian"),
        "eig(A^p B A^q B)", "eig(A^(p+q) B^2)", "Lemma 3.2", "A >= 0, B Hermitian; p, q >= 0",
        _ev_lem32, 2, ("p", "q"), _tf_pq, psd_mode="direct", psd_inputs=(0,),
        cond_weight=_cw_pq,
    ),
    _D(
        "THM-3.3a", "theorem", "log", ("pd", "pd"),
        "s(A^t (A#_t B) B^(1-t))", "s(A^3/2 B A^-1/2)", "Theorem 3.3 (1)",
        "A, B > 0; 1/2 <= t <= 1",
        _ev_thm33a, 1, ("t",), _tf_thm33a, cond_weight=_cw_thm33,
    ),
    _D(
        "THM-3.3b", "theorem", "log", ("pd", "pd"),
        "s(A^t (A#_t B) B^(1-t))", "s(B^3/2 A B^-1/2)", "Theorem 3.3 (2)",
        "A, B > 0; 0 <= t <= 1/2",
        _ev_thm33b, 1, ("t",), _tf_thm33b, cond_weight=_cw_thm33,
    ),
    _D(
        "REM-3-CLOSE", "corollary", "log", ("pd", "pd"),
        "s(AB)", "s(A^3/2 B A^-1/2) and s(B^3/2 A B^-1/2)", "closing remark of the eigenvalue section",
        "A, B > 0",
        _ev_rem3_close, cond_weight=_cw_thm33,
    ),
    _D(
        "BLY-11", "theorem", "norm_leq", ("psd", "psd"),
        "||A+B+2(A#B)||_p", "||A+B+A^1/2B^1/2+B^1/2A^1/2||_p", "relation (11)",
        "A, B >= 0; Schatten p in {1, 1.5, 2, 3, inf}",
        _ev_bly11, psd_mode="direct", psd_inputs=(0, 1),
    ),
    _D(
        "PROP-4.1", "proposition", "spectrum_union_equality", ("hermitian", "hermitian"),
        "eig([[A,B],[B,A]])", "eig(A+B) union eig(A-B)", "Proposition 4.1", "A, B Hermitian",
        _ev_prop41,
    ),
    _D(
        "THM-4.1", "theorem", "singular_value_wise_leq", ("pd", "pd", "psd"),
        "s_j(C + A^1/2B^1/2 + B^1/2A^1/2)", "s_j(C + A#B + A natnat B)", "Theorem 4.1",
        "A, B > 0; C = A + B + D with D >= 0",
        _ev_thm41,
    ),
    _D(
        "COR-4.1", "corollary", "fan_dominance", ("pd", "pd"),
        "|||A+B+A^1/2B^1/2+B^1/2A^1/2|||", "|||A+B+A#B+A natnat B|||", "Corollary 4.1",
        "A, B > 0; all unitarily invariant norms via Fan dominance",
        _ev_cor41,
    ),
    _D(
        "THM-4.2", "theorem", "norm_leq", ("pd", "pd"),
        "||A+B+A#B+A natnat B||_p", "||A+B+2(A natnat B)||_p", "Theorem 4.2",
        "A, B > 0; p in {1, 2}",
        _ev_thm42,
    ),
    _D(
        "LEM-4.1", "lemma", "log", ("pd", "pd"),
        "eig(A#B)", "eig(A natnat B)", "Lemma 4.1", "A, B > 0",
        _ev_lem41,
    ),
    _D(
        "LEM-4.2", "lemma", "log", ("pd", "pd"),
        "eig(A(A#B))", "eig(A(A natnat B))", "Lemma 4.2", "A, B > 0",
        _ev_lem42,
    ),
    _D(
        "REL-W", "lemma", "log", ("pd", "psd"),
        "eig(A^k/2 X^t A^k/2) and eig(A^(k-t) B^t)",
        "eig(A^(k-t) B^t) and eig(A^k/2 (B^1/2 A^-1 B^1/2)^t A^k/2)",
        "relation (w) and its complement",
        "0 <= t <= 1; t <= k <= 2",
        _ev_rel_w, 2, ("t", "k"), _tf_rel_w, params_ok=_ok_rel_w,
        psd_mode="direct", psd_inputs=(1,), cond_weight=_cw_relw,
    ),
    _D(
        "LEM-4.3", "lemma", "log", ("pd", "pd"),
        "eig(B(A#B))", "eig(B(A natnat B))", "Lemma 4.3", "A, B > 0",
        _ev_lem43,
    ),
    _D(
        "CONJ-4.1", "conjecture", "norm_leq", ("pd", "pd"),
        "||A+B+A#B+A natnat B||_p", "||A+B+2(A natnat B)||_p", "Conjecture 4.1",
        "A, B > 0; checked at p in {1, 1.5, 2, 3, inf}",
        _ev_conj41,
    ),
    _D(
        "FINAL-CHAIN", "theorem", "norm_leq", ("psd", "psd"),
        "||A+B+2(A#B)||_p", "||A+B+A^1/2B^1/2+B^1/2A^1/2||_p <= ||A+B+2(A natnat B)||_p",
        "closing chain", "first leg asserted; second leg conjecture-dependent, reported only",
        _ev_final_chain,
    ),
)

CATALOG_BY_ID = {entry.id: entry for entry in CATALOG}

#: Statuses expanded by the "all-theorems" id group.
THEOREM_STATUSES = ("theorem", "lemma", "corollary", "proposition")
