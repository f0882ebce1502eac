"""Reproducible random matrices with controlled class, rank, and conditioning.

Streams are counter-based (Philox) and derived by value from string labels,
so any (seed, label) pair names the same stream on every platform and under
any parallel schedule. Matrices are built as Q diag(d) Q* with Q the
unitary Gram-Schmidt factor of a complex Ginibre sample and d a log-uniform
spectrum with forced extreme entries, which pins the condition number.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .errors import BadSpec
from .linalg import as_complex_matrix, eig_hermitian, hermitian_part, zero_clamp

KINDS = ("pd", "psd", "hermitian")


@dataclass(frozen=True)
class GenSpec:
    """What to generate: dimension, class, rank (psd only), conditioning, scale."""

    dim: int
    kind: str = "pd"
    rank: int | None = None
    cond_target: float = 1e4
    scale: float = 1.0

    def __post_init__(self):
        if self.dim < 1:
            raise BadSpec(f"dim must be positive, got {self.dim}")
        if self.kind not in KINDS:
            raise BadSpec(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.kind == "psd":
            if self.rank is None or not 1 <= self.rank <= self.dim:
                raise BadSpec(f"psd rank must be in 1..{self.dim}, got {self.rank}")
        elif self.rank is not None:
            raise BadSpec("rank is only meaningful for kind='psd'")
        if not self.cond_target >= 1.0:
            raise BadSpec(f"cond_target must be >= 1, got {self.cond_target}")
        if not self.scale > 0.0:
            raise BadSpec(f"scale must be positive, got {self.scale}")


def stream(seed: int, *labels) -> np.random.Generator:
    """Counter-based RNG stream named by (seed, labels).

    The Philox key is (seed, sha256 of the joined labels), so streams are
    independent of execution order and worker count.
    """
    tag = "/".join(str(x) for x in labels)
    digest = hashlib.sha256(tag.encode("utf-8")).digest()
    key = np.array(
        [np.uint64(seed % 2**64), np.uint64(int.from_bytes(digest[:8], "big"))],
        dtype=np.uint64,
    )
    return np.random.Generator(np.random.Philox(key=key))


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar unitary: Gram-Schmidt factor of a complex Ginibre sample."""
    g = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(g)
    diag = np.diag(r)
    return q * (diag / np.abs(diag))


def _spectrum(spec: GenSpec, rng: np.random.Generator) -> np.ndarray:
    lo = np.log(spec.scale / spec.cond_target)
    hi = np.log(spec.scale)
    pos = spec.dim if spec.kind != "psd" else spec.rank
    d = np.exp(rng.uniform(lo, hi, pos))
    if pos >= 2:
        d[0] = spec.scale
        d[1] = spec.scale / spec.cond_target
    if spec.kind == "hermitian":
        signs = np.where(rng.random(pos) < 0.5, -1.0, 1.0)
        if pos >= 2 and np.all(signs == signs[0]):
            signs[int(rng.integers(pos))] *= -1.0
        d = d * signs
    if spec.kind == "psd":
        d = np.concatenate([d, np.zeros(spec.dim - spec.rank)])
    return d


def random_matrix(spec: GenSpec, rng: np.random.Generator) -> np.ndarray:
    """Draw one matrix of the requested class, deterministically from rng.

    pd: spectrum log-uniform in [scale/cond_target, scale] with the extremes
    pinned, so the condition number matches cond_target. psd: same with
    dim - rank eigenvalues exactly zero. hermitian: log-uniform magnitudes
    with random signs, at least one of each sign when dim >= 2.
    """
    d = _spectrum(spec, rng)
    q = random_unitary(spec.dim, rng)
    return hermitian_part((q * d) @ q.conj().T)


def perturb(
    m,
    magnitude: float,
    rng: np.random.Generator,
    kind: str = "pd",
    floor: float | None = None,
) -> np.ndarray:
    """Add a unit-Frobenius random Hermitian direction scaled by magnitude.

    The result is re-projected to the requested class: eigenvalues of psd
    outputs below the zero clamp are zeroed (preserving approximate rank),
    pd outputs get eigenvalues floored just above the clamp. ``floor``
    raises the pd floor to floor * lambda_max, bounding the condition
    number of the walk.
    """
    if not magnitude > 0:
        raise ValueError(f"magnitude must be positive, got {magnitude}")
    if kind not in KINDS:
        raise BadSpec(f"kind must be one of {KINDS}, got {kind!r}")
    a = as_complex_matrix(m)
    n = a.shape[0]
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    h = hermitian_part(g)
    h /= np.linalg.norm(h)
    out = hermitian_part(a + magnitude * h)
    if kind == "hermitian":
        return out
    w, v = eig_hermitian(out)
    clamp = zero_clamp(w)
    if kind == "psd":
        # rank-preserving projection: the input's zero count stays zero
        w_in = eig_hermitian(a).eigenvalues
        zeros_in = int(np.sum(w_in <= zero_clamp(w_in)))
        w = np.where(w <= clamp, 0.0, w)
        if zeros_in:
            w[n - zeros_in :] = 0.0
    else:
        lo = 2.0 * clamp + 1e-300
        if floor is not None:
            lo = max(lo, floor * float(w.max(initial=0.0)))
        w = np.maximum(w, lo)
    return hermitian_part((v * w) @ v.conj().T)
