"""Catalog lookup, parameter/input sampling, evaluation, and suite runs.

Evaluation is pure: the outcome of a trial is a function of (entry id,
matrices, parameters, tolerances). Suites derive every trial's random
stream from (seed, id, dim, trial) with a counter-based splitter, so
results are identical under any scheduling or worker count. Rank-deficient
stress trials (every eighth trial of entries that extend to the
semi-definite boundary) are evaluated directly at the boundary; the
epsilon-ladder mode is available for instances with no direct route, and
its non-convergence is reported as a skipped outcome, never as pass/fail.
"""

from __future__ import annotations

import hashlib
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .catalog import CATALOG, CATALOG_BY_ID, THEOREM_STATUSES, InequalityDefinition
from .checks import SubCheck, Tolerances
from .errors import DomainViolation, EmptyDomain, NonConvergedLimit, UnknownId
from .linalg import (
    as_complex_matrix,
    eig_hermitian,
    matrix_from_json,
    matrix_to_json,
    zero_clamp,
)
from .means import LADDER_AGREEMENT, LADDER_RUNGS
from .randgen import GenSpec, random_matrix, stream

CATALOG_VERSION = "1"

#: Every eighth suite trial of a psd-extendable entry is rank-deficient.
DEFICIENT_PERIOD = 8


@dataclass
class CheckOutcome:
    """One evaluated instance of a catalog entry."""

    id: str
    dim: int
    trial: int
    variant: str
    deficient_input: int | None
    input_digests: list[str]
    inputs: list[np.ndarray] = field(repr=False)
    params: dict
    checks: list[SubCheck] = field(repr=False)
    status: str  # pass | fail | skipped
    holds: bool | None
    min_margin: float
    wall_time: float = 0.0  # not serialized: reports must be byte-stable

    def as_json(self) -> dict:
        return {
            "id": self.id,
            "dim": self.dim,
            "trial": self.trial,
            "variant": self.variant,
            "deficient_input": self.deficient_input,
            "input_digests": self.input_digests,
            "inputs": [matrix_to_json(m) for m in self.inputs],
            "params": {k: v for k, v in self.params.items()},
            "checks": [c.as_json() for c in self.checks],
            "status": self.status,
            "holds": self.holds,
            "min_margin": float(self.min_margin),
        }


def lookup(entry_id: str) -> InequalityDefinition:
    """Catalog entry by id; raises UnknownId otherwise."""
    try:
        return CATALOG_BY_ID[entry_id]
    except KeyError:
        raise UnknownId(f"no catalog entry {entry_id!r}") from None


def parse_id(entry_id: str) -> tuple[InequalityDefinition, str]:
    """Resolve an id with an optional ':valid' domain suffix."""
    base, _, suffix = entry_id.partition(":")
    defn = lookup(base)
    if suffix == "":
        return defn, "full"
    if suffix == "valid":
        if defn.valid_transform is None:
            raise UnknownId(f"{base} has no restricted valid domain")
        return defn, "valid"
    raise UnknownId(f"unknown id suffix {suffix!r} in {entry_id!r}")


def expand_ids(ids: list[str]) -> list[str]:
    """Expand the id groups all-theorems / all-refutations / all-conjectures."""
    out: list[str] = []
    for i in ids:
        if i == "all-theorems":
            out.extend(e.id for e in CATALOG if e.status in THEOREM_STATUSES)
        elif i == "all-refutations":
            out.extend(e.id for e in CATALOG if e.status == "example_refutation")
        elif i == "all-conjectures":
            out.extend(e.id for e in CATALOG if e.status == "conjecture")
        elif i == "all":
            out.extend(e.id for e in CATALOG)
        else:
            parse_id(i)
            out.append(i)
    return out


def sample_unit(defn: InequalityDefinition, rng: np.random.Generator) -> np.ndarray:
    if defn.n_params == 0:
        raise EmptyDomain(f"{defn.id} has no free parameters")
    return rng.uniform(0.0, 1.0, defn.n_params)


def sample_params(
    defn: InequalityDefinition, rng: np.random.Generator, variant: str = "full"
) -> dict:
    """Draw parameters uniformly from the entry's (possibly coupled) domain.

    ``variant`` selects the transform: "full" is the stated domain, "valid"
    the restricted proved domain, "psd" the boundary-safe restriction, and
    "boundary" the search module's endpoint sweep.
    """
    transform = {
        "full": defn.transform,
        "valid": defn.valid_transform,
        "psd": defn.psd_transform or defn.transform,
        "boundary": defn.boundary_transform or defn.transform,
    }[variant]
    if transform is None:
        raise EmptyDomain(f"{defn.id} has no {variant!r} parameter domain")
    return transform(sample_unit(defn, rng))


#: Per-word log10 condition budget: exponent stacks (entry cond_weight) must
#: keep kappa below 10**COND_BUDGET for determinant legs to stay accurate.
COND_BUDGET = 6.5


def sample_inputs(
    defn: InequalityDefinition,
    dim: int,
    rng: np.random.Generator,
    deficient_input: int | None = None,
    params: dict | None = None,
) -> list[np.ndarray]:
    """Draw the entry's inputs: PD samples for pd/psd classes (rank dim-1 at
    the deficient index), Hermitian samples otherwise. Conditioning is
    log-uniform with an upper bound that shrinks as the entry's sampled
    exponents grow; scale is log-uniform in [0.1, 10]."""
    weight = 2.0
    if defn.cond_weight is not None and params is not None:
        weight = max(1.0, float(defn.cond_weight(params)))
    hi = min(3.0, COND_BUDGET / weight)
    mats = []
    for idx, cls in enumerate(defn.inputs):
        cond = 10.0 ** rng.uniform(0.0, hi)
        scale = 10.0 ** rng.uniform(-1.0, 1.0)
        if cls == "hermitian":
            spec = GenSpec(dim, "hermitian", cond_target=cond, scale=scale)
        elif idx == deficient_input and dim > 1:
            spec = GenSpec(dim, "psd", rank=dim - 1, cond_target=cond, scale=scale)
        else:
            spec = GenSpec(dim, "pd", cond_target=cond, scale=scale)
        mats.append(random_matrix(spec, rng))
    return mats


def _digest(m: np.ndarray) -> str:
    h = hashlib.sha256(np.ascontiguousarray(m).tobytes()).hexdigest()[:16]
    return f"{m.shape[0]}x{m.shape[1]}:{h}"


def _validate_inputs(defn: InequalityDefinition, mats: list[np.ndarray]) -> None:
    if len(mats) != len(defn.inputs):
        raise DomainViolation(f"{defn.id} expects {len(defn.inputs)} inputs, got {len(mats)}")
    dim = mats[0].shape[0]
    for m, cls in zip(mats, defn.inputs):
        if m.shape != (dim, dim):
            raise DomainViolation(f"{defn.id}: inputs must share dimension")
        herm_gap = float(np.linalg.norm(m - m.conj().T))
        if herm_gap > 1e-12 * max(float(np.linalg.norm(m)), 1e-300):
            raise DomainViolation(f"{defn.id}: input of class {cls} is not Hermitian")
        if cls in ("pd", "psd"):
            w = eig_hermitian(m).eigenvalues
            clamp = zero_clamp(w)
            if cls == "pd" and w.min() <= clamp:
                raise DomainViolation(f"{defn.id}: pd input is singular")
            if cls == "psd" and w.min() < -clamp:
                raise DomainViolation(f"{defn.id}: psd input has negative eigenvalues")


def _margins_agree(a: list[SubCheck], b: list[SubCheck], tol: float) -> bool:
    for ca, cb in zip(a, b):
        ma, mb = np.atleast_1d(ca.margins), np.atleast_1d(cb.margins)
        if ma.shape != mb.shape:
            return False
        finite = np.isfinite(ma) & np.isfinite(mb)
        if not np.array_equal(ma[~finite], mb[~finite]):
            return False
        if finite.any() and float(np.max(np.abs(ma[finite] - mb[finite]))) > tol:
            return False
    return True


def evaluate(
    defn: InequalityDefinition | str,
    inputs: list[np.ndarray],
    params: dict | None = None,
    tols: Tolerances = Tolerances(),
    mode: str | None = None,
    dim: int | None = None,
    trial: int = 0,
    variant: str = "full",
    deficient_input: int | None = None,
) -> CheckOutcome:
    """Evaluate one instance. ``mode`` defaults to direct evaluation; pass
    "ladder" to route singular inputs through the epsilon ladder (inputs of
    class pd/psd are shifted together down the rungs and the margin vectors
    of consecutive rungs must agree to the ladder tolerance; otherwise the
    outcome is skipped)."""
    if isinstance(defn, str):
        defn = lookup(defn)
    params = dict(params or {})
    mats = [as_complex_matrix(m) for m in inputs]
    _validate_inputs(defn, mats)
    if defn.params_ok is not None and params and not defn.params_ok(params):
        raise DomainViolation(f"{defn.id}: parameters outside domain: {params}")
    start = time.perf_counter()
    skipped = False
    if mode == "ladder":
        checks = _ladder_evaluate(defn, mats, params, tols)
        if checks is None:
            skipped = True
            checks = []
    else:
        checks = defn.evaluate(mats, params, tols)
    wall = time.perf_counter() - start
    if skipped:
        status, holds, min_margin = "skipped", None, float("nan")
    else:
        asserted = [c for c in checks if c.asserted]
        holds = all(c.holds for c in asserted)
        min_margin = float(min((c.min_margin for c in asserted), default=np.inf))
        status = "pass" if holds else "fail"
    return CheckOutcome(
        id=defn.id,
        dim=mats[0].shape[0] if dim is None else dim,
        trial=trial,
        variant=variant,
        deficient_input=deficient_input,
        input_digests=[_digest(m) for m in mats],
        inputs=mats,
        params=params,
        checks=checks,
        status=status,
        holds=holds,
        min_margin=min_margin,
        wall_time=wall,
    )


def _ladder_evaluate(
    defn: InequalityDefinition,
    mats: list[np.ndarray],
    params: dict,
    tols: Tolerances,
) -> list[SubCheck] | None:
    shiftable = [i for i, cls in enumerate(defn.inputs) if cls in ("pd", "psd")]
    total = sum((mats[i] for i in shiftable[1:]), mats[shiftable[0]])
    lam = float(eig_hermitian(total).eigenvalues.max(initial=0.0))
    eye = np.eye(mats[0].shape[0])
    wide = tols.widened(LADDER_AGREEMENT)
    prev = None
    for rung in LADDER_RUNGS:
        eps = rung * lam
        shifted = [m + eps * eye if i in shiftable else m for i, m in enumerate(mats)]
        cur = defn.evaluate(shifted, params, wide)
        if prev is not None and _margins_agree(prev, cur, LADDER_AGREEMENT):
            return cur
        prev = cur
    return None


@dataclass
class SuiteSummary:
    """Per-entry aggregate over a suite run."""

    id: str
    status: str
    trials: int
    failures: int
    skipped: int
    violations: int
    worst_margin: float
    ok: bool

    def as_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "trials": self.trials,
            "failures": self.failures,
            "skipped": self.skipped,
            "violations": self.violations,
            "worst_margin": float(self.worst_margin),
            "ok": bool(self.ok),
        }


def _suite_chunk(
    entry_id: str,
    dim: int,
    trials: int,
    seed: int,
    tols: Tolerances,
) -> list[CheckOutcome]:
    defn, variant = parse_id(entry_id)
    outcomes = []
    for trial in range(trials):
        rng = stream(seed, "suite", defn.id, variant, dim, trial)
        deficient = None
        if (
            variant == "full"
            and defn.psd_mode != "none"
            and defn.psd_inputs
            and dim > 1
            and trial % DEFICIENT_PERIOD == DEFICIENT_PERIOD - 1
        ):
            deficient = defn.psd_inputs[(trial // DEFICIENT_PERIOD) % len(defn.psd_inputs)]
        if defn.n_params:
            pvariant = "psd" if deficient is not None else variant
            params = sample_params(defn, rng, pvariant)
        else:
            params = {}
        mats = sample_inputs(defn, dim, rng, deficient, params)
        mode = "ladder" if (deficient is not None and defn.psd_mode == "ladder") else None
        outcomes.append(
            evaluate(
                defn,
                mats,
                params,
                tols,
                mode=mode,
                dim=dim,
                trial=trial,
                variant=variant,
                deficient_input=deficient,
            )
        )
    return outcomes


def suite_threads() -> int:
    """Worker count from LOGMAJ_THREADS (default 1)."""
    try:
        return max(1, int(os.environ.get("LOGMAJ_THREADS", "1")))
    except ValueError:
        return 1


def run_suite(
    ids: list[str],
    trials: int,
    dims: list[int],
    seed: int,
    tols: Tolerances = Tolerances(),
    threads: int | None = None,
) -> tuple[list[CheckOutcome], list[SuiteSummary]]:
    """Evaluate ``trials`` sampled instances per (id, dim).

    Outcomes are ordered by (id position, dim, trial) and are bitwise
    reproducible for a given seed, independent of ``threads``.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    ids = list(ids)
    for i in ids:
        parse_id(i)
    threads = suite_threads() if threads is None else max(1, threads)
    jobs = [(i, d) for i in ids for d in dims]
    if threads == 1:
        chunks = [_suite_chunk(i, d, trials, seed, tols) for i, d in jobs]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda jd: _suite_chunk(jd[0], jd[1], trials, seed, tols), jobs))
    outcomes = [o for chunk in chunks for o in chunk]
    summaries = summarize(ids, outcomes, tols)
    return outcomes, summaries


def summarize(ids: list[str], outcomes: list[CheckOutcome], tols: Tolerances) -> list[SuiteSummary]:
    """Aggregate outcomes per entry, with expected-result semantics by status:
    theorem-family entries must have zero failures, conjectures zero strict
    violations, refutations at least one strict violation."""
    summaries = []
    for entry_id in ids:
        defn, variant = parse_id(entry_id)
        mine = [o for o in outcomes if o.id == defn.id and o.variant == variant]
        evaluated = [o for o in mine if o.status != "skipped"]
        failures = sum(1 for o in evaluated if not o.holds)
        skipped = len(mine) - len(evaluated)
        violations = sum(1 for o in evaluated if o.min_margin < -tols.strictness)
        worst = min((o.min_margin for o in evaluated), default=float("inf"))
        if defn.status in THEOREM_STATUSES or variant == "valid":
            ok = failures == 0
        elif defn.status == "conjecture":
            # violations of an already-refuted conjecture are the expected
            # reproduction of its refutation, not news
            ok = violations == 0 or defn.refuted_by is not None
        else:  # example_refutation
            ok = violations >= 1
        summaries.append(
            SuiteSummary(entry_id, defn.status, len(mine), failures, skipped, violations, worst, ok)
        )
    return summaries


def catalog_json() -> dict:
    """The compiled-in catalog as a JSON-ready dict (``registry dump``)."""
    return {
        "catalog_version": CATALOG_VERSION,
        "entries": [e.as_json() for e in CATALOG],
    }


def outcome_from_json(obj: dict) -> tuple[InequalityDefinition, list[np.ndarray], dict]:
    """Rebuild (entry, inputs, params) from a serialized outcome for replay."""
    defn = lookup(obj["id"])
    mats = [matrix_from_json(mj) for mj in obj["inputs"]]
    return defn, mats, dict(obj["params"])
