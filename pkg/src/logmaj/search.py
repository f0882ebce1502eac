"""Counterexample hunting: random restarts plus margin-minimizing hill climbs.

The objective is the worst (minimum) margin of the target relation; a
strict violation is a margin below -strictness. Each restart draws fresh
inputs and parameters, then takes hill steps that perturb the matrices
(class-preserving random directions) and the parameters (jitter of their
unit-cube coordinates, so coupled domains are never left). The step
magnitude anneals by 0.7 on every non-improving step and resets on
improvement. Restarts run on independent counter-based streams, so the
report is deterministic for a given (target, budget, dims, seed,
hill_steps) regardless of scheduling.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .catalog import InequalityDefinition
from .checks import Tolerances
from .errors import ReproductionMismatch, WrongStatus
from .linalg import frobenius, matrix_from_json, matrix_to_json
from .randgen import perturb, stream
from .registry import (
    COND_BUDGET,
    CheckOutcome,
    evaluate,
    lookup,
    sample_inputs,
    sample_unit,
    suite_threads,
)

#: Fraction of restarts that snap parameters to the domain boundary.
BOUNDARY_EVERY = 4

#: Initial hill-step magnitude relative to the input Frobenius norm.
INITIAL_STEP = 0.3

#: Annealing factor applied to the step magnitude after a non-improving step.
ANNEAL = 0.7


@dataclass
class SearchReport:
    """Best instance found while minimizing the target's worst margin."""

    target_id: str
    budget: int
    dims: list[int]
    seed: int
    hill_steps: int
    strictness: float
    trials_used: int
    best_margin: float
    violation_found: bool
    best_instance: dict = field(repr=False)
    margin_trace: list[tuple[int, float]] = field(repr=False)

    def as_json(self) -> dict:
        return {
            "target_id": self.target_id,
            "budget": self.budget,
            "dims": list(self.dims),
            "seed": self.seed,
            "hill_steps": self.hill_steps,
            "strictness": float(self.strictness),
            "trials_used": self.trials_used,
            "best_margin": float(self.best_margin),
            "violation_found": bool(self.violation_found),
            "best_instance": self.best_instance,
            "margin_trace": [[t, float(m)] for t, m in self.margin_trace],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SearchReport":
        return cls(
            target_id=obj["target_id"],
            budget=int(obj["budget"]),
            dims=[int(d) for d in obj["dims"]],
            seed=int(obj["seed"]),
            hill_steps=int(obj["hill_steps"]),
            strictness=float(obj["strictness"]),
            trials_used=int(obj["trials_used"]),
            best_margin=float(obj["best_margin"]),
            violation_found=bool(obj["violation_found"]),
            best_instance=obj["best_instance"],
            margin_trace=[(int(t), float(m)) for t, m in obj["margin_trace"]],
        )


def _instance_json(defn: InequalityDefinition, mats, params) -> dict:
    return {
        "id": defn.id,
        "inputs": [matrix_to_json(m) for m in mats],
        "params": {k: v for k, v in params.items()},
    }


def _objective(defn, mats, params, tols) -> float:
    return evaluate(defn, mats, params, tols).min_margin


def _restart(
    defn: InequalityDefinition,
    restart_index: int,
    dims: list[int],
    seed: int,
    hill_steps: int,
    tols: Tolerances,
) -> tuple[float, list, dict]:
    rng = stream(seed, "search", defn.id, restart_index)
    dim = dims[restart_index % len(dims)]
    boundary = defn.boundary_transform is not None and restart_index % BOUNDARY_EVERY == 0
    if defn.n_params:
        unit = sample_unit(defn, rng)
        transform = defn.boundary_transform if boundary else defn.transform
        params = transform(unit)
    else:
        unit, params = np.empty(0), {}
        transform = None
    mats = sample_inputs(defn, dim, rng, params=params)
    best = _objective(defn, mats, params, tols)
    if not np.isfinite(best):
        best = np.inf
    best_mats, best_params = mats, params
    magnitude = INITIAL_STEP
    for _ in range(hill_steps):
        if transform is not None:
            cand_unit = np.clip(unit + magnitude * rng.standard_normal(unit.size) / 3.0, 0.0, 1.0)
            cand_params = transform(cand_unit)
        else:
            cand_unit, cand_params = unit, params
        # psd-class inputs are explored through the PD interior, with the
        # walk's conditioning capped by the entry's accuracy budget so a
        # negative margin is never a roundoff artifact
        weight = 2.0
        if defn.cond_weight is not None:
            weight = max(1.0, float(defn.cond_weight(cand_params)))
        floor = 10.0 ** (-COND_BUDGET / weight)
        cand_mats = [
            perturb(m, magnitude * max(frobenius(m), 1e-12), rng,
                    kind="pd" if cls == "psd" else cls, floor=floor)
            for m, cls in zip(best_mats, defn.inputs)
        ]
        margin = _objective(defn, cand_mats, cand_params, tols)
        # non-finite margins mean a clamped-to-zero spectrum: numerically
        # degenerate, not a usable violation certificate
        if np.isfinite(margin) and margin < best:
            best, best_mats, best_params, unit = margin, cand_mats, cand_params, cand_unit
            magnitude = INITIAL_STEP
        else:
            magnitude *= ANNEAL
    return best, best_mats, best_params


def search(
    target_id: str,
    budget: int,
    dims: list[int],
    rng_seed: int,
    hill_steps: int = 10,
    tols: Tolerances = Tolerances(),
    threads: int | None = None,
) -> SearchReport:
    """Hunt for a strict violation of a conjecture or refutation target.

    Restarts are independent streams and may run on worker threads
    (LOGMAJ_THREADS by default); the reduction folds results in restart
    order, so the report is identical for any worker count and ties go to
    the smaller restart index.

    Raises
    ------
    WrongStatus
        If the target is a proved entry (those are suite-checked, not
        searched).
    """
    defn = lookup(target_id)
    if defn.status not in ("conjecture", "example_refutation"):
        raise WrongStatus(f"{target_id} has status {defn.status}; search targets conjectures and refutations")
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    threads = suite_threads() if threads is None else max(1, threads)

    def one(restart: int):
        return _restart(defn, restart, dims, rng_seed, hill_steps, tols)

    if threads == 1:
        results = map(one, range(budget))
    else:
        pool = ThreadPoolExecutor(max_workers=threads)
        results = pool.map(one, range(budget))
    best = np.inf
    best_instance: dict = {}
    trace: list[tuple[int, float]] = []
    for restart, (margin, mats, params) in enumerate(results):
        if margin < best:
            best = margin
            best_instance = _instance_json(defn, mats, params)
            trace.append((restart, float(best)))
    if threads > 1:
        pool.shutdown()
    return SearchReport(
        target_id=target_id,
        budget=budget,
        dims=list(dims),
        seed=rng_seed,
        hill_steps=hill_steps,
        strictness=tols.strictness,
        trials_used=budget * (1 + hill_steps),
        best_margin=float(best),
        violation_found=bool(best < -tols.strictness),
        best_instance=best_instance,
        margin_trace=trace,
    )


def verify_instance(report: SearchReport, tols: Tolerances = Tolerances()) -> CheckOutcome:
    """Independently re-evaluate a report's best instance through the registry.

    Raises
    ------
    ReproductionMismatch
        If the recomputed margin differs from the recorded one by more
        than 1e-9.
    """
    inst = report.best_instance
    if not inst:
        raise ReproductionMismatch("report has no best instance")
    defn = lookup(inst["id"])
    mats = [matrix_from_json(mj) for mj in inst["inputs"]]
    outcome = evaluate(defn, mats, dict(inst["params"]), tols)
    if not np.isclose(outcome.min_margin, report.best_margin, rtol=0.0, atol=1e-9):
        raise ReproductionMismatch(
            f"margin {outcome.min_margin!r} does not reproduce recorded {report.best_margin!r}"
        )
    return outcome
