"""Command-line front end.

Subcommands:

* ``verify``        -- run the sampled suite over catalog ids; write a report.
* ``search``        -- counterexample hunt on conjecture/refutation targets.
* ``reproduce``     -- find and print a violating instance of a refutation.
* ``registry-dump`` -- emit the compiled-in catalog as JSON.

Exit codes: 0 all expected outcomes (proved entries hold, refutations
found), 1 an unexpected theorem failure or a violation of an open
conjecture (distinguished in the report), 2 usage or numerical error.
Reports are byte-stable for a fixed seed: outcomes are ordered by
(id, dim, trial) and neither timings nor the worker count (env
LOGMAJ_THREADS) are recorded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .checks import Tolerances
from .errors import LogmajError
from .registry import (
    CATALOG_VERSION,
    evaluate,
    expand_ids,
    lookup,
    outcome_from_json,
    parse_id,
    run_suite,
    summarize,
)
from .registry import catalog_json as _catalog_json
from .search import search as run_search

DEFAULT_DIMS = [2, 3, 4, 5]
DEFAULT_SEARCH_DIMS = [2, 3]


def _parse_ids(raw: str) -> list[str]:
    return expand_ids([tok.strip() for tok in raw.split(",") if tok.strip()])


def _parse_dims(raw: str, max_dim: int) -> list[int]:
    dims = [int(tok) for tok in raw.split(",") if tok.strip()]
    if not dims:
        raise ValueError("empty dims")
    for d in dims:
        if not 2 <= d <= max_dim:
            raise ValueError(f"dim {d} outside 2..{max_dim} (raise --max-dim, hard cap 64)")
    return dims


def _tolerances(args) -> Tolerances:
    if not (args.tol > 0 and args.tol_det > 0 and args.strictness > 0):
        raise ValueError("tolerances must be positive")
    return Tolerances(args.tol, args.tol_det, args.strictness)


def _dump_json(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _write(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _summary_lines(summaries) -> str:
    buf = io.StringIO()
    for s in summaries:
        mark = "ok" if s.ok else "UNEXPECTED"
        buf.write(
            f"{s.id:18s} {s.status:20s} trials {s.trials:5d}  failures {s.failures:4d}  "
            f"skipped {s.skipped:3d}  violations {s.violations:4d}  "
            f"worst {s.worst_margin:+.3e}  {mark}\n"
        )
    return buf.getvalue()


def _unexpected(summaries) -> dict:
    theorem_failures, conjecture_violations, missing_refutations = [], [], []
    for s in summaries:
        if s.ok:
            continue
        defn, variant = parse_id(s.id)
        if defn.status == "conjecture" and variant != "valid":
            conjecture_violations.append(s.id)
        elif defn.status == "example_refutation":
            missing_refutations.append(s.id)
        else:
            theorem_failures.append(s.id)
    return {
        "unexpected_theorem_failures": theorem_failures,
        "conjecture_violations": conjecture_violations,
        "missing_refutations": missing_refutations,
    }


def _cmd_verify(args) -> int:
    tols = _tolerances(args)
    if args.replay:
        return _replay(args.replay, tols)
    ids = _parse_ids(args.ids)
    dims = _parse_dims(args.dims, args.max_dim)
    outcomes, summaries = run_suite(ids, args.trials, dims, args.seed, tols)
    unexpected = _unexpected(summaries)
    all_ok = all(s.ok for s in summaries)
    report = {
        "config": {
            "command": "verify",
            "ids": ids,
            "dims": dims,
            "trials": args.trials,
            "seed": args.seed,
            "tol": args.tol,
            "tol_det": args.tol_det,
            "strictness": args.strictness,
            "format": args.format,
        },
        "catalog_version": CATALOG_VERSION,
        "outcomes": [o.as_json() for o in outcomes],
        "summary": {
            "entries": [s.as_json() for s in summaries],
            "all_ok": all_ok,
            **unexpected,
        },
    }
    if args.format == "csv-summary":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["id", "trials", "failures", "worst_margin", "status"])
        for s in summaries:
            writer.writerow([s.id, s.trials, s.failures, repr(s.worst_margin), s.status])
        _write(buf.getvalue(), args.out)
    elif args.out:
        _write(_dump_json(report), args.out)
    sys.stderr.write(_summary_lines(summaries))
    if not all_ok:
        sys.stderr.write(f"unexpected outcomes: {json.dumps(unexpected, sort_keys=True)}\n")
        return 1
    sys.stderr.write("all expected outcomes\n")
    return 0


def _replay(path: str, tols: Tolerances) -> int:
    with open(path, encoding="utf-8") as fh:
        report = json.load(fh)
    cfg = report.get("config", {})
    tols = Tolerances(
        cfg.get("tol", tols.tol),
        cfg.get("tol_det", tols.tol_det),
        cfg.get("strictness", tols.strictness),
    )
    checked = mismatched = 0
    for obj in report.get("outcomes", []):
        if obj["status"] == "skipped":
            continue
        defn, mats, params = outcome_from_json(obj)
        fresh = evaluate(defn, mats, params, tols)
        checked += 1
        if not np.isclose(fresh.min_margin, obj["min_margin"], rtol=0.0, atol=1e-9):
            mismatched += 1
            sys.stderr.write(
                f"replay mismatch {obj['id']} dim {obj['dim']} trial {obj['trial']}: "
                f"{fresh.min_margin!r} vs recorded {obj['min_margin']!r}\n"
            )
    sys.stderr.write(f"replayed {checked} outcomes, {mismatched} mismatches\n")
    return 0 if mismatched == 0 else 1


def _cmd_search(args) -> int:
    tols = _tolerances(args)
    ids = _parse_ids(args.ids)
    dims = _parse_dims(args.dims, args.max_dim)
    reports = []
    newsworthy = []
    for target in ids:
        rep = run_search(target, args.budget, dims, args.seed, args.hill_steps, tols)
        reports.append(rep)
        defn = lookup(target)
        expected_violation = defn.status == "example_refutation"
        sys.stderr.write(
            f"{target:18s} best margin {rep.best_margin:+.3e}  "
            f"violation {'FOUND' if rep.violation_found else 'none'} "
            f"({rep.trials_used} evaluations)\n"
        )
        if rep.violation_found and not expected_violation and defn.refuted_by is None:
            newsworthy.append(target)
        if not rep.violation_found and expected_violation:
            newsworthy.append(target)
    out = {
        "config": {
            "command": "search",
            "ids": ids,
            "dims": dims,
            "budget": args.budget,
            "hill_steps": args.hill_steps,
            "seed": args.seed,
            "tol": args.tol,
            "tol_det": args.tol_det,
            "strictness": args.strictness,
        },
        "catalog_version": CATALOG_VERSION,
        "searches": [r.as_json() for r in reports],
    }
    if args.out:
        _write(_dump_json(out), args.out)
    if newsworthy:
        sys.stderr.write(f"newsworthy outcomes for: {', '.join(newsworthy)}\n")
        return 1
    return 0


def _cmd_reproduce(args) -> int:
    tols = _tolerances(args)
    defn = lookup(args.id)
    dims = _parse_dims(args.dims, args.max_dim)
    rep = run_search(args.id, args.budget, dims, args.seed, args.hill_steps, tols)
    out = {
        "config": {
            "command": "reproduce",
            "ids": [args.id],
            "dims": dims,
            "budget": args.budget,
            "hill_steps": args.hill_steps,
            "seed": args.seed,
            "tol": args.tol,
            "tol_det": args.tol_det,
            "strictness": args.strictness,
        },
        "catalog_version": CATALOG_VERSION,
        "searches": [rep.as_json()],
    }
    if args.out:
        _write(_dump_json(out), args.out)
    if not rep.violation_found:
        sys.stderr.write(f"no strict violation of {args.id} found in {args.budget} restarts\n")
        return 1
    inst = rep.best_instance
    fresh = evaluate(lookup(inst["id"]), [np.array(_mat(m)) for m in inst["inputs"]], inst["params"], tols)
    print(f"violating instance of {args.id} (margin {rep.best_margin:+.6e}):")
    print(json.dumps(inst, sort_keys=True, indent=2))
    for check in fresh.checks:
        margins = ", ".join(f"{v:+.6e}" for v in np.atleast_1d(check.margins))
        print(f"  {check.name}: per-k margins [{margins}]")
    return 0


def _mat(mj: dict):
    from .linalg import matrix_from_json

    return matrix_from_json(mj)


def _cmd_registry_dump(args) -> int:
    _write(_dump_json(_catalog_json()), args.out)
    return 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=7, help="RNG seed (default 7)")
    p.add_argument("--tol", type=float, default=1e-9, help="log-margin tolerance (default 1e-9)")
    p.add_argument("--tol-det", type=float, default=1e-8, dest="tol_det",
                   help="determinant-leg tolerance (default 1e-8)")
    p.add_argument("--strictness", type=float, default=1e-6,
                   help="violation threshold on margins (default 1e-6)")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--max-dim", type=int, default=8, choices=range(2, 65), metavar="N",
                   help="largest permitted dimension (default 8, hard cap 64)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logmaj",
        description="Check log-majorization and norm inequalities on random "
        "positive semi-definite matrices, and hunt for counterexamples to "
        "the open conjectures in the catalog.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the sampled checking suite")
    p.add_argument("--ids", default="all", help="comma list of ids or groups: "
                   "all, all-theorems, all-refutations, all-conjectures; "
                   "append :valid for an entry's restricted proved domain")
    p.add_argument("--dims", default="2,3,4,5", help="comma list of dimensions (default 2,3,4,5)")
    p.add_argument("--trials", type=int, default=200, help="trials per (id, dim) (default 200)")
    p.add_argument("--format", choices=["json", "csv-summary"], default="json")
    p.add_argument("--replay", help="re-evaluate outcomes from an existing report")
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="counterexample search on conjectures")
    p.add_argument("--ids", default="all-conjectures")
    p.add_argument("--dims", default="2,3")
    p.add_argument("--budget", type=int, default=1000, help="random restarts (default 1000)")
    p.add_argument("--hill-steps", type=int, default=10, dest="hill_steps",
                   help="hill-climb steps per restart (default 10)")
    _add_common(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("reproduce", help="find and print a violating instance")
    p.add_argument("id", help="refutation or conjecture id, e.g. EX-2.1")
    p.add_argument("--dims", default="2,3")
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--hill-steps", type=int, default=10, dest="hill_steps")
    _add_common(p)
    p.set_defaults(func=_cmd_reproduce)

    p = sub.add_parser("registry-dump", help="emit the catalog as JSON")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_registry_dump)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (LogmajError, ValueError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
