"""Command line front end.

Four subcommands: check (criterion only), oracle (exhaustive vertex
enumeration), extremal (closed-form maximum, optional numerical
confirmation), measure (random-direction statistics, optional CSV).
Every run prints a single-line JSON record with the keys command,
params, results, elapsed_ms, version, seed. Exit codes: 0 success,
1 computation failed, 2 bad arguments, 3 degenerate or out-of-domain
input, 4 dimension over the enumeration cap, 5 file I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from . import __version__
from .errors import (
    DegenerateSample,
    DimensionTooLarge,
    InvalidDimension,
    NonConvergence,
)
from .extremal import (
    closed_form_max,
    maximizer,
    numerical_max,
    summarize,
    threshold_dimension,
)
from .geometry import UnitVector, criterion
from .measure import estimate
from .oracle import DEFAULT_LIMIT, enumerate_shadows

ENV_ORACLE_LIMIT = "SHADOWS_ORACLE_LIMIT"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_TOO_LARGE = 4
EXIT_IO = 5

CSV_HEADER = [
    "n",
    "samples",
    "seed",
    "frac_satisfying",
    "mean",
    "median",
    "q05",
    "q95",
    "growth_ratio",
]


class _CliFailure(Exception):
    """Internal: carries an exit code and a message for stderr."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


@dataclass(frozen=True)
class RunRecord:
    """What a CLI invocation reports, in a stable key order."""

    command: str
    params: dict
    results: Any
    elapsed_ms: float
    version: str
    seed: Optional[int]

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "params": self.params,
            "results": self.results,
            "elapsed_ms": self.elapsed_ms,
            "version": self.version,
            "seed": self.seed,
        }
        return json.dumps(payload, separators=(",", ":"))


def _parse_floats(text: str) -> np.ndarray:
    parts = [p for p in text.replace(",", " ").split() if p]
    if not parts:
        raise _CliFailure(EXIT_USAGE, "empty vector")
    try:
        return np.array([float(p) for p in parts], dtype=np.float64)
    except ValueError:
        raise _CliFailure(EXIT_USAGE, f"could not parse vector {text!r}")


def _read_vec_file(path: str) -> np.ndarray:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as exc:
        raise _CliFailure(EXIT_IO, f"cannot read {path}: {exc}")
    return _parse_floats(text)


def _resolve_direction(args) -> tuple[UnitVector, dict]:
    if args.maximizer is not None:
        u = maximizer(args.maximizer)
        return u, {"maximizer_n": args.maximizer, "input_l2": 1.0}
    raw = (
        _parse_floats(args.vec)
        if args.vec is not None
        else _read_vec_file(args.vec_file)
    )
    input_l2 = float(np.linalg.norm(raw))
    try:
        u = UnitVector(raw)
    except ValueError as exc:
        raise _CliFailure(EXIT_DEGENERATE, str(exc))
    return u, {"n": int(raw.size), "input_l2": input_l2}


def _resolve_limit(args) -> int:
    if args.limit is not None:
        return args.limit
    env = os.environ.get(ENV_ORACLE_LIMIT)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _CliFailure(
                EXIT_USAGE, f"{ENV_ORACLE_LIMIT}={env!r} is not an integer"
            )
    return DEFAULT_LIMIT


def _add_direction_args(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--vec", help="comma or space separated coordinates")
    group.add_argument("--vec-file", help="file of coordinates")
    group.add_argument(
        "--maximizer",
        type=int,
        metavar="N",
        help="use the built-in extremal direction in dimension N",
    )


def _cmd_check(args) -> RunRecord:
    u, params = _resolve_direction(args)
    params["margin"] = args.margin
    res = criterion(u, criterion_tol=-args.margin)
    results = {
        "n": u.n,
        "product": res.product,
        "satisfied": res.satisfied,
        "witness": [int(s) for s in res.witness.signs],
        "degenerate_zero_coords": res.degenerate_zero_coords,
    }
    return RunRecord("check", params, results, 0.0, __version__, None)


def _cmd_oracle(args) -> RunRecord:
    u, params = _resolve_direction(args)
    limit = _resolve_limit(args)
    params["limit"] = limit
    verdict = enumerate_shadows(u, n_limit=limit)
    crit = criterion(u)
    results = {
        "n": u.n,
        "exists_inside": verdict.exists_inside,
        "best_vertex": [int(s) for s in verdict.best_vertex.signs],
        "best_inf_norm": verdict.best_inf_norm,
        "vertices_checked": verdict.vertices_checked,
        "orthogonal_vertex_found": verdict.orthogonal_vertex_found,
        "min_abs_inner_product": verdict.min_abs_inner_product,
        "criterion_product": crit.product,
        "criterion_satisfied": crit.satisfied,
        "agree": crit.satisfied == verdict.exists_inside,
    }
    return RunRecord("oracle", params, results, 0.0, __version__, None)


def _parse_scan(text: str) -> tuple[int, int]:
    try:
        lo_s, hi_s = text.split("..")
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise _CliFailure(EXIT_USAGE, f"bad scan range {text!r}, want A..B")
    if lo < 1 or hi < lo:
        raise _CliFailure(EXIT_USAGE, f"bad scan range {text!r}")
    return lo, hi


def _cmd_extremal(args) -> RunRecord:
    if args.scan is not None:
        lo, hi = _parse_scan(args.scan)
        rows = [
            {
                "n": n,
                "max_value": closed_form_max(n),
                "threshold_ok": closed_form_max(n) <= 2.0,
            }
            for n in range(lo, hi + 1)
        ]
        results = {"scan": rows, "threshold_dimension": threshold_dimension()}
        return RunRecord(
            "extremal", {"scan": args.scan}, results, 0.0, __version__, None
        )

    n = args.n
    summary = summarize(n)
    results = {
        "n": n,
        "max_value": summary.max_value,
        "maximizer": [float(c) for c in summary.maximizer.coords],
        "achieved_value": summary.achieved_value,
        "threshold_ok": summary.threshold_ok,
    }
    seed = None
    if args.verify:
        seed = args.seed
        ascent = numerical_max(n, restarts=args.restarts, seed=args.seed)
        results["numerical"] = {
            "value": ascent.value,
            "grad_norm": ascent.grad_norm,
            "iterations": ascent.iterations,
            "restarts_converged": ascent.restarts_converged,
            "gap": summary.max_value - ascent.value,
        }
    params = {"n": n, "verify": args.verify}
    if args.verify:
        params["restarts"] = args.restarts
    return RunRecord("extremal", params, results, 0.0, __version__, seed)


def _parse_dims(text: str) -> list[int]:
    try:
        dims = [int(p) for p in text.replace(",", " ").split() if p]
    except ValueError:
        raise _CliFailure(EXIT_USAGE, f"could not parse dims {text!r}")
    if not dims:
        raise _CliFailure(EXIT_USAGE, "empty dims list")
    return dims


def _measure_row(est) -> dict:
    return {
        "n": est.n,
        "samples": est.samples,
        "seed": est.seed,
        "frac_satisfying": est.frac_satisfying,
        "mean": est.mean_product,
        "median": est.median_product,
        "q05": est.q05,
        "q95": est.q95,
        "growth_ratio": est.growth_ratio,
    }


def _write_csv(path: str, rows: list[dict]) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for row in rows:
                writer.writerow(
                    ["" if row[k] is None else row[k] for k in CSV_HEADER]
                )
    except OSError as exc:
        raise _CliFailure(EXIT_IO, f"cannot write {path}: {exc}")


def _cmd_measure(args) -> RunRecord:
    dims = _parse_dims(args.dims)
    rows = [_measure_row(estimate(n, args.samples, args.seed)) for n in dims]
    if args.out is not None:
        _write_csv(args.out, rows)
    params = {"dims": dims, "samples": args.samples}
    if args.out is not None:
        params["out"] = args.out
    return RunRecord("measure", params, rows, 0.0, __version__, args.seed)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubeshadows",
        description=(
            "decide whether any cube vertex lands inside the central "
            "hyperplane section orthogonal to a direction"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser(
        "check", help="evaluate the norm-product criterion for a direction"
    )
    _add_direction_args(p_check)
    p_check.add_argument(
        "--margin",
        type=float,
        default=0.0,
        help="require the product to clear the threshold by this much",
    )
    p_check.set_defaults(handler=_cmd_check)

    p_oracle = sub.add_parser(
        "oracle", help="enumerate all 2^n vertices and report the best shadow"
    )
    _add_direction_args(p_oracle)
    p_oracle.add_argument(
        "--limit",
        type=int,
        default=None,
        help=f"dimension cap (default {DEFAULT_LIMIT}, env {ENV_ORACLE_LIMIT})",
    )
    p_oracle.set_defaults(handler=_cmd_oracle)

    p_ext = sub.add_parser(
        "extremal", help="closed-form sphere maximum of the norm product"
    )
    group = p_ext.add_mutually_exclusive_group(required=True)
    group.add_argument("-n", type=int, help="single dimension to summarize")
    group.add_argument("--scan", help="inclusive dimension range A..B")
    p_ext.add_argument(
        "--verify",
        action="store_true",
        help="confirm the closed form by gradient ascent",
    )
    p_ext.add_argument("--restarts", type=int, default=8)
    p_ext.add_argument("--seed", type=int, default=0)
    p_ext.set_defaults(handler=_cmd_extremal)

    p_measure = sub.add_parser(
        "measure", help="criterion statistics over random directions"
    )
    p_measure.add_argument(
        "--dims", required=True, help="comma separated dimensions"
    )
    p_measure.add_argument("--samples", type=int, default=10_000)
    p_measure.add_argument("--seed", type=int, default=0)
    p_measure.add_argument("--out", help="also write the rows to a CSV file")
    p_measure.set_defaults(handler=_cmd_measure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    t0 = time.perf_counter()
    try:
        record = args.handler(args)
    except _CliFailure as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.code
    except DimensionTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (InvalidDimension, DegenerateSample) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except NonConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE

    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    record = RunRecord(
        record.command,
        record.params,
        record.results,
        elapsed_ms,
        record.version,
        record.seed,
    )
    print(record.to_json())
    return EXIT_OK


def entry() -> None:
    sys.exit(main())
