"""Command-line interface: compute, sequence, verify, bench, oeis.

Exit codes are a stable contract: 0 for success/agreement, 1 for
mismatches, verification failures, or runtime failures (certification,
network), 2 for usage errors.  Output formats: ``plain`` for humans,
``csv`` (header row) and ``json-lines`` (one self-contained object per
line) for scripting.  Coefficient values are always emitted as decimal
strings; they outgrow 64-bit integers almost immediately.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import statistics
import sys
import time
from typing import Callable

from . import _backend, circulant, exact, oeis, spectral
from .params import Params
from .spectral import CertificationError, PrecisionPolicy

METHODS = ("conv", "trace", "spectral")

#: Relative/absolute tolerance for eigenvalue agreement checks.
EIGEN_TOL = 1e-12


def _policy_from(args: argparse.Namespace) -> PrecisionPolicy:
    return PrecisionPolicy(
        strategy=args.precision, mantissa_bits=args.mantissa_bits
    )


def _emit(records: list[dict], plain_lines: list[str], fmt: str) -> None:
    if fmt == "plain":
        for line in plain_lines:
            print(line)
    elif fmt == "json-lines":
        for record in records:
            print(json.dumps(record, sort_keys=False))
    elif fmt == "csv":
        fieldnames: list[str] = []
        for record in records:
            for key in record:
                if key not in fieldnames:
                    fieldnames.append(key)
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=fieldnames, restval="")
        writer.writeheader()
        writer.writerows(records)
        sys.stdout.write(buffer.getvalue())
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown format {fmt!r}")


def _coefficient(method: str, params: Params, l: int, policy: PrecisionPolicy) -> dict:
    """One coefficient by one method, as an output record."""
    central = l == params.k * params.n
    record = {
        "type": "value",
        "method": method,
        "k": params.k,
        "n": params.n,
        "l": l,
    }
    if method == "conv":
        record["value"] = str(exact.expand_power(params).coeffs[l])
    elif method == "trace":
        value = (
            circulant.central_via_trace(params)
            if central
            else circulant.coefficient_via_shift(params, l)
        )
        record["value"] = str(value)
    elif method == "spectral":
        certified = (
            spectral.central_via_spectrum(params, policy)
            if central
            else spectral.coefficient_via_spectrum(params, l, policy)
        )
        record["value"] = str(certified.value)
        record["residual"] = certified.residual
        record["strategy"] = certified.policy_used.strategy
        record["escalations"] = certified.escalations
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown method {method!r}")
    return record


def cmd_compute(args: argparse.Namespace) -> int:
    params = Params(args.k, args.n)
    l = args.l if args.l is not None else params.k * params.n
    if not 0 <= l <= params.degree:
        raise ValueError(f"l must be in [0, {params.degree}], got {l}")
    policy = _policy_from(args)
    methods = list(METHODS) if args.method == "all" else [args.method]
    records = [_coefficient(method, params, l, policy) for method in methods]
    plain = [f"{r['method']} {r['value']}" for r in records]
    status = 0
    if args.method == "all":
        agree = len({r["value"] for r in records}) == 1
        records.append(
            {"type": "verdict", "k": params.k, "n": params.n, "l": l, "agree": agree}
        )
        plain.append("AGREE" if agree else "DISAGREE")
        status = 0 if agree else 1
    else:
        plain = [records[0]["value"]]
    _emit(records, plain, args.format)
    return status


def cmd_sequence(args: argparse.Namespace) -> int:
    if args.count < 1:
        raise ValueError(f"count must be >= 1, got {args.count}")
    if args.start_n < 0:
        raise ValueError(f"start-n must be >= 0, got {args.start_n}")
    policy = _policy_from(args)
    records = []
    for n in range(args.start_n, args.start_n + args.count):
        params = Params(args.k, n)
        if args.method == "conv":
            value = exact.central_coefficient(params)
        elif args.method == "trace":
            value = circulant.central_via_trace(params)
        else:
            value = spectral.central_via_spectrum(params, policy).value
        records.append(
            {
                "type": "term",
                "k": args.k,
                "n": n,
                "method": args.method,
                "value": str(value),
            }
        )
    _emit(records, [" ".join(r["value"] for r in records)], args.format)
    return 0


def _close(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=EIGEN_TOL, abs_tol=EIGEN_TOL)


def _verify_case(params: Params, policy: PrecisionPolicy, ls: list[int]) -> list[str]:
    """Names of failed checks for one (k, n) grid case."""
    failed = []
    table = exact.expand_power(params)
    row = table.coeffs
    central = row[params.k * params.n]

    if not (central == circulant.central_via_trace(params)
            == spectral.central_via_spectrum(params, policy).value):
        failed.append("methods-equal")
    if any(row[l] != row[params.degree - l] for l in range(params.degree + 1)):
        failed.append("row-symmetry")
    if sum(row) != params.width**params.n:
        failed.append("row-sum")
    if row[0] != 1 or (params.n >= 1 and row[1] != params.n):
        failed.append("edge-coefficients")
    power = circulant.matrix_power(circulant.build_central(params), params.n)
    if circulant.trace(power) % params.dim != 0:
        failed.append("trace-divisibility")

    values = {
        method: spectral.eigenvalues(params, method).values
        for method in spectral.EIGENVALUE_METHODS
    }
    reference = values["trig-ratio"]
    dim = params.dim
    if not all(
        _close(reference[r - 1], reference[(dim + 2 - r) - 1])
        for r in range(2, dim + 1)
    ):
        failed.append("eigen-degeneracy")
    dirichlet = [
        spectral.dirichlet_kernel(params.k, 2.0 * math.pi * r / dim)
        for r in range(dim)
    ]
    if not all(
        _close(values[method][i], reference[i]) and _close(dirichlet[i], reference[i])
        for method in spectral.EIGENVALUE_METHODS
        for i in range(dim)
    ):
        failed.append("eigen-method-agreement")

    for l in ls:
        if not (
            row[l]
            == circulant.coefficient_via_shift(params, l)
            == spectral.coefficient_via_spectrum(params, l, policy).value
        ):
            failed.append(f"coefficient-l{l}")
    return failed


def cmd_verify(args: argparse.Namespace) -> int:
    if args.k_max < 1 or args.n_max < 1:
        raise ValueError("k-max and n-max must be >= 1")
    policy = _policy_from(args)
    rng = random.Random(args.seed) if args.seed is not None else None
    records = []
    failures = 0
    for k in range(1, args.k_max + 1):
        for n in range(1, args.n_max + 1):
            params = Params(k, n)
            ls: list[int] = []
            if rng is not None:
                ls = sorted(
                    rng.sample(range(params.degree + 1), min(3, params.degree + 1))
                )
            failed = _verify_case(params, policy, ls)
            if failed:
                failures += 1
                print(f"FAIL k={k} n={n}: {', '.join(failed)}", file=sys.stderr)
            records.append(
                {
                    "type": "case",
                    "k": k,
                    "n": n,
                    "ok": not failed,
                    "failed": ";".join(failed),
                }
            )
    cases = args.k_max * args.n_max
    records.append({"type": "summary", "cases": cases, "failures": failures})
    case_word = "case" if cases == 1 else "cases"
    failure_word = "failure" if failures == 1 else "failures"
    _emit(
        records,
        [f"{cases} {case_word}, {failures} {failure_word}"],
        args.format,
    )
    return 0 if failures == 0 else 1


def _bench_target(method: str, params: Params, policy: PrecisionPolicy) -> Callable[[], object]:
    if method == "conv":
        return lambda: exact.central_coefficient(params)
    if method == "trace":
        return lambda: circulant.central_via_trace(params)
    return lambda: spectral.central_via_spectrum(params, policy).value


def cmd_bench(args: argparse.Namespace) -> int:
    if args.repetitions < 1:
        raise ValueError(f"repetitions must be >= 1, got {args.repetitions}")
    methods = list(METHODS) if args.method == ["all"] else args.method
    available = _backend.available()
    if args.backend == "auto":
        backends = [_backend.active_name()]
    elif args.backend == "both":
        backends = list(available)
        if len(backends) < 2:
            print("note: compiled backend unavailable, timing python only",
                  file=sys.stderr)
    else:
        if args.backend not in available:
            raise ValueError(
                f"backend {args.backend!r} unavailable (have: {', '.join(available)})"
            )
        backends = [args.backend]
    policy = _policy_from(args)

    records = []
    for backend in backends:
        with _backend.select(backend):
            for n in args.n:
                params = Params(args.k, n)
                for method in methods:
                    target = _bench_target(method, params, policy)
                    timings = []
                    for _ in range(args.repetitions):
                        start = time.perf_counter()
                        target()
                        timings.append(time.perf_counter() - start)
                    records.append(
                        {
                            "type": "timing",
                            "backend": backend,
                            "method": method,
                            "k": args.k,
                            "n": n,
                            "repetitions": args.repetitions,
                            "min_s": round(min(timings), 9),
                            "median_s": round(statistics.median(timings), 9),
                        }
                    )
    header = f"{'backend':<10} {'method':<10} {'k':>3} {'n':>8} {'reps':>5} {'min_s':>12} {'median_s':>12}"
    plain = [header] + [
        f"{r['backend']:<10} {r['method']:<10} {r['k']:>3} {r['n']:>8} "
        f"{r['repetitions']:>5} {r['min_s']:>12.6f} {r['median_s']:>12.6f}"
        for r in records
    ]
    _emit(records, plain, args.format)
    return 0


def cmd_oeis(args: argparse.Namespace) -> int:
    oeis_id, k = args.id, args.k
    if oeis_id is None and k is None:
        raise ValueError("pass --id, --k, or both")
    if oeis_id is not None:
        oeis.validate_id(oeis_id)
    if oeis_id is None:
        oeis_id = oeis.OEIS_BY_K.get(k)
        if oeis_id is None:
            raise ValueError(f"no registered OEIS id for k={k}; pass --id")
    if k is None:
        k = oeis.K_BY_OEIS.get(oeis_id)
        if k is None:
            raise ValueError(f"{oeis_id} is not registered; pass --k")

    if args.offline and oeis.fixture_for_id(oeis_id) is not None:
        record = oeis.fixture_for_id(oeis_id)
    else:
        record = oeis.fetch_bfile(oeis_id, args.count, offline=args.offline)
    report = oeis.compare(record, k, args.count)

    records = [
        {
            "type": "comparison",
            "oeis_id": report.oeis_id,
            "k": report.k,
            "n": report.start_n + i,
            "expected": str(report.expected[i]),
            "computed": str(report.computed[i]),
            "equal": report.matches[i],
        }
        for i in range(report.count)
    ]
    source = record.provenance + (", cache hit" if record.cache_hit else "")
    records.append(
        {
            "type": "summary",
            "oeis_id": report.oeis_id,
            "k": report.k,
            "count": report.count,
            "source": source,
            "all_equal": report.all_equal,
            "first_mismatch": "" if report.first_mismatch is None else report.first_mismatch,
        }
    )
    if report.all_equal:
        plain = [
            f"{report.oeis_id} k={report.k}: {report.count} terms compared, "
            f"all equal ({source})"
        ]
    else:
        n = report.first_mismatch
        i = n - report.start_n
        plain = [
            f"{report.oeis_id} k={report.k}: mismatch at n={n}: sequence has "
            f"{report.expected[i]}, computed {report.computed[i]} ({source})"
        ]
    _emit(records, plain, args.format)
    return 0 if report.all_equal else 1


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def _method_list(text: str) -> list[str]:
    values = [part for part in text.split(",") if part]
    if values == ["all"]:
        return ["all"]
    for value in values:
        if value not in METHODS:
            raise argparse.ArgumentTypeError(
                f"method must be one of {', '.join(METHODS + ('all',))}; got {value!r}"
            )
    return values or ["all"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("plain", "csv", "json-lines"),
        default="plain",
        help="output format (default: plain)",
    )
    common.add_argument(
        "--precision",
        choices=("double", "compensated", "arbitrary"),
        default="double",
        help="starting summation strategy for spectral evaluation",
    )
    common.add_argument(
        "--mantissa-bits",
        type=int,
        default=None,
        help="explicit bit budget for the arbitrary strategy (default: computed)",
    )
    common.add_argument(
        "--offline",
        action="store_true",
        help="never touch the network; use fixtures or the cache",
    )

    parser = argparse.ArgumentParser(
        prog="cnomial",
        description=(
            "Central (2k+1)-nomial coefficients by polynomial convolution, "
            "circulant trace, and trigonometric spectral sum."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "compute", parents=[common], help="one coefficient by one or all methods"
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, default=None, help="coefficient index (default: kn, the central one)")
    p.add_argument("--method", choices=METHODS + ("all",), default="conv")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser(
        "sequence", parents=[common], help="emit M^(2k,n) for a range of n"
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--start-n", type=int, default=0)
    p.add_argument("--method", choices=METHODS, default="conv")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser(
        "verify", parents=[common], help="cross-method and invariant checks on a grid"
    )
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument(
        "--seed",
        type=int,
        default=None,
        help="also check 3 random general coefficients per case, reproducibly",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "bench", parents=[common], help="wall-time table for the three methods"
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=_int_list, required=True, help="comma-separated list of n values")
    p.add_argument("--method", type=_method_list, default=["all"], help="comma-separated methods or 'all'")
    p.add_argument("--repetitions", type=int, default=3)
    p.add_argument(
        "--backend",
        choices=("auto", "compiled", "python", "both"),
        default="auto",
        help="which kernel backend(s) to time",
    )
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser(
        "oeis", parents=[common], help="compare computed terms against an OEIS sequence"
    )
    p.add_argument("--id", default=None, help="OEIS identifier, e.g. A002426")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--count", type=int, default=15)
    p.set_defaults(func=cmd_oeis)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CertificationError as error:
        print(f"certification failed: {error} (residual {error.residual})",
              file=sys.stderr)
        return 1
    except oeis.FetchError as error:
        print(f"error: {error}", file=sys.stderr)
        return 1
    except (oeis.SequenceIdError, oeis.BFileParseError, ValueError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
