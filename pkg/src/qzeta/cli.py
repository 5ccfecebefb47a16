"""Command-line front end: verify identities, dump coefficients, trace limits.

Output goes to stdout (or --output) in text, JSON or CSV form; diagnostics
go to stderr. Big integers are serialized as decimal strings so arbitrary
precision survives any consumer, and high-precision reals are decimal
strings annotated with their mantissa size. Exit codes: 0 all requested
checks passed, 1 verification or convergence failure, 2 usage error,
3 output I/O error.
"""

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .genfuncs import SERIES
from .limits import (
    DEFAULT_PRECISION_BITS,
    DEFAULT_REL_TOL,
    LimitTrace,
    dyadic_schedule,
    eval_psi2_limit,
    eval_psi12_limit,
    eval_s6_minus_phi12_limit,
)
from .verify import IDENTITY_RUNNERS, IdentityId, VerificationReport, run_identity

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

PRECISION_ENV_VAR = "QZETA_PRECISION_BITS"

LIMIT_TARGETS = ("psi2", "psi12", "zeta6-sum")

# Identities whose size knob is an index bound rather than a series order.
_INDEXED_IDENTITIES = {IdentityId.T12_SIGMA5, IdentityId.BINOMIAL_COLLAPSE}


@dataclass
class RunConfig:
    command: str
    identity: Optional[IdentityId] = None
    series: Optional[str] = None
    order: Optional[int] = None
    n_max: Optional[int] = None
    k_min: int = 4
    k_max: int = 12
    precision_bits: int = DEFAULT_PRECISION_BITS
    rel_tol: float = DEFAULT_REL_TOL
    output_format: str = "text"
    output_path: Optional[str] = None


def report_to_dict(report: VerificationReport) -> dict:
    mismatch = report.first_mismatch
    return {
        "identity": str(report.identity),
        "order": report.order,
        "status": report.status,
        "first_mismatch": None
        if mismatch is None
        else {
            "exponent": mismatch.exponent,
            "lhs": str(mismatch.lhs),
            "rhs": str(mismatch.rhs),
        },
        "elapsed_ms": int(round(report.elapsed * 1000)),
    }


def trace_to_dict(trace: LimitTrace) -> dict:
    return {
        "target_name": trace.target_name,
        "target": str(trace.target),
        "precision_bits": trace.precision_bits,
        "entries": [
            {"q": str(e.q), "value": str(e.value), "rel_error": str(e.rel_error)}
            for e in trace.entries
        ],
        "converged": trace.converged,
    }


def _report_text(report: VerificationReport) -> str:
    base = f"{report.identity}  order={report.order}  {report.status}"
    if report.first_mismatch is not None:
        m = report.first_mismatch
        base += f"  at q^{m.exponent}: lhs={m.lhs} rhs={m.rhs}"
    return base + f"  ({int(round(report.elapsed * 1000))} ms)"


def _trace_text(trace: LimitTrace) -> str:
    lines = [
        f"target {trace.target_name} = {trace.target}"
        f"  [{trace.precision_bits}-bit]"
    ]
    for e in trace.entries:
        lines.append(f"  q={e.q}  value={e.value}  rel_error={e.rel_error}")
    lines.append(f"  converged: {str(trace.converged).lower()}")
    return "\n".join(lines)


def _reports_csv(reports) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["identity", "order", "status", "mismatch_exponent", "lhs", "rhs", "elapsed_ms"]
    )
    for r in reports:
        m = r.first_mismatch
        writer.writerow(
            [
                str(r.identity),
                r.order,
                r.status,
                "" if m is None else m.exponent,
                "" if m is None else str(m.lhs),
                "" if m is None else str(m.rhs),
                int(round(r.elapsed * 1000)),
            ]
        )
    return out.getvalue()


def _traces_csv(traces) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["target_name", "q", "value", "rel_error", "converged"])
    for t in traces:
        for e in t.entries:
            writer.writerow(
                [t.target_name, str(e.q), str(e.value), str(e.rel_error),
                 str(t.converged).lower()]
            )
    return out.getvalue()


def to_json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _run_verify(config: RunConfig):
    size = config.n_max if config.identity in _INDEXED_IDENTITIES else config.order
    report = run_identity(config.identity, size)
    if config.output_format == "json":
        rendered = to_json(report_to_dict(report))
    elif config.output_format == "csv":
        rendered = _reports_csv([report])
    else:
        rendered = _report_text(report) + "\n"
    return (EXIT_OK if report.verified else EXIT_FAILED), rendered


def _run_coeffs(config: RunConfig):
    order = 200 if config.order is None else config.order
    series = SERIES[config.series](order)
    if config.output_format == "json":
        doc = {
            "series": config.series,
            "order": order,
            "coefficients": [str(c) for c in series.coeffs],
        }
        rendered = to_json(doc)
    elif config.output_format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "coefficient"])
        for n, c in enumerate(series.coeffs):
            writer.writerow([n, str(c)])
        rendered = out.getvalue()
    else:
        rendered = "".join(f"{n} {c}\n" for n, c in enumerate(series.coeffs))
    return EXIT_OK, rendered


def _evaluate_limit(config: RunConfig):
    schedule = dyadic_schedule(config.k_min, config.k_max)
    target = config.series  # for the limit command this slot holds the target name
    if target == "psi2":
        traces = [eval_psi2_limit(schedule, config.precision_bits, config.rel_tol)]
    elif target == "psi12":
        traces = [eval_psi12_limit(schedule, config.precision_bits, config.rel_tol)]
    else:
        main, decay = eval_s6_minus_phi12_limit(
            schedule, config.precision_bits, config.rel_tol
        )
        traces = [main, decay]
    return traces


def _run_limit(config: RunConfig):
    traces = _evaluate_limit(config)
    ok = all(t.converged for t in traces)
    if config.output_format == "json":
        rendered = to_json([trace_to_dict(t) for t in traces])
    elif config.output_format == "csv":
        rendered = _traces_csv(traces)
    else:
        rendered = "\n".join(_trace_text(t) for t in traces) + "\n"
    return (EXIT_OK if ok else EXIT_FAILED), rendered


def _run_report_all(config: RunConfig):
    reports = [run_identity(identity) for identity in IDENTITY_RUNNERS]
    schedule = dyadic_schedule(config.k_min, config.k_max)
    traces = [
        eval_psi2_limit(schedule, config.precision_bits, config.rel_tol),
        eval_psi12_limit(schedule, config.precision_bits, config.rel_tol),
    ]
    main, decay = eval_s6_minus_phi12_limit(
        schedule, config.precision_bits, config.rel_tol
    )
    traces.extend([main, decay])
    all_passed = all(r.verified for r in reports) and all(t.converged for t in traces)
    if config.output_format == "json":
        doc = {
            "reports": [report_to_dict(r) for r in reports],
            "limit_traces": [trace_to_dict(t) for t in traces],
            "all_passed": all_passed,
        }
        rendered = to_json(doc)
    elif config.output_format == "csv":
        rendered = _reports_csv(reports) + "\n" + _traces_csv(traces)
    else:
        lines = [_report_text(r) for r in reports]
        lines.extend(_trace_text(t) for t in traces)
        lines.append(f"all passed: {str(all_passed).lower()}")
        rendered = "\n".join(lines) + "\n"
    return (EXIT_OK if all_passed else EXIT_FAILED), rendered


def run(config: RunConfig):
    """Execute one command; returns (exit_code, rendered_output)."""
    if config.command == "verify":
        return _run_verify(config)
    if config.command == "coeffs":
        return _run_coeffs(config)
    if config.command == "limit":
        return _run_limit(config)
    if config.command == "report-all":
        return _run_report_all(config)
    raise ValueError(f"unknown command {config.command!r}")


def _add_output_flags(parser):
    parser.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        dest="output_format",
        help="output format (default: text)",
    )
    parser.add_argument(
        "--output",
        default=None,
        dest="output_path",
        help="write the report to this path instead of stdout",
    )


def _add_precision_flags(parser):
    parser.add_argument(
        "--precision-bits",
        type=int,
        default=None,
        help=f"working precision in bits (default: ${PRECISION_ENV_VAR} or "
        f"{DEFAULT_PRECISION_BITS})",
    )
    parser.add_argument(
        "--k-min", type=int, default=4, help="schedule starts at q = 1 - 2^-k_min"
    )
    parser.add_argument(
        "--k-max", type=int, default=12, help="schedule ends at q = 1 - 2^-k_max"
    )
    parser.add_argument(
        "--rel-tol",
        type=float,
        default=DEFAULT_REL_TOL,
        help="relative error required at the last schedule point",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qzeta",
        description="Exact q-series identity verification and q->1 limit evaluation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="verify one identity coefficientwise")
    p_verify.add_argument(
        "--identity",
        required=True,
        choices=[str(i) for i in IdentityId],
        help="identity to check",
    )
    p_verify.add_argument(
        "--order",
        type=int,
        default=None,
        help="truncation order for series identities (default: per identity)",
    )
    p_verify.add_argument(
        "--n-max",
        type=int,
        default=None,
        help="index bound for t12-sigma5 / binomial-collapse",
    )
    _add_output_flags(p_verify)

    p_coeffs = sub.add_parser("coeffs", help="print coefficients of a named series")
    p_coeffs.add_argument(
        "--series", required=True, choices=sorted(SERIES), help="series name"
    )
    p_coeffs.add_argument("--order", type=int, default=200, help="truncation order")
    _add_output_flags(p_coeffs)

    p_limit = sub.add_parser("limit", help="evaluate a q->1 limit trace")
    p_limit.add_argument(
        "--target", required=True, choices=LIMIT_TARGETS, help="limit to trace"
    )
    _add_precision_flags(p_limit)
    _add_output_flags(p_limit)

    p_all = sub.add_parser(
        "report-all", help="run every verifier and all limit traces"
    )
    _add_precision_flags(p_all)
    _add_output_flags(p_all)

    return parser


def _resolve_precision(parser, args) -> int:
    bits = getattr(args, "precision_bits", None)
    if bits is None:
        raw = os.environ.get(PRECISION_ENV_VAR)
        if raw is None:
            bits = DEFAULT_PRECISION_BITS
        else:
            try:
                bits = int(raw)
            except ValueError:
                parser.error(f"{PRECISION_ENV_VAR} must be an integer, got {raw!r}")
    if bits < 64:
        parser.error(f"precision must be at least 64 bits, got {bits}")
    return bits


def _config_from_args(parser, args) -> RunConfig:
    config = RunConfig(
        command=args.command,
        output_format=args.output_format,
        output_path=args.output_path,
    )
    if args.command == "verify":
        config.identity = IdentityId(args.identity)
        if args.order is not None and args.order < 0:
            parser.error("order must be non-negative")
        if args.n_max is not None and args.n_max < 0:
            parser.error("n-max must be non-negative")
        config.order = args.order
        config.n_max = args.n_max
    elif args.command == "coeffs":
        if args.order < 0:
            parser.error("order must be non-negative")
        config.series = args.series
        config.order = args.order
    elif args.command in ("limit", "report-all"):
        if not 1 <= args.k_min <= args.k_max:
            parser.error("need 1 <= k-min <= k-max")
        config.k_min = args.k_min
        config.k_max = args.k_max
        config.rel_tol = args.rel_tol
        config.precision_bits = _resolve_precision(parser, args)
        if args.command == "limit":
            config.series = args.target
    return config


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config_from_args(parser, args)
    code, rendered = run(config)
    if config.output_path is None:
        sys.stdout.write(rendered)
        return code
    try:
        with open(config.output_path, "w") as handle:
            handle.write(rendered)
    except OSError as exc:
        print(f"qzeta: cannot write {config.output_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
