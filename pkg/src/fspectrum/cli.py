"""Command-line interface.

Exit codes: 0 success, 1 parse or validation failure, 2 nonzero anomaly
residual, 3 theorem-level bound violation, 4 inconclusive Milnor number.
When several apply the largest is returned.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence, Tuple

from . import __version__
from .bounds import Status
from .errors import FSpectrumError, InconclusiveError, OracleInapplicableError
from .milnor import DEFAULT_DEGREE_CAP, milnor_number, milnor_quasihomogeneous, parse_poly
from .model import has_errors
from .report import RunReport, analyze_bytes, dumps, input_digest, jsonable

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_ANOMALY = 2
EXIT_BOUND = 3
EXIT_INCONCLUSIVE = 4


def _options(args) -> dict:
    return {
        "jacobian_ideal_only": getattr(args, "jacobian_ideal_only", False),
        "degree_cap": getattr(args, "degree_cap", DEFAULT_DEGREE_CAP),
        "mirror_elliptic_with_section": getattr(args, "mirror_section", False),
    }


def run_file(path: str, options: dict) -> Tuple[RunReport, int]:
    """Full pipeline on one file; failures are recorded in the report, not raised."""
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        report = RunReport(model_path=path, input_digest="")
        report.errors.append(f"cannot read file: {exc.strerror}")
        return report, EXIT_INVALID
    try:
        report = analyze_bytes(data, path, **options)
    except InconclusiveError as exc:
        report = RunReport(model_path=path, input_digest=input_digest(data))
        report.errors.append(str(exc))
        return report, EXIT_INCONCLUSIVE
    except FSpectrumError as exc:
        report = RunReport(model_path=path, input_digest=input_digest(data))
        report.errors.append(str(exc))
        return report, EXIT_INVALID
    code = EXIT_INVALID if has_errors(report.validation) else EXIT_OK
    return report, code


def check_code(report: RunReport, convention: str, strict: bool) -> int:
    """Exit code contribution of anomaly residuals, bounds and (with --strict) warnings."""
    code = EXIT_OK
    if strict and report.validation:
        code = EXIT_INVALID
    if report.anomaly is not None:
        a = report.anomaly
        residuals = [a.geom_residual]
        if convention in ("a", "both") or a.grav_residual_alt is None:
            residuals.append(a.grav_residual)
        if convention in ("b", "both") and a.grav_residual_alt is not None:
            residuals.append(a.grav_residual_alt)
        if any(r for r in residuals if r is not None):
            code = max(code, EXIT_ANOMALY)
    if report.spectrum is not None and strict and report.spectrum.warnings:
        code = max(code, EXIT_ANOMALY)
    statuses = {b.status for b in report.bounds}
    if Status.VIOLATED in statuses or (strict and Status.WARNING in statuses):
        code = max(code, EXIT_BOUND)
    return code


def _err(*lines: str) -> None:
    for line in lines:
        print(line, file=sys.stderr)


def _report_problems(report: RunReport) -> None:
    _err(*(f"{report.model_path}: {e}" for e in report.errors))
    _err(*(f"{report.model_path}: {v}" for v in report.validation))


def _fmt(x) -> str:
    return str(jsonable(x))


def _print_spectrum(report: RunReport) -> None:
    s = report.spectrum
    extra_t = f" (+{s.T_extra} from multiple fibers)" if s.T_extra else ""
    extra_h = f" (+{s.H_unch_extra} from multiple fibers)" if s.H_unch_extra else ""
    print(f"V={s.V} T={s.T_base} H={_fmt(s.H)}")
    print(f"  regime            {s.regime.value}")
    print(f"  vector            {s.V}  (dim - rank of gauge algebra: {s.dim_minus_rank})")
    print(f"  tensor            {s.T_base}{extra_t}")
    print(f"  hyper, uncharged  {_fmt(s.H_unch_base)}{extra_h}  (sum of Milnor numbers: {s.sum_milnor})")
    print(f"  hyper, charged    {_fmt(s.H_ch)}")
    for e in s.breakdown:
        print(f"    {e.source:<16} {e.term:<8} {_fmt(e.value)}")
    for w in s.warnings:
        print(f"  warning: {w}")


def _print_anomaly(report: RunReport) -> None:
    a = report.anomaly
    print(f"gravitational residual (convention a): {_fmt(a.grav_residual)}")
    if a.grav_residual_alt is not None:
        print(f"gravitational residual (convention b): {_fmt(a.grav_residual_alt)}")
    geom = "not evaluated (chi_top not given)" if a.geom_residual is None else _fmt(a.geom_residual)
    print(f"geometric residual: {geom}")


def _print_bounds(report: RunReport) -> None:
    for b in report.bounds:
        lhs = "-" if b.lhs is None else _fmt(b.lhs)
        note = f"  [{b.note}]" if b.note else ""
        print(f"{b.rule:<20} {b.status.value:<15} {lhs} {b.relation} {_fmt(b.rhs)}"
              f"  ({b.provenance.value}){note}")


def cmd_spectrum(args) -> int:
    report, code = run_file(args.path, _options(args))
    if args.json:
        print(dumps(report.to_json()))
    if code:
        _report_problems(report)
        return code
    if not args.json:
        _print_spectrum(report)
    for v in report.validation:
        _err(f"{args.path}: {v}")
    return code


def cmd_check(args) -> int:
    report, code = run_file(args.path, _options(args))
    if code == EXIT_OK:
        code = check_code(report, args.convention, args.strict)
    if args.json:
        print(dumps(report.to_json()))
    elif report.spectrum is not None:
        _print_spectrum(report)
        _print_anomaly(report)
        _print_bounds(report)
    _report_problems(report)
    return code


def cmd_bounds(args) -> int:
    report, code = run_file(args.path, _options(args))
    if code == EXIT_OK:
        statuses = {b.status for b in report.bounds}
        if Status.VIOLATED in statuses or (args.strict and Status.WARNING in statuses):
            code = EXIT_BOUND
    if args.json:
        print(dumps(report.to_json()["bounds"]))
    elif report.spectrum is not None:
        _print_bounds(report)
    _report_problems(report)
    return code


def cmd_milnor(args) -> int:
    if args.file:
        try:
            text = Path(args.file).read_text("utf-8").strip()
        except OSError as exc:
            _err(f"{args.file}: {exc.strerror}")
            return EXIT_INVALID
    else:
        text = args.poly
    try:
        f = parse_poly(text)
        value = milnor_number(f, jacobian_ideal_only=args.jacobian_ideal_only,
                              degree_cap=args.degree_cap)
        other = milnor_number(f, jacobian_ideal_only=not args.jacobian_ideal_only,
                              degree_cap=args.degree_cap)
    except InconclusiveError as exc:
        _err(f"inconclusive: {exc}")
        if args.json:
            print(dumps({"poly": text, "inconclusive": True, "degree_reached": exc.degree_cap}))
        return EXIT_INCONCLUSIVE
    except FSpectrumError as exc:
        _err(f"error: {exc}")
        return EXIT_INVALID
    try:
        oracle: Optional[int] = milnor_quasihomogeneous(f)
    except OracleInapplicableError:
        oracle = None
    with_f, jac_only = (other, value) if args.jacobian_ideal_only else (value, other)
    if args.json:
        print(dumps({"poly": str(f), "milnor": value, "ideal_with_f": with_f,
                     "jacobian_ideal_only": jac_only, "product_formula": oracle}))
        return EXIT_OK
    print(value)
    if with_f != jac_only:
        print(f"note: ideal with f gives {with_f}, Jacobian ideal alone gives {jac_only}")
    if oracle is not None:
        verdict = "agrees" if oracle == value else "DISAGREES"
        print(f"quasi-homogeneous product formula: {oracle} ({verdict})")
    return EXIT_OK


def _batch_one(item) -> Tuple[dict, int]:
    path, options, convention, strict = item
    report, code = run_file(path, options)
    if code == EXIT_OK:
        code = check_code(report, convention, strict)
    return report.to_json(), code


def cmd_batch(args) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        _err(f"{args.directory}: not a directory")
        return EXIT_INVALID
    paths = sorted(str(p) for p in directory.glob("*.json"))
    items = [(p, _options(args), args.convention, args.strict) for p in paths]
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_batch_one, items))
    else:
        results = [_batch_one(i) for i in items]
    worst = max((code for _, code in results), default=EXIT_OK)
    if args.json:
        print(dumps({"reports": [r for r, _ in results],
                     "exit_codes": {p: c for p, (_, c) in zip(paths, results)},
                     "exit_code": worst}))
    else:
        for path, (rep, code) in zip(paths, results):
            detail = "; ".join(rep["errors"] + [v["message"] for v in rep["validation"]])
            print(f"{code}  {path}" + (f"  {detail}" if detail else ""))
    failed = sum(1 for _, c in results if c)
    print(f"{len(results)} file(s), {len(results) - failed} passed, {failed} failed",
          file=sys.stderr if args.json else sys.stdout)
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fspectrum", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def milnor_flags(p):
        p.add_argument("--jacobian-ideal-only", action="store_true",
                       help="leave f out of the ideal (classical Milnor number)")
        p.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP, metavar="N",
                       help="largest truncation degree for local algebra computations")

    def model_flags(p, with_convention=True):
        p.add_argument("--json", action="store_true", help="print the report as JSON")
        p.add_argument("--strict", action="store_true", help="treat warnings as failures")
        p.add_argument("--mirror-section", action="store_true",
                       help="assert the mirror is elliptic with a section (enables the h11 bound)")
        if with_convention:
            p.add_argument("--convention", choices=("a", "b", "both"), default="a",
                           help="multiple-fiber gravitational anomaly convention to enforce")
        milnor_flags(p)

    p = sub.add_parser("spectrum", help="compute the massless spectrum of a model")
    p.add_argument("path")
    model_flags(p, with_convention=False)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("check", help="spectrum, anomaly residuals and bounds with exit codes")
    p.add_argument("path")
    model_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bounds", help="evaluate the explicit bounds only")
    p.add_argument("path")
    model_flags(p, with_convention=False)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("milnor", help="Milnor number of a polynomial germ at the origin")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", help="polynomial, e.g. 'x^2 + y^2 + z^5'")
    src.add_argument("--file", help="file containing the polynomial")
    p.add_argument("--json", action="store_true")
    milnor_flags(p)
    p.set_defaults(func=cmd_milnor)

    p = sub.add_parser("batch", help="check every *.json model in a directory")
    p.add_argument("directory")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    model_flags(p)
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
