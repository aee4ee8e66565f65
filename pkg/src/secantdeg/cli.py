"""Command-line front end.

Results go to stdout, warnings and notes to stderr.  Exit status: 0 success,
1 computation or input error, 2 bad flags, 3 golden-corpus failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from importlib import resources

from . import descriptors
from .numeric import format_rational
from .secant import (
    CrossValidationMismatch,
    ValidityWarning,
    coeff_a,
    cross_validate,
    curve_sigma3,
    curve_sigma3_printed,
    deg_sigma2,
    deg_sigma3,
    mult_sigma2_along_X,
    segre_diag_closed,
    segre_X_sigma2_closed,
)
from .series import todd_identity_check
from .xring import AmbientClass

EXIT_OK, EXIT_COMPUTE, EXIT_FLAGS, EXIT_GOLDEN = 0, 1, 2, 3
TODD_CHECK_ORDERS = range(1, 25)

DESCRIPTOR_COMMANDS = ("sigma2", "sigma3", "mult", "segre", "derive")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secantdeg",
        description="Exact degrees of 2- and 3-secant varieties from Segre integral data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")

    desc = argparse.ArgumentParser(add_help=False)
    group = desc.add_mutually_exclusive_group(required=True)
    group.add_argument("--curve", nargs=2, metavar=("D", "G"), help="smooth curve of degree D, genus G")
    group.add_argument("--surface", nargs=4, metavar=("D", "PI", "KAPPA", "E"),
                       help="surface with h^2=D, h.K=PI, K^2=KAPPA, c2=E")
    group.add_argument("--veronese", nargs=2, type=int, metavar=("N", "T"),
                       help="P^N embedded by O(T)")
    group.add_argument("--table", metavar="PATH", help="JSON Segre integral table")
    desc.add_argument("--show-paper-example", action="store_true",
                      help="with --curve, also print the published curve polynomial "
                           "and how it differs from the implemented one")

    helps = {
        "sigma2": "degree of the secant line variety",
        "sigma3": "degree of the secant plane variety",
        "mult": "multiplicity of sigma_2 along X",
        "segre": "Segre classes s(X, sigma_2) and s(Delta, X x sigma_2)",
        "derive": "full cross-validated report with intermediates",
    }
    for name in DESCRIPTOR_COMMANDS:
        sub.add_parser(name, parents=[desc, common], help=helps[name])
    coeffs = sub.add_parser("coeffs", parents=[common], help="row a_{N,0..N}")
    coeffs.add_argument("--n", type=int, required=True, dest="dim")
    sub.add_parser("check", parents=[common], help="run the built-in golden corpus")
    return parser


def _table_from_args(args):
    if args.curve:
        return descriptors.curve(*args.curve)
    if args.surface:
        return descriptors.surface(*args.surface)
    if args.veronese:
        return descriptors.veronese(*args.veronese)
    return descriptors.load(args.table)


def _class_json(c: AmbientClass) -> dict:
    return {"render": c.render(), "terms": c.to_json()}


def report_to_json(report) -> dict:
    return {
        "name": report.name,
        "n": report.n,
        "d": format_rational(report.d),
        "method": report.method,
        "A": format_rational(report.A),
        "B": format_rational(report.B),
        "deg_sigma2": format_rational(report.deg_sigma2),
        "deg_sigma3": format_rational(report.deg_sigma3),
        "mult_X": format_rational(report.mult_X),
        "segre_X_sigma2": _class_json(report.segre_X_sigma2),
        "segre_diag": _class_json(report.segre_diag),
        "pushforwards": {str(i): _class_json(c) for i, c in report.pushforwards.items()},
        "warnings": list(report.warnings),
    }


def _report_text(report) -> str:
    lines = [
        f"name: {report.name}",
        f"n: {report.n}",
        f"d: {format_rational(report.d)}",
        f"method: {report.method} (agrees with closed form)",
        f"A: {format_rational(report.A)}",
        f"B: {format_rational(report.B)}",
        f"deg_sigma2: {format_rational(report.deg_sigma2)}",
        f"deg_sigma3: {format_rational(report.deg_sigma3)}",
        f"mult_X: {format_rational(report.mult_X)}",
        f"segre_X_sigma2: {report.segre_X_sigma2}",
        f"segre_diag: {report.segre_diag}",
    ]
    for i, c in report.pushforwards.items():
        lines.append(f"q_*(D^{i}): {c}")
    return "\n".join(lines)


def _emit(args, payload: dict, text: str, out):
    if args.format == "structured":
        print(json.dumps(payload), file=out)
    else:
        print(text, file=out)


def _table_warnings(table) -> list[str]:
    if table.ample5 != "yes":
        return [f"{table.name}: 5-very ampleness is {table.ample5}; results may not be geometric"]
    return []


def _curve_note(args) -> list[str]:
    d, g = args.curve
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ValidityWarning)
        ours = curve_sigma3(d, g)
    printed = curve_sigma3_printed(d, g)
    return [
        f"implemented: (d^3 - 9d^2 + 26d - 24 - 6dg + 24g)/6 = {ours}",
        f"published:   (d^3 - 9d^2 + 26d + 24 - 6dg - 24g)/6 = {printed}",
        f"difference published - implemented = 8(1 - g) = {printed - ours}; "
        "the implemented sign pattern matches the determinantal degrees of rational normal curves",
    ]


def _run_descriptor(args, out, err) -> int:
    table = _table_from_args(args)
    notes: list[str] = []
    if args.show_paper_example and args.curve:
        for line in _curve_note(args):
            print(line, file=err)
    payload: dict
    if args.command == "derive":
        report = cross_validate(table)
        notes.extend(report.warnings)
        payload, text = report_to_json(report), _report_text(report)
    elif args.command in ("sigma2", "sigma3", "mult"):
        fn = {"sigma2": deg_sigma2, "sigma3": deg_sigma3, "mult": mult_sigma2_along_X}[args.command]
        value = fn(table)
        notes.extend(_table_warnings(table))
        if value.denominator != 1:
            notes.append(f"result {value} is not an integer")
        key = {"sigma2": "deg_sigma2", "sigma3": "deg_sigma3", "mult": "mult_X"}[args.command]
        payload, text = {"name": table.name, key: format_rational(value)}, format_rational(value)
    else:
        sx, sd = segre_X_sigma2_closed(table), segre_diag_closed(table)
        payload = {"name": table.name, "segre_X_sigma2": _class_json(sx), "segre_diag": _class_json(sd)}
        text = f"s(X, sigma_2): {sx}\ns(Delta, X x sigma_2): {sd}"
    for note in notes:
        print(f"warning: {note}", file=err)
    _emit(args, payload, text, out)
    return EXIT_OK


def load_golden() -> list[dict]:
    data = resources.files("secantdeg").joinpath("golden.json").read_text(encoding="utf-8")
    return json.loads(data)["items"]


def _golden_table(spec: dict):
    (kind, params), = spec.items()
    return getattr(descriptors, kind)(*params)


def run_golden(items=None) -> list[tuple[str, bool, str]]:
    """Evaluate each golden item through the cross-validated report."""
    results = []
    for item in items if items is not None else load_golden():
        try:
            if item["quantity"] == "coeffs":
                n = item["n"]
                got = [str(coeff_a(n, k)) for k in range(n + 1)]
            else:
                report = cross_validate(_golden_table(item["descriptor"]))
                got = format_rational(getattr(report, item["quantity"]))
            ok = got == item["expected"]
            detail = f"got {got}, expected {item['expected']}"
        except Exception as exc:  # a crashing item is a failing item
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((item["id"], ok, detail))
    for k in TODD_CHECK_ORDERS:
        ok = todd_identity_check(k)
        results.append((f"todd-identity-{k}", ok, "identity holds" if ok else "identity fails"))
    return results


def _run_check(args, out) -> int:
    results = run_golden()
    if args.format == "structured":
        print(json.dumps({"results": [{"id": i, "pass": ok, "detail": d} for i, ok, d in results]}), file=out)
    else:
        for ident, ok, detail in results:
            print(f"{'PASS' if ok else 'FAIL'} {ident}: {detail}", file=out)
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_GOLDEN


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_FLAGS if exc.code else EXIT_OK
    try:
        if args.command == "coeffs":
            if args.dim < 1:
                print("error: --n must be at least 1", file=err)
                return EXIT_FLAGS
            row = [coeff_a(args.dim, k) for k in range(args.dim + 1)]
            _emit(args, {"n": args.dim, "coeffs": [str(c) for c in row]},
                  " ".join(str(c) for c in row), out)
            return EXIT_OK
        if args.command == "check":
            return _run_check(args, out)
        return _run_descriptor(args, out, err)
    except CrossValidationMismatch as exc:
        print(f"error: cross-validation failed: {exc}", file=err)
        return EXIT_COMPUTE
    except (ValueError, ArithmeticError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
