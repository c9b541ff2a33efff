"""Command-line front end.

Exit codes: 0 success, 1 input validation failure, 2 unsupported
(model, group) combination, 3 cross-check disagreement between routes that
must agree.  Reports are deterministic for identical inputs and flags;
``--report json`` emits the machine-readable form.

The recursion cap for the order-ell command can be overridden with the
EULERCHI_RECURSION_CAP environment variable or ``--cap``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import catalog, cells, groupoid, groups, harness, jsonio, translation as tr
from .errors import (
    CrossCheckError,
    EulerchiError,
    UnsupportedCombination,
    ValidationError,
)
from .report import Report

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_UNSUPPORTED = 2
EXIT_CROSSCHECK = 3


def _emit(report: Report, args) -> int:
    text = report.to_json() if args.report == "json" else report.to_text()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.all_pass() else EXIT_CROSSCHECK


def _gamma(report: Report, arg: str) -> groups.Presentation:
    p = jsonio.load_presentation_arg(arg)
    if Path(arg).exists():
        report.add_input_file("gamma", arg)
    else:
        report.add_input_text("gamma", arg)
    return p


def cmd_chi(args) -> int:
    report = Report("chi")
    report.add_input_file("space", args.space)
    space = jsonio.load_file(args.space, jsonio.load_cell_space)
    report.result = cells.chi(space)
    report.breakdown = [
        {"cell": c.id, "dim": c.dim, "sign": -1 if c.dim % 2 else 1} for c in space.cells
    ]
    return _emit(report, args)


def cmd_integrate(args) -> int:
    report = Report("integrate")
    report.add_input_file("function", args.function)
    f = jsonio.load_file(args.function, jsonio.load_function)
    value = cells.integrate(f)
    report.result = value
    report.check("levelset_formulation", value, cells.integrate_levelset(f))
    return _emit(report, args)


def cmd_pushforward(args) -> int:
    report = Report("pushforward")
    report.add_input_file("map", args.map)
    report.add_input_file("function", args.function)
    m = jsonio.load_file(args.map, jsonio.load_cell_map)
    f = jsonio.load_file(args.function, jsonio.load_function)
    pushed = cells.pushforward(m, f)
    report.result = {cid: pushed.values[cid] for cid in sorted(pushed.values)}
    report.check("fubini", cells.integrate(pushed), cells.integrate(f))
    return _emit(report, args)


def cmd_gamma_chi(args) -> int:
    report = Report("gamma-chi")
    report.add_input_file("groupoid", args.groupoid)
    g = jsonio.load_file(args.groupoid, jsonio.load_groupoid)
    p = _gamma(report, args.gamma)
    f = groupoid.integrand(g, p)
    report.result = groupoid.chi_gamma(g, p)
    report.breakdown = [
        {
            "stratum": c.id,
            "dim": c.dim,
            "integrand": f.values[c.id],
            "term": f.values[c.id] * (-1 if c.dim % 2 else 1),
        }
        for c in g.space.cells
    ]
    for cid in g.space.ids():
        if catalog.is_user_supplied(g.label(cid)):
            report.warnings.append(f"stratum {cid}: user-supplied catalog entry")
    return _emit(report, args)


def cmd_translation(args) -> int:
    report = Report("translation")
    report.add_input_file("complex", args.complex)
    x = jsonio.load_file(args.complex, jsonio.load_complex)
    p = _gamma(report, args.gamma)
    values = {}
    if args.method in ("strata", "all"):
        values["strata"] = tr.chi_gamma_strata(p, x)
    if args.method in ("inertia", "all"):
        values["inertia"] = tr.lambda_chi(p, x)
    if args.method in ("noniter", "all"):
        values["noniter"] = tr.chi_gamma_noniter(p, x)
    report.result = values if args.method == "all" else values[args.method]
    if args.method == "all":
        report.check("strata_vs_inertia", values["strata"], values["inertia"])
        report.check("strata_vs_noniter", values["strata"], values["noniter"])
    return _emit(report, args)


def cmd_order_ell(args) -> int:
    report = Report("order-ell")
    report.add_input_file("complex", args.complex)
    x = jsonio.load_file(args.complex, jsonio.load_complex)
    cap = args.cap
    report.result = tr.chi_order_ell(x, args.ell, cap)
    tree = []
    level = [("", x)]
    for depth in range(min(args.ell, 2)):
        nxt = []
        for label, cx in level:
            for cls in groups.conjugacy_classes(cx.group):
                sub = tr.fixed_subcomplex(cx, (cls.rep,))
                nxt.append((f"{label}/{cls.rep}", sub))
        level = nxt
        tree.append({"depth": depth + 1, "branches": len(level)})
    report.breakdown = {"ell": args.ell, "recursion": tree}
    return _emit(report, args)


def cmd_inertia(args) -> int:
    report = Report("inertia")
    report.add_input_file("complex", args.complex)
    x = jsonio.load_file(args.complex, jsonio.load_complex)
    p = _gamma(report, args.gamma)
    ic = tr.inertia_complex(p, x)
    reps, _ = tr.cell_orbits(ic)
    report.result = cells.chi(tr.orbit_space(ic))
    report.breakdown = {
        "labels": len(ic.tuples),
        "cells": len(ic.space),
        "orbit_cells": len(reps),
    }
    return _emit(report, args)


def cmd_atlas(args) -> int:
    report = Report("atlas")
    pieces = []
    for i, path in enumerate(args.pieces):
        report.add_input_file(f"piece{i}", path)
        pieces.append(jsonio.load_file(path, jsonio.load_complex))
    p = _gamma(report, args.gamma)
    terms = [tr.chi_gamma_strata(p, piece) for piece in pieces]
    report.result = sum(terms)
    report.breakdown = [{"piece": i, "value": v} for i, v in enumerate(terms)]
    report.warnings.append(
        "chart images asserted disjoint by the caller; not verifiable from the pieces"
    )
    return _emit(report, args)


def cmd_extension(args) -> int:
    report = Report("extension")
    report.add_input_file("extension", args.extension)
    ext = jsonio.load_file(args.extension, jsonio.load_extension)
    pred = groupoid.abelian_extension_chi(
        ext["fiber"], ext["group"], ext["complex"], ext["ell"]
    )
    report.result = pred.predicted
    report.breakdown = {
        "fiber_factor": pred.factor_b,
        "base_factor": pred.factor_h,
        "ell": ext["ell"],
    }
    report.warnings.append(
        "prediction assumes an abelian extension; nonabelian extensions genuinely differ"
    )
    return _emit(report, args)


def cmd_verify(args) -> int:
    report = Report("verify")
    fault = os.environ.get("EULERCHI_INJECT_FAULT") or None
    result = harness.run_suite(
        seed=args.seed,
        cases=args.cases,
        max_group=args.max_group,
        max_cells=args.max_cells,
        inject_fault=fault,
    )
    report.result = {
        "seed": result.seed,
        "cases": result.cases,
        "passed": result.passed,
    }
    report.breakdown = {name: result.checks_run[name] for name in sorted(result.checks_run)}
    if fault:
        report.warnings.append(f"fault injection active: {fault}")
    for f in result.failures:
        report.check(f"case{f.case}:{f.name}", f.lhs, f.rhs)
    if not result.passed and result.failing_spec is not None:
        dump = Path(args.dump)
        dump.write_text(
            json.dumps(result.failing_spec, sort_keys=True, indent=2) + "\n",
            encoding="utf-8",
        )
        report.warnings.append(f"counterexample written to {dump}")
    return _emit(report, args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerchi",
        description="Exact Euler characteristics of cell spaces, labeled groupoids, "
        "and finite group actions, with cross-validated routes.",
    )
    parser.add_argument("--report", choices=("json", "text"), default="text")
    parser.add_argument("--out", metavar="FILE", default=None, help="write the report to FILE")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("chi", help="Euler characteristic of a cell space file")
    s.add_argument("space")
    s.set_defaults(func=cmd_chi)

    s = sub.add_parser("integrate", help="integrate a constructible function")
    s.add_argument("function")
    s.set_defaults(func=cmd_integrate)

    s = sub.add_parser("pushforward", help="push a function forward along a cell map")
    s.add_argument("map")
    s.add_argument("function")
    s.set_defaults(func=cmd_pushforward)

    s = sub.add_parser("gamma-chi", help="Euler characteristic of a labeled groupoid")
    s.add_argument("groupoid")
    s.add_argument("--gamma", required=True, help="presentation file or inline JSON")
    s.set_defaults(func=cmd_gamma_chi)

    s = sub.add_parser("translation", help="group action invariants by three routes")
    s.add_argument("complex")
    s.add_argument("--gamma", required=True)
    s.add_argument("--method", choices=("strata", "inertia", "noniter", "all"), default="all")
    s.set_defaults(func=cmd_translation)

    raw_cap = os.environ.get("EULERCHI_RECURSION_CAP", "")
    try:
        cap_default = int(raw_cap) if raw_cap else tr.DEFAULT_RECURSION_CAP
    except ValueError:
        raise ValidationError(
            f"EULERCHI_RECURSION_CAP must be an integer, got {raw_cap!r}"
        ) from None
    s = sub.add_parser("order-ell", help="order-ell orbifold characteristic")
    s.add_argument("complex")
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("--cap", type=int, default=cap_default)
    s.set_defaults(func=cmd_order_ell)

    s = sub.add_parser("inertia", help="build the inertia complex and report its chi")
    s.add_argument("complex")
    s.add_argument("--gamma", required=True)
    s.set_defaults(func=cmd_inertia)

    s = sub.add_parser("atlas", help="sum chart pieces (disjointness asserted by caller)")
    s.add_argument("pieces", nargs="+")
    s.add_argument("--gamma", required=True)
    s.set_defaults(func=cmd_atlas)

    s = sub.add_parser("extension", help="abelian-extension prediction with both factors")
    s.add_argument("extension")
    s.set_defaults(func=cmd_extension)

    s = sub.add_parser("verify", help="randomized cross-validation suite")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cases", type=int, default=50)
    s.add_argument("--max-group", type=int, default=24)
    s.add_argument("--max-cells", type=int, default=60)
    s.add_argument("--dump", default="eulerchi-counterexample.json")
    s.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        return args.func(args)
    except UnsupportedCombination as exc:
        print(f"eulerchi: unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValidationError as exc:
        print(f"eulerchi: invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except CrossCheckError as exc:
        print(f"eulerchi: cross-check failure: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    except FileNotFoundError as exc:
        print(f"eulerchi: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except EulerchiError as exc:
        print(f"eulerchi: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
