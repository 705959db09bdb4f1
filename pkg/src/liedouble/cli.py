"""Command-line front end.

Subcommands
-----------
validate         Jacobi / bialgebra validity of a catalog entry or JSON file.
double           Build D(g) for a catalog bialgebra; optionally iterate.
classify         Lagrangian / coisotropy / Poisson-subgroup classification.
verify-brackets  Numerical verification matrix (Sklyanin vs closed forms,
                 plus property checks for the 3d anti-de Sitter brackets).

Exit codes: 0 pass, 1 verification failure, 2 input error.  Reports are
deterministic for a fixed seed; wall-clock timing goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import catalog, charts
from .bialgebra import from_json as bialgebra_from_json
from .double import (
    bracket_table_json,
    bracket_table_text,
    build_double,
    crossed_bracket_mismatches,
    double_of_double,
)
from .errors import LiedoubleError, ParseError, UnknownKey
from .exactalg import PolyExpr
from .homogeneous import (
    LagrangianSpec,
    classify as classify_spec,
    lagrangian_bracket_table,
)
from .liealg import from_json as algebra_from_json, jacobi_violations
from .rmatrix import is_cybe, is_mcybe

PASS, FAIL, INPUT_ERROR = 0, 1, 2


def _emit(report: dict, args) -> None:
    text_format = getattr(args, "format", "text") == "text"
    blob = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if getattr(args, "json", None):
        Path(args.json).write_text(blob)
    if text_format:
        for line in _text_lines(report):
            print(line)
    else:
        sys.stdout.write(blob)


def _text_lines(report: dict):
    yield f"command: {report['command']}"
    for name, verdict in sorted(report.get("verdicts", {}).items()):
        yield f"  {'PASS' if verdict == 'pass' else 'FAIL'}  {name}"
    for extra in report.get("notes", []):
        yield f"  note: {extra}"
    yield f"overall: {'PASS' if report['pass'] else 'FAIL'}"


def _overall(report: dict) -> int:
    return PASS if report["pass"] else FAIL


# ---------------------------------------------------------------- validate


def _load_target(target: str):
    if target.startswith("catalog:"):
        return catalog.get(target.split(":", 1)[1])
    path = Path(target)
    if not path.exists():
        raise ParseError(f"no such file: {target}")
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{target}: line {exc.lineno} col {exc.colno}: {exc.msg}")
    return data


def cmd_validate(args) -> int:
    target = _load_target(args.target)
    verdicts = {}
    notes = []
    if isinstance(target, catalog.CatalogEntry):
        entry = target
        if entry.kind == "algebra":
            bad = jacobi_violations(entry.payload)
            verdicts["jacobi"] = "pass" if not bad else "fail"
            notes.extend(f"residual at (i,j,l,m)={v}" for v in bad[:8])
        elif entry.kind == "bialgebra":
            verdicts["double-jacobi"] = "pass"  # validated on load
        elif entry.kind == "rmatrix":
            alg = catalog.load().rmatrix_algebra(entry.key)
            declared = entry.raw["verdicts"]
            verdicts["cybe-verdict"] = (
                "pass" if is_cybe(alg, entry.payload) == declared["cybe"] else "fail"
            )
            verdicts["mcybe-verdict"] = (
                "pass" if is_mcybe(alg, entry.payload) == declared["mcybe"] else "fail"
            )
        elif entry.kind == "basis_change":
            verdicts["invertible"] = "pass"  # construction computes the inverse
        else:
            verdicts["registered-bracket"] = "pass"
        inputs = {"target": args.target, "kind": entry.kind}
    else:
        data = target
        if "cocomm" in data:
            try:
                bialgebra_from_json(data)
                verdicts["double-jacobi"] = "pass"
            except LiedoubleError as exc:
                verdicts["double-jacobi"] = "fail"
                notes.append(str(exc))
        elif "brackets" in data:
            try:
                alg = algebra_from_json(data)
            except LiedoubleError as exc:
                raise ParseError(f"{args.target}: {exc}") from exc
            bad = jacobi_violations(alg)
            verdicts["jacobi"] = "pass" if not bad else "fail"
            notes.extend(f"residual at (i,j,l,m)={v}" for v in bad[:8])
        else:
            raise ParseError(f"{args.target}: neither an algebra nor a bialgebra")
        inputs = {"target": args.target, "kind": "file"}
    report = {
        "command": "validate",
        "inputs": inputs,
        "verdicts": verdicts,
        "notes": notes,
        "pass": all(v == "pass" for v in verdicts.values()),
    }
    _emit(report, args)
    return _overall(report)


# ---------------------------------------------------------------- double


def cmd_double(args) -> int:
    cat = catalog.load()
    B = cat.bialgebra(args.bialgebra)
    D = build_double(B)
    verdicts = {"double-jacobi": "pass" if not jacobi_violations(D.algebra) else "fail"}
    notes = []
    artifacts = {}
    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)

    def write_table(stem, algebra):
        text = bracket_table_text(algebra)
        if out_dir:
            (out_dir / f"{stem}.txt").write_text(text)
            (out_dir / f"{stem}.json").write_text(
                json.dumps(bracket_table_json(algebra), indent=2, sort_keys=True)
                + "\n"
            )
            artifacts[stem] = str(out_dir / f"{stem}.txt")
        else:
            print(text, end="")

    write_table(f"{args.bialgebra}-double", D.algebra)
    if args.iterate:
        D2 = double_of_double(B)
        verdicts["iterated-jacobi"] = (
            "pass" if not jacobi_violations(D2.algebra) else "fail"
        )
        mismatches = crossed_bracket_mismatches(D2, B)
        verdicts["crossed-brackets"] = "pass" if not mismatches else "fail"
        notes.extend(mismatches[:8])
        write_table(f"{args.bialgebra}-double-of-double", D2.algebra)
    report = {
        "command": "double",
        "inputs": {"bialgebra": args.bialgebra, "iterate": bool(args.iterate)},
        "artifacts": artifacts,
        "verdicts": verdicts,
        "notes": notes,
        "pass": all(v == "pass" for v in verdicts.values()),
    }
    if args.json or args.format == "json":
        _emit(report, args)
    return _overall(report)


# ---------------------------------------------------------------- classify


def _parse_generator(expr: str, algebra) -> list:
    """Parse a linear combination like 'P1+P2' or '2*K1 - J' into a vector."""
    vec = [PolyExpr.zero()] * algebra.dim
    text = expr.replace(" ", "")
    if not text:
        raise ParseError("empty generator expression")
    terms = []
    current = ""
    for ch in text:
        if ch in "+-" and current:
            terms.append(current)
            current = ch if ch == "-" else ""
        elif ch in "+-" and not current:
            current = ch if ch == "-" else ""
        else:
            current += ch
    terms.append(current)
    for term in terms:
        if not term:
            raise ParseError(f"malformed generator {expr!r}")
        sign = 1
        if term.startswith("-"):
            sign, term = -1, term[1:]
        if "*" in term:
            coef_text, label = term.rsplit("*", 1)
            try:
                coef = PolyExpr.parse(coef_text)
            except LiedoubleError as exc:
                raise ParseError(f"bad coefficient in {expr!r}: {exc}") from exc
        else:
            coef, label = PolyExpr.one(), term
        if label not in algebra.labels:
            raise ParseError(f"unknown generator label {label!r} in {expr!r}")
        i = algebra.labels.index(label)
        vec[i] = vec[i] + coef * PolyExpr.const(sign)
    return vec


def _parse_subalgebra(spec: str, algebra) -> list:
    text = spec.strip()
    if text.startswith("span{") and text.endswith("}"):
        text = text[len("span{"):-1]
    return [_parse_generator(g, algebra) for g in text.split(",") if g.strip()]


def _complete_basis(algebra, h_vectors) -> list:
    from .exactlinalg import rank

    complement = []
    current = [list(v) for v in h_vectors]
    for i in range(algebra.dim):
        if len(current) == algebra.dim:
            break
        candidate = algebra.basis_vector(i)
        if rank(current + [candidate]) > rank(current):
            current.append(candidate)
            complement.append(candidate)
    if len(current) != algebra.dim:
        raise ParseError("could not complete the subalgebra basis")
    return complement


def cmd_classify(args) -> int:
    cat = catalog.load()
    B = cat.bialgebra(args.bialgebra)
    h = _parse_subalgebra(args.subalgebra, B.algebra)
    complement = _complete_basis(B.algebra, h)
    m = len(complement)
    if args.pi:
        try:
            pi_rows = json.loads(args.pi)
        except json.JSONDecodeError as exc:
            raise ParseError(f"--pi is not valid JSON: {exc}") from exc
        pi = [[PolyExpr.parse(str(x)) for x in row] for row in pi_rows]
    else:
        pi = [[PolyExpr.zero()] * m for _ in range(m)]
    spec = LagrangianSpec(h, complement, pi)
    D = build_double(B)
    rep = classify_spec(D, B, spec)
    table_info = None
    if rep.subalgebra:
        table = lagrangian_bracket_table(D, spec)
        table_info = {
            "labels": list(table.labels),
            "table": bracket_table_text(table).splitlines(),
        }
    verdicts = {
        "lagrangian": "pass" if rep.lagrangian else "fail",
        "subalgebra": "pass" if rep.subalgebra else "fail",
    }
    report = {
        "command": "classify",
        "inputs": {
            "bialgebra": args.bialgebra,
            "subalgebra": args.subalgebra,
            "pi": args.pi or "0",
        },
        "classification": rep.to_json(),
        "bracket_table": table_info,
        "verdicts": verdicts,
        "notes": [],
        "pass": rep.lagrangian and rep.subalgebra,
    }
    _emit(report, args)
    return _overall(report)


# ---------------------------------------------------------------- verify


def _property_cell(bracket_id, rng, n_points, tol, entry):
    """Property checks for brackets without a desk-scale Sklyanin route:
    numerical Jacobi, linearization targets and flat limits."""
    import numpy as np

    ranges = entry.raw["param_ranges"]
    params = {name: rng.uniform(*bounds) for name, bounds in sorted(ranges.items())}
    results = []

    max_jacobi = 0.0
    for _ in range(n_points):
        p = charts.ChartPoint(
            charts.ADS3, tuple(rng.uniform(-1.0, 1.0) for _ in range(3))
        )
        max_jacobi = max(max_jacobi, charts.jacobi_numeric(bracket_id, params, p))
    results.append(
        {
            "bracket_id": bracket_id,
            "check": "jacobi",
            "n_points": n_points,
            "max_abs_err": max_jacobi,
            "pass": max_jacobi < tol,
        }
    )

    lin = charts.linearize(bracket_id, params)
    if bracket_id == "ads3-double1":
        target = np.zeros((3, 3, 3))
        target[0][1][2], target[0][2][1], target[1][2][0] = -1.0, 1.0, 1.0
    else:
        xi = params["xi"]
        target = np.zeros((3, 3, 3))
        target[0][2][0], target[0][2][1] = -0.5, -0.5 * xi
        target[1][2][0], target[1][2][1] = -0.5 * xi, -0.5
    err = max(
        float(abs(lin[a][b][c] - target[a][b][c]))
        for a in range(3)
        for b in range(a + 1, 3)
        for c in range(3)
    )
    results.append(
        {
            "bracket_id": bracket_id,
            "check": "linearization",
            "max_abs_err": err,
            "pass": err < tol,
        }
    )

    max_flat = 0.0
    names = charts.CHART_COORDS[charts.ADS3]
    p = charts.ChartPoint(
        charts.ADS3, tuple(rng.uniform(-1.0, 1.0) for _ in range(3))
    )
    for a in range(3):
        for b in range(a + 1, 3):
            rep = charts.flat_limit_check(
                bracket_id, (names[a], names[b]), p, params=params
            )
            max_flat = max(max_flat, rep.abs_err)
    results.append(
        {
            "bracket_id": bracket_id,
            "check": "flat-limit",
            "max_abs_err": max_flat,
            "pass": max_flat < tol,
        }
    )
    return results


def cmd_verify_brackets(args) -> int:
    cat = catalog.load()
    rng = random.Random(args.seed)
    tol_rel = args.tol if args.tol is not None else args.tol_rel
    tol_abs = args.tol if args.tol is not None else args.tol_abs
    property_tol = args.tol if args.tol is not None else 1e-6
    wanted = args.cells
    cells = []
    results = []
    for cell in catalog.default_verification_cells(cat):
        if wanted and wanted not in cell.bracket_id:
            continue
        cells.append(cell.bracket_id)
        results.extend(
            charts.verify_sklyanin_cell(cell, rng, args.points, tol_rel, tol_abs)
        )
    for bracket_id in catalog.property_check_ids(cat):
        if wanted and wanted not in bracket_id:
            continue
        cells.append(bracket_id)
        results.extend(
            _property_cell(
                bracket_id, rng, max(10, args.points // 2), property_tol,
                cat.get(bracket_id),
            )
        )
    if not cells:
        raise ParseError(f"--cells {wanted!r} matches no verification cell")
    verdicts = {}
    for res in results:
        name = res["bracket_id"] + ":" + (
            ",".join(res["pair"]) if "pair" in res else res["check"]
        )
        verdicts[name] = "pass" if res["pass"] else "fail"
    report = {
        "command": "verify-brackets",
        "inputs": {
            "cells": wanted or "all",
            "points": args.points,
            "tol_rel": tol_rel,
            "tol_abs": tol_abs,
            "property_tol": property_tol,
        },
        "seed": args.seed,
        "results": results,
        "verdicts": verdicts,
        "notes": [],
        "pass": all(r["pass"] for r in results),
    }
    _emit(report, args)
    return _overall(report)


# ---------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liedouble",
        description="Lie bialgebra / classical double / Poisson structure workbench",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--json", help="write the JSON report to this path")
        p.add_argument(
            "--format", choices=("json", "text"), default="text",
            help="stdout format (default text)",
        )

    p = sub.add_parser("validate", help="validate a catalog entry or JSON file")
    p.add_argument("target", help="catalog:<key> or a path to a JSON file")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("double", help="build the classical double of a bialgebra")
    p.add_argument("bialgebra", help="catalog bialgebra key")
    p.add_argument("--iterate", action="store_true",
                   help="also build the double of the double")
    p.add_argument("--out", help="directory for table artifacts")
    common(p)
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("classify", help="classify a Lagrangian subalgebra")
    p.add_argument("bialgebra", help="catalog bialgebra key")
    p.add_argument("subalgebra", help="e.g. 'span{J12}' or 'J,K1,K2' or 'P1+P2'")
    p.add_argument("--pi", help="JSON matrix of base-point bivector components")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-brackets", help="run the numerical verification matrix")
    p.add_argument("--cells", help="substring filter on bracket ids")
    p.add_argument("--points", type=int, default=20)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol-rel", type=float, default=1e-9, dest="tol_rel")
    p.add_argument("--tol-abs", type=float, default=1e-12, dest="tol_abs")
    p.add_argument("--tol", type=float, default=None,
                   help="override every tolerance with one value")
    common(p)
    p.set_defaults(func=cmd_verify_brackets)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.func(args)
    except (ParseError, UnknownKey) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except LiedoubleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL
    print(f"elapsed: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
