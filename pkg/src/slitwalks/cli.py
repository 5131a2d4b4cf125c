"""Command-line front end.

Subcommands: solve, count, factorize, verify, presets.  A model is chosen
with --preset (square, diagonal, triangular, spider:k, halfplane-square)
or with --steps "di,dj;di,dj;...".  Exact rationals serialize as "p/q"
strings, integers without the "/1"; coefficient tables are sparse, keyed
by (n, i, j).

Exit codes: 0 success (and every check passed for verify), 1 internal
cross-check or verification failure, 2 usage errors, 3 precondition
violations.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .factorization import canonical_factorize
from .lattice import (
    Constraint,
    CrossCheckError,
    Domain,
    StepSet,
    bilateral_series,
    count_bridges,
    count_loops,
    count_walks,
)
from .solver import solve, solve_half_plane
from .verify import verify_half_plane_model, verify_model

PRESET_NAMES = ("square", "diagonal", "triangular", "spider:k", "halfplane-square")


def coef_str(c):
    """Canonical coefficient text: "p/q" for true rationals, plain "p"
    for integers."""
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def series_entries(ts):
    """Sparse (n, i, j, coef) rows of a series, in canonical order."""
    rows = []
    for n, p in enumerate(ts.coeffs):
        for exps in sorted(p.coeffs):
            i, j = (exps, 0) if ts.nvars == 1 else exps
            rows.append({"n": n, "i": i, "j": j, "coef": coef_str(p.coeffs[exps])})
    return rows


def table_entries(table):
    rows = []
    for n in range(table.n_max + 1):
        for (i, j) in sorted(table.layer(n)):
            rows.append({"n": n, "i": i, "j": j,
                         "coef": str(table.layer(n)[(i, j)])})
    return rows


def checks_payload(report):
    return [
        {"name": c.name, "pass": c.passed,
         "first_failure_order": c.first_failure_order}
        for c in report.checks
    ]


def to_json_text(payload):
    """Canonical JSON: sorted keys, two-space indent, trailing newline.
    Parsing and re-serializing this text is byte-identical."""
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def to_csv_text(payload):
    lines = ["series,n,i,j,coef"]
    for name in sorted(payload.get("series", {})):
        for row in payload["series"][name]:
            lines.append(f"{name},{row['n']},{row['i']},{row['j']},{row['coef']}")
    return "\n".join(lines) + "\n"


def to_plain_text(payload):
    lines = []
    for key in ("preset", "steps"):
        if payload.get("model", {}).get(key):
            lines.append(f"{key}: {payload['model'][key]}")
    if "order" in payload:
        lines.append(f"order: {payload['order']}")
    for name in sorted(payload.get("series", {})):
        lines.append(f"[{name}]")
        for row in payload["series"][name]:
            lines.append(f"  t^{row['n']} x^{row['i']} y^{row['j']}: {row['coef']}")
    for check in payload.get("checks", []):
        status = "pass" if check["pass"] else "FAIL"
        where = ("" if check["first_failure_order"] is None
                 else f" (first failure at t^{check['first_failure_order']})")
        lines.append(f"check {check['name']}: {status}{where}")
    return "\n".join(lines) + "\n"


def emit(payload, args):
    if args.format == "json":
        text = to_json_text(payload)
    elif args.format == "csv":
        text = to_csv_text(payload)
    else:
        text = to_plain_text(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _model(args):
    """Resolve --preset/--steps into (StepSet or None, is_half_plane,
    model description)."""
    if args.preset:
        name = args.preset.strip().lower()
        if name == "halfplane-square":
            steps = StepSet.preset("square")
            return steps, True, {"preset": name, "steps": [list(s) for s in steps.steps]}
        steps = StepSet.preset(name)
        return steps, False, {"preset": name, "steps": [list(s) for s in steps.steps]}
    steps = StepSet.parse(args.steps)
    return steps, False, {"preset": None, "steps": [list(s) for s in steps.steps]}


def cmd_solve(args):
    steps, half_plane, model = _model(args)
    series = {}
    if half_plane:
        sol = solve_half_plane(args.order)
        series["motzkin"] = series_entries(sol.motzkin)
    else:
        sol = solve(steps, args.order)
        series["bridges"] = series_entries(sol.bridges)
    series["loops"] = series_entries(sol.loops)
    series["axis_walks"] = series_entries(sol.axis_walks)
    series["walks"] = series_entries(sol.walks)
    for j in args.row or ():
        series[f"row_{j}"] = series_entries(sol.walks.extract_y(j))
    payload = {"model": model, "order": args.order, "series": series, "checks": []}
    emit(payload, args)
    return 0


def cmd_count(args):
    steps, half_plane, model = _model(args)
    kind = args.kind
    if half_plane and kind == "slit":
        kind = "upper-slit"
    domain = Domain.UPPER_HALF_PLANE if kind == "upper-slit" or half_plane \
        else Domain.FULL_PLANE
    if kind == "loops":
        seq = count_loops(steps, args.length, domain=domain)
        rows = [{"n": n, "i": 0, "j": 0, "coef": str(c)} for n, c in enumerate(seq)]
    elif kind == "bridges":
        rows = table_entries(count_bridges(steps, args.length))
    elif kind == "all":
        rows = table_entries(count_walks(steps, domain, Constraint.NONE, args.length))
    else:
        rows = table_entries(
            count_walks(steps, domain, Constraint.AVOID_SLIT, args.length)
        )
    if args.end:
        i, j = args.end
        rows = [r for r in rows
                if r["n"] == args.length and r["i"] == i and r["j"] == j]
        if args.format == "text":
            value = rows[0]["coef"] if rows else "0"
            if args.out:
                with open(args.out, "w") as fh:
                    fh.write(value + "\n")
            else:
                sys.stdout.write(value + "\n")
            return 0
    payload = {"model": model, "length": args.length, "kind": kind,
               "series": {"counts": rows}, "checks": []}
    emit(payload, args)
    return 0


def cmd_factorize(args):
    steps, half_plane, model = _model(args)
    if half_plane:
        raise ValueError("factorize works on a step-set model; "
                         "use --preset square for the full-plane lattice")
    b = bilateral_series(steps, args.order)
    fact = canonical_factorize(b)
    payload = {
        "model": model,
        "order": args.order,
        "series": {
            "bilateral": series_entries(b),
            "f0": series_entries(fact.f0),
            "fplus": series_entries(fact.fplus),
            "fminus": series_entries(fact.fminus),
        },
        "checks": [],
    }
    emit(payload, args)
    return 0


def cmd_verify(args):
    steps, half_plane, model = _model(args)
    if half_plane:
        report = verify_half_plane_model(args.order, args.oracle_order)
    else:
        report = verify_model(steps, args.order, args.oracle_order)
    payload = {"model": model, "order": args.order, "series": {},
               "checks": checks_payload(report)}
    emit(payload, args)
    return 0 if report.ok else 1


def cmd_presets(args):
    payload = {"presets": list(PRESET_NAMES)}
    if args.format == "json":
        sys.stdout.write(to_json_text(payload))
    else:
        sys.stdout.write("\n".join(PRESET_NAMES) + "\n")
    return 0


def _parse_end(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("want 'i,j'")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError("want integers 'i,j'") from None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="slitwalks",
        description="Exact enumeration of lattice walks on the slit plane.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order=True):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--preset", help="named model: " + ", ".join(PRESET_NAMES))
        group.add_argument("--steps", help='step list "di,dj;di,dj;..."')
        if order:
            p.add_argument("--order", type=int, default=12,
                           help="truncation order N (default 12)")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("solve", help="loops, axis walks, walks and bridges")
    common(p)
    p.add_argument("--row", type=int, action="append",
                   help="also emit walks ending at this ordinate (repeatable)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("count", help="direct DP walk counts")
    common(p, order=False)
    p.add_argument("--length", type=int, required=True, help="walk length n")
    p.add_argument("--end", type=_parse_end, help="only the endpoint 'i,j'")
    p.add_argument("--kind", choices=("slit", "all", "loops", "bridges", "upper-slit"),
                   default="slit")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("factorize", help="canonical triple of the bilateral series")
    common(p)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("verify", help="full identity and oracle suite")
    common(p)
    p.add_argument("--oracle-order", type=int, default=None,
                   help="order up to which DP oracles are compared")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("presets", help="list named models")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_presets)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CrossCheckError as exc:
        print(f"internal cross-check failure: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
