"""Command-line interface: ``polyan <command> [options]``.

Exit status is 0 iff every check performed by the command passed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .. import __version__
from ..bohr import bohr_radius
from ..geometry import arclength_bound, arclength_quadrature, max_modulus, moment_lower_bound, moment_quadrature
from ..landau import landau_R, landau_rho
from ..polyfun import PolyFunction, poly_from_json
from ..reports import DomainError, GenerationError, QuadratureError
from .config import HarnessConfig, load_config
from .generators import FAMILIES, GeneratorSpec, generate
from .suites import SUITES, run_suite, suite_report_json

# Orders of the published reference table.
REFERENCE_ALPHAS = (2, 3, 4, 5, 50, 100)


def _emit(rows: list[dict[str, Any]], fmt: str, out) -> None:
    if fmt == "json":
        payload = rows[0] if len(rows) == 1 else rows
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return
    if not rows:
        return
    keys = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        out.write(buf.getvalue())
        return
    cells = [[_fmt_cell(r[k]) for k in keys] for r in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    out.write("  ".join(k.rjust(w) for k, w in zip(keys, widths)) + "\n")
    for c in cells:
        out.write("  ".join(v.rjust(w) for v, w in zip(c, widths)) + "\n")


def _fmt_cell(v: Any) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_fmt_cell(x) for x in v) + "]"
    return str(v)


def _load_function(path: str) -> PolyFunction:
    return poly_from_json(Path(path).read_text())


def cmd_landau(args, cfg: HarnessConfig, out) -> int:
    res = landau_rho(args.M, args.alpha)
    R1 = landau_R(res.radius, args.M, args.alpha)
    row = {"M": args.M, "alpha": args.alpha, "rho1": res.radius, "R1": R1,
           "residual": res.residual, "bracket": list(res.bracket),
           "covering_informative": R1 > 0}
    _emit([row], args.format, out)
    return 0 if abs(res.residual) <= 1e-12 else 1


def cmd_bohr_table(args, cfg: HarnessConfig, out) -> int:
    if args.alphas == "reference":
        alphas = list(REFERENCE_ALPHAS)
    elif args.alphas:
        alphas = [int(a) for a in args.alphas.split(",")]
    else:
        alphas = list(range(2, args.alpha_max + 1))
    rows = []
    for a in alphas:
        res = bohr_radius(a)
        rows.append({"alpha": a, "radius": res.radius, "residual": res.residual})
    _emit(rows, args.format, out)
    return 0 if all(abs(r["residual"]) <= 1e-12 for r in rows) else 1


def cmd_arclength(args, cfg: HarnessConfig, out) -> int:
    F = _load_function(args.fn)
    quad = arclength_quadrature(F, args.r, cfg.quadrature())
    bound = None
    if F.order >= 2:
        M_r = max(max_modulus(a, args.r) for a in F.components[1:])
        if M_r > 0:
            bound = arclength_bound(F.order, M_r, args.r)
    margin = None if bound is None else bound - quad.value
    row = {"value": quad.value, "bound": bound, "margin": margin, "panels": list(quad.panels)}
    _emit([row], args.format, out)
    return 0 if margin is None or margin >= -cfg.tolerance else 1


def cmd_moments(args, cfg: HarnessConfig, out) -> int:
    F = _load_function(args.fn)
    quad = moment_quadrature(F, args.r, args.p, cfg.quadrature())
    bound = moment_lower_bound(args.p, args.r)
    row = {"value": quad.value, "bound": bound, "margin": quad.value - bound, "panels": list(quad.panels)}
    _emit([row], args.format, out)
    return 0 if row["margin"] >= -cfg.tolerance * bound else 1


def cmd_verify(args, cfg: HarnessConfig, out) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(n, args.trials, cfg.seed, cfg, workers=args.workers) for n in names]
    if args.format == "json":
        out.write(suite_report_json(results, cfg) + "\n")
    else:
        rows = [{"suite": r.suite, "trials": r.trials, "passes": r.passes,
                 "worst_margin": r.worst_margin, "failed_seeds": [s for s, _ in r.failures]}
                for r in results]
        _emit(rows, args.format, out)
    return 0 if all(r.all_passed for r in results) else 1


def cmd_gen(args, cfg: HarnessConfig, out) -> int:
    spec = GeneratorSpec(args.family, alpha=args.alpha, M=cfg.M, truncation=cfg.truncation, seed=cfg.seed)
    obj = generate(spec)
    if isinstance(obj, PolyFunction):
        payload = obj.to_json_obj()
    else:
        payload = {"order": 1, "components": [obj.to_json_obj()]}
    text = json.dumps(payload)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        out.write(text + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common.add_argument("--tolerance", type=float, default=None, help="slack on checked inequalities")
    common.add_argument("--truncation", type=int, default=None, help="series degree for generated functions")
    common.add_argument("--config", default=None, help="key = value config file")
    common.add_argument("--seed", type=int, default=None, help="default: $POLYAN_SEED, then 0")

    parser = argparse.ArgumentParser(prog="polyan", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("landau", parents=[common], help="univalence and covering radii")
    p.add_argument("--M", type=float, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.set_defaults(func=cmd_landau)

    p = sub.add_parser("bohr-table", parents=[common], help="Bohr radius for each order")
    p.add_argument("--alpha-max", type=int, default=100)
    p.add_argument("--alphas", default=None, help="comma list such as 2,3,10, or 'reference' for 2,3,4,5,50,100")
    p.set_defaults(func=cmd_bohr_table)

    p = sub.add_parser("arclength", parents=[common], help="length of the image of |z| = r")
    p.add_argument("--fn", required=True)
    p.add_argument("--r", type=float, required=True)
    p.set_defaults(func=cmd_arclength)

    p = sub.add_parser("moments", parents=[common], help="moment of order p over |z| <= r")
    p.add_argument("--fn", required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--p", type=float, default=0.0)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", parents=[common], help="write one generated function as JSON")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--alpha", type=int, default=2)
    p.add_argument("--M", type=float, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config, seed=args.seed, tolerance=args.tolerance,
                          truncation=args.truncation, M=getattr(args, "M", None))
        return args.func(args, cfg, out)
    except (DomainError, GenerationError, QuadratureError, KeyError, OSError, ArithmeticError) as exc:
        print(f"polyan: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
