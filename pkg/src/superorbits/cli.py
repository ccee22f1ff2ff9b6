"""Command-line interface.

Exit codes: 0 on success, 1 when a verification or consistency check
disagrees, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .characters import check_dim_identity
from .errors import InvalidLabel, InvalidSpec, InvariantMismatch, NotBorelCompatible, UnsupportedFamily
from .families import AlgebraSpec, Family, orbit_labels
from .invariants import (
    DEFAULT_GAMMA_SIGMAS,
    THREADS_ENV,
    k_formula,
    report,
    resolve_p_convention,
    run_ordered,
    verify_family,
)
from .output import FORMATS, render_mapping, render_rows
from .parabolic import (
    GradedParabolic,
    find_good_parabolic,
    goodness_checks,
    induced_numerics,
    is_good,
    richardson_orbit,
)
from .partitions import parse_partition
from .tables import TABLE_NAMES, render_table

ORBIT_COLUMNS = ["family", "params", "mu", "nu", "triple", "tag", "k", "ell", "even_orbit_dim", "superdim", "oracle_k", "agree", "caveat"]
EXCEPTIONAL_COLUMNS = ["name", "eta", "mu", "dim", "k_nu_2", "k_nu_1^2"]
VERIFY_COLUMNS = ["family", "params", "label_text", "k_formula", "k_oracle", "agree"]


class UsageError(Exception):
    pass


def parse_sigma(text: str) -> tuple[Fraction, Fraction, Fraction]:
    try:
        values = tuple(Fraction(v.strip()) for v in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse sigma {text!r}: {exc}") from None
    if len(values) != 3:
        raise UsageError("sigma needs three comma-separated rationals")
    return values  # type: ignore[return-value]


def parse_degrees(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in re.split(r"[,\s]+", text.strip()) if v)
    except ValueError:
        raise UsageError(f"cannot parse degree map {text!r}") from None


def parse_find(values: Sequence[str]):
    """Accept ``(3,1),(2,1)`` as one argument or ``3,1 2,1`` as several."""
    if len(values) == 1 and "(" in values[0]:
        groups = re.findall(r"\(([^()]*)\)", values[0])
    else:
        groups = list(values)
    try:
        return [parse_partition(g) for g in groups]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _make_spec(args) -> AlgebraSpec:
    f = Family(args.family)
    m, n = getattr(args, "m", None), getattr(args, "n", None)
    if f in (Family.GL, Family.SL, Family.OSP):
        if m is None or n is None:
            raise UsageError(f"--m and --n are required for {f.value}")
        return {Family.GL: AlgebraSpec.gl, Family.SL: AlgebraSpec.sl, Family.OSP: AlgebraSpec.osp}[f](m, n)
    if f in (Family.Q, Family.SQ, Family.P):
        if n is None:
            raise UsageError(f"--n is required for {f.value}")
        return AlgebraSpec(f, n=n)
    if f is Family.GAMMA:
        sigma = parse_sigma(args.sigma) if getattr(args, "sigma", None) else DEFAULT_GAMMA_SIGMAS[0]
        return AlgebraSpec.gamma(*sigma)
    return AlgebraSpec(f)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _orbit_row(item) -> dict:
    spec, label, oracle = item
    row = report(spec, label, oracle=oracle).as_row()
    row.update(family=spec.family.value, params=str(spec))
    if "triple" in row:
        row["triple"] = ",".join("{" + p + "}" for p in row["triple"])
    return row


def cmd_orbits(args) -> int:
    spec = _make_spec(args)
    if spec.family in (Family.G3, Family.F4):
        rows = []
        from .families import F4_TABLE, G3_TABLE
        from .invariants import OrbitLabel

        data = G3_TABLE if spec.family is Family.G3 else [(str(eta), mu, d) for eta, mu, d in F4_TABLE]
        for name, mu, dim in data:
            row = {"mu": str(mu), "dim": dim}
            row["name" if spec.family is Family.G3 else "eta"] = name
            for nu in ("2", "1^2"):
                row[f"k_nu_{nu}"] = k_formula(OrbitLabel(spec.family, mu, parse_partition(nu)))
            rows.append(row)
        columns = [c for c in EXCEPTIONAL_COLUMNS if c != ("eta" if spec.family is Family.G3 else "name")]
        _emit(render_rows(rows, columns, args.format, {"family": spec.family.value}), args.out)
        return 0
    items = [(spec, label, not args.no_oracle) for label in orbit_labels(spec)]
    rows = run_ordered(_orbit_row, items)
    _emit(render_rows(rows, ORBIT_COLUMNS, args.format, {"family": spec.family.value, "params": spec.params}), args.out)
    return 0 if all(r["agree"] for r in rows) else 1


def cmd_verify(args) -> int:
    f = Family(args.family)
    if not f.realizable:
        raise UsageError(f"{f.value} has no realization to verify against")
    if args.resolve_interpretation and f is not Family.P:
        raise UsageError("--resolve-interpretation applies to --family p only")
    sigmas = [parse_sigma(s) for s in args.sigma] if args.sigma else None
    if f in (Family.GL, Family.SL, Family.OSP) and (args.max_m is None or args.max_n is None):
        raise UsageError(f"{f.value} sweeps need --max-m and --max-n")
    if f in (Family.Q, Family.SQ, Family.P) and args.max_n is None:
        raise UsageError(f"{f.value} sweeps need --max-n")
    rep = verify_family(f, max_m=args.max_m, max_n=args.max_n, sigmas=sigmas)
    if args.resolve_interpretation:
        rep.notes["p_convention"] = resolve_p_convention(tuple(range(1, min(args.max_n, 3) + 1)))
    if args.format == "json":
        _emit(rep.to_json(indent=2, ensure_ascii=False) + "\n", args.out)
    else:
        rows = [dict(r.__dict__, params=",".join(f"{k}={v}" for k, v in r.params.items())) for r in rep.records]
        text = render_rows(rows, VERIFY_COLUMNS, args.format)
        if "p_convention" in rep.notes:
            text += f"\nresolved P(n) label weight: {rep.notes['p_convention']['resolved']}\n"
        _emit(text, args.out)
    ok = rep.ok and rep.notes.get("p_convention", {}).get("consistent", True)
    return 0 if ok else 1


def _parabolic_from_args(args) -> GradedParabolic:
    f = Family(args.family)
    if f not in (Family.GL, Family.Q, Family.SQ):
        raise UsageError("parabolics are supported for gl, q and sq")
    if (args.degrees is None) == (args.find is None):
        raise UsageError("give exactly one of --degrees or --find")
    if args.find is not None:
        parts = parse_find(args.find)
        if f is Family.GL:
            if len(parts) != 2:
                raise UsageError("--find needs two partitions for gl")
            p = find_good_parabolic(parts[0], parts[1])
        else:
            if len(parts) != 1:
                raise UsageError("--find needs one partition for the q family")
            p = find_good_parabolic(parts[0], family=f)
        if (args.m is not None and args.m != p.m and f is Family.GL) or (args.n is not None and args.n != p.n):
            raise UsageError("partition weights do not match --m/--n")
        return p
    spec = _make_spec(args)
    return GradedParabolic(spec, parse_degrees(args.degrees))


def _parabolic_doc(p: GradedParabolic) -> dict:
    label = richardson_orbit(p)
    k = k_formula(label)
    doc = {
        "family": p.spec.family.value,
        "params": p.spec.params,
        "degrees": list(p.degrees),
        "t": p.t,
        "r": list(p.r),
        "s": list(p.s),
        "levi": p.levi_text(),
        "richardson": label.as_dict(),
        "good": is_good(p),
        "checks": goodness_checks(p),
        "c0": p.c0,
        "c1": p.c1,
        "k": k,
        "ell": (k + 1) // 2,
    }
    return doc


def cmd_parabolic(args) -> int:
    p = _parabolic_from_args(args)
    _emit(render_mapping(_parabolic_doc(p), args.format), args.out)
    return 0


def cmd_induced(args) -> int:
    p = _parabolic_from_args(args)
    numerics = induced_numerics(p, args.dim_lt)
    doc = {"degrees": list(p.degrees), "richardson": richardson_orbit(p).as_dict(), **numerics.as_dict()}
    status = 0
    if not p.is_q and args.dim_lt == 1:
        offset = parse_degrees(args.offset) if args.offset else None
        dim_report = check_dim_identity(p, offset, strict=False)
        doc["dim_identity"] = dim_report.as_dict()
        status = 0 if dim_report.ok else 1
    _emit(render_mapping(doc, args.format), args.out)
    return status


def cmd_table(args) -> int:
    _emit(render_table(args.name, args.format), args.out)
    return 0


def _add_output(p: argparse.ArgumentParser, default: str) -> None:
    p.add_argument("--format", choices=FORMATS, default=default)
    p.add_argument("--out", metavar="PATH", help="write to PATH instead of standard output")


def _add_parabolic_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=["gl", "q", "sq"], default="gl")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--degrees", help="comma-separated degrees over the natural basis, 1-based order")
    p.add_argument("--find", nargs="+", metavar="PARTITION", help="target orbit, e.g. '(3,1),(2,1)'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superorbits",
        description="Clifford-form rank invariants of nilpotent orbits in Lie superalgebras.",
        epilog=f"Set {THREADS_ENV} to run sweeps in that many worker processes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbits", help="list orbits with k, ell and dimensions")
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--sigma", help="gamma parameters as rationals, e.g. 1,1,-2")
    p.add_argument("--no-oracle", action="store_true", help="skip the exact rank evaluation")
    _add_output(p, "markdown")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("verify", help="compare closed forms with exact evaluation")
    p.add_argument("--family", choices=[f.value for f in Family if f.realizable], required=True)
    p.add_argument("--max-m", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--sigma", action="append", help="gamma parameters (repeatable)")
    p.add_argument("--resolve-interpretation", action="store_true", help="report the P(n) label convention test")
    _add_output(p, "json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("parabolic", help="analyse a graded parabolic")
    _add_parabolic_args(p)
    _add_output(p, "markdown")
    p.set_defaults(func=cmd_parabolic)

    p = sub.add_parser("induced", help="numerics of the induced module")
    _add_parabolic_args(p)
    p.add_argument("--dim-lt", type=int, default=1, help="dimension of the inducing module")
    p.add_argument("--offset", help="per-level supertrace twist of the inducing character")
    _add_output(p, "markdown")
    p.set_defaults(func=cmd_induced)

    p = sub.add_parser("table", help="reproduce an exceptional orbit table")
    p.add_argument("name", choices=TABLE_NAMES)
    _add_output(p, "markdown")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, InvalidSpec, InvalidLabel, NotBorelCompatible, UnsupportedFamily, ValueError) as exc:
        print(f"superorbits: error: {exc}", file=sys.stderr)
        return 2
    except InvariantMismatch as exc:
        print(f"superorbits: check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
