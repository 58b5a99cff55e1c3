"""Command-line front end: ``hetstir triangle | bell | verify``.

Exit codes: 0 success, 1 identity failure, 2 usage error, 3 Dobinski
iteration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import bellpoly as bp
from . import emit
from . import triangles as tr
from .report import IdentityError
from .ring import format_lampoly, format_rat, format_xpoly, parse_rat
from .suites import SUITES, run_suites

HARD_MAX_N = 200

EXIT_OK, EXIT_IDENTITY, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

TRIANGLE_ROUTES = {
    "stirling2": ("recurrence", "gf"),
    "stirling1_unsigned": ("recurrence", "gf"),
    "stirling1_signed": ("recurrence",),
    "lah": ("closed", "gf"),
    "deg_stirling2": ("gf", "oracle"),
    "deg_stirling1_unsigned": ("gf", "oracle"),
    "het2": ("recurrence", "explicit", "gf", "classical", "oracle"),
    "het1": ("recurrence", "gf", "oracle"),
    "het2_r": tr.R_ROUTES,
}

BELL_CHOICES = ("het",) + bp.BELL_FAMILIES


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    n_max: int = 0
    n: int | None = None
    r: list[int] = field(default_factory=list)
    lam: Fraction | None = None
    x: Fraction | None = None
    format: str = "text"
    tol: float = 1e-9
    suites: list[str] = field(default_factory=lambda: ["all"])
    route: str | None = None
    dobinski: bool = False
    out: str | None = None


def max_n() -> int:
    cap = HARD_MAX_N
    env = os.environ.get("HETSTIR_MAX_N")
    if env:
        try:
            cap = min(cap, int(env))
        except ValueError:
            pass
    return cap


def _lambda_arg(text: str) -> Fraction | None:
    if text == "symbolic":
        return None
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _rat_arg(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _r_list(text: str) -> list[int]:
    try:
        vals = [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad r list {text!r}") from exc
    if not vals or any(v < 1 for v in vals):
        raise argparse.ArgumentTypeError("r values must be integers >= 1")
    return vals


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hetstir", description="Heterogeneous Stirling numbers and Bell polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True):
        sp.add_argument("--lambda", dest="lam", type=_lambda_arg, default=None, help='"symbolic" (default) or p/q')
        if fmt:
            sp.add_argument("--format", choices=("text", "csv", "json"), default="text")
        sp.add_argument("--out", default=None, help="output file (default stdout)")

    t = sub.add_parser("triangle", help="emit a number triangle")
    t.add_argument("--family", choices=tr.FAMILIES, default="het2")
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--r", type=_r_list, default=None)
    t.add_argument("--route", default=None)
    common(t)

    b = sub.add_parser("bell", help="Bell-type polynomials, optionally with the Dobinski sum")
    b.add_argument("--family", choices=BELL_CHOICES, default="het")
    g = b.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--n-max", type=int)
    b.add_argument("--r", type=_r_list, default=None)
    b.add_argument("--x", type=_rat_arg, default=None)
    b.add_argument("--dobinski", action="store_true")
    b.add_argument("--tol", type=float, default=1e-9)
    common(b)

    v = sub.add_parser("verify", help="run identity suites")
    v.add_argument("--suite", default="all", help=f"comma list from: all, {', '.join(SUITES)}")
    v.add_argument("--n-max", type=int, default=12)
    v.add_argument("--r", type=_r_list, default=[1, 2])
    v.add_argument("--tol", type=float, default=1e-9)
    v.add_argument("--out", default=None)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command, out=ns.out)
    if ns.command == "triangle":
        cfg.family, cfg.n_max, cfg.r, cfg.lam = ns.family, ns.n_max, ns.r or [], ns.lam
        cfg.format, cfg.route = ns.format, ns.route
        if (cfg.family == "het2_r") != bool(cfg.r):
            raise UsageError("--r is required for het2_r and only allowed there")
        if len(cfg.r) > 1:
            raise UsageError("triangle takes a single --r value")
        routes = TRIANGLE_ROUTES[cfg.family]
        if cfg.route is not None and cfg.route not in routes:
            raise UsageError(f"route for {cfg.family} must be one of {routes}")
    elif ns.command == "bell":
        cfg.family, cfg.n, cfg.r, cfg.lam, cfg.x = ns.family, ns.n, ns.r or [], ns.lam, ns.x
        cfg.n_max = ns.n if ns.n is not None else ns.n_max
        cfg.format, cfg.tol, cfg.dobinski = ns.format, ns.tol, ns.dobinski
        if cfg.r and (cfg.family != "het" or len(cfg.r) > 1):
            raise UsageError("--r takes one value and applies to the het family only")
        if cfg.dobinski:
            if cfg.family != "het" or cfg.r:
                raise UsageError("--dobinski applies to the plain het family")
            if cfg.lam is None or cfg.lam < 0 or cfg.x is None or cfg.x <= 0:
                raise UsageError("--dobinski needs a fixed --lambda >= 0 and --x > 0")
            if not cfg.tol > 0:
                raise UsageError("--tol must be positive")
    else:
        cfg.n_max, cfg.r, cfg.tol = ns.n_max, ns.r, ns.tol
        cfg.suites = [s.strip() for s in ns.suite.split(",") if s.strip()]
        unknown = [s for s in cfg.suites if s != "all" and s not in SUITES]
        if unknown or not cfg.suites:
            raise UsageError(f"unknown suite(s): {unknown}")
    if cfg.n_max < 0:
        raise UsageError("--n-max must be >= 0")
    if cfg.n_max > max_n():
        raise UsageError(f"--n-max {cfg.n_max} exceeds the cap {max_n()}")
    return cfg


def build_triangle(cfg: RunConfig) -> tr.Triangle:
    fam, N, route = cfg.family, cfg.n_max, cfg.route
    if fam in ("stirling2", "stirling1_unsigned") and route == "gf":
        return tr.classic_gf(fam, N)
    if fam == "lah" and route == "gf":
        return tr.classic_gf(fam, N)
    if fam in tr.CLASSIC_FAMILIES:
        return tr.classic(fam, N)
    if fam in tr.DEGENERATE_FAMILIES:
        return tr.degenerate(fam, N, route or "gf")
    if fam == "het2":
        return {
            None: tr.het2_recurrence,
            "recurrence": tr.het2_recurrence,
            "explicit": tr.het2_explicit_table,
            "gf": tr.het2_gf,
            "classical": tr.het2_via_classical_table,
            "oracle": tr.het2_oracle,
        }[route](N)
    if fam == "het1":
        return {None: tr.het1_recurrence, "recurrence": tr.het1_recurrence, "gf": tr.het1_gf, "oracle": tr.het1_oracle}[route](N)
    return tr.het2_r(N, cfg.r[0], route or "recurrence")


def cmd_triangle(cfg: RunConfig) -> tuple[int, str]:
    tri = build_triangle(cfg)
    return EXIT_OK, emit.WRITERS[cfg.format](tri, cfg.lam)


def _bell_poly(cfg: RunConfig, n: int, cache: dict):
    if cfg.family == "het":
        if cfg.r:
            key = ("r", cfg.r[0])
            if key not in cache:
                cache[key] = tr.het2_r(cfg.n_max, cfg.r[0])
            return bp.het_bell_r(n, cfg.r[0], cache[key])
        if "H" not in cache:
            cache["H"] = tr.het2(cfg.n_max)
        return bp.het_bell(n, cache["H"])
    return bp.classic_bells(cfg.family, n)


def _render_value(poly, cfg: RunConfig) -> str:
    if cfg.x is not None:
        lp = poly.eval_x(cfg.x)
        return format_lampoly(lp) if cfg.lam is None else format_rat(lp.eval(cfg.lam))
    if cfg.lam is not None:
        return format_xpoly(poly.eval_lam(cfg.lam))
    return format_xpoly(poly)


def cmd_bell(cfg: RunConfig) -> tuple[int, str]:
    ns = [cfg.n] if cfg.n is not None else list(range(cfg.n_max + 1))
    cache: dict = {}
    rows = []
    for n in ns:
        row = {"n": n, "value": _render_value(_bell_poly(cfg, n, cache), cfg)}
        if cfg.dobinski:
            try:
                res = bp.dobinski(n, cfg.x, cfg.lam, cfg.tol)
            except bp.DobinskiCapError as exc:
                p = exc.partial
                msg = f"dobinski n={n}: {exc}; partial value {float(p):.17g} after {p.terms} terms"
                return EXIT_CAP, _render_bell(rows, cfg) + msg + "\n"
            row.update(dobinski=f"{float(res):.17g}", bound=f"{res.bound:.3e}", terms=res.terms)
        rows.append(row)
    return EXIT_OK, _render_bell(rows, cfg)


def _render_bell(rows: list[dict], cfg: RunConfig) -> str:
    if cfg.format == "json":
        obj = {"family": cfg.family, "lambda": emit.lambda_label(cfg.lam), "x": None if cfg.x is None else format_rat(cfg.x)}
        if cfg.r:
            obj["r"] = cfg.r[0]
        obj["values"] = rows
        return json.dumps(obj, indent=2) + "\n"
    if cfg.format == "csv":
        keys = list(rows[0]) if rows else ["n", "value"]
        return "\n".join([",".join(keys)] + [",".join(str(r[k]) for k in keys) for r in rows]) + "\n"
    lines = []
    single = cfg.n is not None
    for r in rows:
        lines.append(r["value"] if single else f"{r['n']}\t{r['value']}")
        if "dobinski" in r:
            lines.append(f"dobinski {r['dobinski']} +/- {r['bound']} (terms={r['terms']})")
    return "\n".join(lines) + "\n"


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    try:
        reports = run_suites(cfg.suites, cfg.n_max, cfg.r, cfg.tol)
    except IdentityError as exc:
        return EXIT_IDENTITY, f"FAIL {exc}\n"
    lines = [rep.line() for rep in reports]
    n_fail = sum(1 for rep in reports if not rep)
    lines.append(f"{len(reports) - n_fail} passed, {n_fail} failed")
    return (EXIT_OK if n_fail == 0 else EXIT_IDENTITY), "\n".join(lines) + "\n"


COMMANDS = {"triangle": cmd_triangle, "bell": cmd_bell, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except UsageError as exc:
        parser.error(str(exc))
    try:
        code, text = COMMANDS[cfg.command](cfg)
    except IdentityError as exc:
        code, text = EXIT_IDENTITY, f"identity violation: {exc}\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
