"""Command-line front end.

Every subcommand parses its inputs, calls one library function and
serializes the result.  Exit codes: 0 success, 1 validation or domain
error (JSON error object on stderr), 2 usage error.

JSON output is wrapped as ``{"schema": 1, "command": ..., "result": ...}``
with sorted keys.  Rationals are written as ``"num/den"`` strings.

TSV column order (frozen):

    fmcount, sweep   m  phi  i_prime_size  fm_exact  lower_bound_num  lower_bound_den  reps
    orbit            j  coords
    iprime           k
    partners         class  rep  members
    stabilizer       a  b  c  d
    validate         rule  passed  message
    threefold        p  h_p0  h_p1  h_p2  h_p3
    family           rep  m  xi  kodaira_dim  euler  picard
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fm_count, moebius, surface, threefold
from .errors import FMError
from .torsion import TorsionPoint, WCFiberKind
from .wc_action import AutAction, orbit

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _range(text: str) -> range:
    try:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None


def _coords(text: str) -> tuple:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")

    point = argparse.ArgumentParser(add_help=False)
    point.add_argument("--config", help="surface config JSON file")
    point.add_argument("--kind", choices=("smooth", "In", "trivial"), help="local group kind at s")
    point.add_argument("--aut", type=int, help="order of the fiber-preserving automorphism group")
    point.add_argument("--m", type=int, help="multiplicity / level of xi")
    point.add_argument("--xi", type=_coords, help="residues of xi, e.g. 1,4")
    point.add_argument("--n1", type=int, help="override n1")

    parser = argparse.ArgumentParser(
        prog="fmnumber",
        description="Fourier-Mukai numbers of rational elliptic surfaces and Schoen 3-folds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate a surface config")
    p.add_argument("--config", required=True)

    sub.add_parser("orbit", parents=[common, point], help="orbit of xi under Aut_0(B/P^1)")
    sub.add_parser("iprime", parents=[common, point], help="the subgroup I' of units mod m")
    sub.add_parser("fmcount", parents=[common, point], help="Fourier-Mukai number or lower bound")
    sub.add_parser("partners", parents=[common, point], help="partner classes (cosets of I')")

    p = sub.add_parser("sweep", parents=[common], help="FM table over a range of m")
    p.add_argument("--kind", choices=("smooth", "In", "trivial"), required=True)
    p.add_argument("--aut", type=int, required=True)
    p.add_argument("--range", dest="m_range", type=_range, required=True, help="A..B inclusive")
    p.add_argument("--n1", type=int, default=1)

    p = sub.add_parser("stabilizer", parents=[common], help="rational Moebius stabilizer")
    p.add_argument("--config")
    p.add_argument("--s", help="fixed point")
    p.add_argument("--points", help="comma-separated point:label pairs, e.g. 0:II*,1:II")
    p.add_argument("--n1", type=int, help="accepted for symmetry; ignored")

    p = sub.add_parser("threefold", parents=[common], help="invariants of a fiber product")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("family", parents=[common], help="Schoen family of N 3-folds")
    p.add_argument("--config", required=True, help="base surface with even multiplicity")
    p.add_argument("--companion", required=True)
    p.add_argument("--N", dest="size", type=int, required=True)
    p.add_argument("--n1", type=int)
    return parser


def _action_and_xi(args):
    """Action and point (plus n1) from ``--config`` or the explicit flags."""
    if args.config:
        cfg = surface.SurfaceConfig.load(args.config)
        if args.n1 is not None:
            cfg = surface.SurfaceConfig(cfg.fibers, cfg.marked, cfg.aut_order, args.n1)
        surface._require_valid(cfg)
        return cfg.action(), cfg.xi(), cfg
    missing = [f"--{n}" for n in ("kind", "aut", "m", "xi") if getattr(args, n) is None]
    if missing:
        raise UsageError("need --config or all of " + ", ".join(missing))
    act = AutAction(args.aut, WCFiberKind(args.kind))
    return act, TorsionPoint(args.m, args.xi), None


def _n1(args, cfg) -> int:
    if args.n1 is not None:
        return args.n1
    if cfg is not None:
        return surface.resolve_n1(cfg)
    return 1


def _tsv(header, rows) -> str:
    lines = ["\t".join(header)] + ["\t".join(str(x) for x in r) for r in rows]
    return "\n".join(lines) + "\n"


def _emit(args, command, result_json, tsv_text, out):
    if args.format == "tsv":
        out.write(tsv_text)
    else:
        payload = {"schema": SCHEMA_VERSION, "command": command, "result": result_json}
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _cmd_validate(args, out):
    cfg = surface.SurfaceConfig.load(args.config)
    rep = surface.validate(cfg)
    rows = [(r, "yes" if ok else "no", msg) for r, ok, msg in rep.checks]
    _emit(args, "validate", rep.to_json(), _tsv(("rule", "passed", "message"), rows), out)
    if not rep.ok:
        raise surface.InvalidConfig("; ".join(f"{r}: {m}" for r, m in rep.failures()), rep)


def _cmd_orbit(args, out):
    act, xi, _ = _action_and_xi(args)
    pts = orbit(act, xi)
    rows = [(j, ",".join(map(str, p.coords))) for j, p in enumerate(pts)]
    res = {"action": act.to_json(), "xi": xi.to_json(), "orbit": [p.to_json() for p in pts]}
    _emit(args, "orbit", res, _tsv(("j", "coords"), rows), out)


def _cmd_iprime(args, out):
    act, xi, _ = _action_and_xi(args)
    sub = fm_count.i_prime(act, xi)
    res = {"action": act.to_json(), "xi": xi.to_json(), "i_prime": sub.to_json(), "size": len(sub)}
    _emit(args, "iprime", res, _tsv(("k",), [(k,) for k in sub]), out)


def _cmd_fmcount(args, out):
    act, xi, cfg = _action_and_xi(args)
    rep = fm_count.fm_number(act, xi, _n1(args, cfg))
    _emit(args, "fmcount", rep.to_json(), _tsv(fm_count.TSV_COLUMNS, [rep.tsv_row()]), out)


def _cmd_partners(args, out):
    act, xi, _ = _action_and_xi(args)
    classes = fm_count.partner_classes(act, xi)
    rows = [(n, c.members[0], ",".join(map(str, c))) for n, c in enumerate(classes)]
    res = {"m": xi.modulus, "classes": [list(c.members) for c in classes], "count": len(classes)}
    _emit(args, "partners", res, _tsv(("class", "rep", "members"), rows), out)


def _cmd_sweep(args, out):
    act = AutAction(args.aut, WCFiberKind(args.kind))
    table = fm_count.sweep(act, None, args.m_range, n1=args.n1)
    _emit(args, "sweep", table.to_json(), table.to_tsv(), out)


def _cmd_stabilizer(args, out):
    if args.config:
        cfg = surface.SurfaceConfig.load(args.config)
        if cfg.marked is None:
            raise UsageError("config has no marked point s")
        s = cfg.marked.s
        labeled = [(t, f.symbol) for t, f in cfg.fibers if f.euler > 0 and t != s]
        bound = moebius.n1_upper_bound(cfg)
    elif args.s is not None and args.points:
        s = moebius.P1Point.parse(args.s)
        labeled = []
        for item in args.points.split(","):
            at, _, label = item.partition(":")
            labeled.append((moebius.P1Point.parse(at), label))
        bound = None
    else:
        raise UsageError("need --config or both --s and --points")
    group = moebius.stabilizer(s, labeled)
    res = {
        "s": str(s),
        "order": len(group),
        "maps": [g.to_row() for g in group],
        "n1_bound": bound.to_json() if bound else None,
    }
    _emit(args, "stabilizer", res, _tsv(("a", "b", "c", "d"), [g.to_row() for g in group]), out)


def _cmd_threefold(args, out):
    a = surface.SurfaceConfig.load(args.first)
    b = surface.SurfaceConfig.load(args.second)
    rep = threefold.fiber_product_invariants(a, b)
    rows = [(p, *rep.diamond.h[p]) for p in range(4)]
    _emit(args, "threefold", rep.to_json(), _tsv(("p", "h_p0", "h_p1", "h_p2", "h_p3"), rows), out)


def _cmd_family(args, out):
    base = surface.SurfaceConfig.load(args.config)
    if args.n1 is not None:
        base = surface.SurfaceConfig(base.fibers, base.marked, base.aut_order, args.n1)
    comp = surface.SurfaceConfig.load(args.companion)
    fam = threefold.schoen_family(base, None, comp, args.size)
    rows = [
        (i, cfg.m, ",".join(map(str, cfg.xi().coords)), r.kodaira_dim, r.euler, r.picard)
        for i, cfg, r in fam.members
    ]
    header = ("rep", "m", "xi", "kodaira_dim", "euler", "picard")
    _emit(args, "family", fam.to_json(), _tsv(header, rows), out)


COMMANDS = {
    "validate": _cmd_validate,
    "orbit": _cmd_orbit,
    "iprime": _cmd_iprime,
    "fmcount": _cmd_fmcount,
    "partners": _cmd_partners,
    "sweep": _cmd_sweep,
    "stabilizer": _cmd_stabilizer,
    "threefold": _cmd_threefold,
    "family": _cmd_family,
}


def _error(exc, err) -> None:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    report = getattr(exc, "report", None)
    if report is not None:
        payload["report"] = report.to_json()
    err.write(json.dumps(payload, sort_keys=True) + "\n")


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"{parser.prog} {args.command}: error: {exc}\n")
        return 2
    except (FMError, ValueError, OSError) as exc:
        _error(exc, err)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
