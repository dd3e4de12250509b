"""Command line front end.

    catcenter [--spec FILE ...] [--with-suite] [--out FILE] <command> ...

Commands: check, center, adjoints, enumerate, map-to-dist, seed-suite.  The
human summary goes to stdout; ``--out`` writes the full JSON report.  Exit
status is 0 when every law passed, 1 when some law failed and 2 on errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .adjoint import is_autonomous
from .bilax import (
    bimnd_to_dist,
    check_bilax_functor,
    check_bilax_transformation,
    check_dist_cell0,
    check_dist_cell1,
    check_ybo,
    yd_module_to_bimnd,
    yd_to_bilax,
)
from .bimonad import check_bimonad, check_lambda, check_yd_module, enumerate_yd_modules, make_lambda
from .center import check_half_braiding, enumerate_center
from .fincat import category_to_text, validate_category
from .moncat import check_lax_monoidal, identity_monfunctor, validate_moncat
from .report import MalformedError, NotEnumerable, Report, _plain
from .specfile import SpecError, parse_spec
from .suite import data_text, load_suite
from .twocat import all_one_cells, deloop_functor, delooping, enumerate_transformations, regular_bimodule, validate_twocat

SCHEMA_VERSION = 1

# check kind -> (declaration kind, checker)
CHECKS = {
    "category": ("moncat", lambda C: validate_category(C.base)),
    "moncat": ("moncat", validate_moncat),
    "functor": ("monfunctor", check_lax_monoidal),
    "twocat": ("moncat", lambda C: validate_twocat(delooping(C))),
    "bimonad": ("bialgebra", check_bimonad),
    "lambda": ("bialgebra", check_lambda),
    "yd": ("yd", check_yd_module),
    "bilax": ("bilax", check_bilax_functor),
    "bilax-transformation": ("yd", lambda V: check_bilax_transformation(yd_to_bilax(V))),
    "ybo": ("bilax", lambda F: check_ybo(F.ybo())),
}


class CommandError(Exception):
    pass


def _subject(r, name):
    r.subject = f"{name}: {r.subject}" if r.subject else name
    return r


def cmd_check(ws, args):
    kind, checker = CHECKS[args.kind]
    names = args.names or ws.names(kind)
    if not names:
        raise CommandError(f"no {kind} declarations to check")
    reports = []
    for n in names:
        obj = ws.get(n, kind)
        try:
            r = checker(obj)
        except MalformedError as e:
            r = Report(args.kind)
            r.malformed("well-formed input", n, str(e))
        reports.append(_subject(r, n))
    return names, reports, {"checked": len(reports)}


def _twist(ws, name, C, flag):
    if name is None:
        return identity_monfunctor(C)
    F = ws.get(name, "monfunctor")
    if F.source != C or F.target != C:
        raise CommandError(f"{flag} {name} is not an endofunctor of {C.name}")
    return F


def cmd_center(ws, args):
    C = ws.get(args.moncat, "moncat")
    F = _twist(ws, args.right_twist, C, "--right-twist")
    G = _twist(ws, args.left_twist, C, "--left-twist")
    Z = enumerate_center(regular_bimodule(C), F, G, args.side, args.strength)
    reports = [_subject(check_half_braiding(h), f"object {i}") for i, h in enumerate(Z.objects)]
    reports.append(_subject(validate_category(Z.category), "center category"))
    objects = [{"carrier": h.carrier, "components": {str(x): s for x, s in h.components.items()}}
               for h in Z.objects]
    result = {"objects": len(Z.objects), "morphisms": sum(len(v) for v in Z.category.hom.values()),
              "center": objects, "category": Z.category.to_spec()}
    return [args.moncat], reports, result


def cmd_adjoints(ws, args):
    C = ws.get(args.moncat, "moncat")
    K = delooping(C)
    ok, cert = is_autonomous(K)
    r = Report(f"{args.moncat}: adjoints")
    r.check("every 1-cell has a left and a right adjoint", ok, None if ok else cert)
    result = {"autonomous": ok}
    if ok:
        result["adjoints"] = {str(f): {"left": a.adjoint, "right": b.adjoint} for f, (a, b) in cert.items()}
    return [args.moncat], [r], result


def cmd_enumerate(ws, args):
    if args.what == "yd":
        if len(args.names) != 1:
            raise CommandError("enumerate yd takes one bialgebra name")
        B = ws.get(args.names[0], "bialgebra")
        found = enumerate_yd_modules(B, args.dim)
        reports = [_subject(check_yd_module(V), f"structure {i}") for i, V in enumerate(found)]
        result = {"count": len(found),
                  "structures": [{"action": V.action, "coaction": V.coaction} for V in found]}
        return args.names, reports, result
    if len(args.names) != 2:
        raise CommandError("enumerate transformations takes two monoidal functor names F G")
    F, G = (ws.get(n, "monfunctor") for n in args.names)
    if F.source != G.source or F.target != G.target:
        raise CommandError("the two functors must be parallel")
    S, T = delooping(F.source), delooping(F.target)
    ts = enumerate_transformations(deloop_functor(F, S, T), deloop_functor(G, S, T), args.kind)
    fs = list(all_one_cells(S))
    result = {"count": len(ts),
              "transformations": [{"components": [t.one(a) for a in S.zero_cells],
                                   "cells": {str(f): t.cell(f) for f in fs}} for t in ts]}
    return args.names, [], result


def cmd_map_to_dist(ws, args):
    d = ws.decls.get(args.name)
    if d is None:
        raise SpecError(f"unresolved name {args.name!r}", "<command line>")
    if d.kind == "bialgebra":
        B = ws.get(args.name)
        cell = bimnd_to_dist(B)
        r = _subject(check_dist_cell0(cell), args.name)
        result = {"cell": 0, "lambda": make_lambda(B)}
    elif d.kind == "yd":
        cell = bimnd_to_dist(yd_module_to_bimnd(ws.get(args.name)))
        r = _subject(check_dist_cell1(cell), args.name)
        result = {"cell": 1, "carrier": cell.carrier, "psi": cell.psi, "phi": cell.phi}
    else:
        raise CommandError(f"map-to-dist takes a bialgebra or yd name, {args.name!r} is a {d.kind}")
    return [args.name], [r], result


def cmd_seed_suite(ws, args):
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name in ("suite.spec", "s3.spec"):
        (out / name).write_text(data_text(name), encoding="utf-8")
        written.append(name)
    suite = load_suite()
    cats = out / "categories"
    cats.mkdir(exist_ok=True)
    for n in suite.names("moncat"):
        C = suite.get(n)
        if C.is_table:
            (cats / f"{n}.yaml").write_text(category_to_text(C.base), encoding="utf-8")
            written.append(f"categories/{n}.yaml")
    return [str(out)], [], {"written": written}


COMMANDS = {
    "check": cmd_check,
    "center": cmd_center,
    "adjoints": cmd_adjoints,
    "enumerate": cmd_enumerate,
    "map-to-dist": cmd_map_to_dist,
    "seed-suite": cmd_seed_suite,
}


def _global_options(p, default):
    p.add_argument("--spec", action="append", default=default, metavar="FILE",
                   help="structure spec file (repeatable); defaults to the bundled suite")
    p.add_argument("--with-suite", action="store_true", default=default,
                   help="load the bundled suite alongside --spec files")
    p.add_argument("--out", metavar="FILE", default=default, help="write the full JSON report here")


def build_parser():
    p = argparse.ArgumentParser(prog="catcenter", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=f"catcenter {__version__}")
    _global_options(p, None)
    p.set_defaults(spec=[], with_suite=False, out=None)
    sub = p.add_subparsers(dest="command", required=True)
    real_add = sub.add_parser

    def add_parser(name, **kw):
        # global options are accepted after the subcommand too
        c = real_add(name, **kw)
        _global_options(c, argparse.SUPPRESS)
        return c

    sub.add_parser = add_parser

    c = sub.add_parser("check", help="run a law checker on named declarations")
    c.add_argument("kind", choices=sorted(CHECKS))
    c.add_argument("names", nargs="*", help="declaration names (all of the matching kind if omitted)")

    c = sub.add_parser("center", help="enumerate a twisted center of a regular bimodule")
    c.add_argument("moncat")
    c.add_argument("--side", choices=("left", "right"), default="left")
    c.add_argument("--strength", choices=("weak", "strong"), default="weak")
    c.add_argument("--left-twist", metavar="FUNCTOR", help="twist acting on the left (default identity)")
    c.add_argument("--right-twist", metavar="FUNCTOR", help="twist acting on the right (default identity)")

    c = sub.add_parser("adjoints", help="find left and right adjoints of every 1-cell of a delooping")
    c.add_argument("moncat")

    c = sub.add_parser("enumerate", help="exhaustive searches")
    c.add_argument("what", choices=("yd", "transformations"))
    c.add_argument("names", nargs="+")
    c.add_argument("--dim", type=int, default=1, help="carrier dimension for yd")
    c.add_argument("--kind", choices=("colax", "lax"), default="colax", help="for transformations")

    c = sub.add_parser("map-to-dist", help="image in the 2-category of mixed distributive laws")
    c.add_argument("name")

    c = sub.add_parser("seed-suite", help="write the bundled instances to a directory")
    c.add_argument("--dir", required=True)
    return p


def load_workspace(args):
    if not args.spec:
        return load_suite()
    ws = load_suite() if args.with_suite else None
    for path in args.spec:
        w = parse_spec(path)
        ws = w if ws is None else ws.merge(w)
    return ws


def run(args):
    """Execute a parsed command; returns (exit status, report dict)."""
    t0 = time.perf_counter()
    ws = load_workspace(args)
    targets, reports, result = COMMANDS[args.command](ws, args)
    ok = all(r.ok for r in reports)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "command": args.command,
        "targets": list(targets),
        "ok": ok,
        "reports": [r.to_dict() for r in reports],
        "result": _plain(result),
        "timing": {"seconds": round(time.perf_counter() - t0, 6)},
    }
    return (0 if ok else 1), doc, reports


def _summary(doc, reports):
    lines = [r.summary() for r in reports]
    res = doc["result"]
    if isinstance(res, dict):
        for k in ("objects", "count", "autonomous", "written"):
            if k in res:
                lines.append(f"{k}: {res[k]}")
    lines.append(f"{doc['command']} {' '.join(map(str, doc['targets']))}: {'PASS' if doc['ok'] else 'FAIL'}")
    return "\n".join(lines)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        status, doc, reports = run(args)
    except (SpecError, MalformedError, NotEnumerable, CommandError, OSError) as e:
        print(f"catcenter: error: {e}", file=sys.stderr)
        return 2
    print(_summary(doc, reports))
    if args.out:
        Path(args.out).write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return status


if __name__ == "__main__":
    sys.exit(main())
