"""Command-line interface.

Exit codes: 0 proved / ok, 1 refuted, 2 axiom inconsistency,
3 unknown result, plane or incompatible plane, 4 conditional.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import config, picard, scripts as rp
from .cohomology import DEFAULT_WINDOW, Inconsistency, infer
from .derived import search_nonstandard
from .group_action import UnsupportedAction, make_order7_action, parse_action

EXIT_OK, EXIT_REFUTED, EXIT_INCONSISTENT, EXIT_UNKNOWN, EXIT_CONDITIONAL = 0, 1, 2, 3, 4


def _err(msg: str, code: int) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _resolve_plane(args):
    """Plane from ``--plane-config`` (if its id matches) or the registry."""
    curves = {}
    if getattr(args, "plane_config", None):
        plane, curves = config.load_plane_config(args.plane_config)
        if args.plane in (None, plane.id):
            return plane, curves
    return picard.get_plane(args.plane), curves


def cmd_derive(args) -> int:
    plane, curves = _resolve_plane(args)
    toggles, facts = {}, []
    if args.axioms:
        with open(args.axioms) as fh:
            toggles, facts = config.parse_axiom_file(fh.read(), plane)
    opts = rp.Options.from_toggles(toggles, facts, action=args.action, curve_facts=curves)
    report = rp.replay(args.result_id, plane, opts)
    sys.stdout.write(rp.export(report, args.format, timing=args.timing))
    return {rp.Verdict.PROVED: EXIT_OK, rp.Verdict.REFUTED: EXIT_REFUTED,
            rp.Verdict.CONDITIONAL: EXIT_CONDITIONAL}[report.verdict]


def cmd_results(args) -> int:
    for r in rp.list_results():
        flag = " [G21]" if r["g21_only"] else ""
        print(f"{r['result_id']:16s}{flag:7s} {r['claim']}")
    return EXIT_OK


def cmd_plane_list(args) -> int:
    for pid, p in picard.REGISTRY.items():
        print(f"{pid:8s} H1 = {p.torsion}  |Tor| = {p.torsion.size}  Aut = {p.aut_label}")
    return EXIT_OK


def cmd_plane_info(args) -> int:
    args.plane = args.plane_id
    plane, _ = _resolve_plane(args)
    print(json.dumps(plane.summary(), indent=2))
    return EXIT_OK


def cmd_collection_search(args) -> int:
    plane, _ = _resolve_plane(args)
    action = (parse_action(args.action, plane.torsion) if args.action
              else make_order7_action(plane.torsion.rank))
    result = search_nonstandard(plane, action)
    doc = {"plane": plane.id, "action": args.action or f"rank{plane.torsion.rank}",
           "candidates": result.candidates, "label": result.label,
           "counting_forces_fixed": result.counting_forces_fixed,
           "collections": [c.to_json() for c in result.collections]}
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def cmd_cohomology(args) -> int:
    plane, _ = _resolve_plane(args)
    toggles, facts = {}, []
    if args.axioms:
        with open(args.axioms) as fh:
            toggles, facts = config.parse_axiom_file(fh.read(), plane)
    axioms = list(facts)
    if plane.is_g21 and toggles.get("A1", False):
        from .axioms import a1
        axioms.insert(0, a1(plane))
    coords = config._ints(args.torsion) if args.torsion else None
    cls = plane.cls(args.degree, coords)
    table, d = infer(plane, axioms, [cls], window=(args.window_lo, args.window_hi))
    doc = {"plane": plane.id, "class": cls.to_json(), "chi": table.chi(cls),
           "h": [iv.to_json() for iv in table[cls]], "axioms": d.to_json()["axioms"]}
    if args.trace:
        doc["steps"] = d.to_json()["steps"]
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fakeplanes",
                                 description="Derivation replay for fake projective planes")
    sub = ap.add_subparsers(dest="command", required=True)

    def plane_cfg(p):
        p.add_argument("--plane-config", help="plane config file (key = value)")

    d = sub.add_parser("derive", help="replay a named result")
    d.add_argument("result_id")
    d.add_argument("--plane", required=True)
    d.add_argument("--format", choices=("text", "json"), default="text")
    d.add_argument("--axioms", help="axiom file: 'id = value  # citation' per line")
    d.add_argument("--action", help="rank<k> or trivial (default: representative for the plane)")
    d.add_argument("--timing", action="store_true", help="include wall time in the report")
    plane_cfg(d)
    d.set_defaults(func=cmd_derive)

    r = sub.add_parser("results", help="list the registered results")
    r.set_defaults(func=cmd_results)

    p = sub.add_parser("plane", help="plane registry")
    psub = p.add_subparsers(dest="plane_command", required=True)
    pl = psub.add_parser("list")
    pl.set_defaults(func=cmd_plane_list)
    pi = psub.add_parser("info")
    pi.add_argument("plane_id")
    plane_cfg(pi)
    pi.set_defaults(func=cmd_plane_info)

    c = sub.add_parser("collection", help="exceptional collections")
    csub = c.add_subparsers(dest="collection_command", required=True)
    cs = csub.add_parser("search")
    cs.add_argument("--plane", required=True)
    cs.add_argument("--action", help="rank<k> or trivial")
    plane_cfg(cs)
    cs.set_defaults(func=cmd_collection_search)

    h = sub.add_parser("cohomology", help="infer h^i of one class")
    h.add_argument("--plane", required=True)
    h.add_argument("--degree", type=int, required=True)
    h.add_argument("--torsion", help="comma-separated torsion coordinates")
    h.add_argument("--axioms", help="axiom file; 'A1 = true' injects A1 on G21 planes")
    h.add_argument("--window-lo", type=int, default=DEFAULT_WINDOW[0])
    h.add_argument("--window-hi", type=int, default=DEFAULT_WINDOW[1])
    h.add_argument("--trace", action="store_true", help="include derivation steps")
    plane_cfg(h)
    h.set_defaults(func=cmd_cohomology)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Inconsistency as exc:
        return _err(f"axiom inconsistency: {exc}", EXIT_INCONSISTENT)
    except (rp.UnknownResult, picard.UnknownPlane) as exc:
        return _err(f"unknown result or plane: {exc.args[0]}", EXIT_UNKNOWN)
    except rp.IncompatiblePlane as exc:
        return _err(f"incompatible plane: {exc}", EXIT_UNKNOWN)
    except (config.ConfigError, UnsupportedAction, picard.StructuralError, ValueError) as exc:
        return _err(str(exc), EXIT_UNKNOWN)


if __name__ == "__main__":
    sys.exit(main())
