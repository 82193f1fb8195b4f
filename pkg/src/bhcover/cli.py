"""Command-line front end: ``bh <subcommand> ...``; JSON on stdout or ``--out``."""
from __future__ import annotations

import argparse
import sys

from .coloring import forest_implies_trivial_lift_check, gamma_graph
from .cover import euler_characteristic_total, properties
from .graphcover import build_cover
from .io import (InputError, cover_to_dict, digest, dumps, read_cover, read_gens, read_graph,
                 write_text)
from .lifting import (FAILS, HOLDS, INCONCLUSIVE, HypothesisError, MalformedCut, OrbitLimitExceeded,
                      UnsupportedSignature, adjacent_cut, bh_verdict, essential_flags, fiber_table,
                      region_graph, standard_cut, wcl_decision)
from .orbit import AutomorphismError, mcg_orbit
from .presentation import braid_generators

EXIT_OK, EXIT_FAILS, EXIT_INCONCLUSIVE, EXIT_INVALID, EXIT_LIMIT = 0, 10, 20, 2, 3
STATUS_EXIT = {HOLDS: EXIT_OK, FAILS: EXIT_FAILS, INCONCLUSIVE: EXIT_INCONCLUSIVE}


def _emit(obj, args) -> None:
    text = dumps(obj)
    if getattr(args, "out", None):
        write_text(args.out, text)
    else:
        sys.stdout.write(text)


def _gens(args, cover):
    if getattr(args, "gens", None):
        return read_gens(args.gens)
    return None, None


def _verdict_block(cover, args):
    autos, cuts = _gens(args, cover)
    return bh_verdict(cover, autos, args.limit, cuts, args.workers)


def cmd_analyze(args) -> int:
    cover = read_cover(args.cover)
    chi = euler_characteristic_total(cover)
    report = {
        "format": 1,
        "input_digest": digest(cover_to_dict(cover)),
        "cover": cover_to_dict(cover),
        "properties": properties(cover),
        "total_space": {"chi": chi, "genus": (2 - chi) // 2},
        "fibers": fiber_table(cover),
        "verdict": None,
    }
    code = EXIT_OK
    if chi < 0:
        v = _verdict_block(cover, args)
        report["verdict"] = v.to_dict()
        code = STATUS_EXIT[v.status]
    _emit(report, args)
    return code


def _cut(cover, args):
    if args.pair is not None:
        return adjacent_cut(cover.sig, args.pair)
    if args.m is None:
        raise InputError("give --m M or --pair I")
    return standard_cut(cover.sig, args.m)


def cmd_lift(args) -> int:
    cover = read_cover(args.cover)
    cut = _cut(cover, args)
    lifted = essential_flags(cover, cut)
    _emit({"format": 1, "cut": cut.to_dict(), "components": lifted.to_list(),
           "region_graph": region_graph(cover, cut).to_dict()}, args)
    return EXIT_OK


def cmd_wcl(args) -> int:
    cover = read_cover(args.cover)
    autos, cuts = _gens(args, cover)
    res = wcl_decision(cover, autos, args.limit, cuts, args.workers)
    _emit({"format": 1, **res.to_dict()}, args)
    return EXIT_OK if res.holds else EXIT_FAILS


def cmd_verdict(args) -> int:
    cover = read_cover(args.cover)
    v = _verdict_block(cover, args)
    _emit({"format": 1, **v.to_dict()}, args)
    return STATUS_EXIT[v.status]


def cmd_orbit(args) -> int:
    cover = read_cover(args.cover)
    autos, _ = _gens(args, cover)
    if autos is None:
        autos = braid_generators(cover.sig)
    table = mcg_orbit(cover, autos, args.limit, args.workers)
    _emit({"format": 1, "size": len(table), "classes": [
        {"transversal": list(w), "cover": cover_to_dict(c.canonical)}
        for c, w in zip(table.classes, table.transversal)]}, args)
    return EXIT_OK


def cmd_gamma(args) -> int:
    cover = read_cover(args.cover)
    g = gamma_graph(cover, args.i, args.j)
    out = {"format": 1, **g.to_dict()}
    if abs(args.i - args.j) == 1:
        out["check"] = forest_implies_trivial_lift_check(cover, args.i, args.j)
    _emit(out, args)
    return EXIT_OK


def cmd_from_graph(args) -> int:
    g = read_graph(args.graph)
    cover = build_cover(g)
    _emit(cover_to_dict(cover), args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bh", description="Branched covers of surfaces by monodromy.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, orbit=False):
        p.add_argument("--out", "-o", help="write JSON here instead of stdout")
        if orbit:
            p.add_argument("--limit", type=int, default=100_000, help="maximum orbit size")
            p.add_argument("--gens", help="JSON file with automorphisms and cuts")
            p.add_argument("--workers", type=int, default=1, help="processes for orbit expansion")

    p = sub.add_parser("analyze", help="properties, total space, fibers and verdict")
    p.add_argument("cover")
    common(p, orbit=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("lift", help="lift a standard curve and flag essential components")
    p.add_argument("cover")
    p.add_argument("--m", type=int, help="curve around branch points 1..m")
    p.add_argument("--pair", type=int, help="curve around branch points I and I+1")
    common(p)
    p.set_defaults(func=cmd_lift)

    for name, func, text in (("wcl", cmd_wcl, "decide weak curve lifting"),
                             ("verdict", cmd_verdict, "Birman-Hilden verdict"),
                             ("orbit", cmd_orbit, "orbit of the cover under mapping classes")):
        p = sub.add_parser(name, help=text)
        p.add_argument("cover")
        common(p, orbit=True)
        p.set_defaults(func=func)

    p = sub.add_parser("gamma", help="the bipartite graph of two branch points")
    p.add_argument("cover")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("from-graph", help="build the torus cover of a graph")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_from_graph)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    try:
        return args.func(args)
    except OrbitLimitExceeded as e:
        print(f"bh: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except (InputError, MalformedCut, UnsupportedSignature, HypothesisError, AutomorphismError,
            IndexError, ValueError) as e:
        print(f"bh: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
