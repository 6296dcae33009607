"""Command-line entry point.

Every command prints exactly one JSON document on standard output; diagnostics
go to standard error.  Exit codes: 0 success or admissible, 1 a well-formed
inadmissible verdict, 2 an input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import aut
from .balls import DEFAULT_CAP, aut_tower, grow_ball
from .complex import ComplexError, Graph, complex_from_json, to_colored_graph
from .exact import FactoredNat, factor, format_rat, parse_rat
from .lattice import (BNOrders, QuotientData, bourdon_lattice, building_lattice, c_of_X,
                      derived_bn_orders, s_covolume)
from .law import (LawData, admissible_face_covolume, admissible_vertex_covolume,
                  law_from_links)
from .links import (RegisteredLink, complete_bipartite, petersen,
                    projective_plane_incidence)


class InputError(Exception):
    """Bad user input; reported with exit status 2."""


def _read_json(path: str, stdin=None):
    try:
        if path == "-":
            return json.load(stdin if stdin is not None else sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _factored(text: str) -> FactoredNat:
    text = text.strip()
    try:
        return factor(int(text)) if text.isdigit() else FactoredNat.parse(text)
    except ValueError:
        raise InputError(f"cannot read {text!r} as a positive integer or factorization") from None


def _load_link(path: str, stdin=None) -> Graph | RegisteredLink:
    doc = _read_json(path, stdin)
    if isinstance(doc, dict) and "aut_order" in doc:
        return RegisteredLink.from_json(doc)
    g = complex_from_json(doc)
    if not isinstance(g, Graph):
        raise InputError(f"{path} holds a {g.dim}-complex, expected a link graph")
    return g


def _load_law(path: str, stdin=None) -> LawData:
    doc = _read_json(path, stdin)
    if isinstance(doc, dict) and "primes" in doc:
        return LawData.from_json(doc)
    # a link file stands for the law it generates
    return law_from_links([_load_link(path)])


def _vertex_label(token: str, labels) -> object:
    token = token.strip()
    if token in labels:
        return token
    try:
        return int(token)
    except ValueError:
        return token


# -- verbs ---------------------------------------------------------------

def cmd_link_make(args, stdin) -> tuple[object, int]:
    if args.family == "bipartite":
        if args.m is None or args.n is None:
            raise InputError("--family bipartite needs --m and --n")
        g = complete_bipartite(args.m, args.n)
    elif args.family == "petersen":
        g = petersen()
    else:
        if args.q is None:
            raise InputError("--family pg2 needs --q")
        g = projective_plane_incidence(args.q)
    return g.to_short_json(), 0


def cmd_link_register(args, stdin):
    link = RegisteredLink(args.name, _factored(args.aut_order), _factored(args.fixator_order),
                          args.edges)
    return link.to_json(), 0


def cmd_aut(args, stdin):
    c = complex_from_json(_read_json(args.graph, stdin))
    if isinstance(c, Graph):
        if args.type_preserving and c.types is None:
            raise InputError("--type-preserving needs a graph with declared types")
        cg = c.as_colored(use_types=args.type_preserving)
    else:
        cg = to_colored_graph(c)
    if args.fix:
        points = [_vertex_label(t, cg.index) for t in args.fix.split(",") if t.strip()]
        G = aut.pointwise_fixator(cg, points)
    else:
        G = aut.automorphism_group(cg)
    orbits = [[G.labels[i] for i in orb] for orb in G.orbits()]
    return {
        "order": str(G.factored_order()),
        "generators": [G.cycle_notation(g) for g in G.generators],
        "orbits": orbits,
    }, 0


def cmd_law_derive(args, stdin):
    paths = [p for p in args.links.split(",") if p]
    if not paths:
        raise InputError("--links needs at least one file")
    return law_from_links([_load_link(p, stdin) for p in paths]).to_json(), 0


def cmd_law_check(args, stdin):
    law = _load_law(args.law, stdin)
    x = parse_rat(args.covolume)
    check = admissible_face_covolume if args.face else admissible_vertex_covolume
    verdict = check(law, x)
    return verdict.to_json(), 0 if verdict.admissible else 1


def cmd_covol(args, stdin):
    if args.quotient is None:
        raise InputError("covol needs --quotient, or one of the subcommands canonical, cx")
    q = QuotientData.from_json(_read_json(args.quotient, stdin))
    return {"covolume": format_rat(s_covolume(q, args.dim)), "dim": args.dim}, 0


def cmd_covol_canonical(args, stdin):
    if args.family == "bourdon":
        if None in (args.m, args.n, args.r):
            raise InputError("--family bourdon needs --m, --n and --r")
        q = bourdon_lattice(args.m, args.n, args.r)
    else:
        if args.r is None:
            raise InputError("--family building needs --r")
        if args.orders:
            parts = [int(x) for x in args.orders.split(",")]
            if len(parts) != 4:
                raise InputError("--orders takes B,P1,P2,G")
            q = building_lattice(None, args.r, BNOrders(*parts))
        else:
            if args.link:
                L = _load_link(args.link, stdin)
                if not isinstance(L, Graph):
                    raise InputError("building orders need an explicit link graph")
            elif args.q is not None:
                L = projective_plane_incidence(args.q)
            else:
                raise InputError("--family building needs --q, --link or --orders")
            q = building_lattice(L, args.r, derived_bn_orders(L))
    return q.to_json(), 0


def cmd_covol_cx(args, stdin):
    q = QuotientData.from_json(_read_json(args.quotient, stdin))
    return {"vertex_covolume": format_rat(s_covolume(q, 0)),
            "face_covolume": format_rat(s_covolume(q, 2)),
            "c": format_rat(c_of_X(q))}, 0


def cmd_ball_grow(args, stdin):
    gb = grow_ball(args.m, args.n, args.r, args.radius, cap=args.cap)
    doc = gb.complex.with_labels({gb.center: "center"}).to_json()
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
        counts = [len(gb.complex.ids(k)) for k in range(3)]
        return {"out": args.out, "center": gb.center, "vertices": counts[0],
                "edges": counts[1], "faces": counts[2]}, 0
    return doc, 0


def cmd_ball_tower(args, stdin):
    steps = aut_tower(args.m, args.n, args.r, args.radius, cap=args.cap)
    return [s.to_json() for s in steps], 0


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help=f"ball size cap on m*n*r^radius (default {DEFAULT_CAP})")
    common.add_argument("--format", choices=["json"], default=argparse.SUPPRESS,
                        help="output format (JSON only)")

    p = argparse.ArgumentParser(prog="latcovol", parents=[common],
                                description="Covolume restrictions for lattices of polygonal complexes.")
    verbs = p.add_subparsers(dest="verb", metavar="{link,aut,law,covol,ball}")
    verbs.required = True

    link = verbs.add_parser("link", parents=[common], help="build or register link graphs")
    link_sub = link.add_subparsers(dest="sub", required=True)
    mk = link_sub.add_parser("make", parents=[common])
    mk.add_argument("--family", required=True, choices=["bipartite", "petersen", "pg2"])
    mk.add_argument("--m", type=int)
    mk.add_argument("--n", type=int)
    mk.add_argument("--q", type=int)
    mk.set_defaults(func=cmd_link_make)
    rg = link_sub.add_parser("register", parents=[common])
    rg.add_argument("--name", required=True)
    rg.add_argument("--aut-order", required=True, help="integer or factored form like 2^4*3^2")
    rg.add_argument("--fixator-order", required=True)
    rg.add_argument("--edges", type=int)
    rg.set_defaults(func=cmd_link_register)

    a = verbs.add_parser("aut", parents=[common], help="automorphism group of a graph or complex")
    a.add_argument("--graph", required=True, help="JSON file, or - for stdin")
    a.add_argument("--type-preserving", action="store_true")
    a.add_argument("--fix", help="comma-separated vertex labels to fix pointwise")
    a.set_defaults(func=cmd_aut)

    law = verbs.add_parser("law", parents=[common], help="derive or apply a covolume law")
    law_sub = law.add_subparsers(dest="sub", required=True)
    dv = law_sub.add_parser("derive", parents=[common])
    dv.add_argument("--links", required=True, help="comma-separated link files")
    dv.set_defaults(func=cmd_law_derive)
    ck = law_sub.add_parser("check", parents=[common])
    ck.add_argument("--law", required=True, help="law JSON, or a link file")
    ck.add_argument("--covolume", required=True)
    ck.add_argument("--face", action="store_true")
    ck.set_defaults(func=cmd_law_check)

    cv = verbs.add_parser("covol", parents=[common], help="covolumes of quotient data")
    cv.add_argument("--quotient", help="quotient JSON file, or - for stdin")
    cv.add_argument("--dim", type=int, choices=[0, 2], default=0)
    cv.set_defaults(func=cmd_covol)
    cv_sub = cv.add_subparsers(dest="sub")
    cn = cv_sub.add_parser("canonical", parents=[common])
    cn.add_argument("--family", required=True, choices=["bourdon", "building"])
    cn.add_argument("--m", type=int)
    cn.add_argument("--n", type=int)
    cn.add_argument("--r", type=int)
    cn.add_argument("--q", type=int, help="building on the PG(2,q) incidence graph")
    cn.add_argument("--link", help="building on a user-supplied generalized polygon")
    cn.add_argument("--orders", help="B,P1,P2,G stabiliser orders")
    cn.set_defaults(func=cmd_covol_canonical)
    cx = cv_sub.add_parser("cx", parents=[common])
    cx.add_argument("--quotient", required=True)
    cx.set_defaults(func=cmd_covol_cx)

    b = verbs.add_parser("ball", parents=[common], help="balls of right-angled Bourdon complexes")
    b_sub = b.add_subparsers(dest="sub", required=True)
    for name, func in (("grow", cmd_ball_grow), ("tower", cmd_ball_tower)):
        s = b_sub.add_parser(name, parents=[common])
        s.add_argument("--m", type=int, required=True)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--r", type=int, required=True)
        s.add_argument("--radius", type=int, required=True)
        if name == "grow":
            s.add_argument("--out")
        s.set_defaults(func=func)
    return p


def run(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        # global flags may appear before or after the verb; fill defaults last
        # because parent-parser actions are shared with every subparser
        for name, default in (("cap", DEFAULT_CAP), ("format", "json")):
            if not hasattr(args, name):
                setattr(args, name, default)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        if code != 0:
            json.dump({"error": "usage"}, stdout)
            stdout.write("\n")
        return code
    try:
        doc, code = args.func(args, stdin)
    except (InputError, ComplexError, ValueError, KeyError, OverflowError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        print(f"latcovol: error: {msg}", file=stderr)
        json.dump({"error": str(msg)}, stdout)
        stdout.write("\n")
        return 2
    json.dump(doc, stdout, indent=2)
    stdout.write("\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
