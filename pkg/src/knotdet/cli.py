"""Command-line front end.

Subcommands: info, det, verify, states, lattice, polytope.  Exit codes:
0 success / certificate pass, 1 verification failure, 2 usage or guard
error, 3 parse error.  All JSON output is canonical (sorted keys, fixed
separators), so identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .alexander import goeritz_determinant, label_universe, state_sum
from .certificate import build_certificate, certificate_json
from .counting import DirectedMultigraph, arborescence_count, hypertree_set
from .diagram import LinkDiagram, build_universe, check_alternating, component_count, parse_pd
from .errors import (
    ClockTheoremViolation,
    KnotdetError,
    MultiComponent,
    NotAlternating,
    PDError,
    NonPlanarEmbedding,
    TooLarge,
)
from .polytope import (
    arborescence_triangulation,
    normalized_volume,
    pulling_triangulation,
    root_polytope,
)
from .states import clock_lattice, default_stars, enumerate_states
from .tait import TaitGraph, checkerboard, orient_universe, tait_graph

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_PARSE = 3

ROUTES = ("all", "states", "alexander", "arborescence", "hypertree", "polytope", "goeritz")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _load_diagram(path: str) -> LinkDiagram:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_pd(fh.read())


def _load_graph(path: str) -> TaitGraph:
    """Bipartite edge list: one edge per line, `black white`."""
    blacks: list = []
    whites: list = []
    edges = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise PDError(f"line {lineno}: expected `black white`, got {raw!r}")
            b, w = tokens
            if b not in blacks:
                blacks.append(b)
            if w not in whites:
                whites.append(w)
            edges.append((b, w, lineno))
    if not edges:
        raise PDError("graph file has no edges")
    if set(blacks) & set(whites):
        raise PDError("a vertex name appears in both classes")
    return TaitGraph(E=tuple(blacks), V=tuple(whites), edges=tuple(edges))


def cmd_info(args) -> int:
    diagram = _load_diagram(args.file)
    universe = build_universe(diagram)
    coloring = checkerboard(universe)
    directed = orient_universe(universe, coloring)
    info = {
        "n": diagram.n,
        "regions": len(universe.regions),
        "components": component_count(diagram, universe),
        "alternating": check_alternating(diagram, universe),
        "black_regions": len(coloring.black_regions()),
        "white_regions": len(coloring.white_regions()),
        "balanced": directed.is_balanced(),
        "hash": diagram.digest(),
    }
    if args.json:
        sys.stdout.write(_dump(info))
    else:
        for key in ("n", "regions", "components", "alternating",
                    "black_regions", "white_regions", "balanced", "hash"):
            print(f"{key}: {info[key]}")
    return EXIT_OK


def _route_values(diagram, which: str) -> dict:
    universe = build_universe(diagram)
    coloring = checkerboard(universe)
    values: dict = {}
    if which in ("all", "states"):
        values["states"] = len(enumerate_states(universe, default_stars(universe)))
    if which in ("all", "alexander"):
        try:
            labels = label_universe(diagram, universe)
            poly = state_sum(universe, default_stars(universe), labels)
            values["alexander"] = abs(poly.evaluate(-1))
        except MultiComponent:
            values["alexander"] = None
            values["alexander_skip"] = "MultiComponent"
    if which in ("all", "arborescence"):
        directed = orient_universe(universe, coloring)
        digraph = DirectedMultigraph.from_directed_universe(directed)
        values["arborescence"] = arborescence_count(digraph, 0)
    if which in ("all", "hypertree"):
        graph = tait_graph(universe, coloring)
        values["hypertree_E"] = len(hypertree_set(graph, "E"))
        values["hypertree_V"] = len(hypertree_set(graph, "V"))
    if which in ("all", "polytope"):
        graph = tait_graph(universe, coloring)
        directed = orient_universe(universe, coloring)
        tri = arborescence_triangulation(graph, directed, 0)
        values["polytope"] = len(tri.simplices)
    if which in ("all", "goeritz"):
        values["goeritz"] = goeritz_determinant(diagram, coloring, universe)
    return values


def cmd_det(args) -> int:
    diagram = _load_diagram(args.file)
    alternating = check_alternating(diagram)
    if not alternating and not args.force:
        print(
            "error: diagram is not alternating; determinant routes need "
            "--force (values then lack determinant semantics)",
            file=sys.stderr,
        )
        return EXIT_VERIFY
    values = _route_values(diagram, args.route)
    payload = {
        "file": args.file,
        "alternating": alternating,
        "determinant_semantics": alternating,
        "route": args.route,
        "values": values,
    }
    if args.json:
        sys.stdout.write(_dump(payload))
    else:
        for key in sorted(values):
            print(f"{key}: {values[key]}")
        if not alternating:
            print("note: non-alternating diagram, values are not determinants")
    return EXIT_OK


def cmd_verify(args) -> int:
    diagram = _load_diagram(args.file)
    cert = build_certificate(diagram)
    if args.json:
        sys.stdout.write(certificate_json(cert))
    else:
        d = cert["diagram"]
        print(f"diagram: n={d['n']} components={d['components']} "
              f"alternating={d['alternating']}")
        routes = cert["routes"]
        print(f"states: {routes['state_count']}")
        print(f"alexander |D(-1)|: {routes['alexander_at_minus1']}")
        print(f"arborescences per root: {routes['arborescences_per_root']}")
        print(f"hypertrees: {routes['hypertrees']}")
        print(f"triangulation sizes: {routes['triangulation_simplices_per_root']}")
        print(f"normalized volume: {routes['normalized_volume']}")
        print(f"goeritz: {routes['goeritz_determinant']}")
        for violation in cert["violations"]:
            print(f"violation: {violation}")
        print(f"verdict: {cert['verdict']}")
    return EXIT_OK if cert["verdict"] == "pass" else EXIT_VERIFY


def cmd_states(args) -> int:
    diagram = _load_diagram(args.file)
    universe = build_universe(diagram)
    states = enumerate_states(universe, default_stars(universe))
    serial = [{str(k): r for k, r in s.as_dict().items()} for s in states]
    if args.json:
        sys.stdout.write(_dump(serial))
    else:
        for s in serial:
            print(" ".join(f"{k}->{s[k]}" for k in sorted(s, key=int)))
    return EXIT_OK


def cmd_lattice(args) -> int:
    diagram = _load_diagram(args.file)
    universe = build_universe(diagram)
    lattice = clock_lattice(universe, default_stars(universe))
    serial = {
        "states": [
            {str(k): r for k, r in s.as_dict().items()} for s in lattice.states
        ],
        "moves": [list(m) for m in lattice.moves],
        "clocked": lattice.clocked_index,
        "counterclocked": lattice.counterclocked_index,
    }
    if args.json:
        sys.stdout.write(_dump(serial))
    else:
        print(f"states: {len(lattice.states)}")
        print(f"moves: {len(lattice.moves)}")
        print(f"clocked: {lattice.clocked_index}")
        print(f"counterclocked: {lattice.counterclocked_index}")
    return EXIT_OK


def cmd_polytope(args) -> int:
    if args.graph:
        graph = _load_graph(args.file)
        p = root_polytope(graph)
        tri = pulling_triangulation(p)
    else:
        diagram = _load_diagram(args.file)
        universe = build_universe(diagram)
        coloring = checkerboard(universe)
        graph = tait_graph(universe, coloring)
        p = root_polytope(graph)
        tri = arborescence_triangulation(graph, orient_universe(universe, coloring), 0)
    try:
        volume = normalized_volume(p)
    except TooLarge:
        volume = None
    serial = {
        "dim": p.dim,
        "vertices": [list(v.coordinates) for v in p.vertices],
        "simplex_count": len(tri.simplices),
        "simplices": [
            {
                "tree_edges": list(s.tree_edges),
                "vertices": [list(v.coordinates) for v in s.vertices],
            }
            for s in tri.simplices
        ],
        "normalized_volume": volume,
    }
    if args.json:
        sys.stdout.write(_dump(serial))
    else:
        print(f"dim: {p.dim}")
        print(f"vertices: {len(p.vertices)}")
        print(f"simplices: {len(tri.simplices)}")
        print(f"normalized volume: {volume}")
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotdet",
        description="Link determinants by independent combinatorial routes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="diagram summary")
    p_info.add_argument("file")
    p_info.add_argument("--json", action="store_true")
    p_info.set_defaults(func=cmd_info)

    p_det = sub.add_parser("det", help="determinant route values")
    p_det.add_argument("file")
    p_det.add_argument("--route", choices=ROUTES, default="all")
    p_det.add_argument("--force", action="store_true",
                       help="allow non-alternating diagrams")
    p_det.add_argument("--json", action="store_true")
    p_det.set_defaults(func=cmd_det)

    p_verify = sub.add_parser("verify", help="full agreement certificate")
    p_verify.add_argument("file")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_states = sub.add_parser("states", help="dump Kauffman states")
    p_states.add_argument("file")
    p_states.add_argument("--json", action="store_true")
    p_states.set_defaults(func=cmd_states)

    p_lattice = sub.add_parser("lattice", help="dump the clock lattice")
    p_lattice.add_argument("file")
    p_lattice.add_argument("--json", action="store_true")
    p_lattice.set_defaults(func=cmd_lattice)

    p_poly = sub.add_parser("polytope", help="root polytope and triangulation")
    p_poly.add_argument("file")
    p_poly.add_argument("--graph", action="store_true",
                        help="read a bipartite edge list instead of PD code")
    p_poly.add_argument("--json", action="store_true")
    p_poly.set_defaults(func=cmd_polytope)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (PDError, NonPlanarEmbedding) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except TooLarge as e:
        print(f"guard: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"cannot read input: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ClockTheoremViolation, NotAlternating, KnotdetError) as e:
        print(f"verification error: {e}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
