"""Command-line front end.

Exit codes: 0 all good, 1 a verification failed, 2 command-line misuse,
3 input could not be parsed, 4 the algebra is out of the supported range.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys

from .algebra import AlgebraData, algebra_to_dict, format_dimv, length, load_algebra
from .errors import ClusterComplexError, ParseError, UnsupportedAlgebra
from .fixtures import fixture, fixture_names
from .homext import hom_ext
from .measure import (
    descent_step,
    mu,
    verify_descent,
    verify_endos_all,
    verify_rank2_inequality,
    verify_total_order,
)
from .polytope import (
    build_complex,
    rank2_window_complex,
    verify_ap_axioms,
    verify_flag_connected,
)
from .roots import FINITE, RANK2_INFINITE, catalog_for, classify_type, rank2_sequences
from .tilting import enumerate_support_tilting, zero_facet

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 3
EXIT_UNSUPPORTED = 4

CHECK = "✓"
CROSS = "✗"


def _mark(ok: bool) -> str:
    return CHECK if ok else CROSS


def _load(args: argparse.Namespace) -> AlgebraData:
    if args.fixture:
        try:
            return fixture(args.fixture)
        except KeyError as exc:
            raise ParseError(str(exc)) from exc
    try:
        return load_algebra(args.input)
    except ParseError:
        raise
    except ClusterComplexError as exc:
        raise ParseError(f"invalid algebra data: {exc}") from exc


def _add_input(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", help="path to an algebra JSON file")
    group.add_argument("--fixture", help="name of a bundled fixture")


def _cmd_roots(args) -> int:
    algebra = _load(args)
    catalog = catalog_for(algebra, t_max=args.t_max)
    for entry in catalog.entries:
        print(json.dumps({
            "dimv": list(entry.dimv),
            "q": entry.q,
            "component": entry.component,
            "t": entry.t,
            "i": None if entry.vertex is None else entry.vertex + 1,
        }))
    return EXIT_OK


def _cmd_table(args) -> int:
    algebra = _load(args)
    catalog = catalog_for(algebra, t_max=args.t_max)
    labels = [format_dimv(entry.dimv) for entry in catalog.entries]
    writer = csv.writer(sys.stdout)
    writer.writerow([""] + labels)
    for x in catalog.entries:
        cells = []
        for y in catalog.entries:
            h, e = hom_ext(catalog, x, y)
            cells.append(f"{h}/{e}")
        writer.writerow([labels[x.id]] + cells)
    return EXIT_OK


def _cmd_facets(args) -> int:
    algebra = _load(args)
    catalog = catalog_for(algebra, t_max=args.t_max)
    if catalog.kind == FINITE:
        facets = enumerate_support_tilting(catalog)
    else:
        facets = list(rank2_window_complex(catalog).support_tiltings)
    for st in facets:
        print(json.dumps({
            "T": [list(catalog.entries[i].dimv) for i in st.ids],
            "sigma": [v + 1 for v in st.sigma],
        }))
    return EXIT_OK


def _verify_finite(catalog, fmt: str) -> int:
    cx = build_complex(catalog)
    axioms = verify_ap_axioms(cx)
    flags = verify_flag_connected(cx)
    endos = verify_endos_all(catalog)
    descent = verify_descent(catalog)
    checks = {
        "ap1": axioms.ap1,
        "ap2": axioms.ap2,
        "ap4": axioms.ap4,
        "simplicial": axioms.simplicial,
        "strong-flag": flags.ok,
        "endos": endos.ok,
        "descent": descent.ok,
    }
    if fmt == "json":
        print(json.dumps({"facets": len(cx.facets), **{k: bool(v) for k, v in checks.items()}}))
    else:
        parts = [f"facets={len(cx.facets)}"]
        parts += [f"{name} {_mark(ok)}" for name, ok in checks.items()]
        print(" ".join(parts))
    return EXIT_OK if all(checks.values()) else EXIT_VERIFY_FAILED


def _verify_rank2_infinite(algebra, catalog, fmt: str) -> int:
    window = rank2_window_complex(catalog)
    inequality = verify_rank2_inequality(algebra, t_max=catalog.cutoff)
    src, snk = next(iter(algebra.arrows))
    r, s = -algebra.cartan[src][snk], -algebra.cartan[snk][src]
    u, v = algebra.symmetrizer[src], algebra.symmetrizer[snk]
    order = verify_total_order(r, s, u, v, t_max=catalog.cutoff)
    checks = {
        "window-facets": window.facets_expected,
        "interior-ridges": window.interior_ridges_ok,
        "path": window.path_ok,
        "total-order": order.ok,
        "rank2-descent": inequality.ok,
    }
    if fmt == "json":
        print(json.dumps({"facets": len(window.facets), **{k: bool(v) for k, v in checks.items()}}))
    else:
        parts = [f"facets={len(window.facets)}"]
        parts += [f"{name} {_mark(ok)}" for name, ok in checks.items()]
        print(" ".join(parts))
    return EXIT_OK if all(checks.values()) else EXIT_VERIFY_FAILED


def _cmd_verify(args) -> int:
    algebra = _load(args)
    kind = classify_type(algebra)
    if kind == FINITE:
        return _verify_finite(catalog_for(algebra), args.format)
    if kind == RANK2_INFINITE:
        return _verify_rank2_infinite(algebra, rank2_sequences(algebra, args.t_max), args.format)
    raise UnsupportedAlgebra("representation-infinite of rank >= 3")


def _cmd_graph(args) -> int:
    algebra = _load(args)
    catalog = catalog_for(algebra, t_max=args.t_max)
    if catalog.kind == FINITE:
        cx = build_complex(catalog)
    else:
        cx = rank2_window_complex(catalog)
    labels = [cx.face_label(f) for f in cx.facets]
    edges = []
    for i in range(len(cx.facets)):
        for j in range(i + 1, len(cx.facets)):
            if len(cx.facets[i] ^ cx.facets[j]) == 2:
                edges.append((i, j))
    if args.format == "json":
        print(json.dumps({"nodes": labels, "edges": edges}))
    else:
        print("graph exchange {")
        for i, label in enumerate(labels):
            print(f'  f{i} [label="{label}"];')
        for i, j in edges:
            print(f"  f{i} -- f{j};")
        print("}")
    return EXIT_OK


def _cmd_descent(args) -> int:
    algebra = _load(args)
    catalog = catalog_for(algebra)
    zero = zero_facet(catalog)
    all_ok = True
    for st in enumerate_support_tilting(catalog):
        path = [st]
        while path[-1] != zero and len(path) <= len(catalog.entries) ** 2 + 2:
            path.append(descent_step(catalog, path[-1]))
        labels = []
        for facet in path:
            dimvs = ",".join(format_dimv(catalog.entries[i].dimv) for i in facet.ids)
            labels.append(dimvs + "|" + ",".join(str(v + 1) for v in facet.sigma))
        ok = path[-1] == zero
        all_ok = all_ok and ok
        print(f"{'ok ' if ok else 'FAIL'} steps={len(path) - 1}  " + " -> ".join(labels))
    return EXIT_OK if all_ok else EXIT_VERIFY_FAILED


def _cmd_total_order(args) -> int:
    weights = [(args.u, args.v)]
    rng = random.Random(args.seed)
    for _ in range(args.random_weights):
        weights.append((rng.randint(1, 50), rng.randint(1, 50)))
    report = verify_total_order(args.r, args.s, args.u, args.v,
                                t_max=args.t_max, weights=weights)
    if report.ok:
        print(f"ok checked={report.checked}")
        return EXIT_OK
    print(f"FAIL at {report.first_violation}")
    return EXIT_VERIFY_FAILED


def _cmd_g2_demo(args) -> int:
    algebra = fixture("g2")
    catalog = rank2_sequences(algebra, t_max=10)
    dimvs = [entry.dimv for entry in catalog.entries]
    lengths = [length(algebra, d) for d in dimvs]
    mus = [mu(catalog, entry).squared for entry in catalog.entries]
    print("dimv:   " + " ".join(format_dimv(d) for d in dimvs))
    print("length: " + " ".join(str(x) for x in lengths))
    print("mu2:    " + " ".join(str(x) for x in mus))
    facets = enumerate_support_tilting(catalog)
    print(f"facets: {len(facets)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clustercomplex",
        description="Exact verification of tilting-exchange polytopes from Cartan data.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_roots = sub.add_parser("roots", help="emit the catalog as JSON lines")
    _add_input(p_roots)
    p_roots.add_argument("--t-max", type=int, default=10)
    p_roots.set_defaults(func=_cmd_roots)

    p_table = sub.add_parser("table", help="hom/ext lengths as CSV")
    _add_input(p_table)
    p_table.add_argument("--t-max", type=int, default=10)
    p_table.set_defaults(func=_cmd_table)

    p_facets = sub.add_parser("facets", help="support-tilting facets as JSON lines")
    _add_input(p_facets)
    p_facets.add_argument("--t-max", type=int, default=10)
    p_facets.set_defaults(func=_cmd_facets)

    p_verify = sub.add_parser("verify", help="run the full verification battery")
    _add_input(p_verify)
    p_verify.add_argument("--t-max", type=int, default=10)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=_cmd_verify)

    p_graph = sub.add_parser("graph", help="exchange graph export")
    _add_input(p_graph)
    p_graph.add_argument("--t-max", type=int, default=10)
    p_graph.add_argument("--format", choices=("dot", "json"), default="dot")
    p_graph.set_defaults(func=_cmd_graph)

    p_descent = sub.add_parser("descent", help="print the descent path of every facet")
    _add_input(p_descent)
    p_descent.set_defaults(func=_cmd_descent)

    p_order = sub.add_parser("total-order", help="check the rank-2 interleaving chain")
    p_order.add_argument("--r", type=int, required=True)
    p_order.add_argument("--s", type=int, required=True)
    p_order.add_argument("--u", type=int, required=True)
    p_order.add_argument("--v", type=int, required=True)
    p_order.add_argument("--t-max", type=int, default=30)
    p_order.add_argument("--random-weights", type=int, default=0)
    p_order.add_argument("--seed", type=int, default=0)
    p_order.set_defaults(func=_cmd_total_order)

    p_demo = sub.add_parser("g2-demo", help="walk the worked G2 example end to end")
    p_demo.set_defaults(func=_cmd_g2_demo)

    p_fixture = sub.add_parser("fixture", help="print a bundled fixture as JSON")
    p_fixture.add_argument("name", nargs="?", help="fixture name; omit to list")
    p_fixture.set_defaults(func=_cmd_fixture)

    return parser


def _cmd_fixture(args) -> int:
    if not args.name:
        for name in fixture_names():
            print(name)
        return EXIT_OK
    try:
        algebra = fixture(args.name)
    except KeyError as exc:
        raise ParseError(str(exc)) from exc
    print(json.dumps(algebra_to_dict(algebra)))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedAlgebra as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ClusterComplexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
