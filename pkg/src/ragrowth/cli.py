"""Command-line interface.

    ragrowth clique-poly GRAPH
    ragrowth spherical GRAPH --structure raag --rational --series 10
    ragrowth geodesic GRAPH --structure racg --link-regular
    ragrowth verify GRAPH --depth 6
    ragrowth link-regular GRAPH
    ragrowth relations GRAPH --order 10

GRAPH is a JSON file ``{"nodes": m, "edges": [[i, j], ...]}`` or a text
file with a ``nodes m`` line and ``edge i j`` lines.  Output is JSON unless
``--pretty`` is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations
from typing import Callable, Sequence

from .arith import RationalFunction, Series, series_expand
from .geodesic import geodesic_gf_exact, geodesic_transfer_matrix, geodesic_type_series
from .graph import Graph, GraphFormatError, clique_polynomial, enumerate_cliques, load_graph
from .graph import link_regular_profile
from .link_regular import (geodesic_gf_link_regular, reduced_start_vector,
                           reduced_transfer_matrix)
from .oracle import OracleCapExceeded, count_elements_by_type, count_geodesics_by_type
from .resolvent import resolvent_apply, resolvents_agree
from .spherical import (spherical_gf_closed, spherical_gf_restricted,
                        spherical_transfer_matrix, spherical_type_series, start_vector,
                        verify_functional_relations)
from .tables import Structure

DEFAULT_SERIES_ORDER = 10
RESOLVENT_CHECK_ORDER = 12


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _series_text(s: Series) -> str:
    return ", ".join(str(c) for c in s)


def _render_gf(args, rational: RationalFunction, series: Callable[[int], Series]) -> str:
    want_series = args.series is not None
    want_rational = args.rational or not want_series
    rf = rational
    ser = series(args.series) if want_series else None
    if args.pretty:
        lines = []
        if want_rational:
            lines.append(rf.pretty())
        if ser is not None:
            lines.append(_series_text(ser))
        return "\n".join(lines)
    if want_rational and ser is not None:
        return _dump({"rational": rf.to_json(), "series": ser.to_json()})
    return _dump(rf.to_json() if want_rational else ser.to_json())


def _parse_nodes(text: str, g: Graph) -> list[int]:
    try:
        nodes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--allowed expects comma-separated node labels, got {text!r}") from None
    bad = [v for v in nodes if not 1 <= v <= g.m]
    if bad:
        raise UsageError(f"--allowed names nodes outside 1..{g.m}: {bad}")
    return nodes


def cmd_clique_poly(args, g: Graph) -> int:
    p = clique_polynomial(g)
    print(p.pretty() if args.pretty else _dump({"clique_polynomial": [str(c) for c in p]}))
    return 0


def cmd_spherical(args, g: Graph) -> int:
    s = Structure(args.structure)
    if args.allowed is not None:
        allowed = _parse_nodes(args.allowed, g)
        rf = spherical_gf_restricted(g, s, allowed)
        series = lambda n: spherical_type_series(g, s, max(n, 1)).restricted_series(allowed).truncate(n)
    else:
        rf = spherical_gf_closed(g, s)
        series = lambda n: spherical_type_series(g, s, max(n, 1)).totals_series().truncate(n)
    print(_render_gf(args, rf, series))
    return 0


def cmd_geodesic(args, g: Graph) -> int:
    s = Structure(args.structure)
    if args.link_regular:
        profile = link_regular_profile(g)
        if profile is None:
            raise UsageError("--link-regular given but the graph is not link-regular")
        rf = geodesic_gf_link_regular(profile, s)

        def series(n: int) -> Series:
            vecs = resolvent_apply(reduced_transfer_matrix(profile, s),
                                   reduced_start_vector(profile, s), n) if profile.d else []
            return Series([1] + [sum(v) for v in vecs], n)
    else:
        rf = geodesic_gf_exact(g, s)
        series = lambda n: geodesic_type_series(g, s, max(n, 1)).totals_series().truncate(n)
    print(_render_gf(args, rf, series))
    return 0


def cmd_link_regular(args, g: Graph) -> int:
    profile = link_regular_profile(g)
    if args.pretty:
        print("not link-regular" if profile is None
              else f"m={profile.m} d={profile.d} L={list(profile.L)}")
    else:
        print(_dump({"link_regular": False} if profile is None
                    else {"link_regular": True, **profile.to_json()}))
    return 0


def cmd_relations(args, g: Graph) -> int:
    report = verify_functional_relations(g, args.order)
    if args.pretty:
        for name in report.checked:
            bad = [m for m in report.mismatches if m.relation == name]
            print(f"{'PASS' if not bad else 'FAIL'} {name}")
            for m in bad:
                where = "total" if m.clique is None else f"type {list(m.clique)}"
                print(f"    {where}, t^{m.n}: expected {m.expected}, got {m.got}")
    else:
        print(_dump(report.to_json()))
    return 0 if report.ok else 1


def run_checks(g: Graph, depth: int, order: int = DEFAULT_SERIES_ORDER) -> list[dict]:
    """Every formula-versus-oracle comparison for one graph."""
    checks: list[dict] = []

    def record(name: str, ok: bool, detail: str = "") -> None:
        checks.append({"name": name, "ok": bool(ok), "detail": detail})

    idx = enumerate_cliques(g)
    profile = link_regular_profile(g)
    for s in Structure:
        sph = spherical_type_series(g, s, depth)
        elements = count_elements_by_type(g, s, depth)
        record(f"{s.value}: element counts by type", sph == elements,
               f"oracle totals {elements.totals()}")
        closed = spherical_gf_closed(g, s)
        record(f"{s.value}: closed spherical form", series_expand(closed, depth) == sph.totals_series())

        geo = geodesic_type_series(g, s, depth)
        words = count_geodesics_by_type(g, s, depth)
        record(f"{s.value}: reduced word counts by type", geo == words,
               f"oracle totals {words.totals()}")
        exact = geodesic_gf_exact(g, s)
        record(f"{s.value}: exact geodesic form", series_expand(exact, depth) == geo.totals_series())

        bad = [list(M) for r in range(g.m + 1) for M in combinations(g.nodes, r)
               if series_expand(spherical_gf_restricted(g, s, M), depth)
               != elements.restricted_series(M)]
        record(f"{s.value}: restricted identity over all node subsets", not bad,
               f"failing subsets {bad}" if bad else "")

        for label, M, v1 in (("spherical", spherical_transfer_matrix(g, s, idx), start_vector(idx, s)),
                             ("geodesic", geodesic_transfer_matrix(g, s, idx), start_vector(idx, s))):
            record(f"{s.value}: {label} resolvent, closed vs iterated",
                   resolvents_agree(M, v1, RESOLVENT_CHECK_ORDER))

        if profile is not None:
            record(f"{s.value}: link-regular fast path", geodesic_gf_link_regular(profile, s) == exact)

    record("monoid: every word is geodesic",
           geodesic_gf_exact(g, Structure.MONOID) == RationalFunction(1, (1, -g.m)))
    rel = verify_functional_relations(g, order)
    record("functional relations", rel.ok, f"{len(rel.mismatches)} mismatching coefficients")
    return checks


def cmd_verify(args, g: Graph) -> int:
    checks = run_checks(g, args.depth)
    ok = all(c["ok"] for c in checks)
    if args.pretty:
        for c in checks:
            print(f"{'PASS' if c['ok'] else 'FAIL'} {c['name']}")
    else:
        print(_dump({"ok": ok, "depth": args.depth, "checks": checks}))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ragrowth",
        description="Growth series of graph monoids, right-angled Artin and Coxeter groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("graph", help="graph file (JSON or text)")
        p.add_argument("--pretty", action="store_true", help="human-readable output")
        p.set_defaults(func=func)
        return p

    add("clique-poly", cmd_clique_poly, "clique polynomial")
    for name, func, help in (("spherical", cmd_spherical, "spherical growth series"),
                             ("geodesic", cmd_geodesic, "geodesic growth series")):
        p = add(name, func, help)
        p.add_argument("--structure", required=True, choices=[s.value for s in Structure])
        p.add_argument("--rational", action="store_true", help="print the rational function")
        p.add_argument("--series", type=int, nargs="?", const=DEFAULT_SERIES_ORDER, metavar="N",
                       help=f"print coefficients through t^N (default {DEFAULT_SERIES_ORDER})")
        if name == "spherical":
            p.add_argument("--allowed", metavar="i,j,...",
                           help="only elements whose type lies in these nodes")
        else:
            p.add_argument("--link-regular", action="store_true",
                           help="use the link-profile method (graph must be link-regular)")
    p = add("verify", cmd_verify, "check every formula against brute-force enumeration")
    p.add_argument("--depth", type=int, default=6, help="enumeration depth (default 6)")
    add("link-regular", cmd_link_regular, "link profile, if the graph is link-regular")
    p = add("relations", cmd_relations, "check the functional relations between structures")
    p.add_argument("--order", type=int, default=DEFAULT_SERIES_ORDER)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in ("series", "depth", "order"):
        val = getattr(args, flag, None)
        if val is not None and val < (1 if flag == "depth" else 0):
            print(f"ragrowth: error: --{flag} is out of range: {val}", file=sys.stderr)
            return 2
    try:
        g = load_graph(args.graph)
        return args.func(args, g)
    except (OSError, GraphFormatError, UsageError, OracleCapExceeded) as exc:
        print(f"ragrowth: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
