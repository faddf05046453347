"""hatlab command line: construct, analyze, aut, iso, classes, census, cover."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import census as census_mod
from .autgroup import automorphism_group, are_isomorphic, transitivity_profile
from .covers import VerificationFailure, VoltageSpec, build_cover, construction59, construction_sec6
from .families import DegenerateAdjacency, InvalidParams, MetaParams, build, parse_params
from .graphcore import Graph, GraphError, girth
from .hat import NotHalfArcTransitive, UnclassifiedCycle, alternating_structure, attachment_class
from .hat import classify_8cycles, hat_orientation
from .metaclass import class_membership, classify_repr, UnclassifiableQuotient

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(text: str) -> tuple[Graph, MetaParams | None]:
    try:
        p = parse_params(text)
    except ValueError:
        p = None
    if p is not None:
        try:
            return build(p), p
        except InvalidParams as exc:
            raise UsageError("; ".join(exc.violations)) from None
        except DegenerateAdjacency as exc:
            raise UsageError(str(exc)) from None
    path = Path(text)
    if path.is_file():
        try:
            return Graph.read(path), None
        except GraphError as exc:
            raise UsageError(f"{text}: {exc}") from None
    raise UsageError(f"{text!r} is neither a parameter string nor a HATG file")


def double_cover(g: Graph) -> Graph:
    """Canonical double cover: the tensor product with K_2."""
    n = g.order
    return Graph(2 * n, [(u, v + n) for u, v in g.edges()] + [(v, u + n) for u, v in g.edges()])


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n", encoding="ascii")
    else:
        print(text)


def cmd_construct(args) -> int:
    g, _ = _load(args.params)
    if args.output:
        g.write(args.output)
    else:
        sys.stdout.write(g.to_hatg())
    return EXIT_OK


def analyze_graph(g: Graph, params: MetaParams | None, seed: int = 0) -> dict:
    aut = automorphism_group(g, seed=seed)
    prof = transitivity_profile(g, aut)
    rep = {
        "order": g.order,
        "size": g.size,
        "aut_order": aut.group.order(),
        "transitivity_profile": prof.as_dict(),
        "stabilizer_order": aut.group.order() // g.order if prof.vertex else None,
        "radius": None,
        "attachment_number": None,
        "attachment_class": None,
    }
    if params is not None:
        rep["params"] = str(params)
    try:
        o = hat_orientation(g, aut)
    except NotHalfArcTransitive:
        return rep
    alt = alternating_structure(g, o)
    rep.update(radius=alt.radius, attachment_number=alt.attachment_number, attachment_class=attachment_class(alt))
    rep["girth"] = girth(g)
    if params is not None and params.family == "Y":
        try:
            rep["eight_cycle_types"] = classify_8cycles(g, o, params)
        except UnclassifiedCycle as exc:
            rep["eight_cycle_types"] = {"error": str(exc)}
    return rep


def cmd_analyze(args) -> int:
    g, p = _load(args.input)
    _emit(analyze_graph(g, p, args.seed), args.output)
    return EXIT_OK


def cmd_aut(args) -> int:
    g, _ = _load(args.input)
    aut = automorphism_group(g, seed=args.seed)
    obj = {
        "order": g.order,
        "aut_order": aut.group.order(),
        "stabilizer_order": aut.stabilizer_order,
        "generators": [gen.images.tolist() for gen in aut.group.generators],
        "canonical_labeling": list(aut.canonical_labeling),
    }
    _emit(obj, args.output)
    return EXIT_OK


def cmd_iso(args) -> int:
    g1, _ = _load(args.first)
    g2, _ = _load(args.second)
    ok, phi = are_isomorphic(g1, g2)
    _emit({"isomorphic": ok, "witness": phi}, args.output)
    return EXIT_OK


def cmd_classes(args) -> int:
    g, _ = _load(args.input)
    if args.double_cover:
        g = double_cover(g)
    aut = automorphism_group(g, seed=args.seed)
    res = class_membership(g, aut, args.budget)
    reps = []
    for w in res.reprs:
        try:
            label = classify_repr(g, w).label
        except UnclassifiableQuotient:
            label = None
        reps.append({"m": w.m, "n": w.n, "r": w.r, "strict": w.is_strict, "class": label})
    obj = {
        "classes": sorted(res.class_set - {"unclassified"}),
        "exhaustive": res.exhaustive,
        "examined": res.examined,
        "budget_exceeded": not res.exhaustive,
        "representations": reps,
    }
    _emit(obj, args.output)
    return EXIT_OK


def cmd_census(args) -> int:
    jobs = args.jobs
    report = census_mod.run_census_report(args.max_order, prefilter=not args.no_prefilter, jobs=jobs)
    status = EXIT_OK
    if args.no_prefilter:
        filtered = census_mod.run_census_report(args.max_order, prefilter=True, jobs=jobs)
        if [r.canonical_form for r in filtered.rows] != [r.canonical_form for r in report.rows]:
            print("prefilter changed the survivor set", file=sys.stderr)
            status = EXIT_VERIFY
    if args.out:
        census_mod.write_csv(report.rows, args.out)
    else:
        census_mod.write_csv(report.rows, sys.stdout)
    print(f"{len(report.rows)} graphs from {report.survivors} candidates", file=sys.stderr)
    return status


def cmd_cover(args) -> int:
    try:
        base_p = parse_params(args.base)
    except ValueError:
        base_p = None
    full = args.verify == "full"
    try:
        if base_p is not None and str(base_p) == "Y(4,48;13,44)":
            rep = construction59(args.p, verify=args.verify)
        elif base_p is not None and str(base_p) == "Z(20,5;9,2)":
            rep = construction_sec6(args.p, verify=args.verify)
        else:
            base, _ = _load(args.base)
            o = hat_orientation(base)
            cover = build_cover(VoltageSpec.constant(base, o, args.p, 1))
            obj = {"order": cover.graph.order, "connected": cover.connected, "girth": girth(cover.graph)}
            if full and cover.graph.order <= 1000:
                obj.update(analyze_graph(cover.graph, None, args.seed))
            if args.graph_out:
                cover.graph.write(args.graph_out)
            _emit(obj, args.output)
            return EXIT_OK
    except VerificationFailure as exc:
        if exc.report is not None:
            _emit(exc.report.as_dict(), args.output)
        print(str(exc), file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.graph_out:
        rep.cover.graph.write(args.graph_out)
    _emit(rep.as_dict(), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hatlab", description=__doc__)
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized group algorithms")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="write a family graph in HATG v1")
    p.add_argument("params")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="JSON report of symmetry and alternating-cycle structure")
    p.add_argument("input", help="parameter string or HATG file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("aut", help="automorphism group generators")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("iso", help="isomorphism test with witness")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("classes", help="class membership over weak metacirculant representations")
    p.add_argument("input")
    p.add_argument("--budget", type=int, default=10**6)
    p.add_argument("--double-cover", action="store_true", help="use the canonical double cover of the input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("census", help="Class II graphs that are not tightly attached")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $HATLAB_JOBS or CPU count)")
    p.add_argument("--no-prefilter", action="store_true", help="skip the arithmetic prefilter and cross-check")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("cover", help="Z_p voltage cover of a base graph")
    p.add_argument("--base", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--verify", choices=("full", "structural"), default="full")
    p.add_argument("--graph-out", help="write the cover graph in HATG v1")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_cover)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        ap.error("--jobs must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hatlab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
