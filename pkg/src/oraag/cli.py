"""Command-line interface: ``oraag <command> [options] [graph-file|-]``.

Exit codes: 0 success, 1 input or usage error, 2 a verification suite
found a counterexample, 3 invalid graph under ``--strict``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .catalog import CATALOG
from .chordal import amalgam_decomposition, amalgam_to_dict, clique_tree_cip, is_chordal, maximal_cliques, render_amalgam
from .classify import decompose_elementary, render_tree, tree_to_dict
from .cohomology import cohomology_report
from .enumeration import SUITES, EnumerationSpec, enumerate_oriented
from .errors import InvalidGraphError, NotChordal, NotElementaryType, NotSpeciallyOriented, OraagError
from .graph import check, edge_classification, naive_projection
from .group import (
    LinearOrientation,
    abelianization_formula,
    abelianization_oracle,
    classification_report,
    locally_uniform_quotient,
    presentation,
    to_labelled_graph,
)

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE, EXIT_INVALID = 0, 1, 2, 3

GRAPH_HELP = """\
graph input (file path or '-' for stdin), text format:
  vertex <id> ordinary|special
  arc <from> <to>
  edge <a> <b>          # both arcs
or JSON: {"vertices": [{"id": ..., "kind": ...}], "arcs": [[from, to], ...]}
or catalog:<name> for a built-in example graph
"""


class UsageError(Exception):
    pass


def _emit(payload, text: str, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text.rstrip("\n"))


def _read(path: str) -> str:
    if path.startswith("catalog:"):
        name = path.split(":", 1)[1]
        if name not in CATALOG:
            raise UsageError(f"unknown catalog graph {name!r}; known: {', '.join(sorted(CATALOG))}")
        return formats.dumps_text(CATALOG[name]())
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _orientation(args) -> LinearOrientation:
    return LinearOrientation.parse(args.prime, args.lam, args.precision)


def _load(args):
    """Return ``(graph, violations)``; the graph is ``None`` if invalid."""
    raw = formats.parse_raw(_read(args.graph))
    violations = check(raw)
    if violations:
        return raw, None, violations
    return raw, formats.validate(raw), []


def _invalid(args, violations) -> int:
    payload = {"valid": False, "violations": [v.to_dict() for v in violations]}
    text = "invalid graph:\n" + "\n".join(f"  {v}" for v in violations)
    _emit(payload, text, args.json)
    return EXIT_INVALID if args.strict else EXIT_USAGE


def cmd_validate(args) -> int:
    _, g, violations = _load(args)
    if violations:
        return _invalid(args, violations)
    cls = edge_classification(g)
    payload = {
        "valid": True,
        "graph": formats.to_dict(g),
        "edges": [{"arc": list(a), "type": t} for a, t in cls.items()],
    }
    text = "valid\n" + "\n".join(f"  {a[0]} -> {a[1]}: {t}" for a, t in cls.items())
    _emit(payload, text, args.json)
    return EXIT_OK


def cmd_classify(args) -> int:
    raw, g, violations = _load(args)
    report = classification_report(g if g is not None else raw, _orientation(args))
    payload = report.to_dict()
    lines = [f"{name:24s} {v.value:8s} [{v.citation}]" for name, v in report.verdicts.items()]
    _emit(payload, "\n".join(lines), args.json)
    if violations and args.strict:
        return EXIT_INVALID
    return EXIT_OK


def cmd_decompose(args) -> int:
    _, g, violations = _load(args)
    if violations:
        return _invalid(args, violations)
    try:
        tree = decompose_elementary(g)
    except NotElementaryType as exc:
        w = exc.witness
        payload = {"elementary_type": False, "witness": None if w is None else w.to_dict()}
        text = "not of elementary type"
        if w is not None:
            text += f": {w.kind} on {', '.join(w.vertices)}"
        _emit(payload, text, args.json)
        return EXIT_OK
    _emit({"elementary_type": True, "tree": tree_to_dict(tree)}, render_tree(tree), args.json)
    return EXIT_OK


def cmd_cliques(args) -> int:
    _, g, violations = _load(args)
    if violations:
        return _invalid(args, violations)
    ng = naive_projection(g)
    cliques = maximal_cliques(ng)
    chordal, cycle = is_chordal(ng)
    tree = clique_tree_cip(ng)
    payload = {
        "cliques": [list(c) for c in cliques],
        "chordal": chordal,
        "tree": None if tree is None else tree.to_dict(),
    }
    lines = [f"maximal cliques ({len(cliques)}):"] + [f"  {i}: {{{', '.join(c)}}}" for i, c in enumerate(cliques)]
    if chordal:
        lines.append("clique tree: " + ", ".join(f"{i}-{j}" for i, j in tree.edges))
        try:
            amalgam = amalgam_decomposition(g)
        except (NotSpeciallyOriented, NotChordal):
            amalgam = None
        if amalgam is not None:
            payload["amalgam"] = amalgam_to_dict(amalgam)
            lines.append(render_amalgam(amalgam))
    else:
        payload["chordless_cycle"] = cycle
        lines.append("not chordal; chordless cycle: " + " - ".join(cycle))
    _emit(payload, "\n".join(lines), args.json)
    return EXIT_OK


def cmd_cohomology(args) -> int:
    _, g, violations = _load(args)
    if violations:
        return _invalid(args, violations)
    payload = cohomology_report(g, args.max_degree, args.dual)
    lines = [f"hilbert: {payload['hilbert']}  (basis: cliques, {payload['theorem']})"]
    if payload["degrees_ge_3_conjectural"]:
        lines.append("degrees >= 3 conjectural")
    if "dual" in payload:
        lines.append(f"dual series: {payload['dual']['coefficients']}  [{payload['dual']['label']}]")
    _emit(payload, "\n".join(lines), args.json)
    return EXIT_OK


def cmd_present(args) -> int:
    _, g, violations = _load(args)
    if violations:
        return _invalid(args, violations)
    lam = _orientation(args)
    pres = presentation(g, lam)
    if args.format == "fpgroup":
        sys.stdout.write(pres.to_fpgroup())
        return EXIT_OK
    payload = pres.to_dict()
    payload["orientation"] = lam.to_dict()
    payload["labelled_arcs"] = [
        {"arc": [a.origin, a.terminus], "label": [str(x) for x in a.label]} for a in to_labelled_graph(g, lam)
    ]
    print(json.dumps(payload, sort_keys=True, indent=2))
    return EXIT_OK


def cmd_abelianize(args) -> int:
    _, g, violations = _load(args)
    if violations:
        return _invalid(args, violations)
    lam = _orientation(args)
    formula = abelianization_formula(g, lam)
    oracle = abelianization_oracle(g, lam)
    payload = {
        "orientation": lam.to_dict(),
        "abelianization": formula.to_dict(),
        "oracle": oracle.to_dict(),
        "agree": formula == oracle,
    }
    try:
        payload["locally_uniform_quotient"] = locally_uniform_quotient(g, lam).to_dict()
    except NotSpeciallyOriented:
        payload["locally_uniform_quotient"] = None
    torsion = " x ".join(f"Z/{t}" for t in formula.torsion) or "none"
    text = f"free rank: {formula.free_rank}\ntorsion: {torsion}\nformula and oracle agree: {formula == oracle}"
    _emit(payload, text, args.json)
    return EXIT_OK if formula == oracle else EXIT_COUNTEREXAMPLE


def cmd_enumerate(args) -> int:
    filters = frozenset(args.filter or ())
    spec = EnumerationSpec(args.vertices, up_to_iso=args.iso, filters=filters)
    graphs = list(enumerate_oriented(spec))
    payload = {"n": args.vertices, "up_to_iso": args.iso, "filters": sorted(filters), "count": len(graphs)}
    if not args.count_only:
        payload["graphs"] = [formats.to_dict(g) for g in graphs]
    lines = [f"count: {len(graphs)}"]
    if not args.count_only:
        lines += ["---\n" + formats.dumps_text(g).rstrip() for g in graphs]
    _emit(payload, "\n".join(lines), args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    outcome = SUITES[args.suite](args.max_vertices, workers=args.workers)
    payload = outcome.to_dict()
    text = f"suite {outcome.suite} n<={outcome.n}: checked {outcome.checked}, failures {len(outcome.failures)}"
    if outcome.findings:
        text += f", findings {len(outcome.findings)}"
    _emit(payload, text, args.json)
    return EXIT_OK if outcome.passed else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oraag",
        description="Oriented graphs and their oriented right-angled Artin pro-l groups.",
        epilog=GRAPH_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")

    graph = argparse.ArgumentParser(add_help=False, parents=[common])
    graph.add_argument("graph", help="graph file, '-' for stdin, or catalog:<name>")
    graph.add_argument("--strict", action="store_true", help="exit 3 on an invalid graph")
    graph.add_argument("--prime", "-l", type=int, default=3, help="the prime l (default 3)")
    graph.add_argument("--lambda", dest="lam", default="1+l^1", help="lambda(1): integer or 1+l^f (default 1+l^1)")
    graph.add_argument("--precision", "-N", type=int, default=8, help="work modulo l^N (default 8)")

    def add(name, fn, help_, parents=(graph,)):
        p = sub.add_parser(name, help=help_, parents=list(parents), epilog=GRAPH_HELP,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.set_defaults(func=fn)
        return p

    add("validate", cmd_validate, "check a graph and classify its edges")
    add("classify", cmd_classify, "full classification report")
    add("decompose", cmd_decompose, "elementary-type decomposition tree or witness")
    add("cliques", cmd_cliques, "maximal cliques, clique tree and amalgam decomposition")
    p = add("cohomology", cmd_cohomology, "graded dimensions of the Stanley-Reisner algebra")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--dual", type=int, nargs="?", const=10, default=None,
                   help="also print 1/h(-t) up to this degree (default 10)")
    p = add("present", cmd_present, "pro-l presentation")
    p.add_argument("--format", choices=("json", "fpgroup"), default="json")
    add("abelianize", cmd_abelianize, "abelianization invariants")

    p = sub.add_parser("enumerate", help="list all oriented graphs on n vertices", parents=[common])
    p.add_argument("--vertices", "-n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--iso", action="store_true", help="one representative per isomorphism class")
    p.add_argument("--filter", action="append", choices=("specially_oriented", "connected", "chordal"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run an exhaustive verification suite", parents=[common])
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except InvalidGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID if getattr(args, "strict", False) else EXIT_USAGE
    except (OraagError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(GRAPH_HELP, file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
