"""Command-line interface.

Exit codes: 0 when a verdict or result was produced (including negative
recognition answers), 1 on usage or input errors, 2 when a theorem check fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bicliques import NoBicliquesError, enumerate_bicliques
from .formats import FormatError, parse_graph, parse_poset, render_graph, render_poset, to_dot
from .generate import KINDS, InstanceSpec, SpecError, generate
from .graph import GraphError, bits, named_graph, square
from .harness import CHECK_NAMES, SEPARATING, run_check
from .operators import kb_from_family, kbm_from_family
from .patterns import clique_ordering_check, find_induced, has_square_root, is_net_star_free
from .posets import PosetError, comparability_graph, is_iic, is_iic_comparability, pred_succ_graph

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def load_graph(source: str):
    """A file path, ``-`` for stdin, or ``named:NAME[:PARAM]`` such as ``named:cycle:5``."""
    if source.startswith("named:"):
        parts = source.split(":")
        param = int(parts[2]) if len(parts) > 2 else None
        return named_graph(parts[1], param)
    return parse_graph(_read_text(source))


def _emit_graph(out, g, comments, labels, dot: bool) -> None:
    out.write(render_graph(g, comments))
    if dot:
        out.write(to_dot(g, labels))


def cmd_bicliques(args, out) -> int:
    g = load_graph(args.input)
    family = enumerate_bicliques(g)
    for b in family:
        out.write(b.label() + "\n")
    return EXIT_OK


def cmd_operator(args, out) -> int:
    g = load_graph(args.input)
    if args.command == "square":
        _emit_graph(out, square(g), [], None, args.dot)
        return EXIT_OK
    family = enumerate_bicliques(g)
    result = kb_from_family(family) if args.command == "kb" else kbm_from_family(family)
    labels = [b.label().replace(" | ", "|") for b in family]
    comments = [f"{i}: {b.label()}" for i, b in enumerate(family)]
    _emit_graph(out, result.graph, comments, labels, args.dot)
    return EXIT_OK


def cmd_patterns(args, out) -> int:
    g = load_graph(args.input)
    if args.which == "netstar":
        emb = is_net_star_free(g)
        out.write("net*-free\n" if emb is None else f"induced net* at {' '.join(map(str, emb.map))}\n")
    elif args.which == "clique-order":
        bad = clique_ordering_check(g)
        if bad is None:
            out.write("every maximal clique has an anchored ordering\n")
        else:
            state = "fails" if bad.conclusive else "unverified"
            out.write(f"clique {' '.join(map(str, bits(bad.clique)))} {state}\n")
    elif args.which == "sqrt":
        root = has_square_root(g)
        if root is None:
            out.write("no square root on the same vertex set\n")
        else:
            _emit_graph(out, root, ["square root"], None, args.dot)
    else:
        if not args.pattern:
            raise UsageError("patterns induced needs a pattern graph")
        pattern = load_graph(args.pattern)
        found = find_induced(g, pattern, limit=args.limit)
        for emb in found:
            out.write(" ".join(map(str, emb.map)) + "\n")
        if not found:
            out.write("no induced embedding\n")
    return EXIT_OK


def cmd_poset(args, out) -> int:
    if args.which == "recognize":
        g = load_graph(args.input)
        poset = is_iic_comparability(g)
        if poset is None:
            out.write("not IIC-comparability\n")
        else:
            out.write("IIC-comparability\n")
            out.write(render_poset(poset))
        return EXIT_OK
    p = parse_poset(_read_text(args.input))
    if args.which == "iic":
        wit = is_iic(p)
        if wit is None:
            out.write("IIC\n")
        else:
            inter = " ".join(map(str, sorted(wit.intersection)))
            out.write(f"not IIC: {wit.kind} pair {wit.pair[0]} {wit.pair[1]} meets in {inter}\n")
    elif args.which == "comparability":
        _emit_graph(out, comparability_graph(p), [], None, args.dot)
    else:
        g, labels = pred_succ_graph(p)
        comments = [f"{v}: {lab}" for v, lab in enumerate(labels)]
        _emit_graph(out, g, comments, labels, args.dot)
    return EXIT_OK


def spec_from_args(args) -> InstanceSpec:
    if args.spec:
        try:
            return InstanceSpec(**json.loads(args.spec))
        except (TypeError, json.JSONDecodeError) as exc:
            raise UsageError(f"bad --spec: {exc}") from None
    chosen = [(k, getattr(args, k.replace("-", "_"))) for k in KINDS if getattr(args, k.replace("-", "_")) is not None]
    if len(chosen) != 1:
        raise UsageError("choose exactly one instance source, e.g. --exhaustive-connected 6")
    kind, n = chosen[0]
    if kind.startswith("random"):
        return InstanceSpec(kind, n, p=args.p, samples=args.samples, seed=args.seed)
    return InstanceSpec(kind, n, n_min=args.min_n)


def cmd_verify(args, out) -> int:
    if args.check not in CHECK_NAMES:
        raise UsageError(f"unknown check {args.check!r}; known: {', '.join(CHECK_NAMES)}")
    params = {}
    if args.n_max is not None:
        if args.check != "k1n_corollary":
            raise UsageError("--n-max only applies to k1n_corollary")
        params["n_max"] = args.n_max
    if args.check == SEPARATING:
        report = run_check(SEPARATING, max_n=args.max_n)
    else:
        report = run_check(args.check, spec_from_args(args), **params)
    out.write(report.to_json(timing=args.timing) + "\n")
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_gen(args, out) -> int:
    spec = spec_from_args(args)
    for i, inst in enumerate(generate(spec)):
        if spec.instance_type == "poset":
            out.write(f"# instance {i}\n" + render_poset(inst) + "\n")
        else:
            out.write(render_graph(inst, [f"instance {i}"]) + "\n")
    return EXIT_OK


def _add_instance_flags(p: argparse.ArgumentParser) -> None:
    for kind in KINDS:
        p.add_argument(f"--{kind}", type=int, metavar="N", default=None)
    p.add_argument("--min-n", type=int, default=1, help="smallest size for exhaustive sweeps (default 1)")
    p.add_argument("--p", type=float, default=0.3, help="edge probability for random kinds")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--spec", help="InstanceSpec as a JSON object")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="biclique-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bicliques", help="list the bicliques of a graph")
    p.add_argument("input")

    for verb, text in (("kb", "biclique graph"), ("kbm", "mutually included biclique graph"), ("square", "square")):
        p = sub.add_parser(verb, help=f"print the {text}")
        p.add_argument("input")
        p.add_argument("--dot", action="store_true", help="also print a DOT rendering")

    p = sub.add_parser("patterns", help="structural pattern checks")
    p.add_argument("which", choices=["netstar", "clique-order", "sqrt", "induced"])
    p.add_argument("input")
    p.add_argument("pattern", nargs="?")
    p.add_argument("--limit", type=int, default=1)
    p.add_argument("--dot", action="store_true")

    p = sub.add_parser("poset", help="poset tools (recognize takes a graph file)")
    p.add_argument("which", choices=["iic", "comparability", "predsucc", "recognize"])
    p.add_argument("input")
    p.add_argument("--dot", action="store_true")

    p = sub.add_parser("verify", help="run a theorem checker")
    p.add_argument("check", help=", ".join(CHECK_NAMES))
    _add_instance_flags(p)
    p.add_argument("--n-max", type=int, default=None, help="largest star size for k1n_corollary")
    p.add_argument("--max-n", type=int, default=7, help="sweep bound for separating_examples")
    p.add_argument("--timing", action="store_true", help="include elapsed_ms in the report")

    p = sub.add_parser("gen", help="print an instance stream")
    _add_instance_flags(p)
    return parser


COMMANDS = {
    "bicliques": cmd_bicliques,
    "kb": cmd_operator,
    "kbm": cmd_operator,
    "square": cmd_operator,
    "patterns": cmd_patterns,
    "poset": cmd_poset,
    "verify": cmd_verify,
    "gen": cmd_gen,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, FormatError, GraphError, PosetError, SpecError, NoBicliquesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
