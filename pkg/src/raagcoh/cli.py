"""Command-line interface.

Every subcommand prints line-oriented text, or a single JSON document with
``--json``. Exit status: 0 on success, 1 on domain errors (bad input files,
malformed algebras, enumeration cap exceeded), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from raagcoh.cohomology import (
    RACG,
    CupAlgebra,
    algebra_to_json,
    format_algebra,
    matrix_to_json,
    parse_algebra,
    raag_algebra,
    racg_algebra,
    random_scramble,
    reduce_racg,
    sigma_subspace,
)
from raagcoh.errors import RaagcohError
from raagcoh.graphs import Graph, are_isomorphic, components, format_graph, parse_graph
from raagcoh.groups import catalog
from raagcoh.linalg import is_prime
from raagcoh.quotients import (
    count_homs,
    distinguish,
    format_presentation,
    raag_presentation,
    racg_presentation,
    remark_extension_presentation,
)
from raagcoh.reconstruction import DEFAULT_CAP, reconstruct


class UsageError(Exception):
    pass


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not is_prime(p) or p >= 1 << 16:
        raise argparse.ArgumentTypeError(f"{p} is not a supported prime (p < 65536)")
    return p


def _u64(text: str) -> int:
    try:
        s = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= s < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return s


def _positive(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return k


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="raagcoh", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    parser.set_defaults(usage_of=parser.format_usage)

    def common(sp, graph=True, mode=True, seed=False, cap=False):
        if graph:
            sp.add_argument("--graph", help="graph file")
        sp.add_argument("--p", type=_prime, default=None, help="prime characteristic (default 2)")
        if mode:
            sp.add_argument("--mode", choices=["raag", "racg"], default="raag")
        if seed:
            sp.add_argument("--seed", type=_u64, default=0)
        if cap:
            sp.add_argument("--cap", type=_positive, default=DEFAULT_CAP,
                            help="limit on enumerated projective classes")
        sp.add_argument("--json", action="store_true", help="emit one JSON document")
        sp.add_argument("--threads", type=_positive, default=1)

    common(sub.add_parser("algebra", help="print the cup-product algebra of a graph"))
    common(sub.add_parser("scramble", help="print a randomly rebased algebra and its witness"),
           seed=True)
    sp = sub.add_parser("reconstruct", help="recover a graph from an algebra")
    sp.add_argument("--algebra", help="algebra file (output of 'algebra' or 'scramble')")
    common(sp, seed=True, cap=True)
    common(sub.add_parser("roundtrip", help="scramble, reconstruct, compare"), seed=True, cap=True)
    sp = sub.add_parser("reduce-racg", help="quotient a RACG algebra by its squares")
    sp.add_argument("--algebra", help="RACG algebra file")
    common(sp, mode=False, seed=True)
    sp = sub.add_parser("homcount", help="count homomorphisms into catalog p-groups")
    common(sp, mode=False)
    sp.add_argument("--mode", choices=["raag", "racg", "extension"], default="raag")
    sp.add_argument("--w", type=int, default=None, help="order-4 vertex for --mode extension")
    sp.add_argument("--bound", type=_positive, default=16, help="maximal group order")
    sp.add_argument("--group", default=None, help="only this catalog group")
    sp = sub.add_parser("distinguish", help="separation certificate for two graphs")
    sp.add_argument("--graph1", required=True)
    sp.add_argument("--graph2", required=True)
    sp.add_argument("--bound", type=_positive, default=16)
    common(sp, graph=False, cap=True)
    common(sub.add_parser("components", help="connected components"), mode=False)
    for sp in sub.choices.values():
        sp.set_defaults(usage_of=sp.format_usage)
    return parser


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise RaagcohError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: Optional[str]) -> Graph:
    if path is None:
        raise UsageError("--graph is required")
    return parse_graph(_read(path))


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def _resolve_p(args) -> int:
    mode = getattr(args, "mode", "raag")
    if mode in ("racg", "extension") or args.command == "reduce-racg":
        if args.p not in (None, 2):
            what = args.command if args.command == "reduce-racg" else f"--mode {mode}"
            raise UsageError(f"{what} requires --p 2")
        return 2
    return args.p if args.p is not None else 2


def _algebra_for(g: Graph, mode: str, p: int) -> CupAlgebra:
    return racg_algebra(g) if mode == "racg" else raag_algebra(g, p)


def _emit(out: TextIO, args, doc: dict, lines: list[str]) -> None:
    if args.json:
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write("".join(l if l.endswith("\n") else l + "\n" for l in lines))


def cmd_algebra(args, out):
    p = _resolve_p(args)
    a = _algebra_for(_load_graph(args.graph), args.mode, p)
    _emit(out, args, {"command": "algebra", "algebra": algebra_to_json(a)}, [format_algebra(a)])


def cmd_scramble(args, out):
    p = _resolve_p(args)
    a = _algebra_for(_load_graph(args.graph), args.mode, p)
    s, c = random_scramble(a, args.seed)
    lines = [format_algebra(s)]
    for name, m in (("P1", c.P1), ("P2", c.P2)):
        lines += [f"# {name} " + " ".join(map(str, row)) for row in m.data]
    doc = {"command": "scramble", "seed": args.seed, "algebra": algebra_to_json(s),
           "witness": {"P1": matrix_to_json(c.P1), "P2": matrix_to_json(c.P2)}}
    _emit(out, args, doc, lines)


def _input_algebra(args) -> CupAlgebra:
    if args.algebra is not None:
        if args.graph is not None:
            raise UsageError("give either --algebra or --graph, not both")
        return parse_algebra(_read(args.algebra))
    p = _resolve_p(args)
    mode = getattr(args, "mode", "racg")
    return random_scramble(_algebra_for(_load_graph(args.graph), mode, p), args.seed)[0]


def cmd_reconstruct(args, out):
    a = _input_algebra(args)
    reduced = a.flavor == RACG
    if reduced:
        a = reduce_racg(a)
    r = reconstruct(a, args.cap)
    lines = [format_graph(r.graph)]
    lines += [f"# class {v}: " + " ".join(map(str, x)) for v, x in enumerate(r.vertex_classes)]
    doc = {"command": "reconstruct", "p": a.p, "reduced_racg": reduced,
           "graph": _graph_json(r.graph),
           "vertex_classes": [list(x) for x in r.vertex_classes],
           "witness": {"P1": matrix_to_json(r.witness.P1), "P2": matrix_to_json(r.witness.P2)}}
    _emit(out, args, doc, lines)


def cmd_roundtrip(args, out):
    p = _resolve_p(args)
    g = _load_graph(args.graph)
    a = _algebra_for(g, args.mode, p)
    s, _ = random_scramble(a, args.seed)
    if args.mode == "racg":
        s = reduce_racg(s)
    r = reconstruct(s, args.cap)
    w = are_isomorphic(r.graph, g)
    verdict = "ISOMORPHIC" if w is not None else "NOT ISOMORPHIC"
    lines = [
        f"graph: n={g.n} edges={len(g.edges)}",
        f"mode: {args.mode} p={p} seed={args.seed}",
        f"reconstructed: n={r.graph.n} edges={len(r.graph.edges)}",
    ]
    if w is not None:
        lines.append("isomorphism: " + " ".join(map(str, w.mapping)))
    lines.append(f"verdict: {verdict}")
    doc = {"command": "roundtrip", "mode": args.mode, "p": p, "seed": args.seed,
           "verdict": verdict, "original": _graph_json(g),
           "reconstructed": _graph_json(r.graph),
           "isomorphism": list(w.mapping) if w is not None else None}
    _emit(out, args, doc, lines)


def cmd_reduce_racg(args, out):
    _resolve_p(args)
    a = _input_algebra(args)
    if a.flavor != RACG:
        raise RaagcohError("reduce-racg needs an algebra with flavor=racg")
    sigma = sigma_subspace(a)
    red = reduce_racg(a)
    lines = [f"# sigma dim {sigma.dim}"] + [format_algebra(red)]
    doc = {"command": "reduce-racg", "sigma_dim": sigma.dim, "algebra": algebra_to_json(red)}
    _emit(out, args, doc, lines)


def cmd_homcount(args, out):
    p = _resolve_p(args)
    g = _load_graph(args.graph)
    if args.mode == "extension":
        if args.w is None:
            raise UsageError("--mode extension requires --w")
        if not 0 <= args.w < g.n:
            raise RaagcohError(f"vertex {args.w} out of range for n={g.n}")
        pres = remark_extension_presentation(g, args.w)
    elif args.w is not None:
        raise UsageError("--w only applies to --mode extension")
    else:
        pres = raag_presentation(g) if args.mode == "raag" else racg_presentation(g)
    groups = catalog(p, args.bound)
    if args.group is not None:
        groups = [q for q in groups if q.name == args.group]
        if not groups:
            raise UsageError(f"no catalog group {args.group!r} of order <= {args.bound} for p={p}")
    rows = [(q, count_homs(pres, q, threads=args.threads)) for q in groups]
    lines = [f"presentation: {format_presentation(pres)}"]
    lines += [f"{q.name} order={q.order} count={c}" for q, c in rows]
    doc = {"command": "homcount", "mode": args.mode, "p": p, "bound": args.bound,
           "presentation": format_presentation(pres),
           "counts": [{"group": q.name, "order": q.order, "count": str(c)} for q, c in rows]}
    _emit(out, args, doc, lines)


def cmd_distinguish(args, out):
    p = _resolve_p(args)
    g, h = _load_graph(args.graph1), _load_graph(args.graph2)
    cert = distinguish(g, h, args.mode, p, args.bound, cap=args.cap, threads=args.threads)
    lines = [f"verdict: {cert.verdict}", f"method: {cert.method}"]
    if cert.method == "hom-count":
        lines += [f"group: {cert.group}", f"count1: {cert.count1}", f"count2: {cert.count2}"]
    lines += [f"tried: {name} {c1} {c2}" for name, c1, c2 in cert.tried]
    if cert.method == "cohomology":
        for tag, gr in (("graph1", cert.graph1), ("graph2", cert.graph2)):
            lines.append(f"reconstructed {tag}: " + " ".join(f"{u}-{v}" for u, v in gr.sorted_edges()))
    certificate = {"method": cert.method, "group": cert.group,
                   "count1": None if cert.count1 is None else str(cert.count1),
                   "count2": None if cert.count2 is None else str(cert.count2),
                   "tried": [{"group": n, "count1": str(a), "count2": str(b)} for n, a, b in cert.tried],
                   "graph1": None if cert.graph1 is None else _graph_json(cert.graph1),
                   "graph2": None if cert.graph2 is None else _graph_json(cert.graph2)}
    doc = {"command": "distinguish", "mode": args.mode, "p": p, "bound": args.bound,
           "verdict": cert.verdict, "certificate": certificate}
    _emit(out, args, doc, lines)


def cmd_components(args, out):
    _resolve_p(args)
    g = _load_graph(args.graph)
    comps = components(g)
    lines = []
    for k, (sub, back) in enumerate(comps):
        edges = " ".join(f"{back[u]}-{back[v]}" for u, v in sub.sorted_edges())
        lines.append(f"component {k}: vertices {' '.join(map(str, back))}" + (f" edges {edges}" if edges else ""))
    lines.append(f"connected: {'yes' if len(comps) <= 1 else 'no'}")
    doc = {"command": "components", "connected": len(comps) <= 1,
           "components": [{"vertices": list(back), "graph": _graph_json(sub)} for sub, back in comps]}
    _emit(out, args, doc, lines)


COMMANDS = {
    "algebra": cmd_algebra,
    "scramble": cmd_scramble,
    "reconstruct": cmd_reconstruct,
    "roundtrip": cmd_roundtrip,
    "reduce-racg": cmd_reduce_racg,
    "homcount": cmd_homcount,
    "distinguish": cmd_distinguish,
    "components": cmd_components,
}


def run(argv: Sequence[str], out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    parser = build_parser()
    args = None
    try:
        args = parser.parse_args(list(argv))
        if args.command is None:
            parser.print_help(err)
            return 2
        COMMANDS[args.command](args, out)
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else 2
    except UsageError as exc:
        if args is not None:
            err.write(args.usage_of())
        err.write(f"{exc}\n")
        return 2
    except (RaagcohError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
