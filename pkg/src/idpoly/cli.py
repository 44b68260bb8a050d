"""Command line front end: ``idpoly compute | generate | verify | bench``.

Exit codes: 0 ok, 1 verification failures, 2 unreadable input or bad
arguments, 3 size bound exceeded, 4 algorithm not applicable to the input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import verify as vf
from .algorithms import ALGORITHMS, BOUNDS, LOOP_SAFE, RecursiveEngine
from .errors import GraphError, GraphParseError, LoopedGraphError, SizeBoundError
from .families import KINDS, FamilySpec, all_graphs, generate, random_corpus
from .graph import Graph, parse_edge_list, serialize_edge_list

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BOUND, EXIT_MISMATCH = 0, 1, 2, 3, 4

ALG_BOUND_KEY = {
    "brute": "brute",
    "inclusion-exclusion": "inclusion-exclusion",
    "essential": "essential",
    "coefficient": "coefficient",
}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=KINDS, help="generate the input from a graph family")
    p.add_argument("--n", type=int, default=0, help="vertex count")
    p.add_argument("--p", type=int, default=0, help="first side of K_{p,q}")
    p.add_argument("--q", type=int, default=0, help="second side of K_{p,q}")
    p.add_argument("--prob", type=float, default=0.5, help="edge probability (random)")
    p.add_argument("--seed", type=int, default=0, help="seed (random)")


def _family_spec(args) -> FamilySpec:
    try:
        return FamilySpec(args.family, args.n, args.p, args.q, args.prob, args.seed)
    except GraphError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None


def _read_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc.strerror}") from None
    try:
        return parse_edge_list(text)
    except GraphParseError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from None


def _single_input(args) -> tuple[str, Graph]:
    if bool(args.input) == bool(args.family):
        raise CliError(EXIT_PARSE, "give exactly one of --input or --family")
    if args.input:
        return args.input, _read_graph(args.input)
    spec = _family_spec(args)
    try:
        return spec.describe(), generate(spec)
    except GraphError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None


def _bound_for(alg: str, max_n: int | None) -> int | None:
    key = ALG_BOUND_KEY.get(alg)
    if key is None:
        return None
    return BOUNDS[key] if max_n is None else max_n


def run_algorithm(alg: str, G: Graph, max_n: int | None = None):
    """Returns (polynomial, memo size or None); raises CliError on bound/mismatch."""
    if G.loops and alg not in LOOP_SAFE:
        raise CliError(EXIT_MISMATCH, f"algorithm {alg!r} needs a simple graph")
    if alg == "essential" and G.n == 0:
        raise CliError(EXIT_MISMATCH, "algorithm 'essential' needs n >= 1")
    bound = _bound_for(alg, max_n)
    if bound is not None and G.n > bound:
        raise CliError(EXIT_BOUND, f"{alg}: n={G.n} exceeds the bound {bound}")
    try:
        if alg == "recursive":
            engine = RecursiveEngine(G)
            return engine.run(), len(engine.memo)
        return ALGORITHMS[alg](G, max_n=bound), None
    except SizeBoundError as exc:
        raise CliError(EXIT_BOUND, str(exc)) from None
    except LoopedGraphError as exc:
        raise CliError(EXIT_MISMATCH, str(exc)) from None


# -- compute ------------------------------------------------------------------


def cmd_compute(args, out) -> int:
    name, G = _single_input(args)
    start = time.perf_counter()
    poly, _ = run_algorithm(args.alg, G, args.max_n)
    elapsed = (time.perf_counter() - start) * 1000
    low = poly.lowest_degree()
    record = {
        "command": "compute",
        "instance": name,
        "algorithm": args.alg,
        "n": G.n,
        "coefficients": poly.to_strings(),
        "id_number": low,
        "mis_count": str(poly(1)),
        "time_ms": round(elapsed, 3),
    }
    if args.format == "machine":
        print(json.dumps(record), file=out)
    else:
        print(f"instance:   {name}", file=out)
        print(f"algorithm:  {args.alg}", file=out)
        print(f"n:          {G.n}", file=out)
        print(f"id(G,x):    {poly}", file=out)
        print(f"coeffs:     {' '.join(record['coefficients'])}", file=out)
        print(f"i(G):       {'-' if low is None else low}", file=out)
        print(f"id(G,1):    {record['mis_count']}", file=out)
        print(f"time:       {elapsed:.3f} ms", file=out)
    return EXIT_OK


# -- generate -----------------------------------------------------------------


def cmd_generate(args, out) -> int:
    if not args.family:
        raise CliError(EXIT_PARSE, "--family is required")
    spec = _family_spec(args)
    try:
        text = serialize_edge_list(generate(spec))
    except GraphError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    if args.out:
        Path(args.out).write_bytes(text.encode("utf-8"))
    else:
        out.write(text)
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def _corpus(args):
    if args.corpus == "exhaustive":
        for n in range(args.max_n + 1):
            for i, G in enumerate(all_graphs(n)):
                yield f"exhaustive n={n} #{i}", G
    elif args.corpus == "random":
        for i, G in enumerate(random_corpus(args.count, args.n, args.seed, args.prob)):
            yield f"random n={args.n} seed={args.seed + i}", G
    else:
        if not args.input:
            raise CliError(EXIT_PARSE, "--corpus files needs at least one --input")
        for path in args.input:
            yield path, _read_graph(path)


def cmd_verify(args, out) -> int:
    if args.scope == "all":
        kinds = vf.IDENTITIES
    elif args.scope in vf.IDENTITIES:
        kinds = (args.scope,)
    else:
        raise CliError(EXIT_PARSE, f"unknown scope {args.scope!r}")
    size = args.max_n if args.corpus == "exhaustive" else args.n
    if args.corpus != "files" and size > BOUNDS["brute"]:
        raise CliError(EXIT_BOUND, f"corpus size {size} exceeds the brute-force bound")
    summary = vf.Summary()
    for report in vf.verify_all(kinds, _corpus(args)):
        summary.add(report)
        if args.format == "machine":
            print(json.dumps({"command": "verify", **report.as_dict()}), file=out)
        elif not args.quiet or report.status == vf.FAIL:
            print(report.line(), file=out)
    if args.format == "machine":
        record = {
            "command": "verify",
            "summary": {
                "identities": len(summary.kinds),
                "checks": summary.total,
                "passed": summary.passed,
                "skipped": summary.skipped,
                "failed": summary.failed,
            },
        }
        print(json.dumps(record), file=out)
    else:
        print(summary.line(), file=out)
    return EXIT_FAIL if summary.failed else EXIT_OK


# -- bench --------------------------------------------------------------------


def cmd_bench(args, out) -> int:
    algs = [a.strip() for a in args.algs.split(",") if a.strip()]
    unknown = [a for a in algs if a not in ALGORITHMS]
    if unknown:
        raise CliError(EXIT_PARSE, f"unknown algorithms {unknown}")
    if args.family:
        corpus = [(_family_spec(args).describe(), generate(_family_spec(args)))]
    elif args.input:
        corpus = [(p, _read_graph(p)) for p in args.input]
    else:
        corpus = [
            (f"random n={args.n} seed={args.seed + i}", G)
            for i, G in enumerate(random_corpus(args.count, args.n, args.seed, args.prob))
        ]
    rows = []
    for name, G in corpus:
        for alg in algs:
            row = {"command": "bench", "instance": name, "algorithm": alg, "n": G.n}
            try:
                start = time.perf_counter()
                poly, memo = run_algorithm(alg, G, args.max_n)
                row.update(
                    status="ok",
                    time_ms=round((time.perf_counter() - start) * 1000, 3),
                    memo=memo,
                    coefficients=poly.to_strings(),
                )
            except CliError as exc:
                row.update(status="skipped", time_ms=None, memo=None, reason=str(exc))
            rows.append(row)
    if args.format == "machine":
        for row in rows:
            print(json.dumps(row), file=out)
    else:
        header = f"{'algorithm':20} {'instance':32} {'n':>4} {'status':8} {'time_ms':>12} {'memo':>8}"
        print(header, file=out)
        print("-" * len(header), file=out)
        for r in rows:
            t = "-" if r["time_ms"] is None else f"{r['time_ms']:.3f}"
            m = "-" if r["memo"] is None else str(r["memo"])
            print(
                f"{r['algorithm']:20} {r['instance'][:32]:32} {r['n']:>4} "
                f"{r['status']:8} {t:>12} {m:>8}",
                file=out,
            )
    return EXIT_OK


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idpoly", description="Independent domination polynomials of graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute id(G,x) for one graph")
    p.add_argument("--input", help="edge-list file")
    _add_family_args(p)
    p.add_argument("--alg", choices=list(ALGORITHMS), default="recursive")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--max-n", type=int, default=None, help="override the size bound")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("generate", help="write a family member as an edge list")
    _add_family_args(p)
    p.add_argument("--out", help="output path (stdout when omitted)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check identities against the brute-force oracle")
    p.add_argument("--scope", default="all", help=f"'all' or one of {', '.join(vf.IDENTITIES)}")
    p.add_argument("--corpus", choices=("exhaustive", "random", "files"), default="exhaustive")
    p.add_argument("--max-n", type=int, default=4, help="largest n of the exhaustive corpus")
    p.add_argument("--count", type=int, default=10, help="random graphs to draw")
    p.add_argument("--n", type=int, default=8, help="vertex count of random graphs")
    p.add_argument("--prob", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--input", action="append", help="edge-list file (repeatable)")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--quiet", action="store_true", help="print only failures and the summary")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time algorithms against each other")
    p.add_argument("--algs", default="brute,recursive")
    p.add_argument("--input", action="append", help="edge-list file (repeatable)")
    _add_family_args(p)
    p.add_argument("--count", type=int, default=3, help="random graphs when no family/input")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--max-n", type=int, default=None, help="override the size bounds")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"idpoly: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
