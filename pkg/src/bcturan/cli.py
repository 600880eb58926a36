"""Command-line surface.

Every subcommand is a thin shell over the library.  Exit codes: 0 success or
property holds, 1 falsification / verification failure, 2 usage or hypothesis
error, 3 timeout.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import certify as certify_mod
from . import io_formats, lemmas
from .constructions import broom_circulant, path_extremal
from .errors import (
    BaseCaseViolated,
    HypothesisViolated,
    LemmaFalsified,
    MalformedCertificate,
    NotConnected,
    ParseError,
    SearchTimeout,
    ToolkitError,
)
from .graph_core import parse_vertex
from .patterns import contains_pattern, longest_path_from, longest_path_length, parse_pattern
from .search import SearchMode, TuranQuery, turan_oracle, turan_search, verify_theorem_table

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3


def _load_graph(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return io_formats.parse_graph(fh.read())


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_construct(args) -> int:
    if args.kind == "path-extremal":
        g = path_extremal(args.a, args.b, args.k)
    else:
        g = broom_circulant(args.n, args.d)
    _emit(io_formats.write_graph(g), args.output)
    return EXIT_OK


def _cmd_check(args) -> int:
    g = _load_graph(args.file)
    pat = parse_pattern(args.forbid)
    emb = contains_pattern(g, pat)
    if emb is None:
        print("free")
    else:
        spine = " ".join(str(v) for v in emb.spine)
        leaves = " ".join(str(v) for v in sorted(emb.leaves))
        print(f"contains {pat}: spine {spine}" + (f" leaves {leaves}" if leaves else ""))
    return EXIT_OK


def _cmd_longest_path(args) -> int:
    g = _load_graph(args.file)
    if args.start:
        print(longest_path_from(g, parse_vertex(args.start)))
    else:
        print(longest_path_length(g))
    return EXIT_OK


def _cmd_search(args) -> int:
    query = TuranQuery(args.a, args.b, parse_pattern(args.forbid),
                       SearchMode(args.mode))
    if query.mode is SearchMode.ORACLE:
        res = turan_oracle(query, collect_witnesses=args.witnesses)
    else:
        res = turan_search(query, collect_witnesses=args.witnesses)
    print("none" if res.value is None else res.value)
    if args.witnesses:
        for w in res.witnesses:
            sys.stdout.write(io_formats.write_graph(w))
    return EXIT_OK


def _cmd_certify(args) -> int:
    g = _load_graph(args.file)
    if args.verify:
        cert = io_formats.parse_certificate(open(args.verify, encoding="utf-8").read())
        res = certify_mod.verify_certificate(g, cert.k, cert)
        if res.ok:
            print("verified")
            return EXIT_OK
        print(f"verification failed: {res.reason}", file=sys.stderr)
        return EXIT_FALSIFIED
    if args.k is None:
        print("certify: --k is required unless --verify is given", file=sys.stderr)
        return EXIT_USAGE
    cert = certify_mod.build_certificate(g, args.k)
    _emit(io_formats.write_certificate(cert), args.output)
    return EXIT_OK


def _cmd_lemma_check(args) -> int:
    g = _load_graph(args.file)
    if args.lemma == "removable-vertex":
        v = lemmas.find_removable_vertex(g, args.k)
        print(str(v))
        return EXIT_OK
    if args.lemma == "removable-pair":
        x, y = lemmas.find_removable_pair(g, args.k)
        print(f"{x} {y}")
        return EXIT_OK
    if args.lemma == "endpoint":
        report = lemmas.check_endpoint_lemma(g, args.k)
    else:
        if args.d is None:
            print("lemma-check: --d is required for the degree lemma", file=sys.stderr)
            return EXIT_USAGE
        report = lemmas.check_degree_lemma(g, args.k, args.d)
    sys.stdout.write(io_formats.write_result(report))
    return EXIT_OK if report.conclusion_holds else EXIT_FALSIFIED


def _cmd_table(args) -> int:
    lo, _, hi = args.k_range.partition("..")
    rows = verify_theorem_table(args.max_a, args.max_b, (int(lo), int(hi or lo)))
    csv = io_formats.write_table_csv(rows)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(csv)
    sys.stdout.write(csv)
    if all(r.match for r in rows):
        return EXIT_OK
    print("table: searched value disagrees with the formula", file=sys.stderr)
    return EXIT_FALSIFIED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcturan",
        description="Connected-bipartite Turán toolkit for forbidden paths and brooms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="generate an extremal witness graph")
    csub = construct.add_subparsers(dest="kind", required=True)
    pe = csub.add_parser("path-extremal")
    pe.add_argument("--a", type=int, required=True)
    pe.add_argument("--b", type=int, required=True)
    pe.add_argument("--k", type=int, required=True)
    pe.add_argument("-o", "--output")
    pe.set_defaults(func=_cmd_construct, kind="path-extremal")
    bc = csub.add_parser("broom-circulant")
    bc.add_argument("--n", type=int, required=True)
    bc.add_argument("--d", type=int, required=True)
    bc.add_argument("-o", "--output")
    bc.set_defaults(func=_cmd_construct, kind="broom-circulant")

    check = sub.add_parser("check", help="test a graph for pattern freeness")
    check.add_argument("--forbid", required=True)
    check.add_argument("file")
    check.set_defaults(func=_cmd_check)

    lp = sub.add_parser("longest-path", help="exact longest simple path")
    lp.add_argument("file")
    lp.add_argument("--from", dest="start", metavar="PART:INDEX")
    lp.set_defaults(func=_cmd_longest_path)

    search = sub.add_parser("search", help="compute a connected-bipartite Turán number")
    search.add_argument("--a", type=int, required=True)
    search.add_argument("--b", type=int, required=True)
    search.add_argument("--forbid", required=True)
    search.add_argument("--mode", choices=["oracle", "bnb"], default="bnb")
    search.add_argument("--witnesses", action="store_true")
    search.add_argument("--threads", type=int, default=os.cpu_count())
    search.set_defaults(func=_cmd_search)

    certify = sub.add_parser("certify", help="build or verify an induction certificate")
    certify.add_argument("--k", type=int)
    certify.add_argument("--verify", metavar="CERTFILE")
    certify.add_argument("-o", "--output")
    certify.add_argument("file")
    certify.set_defaults(func=_cmd_certify)

    lemma = sub.add_parser("lemma-check", help="run one of the executable lemmas")
    lemma.add_argument("--lemma", required=True,
                       choices=["endpoint", "degree", "removable-vertex", "removable-pair"])
    lemma.add_argument("--k", type=int, required=True)
    lemma.add_argument("--d", type=int)
    lemma.add_argument("file")
    lemma.set_defaults(func=_cmd_lemma_check)

    table = sub.add_parser("table", help="searched-vs-formula theorem table")
    table.add_argument("--theorem", choices=["paths"], default="paths")
    table.add_argument("--max-a", type=int, required=True)
    table.add_argument("--max-b", type=int, required=True)
    table.add_argument("--k-range", required=True, metavar="LO..HI")
    table.add_argument("--csv")
    table.add_argument("--threads", type=int, default=os.cpu_count())
    table.set_defaults(func=_cmd_table)

    return parser


def _dump_counterexample(exc: LemmaFalsified) -> None:
    if exc.graph is None:
        return
    fd, path = tempfile.mkstemp(prefix="bcturan-counterexample-", suffix=".bcg")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(io_formats.write_graph(exc.graph, comment=str(exc)))
    print(f"counterexample written to {path}", file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LemmaFalsified, BaseCaseViolated) as exc:
        print(f"falsified: {exc}", file=sys.stderr)
        if isinstance(exc, LemmaFalsified):
            _dump_counterexample(exc)
        return EXIT_FALSIFIED
    except SearchTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (HypothesisViolated, NotConnected, ParseError, MalformedCertificate,
            ValueError, OSError, ToolkitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
