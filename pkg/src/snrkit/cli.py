"""Command-line entry point: ``snrkit <command> ...``.

Exit codes: 0 success, 1 usage error, 2 parse or validation error,
3 a theorem report whose statements disagree.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import construct
from .core import FLAGS, AxiomError, classify
from .decompose import h_plus_decomposition
from .enumeration import EnumSpec, enumerate_seminearrings
from .greens import RELATIONS
from .report import emit_report
from .snrfile import SnrDocument, SnrError, parse_snr, serialize_snr
from .tables import TableError
from .theorems import (
    verify_all,
    verify_clifford,
    verify_compl_reg,
    verify_mult_inverse,
    verify_mult_reg,
)

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_INEQUIVALENT = 0, 1, 2, 3

THEOREMS = {
    "mult-reg": verify_mult_reg,
    "mult-inv": verify_mult_inverse,
    "compl-reg": verify_compl_reg,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")
    common.add_argument("--timings", action="store_true", default=argparse.SUPPRESS,
                        help="report elapsed time on stderr")

    parser = _Parser(prog="snrkit", description="Finite seminearring workbench.")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--timings", action="store_true", help="report elapsed time on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_file(name, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("file", help=".snr file, or - for stdin")
        return p

    with_file("check", "validate the seminearring axioms")
    with_file("classify", "regularity classification")
    p = with_file("greens", "Green's relations of the additive reduct")
    p.add_argument("--relation", choices=RELATIONS)
    with_file("decompose", "H+-class near-ring components")
    p = with_file("verify", "evaluate the structure theorems")
    p.add_argument("--theorem", choices=["mult-reg", "mult-inv", "compl-reg", "clifford"])
    p.add_argument("--zero-symmetric", action="store_true")

    p = sub.add_parser("enumerate", parents=[common], help="enumerate small seminearrings")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--filter", action="append", default=[], choices=FLAGS, metavar="FLAG")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=int)

    p = sub.add_parser("example", parents=[common], help="print a built-in example as .snr")
    p.add_argument("--name", required=True, choices=sorted(construct.EXAMPLES))
    p.add_argument("--p", type=int, default=2, help="prime for the matrix examples")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str):
    doc = parse_snr(_read(path))
    return doc, doc.to_seminearring()


def _document_json(doc: SnrDocument) -> dict:
    return {
        "name": doc.name,
        "order": doc.order,
        "elements": list(doc.names) if doc.names else None,
        "add": doc.add.rows(),
        "mul": doc.mul.rows(),
    }


def run(args, out) -> int:
    fmt = "json" if args.json else "text"
    cmd = args.command

    if cmd == "example":
        try:
            S = construct.EXAMPLES[args.name](args.p)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        name = args.name.replace("-", "_") + (f"_p{args.p}" if args.name in ("S", "L-matrix") else "")
        doc = SnrDocument.from_seminearring(name, S)
        if args.json:
            out.write((json.dumps({"document": _document_json(doc)}, indent=2) + "\n").encode())
        else:
            out.write(serialize_snr(doc).encode())
        return EXIT_OK

    if cmd == "enumerate":
        try:
            spec = EnumSpec(args.order, args.up_to_iso, tuple(args.filter), args.limit)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        stream = enumerate_seminearrings(spec)
        if args.count_only:
            count = sum(1 for _ in stream)
            text = json.dumps({"count": count}, indent=2) + "\n" if args.json else f"count: {count}\n"
            out.write(text.encode())
            return EXIT_OK
        docs = [SnrDocument.from_seminearring(f"e{args.order}_{k}", S) for k, S in enumerate(stream)]
        if args.json:
            out.write((json.dumps({"structures": [_document_json(d) for d in docs]}, indent=2) + "\n").encode())
        else:
            out.write("".join(serialize_snr(d) for d in docs).encode())
        return EXIT_OK

    doc, S = _load(args.file)
    if cmd == "check":
        if args.json:
            out.write((json.dumps({"check": {"name": doc.name, "order": S.order, "valid": True}},
                                  indent=2) + "\n").encode())
        else:
            out.write(f"ok: {doc.name} is a seminearring of order {S.order}\n".encode())
        return EXIT_OK
    if cmd == "classify":
        out.write(emit_report({"classification": classify(S)}, fmt, S))
        return EXIT_OK
    if cmd == "greens":
        out.write(emit_report({"greens": S.greens}, fmt, S, relation=args.relation))
        return EXIT_OK
    if cmd == "decompose":
        out.write(emit_report({"components": h_plus_decomposition(S)}, fmt, S))
        return EXIT_OK
    if cmd == "verify":
        if args.theorem is None:
            if args.zero_symmetric:
                raise UsageError("--zero-symmetric needs --theorem")
            reports = verify_all(S)
        elif args.theorem == "clifford":
            reports = [verify_clifford(S)]
        else:
            reports = [THEOREMS[args.theorem](S, zero_symmetric=args.zero_symmetric)]
        out.write(emit_report({"theorems": reports}, fmt, S))
        return EXIT_OK if all(r.equivalent for r in reports) else EXIT_INEQUIVALENT
    raise UsageError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.timings = getattr(args, "timings", False)
    start = time.perf_counter()
    out = sys.stdout.buffer
    try:
        code = run(args, out)
    except UsageError as exc:
        print(f"snrkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SnrError, AxiomError, TableError) as exc:
        print(f"snrkit: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"snrkit: cannot read input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    out.flush()
    if args.timings:
        print(f"elapsed: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
