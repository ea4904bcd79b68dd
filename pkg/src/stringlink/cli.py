"""Command-line front end.

Exit codes: 0 success, 1 computation error, 2 usage error, 3 verification
failure.  Usage errors are anything wrong with what was asked for: flags,
unreadable files, DSL syntax, diagrams that fail validation, index sequences
out of range or longer than ``q`` allows.  Errors go to stderr as
one JSON object ``{"error": <kind>, "message": <text>}``.

``mu`` and ``table`` print records ``{"delta", "index_sequence", "mu", "q"}``
with sorted keys and integers only.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import checks, diagram as dg
from .braid import random_pure_braid
from .dsl import format_dsl, load_diagram
from .errors import (
    ClosedComponent,
    DSLSyntaxError,
    MixedMode,
    PermutedEndpoints,
    StringLinkError,
    TruncationTooLow,
    WidthMismatch,
    WidthUnderflow,
)
from .magnus import DEFAULT_Q, all_mu_up_to_weight, mu_bar
from .wirtinger import presentation_from_diagram

Q_LIMIT = 8
COST_WARNING_Q = 6

EXAMPLES = {
    "trivial2": lambda: dg.trivial(2),
    "hopf": dg.hopf,
    "whitehead": dg.whitehead,
    "borromean": dg.borromean,
    "clasp-commutator": dg.clasp_commutator,
    "trefoil": lambda: dg.long_knot("trefoil"),
    "figure-eight": lambda: dg.long_knot("figure_eight"),
}


class UsageError(Exception):
    kind = "UsageError"


_USAGE_ERRORS = (UsageError, DSLSyntaxError, MixedMode, WidthMismatch, WidthUnderflow,
                 ClosedComponent, PermutedEndpoints, TruncationTooLow)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _parse_index(text: str) -> tuple[int, ...]:
    parts = text.split(",") if "," in text else list(text)
    try:
        index = tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"bad index sequence {text!r}") from None
    if len(index) < 2:
        raise UsageError("an index sequence needs at least two entries")
    return index


def _check_q(args) -> int:
    q = args.q
    if q < 1:
        raise UsageError("--q must be at least 1")
    if q > Q_LIMIT and not args.allow_high_q:
        raise UsageError(f"--q above {Q_LIMIT} needs --allow-high-q")
    if q >= COST_WARNING_Q:
        print(f"warning: q = {q} stores n^q coefficients per arc and may be slow",
              file=sys.stderr)
    return q


def _add_q(p: argparse.ArgumentParser):
    p.add_argument("--q", type=int, default=DEFAULT_Q, help="truncation degree (default 4)")
    p.add_argument("--allow-high-q", action="store_true", help=f"permit --q above {Q_LIMIT}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stringlink", description="Milnor invariants of string links.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("mu", help="one Milnor invariant with its indeterminacy")
    p.add_argument("--index", required=True, help="e.g. 1122 or 1,1,2,2")
    p.add_argument("--input", required=True, help="DSL file, or - for stdin")
    p.add_argument("--dump-presentation", action="store_true",
                   help="print the Wirtinger arc and relation tables to stderr")
    _add_q(p)

    p = sub.add_parser("table", help="all invariants up to a weight")
    p.add_argument("--input", required=True)
    p.add_argument("--weight", type=int, default=4)
    _add_q(p)

    p = sub.add_parser("lk", help="linking matrix")
    p.add_argument("--input", required=True)

    p = sub.add_parser("compose", help="stack diagrams bottom to top")
    p.add_argument("inputs", nargs="+")

    p = sub.add_parser("invert", help="reflect a diagram top to bottom")
    p.add_argument("--input", required=True)

    p = sub.add_parser("example", help="print a built-in diagram")
    p.add_argument("name", choices=sorted(EXAMPLES))

    p = sub.add_parser("pure-random", help="seeded random pure braid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--commutator-only", action="store_true")

    p = sub.add_parser("verify-paper", help="run the reproduction checks")
    _add_q(p)
    return parser


def _run(args, out) -> int:
    cmd = args.command
    if cmd == "mu":
        q = _check_q(args)
        index = _parse_index(args.index)
        d = load_diagram(_read(args.input))
        if args.dump_presentation:
            print(presentation_from_diagram(d).dump(), file=sys.stderr)
        print(_dumps(mu_bar(d, index, q).as_record()), file=out)
    elif cmd == "table":
        q = _check_q(args)
        d = load_diagram(_read(args.input))
        for value in all_mu_up_to_weight(d, args.weight, q):
            print(_dumps(value.as_record()), file=out)
    elif cmd == "lk":
        print(_dumps(dg.linking_matrix(load_diagram(_read(args.input)))), file=out)
    elif cmd == "compose":
        ds = [load_diagram(_read(path)) for path in args.inputs]
        out.write(format_dsl(dg.compose_all(ds)))
    elif cmd == "invert":
        out.write(format_dsl(dg.invert(load_diagram(_read(args.input)))))
    elif cmd == "example":
        out.write(format_dsl(EXAMPLES[args.name]()))
    elif cmd == "pure-random":
        try:
            w = random_pure_braid(args.n, args.length, args.seed, args.commutator_only)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out.write(format_dsl(w))
    elif cmd == "verify-paper":
        q = _check_q(args)
        results = checks.run_all(q)
        for r in results:
            print(r.row(), file=out)
        failed = sum(not r.passed for r in results)
        print(f"{len(results) - failed}/{len(results)} checks passed", file=out)
        return 3 if failed else 0
    return 0


def _report(kind: str, message: str):
    print(_dumps({"error": kind, "message": message}), file=sys.stderr)


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return _run(args, out)
    except _USAGE_ERRORS as exc:
        _report(exc.kind, str(exc))
        return 2
    except IndexError as exc:
        _report("IndexError", str(exc))
        return 2
    except StringLinkError as exc:
        _report(exc.kind, str(exc))
        return 1
    except ValueError as exc:
        _report("ValueError", str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
