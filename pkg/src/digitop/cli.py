"""Command-line front end.

Exit codes follow the verdict, never incidental I/O: 0 for a positive
answer (adjacent / accepted / contractible / all stages passed), 1 for
a negative one, 2 for an inconclusive search, 3 for any input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog
from .formats import (
    KIND_HOMOTOPY,
    KIND_IMAGE,
    ParseError,
    parse_document,
    serialize_homotopy,
    serialize_image,
)
from .homotopy import is_contraction, verify_homotopy
from .lattice import Adjacency, Point, adjacent, named_adjacency
from .search import (
    CONTRACTIBLE,
    NOT_CONTRACTIBLE,
    SearchLimits,
    decide_contractibility,
    guided_search,
)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_INCONCLUSIVE = 2
EXIT_INPUT_ERROR = 3


class _InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is taken by the
    # inconclusive verdict, so route everything to the input-error code.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_INPUT_ERROR)


def _parse_point(text: str) -> Point:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise _InputError(f"malformed point {text!r}; expected e.g. 0,1,-1") from None


def _parse_adjacency(text: str) -> Adjacency:
    """Accept a named adjacency (e.g. 18) or an explicit c_u:n (e.g. c2:3)."""
    text = text.strip()
    if text.isdigit():
        return named_adjacency(int(text))
    spec = text.lower().removeprefix("c").lstrip("_")
    parts = spec.split(":")
    if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
        return Adjacency(dimension=int(parts[1]), u=int(parts[0]))
    raise _InputError(f"malformed adjacency {text!r}; expected a name or c<u>:<n>")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from None


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _cmd_adjacent(args: argparse.Namespace) -> int:
    x = _parse_point(args.x)
    y = _parse_point(args.y)
    adj = _parse_adjacency(args.adjacency)
    result = adjacent(x, y, adj)
    print("true" if result else "false")
    return EXIT_TRUE if result else EXIT_FALSE


def _cmd_verify(args: argparse.Namespace) -> int:
    doc = parse_document(_read(args.certificate))
    if doc.kind != KIND_HOMOTOPY:
        raise _InputError(f"expected a homotopy document, got kind {doc.kind!r}")
    cert = doc.payload
    if args.contraction:
        verdict = is_contraction(cert.homotopy)
    else:
        verdict = verify_homotopy(cert.homotopy, cert.start, cert.end)
    if verdict.accepted:
        print(f"accept: {verdict.detail}")
        if verdict.basepoint is not None:
            print(f"q = {verdict.basepoint}")
        return EXIT_TRUE
    where = f" at x={verdict.x}" if verdict.x is not None else ""
    where += f", x'={verdict.x2}" if verdict.x2 is not None else ""
    where += f", t={verdict.t}" if verdict.t is not None else ""
    print(f"reject ({verdict.condition}{where}): {verdict.detail}")
    return EXIT_FALSE


def _cmd_contract(args: argparse.Namespace) -> int:
    doc = parse_document(_read(args.image))
    if doc.kind != KIND_IMAGE:
        raise _InputError(f"expected an image document, got kind {doc.kind!r}")
    limits = SearchLimits(
        max_states=args.max_states,
        max_seconds=args.max_seconds,
    )
    if args.mode == "exhaustive":
        outcome = decide_contractibility(doc.payload, limits)
    else:
        outcome = guided_search(doc.payload, limits)
    print(f"verdict: {outcome.verdict.value}")
    if outcome.note:
        print(f"note: {outcome.note}")
    stats = outcome.stats
    print(
        f"stats: visited={stats.visited_states} expansions={stats.expansions}"
        f" frontier-peak={stats.frontier_peak} elapsed-ms={stats.elapsed_ms}"
    )
    if outcome.witness is not None:
        print(f"witness: contraction of length {outcome.witness.m}")
        if args.emit_witness:
            _write(args.emit_witness, serialize_homotopy(outcome.witness))
            print(f"witness written to {args.emit_witness}")
    if outcome.verdict is CONTRACTIBLE:
        return EXIT_TRUE
    if outcome.verdict is NOT_CONTRACTIBLE:
        return EXIT_FALSE
    return EXIT_INCONCLUSIVE


def _cmd_builtin(args: argparse.Namespace) -> int:
    adjacency = _parse_adjacency(args.adjacency) if args.adjacency else None
    try:
        if args.name == "mss18-contraction":
            text = serialize_homotopy(catalog.mss18_contraction(adjacency or 18))
        else:
            text = serialize_image(catalog.entry(args.name, adjacency).image)
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    if args.emit:
        _write(args.emit, text)
        print(f"written to {args.emit}")
    else:
        sys.stdout.write(text)
    return EXIT_TRUE


def _cmd_refute_han(args: argparse.Namespace) -> int:
    report = catalog.refutation_report(include_search=args.search)
    print(report.to_json() if args.json else report.render())
    return EXIT_TRUE if report.passed else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="digitop", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("adjacent", help="test whether two points are adjacent")
    p.add_argument("x", help="first point, e.g. 0,0,0")
    p.add_argument("y", help="second point")
    p.add_argument("--adjacency", required=True, help="name (4, 8, 6, 18, 26) or c<u>:<n>")
    p.set_defaults(run=_cmd_adjacent)

    p = sub.add_parser("verify", help="verify a homotopy certificate file")
    p.add_argument("certificate")
    p.add_argument(
        "--contraction",
        action="store_true",
        help="require a contraction (identity to a constant map)",
    )
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("contract", help="decide contractibility of an image file")
    p.add_argument("image")
    p.add_argument("--mode", choices=("exhaustive", "guided"), default="exhaustive")
    p.add_argument("--max-states", type=int, default=SearchLimits.max_states)
    p.add_argument("--max-seconds", type=float, default=SearchLimits.max_seconds)
    p.add_argument("--emit-witness", metavar="FILE")
    p.set_defaults(run=_cmd_contract)

    p = sub.add_parser("builtin", help="export a built-in object")
    p.add_argument("name", help="mss18, mss18-y1, mss18-y2, scc<k>, mss18-contraction")
    p.add_argument("--adjacency", help="name or c<u>:<n> (object-dependent default)")
    p.add_argument("--emit", metavar="FILE", help="write to FILE instead of stdout")
    p.set_defaults(run=_cmd_builtin)

    p = sub.add_parser(
        "refute-han",
        help="check the published non-contractibility claim for MSS_18",
    )
    p.add_argument("--search", action="store_true", help="also derive an independent witness")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(run=_cmd_refute_han)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args)
    except (_InputError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
