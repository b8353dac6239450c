"""``topodeck`` command-line interface.

Exit status is 0 on success, 1 when an operation is called outside its
domain (non-compact input to ``deck``, a bad partition, an unknown point
class) and 2 when an input file cannot be parsed or is not a valid graph.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import __version__
from .cache import DeckCache, default_dir
from .canon import canon
from .compactification import (
    alexandroff,
    end_count,
    estar,
    finite_compactification,
    freudenthal,
    max_nstar,
    nstar_witness,
)
from .errors import DomainError, GraphError, ParseError
from .graph import TopoGraph, validate
from .harness import EnumerationBudget, verify_deck_injectivity
from .io import format_json, format_text, load, to_json_obj
from .surgery import collapse, deck, parse_point, point_classes


class InputError(Exception):
    pass


def _load(path: str) -> TopoGraph:
    try:
        g = load(path)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    violation = validate(g)
    if violation is not None:
        raise InputError(f"{path}: invalid graph: {violation}")
    return g


def _emit_graph(g: TopoGraph, as_json: bool, header: Sequence[str] = ()) -> str:
    if as_json:
        return format_json(g)
    return "".join(f"# {h}\n" for h in header) + format_text(g)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def cmd_canon(args) -> str:
    form = canon(_load(args.file))
    if args.json:
        return _dump({"certificate": form.certificate, "graph": to_json_obj(form.graph)})
    return form.certificate + "\n"


def cmd_deck(args) -> str:
    d = deck(_load(args.file))
    if args.json:
        return _dump({"cards": d.sorted_cards(), "labeled": {str(p): c for p, c in d.labeled_cards.items()}})
    lines = d.listing() if args.cards else d.sorted_cards()
    return "".join(line + "\n" for line in lines)


def cmd_estar(args) -> str:
    g = _load(args.file)
    points = [parse_point(p) for p in args.points] if args.points else point_classes(g)
    values = {str(p): estar(g, p) for p in points}
    if args.json:
        return _dump(values)
    return "".join(f"{k} {values[k]}\n" for k in sorted(values))


def cmd_ends(args) -> str:
    n = end_count(_load(args.file))
    return _dump({"ends": n}) if args.json else f"{n}\n"


def cmd_nstar(args) -> str:
    g = _load(args.file)
    if args.witness is None:
        n = max_nstar(g)
        return _dump({"max_nstar": n}) if args.json else f"{n}\n"
    w = nstar_witness(g, args.witness)
    core = sorted(e.id for e in w.core.edges)
    if args.json:
        return _dump({"core_edges": core, "parts": [list(p) for p in w.parts], "graph": to_json_obj(w.whole)})
    lines = ["K " + " ".join(core)]
    lines.extend(f"G{i + 1} " + " ".join(part) for i, part in enumerate(w.parts))
    return "\n".join(lines) + "\n"


def _parse_slot(text: str) -> tuple[str, int]:
    eid, sep, end = text.rpartition(".")
    if not sep or end not in ("0", "1") or not eid:
        raise DomainError(f"invalid partition: bad slot {text!r}, expected <edge>.<0|1>")
    return eid, int(end)


def cmd_compactify(args) -> str:
    g = _load(args.file)
    if args.kind == "freudenthal":
        return _emit_graph(freudenthal(g), args.json)
    if args.kind == "alexandroff":
        h, inf = alexandroff(g)
        return _emit_graph(h, args.json, [f"infinity {inf}"])
    if not args.block:
        raise DomainError("invalid partition: give at least one --block")
    blocks = [[_parse_slot(s) for s in b.split(",") if s] for b in args.block]
    return _emit_graph(finite_compactification(g, blocks), args.json)


def cmd_collapse(args) -> str:
    h, merged = collapse(_load(args.file), parse_point(args.p), parse_point(args.q))
    return _emit_graph(h, args.json, [f"merged {merged}"])


def cmd_verify(args) -> str:
    budget = EnumerationBudget(
        max_edges=args.max_edges,
        connected_only=args.connected,
        max_circles=args.max_circles,
        max_isolated=args.max_isolated,
    )
    cache_dir = args.cache or default_dir()
    report = verify_deck_injectivity(budget, DeckCache(cache_dir) if cache_dir else None)
    return report.to_json() if args.report == "json" else report.to_text()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="topodeck", description="Topological decks of finite graphs.")
    parser.add_argument("--version", action="version", version=f"topodeck {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True):
        p = sub.add_parser(name, help=help)
        if file:
            p.add_argument("file", help="graph file (text or JSON)")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.set_defaults(func=func)
        return p

    add("canon", cmd_canon, "print the homeomorphism certificate")
    p = add("deck", cmd_deck, "print the deck (compact input only)")
    p.add_argument("--cards", action="store_true", help="list '<class> -> <certificate>' per point class")
    p = add("estar", cmd_estar, "E(x) for every point class (or the given ones)")
    p.add_argument("points", nargs="*", help="point classes v:<id>, e:<id> or c")
    add("ends", cmd_ends, "number of ends")
    p = add("nstar", cmd_nstar, "largest N-star, or a witness for --witness N")
    p.add_argument("--witness", type=int, metavar="N")
    p = sub.add_parser("compactify", help="finite compactifications")
    p.add_argument("kind", choices=["freudenthal", "alexandroff", "partition"])
    p.add_argument("file")
    p.add_argument("--block", action="append", metavar="SLOTS", help="comma-separated <edge>.<end> slots; repeat per block")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compactify)
    p = add("collapse", cmd_collapse, "identify two points")
    p.add_argument("p")
    p.add_argument("q")
    p = sub.add_parser("verify", help="exhaustive deck-injectivity check")
    p.add_argument("--max-edges", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--max-circles", type=int)
    p.add_argument("--max-isolated", type=int)
    p.add_argument("--cache", metavar="DIR")
    p.add_argument("--report", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out.write(args.func(args))
    except InputError as exc:
        err.write(f"topodeck: {exc}\n")
        return 2
    except (DomainError, GraphError, ValueError) as exc:
        err.write(f"topodeck: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())
