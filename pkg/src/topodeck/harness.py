"""Exhaustive enumeration of compact graphs and the deck-injectivity check.

The universe is built from connected pieces. Connected components with at
least one edge are realised from degree sequences whose entries avoid 2 (so
they are already smoothed) and deduplicated by certificate. A graph in the
universe is a multiset of such pieces plus circles and isolated vertices,
and its certificate is assembled from the piece certificates.

Decks are assembled the same way: deleting a point only touches the piece
that contains it, so the cards of every piece are computed once and
recombined with the remaining pieces.
"""

from __future__ import annotations

import hashlib
import json
from collections.abc import Iterator
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from .canon import certificate_parts, graph_from_certificate, join_certificate, split_certificate
from .compactification import max_nstar
from .graph import TopoGraph, is_connected
from .surgery import deck as direct_deck
from .surgery import point_classes, remove_point


CIRCLE = "O"
POINT = "V1:o0:l0:m"
REPORT_VERSION = 1


@dataclass(frozen=True)
class EnumerationBudget:
    """Size limits for the universe.

    ``max_edges`` bounds the edges of the smoothed form. Circles and isolated
    vertices cost no edges; each has its own cap, defaulting to
    ``max(1, max_edges)``.
    """

    max_edges: int
    connected_only: bool = False
    min_points: int = 3
    require_edge: bool = True
    max_circles: int | None = None
    max_isolated: int | None = None

    def __post_init__(self):
        if self.max_edges < 0:
            raise ValueError("max_edges must be >= 0")
        if self.min_points < 3:
            raise ValueError("min_points must be >= 3")
        if self.max_circles is None:
            object.__setattr__(self, "max_circles", max(1, self.max_edges))
        if self.max_isolated is None:
            object.__setattr__(self, "max_isolated", max(1, self.max_edges))
        if self.max_circles < 0 or self.max_isolated < 0:
            raise ValueError("component caps must be >= 0")


def _degree_sequences(n: int, total: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing sequences of ``n`` degrees in {1, 3, 4, ...} summing to ``total``."""
    if n == 0:
        if total == 0:
            yield ()
        return
    for d in range(min(cap, total - (n - 1)), 0, -1):
        if d == 2:
            continue
        for rest in _degree_sequences(n - 1, total - d, d):
            yield (d,) + rest


def _realizations(degrees: tuple[int, ...]) -> Iterator[tuple[list[int], dict[tuple[int, int], int]]]:
    """All loop counts and edge multiplicities realising ``degrees`` on labelled vertices."""
    n = len(degrees)
    rem = list(degrees)
    loops = [0] * n
    mult: dict[tuple[int, int], int] = {}

    def spread(i: int, j: int, r: int):
        if r == 0:
            yield from place(i + 1)
            return
        if j >= n:
            return
        for k in range(min(r, rem[j]), -1, -1):
            if k:
                mult[(i, j)] = k
                rem[j] -= k
            yield from spread(i, j + 1, r - k)
            if k:
                del mult[(i, j)]
                rem[j] += k

    def place(i: int):
        if i == n:
            yield list(loops), dict(mult)
            return
        r = rem[i]
        for l in range(r // 2, -1, -1):
            loops[i] = l
            rem[i] = 0
            yield from spread(i, i + 1, r - 2 * l)
            rem[i] = r
        loops[i] = 0

    yield from place(0)


def _build(n: int, loops: list[int], mult: dict[tuple[int, int], int]) -> TopoGraph:
    ids = [str(i) for i in range(n)]
    edges = []
    for i, c in enumerate(loops):
        edges.extend((ids[i], ids[i]) for _ in range(c))
    for (i, j), c in sorted(mult.items()):
        edges.extend((ids[i], ids[j]) for _ in range(c))
    return TopoGraph.build(ids, ((f"e{k}", a, b) for k, (a, b) in enumerate(edges)))


def raw_connected(m: int) -> Iterator[TopoGraph]:
    """Labelled connected graphs with ``m`` edges and no vertex of degree 0 or 2.

    Every homeomorphism class of connected compact graphs with ``m`` edges in
    smoothed form appears at least once, usually many times.
    """
    if m < 1:
        return
    for n in range(1, m + 2):
        for degrees in _degree_sequences(n, 2 * m, 2 * m):
            for loops, mult in _realizations(degrees):
                g = _build(n, loops, mult)
                if is_connected(g):
                    yield g


@lru_cache(maxsize=None)
def connected_pieces(m: int) -> tuple[str, ...]:
    """Sorted component certificates of connected smoothed graphs with exactly ``m`` edges."""
    parts = set()
    for g in raw_connected(m):
        (part,) = certificate_parts(g)
        parts.add(part)
    return tuple(sorted(parts))


def _multisets(pieces: list[tuple[str, int]], budget: int, start: int = 0) -> Iterator[list[str]]:
    yield []
    for k in range(start, len(pieces)):
        part, cost = pieces[k]
        if cost <= budget:
            for rest in _multisets(pieces, budget - cost, k):
                yield [part] + rest


def _universe_parts(budget: EnumerationBudget) -> list[list[str]]:
    pieces = [(p, m) for m in range(1, budget.max_edges + 1) for p in connected_pieces(m)]
    out: list[list[str]] = []
    if budget.connected_only:
        candidates = [[p] for p, _ in pieces]
        if budget.max_circles >= 1:
            candidates.append([CIRCLE])
        if budget.max_isolated >= 1:
            candidates.append([POINT])
    else:
        candidates = []
        for core in _multisets(pieces, budget.max_edges):
            for c in range(budget.max_circles + 1):
                for i in range(budget.max_isolated + 1):
                    candidates.append(core + [CIRCLE] * c + [POINT] * i)
    for parts in candidates:
        has_edge = any(p != POINT for p in parts)
        points = float("inf") if has_edge else len(parts)
        if points < budget.min_points:
            continue
        if budget.require_edge and not has_edge:
            continue
        out.append(sorted(parts))
    out.sort(key=join_certificate)
    return out


def enumerate_canonical(budget: EnumerationBudget) -> Iterator[TopoGraph]:
    """One canonical representative per homeomorphism class, in certificate order."""
    for parts in _universe_parts(budget):
        yield graph_from_certificate(join_certificate(parts))


def enumerate_certificates(budget: EnumerationBudget) -> list[str]:
    return [join_certificate(parts) for parts in _universe_parts(budget)]


@lru_cache(maxsize=None)
def piece_cards(part: str) -> tuple[tuple[str, ...], ...]:
    """Cards of a single piece, each given as its sorted component certificates."""
    g = graph_from_certificate(join_certificate([part]))
    return tuple(sorted({tuple(certificate_parts(remove_point(g, p))) for p in point_classes(g)}))


@lru_cache(maxsize=None)
def piece_min_estar(part: str) -> int:
    if part == POINT:
        return 0
    if part == CIRCLE:
        return 2
    g = graph_from_certificate(join_certificate([part]))
    return min([2] + [g.degree(v) for v in g.vertices])


def composed_deck(cert: str) -> frozenset[str]:
    """Deck of the graph with certificate ``cert``, assembled piece by piece."""
    parts = split_certificate(cert)
    cards = set()
    for k, part in enumerate(parts):
        if part in parts[:k]:
            continue
        rest = parts[:k] + parts[k + 1:]
        for card in piece_cards(part):
            cards.add(join_certificate(rest + list(card)))
    return frozenset(cards)


def deck_hash(cards) -> str:
    return hashlib.sha256("\n".join(sorted(cards)).encode()).hexdigest()


def _card_has_finite_compactification(card_cert: str) -> bool:
    return max_nstar(graph_from_certificate(card_cert)) < float("inf")


@dataclass
class InjectivityReport:
    budget: EnumerationBudget
    universe_size: int
    deck_groups: dict[str, list[str]]
    collisions: list[dict]
    min_estar_table: dict[str, int]
    hypothesis_failures: list[str] = field(default_factory=list)

    @property
    def injective(self) -> bool:
        return not self.collisions

    def to_json_obj(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "budget": asdict(self.budget),
            "universe_size": self.universe_size,
            "collisions": self.collisions,
            "min_estar": self.min_estar_table,
            "hypothesis_failures": self.hypothesis_failures,
            "deck_groups": self.deck_groups,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> InjectivityReport:
        data = json.loads(text)
        if data.get("version") != REPORT_VERSION:
            raise ValueError(f"unsupported report version {data.get('version')!r}")
        return cls(
            budget=EnumerationBudget(**data["budget"]),
            universe_size=data["universe_size"],
            deck_groups={k: list(v) for k, v in data["deck_groups"].items()},
            collisions=data["collisions"],
            min_estar_table=data["min_estar"],
            hypothesis_failures=data.get("hypothesis_failures", []),
        )

    def to_text(self) -> str:
        b = self.budget
        hist: dict[int, int] = {}
        for value in self.min_estar_table.values():
            hist[value] = hist.get(value, 0) + 1
        lines = [
            f"budget max_edges={b.max_edges} connected_only={str(b.connected_only).lower()} "
            f"min_points={b.min_points} require_edge={str(b.require_edge).lower()} "
            f"max_circles={b.max_circles} max_isolated={b.max_isolated}",
            f"universe_size {self.universe_size}",
            f"distinct_decks {len(self.deck_groups)}",
            f"collisions {len(self.collisions)}",
        ]
        for c in self.collisions:
            lines.append(f"collision {c['deck_hash']} " + " ".join(c["graphs"]))
        lines.append("min_estar " + " ".join(f"{k}:{hist[k]}" for k in sorted(hist)))
        lines.append(f"hypothesis_failures {len(self.hypothesis_failures)}")
        lines.append("result " + ("injective" if self.injective else "NOT injective") + " within this budget only")
        return "\n".join(lines) + "\n"


def verify_deck_injectivity(budget: EnumerationBudget, cache=None, method: str = "composed") -> InjectivityReport:
    """Compute every deck in the universe and group graphs by deck.

    ``method="direct"`` computes each deck with :func:`topodeck.surgery.deck`
    instead of recombining piece cards; it is slower and exists to cross-check.
    ``cache`` is an optional :class:`topodeck.cache.DeckCache`.
    """
    if method not in ("composed", "direct"):
        raise ValueError(f"unknown method {method!r}")
    certs = enumerate_certificates(budget)
    stored = cache.load_or_reset() if cache is not None else {}
    fresh: dict[str, tuple[str, ...]] = {}
    groups: dict[str, list[str]] = {}
    min_estar: dict[str, int] = {}
    failures: list[str] = []
    for cert in certs:
        cards = stored.get(cert)
        if cards is None:
            if method == "direct":
                cards = tuple(direct_deck(graph_from_certificate(cert)).sorted_cards())
            else:
                cards = tuple(sorted(composed_deck(cert)))
            fresh[cert] = cards
        groups.setdefault(deck_hash(cards), []).append(cert)
        min_estar[cert] = min(piece_min_estar(p) for p in split_certificate(cert))
        if not any(_card_has_finite_compactification(c) for c in cards):
            failures.append(cert)
    if cache is not None and fresh:
        cache.store({**stored, **fresh})
    collisions = [
        {"deck_hash": h, "graphs": sorted(gs)} for h, gs in sorted(groups.items()) if len(gs) > 1
    ]
    return InjectivityReport(
        budget=budget,
        universe_size=len(certs),
        deck_groups={h: sorted(gs) for h, gs in sorted(groups.items())},
        collisions=collisions,
        min_estar_table=min_estar,
        hypothesis_failures=failures,
    )
