"""Point deletion, decks and two-point quotients."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .canon import certificate
from .errors import DomainError, GraphError
from .graph import (
    OPEN,
    Edge,
    TopoGraph,
    edge_ids,
    is_compact,
    require_valid,
    subdivide_at,
    vertex_ids,
)


@dataclass(frozen=True, order=True)
class VertexPoint:
    vertex: str

    def __str__(self) -> str:
        return f"v:{self.vertex}"


@dataclass(frozen=True, order=True)
class EdgeInteriorPoint:
    edge: str

    def __str__(self) -> str:
        return f"e:{self.edge}"


@dataclass(frozen=True, order=True)
class CirclePoint:
    def __str__(self) -> str:
        return "c"


PointClass = Union[VertexPoint, EdgeInteriorPoint, CirclePoint]


def parse_point(text: str) -> PointClass:
    """Parse ``v:<id>``, ``e:<id>`` or ``c``."""
    if text == "c":
        return CirclePoint()
    kind, sep, ident = text.partition(":")
    if sep and ident:
        if kind == "v":
            return VertexPoint(ident)
        if kind == "e":
            return EdgeInteriorPoint(ident)
    raise GraphError(f"bad point class {text!r}; expected v:<id>, e:<id> or c")


def check_point(g: TopoGraph, p: PointClass) -> None:
    if isinstance(p, VertexPoint):
        if p.vertex not in g.vertices:
            raise GraphError(f"invalid point class {p}: no such vertex")
    elif isinstance(p, EdgeInteriorPoint):
        if not g.has_edge(p.edge):
            raise GraphError(f"invalid point class {p}: no such edge")
    elif isinstance(p, CirclePoint):
        if g.circles < 1:
            raise GraphError("invalid point class c: graph has no circle component")
    else:
        raise GraphError(f"invalid point class {p!r}")


def point_classes(g: TopoGraph) -> list[PointClass]:
    """Every vertex, every edge, and one class for all circle points."""
    out: list[PointClass] = [VertexPoint(v) for v in g.vertices]
    out.extend(EdgeInteriorPoint(e.id) for e in g.edges)
    if g.circles:
        out.append(CirclePoint())
    return out


def remove_point(g: TopoGraph, p: PointClass) -> TopoGraph:
    require_valid(g)
    check_point(g, p)
    if isinstance(p, VertexPoint):
        v = p.vertex
        edges = tuple(
            Edge(e.id, tuple(OPEN if s == v else s for s in e.ends)) if v in e.ends else e
            for e in g.edges
        )
        return TopoGraph(tuple(u for u in g.vertices if u != v), edges, g.circles)
    if isinstance(p, EdgeInteriorPoint):
        new_id = edge_ids(g)()
        edges: list[Edge] = []
        for e in g.edges:
            if e.id == p.edge:
                edges.append(Edge(e.id, (e.ends[0], OPEN)))
                edges.append(Edge(new_id, (OPEN, e.ends[1])))
            else:
                edges.append(e)
        return TopoGraph(g.vertices, tuple(edges), g.circles)
    return TopoGraph(g.vertices, g.edges + (Edge(edge_ids(g)(), (OPEN, OPEN)),), g.circles - 1)


@dataclass(frozen=True)
class Deck:
    cards: frozenset[str]
    labeled_cards: dict = field(hash=False)

    def sorted_cards(self) -> list[str]:
        return sorted(self.cards)

    def listing(self) -> list[str]:
        """``<class> -> <certificate>`` lines sorted by class."""
        return sorted(f"{p} -> {c}" for p, c in self.labeled_cards.items())


def deck(g: TopoGraph) -> Deck:
    require_valid(g)
    if not is_compact(g):
        raise DomainError("non-compact input: decks are computed for compact graphs only")
    if g.point_count() < 3:
        raise DomainError("the space must have at least three points")
    labeled = {p: certificate(remove_point(g, p)) for p in point_classes(g)}
    return Deck(frozenset(labeled.values()), labeled)


def materialize(g: TopoGraph, p: PointClass) -> tuple[TopoGraph, str]:
    """Make ``p`` a vertex without changing the space up to homeomorphism."""
    check_point(g, p)
    if isinstance(p, VertexPoint):
        return g, p.vertex
    if isinstance(p, EdgeInteriorPoint):
        return subdivide_at(g, p.edge)
    x = vertex_ids(g)()
    loop = Edge(edge_ids(g)(), (x, x))
    return TopoGraph(g.vertices + (x,), g.edges + (loop,), g.circles - 1), x


def collapse(g: TopoGraph, p: PointClass, q: PointClass) -> tuple[TopoGraph, str]:
    """Identify the points ``p`` and ``q``; return the quotient and the merged vertex."""
    require_valid(g)
    if p == q:
        raise DomainError(f"collapse needs two distinct point classes, got {p} twice")
    check_point(g, p)
    check_point(g, q)
    g1, x = materialize(g, p)
    g2, y = materialize(g1, q)
    merged = vertex_ids(g2)()
    edges = tuple(
        Edge(e.id, tuple(merged if s in (x, y) else s for s in e.ends)) if (x in e.ends or y in e.ends) else e
        for e in g2.edges
    )
    vertices = tuple(v for v in g2.vertices if v not in (x, y)) + (merged,)
    return TopoGraph(vertices, edges, g2.circles), merged
