"""Combinatorial model of a graph-like space with finitely many edges.

A :class:`TopoGraph` is a multigraph in which every edge has two end slots.
A slot either holds a vertex id (the edge is attached there) or is
:data:`OPEN` (the edge runs off to an end of the space and has no endpoint).
Vertexless circle components are stored as a bare count.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import Optional

from .errors import GraphError

OPEN = None
Slot = Optional[str]


@dataclass(frozen=True)
class Edge:
    id: str
    ends: tuple[Slot, Slot]

    @property
    def is_loop(self) -> bool:
        return self.ends[0] is not OPEN and self.ends[0] == self.ends[1]

    @property
    def open_count(self) -> int:
        return sum(1 for s in self.ends if s is OPEN)

    @property
    def is_open_arc(self) -> bool:
        return self.ends[0] is OPEN and self.ends[1] is OPEN


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


@dataclass(frozen=True)
class TopoGraph:
    vertices: tuple[str, ...] = ()
    edges: tuple[Edge, ...] = ()
    circles: int = 0
    _edge_index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "_edge_index", {e.id: e for e in self.edges})

    @classmethod
    def build(
        cls,
        vertices: Iterable[str] = (),
        edges: Iterable[tuple[str, Slot, Slot]] = (),
        circles: int = 0,
    ) -> TopoGraph:
        """Shorthand constructor: ``edges`` are ``(id, slot, slot)`` triples."""
        return cls(tuple(vertices), tuple(Edge(eid, (a, b)) for eid, a, b in edges), circles)

    def edge(self, eid: str) -> Edge:
        try:
            return self._edge_index[eid]
        except KeyError:
            raise GraphError(f"unknown edge id {eid!r}") from None

    def has_edge(self, eid: str) -> bool:
        return eid in self._edge_index

    def degree(self, v: str) -> int:
        """Attached-slot count at ``v``; a loop contributes 2."""
        return sum(1 for e in self.edges for s in e.ends if s == v)

    def loop_count(self, v: str) -> int:
        return sum(1 for e in self.edges if e.is_loop and e.ends[0] == v)

    def open_slots(self) -> list[tuple[str, int]]:
        """All open slots as sorted ``(edge id, end index)`` pairs."""
        return sorted((e.id, i) for e in self.edges for i, s in enumerate(e.ends) if s is OPEN)

    def point_count(self) -> float:
        if self.edges or self.circles:
            return math.inf
        return len(self.vertices)


def validate(g: TopoGraph) -> Violation | None:
    """Return the first invariant violation of ``g``, or ``None`` if it is well formed."""
    seen: set[str] = set()
    for v in g.vertices:
        if not isinstance(v, str) or not v:
            return Violation("bad-identifier", f"vertex id {v!r} is not a non-empty string")
        if v in seen:
            return Violation("duplicate-vertex", f"vertex {v!r} declared twice")
        seen.add(v)
    edge_ids: set[str] = set()
    for e in g.edges:
        if not isinstance(e.id, str) or not e.id:
            return Violation("bad-identifier", f"edge id {e.id!r} is not a non-empty string")
        if e.id in edge_ids:
            return Violation("duplicate-edge", f"edge {e.id!r} declared twice")
        edge_ids.add(e.id)
        if len(e.ends) != 2:
            return Violation("bad-slot-count", f"edge {e.id!r} has {len(e.ends)} end slots")
        for s in e.ends:
            if s is not OPEN and s not in seen:
                return Violation("dangling-reference", f"edge {e.id!r} references missing vertex {s!r}")
    if not isinstance(g.circles, int) or g.circles < 0:
        return Violation("negative-circles", f"circle count {g.circles!r} is negative")
    return None


def require_valid(g: TopoGraph) -> None:
    violation = validate(g)
    if violation is not None:
        raise GraphError(str(violation))


def fresh_id(prefix: str, taken: Iterable[str] | set[str]) -> str:
    taken = taken if isinstance(taken, set) else set(taken)
    k = 0
    while f"{prefix}{k}" in taken:
        k += 1
    return f"{prefix}{k}"


class FreshIds:
    """Deterministic generator of identifiers that avoid those already in use."""

    def __init__(self, taken: Iterable[str], prefix: str):
        self.taken = set(taken)
        self.prefix = prefix

    def __call__(self) -> str:
        new = fresh_id(self.prefix, self.taken)
        self.taken.add(new)
        return new


def vertex_ids(g: TopoGraph) -> FreshIds:
    return FreshIds(g.vertices, "x")


def edge_ids(g: TopoGraph) -> FreshIds:
    return FreshIds((e.id for e in g.edges), "f")


def subdivide(g: TopoGraph, eid: str) -> TopoGraph:
    """Split edge ``eid`` at a fresh degree-2 vertex."""
    require_valid(g)
    return subdivide_at(g, eid)[0]


def subdivide_at(g: TopoGraph, eid: str) -> tuple[TopoGraph, str]:
    """Like :func:`subdivide` but also return the id of the new vertex."""
    e = g.edge(eid)
    x = vertex_ids(g)()
    new_edge = edge_ids(g)()
    edges: list[Edge] = []
    for other in g.edges:
        if other.id == eid:
            edges.append(Edge(eid, (e.ends[0], x)))
            edges.append(Edge(new_edge, (x, e.ends[1])))
        else:
            edges.append(other)
    return TopoGraph(g.vertices + (x,), tuple(edges), g.circles), x


def relabel(g: TopoGraph, vmap: Mapping[str, str], emap: Mapping[str, str] | None = None) -> TopoGraph:
    """Rename vertices (and optionally edges); unmapped ids are kept."""
    emap = emap or {}

    def slot(s: Slot) -> Slot:
        return OPEN if s is OPEN else vmap.get(s, s)

    return TopoGraph(
        tuple(vmap.get(v, v) for v in g.vertices),
        tuple(Edge(emap.get(e.id, e.id), (slot(e.ends[0]), slot(e.ends[1]))) for e in g.edges),
        g.circles,
    )


def disjoint_union(graphs: Iterable[TopoGraph]) -> TopoGraph:
    """Disjoint union with ids rewritten as ``<index>.<old id>``."""
    vertices: list[str] = []
    edges: list[Edge] = []
    circles = 0
    for i, h in enumerate(graphs):
        vmap = {v: f"{i}.{v}" for v in h.vertices}
        vertices.extend(vmap.values())
        for e in h.edges:
            ends = tuple(OPEN if s is OPEN else vmap[s] for s in e.ends)
            edges.append(Edge(f"{i}.{e.id}", ends))
        circles += h.circles
    return TopoGraph(tuple(vertices), tuple(edges), circles)


def _vertex_partition(g: TopoGraph) -> dict[str, str]:
    parent = {v: v for v in g.vertices}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in g.edges:
        a, b = e.ends
        if a is not OPEN and b is not OPEN:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
    return {v: find(v) for v in g.vertices}


def components(g: TopoGraph) -> list[TopoGraph]:
    """Connected components; each circle and each open arc is its own component."""
    require_valid(g)
    root = _vertex_partition(g)
    groups: dict[str, tuple[list[str], list[Edge]]] = {}
    for v in g.vertices:
        groups.setdefault(root[v], ([], []))[0].append(v)
    arcs: list[TopoGraph] = []
    for e in g.edges:
        attached = next((s for s in e.ends if s is not OPEN), None)
        if attached is None:
            arcs.append(TopoGraph((), (e,), 0))
        else:
            groups[root[attached]][1].append(e)
    out = [TopoGraph(tuple(vs), tuple(es), 0) for vs, es in groups.values()]
    out.extend(arcs)
    out.extend(TopoGraph((), (), 1) for _ in range(g.circles))
    return out


def component_count(g: TopoGraph) -> int:
    root = _vertex_partition(g)
    arcs = sum(1 for e in g.edges if e.is_open_arc)
    return len(set(root.values())) + arcs + g.circles


def is_connected(g: TopoGraph) -> bool:
    require_valid(g)
    return component_count(g) == 1


def is_compact(g: TopoGraph) -> bool:
    require_valid(g)
    return all(s is not OPEN for e in g.edges for s in e.ends)
