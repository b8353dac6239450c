"""Ends, the local end invariant E(x), finite compactifications and N-stars.

For a point ``x`` of a locally compact space and a compact neighbourhood
``D`` of ``x``, E(x) is the largest ``N`` such that ``D - {x}`` has an
``N``-point compactification. On these graphs every compactification of a
card is obtained by attaching its open slots to finitely many new points,
so the maximal one has exactly :func:`end_count` points in its remainder.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import DomainError, GraphError
from .graph import (
    OPEN,
    Edge,
    FreshIds,
    TopoGraph,
    components,
    is_compact,
    require_valid,
    vertex_ids,
)
from .surgery import (
    PointClass,
    VertexPoint,
    check_point,
    collapse,
    materialize,
    remove_point,
)

INFINITY = math.inf
"""E(x) may be infinite for general spaces; it never is for a :class:`TopoGraph`."""

Slot = tuple[str, int]


def end_count(g: TopoGraph) -> int:
    """Number of open slots, i.e. points in the Freudenthal remainder."""
    require_valid(g)
    return sum(e.open_count for e in g.edges)


def closed_star(g: TopoGraph, p: PointClass, depth: int = 1) -> tuple[TopoGraph, str]:
    """Compact neighbourhood of ``p``: its vertex plus every incident edge end.

    Each incident slot becomes a path of ``depth`` edges ending at a fresh
    vertex; a loop contributes two such paths. Returns the star and the id of
    the centre vertex.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    require_valid(g)
    host, centre = materialize(g, p)
    fresh = FreshIds((), "s")
    fresh.taken.add(centre)
    edges: list[Edge] = []
    k = 0
    for e in host.edges:
        for s in e.ends:
            if s != centre:
                continue
            prev = centre
            for _ in range(depth):
                nxt = fresh()
                edges.append(Edge(f"t{k}", (prev, nxt)))
                k += 1
                prev = nxt
    vertices = (centre,) + tuple(sorted(fresh.taken - {centre}))
    return TopoGraph(vertices, tuple(edges), 0), centre


def estar(g: TopoGraph, p: PointClass, depth: int = 1) -> int:
    """E(p) from its definition: ends of the punctured closed star."""
    check_point(g, p)
    star, centre = closed_star(g, p, depth)
    return end_count(remove_point(star, VertexPoint(centre)))


def estar_closed_form(g: TopoGraph, p: PointClass) -> int:
    """E(p) = attached-slot count at a vertex (loops twice), 2 inside an edge or circle."""
    require_valid(g)
    check_point(g, p)
    if isinstance(p, VertexPoint):
        return g.degree(p.vertex)
    return 2


def estar_add(a: float, b: float) -> float:
    return INFINITY if INFINITY in (a, b) else a + b


def estar_additivity_check(g: TopoGraph, p: PointClass, q: PointClass) -> bool:
    """E of the collapsed point {p, q} equals E(p) + E(q)."""
    if p == q:
        raise DomainError(f"additivity needs two distinct point classes, got {p} twice")
    if not is_compact(g):
        raise DomainError("non-compact input")
    quotient, merged = collapse(g, p, q)
    return estar(quotient, VertexPoint(merged)) == estar_add(estar(g, p), estar(g, q))


def _require_noncompact(g: TopoGraph) -> None:
    require_valid(g)
    if is_compact(g):
        raise DomainError("compact input: the graph is already compact")


def _attach(g: TopoGraph, blocks: Sequence[Sequence[Slot]], prefix: str) -> tuple[TopoGraph, list[str]]:
    fresh = FreshIds(g.vertices, prefix)
    targets: dict[Slot, str] = {}
    new_vertices: list[str] = []
    for block in blocks:
        w = fresh()
        new_vertices.append(w)
        for slot in block:
            targets[slot] = w
    edges = tuple(
        Edge(e.id, tuple(targets[(e.id, i)] if s is OPEN else s for i, s in enumerate(e.ends)))
        for e in g.edges
    )
    return TopoGraph(g.vertices + tuple(new_vertices), edges, g.circles), new_vertices


def freudenthal(g: TopoGraph) -> TopoGraph:
    """Maximal finite compactification: one new point per end."""
    _require_noncompact(g)
    return _attach(g, [[s] for s in g.open_slots()], "end")[0]


def alexandroff(g: TopoGraph) -> tuple[TopoGraph, str]:
    """One-point compactification; returns the graph and the point at infinity."""
    _require_noncompact(g)
    h, (inf,) = _attach(g, [g.open_slots()], "inf")
    return h, inf


def _check_partition(g: TopoGraph, blocks: Sequence[Sequence[Slot]]) -> None:
    slots = g.open_slots()
    seen: list[Slot] = [tuple(s) for b in blocks for s in b]
    if any(len(b) == 0 for b in blocks):
        raise DomainError("invalid partition: empty block")
    if len(seen) != len(set(seen)):
        raise DomainError("invalid partition: a slot appears twice")
    if set(seen) != set(slots):
        missing = sorted(set(slots) - set(seen))
        extra = sorted(set(seen) - set(slots))
        raise DomainError(f"invalid partition: does not cover the open slots (missing {missing}, unknown {extra})")


def finite_compactification(g: TopoGraph, partition: Sequence[Sequence[Slot]]) -> TopoGraph:
    """Compactification with one remainder point per block of open slots."""
    _require_noncompact(g)
    blocks = [[tuple(s) for s in b] for b in partition]
    _check_partition(g, blocks)
    return _attach(g, blocks, "end")[0]


def max_nstar(g: TopoGraph) -> int:
    """Largest N admitting an N-star; 0 for compact graphs."""
    return 0 if is_compact(g) else end_count(g)


@dataclass(frozen=True)
class NStarWitness:
    """A decomposition ``{K, G_1..G_N}`` of ``whole``.

    ``whole`` is the input with every open-ended edge subdivided once. Each
    part is a tuple of tail edges of ``whole``: the open segment from the
    subdivision vertex out to an open slot. ``core`` is ``whole`` minus the
    interiors of all tails.
    """

    whole: TopoGraph
    core: TopoGraph
    parts: tuple[tuple[str, ...], ...]

    def validate(self) -> list[str]:
        """Structural check of the three N-star conditions; returns the failures."""
        problems: list[str] = []
        tails = {eid for part in self.parts for eid in part}
        if not is_compact(self.core):
            problems.append("core is not compact")
        if any(not part for part in self.parts):
            problems.append("empty part")
        if sum(len(part) for part in self.parts) != len(tails):
            problems.append("parts are not pairwise disjoint")
        whole_edges = {e.id for e in self.whole.edges}
        core_edges = {e.id for e in self.core.edges}
        if core_edges & tails:
            problems.append("core meets a part")
        if core_edges | tails != whole_edges or set(self.core.vertices) != set(self.whole.vertices):
            problems.append("core and parts do not cover the graph")
        for eid in tails & whole_edges:
            e = self.whole.edge(eid)
            if e.open_count != 1:
                problems.append(f"part edge {eid} is not a tail")
        for i, part in enumerate(self.parts):
            union = TopoGraph(
                self.core.vertices,
                self.core.edges + tuple(self.whole.edge(eid) for eid in part if eid in whole_edges - core_edges),
                self.core.circles,
            )
            if is_compact(union):
                problems.append(f"core plus part {i} is compact")
        return problems


def _even_blocks(items: list, n: int) -> list[list]:
    q, r = divmod(len(items), n)
    out, start = [], 0
    for i in range(n):
        size = q + (1 if i < r else 0)
        out.append(items[start:start + size])
        start += size
    return out


def nstar_witness(g: TopoGraph, n: int) -> NStarWitness:
    _require_noncompact(g)
    ends = end_count(g)
    if not 1 <= n <= ends:
        raise DomainError(f"N={n} out of range 1..{ends}")
    new_v = vertex_ids(g)
    added: list[str] = []
    taken_e = {e.id for e in g.edges}
    edges: list[Edge] = []
    tails: list[tuple[Slot, str]] = []
    for e in g.edges:
        if e.open_count == 0:
            edges.append(e)
            continue
        x = new_v()
        added.append(x)
        a_id, b_id = f"{e.id}/0", f"{e.id}/1"
        if a_id in taken_e or b_id in taken_e:
            raise GraphError(f"edge ids {a_id!r}/{b_id!r} collide with existing edges")
        edges.append(Edge(a_id, (e.ends[0], x)))
        edges.append(Edge(b_id, (x, e.ends[1])))
        if e.ends[0] is OPEN:
            tails.append(((e.id, 0), a_id))
        if e.ends[1] is OPEN:
            tails.append(((e.id, 1), b_id))
    whole = TopoGraph(g.vertices + tuple(added), tuple(edges), g.circles)
    tail_ids = {t for _, t in tails}
    core = TopoGraph(whole.vertices, tuple(e for e in whole.edges if e.id not in tail_ids), whole.circles)
    ordered = [t for _, t in sorted(tails)]
    parts = tuple(tuple(block) for block in _even_blocks(ordered, n))
    return NStarWitness(whole, core, parts)


def _punctured_star(g: TopoGraph, p: PointClass) -> tuple[TopoGraph, TopoGraph, str]:
    check_point(g, p)
    star, centre = closed_star(g, p)
    return star, remove_point(star, VertexPoint(centre)), centre


def splitting_number(g: TopoGraph, p: PointClass) -> int:
    """Clopen pieces of the punctured star whose closure contains ``p``.

    A piece limits to ``p`` exactly when it carries one of the open slots
    created by deleting ``p``.
    """
    _, punctured, _ = _punctured_star(g, p)
    return sum(1 for c in components(punctured) if any(e.open_count for e in c.edges))


def separating_number(g: TopoGraph, p: PointClass) -> int:
    """Clopen pieces of the punctured star that meet the component of ``p`` in the star."""
    star, punctured, centre = _punctured_star(g, p)
    home = next(c for c in components(star) if centre in c.vertices)
    home_vertices = set(home.vertices)
    home_edges = {e.id for e in home.edges}
    count = 0
    for c in components(punctured):
        if home_vertices & set(c.vertices) or home_edges & {e.id for e in c.edges}:
            count += 1
    return count
