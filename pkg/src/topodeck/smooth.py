"""Suppression of degree-2 vertices: the homeomorphism normal form of a 1-complex."""

from __future__ import annotations

import random

from .graph import OPEN, Edge, TopoGraph, require_valid


def _incidence(ends: dict[str, list]) -> dict[str, list[tuple[str, int]]]:
    inc: dict[str, list[tuple[str, int]]] = {}
    for eid, pair in ends.items():
        for i, s in enumerate(pair):
            if s is not OPEN:
                inc.setdefault(s, []).append((eid, i))
    return inc


def smooth(g: TopoGraph, rng: random.Random | None = None) -> TopoGraph:
    """Suppress degree-2 vertices until none remain.

    A degree-2 vertex on two distinct edges is removed and the edges are
    spliced along their far slots; a vertex carrying nothing but one loop is
    removed together with the loop and becomes a circle component. With
    ``rng`` the next vertex to suppress is drawn at random, otherwise the
    first in declaration order is taken (the result is the same up to
    isomorphism either way).
    """
    require_valid(g)
    ends = {e.id: list(e.ends) for e in g.edges}
    vertices = list(g.vertices)
    circles = g.circles
    while True:
        inc = _incidence(ends)
        candidates = [v for v in vertices if len(inc.get(v, ())) == 2]
        if not candidates:
            break
        v = rng.choice(candidates) if rng is not None else candidates[0]
        (e1, i1), (e2, i2) = inc[v]
        vertices.remove(v)
        if e1 == e2:
            del ends[e1]
            circles += 1
        else:
            ends[e1] = [ends[e1][1 - i1], ends[e2][1 - i2]]
            del ends[e2]
    return TopoGraph(tuple(vertices), tuple(Edge(eid, (a, b)) for eid, (a, b) in ends.items()), circles)


def is_smooth(g: TopoGraph) -> bool:
    return all(g.degree(v) != 2 for v in g.vertices)
