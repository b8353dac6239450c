"""Canonical certificates for homeomorphism classes.

The certificate of a graph is built from its smoothed form, one component at
a time. Circles encode as ``O`` and open arcs as ``A``; every component with
vertices is canonically labeled by colour refinement plus individualization
(all leaves of the search tree are kept, no automorphism pruning), and the
lexicographically smallest encoding over those leaves is emitted. Component
encodings are sorted and joined, so certificate equality is exactly
isomorphism of smoothed forms.

Format (version ``tdc1``)::

    tdc1:<part>;<part>;...      parts sorted as strings
    O                           circle
    A                           open arc
    V<n>:o<opens>:l<loops>:m<mult>
        opens, loops  comma lists, one entry per vertex in canonical order
        mult          comma list of edge multiplicities for pairs i<j, row-major
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import GraphError
from .graph import OPEN, Edge, TopoGraph, components, require_valid
from .smooth import smooth

CERT_VERSION = "tdc1"
_PREFIX = CERT_VERSION + ":"


@dataclass(frozen=True)
class CanonicalForm:
    graph: TopoGraph
    certificate: str


def _arrays(comp: TopoGraph):
    index = {v: i for i, v in enumerate(comp.vertices)}
    n = len(index)
    mult = np.zeros((n, n), dtype=np.int64)
    loops = np.zeros(n, dtype=np.int64)
    opens = np.zeros(n, dtype=np.int64)
    for e in comp.edges:
        a, b = e.ends
        if a is OPEN:
            opens[index[b]] += 1
        elif b is OPEN:
            opens[index[a]] += 1
        elif a == b:
            loops[index[a]] += 1
        else:
            i, j = index[a], index[b]
            mult[i, j] += 1
            mult[j, i] += 1
    return mult, opens, loops


def _individualize(colors: np.ndarray, v: int) -> np.ndarray:
    c = 2 * colors + 1
    c[v] -= 1
    return c


def _leaves(mult: np.ndarray, colors: np.ndarray) -> Iterator[np.ndarray]:
    colors = _kernels.refine(mult, colors)
    counts = np.bincount(colors)
    if counts.max() == 1:
        perm = np.empty_like(colors)
        perm[colors] = np.arange(colors.shape[0])
        yield perm
        return
    target = int(np.flatnonzero(counts > 1)[0])
    for v in np.flatnonzero(colors == target):
        yield from _leaves(mult, _individualize(colors, int(v)))


def _initial_colors(mult, opens, loops) -> np.ndarray:
    degree = mult.sum(axis=1) + 2 * loops
    keys = list(zip(degree.tolist(), loops.tolist(), opens.tolist()))
    rank = {k: i for i, k in enumerate(sorted(set(keys)))}
    return np.array([rank[k] for k in keys], dtype=np.int64)


def canonical_order(comp: TopoGraph) -> list[str]:
    """Vertex ids of a connected component in canonical order."""
    mult, opens, loops = _arrays(comp)
    perms = np.array(list(_leaves(mult, _initial_colors(mult, opens, loops))), dtype=np.int64)
    best = perms[_kernels.min_encoding(mult, opens, loops, perms)]
    return [comp.vertices[i] for i in best]


def _encode(comp: TopoGraph, order: list[str]) -> str:
    mult, opens, loops = _arrays(comp)
    index = {v: i for i, v in enumerate(comp.vertices)}
    p = [index[v] for v in order]
    n = len(p)
    m = [str(int(mult[p[i], p[j]])) for i in range(n) for j in range(i + 1, n)]
    return "V{}:o{}:l{}:m{}".format(
        n,
        ",".join(str(int(opens[i])) for i in p),
        ",".join(str(int(loops[i])) for i in p),
        ",".join(m),
    )


def component_certificate(comp: TopoGraph) -> str:
    """Encoding of one connected, already smoothed component."""
    if not comp.vertices:
        if comp.circles == 1 and not comp.edges:
            return "O"
        if comp.circles == 0 and len(comp.edges) == 1 and comp.edges[0].is_open_arc:
            return "A"
        raise GraphError("not a single connected component")
    return _encode(comp, canonical_order(comp))


def join_certificate(parts: Iterable[str]) -> str:
    return _PREFIX + ";".join(sorted(parts))


def split_certificate(cert: str) -> list[str]:
    if not cert.startswith(_PREFIX):
        raise GraphError(f"not a {CERT_VERSION} certificate: {cert!r}")
    body = cert[len(_PREFIX):]
    return body.split(";") if body else []


def certificate_parts(g: TopoGraph) -> list[str]:
    """Sorted component encodings of ``smooth(g)``."""
    require_valid(g)
    return sorted(component_certificate(c) for c in components(smooth(g)))


def certificate(g: TopoGraph) -> str:
    return join_certificate(certificate_parts(g))


def graph_from_certificate(cert: str) -> TopoGraph:
    """Decode a certificate into its canonical representative graph."""
    vertices: list[str] = []
    edges: list[Edge] = []
    circles = 0

    def add_edge(a, b):
        edges.append(Edge(f"e{len(edges)}", (a, b)))

    for part in split_certificate(cert):
        if part == "O":
            circles += 1
            continue
        if part == "A":
            add_edge(OPEN, OPEN)
            continue
        try:
            head, o, lp, m = part.split(":")
            n = int(head[1:])
            opens = [int(x) for x in o[1:].split(",")] if n else []
            loops = [int(x) for x in lp[1:].split(",")] if n else []
            mult = [int(x) for x in m[1:].split(",")] if m[1:] else []
        except ValueError:
            raise GraphError(f"malformed certificate part {part!r}") from None
        if head[0] != "V" or len(opens) != n or len(loops) != n or len(mult) != n * (n - 1) // 2:
            raise GraphError(f"malformed certificate part {part!r}")
        ids = [f"v{len(vertices) + i}" for i in range(n)]
        vertices.extend(ids)
        for i in range(n):
            for _ in range(opens[i]):
                add_edge(ids[i], OPEN)
            for _ in range(loops[i]):
                add_edge(ids[i], ids[i])
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                for _ in range(mult[k]):
                    add_edge(ids[i], ids[j])
                k += 1
    return TopoGraph(tuple(vertices), tuple(edges), circles)


def canon(g: TopoGraph) -> CanonicalForm:
    cert = certificate(g)
    return CanonicalForm(graph_from_certificate(cert), cert)


def is_homeomorphic(g: TopoGraph, h: TopoGraph) -> bool:
    return certificate(g) == certificate(h)
