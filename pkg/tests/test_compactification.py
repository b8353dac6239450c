import pytest

from topodeck.canon import certificate
from topodeck.compactification import (
    INFINITY,
    NStarWitness,
    alexandroff,
    closed_star,
    end_count,
    estar,
    estar_additivity_check,
    estar_closed_form,
    finite_compactification,
    freudenthal,
    max_nstar,
    nstar_witness,
    separating_number,
    splitting_number,
)
from topodeck.errors import DomainError
from topodeck.graph import OPEN, TopoGraph, is_compact
from topodeck.surgery import CirclePoint, EdgeInteriorPoint, VertexPoint, remove_point

from shapes import circle, figure_eight, interval, k3, open_arc, ray, two_edges

SPLIT_INTERVAL = TopoGraph.build("ab", [("x", "a", OPEN), ("y", "b", OPEN)])
TWO_ARCS = TopoGraph.build((), [("p", OPEN, OPEN), ("q", OPEN, OPEN)])


class TestEndCount:
    def test_basic(self):
        assert end_count(ray()) == 1
        assert end_count(open_arc()) == 2
        assert end_count(k3()) == 0


class TestEstar:
    def test_interval_endpoint(self):
        assert estar(interval(), VertexPoint("a")) == 1

    def test_figure_eight_vertex(self):
        g = figure_eight()
        assert end_count(remove_point(g, VertexPoint("v"))) == 4
        assert estar(g, VertexPoint("v")) == 4

    def test_isolated_vertex(self):
        assert estar(TopoGraph(("z",)), VertexPoint("z")) == 0

    def test_edge_and_circle_points(self):
        assert estar(interval(), EdgeInteriorPoint("ab")) == 2
        assert estar(circle(), CirclePoint()) == 2
        assert estar(figure_eight(), EdgeInteriorPoint("l1")) == 2

    def test_closed_star_is_compact_and_depth_independent(self):
        g = TopoGraph.build("v", [("l", "v", "v"), ("h", "v", OPEN)])
        for depth in (1, 2, 3):
            star, centre = closed_star(g, VertexPoint("v"), depth)
            assert is_compact(star)
            assert star.degree(centre) == 3
            assert estar(g, VertexPoint("v"), depth) == 3

    def test_closed_form_agrees(self):
        g = TopoGraph.build("vw", [("l", "v", "v"), ("m", "v", "w"), ("n", "v", "w"), ("h", "w", OPEN)])
        for p in (VertexPoint("v"), VertexPoint("w"), EdgeInteriorPoint("m"), EdgeInteriorPoint("h")):
            assert estar(g, p) == estar_closed_form(g, p)

    def test_never_infinite(self):
        assert estar(k3(), VertexPoint("a")) != INFINITY


class TestAdditivity:
    def test_two_disjoint_edges(self):
        assert estar_additivity_check(two_edges(), EdgeInteriorPoint("ab"), EdgeInteriorPoint("cd"))

    def test_interval_endpoints(self):
        assert estar_additivity_check(interval(), VertexPoint("a"), VertexPoint("b"))

    def test_triangle_vertex_and_opposite_edge(self):
        assert estar_additivity_check(k3(), VertexPoint("a"), EdgeInteriorPoint("bc"))

    def test_rejects_equal_points(self):
        with pytest.raises(DomainError):
            estar_additivity_check(k3(), VertexPoint("a"), VertexPoint("a"))


class TestCompactifications:
    def test_freudenthal_of_split_interval(self):
        h = freudenthal(SPLIT_INTERVAL)
        assert is_compact(h) and len(h.vertices) == 4
        assert certificate(h) == certificate(two_edges())

    def test_freudenthal_of_open_arc(self):
        assert certificate(freudenthal(open_arc())) == certificate(interval())

    def test_freudenthal_of_two_open_arcs(self):
        h = freudenthal(TWO_ARCS)
        assert len(h.vertices) - len(TWO_ARCS.vertices) == 4
        assert certificate(h) == certificate(two_edges())

    def test_freudenthal_rejects_compact(self):
        with pytest.raises(DomainError, match="compact input"):
            freudenthal(k3())

    def test_alexandroff_of_split_interval(self):
        h, inf = alexandroff(SPLIT_INTERVAL)
        assert h.degree(inf) == 2
        assert estar(h, VertexPoint(inf)) == end_count(SPLIT_INTERVAL)
        assert certificate(h) == certificate(interval())

    def test_alexandroff_of_open_arc_is_circle(self):
        h, inf = alexandroff(open_arc())
        assert h.edges[0].ends == (inf, inf)
        assert certificate(h) == certificate(circle())

    def test_alexandroff_of_ray(self):
        h, inf = alexandroff(ray())
        assert certificate(h) == certificate(interval())

    def test_partition_one_block_is_alexandroff(self):
        h = finite_compactification(open_arc(), [[("r", 0), ("r", 1)]])
        assert certificate(h) == certificate(circle())

    def test_partition_singletons_is_freudenthal(self):
        h = finite_compactification(open_arc(), [[("r", 0)], [("r", 1)]])
        assert certificate(h) == certificate(interval())

    def test_partition_three_blocks_of_four_ends(self):
        slots = TWO_ARCS.open_slots()
        h = finite_compactification(TWO_ARCS, [slots[:2], slots[2:3], slots[3:]])
        assert len(h.vertices) == 3 and is_compact(h)

    @pytest.mark.parametrize(
        "blocks, match",
        [
            ([[("r", 0)]], "cover"),
            ([[("r", 0)], []], "empty"),
            ([[("r", 0), ("r", 1)], [("r", 1)]], "twice"),
            ([[("r", 0), ("r", 1), ("zz", 0)]], "cover"),
        ],
    )
    def test_bad_partitions(self, blocks, match):
        with pytest.raises(DomainError, match=match):
            finite_compactification(open_arc(), blocks)


class TestNStar:
    def test_split_interval_two_star(self):
        w = nstar_witness(SPLIT_INTERVAL, 2)
        assert w.validate() == []
        assert len(w.parts) == 2 and all(len(p) == 1 for p in w.parts)
        assert sorted(len(e.ends) for e in w.core.edges) == [2, 2]
        assert is_compact(w.core)

    def test_compact_graph(self):
        assert max_nstar(k3()) == 0

    def test_figure_eight_card(self):
        w = nstar_witness(TWO_ARCS, 4)
        assert w.validate() == []
        assert [len(p) for p in w.parts] == [1, 1, 1, 1]
        assert max_nstar(TWO_ARCS) == 4

    def test_grouping_is_even_and_contiguous(self):
        w = nstar_witness(TWO_ARCS, 3)
        assert [len(p) for p in w.parts] == [2, 1, 1]
        flat = [t for p in w.parts for t in p]
        assert flat == sorted(flat)

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            nstar_witness(TWO_ARCS, 5)
        with pytest.raises(DomainError):
            nstar_witness(TWO_ARCS, 0)

    def test_validator_catches_broken_witnesses(self):
        w = nstar_witness(SPLIT_INTERVAL, 2)
        merged = NStarWitness(w.whole, w.core, (w.parts[0], w.parts[0]))
        assert "parts are not pairwise disjoint" in merged.validate()
        empty = NStarWitness(w.whole, w.core, w.parts + ((),))
        assert "empty part" in empty.validate()
        stolen = NStarWitness(w.whole, w.core, (w.parts[0] + w.parts[1], (w.core.edges[0].id,)))
        problems = stolen.validate()
        assert "core meets a part" in problems
        assert any("not a tail" in p for p in problems)
        uncovered = NStarWitness(w.whole, w.core, (w.parts[0],))
        assert "core and parts do not cover the graph" in uncovered.validate()


class TestSplitting:
    def test_triangle_vertex(self):
        p = VertexPoint("a")
        assert splitting_number(k3(), p) == separating_number(k3(), p) == estar(k3(), p) == 2

    def test_figure_eight_vertex(self):
        p = VertexPoint("v")
        assert splitting_number(figure_eight(), p) == separating_number(figure_eight(), p) == 4

    def test_leaf(self):
        p = VertexPoint("a")
        assert splitting_number(interval(), p) == separating_number(interval(), p) == 1

    def test_isolated(self):
        g = TopoGraph(("z",))
        assert splitting_number(g, VertexPoint("z")) == separating_number(g, VertexPoint("z")) == 0
