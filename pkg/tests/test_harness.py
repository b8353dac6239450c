import json
from pathlib import Path

import pytest

from topodeck.cache import HEADER, DeckCache, checksum, default_dir
from topodeck.canon import certificate, graph_from_certificate
from topodeck.compactification import estar, estar_closed_form
from topodeck.errors import CacheCorruptError
from topodeck.graph import is_compact, is_connected
from topodeck.harness import (
    EnumerationBudget,
    InjectivityReport,
    composed_deck,
    connected_pieces,
    enumerate_canonical,
    enumerate_certificates,
    verify_deck_injectivity,
)
from topodeck.io import parse_text
from topodeck.smooth import is_smooth
from topodeck.surgery import deck, point_classes

GOLDEN = Path(__file__).parent / "golden"


def _golden(name):
    text = (GOLDEN / name).read_text()
    return [parse_text(block) for block in text.split("\n---\n")]


class TestEnumeration:
    def test_connected_up_to_three_edges_matches_hand_list(self):
        hand = _golden("connected_max3.graphs")
        assert len(hand) == 10
        expected = sorted(certificate(g) for g in hand)
        assert len(set(expected)) == 10
        assert enumerate_certificates(EnumerationBudget(3, connected_only=True)) == expected

    @pytest.mark.parametrize("m", [1, 2])
    def test_connected_prefixes_of_golden_list(self, m):
        hand = _golden("connected_max3.graphs")
        edges = [len(g.edges) for g in hand]
        expected = sorted(certificate(g) for g, k in zip(hand, edges) if k <= m)
        assert enumerate_certificates(EnumerationBudget(m, connected_only=True)) == expected

    def test_all_graphs_with_one_edge_match_hand_list(self):
        expected = sorted(certificate(g) for g in _golden("all_max1.graphs"))
        assert enumerate_certificates(EnumerationBudget(1)) == expected

    def test_zero_edges_connected_is_circle(self):
        got = list(enumerate_canonical(EnumerationBudget(0, connected_only=True)))
        assert [certificate(g) for g in got] == [certificate(graph_from_certificate("tdc1:O"))]

    def test_one_edge_connected(self):
        certs = enumerate_certificates(EnumerationBudget(1, connected_only=True))
        assert certs == sorted(["tdc1:O", "tdc1:V2:o0,0:l0,0:m1"])

    def test_lone_points_need_an_edge(self):
        certs = enumerate_certificates(EnumerationBudget(2, require_edge=False, max_isolated=3))
        assert "tdc1:V1:o0:l0:m;V1:o0:l0:m;V1:o0:l0:m" in certs
        assert "tdc1:V1:o0:l0:m;V1:o0:l0:m" not in certs

    @pytest.mark.parametrize("budget", [EnumerationBudget(4), EnumerationBudget(5, connected_only=True)])
    def test_stream_is_strictly_increasing_and_canonical(self, budget):
        certs = []
        for g in enumerate_canonical(budget):
            assert is_smooth(g) and is_compact(g)
            assert len(g.edges) <= budget.max_edges
            if budget.connected_only:
                assert is_connected(g)
            certs.append(certificate(g))
        assert certs == enumerate_certificates(budget)
        assert all(a < b for a, b in zip(certs, certs[1:]))

    def test_connected_piece_counts(self):
        assert [len(connected_pieces(m)) for m in range(1, 6)] == [1, 2, 6, 14, 39]

    @pytest.mark.parametrize("kwargs", [{"max_edges": -1}, {"max_edges": 2, "min_points": 2}])
    def test_bad_budget(self, kwargs):
        with pytest.raises(ValueError):
            EnumerationBudget(**kwargs)


class TestDecks:
    def test_composed_equals_direct(self):
        for cert in enumerate_certificates(EnumerationBudget(4)):
            assert composed_deck(cert) == deck(graph_from_certificate(cert)).cards, cert

    def test_deck_size_bound(self):
        for g in enumerate_canonical(EnumerationBudget(4)):
            assert len(deck(g).cards) <= len(g.vertices) + len(g.edges) + g.circles

    def test_min_estar_between_one_and_two_for_connected(self):
        report = verify_deck_injectivity(EnumerationBudget(5, connected_only=True))
        for cert, value in report.min_estar_table.items():
            g = graph_from_certificate(cert)
            oracle = min(estar(g, p) for p in point_classes(g))
            assert value == oracle
            assert 1 <= value <= 2
            assert oracle == min(estar_closed_form(g, p) for p in point_classes(g))


class TestReport:
    def test_budget_four_connected(self):
        report = verify_deck_injectivity(EnumerationBudget(4, connected_only=True))
        assert report.injective and report.universe_size == 24
        assert report.hypothesis_failures == []
        assert sum(len(v) for v in report.deck_groups.values()) == 24

    def test_direct_method_agrees(self):
        budget = EnumerationBudget(3)
        a = verify_deck_injectivity(budget)
        b = verify_deck_injectivity(budget, method="direct")
        assert a.to_json() == b.to_json()

    def test_json_round_trip(self):
        report = verify_deck_injectivity(EnumerationBudget(3))
        again = InjectivityReport.from_json(report.to_json())
        assert again == report
        data = json.loads(report.to_json())
        assert {"budget", "universe_size", "collisions", "min_estar"} <= set(data)

    def test_text_report_states_budget(self):
        text = verify_deck_injectivity(EnumerationBudget(2)).to_text()
        assert text.startswith("budget max_edges=2 ")
        assert "within this budget only" in text

    def test_collision_rendering(self):
        report = verify_deck_injectivity(EnumerationBudget(1))
        forged = InjectivityReport(
            report.budget, 2, {"h": ["a", "b"]}, [{"deck_hash": "h", "graphs": ["a", "b"]}], {}, []
        )
        assert not forged.injective
        assert "collision h a b" in forged.to_text()


class TestCache:
    def test_warm_rerun_is_identical(self, tmp_path):
        budget = EnumerationBudget(3)
        cache = DeckCache(tmp_path)
        cold = verify_deck_injectivity(budget, cache).to_json()
        first = cache.path.read_bytes()
        assert first.decode().splitlines()[0] == HEADER
        warm = verify_deck_injectivity(budget, cache).to_json()
        assert warm == cold
        assert cache.path.read_bytes() == first

    def test_warm_cache_skips_work(self, tmp_path, monkeypatch):
        budget = EnumerationBudget(2)
        cache = DeckCache(tmp_path)
        verify_deck_injectivity(budget, cache)

        def boom(cert):
            raise AssertionError("cache miss")

        monkeypatch.setattr("topodeck.harness.composed_deck", boom)
        verify_deck_injectivity(budget, cache)

    def test_poisoned_record_is_detected_and_regenerated(self, tmp_path):
        budget = EnumerationBudget(3)
        cache = DeckCache(tmp_path)
        clean = verify_deck_injectivity(budget, cache).to_json()
        lines = cache.path.read_text().splitlines()
        cert, digest, *cards = lines[1].split("\t")
        lines[1] = "\t".join([cert, digest, "tdc1:O"])
        cache.path.write_text("\n".join(lines) + "\n")
        with pytest.raises(CacheCorruptError, match="checksum mismatch"):
            cache.load()
        assert verify_deck_injectivity(budget, cache).to_json() == clean
        assert cache.load()[cert] == tuple(cards)

    def test_bad_header(self, tmp_path):
        cache = DeckCache(tmp_path)
        cache.path.write_text("something else\n")
        with pytest.raises(CacheCorruptError, match="header"):
            cache.load()

    def test_checksum_depends_on_cards(self):
        assert checksum("tdc1:O", ["a"]) != checksum("tdc1:O", ["b"])
        assert checksum("tdc1:O", ["a", "b"]) != checksum("tdc1:O", ["ab"])

    def test_env_var(self, tmp_path, monkeypatch):
        monkeypatch.setenv("TOPODECK_CACHE", str(tmp_path))
        assert default_dir() == tmp_path
        monkeypatch.delenv("TOPODECK_CACHE")
        assert default_dir() is None
