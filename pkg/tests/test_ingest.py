import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spantruss import TemporalGraph
from spantruss.ingest import (
    EmptyGraphError,
    IngestConfig,
    ParseError,
    RawTemporalEdge,
    build_temporal_graph,
    graph_from_dict,
    graph_to_dict,
    load_graph,
    parse_edges,
    save_graph,
)

from strategies import temporal_graphs


def parse(text, fmt):
    return parse_edges(io.BytesIO(text.encode()), fmt)


class TestParse:
    def test_konect_line(self):
        assert parse("3 7 1 1200000000\n", "konect") == [RawTemporalEdge(3, 7, 1200000000)]

    def test_comments_skipped(self):
        assert parse("% directed\n% 3 4\n\n1 2 1 5\n", "konect") == [RawTemporalEdge(1, 2, 5)]
        assert parse("# snap header\n1 2 5\n", "snap") == [RawTemporalEdge(1, 2, 5)]

    @pytest.mark.parametrize("fmt", ["konect", "snap"])
    def test_malformed_line_reports_number(self, fmt):
        with pytest.raises(ParseError, match="line 2") as ei:
            parse("1 2 1 5\n3 x 5\n", fmt)
        assert ei.value.lineno == 2

    def test_empty_file(self):
        assert parse("", "konect") == []
        assert parse("u,v,timestamp\n", "csv") == []

    def test_text_stream_and_float_timestamp(self):
        assert parse_edges(io.StringIO("1\t2\t1.0\t1.2e3\n"), "konect") == [RawTemporalEdge(1, 2, 1200)]

    def test_negative_timestamp(self):
        with pytest.raises(ParseError, match="negative"):
            parse("1 2 -5\n", "snap")

    def test_csv(self):
        text = "timestamp,u,v\n10,alice,bob\n20,bob,carol\n"
        assert parse(text, "csv") == [RawTemporalEdge("alice", "bob", 10), RawTemporalEdge("bob", "carol", 20)]

    def test_csv_bad_header(self):
        with pytest.raises(ParseError, match="header"):
            parse("a,b,c\n1,2,3\n", "csv")

    def test_csv_short_row(self):
        with pytest.raises(ParseError, match="line 3"):
            parse("u,v,timestamp\n1,2,3\n1,2\n", "csv")

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            parse("", "graphml")


class TestBuild:
    def test_binning_and_dedup(self):
        edges = [RawTemporalEdge("a", "b", 0), RawTemporalEdge("b", "a", 50), RawTemporalEdge("a", "b", 100)]
        g = build_temporal_graph(edges, IngestConfig(window_seconds=100))
        assert g.num_vertices == 2 and g.t_max == 1
        assert g.edge_set(0) == {(0, 1)} and g.edge_set(1) == {(0, 1)}
        assert g.labels == ("a", "b")

    def test_single_edge(self):
        g = build_temporal_graph([RawTemporalEdge(5, 9, 1234)], IngestConfig())
        assert g.num_vertices == 2 and g.t_max == 0 and g.edge_set(0) == {(0, 1)}

    def test_self_loop_dropped(self):
        edges = [RawTemporalEdge("a", "a", 0), RawTemporalEdge("a", "b", 0)]
        g = build_temporal_graph(edges, IngestConfig())
        assert g.num_vertices == 2 and g.num_temporal_edges == 1

    def test_self_loop_kept_is_error(self):
        with pytest.raises(ValueError, match="self-loop"):
            build_temporal_graph([RawTemporalEdge("a", "a", 0)], IngestConfig(drop_self_loops=False))

    def test_all_filtered(self):
        with pytest.raises(EmptyGraphError, match="empty graph"):
            build_temporal_graph([RawTemporalEdge(1, 1, 0)], IngestConfig())
        with pytest.raises(EmptyGraphError):
            build_temporal_graph([], IngestConfig())

    def test_gaps_become_empty_timestamps(self):
        edges = [RawTemporalEdge(1, 2, 0), RawTemporalEdge(2, 3, 350)]
        g = build_temporal_graph(edges, IngestConfig(window_seconds=100))
        assert g.t_max == 3 and [e.size for e in g.edges_at] == [1, 0, 0, 1]

    def test_bad_config(self):
        with pytest.raises(ValueError):
            IngestConfig(window_seconds=0)
        with pytest.raises(ValueError):
            IngestConfig(format="xml")

    raw_edges = st.lists(
        st.builds(RawTemporalEdge, st.integers(0, 6), st.integers(0, 6), st.integers(0, 1000)), min_size=1
    )

    @given(raw_edges, st.integers(0, 10**9), st.integers(1, 300))
    def test_translation_invariant(self, edges, shift, window):
        cfg = IngestConfig(window_seconds=window)
        try:
            g = build_temporal_graph(edges, cfg)
        except EmptyGraphError:
            return
        shifted = [e._replace(timestamp=e.timestamp + shift) for e in edges]
        assert build_temporal_graph(shifted, cfg) == g

    @given(raw_edges, st.integers(1, 300))
    def test_dedup_idempotent(self, edges, window):
        cfg = IngestConfig(window_seconds=window)
        try:
            g = build_temporal_graph(edges, cfg)
        except EmptyGraphError:
            return
        assert build_temporal_graph(edges + edges, cfg) == g


class TestRoundTrip:
    @settings(max_examples=50)
    @given(temporal_graphs())
    def test_json_round_trip(self, g):
        buf = io.StringIO()
        save_graph(g, buf)
        buf.seek(0)
        assert load_graph(buf) == g

    def test_labels_round_trip(self):
        edges = [RawTemporalEdge("x", "y", 0), RawTemporalEdge(3, "y", 7)]
        g = build_temporal_graph(edges, IngestConfig(format="csv"))
        assert graph_from_dict(graph_to_dict(g)) == g
        assert graph_from_dict(graph_to_dict(g)).labels == ("x", "y", 3)

    def test_rejects_foreign_document(self):
        with pytest.raises(ValueError):
            graph_from_dict({"format": "other"})
        doc = graph_to_dict(TemporalGraph(2, [[(0, 1)]]))
        doc["t_max"] = 4
        with pytest.raises(ValueError, match="t_max"):
            graph_from_dict(doc)
