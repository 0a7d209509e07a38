"""Timestamped edge-list parsing and discretization into temporal graphs.

Supported inputs:

* ``konect``: ``u v weight timestamp`` per line, ``%`` comments.
* ``snap``: ``u v timestamp`` per line, ``#`` comments.
* ``csv``: header row containing ``u,v,timestamp``; labels may be any string.

Graphs can also be saved to and loaded from a small JSON document
(``format = "spantruss-temporal-graph"``), see :func:`save_graph`.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import IO, Iterable, NamedTuple

from .tgraph import TemporalGraph

FORMATS = ("konect", "snap", "csv")
GRAPH_FORMAT_TAG = "spantruss-temporal-graph"
GRAPH_FORMAT_VERSION = 1


class ParseError(ValueError):
    def __init__(self, lineno: int, line: str, reason: str):
        super().__init__(f"line {lineno}: {reason}: {line.strip()!r}")
        self.lineno = lineno


class EmptyGraphError(ValueError):
    pass


class RawTemporalEdge(NamedTuple):
    u: object
    v: object
    timestamp: int


@dataclass(frozen=True)
class IngestConfig:
    window_seconds: int | float = 1
    format: str = "konect"
    drop_self_loops: bool = True

    def __post_init__(self):
        if not self.window_seconds > 0:
            raise ValueError("window_seconds must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}; expected one of {FORMATS}")


def _text(stream: IO) -> IO[str]:
    if isinstance(stream, io.TextIOBase):
        return stream
    return io.TextIOWrapper(stream, encoding="utf-8")


def _timestamp(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        x = float(tok)  # KONECT occasionally writes 1.2e9
        if x != int(x):
            raise
        return int(x)


def parse_edges(stream: IO, fmt: str) -> list[RawTemporalEdge]:
    """Read every edge of ``stream`` (text or binary) in file order."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    text = _text(stream)
    if fmt == "csv":
        return _parse_csv(text)

    ts_col = 3 if fmt == "konect" else 2
    out = []
    for lineno, line in enumerate(text, 1):
        s = line.strip()
        if not s or s[0] in "%#":
            continue
        fields = s.split()
        if len(fields) <= ts_col:
            raise ParseError(lineno, line, f"expected at least {ts_col + 1} fields")
        try:
            u, v = int(fields[0]), int(fields[1])
            t = _timestamp(fields[ts_col])
        except ValueError:
            raise ParseError(lineno, line, "non-numeric field") from None
        if t < 0:
            raise ParseError(lineno, line, "negative timestamp")
        out.append(RawTemporalEdge(u, v, t))
    return out


def _parse_csv(text: IO[str]) -> list[RawTemporalEdge]:
    reader = csv.reader(text)
    out = []
    cols = None
    for row in reader:
        lineno = reader.line_num
        if not row or row[0].lstrip().startswith("#"):
            continue
        if cols is None:
            header = [c.strip().lower() for c in row]
            try:
                cols = [header.index(name) for name in ("u", "v", "timestamp")]
            except ValueError:
                raise ParseError(lineno, ",".join(row), "header must name u, v and timestamp") from None
            continue
        try:
            u, v, t = (row[c].strip() for c in cols)
            t = _timestamp(t)
        except (IndexError, ValueError):
            raise ParseError(lineno, ",".join(row), "malformed row") from None
        if t < 0:
            raise ParseError(lineno, ",".join(row), "negative timestamp")
        out.append(RawTemporalEdge(u, v, t))
    return out


def build_temporal_graph(edges: Iterable[RawTemporalEdge], cfg: IngestConfig) -> TemporalGraph:
    """Bin timestamps into windows anchored at the earliest timestamp.

    Vertex labels are renumbered ``0..n-1`` by first appearance and kept in
    ``graph.labels``. Repeated interactions inside one window collapse to a
    single undirected edge.
    """
    edges = [e for e in edges if not (cfg.drop_self_loops and e.u == e.v)]
    if not edges:
        raise EmptyGraphError("empty graph: no edges left after filtering")
    t0 = min(e.timestamp for e in edges)
    w = cfg.window_seconds

    ids: dict[object, int] = {}
    triples = []
    for e in edges:
        u = ids.setdefault(e.u, len(ids))
        v = ids.setdefault(e.v, len(ids))
        if u == v:
            raise ValueError(f"self-loop on {e.u!r} with drop_self_loops disabled")
        triples.append((u, v, int((e.timestamp - t0) // w)))
    return TemporalGraph.from_temporal_edges(len(ids), triples, labels=list(ids))


def load_dataset(path, cfg: IngestConfig) -> TemporalGraph:
    with open(path, "rb") as fh:
        return build_temporal_graph(parse_edges(fh, cfg.format), cfg)


def graph_to_dict(g: TemporalGraph) -> dict:
    return {
        "format": GRAPH_FORMAT_TAG,
        "version": GRAPH_FORMAT_VERSION,
        "num_vertices": g.num_vertices,
        "t_max": g.t_max,
        "labels": list(g.labels) if g.labels is not None else None,
        "edges_at": [[list(p) for p in g.pairs(ids)] for ids in g.edges_at],
    }


def graph_from_dict(doc: dict) -> TemporalGraph:
    if doc.get("format") != GRAPH_FORMAT_TAG:
        raise ValueError("not a spantruss temporal graph document")
    if doc.get("version") != GRAPH_FORMAT_VERSION:
        raise ValueError(f"unsupported graph document version {doc.get('version')!r}")
    edges_at = [[tuple(p) for p in es] for es in doc["edges_at"]]
    if len(edges_at) != doc["t_max"] + 1:
        raise ValueError("edges_at length does not match t_max")
    return TemporalGraph(doc["num_vertices"], edges_at, labels=doc.get("labels"))


def save_graph(g: TemporalGraph, fh: IO[str]) -> None:
    json.dump(graph_to_dict(g), fh, separators=(",", ":"))


def load_graph(fh: IO[str]) -> TemporalGraph:
    return graph_from_dict(json.load(fh))
