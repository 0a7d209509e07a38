"""Maximal (k, span)-truss mining for discrete-time temporal graphs."""
from .miner import (
    MINERS,
    LowerBoundState,
    MinerStats,
    SpanTruss,
    filter_maximal,
    mine,
    mine_baseline,
    mine_heuristic,
    mine_naive,
    mine_streaming,
)
from .tgraph import (
    DeltaEdgeSets,
    EdgeIndex,
    EmptyStartError,
    Interval,
    TemporalGraph,
    build_delta_sets,
    interval_contains,
    interval_edges,
    max_nonempty_end,
)
from .truss import (
    Snapshot,
    TrussLabels,
    compute_supports,
    innermost_truss,
    insert_edges_update,
    truss_decomposition,
)

__version__ = "0.1.0"
