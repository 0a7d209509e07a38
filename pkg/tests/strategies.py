import itertools

from hypothesis import strategies as st

from spantruss import TemporalGraph


@st.composite
def temporal_graphs(draw, max_n=8, max_t=6):
    n = draw(st.integers(2, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    t = draw(st.integers(1, max_t))
    per_t = [draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) for _ in range(t)]
    return TemporalGraph(n, per_t)


@st.composite
def intervals_for(draw, g):
    ts = draw(st.integers(0, g.t_max))
    te = draw(st.integers(ts, g.t_max))
    return ts, te
