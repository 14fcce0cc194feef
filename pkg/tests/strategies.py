from hypothesis import strategies as st

from offalliance.graph import VertexSet, from_edge_list


@st.composite
def graphs(draw, min_n=2, max_n=9, min_edges=1, no_isolated=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), min_size=min_edges, max_size=len(pairs), unique=True))
    if no_isolated:
        touched = {x for e in edges for x in e}
        edges += [(v, (v + 1) % n) for v in range(n) if v not in touched]
    return from_edge_list(n, edges)


@st.composite
def graph_and_set(draw, **kw):
    g = draw(graphs(**kw))
    mask = draw(st.integers(1, (1 << g.n) - 1))
    return g, VertexSet(mask, g.n)


@st.composite
def graph_and_independent_set(draw, **kw):
    g = draw(graphs(no_isolated=True, **kw))
    order = draw(st.permutations(range(g.n)))
    cap = draw(st.integers(1, g.n))
    taken, blocked = [], set()
    for v in order:
        if v not in blocked and len(taken) < cap:
            taken.append(v)
            blocked |= {v, *g.neighbors(v)}
    return g, VertexSet.of(g.n, taken)
