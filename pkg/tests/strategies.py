from hypothesis import strategies as st

from monopos.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, mask) if keep]
    if connected:
        # hang every vertex off an earlier one so the result is connected
        parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
        edges = sorted(set(edges) | {(p, v) for v, p in zip(range(1, n), parents)})
    return Graph.from_edges(n, edges)
