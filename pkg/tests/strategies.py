from hypothesis import strategies as st

from efdepth.graph import Graph, build


@st.composite
def graphs(draw, min_n=0, max_n=6) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def graph_and_perm(draw, max_n=6):
    G = draw(graphs(max_n=max_n))
    perm = draw(st.permutations(list(range(G.n))))
    return G, list(perm)
