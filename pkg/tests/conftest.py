import itertools

from hypothesis import settings, strategies as st

from slowcol.graph import new_graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return new_graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graph_and_subset(draw, min_n=1, max_n=8):
    G = draw(graphs(min_n, max_n))
    S = draw(st.frozensets(st.integers(0, G.n - 1)))
    return G, S
