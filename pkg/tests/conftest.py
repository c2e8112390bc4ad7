import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from cliquepath.graph import Graph, pair_list

# numba compiles on first call, so per-example deadlines are meaningless here
settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = pair_list(n)
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, on in zip(pairs, chosen) if on])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [pr for pr in pair_list(n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20241018)
