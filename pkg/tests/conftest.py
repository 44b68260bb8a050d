from itertools import combinations

import pytest
from hypothesis import strategies as st

from idpoly.graph import Graph


def naive_id(G):
    """Definition read off literally with Python sets: N[W] = V and G[W] edgeless.

    Loops forbid membership; a vertex outside W needs a (non-loop) neighbour in W.
    Returns ascending coefficient list without trailing zeros.
    """
    nbrs = {v: set() for v in range(G.n)}
    for u, v in G.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    counts = [0] * (G.n + 1)
    for k in range(G.n + 1):
        for W in combinations(range(G.n), k):
            W = set(W)
            if W & set(G.loops):
                continue
            if any(nbrs[a] & W for a in W):
                continue
            closed = W.union(*(nbrs[a] for a in W)) if W else set()
            if closed == set(range(G.n)):
                counts[k] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


@st.composite
def graphs(draw, max_n=8, min_n=0, loops=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    looped = []
    if loops and n:
        looped = draw(st.sets(st.integers(0, n - 1), max_size=n))
    return Graph(n, [p for p, c in zip(pairs, chosen) if c], looped)


@pytest.fixture
def p3():
    return Graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def c4():
    return Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
