import random
import sys
from pathlib import Path

import networkx as nx
import pytest

from onelap.graph import build_graph, is_connected

sys.path.insert(0, str(Path(__file__).parent))

# Triangle 0-3-4 with pendant vertices 1 and 2 hanging off vertex 4.
EXAMPLE5_EDGES = [(0, 3), (0, 4), (3, 4), (1, 4), (2, 4)]

ACCEPTANCE_LINES = []


def example5_graph():
    return build_graph(5, EXAMPLE5_EDGES)


def random_graph(rng, n, p=0.5, connected=True):
    """Random simple graph without isolated vertices (optionally connected)."""
    while True:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        touched = {v for e in edges for v in e}
        if len(touched) < n:
            continue
        g = build_graph(n, edges)
        if connected and not is_connected(g):
            continue
        return g


def disjoint_union(*graphs):
    edges, offset = [], 0
    for g in graphs:
        edges += [(h + offset, t + offset) for h, t in g.edges]
        offset += g.n
    return build_graph(offset, edges)


def connected_atlas(max_n):
    """One representative per isomorphism class of connected graphs, 2 <= n <= max_n."""
    out = []
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if 2 <= n <= max_n and nx.is_connected(G):
            out.append(build_graph(n, list(G.edges())))
    return out


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
