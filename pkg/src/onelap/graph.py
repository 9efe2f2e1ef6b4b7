"""Undirected simple graphs with a fixed vertex order and edge orientation.

Vertices are ``0..n-1``.  Every edge is stored once, oriented head -> tail
with ``head < tail``; the 1-Laplacian does not depend on the orientation, so
this canonical choice is only a bookkeeping convention.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    IsolatedVertex,
    ParseError,
    SelfLoop,
    TooSmall,
    VertexOutOfRange,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    degree: tuple[int, ...]
    # adjacency[i] = ((neighbor, edge_index), ...)
    adjacency: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def volume(self) -> int:
        """Sum of all degrees."""
        return sum(self.degree)

    def neighbors(self, i: int) -> list[int]:
        return [j for j, _ in self.adjacency[i]]

    def reoriented(self, flip: Sequence[bool]) -> "Graph":
        """Same graph with the orientation of edge ``e`` reversed where ``flip[e]``.

        The result is not canonical (some heads exceed their tails); it exists
        so orientation independence can be exercised.
        """
        edges = tuple((t, h) if f else (h, t) for (h, t), f in zip(self.edges, flip))
        return _assemble(self.n, edges)


def _assemble(n: int, edges: tuple[Edge, ...]) -> Graph:
    degree = [0] * n
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for k, (h, t) in enumerate(edges):
        degree[h] += 1
        degree[t] += 1
        adjacency[h].append((t, k))
        adjacency[t].append((h, k))
    return Graph(
        n=n,
        edges=edges,
        degree=tuple(degree),
        adjacency=tuple(tuple(a) for a in adjacency),
    )


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Canonical graph on ``n`` vertices; edges become sorted low->high pairs.

    The edge order of ``edge_list`` is preserved.  Isolated vertices are
    rejected because the unit sphere of the degree-weighted norm degenerates
    when some degree is zero.
    """
    seen: set[Edge] = set()
    edges: list[Edge] = []
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        for w in (u, v):
            if not 0 <= w < n:
                raise VertexOutOfRange(w, n)
        if u == v:
            raise SelfLoop(u)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(*e)
        seen.add(e)
        edges.append(e)
    g = _assemble(n, tuple(edges))
    for i, d in enumerate(g.degree):
        if d == 0:
            raise IsolatedVertex(i)
    return g


@dataclass(frozen=True)
class ComponentLabeling:
    component_id: tuple[int, ...]
    count: int

    def members(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.component_id):
            out[c].append(v)
        return out


def connected_components(g: Graph) -> ComponentLabeling:
    """BFS labeling; component ids are assigned in order of smallest vertex."""
    label = [-1] * g.n
    count = 0
    for s in range(g.n):
        if label[s] >= 0:
            continue
        label[s] = count
        queue = deque([s])
        while queue:
            i = queue.popleft()
            for j, _ in g.adjacency[i]:
                if label[j] < 0:
                    label[j] = count
                    queue.append(j)
        count += 1
    return ComponentLabeling(tuple(label), count)


def is_connected(g: Graph) -> bool:
    return connected_components(g).count == 1


# --- generators -------------------------------------------------------------

def path_graph(n: int) -> Graph:
    if n < 2:
        raise TooSmall(f"path needs n >= 2, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise TooSmall(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 3:
        raise TooSmall(f"complete graph needs n >= 3, got {n}")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Graph:
    """Hub 0 joined to leaves 1..n-1."""
    if n < 2:
        raise TooSmall(f"star needs n >= 2, got {n}")
    return build_graph(n, [(0, i) for i in range(1, n)])


PETERSEN_EDGES = (
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
)


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, spokes i -> i+5, inner pentagram on 5..9."""
    return build_graph(10, PETERSEN_EDGES)


_GENERATORS = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "star": star_graph,
}


def from_spec(spec: str) -> Graph:
    """Parse a generator spec such as ``path:4``, ``complete:5`` or ``petersen``."""
    name, _, arg = spec.strip().partition(":")
    name = name.lower()
    if name == "petersen" and not arg:
        return petersen_graph()
    if name not in _GENERATORS or not arg:
        raise ParseError(f"unknown generator spec {spec!r}")
    try:
        n = int(arg)
    except ValueError:
        raise ParseError(f"bad vertex count in generator spec {spec!r}") from None
    return _GENERATORS[name](n)


# --- edge-list text format --------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` lines are comments."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty input")

    def ints(lineno, fields):
        if len(fields) != 2:
            raise ParseError(f"expected 2 integers, got {len(fields)} fields", lineno)
        try:
            return int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError("non-integer field", lineno) from None

    n, m = ints(*rows[0])
    if n < 1 or m < 0:
        raise ParseError("vertex count must be positive", rows[0][0])
    body = rows[1:]
    if len(body) != m:
        line = body[m][0] if len(body) > m else None
        raise ParseError(f"header promises {m} edges, found {len(body)}", line)
    pairs = [ints(lineno, fields) for lineno, fields in body]
    return build_graph(n, pairs)


def serialize_edge_list(g: Graph) -> str:
    edges = sorted((min(h, t), max(h, t)) for h, t in g.edges)
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def canonical(g: Graph) -> Graph:
    """Graph with edges sorted lexicographically and oriented low->high."""
    return build_graph(g.n, sorted((min(h, t), max(h, t)) for h, t in g.edges))
