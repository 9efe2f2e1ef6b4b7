"""Integer max-flow with capacity scaling, and lower-bounded circulations."""

from __future__ import annotations

from collections import deque
from typing import Sequence


class FlowNetwork:
    """Residual network over nodes ``0..n-1`` with integer capacities."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[int] = []
        self.cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(n)]

    def add_arc(self, u: int, v: int, cap: int) -> int:
        """Add u->v; returns the arc id (its reverse is ``id ^ 1``)."""
        if cap < 0:
            raise ValueError("negative capacity")
        k = len(self.head)
        self.head += [v, u]
        self.cap += [cap, 0]
        self.out[u].append(k)
        self.out[v].append(k + 1)
        return k

    def flow_on(self, arc: int) -> int:
        return self.cap[arc ^ 1]

    def _augmenting_path(self, s: int, t: int, delta: int):
        pred = [-1] * self.n
        pred[s] = -2
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for k in self.out[u]:
                v = self.head[k]
                if pred[v] == -1 and self.cap[k] >= delta:
                    pred[v] = k
                    if v == t:
                        return pred
                    queue.append(v)
        return None

    def max_flow(self, s: int, t: int) -> int:
        top = max(self.cap, default=0)
        if top == 0 or s == t:
            return 0
        delta = 1 << (top.bit_length() - 1)
        total = 0
        while delta:
            while True:
                pred = self._augmenting_path(s, t, delta)
                if pred is None:
                    break
                bottleneck = None
                v = t
                while v != s:
                    k = pred[v]
                    c = self.cap[k]
                    bottleneck = c if bottleneck is None or c < bottleneck else bottleneck
                    v = self.head[k ^ 1]
                v = t
                while v != s:
                    k = pred[v]
                    self.cap[k] -= bottleneck
                    self.cap[k ^ 1] += bottleneck
                    v = self.head[k ^ 1]
                total += bottleneck
            delta >>= 1
        return total


def feasible_circulation(n: int, arcs: Sequence[tuple[int, int, int, int]]):
    """Find integer flows f with lower <= f <= upper and conservation at every node.

    ``arcs`` holds ``(u, v, lower, upper)``.  Returns the list of arc flows, or
    ``None`` when no circulation exists.
    """
    excess = [0] * n
    net = FlowNetwork(n + 2)
    src, snk = n, n + 1
    ids = []
    for u, v, lo, hi in arcs:
        if lo > hi:
            return None
        ids.append(net.add_arc(u, v, hi - lo))
        excess[v] += lo
        excess[u] -= lo
    need = 0
    for v, ex in enumerate(excess):
        if ex > 0:
            net.add_arc(src, v, ex)
            need += ex
        elif ex < 0:
            net.add_arc(v, snk, -ex)
    if net.max_flow(src, snk) != need:
        return None
    return [lo + net.flow_on(k) for (_, _, lo, _), k in zip(arcs, ids)]
