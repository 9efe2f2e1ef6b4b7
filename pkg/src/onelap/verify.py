"""Certify solutions of the set-valued 1-Laplacian eigen system.

A pair (mu, x) is an eigenpair when antisymmetric edge values z exist with

* z_e = sgn(x_h - x_t) whenever x_h != x_t, and |z_e| <= 1 otherwise;
* sum_{j~i} z_ij = mu d_i sgn(x_i) when x_i != 0, and lies in
  [-mu d_i, mu d_i] when x_i = 0.

Edges whose endpoint values differ are forced.  The remaining "free" edges
form a box-constrained divergence problem with an interval demand per
vertex; that is a lower-bounded circulation (one extra hub node feeds every
vertex its demand), decided exactly by integer max-flow after clearing
denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .errors import ZeroVector
from .flow import feasible_circulation
from .graph import Graph
from .rational import fmt_rat
from .tv import _check_length, as_function, scale_to_unit, sgn, tv_energy


@dataclass(frozen=True)
class Certificate:
    mu: Fraction
    # one value per edge of the graph, in the graph's own orientation
    z: tuple[Fraction, ...]

    def to_json(self, g: Graph) -> dict:
        entries = []
        for (h, t), v in zip(g.edges, self.z):
            if h > t:
                h, t, v = t, h, -v
            entries.append(((h, t), v))
        entries.sort()
        return {
            "mu": fmt_rat(self.mu),
            "z": [{"edge": [h, t], "value": fmt_rat(v)} for (h, t), v in entries],
        }


@dataclass(frozen=True)
class FlowProblem:
    """Scaled circulation instance: graph vertices plus hub node ``n``."""

    n_nodes: int
    arcs: tuple[tuple[int, int, int, int], ...]
    scale: int
    free_edges: tuple[int, ...]
    forced: tuple[Optional[int], ...]


def divergence(g: Graph, z: Sequence) -> list[Fraction]:
    """sum_{j~i} z_ij for every vertex, with z_ji = -z_ij."""
    div = [Fraction(0)] * g.n
    for (h, t), v in zip(g.edges, z):
        div[h] += v
        div[t] -= v
    return div


def check_certificate(g: Graph, x: Sequence, cert: Certificate) -> bool:
    """Directly check the three certificate conditions in exact arithmetic."""
    _check_length(g, x)
    x = as_function(x)
    if len(cert.z) != g.m:
        return False
    z = [Fraction(v) for v in cert.z]
    for (h, t), v in zip(g.edges, z):
        if abs(v) > 1:
            return False
        s = sgn(x[h] - x[t])
        if s and v != s:
            return False
    mu = Fraction(cert.mu)
    for i, div in enumerate(divergence(g, z)):
        bound = mu * g.degree[i]
        if x[i] != 0:
            if div != bound * sgn(x[i]):
                return False
        elif abs(div) > abs(bound):
            return False
    return True


def build_flow_problem(g: Graph, mu, x: Sequence) -> FlowProblem:
    mu = Fraction(mu)
    forced: list[Optional[int]] = []
    free = []
    pushed = [0] * g.n
    for k, (h, t) in enumerate(g.edges):
        s = sgn(x[h] - x[t])
        forced.append(s if s else None)
        if s:
            pushed[h] += s
            pushed[t] -= s
        else:
            free.append(k)

    lows, highs = [], []
    for i in range(g.n):
        target = mu * g.degree[i]
        if x[i] != 0:
            lo = hi = target * sgn(x[i]) - pushed[i]
        else:
            lo, hi = -abs(target) - pushed[i], abs(target) - pushed[i]
        lows.append(lo)
        highs.append(hi)

    scale = lcm(1, *(q.denominator for q in lows + highs))
    hub = g.n
    arcs = [(g.edges[k][0], g.edges[k][1], -scale, scale) for k in free]
    arcs += [
        (hub, i, int(lo * scale), int(hi * scale))
        for i, (lo, hi) in enumerate(zip(lows, highs))
    ]
    return FlowProblem(
        n_nodes=g.n + 1,
        arcs=tuple(arcs),
        scale=scale,
        free_edges=tuple(free),
        forced=tuple(forced),
    )


def verify_eigenpair(g: Graph, mu, x: Sequence) -> Optional[Certificate]:
    """Return a certificate that (mu, x) solves the eigen system, or None.

    The answer is exact in both directions: ``None`` means no admissible
    edge assignment exists.
    """
    _check_length(g, x)
    x = as_function(x)
    if not any(x):
        raise ZeroVector("the zero vector is never an eigenvector")
    prob = build_flow_problem(g, mu, x)
    if all(s is None for s in prob.forced):
        # no jumps anywhere; prefer the zero assignment when it works
        zero = Certificate(mu=Fraction(mu), z=(Fraction(0),) * g.m)
        if check_certificate(g, x, zero):
            return zero
    flows = feasible_circulation(prob.n_nodes, prob.arcs)
    if flows is None:
        return None
    z = [Fraction(s) if s is not None else None for s in prob.forced]
    for k, f in zip(prob.free_edges, flows):
        z[k] = Fraction(f, prob.scale)
    return Certificate(mu=Fraction(mu), z=tuple(z))


def is_eigenvector(g: Graph, x: Sequence):
    """Return ``(mu, certificate)`` if x is an eigenvector, else None.

    x is rescaled onto the unit sphere first; the energy there is the only
    possible eigenvalue.
    """
    _check_length(g, x)
    x = scale_to_unit(g, x)
    mu = tv_energy(g, x)
    cert = verify_eigenpair(g, mu, x)
    if cert is None:
        return None
    return mu, cert
