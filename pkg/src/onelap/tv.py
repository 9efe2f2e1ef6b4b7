"""Total variation energy, the degree-weighted l1 norm and nodal domains.

All quantities are exact :class:`fractions.Fraction` values.  A vertex
function is any sequence of rationals of length ``g.n``; a ternary pattern is
a sequence over ``{+1, -1, 0}``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AllZeroPattern, LengthMismatch, NonpositiveLevel, NotOnX, ZeroVector
from .graph import Graph

Rat = Fraction
VertexFunction = tuple[Fraction, ...]
TernaryPattern = tuple[int, ...]


def sgn(t) -> int:
    return (t > 0) - (t < 0)


def as_function(values: Sequence) -> VertexFunction:
    return tuple(Fraction(v) for v in values)


def _check_length(g: Graph, x: Sequence) -> None:
    if len(x) != g.n:
        raise LengthMismatch(len(x), g.n)


def weighted_norm(g: Graph, x: Sequence) -> Fraction:
    """sum_i d_i |x_i|."""
    _check_length(g, x)
    return sum((d * abs(Fraction(v)) for d, v in zip(g.degree, x)), Fraction(0))


def tv_energy(g: Graph, x: Sequence) -> Fraction:
    """Total variation: one term |x_h - x_t| per undirected edge."""
    _check_length(g, x)
    x = as_function(x)
    return sum((abs(x[h] - x[t]) for h, t in g.edges), Fraction(0))


# --- nodal domains ------------------------------------------------------------

@dataclass(frozen=True)
class NodalDecomposition:
    pos_domains: tuple[tuple[int, ...], ...]
    neg_domains: tuple[tuple[int, ...], ...]
    null_set: tuple[int, ...]
    delta_pos: int
    delta_neg: int
    delta_zero: int

    @property
    def r_pos(self) -> int:
        return len(self.pos_domains)

    @property
    def r_neg(self) -> int:
        return len(self.neg_domains)

    @property
    def r(self) -> int:
        return self.r_pos + self.r_neg

    @property
    def domains(self) -> tuple[tuple[int, ...], ...]:
        """Positive domains followed by negative ones."""
        return self.pos_domains + self.neg_domains


def _sign_components(g: Graph, signs: Sequence[int], target: int) -> list[tuple[int, ...]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if signs[s] != target or seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            i = queue.popleft()
            for j, _ in g.adjacency[i]:
                if signs[j] == target and not seen[j]:
                    seen[j] = True
                    comp.append(j)
                    queue.append(j)
        out.append(tuple(sorted(comp)))
    return out


def decompose_signs(g: Graph, signs: Sequence[int]) -> NodalDecomposition:
    _check_length(g, signs)
    pos = _sign_components(g, signs, 1)
    neg = _sign_components(g, signs, -1)
    null = tuple(i for i in range(g.n) if signs[i] == 0)
    dp = sum(g.degree[i] for i in range(g.n) if signs[i] > 0)
    dn = sum(g.degree[i] for i in range(g.n) if signs[i] < 0)
    return NodalDecomposition(
        pos_domains=tuple(pos),
        neg_domains=tuple(neg),
        null_set=null,
        delta_pos=dp,
        delta_neg=dn,
        delta_zero=g.volume - dp - dn,
    )


def nodal_decomposition(g: Graph, x: Sequence) -> NodalDecomposition:
    """Split V into connected positive/negative domains and the null set.

    Domains are ordered by their smallest vertex.
    """
    _check_length(g, x)
    return decompose_signs(g, [sgn(Fraction(v)) for v in x])


def in_pi(g: Graph, x: Sequence) -> bool:
    """Degree-weighted median-zero condition |delta+ - delta-| <= delta0 on X."""
    if weighted_norm(g, x) != 1:
        raise NotOnX("in_pi requires sum d_i |x_i| = 1")
    dec = nodal_decomposition(g, x)
    return abs(dec.delta_pos - dec.delta_neg) <= dec.delta_zero


def pattern_in_pi(g: Graph, p: Sequence[int]) -> bool:
    dp = sum(d for d, s in zip(g.degree, p) if s > 0)
    dn = sum(d for d, s in zip(g.degree, p) if s < 0)
    return abs(dp - dn) <= g.volume - dp - dn


# --- ternary patterns and normal forms ------------------------------------------

def canonical_pattern(p: Sequence[int]) -> TernaryPattern:
    """Sign representative whose first nonzero entry is +1."""
    p = tuple(sgn(s) for s in p)
    for s in p:
        if s:
            return p if s > 0 else tuple(-t for t in p)
    raise AllZeroPattern("pattern is identically zero")


def pattern_of(x: Sequence) -> TernaryPattern:
    return tuple(sgn(Fraction(v)) for v in x)


def pattern_to_function(g: Graph, p: Sequence[int]) -> VertexFunction:
    """Normal vector delta^-1 * p with delta = sum of degrees on the support."""
    _check_length(g, p)
    delta = sum(d for d, s in zip(g.degree, p) if s)
    if delta == 0:
        raise AllZeroPattern("pattern is identically zero")
    unit = Fraction(1, delta)
    return tuple(sgn(s) * unit for s in p)


def normalize_eigenvector(g: Graph, x: Sequence) -> VertexFunction:
    """Collapse x to the normal form carrying only +-delta^-1 and 0."""
    _check_length(g, x)
    p = pattern_of(x)
    if not any(p):
        raise ZeroVector("cannot normalize the zero vector")
    return pattern_to_function(g, p)


def scale_to_unit(g: Graph, x: Sequence) -> VertexFunction:
    """x / ||x|| in the degree-weighted l1 norm."""
    norm = weighted_norm(g, x)
    if norm == 0:
        raise ZeroVector("cannot rescale the zero vector")
    return tuple(Fraction(v) / norm for v in x)


def assemble_levels(g: Graph, dec: NodalDecomposition, levels: Sequence) -> VertexFunction:
    """Function equal to +level on each positive domain, -level on each negative one."""
    doms = dec.domains
    if len(levels) != len(doms):
        raise LengthMismatch(len(levels), len(doms))
    x = [Fraction(0)] * g.n
    for k, (dom, lev) in enumerate(zip(doms, levels)):
        s = 1 if k < dec.r_pos else -1
        for i in dom:
            x[i] = s * Fraction(lev)
    return tuple(x)


def domain_edge_counts(g: Graph, dec: NodalDecomposition):
    """Edge counts between domains and the null set.

    Returns ``(between, to_null)`` where ``between[(a, b)]`` counts edges from
    positive domain ``a`` to negative domain ``b`` and ``to_null[k]`` counts
    edges from domain ``k`` (positive first, then negative) into the null set.
    """
    owner = [-1] * g.n
    for k, dom in enumerate(dec.domains):
        for i in dom:
            owner[i] = k
    between: dict[tuple[int, int], int] = {}
    to_null = [0] * len(dec.domains)
    for h, t in g.edges:
        a, b = owner[h], owner[t]
        if a == b:
            continue
        if a < 0 or b < 0:
            to_null[a if a >= 0 else b] += 1
            continue
        if a >= dec.r_pos:
            a, b = b, a
        between[(a, b - dec.r_pos)] = between.get((a, b - dec.r_pos), 0) + 1
    return between, to_null


def tv_energy_nodal(g: Graph, dec: NodalDecomposition, levels: Sequence) -> Fraction:
    """Energy of a function constant on each nodal domain, via edge counts.

    ``levels`` holds one positive magnitude per domain, positive domains
    first.  Edges inside a domain contribute nothing; an edge between
    positive domain a and negative domain b contributes level_a + level_b;
    an edge from a domain into the null set contributes that domain's level.
    """
    levels = [Fraction(v) for v in levels]
    if len(levels) != len(dec.domains):
        raise LengthMismatch(len(levels), len(dec.domains))
    if any(v <= 0 for v in levels):
        raise NonpositiveLevel("domain levels must be positive")
    between, to_null = domain_edge_counts(g, dec)
    total = Fraction(0)
    for (a, b), count in between.items():
        total += count * (levels[a] + levels[dec.r_pos + b])
    for k, count in enumerate(to_null):
        total += count * levels[k]
    return total
