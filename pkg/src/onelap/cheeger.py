"""Cheeger constant, the pi-minimization route to mu_2, and eigenvalue bounds."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    ConstantVector,
    Disconnected,
    HypothesisViolated,
    TooLarge,
    TooSmall,
)
from .graph import Graph, is_connected
from .linear import linear_spectrum
from .rational import fmt_rat
from .spectrum import EnumConfig, decode_pattern, is_canonical_index, pattern_energy
from .tv import TernaryPattern, _check_length, pattern_in_pi

MAX_N_CUT = 24
INEQ_SLACK = 1e-9


@dataclass(frozen=True)
class Cut:
    subset: tuple[int, ...]
    boundary_size: int
    vol_s: int
    vol_sbar: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.boundary_size, min(self.vol_s, self.vol_sbar))

    def to_json(self) -> dict:
        return {
            "h": fmt_rat(self.ratio),
            "subset": list(self.subset),
            "boundary": self.boundary_size,
            "vol": [self.vol_s, self.vol_sbar],
        }


def cut_of(g: Graph, subset: Iterable[int]) -> Cut:
    inside = [False] * g.n
    for i in subset:
        inside[i] = True
    boundary = sum(1 for h, t in g.edges if inside[h] != inside[t])
    vol_s = sum(d for d, s in zip(g.degree, inside) if s)
    return Cut(
        subset=tuple(i for i in range(g.n) if inside[i]),
        boundary_size=boundary,
        vol_s=vol_s,
        vol_sbar=g.volume - vol_s,
    )


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected("graph is not connected")


def cheeger_exact(g: Graph, max_n: int = MAX_N_CUT) -> tuple[Fraction, Cut]:
    """Minimum of |E(S, S^c)| / min(vol S, vol S^c) over all proper S.

    Vertex 0 is kept inside S so each unordered cut is visited once; ties
    go to the smallest subset bitmask.
    """
    _require_connected(g)
    if g.n > max_n:
        raise TooLarge(g.n, max_n)
    full = (1 << g.n) - 1
    vol = g.volume
    best: Optional[tuple[int, int, int]] = None  # (boundary, min volume, mask)
    for mask in range(1, full, 2):
        boundary = 0
        for h, t in g.edges:
            boundary += ((mask >> h) ^ (mask >> t)) & 1
        vol_s = 0
        for i, d in enumerate(g.degree):
            if mask >> i & 1:
                vol_s += d
        denom = min(vol_s, vol - vol_s)
        # boundary/denom < best_b/best_d, exact by cross-multiplication
        if best is None or boundary * best[1] < best[0] * denom:
            best = (boundary, denom, mask)
    cut = cut_of(g, [i for i in range(g.n) if best[2] >> i & 1])
    return cut.ratio, cut


def _pi_scan(args):
    g, start, stop = args
    best = None
    for index in range(start, stop):
        if not is_canonical_index(index):
            continue
        p = decode_pattern(index, g.n)
        if not pattern_in_pi(g, p):
            continue
        jumps, delta = pattern_energy(g, p)
        key = (Fraction(jumps, delta), p.count(0), index)
        if best is None or key < best[0]:
            best = (key, p)
    return best


def mu2_via_pi_min(g: Graph, cfg: Optional[EnumConfig] = None) -> tuple[Fraction, TernaryPattern]:
    """Minimum energy over normal two-level vectors with weighted median zero.

    Among minimizers the pattern with the fewest zeros wins, then the
    smallest pattern index.
    """
    cfg = cfg or EnumConfig()
    _require_connected(g)
    if g.n > cfg.max_n:
        raise TooLarge(g.n, cfg.max_n)
    total = 3 ** g.n
    chunks = [(g, s, min(s + cfg.chunk_size, total)) for s in range(1, total, cfg.chunk_size)]
    if cfg.threads == 1 or len(chunks) == 1:
        parts = [_pi_scan(c) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            parts = list(pool.map(_pi_scan, chunks))
    best = min(b for b in parts if b is not None)
    return best[0][0], best[1]


def sweep_cut(g: Graph, y: Sequence) -> tuple[Fraction, Cut]:
    """Best Cheeger ratio among the threshold cuts {i : y_i > t}."""
    _check_length(g, y)
    levels = sorted(set(y))
    if len(levels) < 2:
        raise ConstantVector("sweep needs a non-constant vector")
    best: Optional[Cut] = None
    for t in levels[:-1]:
        cut = cut_of(g, [i for i in range(g.n) if y[i] > t])
        if best is None or cut.ratio < best.ratio:
            best = cut
    return best.ratio, best


def cheeger_inequality_check(g: Graph) -> tuple[float, Fraction, bool]:
    """(lambda_2, h, lambda_2/2 <= h <= sqrt(2 lambda_2))."""
    _require_connected(g)
    lam2 = linear_spectrum(g).lambda2
    h, _ = cheeger_exact(g)
    hf = float(h)
    ok = lam2 / 2 <= hf + INEQ_SLACK and hf <= math.sqrt(max(2 * lam2, 0.0)) + INEQ_SLACK
    return lam2, h, ok


def eigenvalue_range_bound(g: Graph) -> tuple[Fraction, Fraction]:
    """(2 / sum d_i, (n-2)/(n-1)): bounds on every eigenvalue strictly inside (0, 1)."""
    if g.n < 3:
        raise TooSmall("range bound needs n >= 3")
    _require_connected(g)
    return Fraction(2, g.volume), Fraction(g.n - 2, g.n - 1)


def group_upper_bound(g: Graph, group_a: Iterable[int], group_b: Iterable[int]) -> Fraction:
    """1 - 1/(2c) for two disjoint vertex groups of equal volume c, one with an inner edge."""
    a, b = set(group_a), set(group_b)
    _require_connected(g)
    if not a or not b:
        raise HypothesisViolated("groups must be nonempty")
    if a & b:
        raise HypothesisViolated("groups must be disjoint")
    ca = sum(g.degree[i] for i in a)
    cb = sum(g.degree[i] for i in b)
    if ca != cb:
        raise HypothesisViolated(f"group volumes differ ({ca} != {cb})")
    inner = any((h in a and t in a) or (h in b and t in b) for h, t in g.edges)
    if not inner:
        raise HypothesisViolated("no adjacent pair inside either group")
    return 1 - Fraction(1, 2 * ca)
