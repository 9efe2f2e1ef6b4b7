"""Exhaustive 1-Laplacian spectrum over normal ternary eigenvectors.

Every eigenvector is connected, inside its eigenspace, to a normal one that
takes only the values +-1/delta and 0, so scanning the (3^n - 1)/2 sign
patterns up to global sign recovers every eigenvalue.  Each pattern's
candidate eigenvalue is its energy on the unit sphere, and the flow
certifier decides it.

Two necessary conditions are applied before the flow check, both exact:

* every nodal domain D has |boundary(D)| = mu * vol(D), because edges leaving
  a domain are forced to +-1 and edges inside cancel;
* for mu != 0 the pattern has weighted median zero,
  |delta+ - delta-| <= delta0.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import Disconnected, TooLarge, TooSmall
from .graph import Graph, connected_components
from .rational import fmt_rat
from .tv import TernaryPattern, decompose_signs, pattern_to_function
from .verify import Certificate, verify_eigenpair

_DIGIT = (0, 1, -1)


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("ONELAP_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class EnumConfig:
    max_n: int = 16
    chunk_size: int = 4096
    threads: int = field(default_factory=default_threads)

    def __post_init__(self):
        if self.max_n < 2:
            raise ValueError("max_n must be >= 2")
        if self.chunk_size < 1:
            raise ValueError("chunk_size must be >= 1")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


@dataclass(frozen=True)
class EigenEntry:
    mu: Fraction
    patterns: tuple[TernaryPattern, ...]
    certificate: Certificate

    @property
    def pattern_count(self) -> int:
        return len(self.patterns)


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    m: int
    components: int
    entries: tuple[EigenEntry, ...]

    @property
    def eigenvalues(self) -> list[Fraction]:
        return [e.mu for e in self.entries]

    def entry(self, mu) -> Optional[EigenEntry]:
        mu = Fraction(mu)
        for e in self.entries:
            if e.mu == mu:
                return e
        return None

    def to_json(self, g: Graph) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "components": self.components,
            "eigenvalues": [
                {
                    "mu": fmt_rat(e.mu),
                    "mu_float": round(float(e.mu), 12),
                    "pattern_count": e.pattern_count,
                    "patterns": [list(p) for p in e.patterns],
                    "certificate": e.certificate.to_json(g),
                }
                for e in self.entries
            ],
        }

    def dumps(self, g: Graph) -> str:
        return json.dumps(self.to_json(g), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["mu", "mu_float", "pattern"])
        for e in self.entries:
            for p in e.patterns:
                w.writerow([fmt_rat(e.mu), f"{float(e.mu):.12g}", " ".join(map(str, p))])
        return buf.getvalue()


def decode_pattern(index: int, n: int) -> TernaryPattern:
    """Base-3 digits of ``index``, vertex 0 least significant; digit 2 means -1."""
    out = []
    for _ in range(n):
        index, d = divmod(index, 3)
        out.append(_DIGIT[d])
    return tuple(out)


def is_canonical_index(index: int) -> bool:
    """True when the lowest nonzero digit is 1, i.e. the first nonzero sign is +."""
    while index:
        index, d = divmod(index, 3)
        if d:
            return d == 1
    return False


def pattern_energy(g: Graph, p) -> tuple[int, int]:
    """(sum_e |p_h - p_t|, delta); the unit-sphere energy is their ratio."""
    jumps = sum(abs(p[h] - p[t]) for h, t in g.edges)
    delta = sum(d for d, s in zip(g.degree, p) if s)
    return jumps, delta


def passes_necessary_conditions(g: Graph, p, jumps: int, delta: int) -> bool:
    dec = decompose_signs(g, p)
    if jumps and abs(dec.delta_pos - dec.delta_neg) > dec.delta_zero:
        return False
    # boundary(D) * delta == jumps * vol(D) for every domain D
    owner = [-1] * g.n
    for k, dom in enumerate(dec.domains):
        for i in dom:
            owner[i] = k
    boundary = [0] * len(dec.domains)
    vol = [0] * len(dec.domains)
    for i in range(g.n):
        if owner[i] >= 0:
            vol[owner[i]] += g.degree[i]
    for h, t in g.edges:
        a, b = owner[h], owner[t]
        if a != b:
            if a >= 0:
                boundary[a] += 1
            if b >= 0:
                boundary[b] += 1
    return all(b * delta == jumps * v for b, v in zip(boundary, vol))


def certify_pattern(g: Graph, p, prefilter: bool = True):
    """Return ``(mu, certificate)`` if the normal vector of ``p`` is an eigenvector."""
    jumps, delta = pattern_energy(g, p)
    if prefilter and not passes_necessary_conditions(g, p, jumps, delta):
        return None
    mu = Fraction(jumps, delta)
    cert = verify_eigenpair(g, mu, pattern_to_function(g, p))
    if cert is None:
        return None
    return mu, cert


def _scan(args):
    g, start, stop, prefilter = args
    found = []
    for index in range(start, stop):
        if not is_canonical_index(index):
            continue
        p = decode_pattern(index, g.n)
        hit = certify_pattern(g, p, prefilter)
        if hit is not None:
            found.append((index, p, hit[0], hit[1]))
    return found


def enumerate_spectrum(
    g: Graph, cfg: Optional[EnumConfig] = None, prefilter: bool = True
) -> SpectrumReport:
    """All distinct eigenvalues with their certified normal sign patterns.

    Output does not depend on ``cfg.threads``: chunks are fixed by
    ``cfg.chunk_size`` and merged by pattern index.
    """
    cfg = cfg or EnumConfig()
    if g.n > cfg.max_n:
        raise TooLarge(g.n, cfg.max_n)
    total = 3 ** g.n
    chunks = [
        (g, s, min(s + cfg.chunk_size, total), prefilter)
        for s in range(1, total, cfg.chunk_size)
    ]
    if cfg.threads == 1 or len(chunks) == 1:
        results = [_scan(c) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            results = list(pool.map(_scan, chunks))

    by_mu: dict[Fraction, list] = {}
    for part in results:
        for index, p, mu, cert in part:
            by_mu.setdefault(mu, []).append((index, p, cert))
    entries = []
    for mu in sorted(by_mu):
        hits = sorted(by_mu[mu], key=lambda h: h[0])
        entries.append(
            EigenEntry(mu=mu, patterns=tuple(h[1] for h in hits), certificate=hits[0][2])
        )
    return SpectrumReport(
        n=g.n, m=g.m, components=connected_components(g).count, entries=tuple(entries)
    )


def second_eigenvalue(report: SpectrumReport) -> Fraction:
    """Smallest nonzero eigenvalue; for connected graphs 0 is simple, so this is mu_2."""
    if report.components != 1:
        raise Disconnected("mu_2 is 0 on a disconnected graph")
    nonzero = [mu for mu in report.eigenvalues if mu != 0]
    return nonzero[0]


def zero_eigenvalue_patterns(g: Graph) -> int:
    """Number of certified canonical patterns with eigenvalue 0.

    Zero energy forces a pattern to be constant on each component, so only
    the 3^r - 1 component-constant patterns (halved by sign) are candidates.
    """
    comps = connected_components(g)
    r = comps.count
    count = 0
    for index in range(1, 3 ** r):
        if not is_canonical_index(index):
            continue
        per_comp = decode_pattern(index, r)
        p = tuple(per_comp[c] for c in comps.component_id)
        if verify_eigenpair(g, 0, pattern_to_function(g, p)) is not None:
            count += 1
    return count


# --- closed forms for special families ---------------------------------------------

def path_spectrum_oracle(n: int) -> list[Fraction]:
    if n < 2:
        raise TooSmall(f"path needs n >= 2, got {n}")
    r = n // 2
    if n % 2 == 0:
        mids = [Fraction(1, n - 2 * k + 1) for k in range(1, r)]
    else:
        mids = [Fraction(1, n - 2 * k) for k in range(1, r)]
    return sorted({Fraction(0), Fraction(1), *mids})


def cycle_spectrum_oracle(n: int) -> list[Fraction]:
    if n < 3:
        raise TooSmall(f"cycle needs n >= 3, got {n}")
    r = n // 2
    mids = [Fraction(1, r - k + 1) for k in range(1, r)]
    return sorted({Fraction(0), Fraction(1), *mids})


def complete_spectrum_oracle(n: int) -> list[Fraction]:
    if n < 3:
        raise TooSmall(f"complete graph needs n >= 3, got {n}")
    r = n // 2
    if n % 2 == 0:
        mids = [Fraction(r + k, n - 1) for k in range(0, r - 1)]
    else:
        mids = [Fraction(r + k + 1, n - 1) for k in range(0, r - 1)]
    return sorted({Fraction(0), Fraction(1), *mids})


def star_spectrum_oracle(n: int) -> list[Fraction]:
    if n < 2:
        raise TooSmall(f"star needs n >= 2, got {n}")
    return [Fraction(0), Fraction(1)]
