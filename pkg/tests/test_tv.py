import random
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import example5_graph, random_graph
from oracles import tv_energy_ordered_pairs
from onelap.errors import AllZeroPattern, LengthMismatch, NonpositiveLevel, NotOnX, ZeroVector
from onelap.graph import build_graph, cycle_graph, path_graph, petersen_graph
from onelap.tv import (
    assemble_levels,
    canonical_pattern,
    in_pi,
    nodal_decomposition,
    normalize_eigenvector,
    pattern_of,
    pattern_to_function,
    tv_energy,
    tv_energy_nodal,
    weighted_norm,
)

P4_EIG = (F(1, 6), F(1, 6), F(-1, 6), F(-1, 6))
# The level 1/15 gives weighted norm 2; on the unit sphere the level is 1/30.
PETERSEN_PHI = tuple(F(1, 30) * s for s in [1] * 5 + [-1] * 5)
PETERSEN_PHI_DOUBLE = tuple(2 * v for v in PETERSEN_PHI)


def test_weighted_norm():
    assert weighted_norm(path_graph(4), P4_EIG) == 1
    assert weighted_norm(path_graph(4), [0, 0, 0, 0]) == 0
    assert weighted_norm(cycle_graph(4), [F(1, 8)] * 4) == 1
    with pytest.raises(LengthMismatch):
        weighted_norm(path_graph(4), [1, 2])


def test_tv_energy():
    assert tv_energy(path_graph(4), P4_EIG) == F(1, 3)
    assert tv_energy(petersen_graph(), [F(7, 3)] * 10) == 0
    assert tv_energy(cycle_graph(4), [F(1, 8), F(-1, 8), F(1, 8), F(-1, 8)]) == 1


def test_tv_energy_counts_each_edge_once(rng):
    # the ordered-pair double sum, halved, is the same quantity
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 7), 0.5)
        x = [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(g.n)]
        assert tv_energy(g, x) == tv_energy_ordered_pairs(g, x)


def test_nodal_decomposition_examples():
    g = example5_graph()
    dec = nodal_decomposition(g, [F(1, 6), F(1, 6), F(-1, 6), F(-1, 6), 0])
    assert dec.pos_domains == ((0,), (1,))
    assert dec.neg_domains == ((2,), (3,))
    assert dec.null_set == (4,)
    assert (dec.r_pos, dec.r_neg) == (2, 2)

    dec = nodal_decomposition(path_graph(4), P4_EIG)
    assert dec.pos_domains == ((0, 1),) and dec.neg_domains == ((2, 3),)
    assert dec.null_set == ()
    assert (dec.delta_pos, dec.delta_neg, dec.delta_zero) == (3, 3, 0)

    dec = nodal_decomposition(petersen_graph(), [1] * 10)
    assert dec.r_pos == 1 and dec.r_neg == 0 and dec.null_set == ()


def test_decomposition_invariants(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(2, 8), 0.35)
        p = [rng.choice((-1, 0, 1)) for _ in range(g.n)]
        dec = nodal_decomposition(g, p)
        parts = [v for d in dec.domains for v in d] + list(dec.null_set)
        assert sorted(parts) == list(range(g.n))
        assert dec.delta_pos + dec.delta_neg + dec.delta_zero == g.volume
        owner = {v: k for k, d in enumerate(dec.domains) for v in d}
        for h, t in g.edges:
            if h in owner and t in owner and owner[h] != owner[t]:
                # distinct domains touching must have opposite signs
                assert (owner[h] < dec.r_pos) != (owner[t] < dec.r_pos)
            if p[h] == p[t] != 0:
                assert owner[h] == owner[t]


def test_in_pi():
    assert in_pi(path_graph(4), P4_EIG)
    g = petersen_graph()
    assert not in_pi(g, [F(1, 30)] * 10)
    assert in_pi(g, PETERSEN_PHI)
    assert weighted_norm(g, PETERSEN_PHI_DOUBLE) == 2
    with pytest.raises(NotOnX):
        in_pi(g, PETERSEN_PHI_DOUBLE)


def test_normalize_eigenvector():
    g = path_graph(4)
    assert normalize_eigenvector(g, [F(1, 12), F(1, 12), F(-1, 4), F(-1, 4)]) == P4_EIG
    assert normalize_eigenvector(g, P4_EIG) == P4_EIG
    k2 = build_graph(2, [(0, 1)])
    assert normalize_eigenvector(k2, [F(3, 4), F(-1, 4)]) == (F(1, 2), F(-1, 2))
    with pytest.raises(ZeroVector):
        normalize_eigenvector(g, [0, 0, 0, 0])


def test_pattern_to_function():
    assert pattern_to_function(path_graph(4), (1, 1, -1, -1)) == P4_EIG
    assert pattern_to_function(petersen_graph(), [1] * 5 + [-1] * 5) == PETERSEN_PHI
    assert pattern_to_function(build_graph(2, [(0, 1)]), (1, -1)) == (F(1, 2), F(-1, 2))
    with pytest.raises(AllZeroPattern):
        pattern_to_function(path_graph(3), (0, 0, 0))


def test_canonical_pattern():
    assert canonical_pattern((0, -1, 1)) == (0, 1, -1)
    assert canonical_pattern((1, 0, -1)) == (1, 0, -1)


def test_tv_energy_nodal_examples():
    g = path_graph(4)
    dec = nodal_decomposition(g, (1, 1, -1, -1))
    assert tv_energy_nodal(g, dec, [F(1, 6), F(1, 6)]) == F(1, 3)

    g5 = example5_graph()
    dec = nodal_decomposition(g5, (1, 1, -1, -1, 0))
    expected = tv_energy(g5, [F(1, 6), F(1, 6), F(-1, 6), F(-1, 6), 0])
    assert expected == 1
    assert tv_energy_nodal(g5, dec, [F(1, 6)] * 4) == expected

    with pytest.raises(NonpositiveLevel):
        tv_energy_nodal(g, nodal_decomposition(g, (1, 1, -1, -1)), [0, 1])


def test_tv_energy_nodal_matches_direct(rng):
    for _ in range(500):
        g = random_graph(rng, rng.randint(2, 8), 0.4)
        p = [rng.choice((-1, 0, 1)) for _ in range(g.n)]
        if not any(p):
            continue
        dec = nodal_decomposition(g, p)
        levels = [F(rng.randint(1, 20), rng.randint(1, 7)) for _ in dec.domains]
        y = assemble_levels(g, dec, levels)
        assert pattern_of(y) == tuple(p)
        assert tv_energy_nodal(g, dec, levels) == tv_energy(g, y)
        delta = dec.delta_pos + dec.delta_neg
        assert tv_energy_nodal(g, dec, [F(1, delta)] * len(dec.domains)) == tv_energy(
            g, pattern_to_function(g, p)
        )


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 7), st.data())
def test_homogeneity_and_norm_bound(n, data):
    g = random_graph(random.Random(data.draw(st.integers(0, 10**6))), n, 0.5)
    x = data.draw(st.lists(rationals, min_size=n, max_size=n))
    c = data.draw(rationals)
    cx = [c * v for v in x]
    assert tv_energy(g, cx) == abs(c) * tv_energy(g, x)
    assert weighted_norm(g, cx) == abs(c) * weighted_norm(g, x)
    assert tv_energy(g, x) <= weighted_norm(g, x)


def test_normalize_idempotent_and_sign_preserving():
    g = cycle_graph(5)
    for vals in product((F(-2), F(0), F(1, 3)), repeat=5):
        if not any(vals):
            continue
        y = normalize_eigenvector(g, vals)
        assert pattern_of(y) == pattern_of(vals)
        assert normalize_eigenvector(g, y) == y
        assert weighted_norm(g, y) == 1
