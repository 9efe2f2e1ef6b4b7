import random
from fractions import Fraction as F

import pytest

from conftest import random_graph
from oracles import eigen_system_feasible
from onelap.errors import LengthMismatch, ZeroVector
from onelap.graph import build_graph, cycle_graph, path_graph, petersen_graph
from onelap.spectrum import enumerate_spectrum
from onelap.tv import (
    assemble_levels,
    nodal_decomposition,
    pattern_to_function,
    scale_to_unit,
    tv_energy,
)
from onelap.verify import Certificate, check_certificate, is_eigenvector, verify_eigenpair

K2 = build_graph(2, [(0, 1)])
P4_EIG = (F(1, 6), F(1, 6), F(-1, 6), F(-1, 6))
P4_BAD = (F(3, 8), F(1, 8), F(-1, 8), F(-1, 8))


def test_check_certificate_examples():
    g = path_graph(4)
    assert check_certificate(g, P4_EIG, Certificate(F(1, 3), (F(1, 3), F(1), F(1, 3))))
    half = (F(1, 2), F(-1, 2))
    assert check_certificate(K2, half, Certificate(F(1), (F(1),)))
    assert not check_certificate(K2, half, Certificate(F(1), (F(1, 2),)))
    with pytest.raises(LengthMismatch):
        check_certificate(g, half, Certificate(F(1), (F(1),)))


def test_check_certificate_rejects_wrong_edge_count():
    assert not check_certificate(K2, (1, -1), Certificate(F(1), ()))


def test_verify_eigenpair_examples():
    g = path_graph(4)
    cert = verify_eigenpair(g, F(1, 3), P4_EIG)
    assert cert is not None and check_certificate(g, P4_EIG, cert)
    assert verify_eigenpair(g, F(1, 2), P4_EIG) is None
    assert verify_eigenpair(g, F(1, 2), P4_BAD) is None
    assert eigen_system_feasible(g, F(1, 2), P4_BAD) is False

    p = petersen_graph()
    cert = verify_eigenpair(p, 0, [F(1, 30)] * 10)
    assert cert is not None and all(v == 0 for v in cert.z)
    with pytest.raises(ZeroVector):
        verify_eigenpair(g, 0, [0, 0, 0, 0])


def test_is_eigenvector_examples():
    p = petersen_graph()
    mu, cert = is_eigenvector(p, [F(1, 15)] * 5 + [F(-1, 15)] * 5)
    assert mu == F(1, 3)
    assert check_certificate(p, [1] * 5 + [-1] * 5, cert)

    mu, _ = is_eigenvector(cycle_graph(4), [F(1, 8), F(1, 8), F(-1, 8), F(-1, 8)])
    assert mu == F(1, 2)
    assert is_eigenvector(path_graph(4), P4_BAD) is None


def test_petersen_spoke_certificate():
    p = petersen_graph()
    spokes = {(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)}
    z = tuple(F(1) if e in spokes else F(0) for e in p.edges)
    phi = [F(1, 15)] * 5 + [F(-1, 15)] * 5
    assert check_certificate(p, phi, Certificate(F(1, 3), z))


def test_out_of_range_mu_is_infeasible():
    g = path_graph(4)
    for mu in (F(-1, 3), F(4, 3), F(2)):
        assert verify_eigenpair(g, mu, P4_EIG) is None


def _random_case(rng):
    g = random_graph(rng, rng.randint(2, 5), rng.choice((0.3, 0.5, 0.8)))
    if rng.random() < 0.7:
        x = pattern_to_function(g, _nonzero_pattern(rng, g.n))
    else:
        x = [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(g.n)]
        if not any(x):
            x[0] = F(1)
    roll = rng.random()
    if roll < 0.6:
        mu = tv_energy(g, scale_to_unit(g, x))
    elif roll < 0.8:
        mu = F(rng.randint(0, 12), 12)
    else:
        mu = F(rng.randint(-4, 16), 8)
    return g, x, mu


def _nonzero_pattern(rng, n):
    while True:
        p = [rng.choice((-1, 0, 1)) for _ in range(n)]
        if any(p):
            return p


def test_verify_agrees_with_subset_oracle():
    rng = random.Random(7)
    outcomes = {True: 0, False: 0}
    for _ in range(600):
        g, x, mu = _random_case(rng)
        cert = verify_eigenpair(g, mu, x)
        expected = eigen_system_feasible(g, mu, x)
        assert (cert is not None) == expected, (g.edges, x, mu)
        if cert is not None:
            assert check_certificate(g, x, cert)
        outcomes[expected] += 1
    assert min(outcomes.values()) > 50


def test_soundness_on_enumerated_spectra(rng):
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 6), 0.5)
        report = enumerate_spectrum(g)
        for e in report.entries:
            x = pattern_to_function(g, e.patterns[0])
            assert check_certificate(g, x, e.certificate)
            for p in e.patterns:
                mu_cert = verify_eigenpair(g, e.mu, pattern_to_function(g, p))
                assert mu_cert is not None and check_certificate(g, pattern_to_function(g, p), mu_cert)


def test_median_condition_on_success(rng):
    checked = 0
    for _ in range(400):
        g, x, mu = _random_case(rng)
        if mu == 0 or verify_eigenpair(g, mu, x) is None:
            continue
        dec = nodal_decomposition(g, x)
        assert abs(dec.delta_pos - dec.delta_neg) <= dec.delta_zero
        checked += 1
    assert checked > 20


def test_orientation_and_scale_invariance(rng):
    for _ in range(300):
        g, x, _ = _random_case(rng)
        flipped = g.reoriented([rng.random() < 0.5 for _ in g.edges])
        base = is_eigenvector(g, x)
        other = is_eigenvector(flipped, x)
        assert (base is None) == (other is None)
        if base is not None:
            assert base[0] == other[0]
            assert check_certificate(flipped, x, other[1])
        c = F(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        scaled = is_eigenvector(g, [c * v for v in x])
        assert (base is None) == (scaled is None)
        if base is not None:
            assert base[0] == scaled[0]


def test_certificate_json_uses_canonical_orientation():
    g = path_graph(3).reoriented([True, False])
    cert = verify_eigenpair(g, 1, [F(1, 4), 0, F(-1, 4)])
    doc = cert.to_json(g)
    assert [d["edge"] for d in doc["z"]] == [[0, 1], [1, 2]]
    assert [d["value"] for d in doc["z"]] == ["1", "1"]


def test_cell_invariance(rng):
    """Reassigning positive per-domain levels keeps a certified vector certified."""
    done = 0
    while done < 300:
        g = random_graph(rng, rng.randint(3, 7), 0.45)
        report = enumerate_spectrum(g)
        for e in report.entries:
            for p in e.patterns:
                dec = nodal_decomposition(g, p)
                weights = [F(rng.randint(1, 30)) for _ in dec.domains]
                y = scale_to_unit(g, assemble_levels(g, dec, weights))
                hit = is_eigenvector(g, y)
                assert hit is not None and hit[0] == e.mu
                done += 1
