import numpy as np
import pytest
from hypothesis import given

from offalliance import generators as gen
from offalliance.errors import InvalidParameterError
from offalliance.graph import VertexSet, from_edge_list, line_graph
from offalliance.spectral import (
    adjacency_eigenvalues,
    fiedler_indicator_check,
    indicator_rayleigh,
    laplacian_spectral_radius,
)

import oracles
from strategies import graphs


@pytest.mark.parametrize("g,expected", [
    (gen.complete(5), 5.0),
    (gen.complete(9), 9.0),
    (gen.cycle(4), 4.0),
    (gen.star(3), 4.0),
    (gen.petersen(), 5.0),
    (gen.hypercube(3), 6.0),
    (gen.path(3), 3.0),
])
def test_known_radii(g, expected):
    assert laplacian_spectral_radius(g).mu_star == pytest.approx(expected, rel=1e-8)


@given(graphs(min_n=2, max_n=12))
def test_matches_dense_eigensolver(g):
    assert laplacian_spectral_radius(g).mu_star == pytest.approx(oracles.laplacian_max(g), rel=1e-8, abs=1e-12)


def test_edgeless_and_tiny():
    assert laplacian_spectral_radius(from_edge_list(3, [])).mu_star == 0.0
    with pytest.raises(InvalidParameterError):
        laplacian_spectral_radius(from_edge_list(1, []))


def test_dense_fallback_when_power_iteration_is_starved():
    rep = laplacian_spectral_radius(gen.petersen(), max_iter=1)
    assert rep.method == "dense" and rep.mu_star == pytest.approx(5.0, rel=1e-12)


def test_line_graph_radius_of_k4():
    assert laplacian_spectral_radius(line_graph(gen.complete(4))).mu_star == pytest.approx(6.0, rel=1e-8)
    assert adjacency_eigenvalues(line_graph(gen.complete(4)))[0] == pytest.approx(-2.0)


def test_line_graph_radius_of_odd_cycle_is_below_twice_degree():
    mu = laplacian_spectral_radius(line_graph(gen.cycle(5))).mu_star
    assert mu == pytest.approx(2 + 2 * np.cos(np.pi / 5), rel=1e-8)
    assert mu < 4


def test_indicator_examples():
    k5 = gen.complete(5)
    s = VertexSet.of(5, [0, 2, 4])
    assert indicator_rayleigh(k5, s) == pytest.approx(5.0)
    assert fiedler_indicator_check(k5, s, 5.0)
    assert indicator_rayleigh(gen.cycle(4), VertexSet.of(4, [0, 2])) == pytest.approx(4.0)
    g = from_edge_list(4, [(0, 1), (2, 3)])
    assert indicator_rayleigh(g, VertexSet.of(4, [0, 1])) == 0.0


def test_indicator_never_exceeds_radius_on_random_sets():
    rng = np.random.default_rng(11)
    for i in range(200):
        g = gen.random_regular(10, 3 + i % 2, seed=i) if i % 3 else gen.cycle(5 + i % 7)
        mu = laplacian_spectral_radius(g).mu_star
        mask = int(rng.integers(1, (1 << g.n) - 1))
        assert fiedler_indicator_check(g, VertexSet(mask, g.n), mu)


def test_indicator_rejects_trivial_sets():
    with pytest.raises(InvalidParameterError):
        indicator_rayleigh(gen.cycle(4), VertexSet.full(4))
