import math

import pytest
from hypothesis import given

import oracles
from conftest import graphs, random_graph
from cliquepath.errors import ConvergenceError, DomainError
from cliquepath.graph import (complete_bipartite_graph, complete_graph, cycle_graph, disjoint_union,
                              empty_graph, path_graph)
from cliquepath.spectral import balanced_bipartite_threshold, check_fact1, spectral_radius


@pytest.mark.parametrize("g, mu", [
    (complete_graph(4), 3.0),
    (cycle_graph(5), 2.0),
    (complete_bipartite_graph(2, 3), math.sqrt(6)),
    (empty_graph(3), 0.0),
    (disjoint_union(complete_graph(2), complete_graph(4)), 3.0),
])
def test_spectral_examples(g, mu):
    res = spectral_radius(g)
    assert abs(res.mu - mu) <= 2 * res.tolerance


@pytest.mark.parametrize("n", range(2, 31))
def test_balanced_bipartite_threshold(n):
    res = spectral_radius(complete_bipartite_graph(n // 2, n - n // 2))
    assert abs(res.mu - balanced_bipartite_threshold(n)) <= 2 * res.tolerance


def test_long_path_converges_to_the_right_value():
    res = spectral_radius(path_graph(62))
    assert abs(res.mu - 2 * math.cos(math.pi / 63)) <= 2 * res.tolerance


def test_errors():
    with pytest.raises(DomainError):
        spectral_radius(empty_graph(0))
    with pytest.raises(DomainError):
        spectral_radius(cycle_graph(4), tol=0)
    with pytest.raises(ConvergenceError) as exc:
        spectral_radius(path_graph(30), max_iter=3)
    assert exc.value.residual > 0


def test_matches_dense_eigensolver(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 30), rng.random())
        assert abs(spectral_radius(g).mu - oracles.spectral_radius(g)) <= 2e-9


@given(graphs(min_n=1, max_n=14))
def test_rayleigh_sandwich(g):
    res = spectral_radius(g)
    assert 2 * g.m / g.n <= res.mu + res.tolerance
    assert res.mu <= g.max_degree + res.tolerance


def test_fact1_examples():
    v = check_fact1(complete_graph(5))
    assert v.bound == 5 and v.holds and v.tight
    v = check_fact1(complete_graph(4))
    assert v.bound == 4 and v.holds
    v = check_fact1(complete_bipartite_graph(3, 3))
    assert v.premise_met and v.holds and v.bound == 2
    assert not check_fact1(empty_graph(2)).premise_met
