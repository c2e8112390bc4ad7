from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliquepath.bounds import (binom, eg_bounds, eg_cycle_bound, extended_eg_bound, f_s,
                               kopylov_family_bound, kopylov_path_bound, luo_bounds, luo_cycle_bound)
from cliquepath.cliques import clique_profile
from cliquepath.constructions import build_clique_plus_pendants
from cliquepath.errors import DomainError
from cliquepath.graph import complete_graph
from conftest import graphs


def test_binom_out_of_range_is_zero():
    assert binom(4, 6) == 0 and binom(4, -1) == 0 and binom(4, 2) == 6


def test_f_s_examples():
    assert f_s(10, 2, 6, 2) == 18
    assert f_s(12, 3, 7, 3) == 28
    assert isinstance(f_s(10, 2, 6, 2), Fraction)
    with pytest.raises(DomainError):
        f_s(3, 2, 6, 2)


def test_eg_bounds_examples():
    assert eg_bounds(7, 5) == (12, Fraction(21, 2))
    assert eg_bounds(9, 4)[1] == 9
    assert eg_cycle_bound(1, 3) == 0
    with pytest.raises(DomainError):
        eg_cycle_bound(5, 2)


def test_luo_bounds_examples():
    assert luo_bounds(10, 2, 5)[0] == 18 == eg_cycle_bound(10, 5)
    assert luo_bounds(9, 3, 4)[1] == 3
    assert luo_bounds(5, 6, 5) == (0, 0)
    with pytest.raises(DomainError):
        luo_bounds(5, 1, 5)


def test_extended_eg_examples():
    assert extended_eg_bound(clique_profile(complete_graph(4)), 2) == 3
    assert extended_eg_bound(clique_profile(build_clique_plus_pendants(10)), 7) == 7
    assert extended_eg_bound(clique_profile(build_clique_plus_pendants(10)), 1) == 6
    with pytest.raises(DomainError):
        extended_eg_bound(clique_profile(complete_graph(4)), 5)


@given(graphs(min_n=1, max_n=8))
def test_extended_eg_at_omega(g):
    prof = clique_profile(g)
    assert extended_eg_bound(prof, prof.omega) == prof.omega - 1


def test_kopylov_bounds_examples():
    assert kopylov_family_bound(10, 2, 6, 2) == 18
    assert kopylov_family_bound(10, 2, 7, 2) == 24
    assert kopylov_path_bound(10, 2, 6, 2) == 17
    with pytest.raises(DomainError):
        kopylov_family_bound(4, 2, 5, 2)
    with pytest.raises(DomainError):
        kopylov_path_bound(10, 0, 6, 2)


def convexity_cells():
    for n in range(5, 31):
        for c in range(5, n + 1):
            t = (c - 1) // 2
            for s in range(1, c + 1):
                for k in range(0, t + 1):
                    yield n, c, s, k, t


def test_f_s_convex_in_k():
    for n, c, s, k, t in convexity_cells():
        top = max(f_s(n, k, c, s), f_s(n, t, c, s))
        assert all(f_s(n, x, c, s) <= top for x in range(k, t + 1))


@given(st.integers(1, 40), st.integers(3, 20))
def test_luo_reduces_to_eg_at_s2(n, l):
    assert luo_cycle_bound(n, 2, l) == eg_cycle_bound(n, l)
    assert luo_bounds(n, 2, l)[1] == eg_bounds(n, l)[1]


@given(st.integers(5, 40), st.integers(5, 40), st.integers(0, 20))
def test_f_2_closed_form(n, c, k):
    if c - k < 0 or n < c - k:
        return
    assert f_s(n, k, c, 2) == comb(c - k, 2) + k * (n - c + k)
