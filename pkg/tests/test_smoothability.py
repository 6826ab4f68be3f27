import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from singres import DualGraph, intersection_matrix, is_negative_definite, link_first_betti, steenbrink
from singres.catalog import a_n, d_n, e_n
from singres.errors import InvalidWeight, NotNegativeDefinite, PgUnderdetermined
from singres.smoothability import PG_MINEL, PG_RATIONAL, PG_USER, simple_elliptic_smoothable

from test_graph import graphs


def test_link_first_betti(d4, se, cusp):
    assert link_first_betti(d4) == 0
    assert link_first_betti(se(-7)) == 2
    assert link_first_betti(cusp) == 1
    assert link_first_betti(DualGraph.from_lists([-3, -3], [(0, 1), (0, 1)], [2, 1])) == 1 + 6


def test_steenbrink_a1(a1):
    r = steenbrink(a1)
    assert r.mu_minus_predicted == 1 and r.obstructed is False
    assert r.p_g == 0 and r.p_g_source == PG_RATIONAL


@pytest.mark.parametrize("d", range(1, 13))
def test_steenbrink_simple_elliptic(se, d):
    r = steenbrink(se(-d))
    assert r.p_g == 1 and r.p_g_source == PG_MINEL
    assert r.b1_link == 2 and r.zk_squared == -d and r.vertex_count == 1
    assert r.mu_minus_predicted == 9 - d
    assert r.obstructed is (9 - d < 0)


def test_steenbrink_e8(e8):
    r = steenbrink(e8)
    assert r.mu_minus_predicted == 8 and r.zk_squared == 0


def test_steenbrink_explicit_pg_overrides(se):
    r = steenbrink(se(-3), p_g=7)
    assert r.p_g_source == PG_USER
    assert r.mu_minus_predicted == 70 - 2 + (-3 + 1)


def test_steenbrink_invariant_identity(cusp):
    r = steenbrink(cusp)
    assert r.mu_minus_predicted == 10 * r.p_g - r.b1_link + (r.zk_squared + r.vertex_count)
    # cusp: Z_K = (1,1,1), Z_K^2 = -3, b1 = 1, p_g = 1
    assert (r.p_g, r.b1_link, r.zk_squared, r.mu_minus_predicted) == (1, 1, -3, 9)


def test_not_gorenstein_not_applicable():
    g = DualGraph.from_lists([-3])
    r = steenbrink(g)  # rational, so p_g = 0 is derived
    assert r.obstructed is None
    assert r.zk_squared == Fraction(-1, 3)
    assert r.to_dict()["obstructed"] == "not-applicable"
    assert r.to_dict()["mu_minus_predicted"] == "2/3"


def test_pg_underdetermined():
    # two elliptic curves meeting once: p_a(Z_num) = 2, not minimally elliptic
    g = DualGraph.from_lists([-3, -3], [(0, 1)], [1, 1])
    with pytest.raises(PgUnderdetermined):
        steenbrink(g)
    assert steenbrink(g, p_g=2).p_g == 2


def test_precondition(double_edge):
    with pytest.raises(NotNegativeDefinite):
        steenbrink(double_edge, p_g=0)


def test_simple_elliptic_smoothable_examples():
    assert simple_elliptic_smoothable(-9)
    assert not simple_elliptic_smoothable(-10)
    assert simple_elliptic_smoothable(-1)
    with pytest.raises(InvalidWeight):
        simple_elliptic_smoothable(0)


@pytest.mark.parametrize("w", range(-12, 0))
def test_smoothable_range_matches_steenbrink(se, w):
    assert simple_elliptic_smoothable(w) == (9 + w >= 0)
    assert simple_elliptic_smoothable(w) == (not steenbrink(se(w)).obstructed)


@pytest.mark.parametrize("g", [a_n(n) for n in range(1, 9)] + [d_n(4), e_n(6), e_n(7), e_n(8)])
def test_ade_mu_minus_is_vertex_count(g):
    r = steenbrink(g)
    assert r.mu_minus_predicted == g.n
    assert steenbrink(g, p_g=0).mu_minus_predicted == r.mu_minus_predicted


nd = graphs(max_n=4, weights=(-5, -2), max_mult=1).filter(lambda g: is_negative_definite(intersection_matrix(g)))


@settings(max_examples=100, deadline=None)
@given(nd)
def test_mu_minus_invariant_under_relabeling(g):
    base = steenbrink(g, p_g=1)
    perm = list(range(g.n))
    random.Random(len(g.edges)).shuffle(perm)
    assert steenbrink(g.relabel(perm), p_g=1).mu_minus_predicted == base.mu_minus_predicted
