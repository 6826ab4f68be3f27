import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singres import (
    Cycle,
    DualGraph,
    RationalCycle,
    anticanonical_cycle,
    arithmetic_genus,
    canonical_degrees,
    enumerate_subcycles,
    fundamental_cycle,
    intersection_matrix,
    is_negative_definite,
    pairing,
)
from singres.catalog import a_n, d_n, e_n
from singres.cycles import laufer_sequence, subcycle_count
from singres.errors import DimensionMismatch, EnumerationTooLarge, NotNegativeDefinite, ZeroCycle

from oracles import brute_fundamental_cycle, brute_fundamental_cycle_python
from test_graph import graphs


def nd_graphs(**kw):
    return graphs(**kw).filter(lambda g: is_negative_definite(intersection_matrix(g)))


# -- pairing ------------------------------------------------------------------

def test_pairing_examples(a1, d4, cusp):
    assert pairing([1], [1], a1) == -2
    assert pairing((2, 1, 1, 1), (2, 1, 1, 1), d4) == -2
    assert pairing((1, 1, 1), (1, 0, 0), cusp) == -1


def test_pairing_rational(a1):
    assert pairing(RationalCycle((Fraction(1, 2),)), Cycle((1,)), a1) == -1


def test_pairing_dimension_mismatch(d4):
    with pytest.raises(DimensionMismatch):
        pairing((1, 1), (1, 1, 1, 1), d4)


def test_cycle_order():
    assert Cycle((1, 0)) < Cycle((1, 1))
    assert not Cycle((1, 1)) < Cycle((1, 1))
    assert not Cycle((2, 0)) <= Cycle((1, 1))
    assert Cycle((0, 0)).is_effective and not Cycle((0, 0)).is_nonzero_effective


# -- fundamental cycle --------------------------------------------------------

def test_fundamental_cycle_a1(a1):
    assert fundamental_cycle(a1).coefficients == (1,)


def test_fundamental_cycle_d4(d4):
    # frozen from the brute-force search over coefficients <= 6
    [expected] = brute_fundamental_cycle_python(intersection_matrix(d4).rows(), 6)
    assert expected == (2, 1, 1, 1)
    assert fundamental_cycle(d4).coefficients == expected


@pytest.mark.parametrize("d", range(1, 13))
def test_fundamental_cycle_simple_elliptic(se, d):
    assert fundamental_cycle(se(-d)).coefficients == (1,)


def test_fundamental_cycle_e8(e8):
    # highest root of E8, branch vertex first, arms (1), (2, 3), (4..7)
    z = fundamental_cycle(e8).coefficients
    assert z == (6, 3, 4, 2, 5, 4, 3, 2)
    assert brute_fundamental_cycle(intersection_matrix(e8).to_numpy(), 6) == (z, 6)


def test_fundamental_cycle_requires_negative_definite(double_edge):
    with pytest.raises(NotNegativeDefinite):
        fundamental_cycle(double_edge)


@settings(max_examples=150, deadline=None)
@given(nd_graphs(max_n=4, weights=(-5, -2)))
def test_fundamental_cycle_is_antinef_and_reduced(g):
    z = fundamental_cycle(g)
    m = intersection_matrix(g)
    assert all(pairing(z, [int(i == k) for k in range(g.n)], m) <= 0 for i in range(g.n))
    assert all(a >= 1 for a in z)


@settings(max_examples=40, deadline=None)
@given(nd_graphs(max_n=3, weights=(-5, -2)), st.randoms(use_true_random=False))
def test_laufer_order_independent(g, rng):
    m = intersection_matrix(g)
    base = laufer_sequence(m)
    for _ in range(100):
        order = list(range(g.n))
        rng.shuffle(order)
        assert laufer_sequence(m, order) == base


def test_laufer_order_independent_cusp_and_e8(cusp, e8):
    rng = random.Random(7)
    for g in (cusp, e8, d_n(6), a_n(5)):
        m = intersection_matrix(g)
        base = laufer_sequence(m)
        for _ in range(100):
            order = list(range(g.n))
            rng.shuffle(order)
            assert laufer_sequence(m, order) == base


@settings(max_examples=60, deadline=None)
@given(nd_graphs(max_n=3, weights=(-4, -2), max_mult=1))
def test_fundamental_cycle_matches_python_bruteforce(g):
    z = fundamental_cycle(g)
    bound = max(z)
    minimal = brute_fundamental_cycle_python(intersection_matrix(g).rows(), bound)
    assert minimal == [z.coefficients]


# -- anticanonical cycle ------------------------------------------------------

def test_anticanonical_examples(a1, se):
    assert anticanonical_cycle(a1).coefficients == (0,)
    assert anticanonical_cycle(DualGraph.from_lists([-3])).coefficients == (Fraction(1, 3),)
    for d in range(1, 13):
        assert anticanonical_cycle(se(-d)).coefficients == (1,)


def test_anticanonical_cusp(cusp):
    assert anticanonical_cycle(cusp).coefficients == (1, 1, 1)


@pytest.mark.parametrize("g", [a_n(n) for n in range(1, 9)] + [d_n(n) for n in range(4, 9)] + [e_n(n) for n in (6, 7, 8)])
def test_anticanonical_vanishes_on_ade(g):
    assert all(c == 0 for c in anticanonical_cycle(g))


@settings(max_examples=200, deadline=None)
@given(nd_graphs(max_n=5, weights=(-6, -1)))
def test_anticanonical_residual_zero(g):
    zk = anticanonical_cycle(g)
    m = intersection_matrix(g)
    k = canonical_degrees(g)
    for i in range(g.n):
        assert sum(m[i, j] * zk[j] for j in range(g.n)) + k[i] == 0
    assert all(c.denominator > 0 for c in zk)


def test_canonical_degrees_adjunction(se):
    g = DualGraph.from_lists([-3, -2, -1], [(0, 1), (1, 2)], [2, 0, 1])
    k = canonical_degrees(g)
    for v, kv in zip(g.vertices, k):
        assert kv + v.weight == 2 * v.genus - 2


# -- arithmetic genus ---------------------------------------------------------

def test_arithmetic_genus_examples(a1, se, cusp):
    assert arithmetic_genus(fundamental_cycle(a1), a1) == 0
    for d in range(1, 13):
        assert arithmetic_genus((1,), se(-d)) == 1
    assert arithmetic_genus((1, 1, 0), cusp) == 0


def test_arithmetic_genus_zero_cycle(a1):
    with pytest.raises(ZeroCycle):
        arithmetic_genus((0,), a1)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=5), st.data())
def test_arithmetic_genus_integral(g, data):
    z = data.draw(st.lists(st.integers(0, 6), min_size=g.n, max_size=g.n).filter(any))
    pa = arithmetic_genus(z, g)
    assert pa.denominator == 1


# -- subcycle enumeration -----------------------------------------------------

def test_enumerate_subcycles_examples():
    assert list(enumerate_subcycles(Cycle((1,)))) == []
    assert {c.coefficients for c in enumerate_subcycles((1, 1))} == {(1, 0), (0, 1)}
    got = [c.coefficients for c in enumerate_subcycles((2, 1))]
    assert sorted(got) == sorted([(1, 0), (2, 0), (0, 1), (1, 1)])


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4).filter(any))
def test_enumerate_subcycles_complete_and_unique(z):
    got = [c.coefficients for c in enumerate_subcycles(z)]
    assert len(got) == len(set(got)) == subcycle_count(z)
    zc = Cycle(tuple(z))
    for d in got:
        assert Cycle(d).is_nonzero_effective and Cycle(d) < zc


def test_enumerate_subcycles_cap():
    with pytest.raises(EnumerationTooLarge):
        enumerate_subcycles((9, 9, 9), cap=999)
    assert len(list(enumerate_subcycles((9, 9, 9), cap=1000))) == 998
