import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singres import canonical_degrees, fundamental_cycle, intersection_matrix, is_negative_definite
from singres import kernels
from singres.cycles import enumerate_subcycles, arithmetic_genus

from test_graph import graphs

nd_graphs = graphs(max_n=4, weights=(-5, -2)).filter(lambda g: is_negative_definite(intersection_matrix(g)))


def test_backend_flag():
    assert kernels.BACKEND in {"numba", "numpy"}
    if kernels.JIT_DISABLED:
        assert kernels.BACKEND == "numpy"


@settings(max_examples=80, deadline=None)
@given(nd_graphs)
def test_laufer_variants_agree(g):
    m = intersection_matrix(g).to_numpy()
    expected = fundamental_cycle(g).coefficients
    for fn in (kernels.laufer_numba, kernels.laufer_numpy):
        assert tuple(int(x) for x in fn(m, 10_000)) == expected


def test_laufer_step_limit():
    m = np.array([[-2, 2], [2, -2]], dtype=np.int64)
    for fn in (kernels.laufer_numba, kernels.laufer_numpy):
        # semi-definite: (1,1) is already anti-nef, so the loop stops at once
        assert fn(m, 5).tolist() == [1, 1]
    m = np.array([[1]], dtype=np.int64)
    for fn in (kernels.laufer_numba, kernels.laufer_numpy):
        assert fn(m, 5).size == 0


@settings(max_examples=60, deadline=None)
@given(nd_graphs)
def test_antinef_variants_agree(g):
    m = intersection_matrix(g).to_numpy()
    a = kernels.antinef_minimum_numba(m, 5)
    b = kernels.antinef_minimum_numpy(m, 5)
    assert a[0].tolist() == b[0].tolist()
    assert a[1:] == b[1:]


def test_antinef_none_in_box():
    for fn in (kernels.antinef_minimum_numba, kernels.antinef_minimum_numpy):
        best, count, _ = fn(np.array([[1]], dtype=np.int64), 4)
        assert best.size == 0 and count == 0


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=4, weights=(-4, -1)))
def test_genus_scan_matches_python(g):
    m = intersection_matrix(g).to_numpy()
    k = np.array(canonical_degrees(g), dtype=np.int64)
    z = np.array([2] * g.n, dtype=np.int64)
    expected = next(
        (d.coefficients for d in enumerate_subcycles(tuple(z)) if arithmetic_genus(d, g) >= 1), None
    )
    for fn in (kernels.first_nonnegative_genus_numba, kernels.first_nonnegative_genus_numpy):
        hit = fn(m, k, z)
        got = tuple(int(x) for x in hit) if hit.size else None
        assert got == expected


def test_genus_scan_chunk_boundary():
    m = np.array([[-2, 1], [1, -2]], dtype=np.int64)
    k = np.zeros(2, dtype=np.int64)
    z = np.array([40, 40], dtype=np.int64)
    assert kernels.first_nonnegative_genus_numpy(m, k, z, chunk=7).size == 0


def test_fits_int64():
    m = np.array([[-2]], dtype=np.int64)
    assert kernels.fits_int64(m, np.zeros(1, dtype=np.int64), 1000)
    assert not kernels.fits_int64(np.array([[-(2**40)]], dtype=np.int64), np.zeros(1, dtype=np.int64), 2**12)


@settings(max_examples=80, deadline=None)
@given(nd_graphs, st.data())
def test_genus_scan_variants_agree_on_uneven_boxes(g, data):
    m = intersection_matrix(g).to_numpy()
    k = np.array(canonical_degrees(g), dtype=np.int64)
    z = np.array(data.draw(st.lists(st.integers(1, 4), min_size=g.n, max_size=g.n)), dtype=np.int64)
    a = kernels.first_nonnegative_genus_numba(m, k, z)
    b = kernels.first_nonnegative_genus_numpy(m, k, z)
    assert a.tolist() == b.tolist()
