"""Hot integer kernels with a numba path and a pure-numpy fallback.

All kernels work on ``int64`` arrays.  Callers are responsible for keeping
values small enough that no intermediate overflows (see :func:`fits_int64`);
the exact Python-int code paths elsewhere in the package are the reference.

Set ``SINGRES_DISABLE_JIT=1`` to force the numpy implementations.  Both
variants stay importable as ``*_numba`` / ``*_numpy`` so they can be
compared directly.
"""
from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

JIT_DISABLED = os.environ.get("SINGRES_DISABLE_JIT", "").strip().lower() in {"1", "true", "yes"}
BACKEND = "numpy" if (JIT_DISABLED or numba is None) else "numba"

_INT64_SAFE = 2**62


def _njit(fn):
    if numba is None:
        return fn
    return numba.njit(cache=True)(fn)


def fits_int64(m: np.ndarray, kdot: np.ndarray, bound: int) -> bool:
    """True when D.D + K.D cannot overflow for cycles with entries <= bound."""
    n = m.shape[0]
    mmax = int(np.abs(m).max()) if m.size else 0
    kmax = int(np.abs(kdot).max()) if kdot.size else 0
    return n * n * mmax * bound * bound + n * kmax * bound < _INT64_SAFE


# -- Laufer's computation sequence ------------------------------------------


@_njit
def laufer_numba(m, max_steps):
    n = m.shape[0]
    z = np.ones(n, dtype=np.int64)
    dots = np.zeros(n, dtype=np.int64)
    for i in range(n):
        s = 0
        for j in range(n):
            s += m[i, j]
        dots[i] = s
    steps = 0
    while steps < max_steps:
        pick = -1
        for i in range(n):
            if dots[i] > 0:
                pick = i
                break
        if pick < 0:
            return z
        z[pick] += 1
        for i in range(n):
            dots[i] += m[i, pick]
        steps += 1
    return np.zeros(0, dtype=np.int64)


def laufer_numpy(m, max_steps):
    m = np.asarray(m, dtype=np.int64)
    z = np.ones(m.shape[0], dtype=np.int64)
    dots = m @ z
    for _ in range(max_steps):
        hot = np.flatnonzero(dots > 0)
        if hot.size == 0:
            return z
        pick = hot[0]
        z[pick] += 1
        dots += m[:, pick]
    return np.zeros(0, dtype=np.int64)


# -- exhaustive minimal anti-nef search --------------------------------------


@_njit
def _antinef_pass(m, bound, best, check_below):
    """One odometer sweep over [0, bound]^n, first coordinate fastest.

    With ``check_below`` False, store a least-degree anti-nef cycle in
    ``best`` and return the number of anti-nef cycles.  Otherwise return 1
    if every anti-nef cycle dominates ``best`` and 0 as soon as one does not.
    """
    n = m.shape[0]
    z = np.zeros(n, dtype=np.int64)
    dots = np.zeros(n, dtype=np.int64)
    total = 0
    best_sum = -1
    count = 0
    while True:
        # advance the odometer, keeping dots = M z and total = sum(z)
        i = 0
        while i < n and z[i] == bound:
            for k in range(n):
                dots[k] -= bound * m[k, i]
            total -= bound
            z[i] = 0
            i += 1
        if i == n:
            break
        z[i] += 1
        total += 1
        for k in range(n):
            dots[k] += m[k, i]
        anti = True
        for k in range(n):
            if dots[k] > 0:
                anti = False
                break
        if not anti:
            continue
        if check_below:
            for k in range(n):
                if z[k] < best[k]:
                    return 0
        else:
            count += 1
            if best_sum < 0 or total < best_sum:
                best_sum = total
                for k in range(n):
                    best[k] = z[k]
    return 1 if check_below else count


@_njit
def antinef_minimum_numba(m, bound):
    """Scan every nonzero cycle in [0, bound]^n.

    Returns ``(candidate, count, unique)`` where ``candidate`` is an anti-nef
    cycle of least total degree (empty if none), ``count`` the number of
    anti-nef cycles seen and ``unique`` whether the candidate lies below
    every one of them.
    """
    best = np.zeros(m.shape[0], dtype=np.int64)
    count = _antinef_pass(m, bound, best, False)
    if count == 0:
        return np.zeros(0, dtype=np.int64), 0, False
    unique = _antinef_pass(m, bound, best, True) == 1
    return best, count, unique


def _box(n, bound):
    grids = np.indices((bound + 1,) * n, dtype=np.int64).reshape(n, -1).T
    # match the numba scan order: first coordinate varies fastest
    return grids[:, ::-1][1:]


def antinef_minimum_numpy(m, bound):
    m = np.asarray(m, dtype=np.int64)
    n = m.shape[0]
    cycles = _box(n, bound)
    anti = cycles[np.all(cycles @ m.T <= 0, axis=1)]
    if anti.shape[0] == 0:
        return np.zeros(0, dtype=np.int64), 0, False
    best = anti[np.argmin(anti.sum(axis=1))]
    unique = bool(np.all(anti >= best))
    return best.copy(), int(anti.shape[0]), unique


# -- subcycle genus scan -----------------------------------------------------


@_njit
def first_nonnegative_genus_numba(m, kdot, z):
    """Find some 0 < D < z with D.D + K.D >= 0, i.e. p_a(D) >= 1.

    Returns the first such D in mixed-radix order (first coordinate
    fastest), or an empty array.
    """
    n = m.shape[0]
    d = np.zeros(n, dtype=np.int64)
    md = np.zeros(n, dtype=np.int64)
    q = 0  # D.D + K.D, updated incrementally
    while True:
        i = 0
        while i < n and d[i] == z[i]:
            # drop z[i] E_i from D
            c = z[i]
            q -= 2 * c * md[i] - c * c * m[i, i] + c * kdot[i]
            for k in range(n):
                md[k] -= c * m[k, i]
            d[i] = 0
            i += 1
        if i == n:
            break
        q += 2 * md[i] + m[i, i] + kdot[i]
        for k in range(n):
            md[k] += m[k, i]
        d[i] += 1
        done = True
        for k in range(n):
            if d[k] != z[k]:
                done = False
                break
        if done:
            break
        if q >= 0:
            return d.copy()
    return np.zeros(0, dtype=np.int64)


def first_nonnegative_genus_numpy(m, kdot, z, chunk=1 << 16):
    m = np.asarray(m, dtype=np.int64)
    kdot = np.asarray(kdot, dtype=np.int64)
    z = np.asarray(z, dtype=np.int64)
    radix = z + 1
    total = int(np.prod(radix))
    place = np.concatenate(([1], np.cumprod(radix[:-1]))).astype(np.int64)
    for start in range(1, total - 1, chunk):
        idx = np.arange(start, min(start + chunk, total - 1), dtype=np.int64)
        ds = (idx[:, None] // place[None, :]) % radix[None, :]
        q = np.einsum("ki,ki->k", ds, ds @ m.T + kdot[None, :])
        hit = np.flatnonzero(q >= 0)
        if hit.size:
            return ds[hit[0]].copy()
    return np.zeros(0, dtype=np.int64)


if BACKEND == "numba":
    laufer = laufer_numba
    antinef_minimum = antinef_minimum_numba
    first_nonnegative_genus = first_nonnegative_genus_numba
else:
    laufer = laufer_numpy
    antinef_minimum = antinef_minimum_numpy
    first_nonnegative_genus = first_nonnegative_genus_numpy


def warmup() -> None:
    """Compile (or load from cache) every kernel of the active backend."""
    m = np.array([[-2, 1], [1, -2]], dtype=np.int64)
    k = np.zeros(2, dtype=np.int64)
    laufer(m, 10)
    antinef_minimum(m, 1)
    first_nonnegative_genus(m, k, np.array([1, 1], dtype=np.int64))
