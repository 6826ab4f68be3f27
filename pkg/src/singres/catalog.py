"""Named example graphs: ADE trees, the cusp triangle and simple elliptic SE(d)."""
from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import DualGraph


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: DualGraph
    notes: str


def a_n(n: int) -> DualGraph:
    return DualGraph.from_lists([-2] * n, [(i, i + 1) for i in range(n - 1)])


def d_n(n: int) -> DualGraph:
    """D_n with the branch vertex first: 0 is joined to leaves 1, 2 and the tail 3..n-1."""
    if n < 4:
        raise ValueError("D_n needs n >= 4")
    edges = [(0, 1), (0, 2), (0, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    return DualGraph.from_lists([-2] * n, edges)


def e_n(n: int) -> DualGraph:
    """E_6, E_7, E_8: arms of length 1, 2 and n-4 at the branch vertex 0."""
    if n not in (6, 7, 8):
        raise ValueError("E_n exists for n = 6, 7, 8")
    edges = [(0, 1), (0, 2), (2, 3), (0, 4)] + [(i, i + 1) for i in range(4, n - 1)]
    return DualGraph.from_lists([-2] * n, edges)


def cusp3() -> DualGraph:
    return DualGraph.from_lists([-3, -3, -3], [(0, 1), (1, 2), (0, 2)])


def simple_elliptic(d: int) -> DualGraph:
    return DualGraph.from_lists([d], [], [1])


_FIXED = {
    **{f"A{n}": (lambda n=n: a_n(n), f"A_{n} chain of (-2)-curves") for n in range(1, 9)},
    **{f"D{n}": (lambda n=n: d_n(n), f"D_{n} tree of (-2)-curves") for n in range(4, 9)},
    **{f"E{n}": (lambda n=n: e_n(n), f"E_{n} tree of (-2)-curves") for n in (6, 7, 8)},
    "cusp3": (cusp3, "triangle of rational (-3)-curves, a cusp singularity"),
}

_SE = re.compile(r"^se\(\s*(-\d+)\s*\)$")


def lookup(name: str) -> CatalogEntry:
    """Case-insensitive lookup; ``SE(d)`` takes a negative integer."""
    key = name.strip()
    m = _SE.match(key.lower())
    if m:
        d = int(m.group(1))
        if d >= 0:
            raise KeyError(name)
        return CatalogEntry(f"SE({d})", simple_elliptic(d), f"simple elliptic, elliptic curve with E^2 = {d}")
    for cname, (build, notes) in _FIXED.items():
        if cname.lower() == key.lower():
            return CatalogEntry(cname, build(), notes)
    raise KeyError(name)


def entries(se_range: range = range(-1, -13, -1)) -> list[CatalogEntry]:
    out = [CatalogEntry(name, build(), notes) for name, (build, notes) in _FIXED.items()]
    out.extend(lookup(f"SE({d})") for d in se_range)
    return out
