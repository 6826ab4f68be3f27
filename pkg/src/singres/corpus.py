"""Enumeration of small weighted dual graphs for exhaustive checks."""
from __future__ import annotations

from itertools import combinations, combinations_with_replacement, product
from typing import Iterator, Sequence

from .errors import ValidationError
from .graph import DualGraph, intersection_matrix, is_negative_definite


def small_graphs(
    max_vertices: int = 4,
    weights: Sequence[int] = (-5, -4, -3, -2),
    genera: Sequence[int] = (0, 1),
    max_multiplicity: int = 2,
    negative_definite: bool = True,
) -> Iterator[DualGraph]:
    """Yield connected graphs covering every isomorphism class at least once.

    Vertex decorations are listed in non-decreasing order, which every class
    admits after a permutation; edge multiplicities range freely.  Some
    classes therefore appear more than once.
    """
    decorations = sorted(product(weights, genera))
    for n in range(1, max_vertices + 1):
        pairs = list(combinations(range(n), 2))
        for decor in combinations_with_replacement(decorations, n):
            ws = [w for w, _ in decor]
            gs = [g for _, g in decor]
            for mults in product(range(max_multiplicity + 1), repeat=len(pairs)):
                edges = [p for p, k in zip(pairs, mults) for _ in range(k)]
                try:
                    g = DualGraph.from_lists(ws, edges, gs)
                except ValidationError:
                    continue
                if negative_definite and not is_negative_definite(intersection_matrix(g)):
                    continue
                yield g
