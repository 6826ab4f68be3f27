"""Weighted dual graphs of resolutions and their intersection matrices.

A dual graph has one vertex per exceptional curve, carrying its
self-intersection (``weight``) and genus, and one edge per intersection
point between two distinct curves.  Repeated edges encode intersection
multiplicity.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphSyntaxError, ValidationError
from .exact import is_negative_definite_matrix, leading_minors


@dataclass(frozen=True)
class Vertex:
    id: int
    weight: int
    genus: int = 0


@dataclass(frozen=True)
class DualGraph:
    """Validated snc dual graph.

    ``edges`` is stored as a sorted tuple of ``(i, j)`` pairs with ``i < j``;
    a pair appearing twice is a double edge.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if not vertices:
            raise ValidationError("empty graph")
        ids = [v.id for v in vertices]
        if len(set(ids)) != len(ids):
            raise ValidationError("duplicate id")
        if sorted(ids) != list(range(len(ids))):
            raise ValidationError("vertex ids must be 0..n-1")
        vertices = tuple(sorted(vertices, key=lambda v: v.id))
        for v in vertices:
            if v.genus < 0:
                raise ValidationError(f"negative genus at vertex {v.id}")
        n = len(vertices)
        edges = []
        for i, j in self.edges:
            i, j = int(i), int(j)
            if i == j:
                raise ValidationError("self-loop")
            if not (0 <= i < n and 0 <= j < n):
                raise ValidationError(f"edge ({i}, {j}) references an unknown vertex")
            edges.append((min(i, j), max(i, j)))
        edges.sort()
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(edges))
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != n:
                raise ValidationError("label count does not match vertex count")
            object.__setattr__(self, "labels", labels)
        if not _connected(n, edges):
            raise ValidationError("disconnected graph")

    @classmethod
    def from_lists(
        cls,
        weights: Sequence[int],
        edges: Iterable[tuple[int, int]] = (),
        genera: Sequence[int] | None = None,
    ) -> "DualGraph":
        genera = genera if genera is not None else [0] * len(weights)
        if len(genera) != len(weights):
            raise ValidationError("weights and genera differ in length")
        verts = tuple(Vertex(i, int(w), int(g)) for i, (w, g) in enumerate(zip(weights, genera)))
        return cls(verts, tuple(edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(v.weight for v in self.vertices)

    @property
    def genera(self) -> tuple[int, ...]:
        return tuple(v.genus for v in self.vertices)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def relabel(self, perm: Sequence[int]) -> "DualGraph":
        """Return the isomorphic graph where old vertex ``i`` becomes ``perm[i]``."""
        verts = tuple(Vertex(perm[v.id], v.weight, v.genus) for v in self.vertices)
        return DualGraph(verts, tuple((perm[i], perm[j]) for i, j in self.edges))

    def to_document(self) -> dict:
        return {
            "vertices": [
                {"label": self.label(v.id), "weight": v.weight, "genus": v.genus}
                for v in self.vertices
            ],
            "edges": [[self.label(i), self.label(j)] for i, j in self.edges],
        }


def _connected(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    adj: list[set[int]] = [set() for _ in range(n)]
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == n


@dataclass(frozen=True)
class IntersectionMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.n, self.n)


@dataclass(frozen=True)
class MinimalityWarning:
    vertex: int
    label: str
    message: str

    def to_dict(self) -> dict:
        return {"vertex": self.label, "message": self.message}


def intersection_matrix(g: DualGraph) -> IntersectionMatrix:
    n = g.n
    m = [[0] * n for _ in range(n)]
    for v in g.vertices:
        m[v.id][v.id] = v.weight
    for (i, j), mult in Counter(g.edges).items():
        m[i][j] += mult
        m[j][i] += mult
    return IntersectionMatrix(tuple(tuple(r) for r in m))


def is_negative_definite(m: IntersectionMatrix | Sequence[Sequence[int]]) -> bool:
    rows = m.entries if isinstance(m, IntersectionMatrix) else m
    return is_negative_definite_matrix(rows)


def determinant_minors(m: IntersectionMatrix) -> list[int]:
    return leading_minors(m.entries)


def graph_first_betti(g: DualGraph) -> int:
    """Cycle rank of the (connected) dual graph."""
    return len(g.edges) - g.n + 1


def minimality_warnings(g: DualGraph) -> list[MinimalityWarning]:
    return [
        MinimalityWarning(
            v.id,
            g.label(v.id),
            f"vertex {g.label(v.id)} is a rational (-1)-curve; the resolution may not be minimal",
        )
        for v in g.vertices
        if v.genus == 0 and v.weight == -1
    ]


# -- graph documents ---------------------------------------------------------


def graph_from_document(doc: object) -> DualGraph:
    """Build a graph from the decoded JSON document.

    User labels are mapped to dense ids in sorted label order.
    """
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise GraphSyntaxError("document must be an object with a 'vertices' list")
    raw_vertices = doc["vertices"]
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_vertices, list) or not isinstance(raw_edges, list):
        raise GraphSyntaxError("'vertices' and 'edges' must be lists")
    records = {}
    for rec in raw_vertices:
        if not isinstance(rec, dict):
            raise GraphSyntaxError("vertex records must be objects")
        try:
            label = str(rec["label"])
            weight = rec["weight"]
            genus = rec.get("genus", 0)
        except KeyError as exc:
            raise GraphSyntaxError(f"vertex record missing field {exc}") from None
        if isinstance(weight, bool) or not isinstance(weight, int):
            raise GraphSyntaxError(f"weight of {label!r} must be an integer")
        if isinstance(genus, bool) or not isinstance(genus, int):
            raise GraphSyntaxError(f"genus of {label!r} must be an integer")
        if label in records:
            raise ValidationError("duplicate id")
        records[label] = (weight, genus)
    labels = sorted(records)
    index = {lab: i for i, lab in enumerate(labels)}
    edges = []
    for e in raw_edges:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise GraphSyntaxError("edges must be two-element lists")
        a, b = str(e[0]), str(e[1])
        if a not in index or b not in index:
            raise ValidationError(f"edge [{a}, {b}] references an unknown vertex")
        edges.append((index[a], index[b]))
    verts = tuple(Vertex(index[lab], *records[lab]) for lab in labels)
    return DualGraph(verts, tuple(edges), labels=tuple(labels))


def parse_graph(text: str) -> DualGraph:
    """Parse a JSON graph document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphSyntaxError(f"invalid JSON: {exc}") from None
    return graph_from_document(doc)


def parse_inline(text: str) -> DualGraph:
    """Parse the terse ``w:g,w:g,...;i-j,i-j,...`` form.

    Vertices are numbered by position from 0.  The genus part may be
    omitted (``-2,-2;0-1``).  Repeating an edge gives a multiple edge.
    """
    text = text.strip()
    node_part, _, edge_part = text.partition(";")
    if not node_part.strip():
        raise ValidationError("empty graph")
    weights, genera = [], []
    try:
        for tok in node_part.split(","):
            w, _, g = tok.strip().partition(":")
            weights.append(int(w))
            genera.append(int(g) if g else 0)
        edges = []
        for tok in edge_part.split(","):
            tok = tok.strip()
            if not tok:
                continue
            a, sep, b = tok.partition("-")
            if not sep:
                raise ValueError(tok)
            edges.append((int(a), int(b)))
    except ValueError as exc:
        raise GraphSyntaxError(f"bad inline graph token: {exc}") from None
    return DualGraph.from_lists(weights, edges, genera)
