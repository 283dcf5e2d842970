"""Rooted hypergraphs, their bipartite incidence graphs, and degree counts.

Vertices are arbitrary hashable labels (strings when read from JSON).  The
edge list is a multiset: the same vertex set may appear several times and
each occurrence is a separate edge.  Nonsink vertices are indexed in input
order with the sink removed, and every configuration vector in the package
uses that order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

Label = Hashable


class HypergraphError(ValueError):
    """Base class for invalid hypergraph input."""


class DuplicateVertexError(HypergraphError):
    pass


class EdgeSizeError(HypergraphError):
    pass


class DuplicateMemberError(HypergraphError):
    pass


class UnknownVertexError(HypergraphError):
    pass


class SinkError(HypergraphError):
    pass


class DisconnectedError(HypergraphError):
    pass


class SizeGuardError(ValueError):
    """An exhaustive enumeration was asked to run on an instance above its guard."""


class DocumentError(HypergraphError):
    """The JSON document does not have the expected shape."""


@dataclass(frozen=True, order=True)
class EdgeNode:
    """Left-hand node of the incidence graph standing for one edge occurrence."""

    index: int

    def __str__(self) -> str:
        return f"e{self.index + 1}"

    def __repr__(self) -> str:
        return f"EdgeNode({self.index})"


@dataclass(frozen=True)
class RootedHypergraph:
    vertices: tuple
    edges: tuple
    sink: Label

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        self._validate()

    def _validate(self):
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise DuplicateVertexError(f"duplicate vertex label {v!r}")
            seen.add(v)
        if self.sink not in seen:
            raise SinkError(f"sink {self.sink!r} is not a vertex")
        for k, e in enumerate(self.edges):
            if len(set(e)) != len(e):
                raise DuplicateMemberError(f"edge {k} repeats a vertex: {list(e)!r}")
            if len(e) < 2:
                raise EdgeSizeError(f"edge {k} has {len(e)} member(s); at least 2 required")
            for v in e:
                if v not in seen:
                    raise UnknownVertexError(f"edge {k} mentions unknown vertex {v!r}")
        if not self.is_connected():
            raise DisconnectedError("hypergraph is not connected")

    def is_connected(self) -> bool:
        if len(self.vertices) <= 1:
            return True
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            r = find(e[0])
            for v in e[1:]:
                parent[find(v)] = r
        roots = {find(v) for v in self.vertices}
        return len(roots) == 1

    @cached_property
    def nonsink(self) -> tuple:
        return tuple(v for v in self.vertices if v != self.sink)

    @property
    def n(self) -> int:
        return len(self.nonsink)

    @cached_property
    def index(self) -> dict:
        """Nonsink label -> position in configuration vectors."""
        return {v: i for i, v in enumerate(self.nonsink)}

    @cached_property
    def edge_sets(self) -> tuple:
        return tuple(frozenset(e) for e in self.edges)

    @cached_property
    def incident(self) -> dict:
        """Label -> tuple of indices of edges containing it."""
        inc = {v: [] for v in self.vertices}
        for k, e in enumerate(self.edges):
            for v in e:
                inc[v].append(k)
        return {v: tuple(ks) for v, ks in inc.items()}

    @cached_property
    def edge_masks(self) -> tuple:
        """Per edge: (bitmask of nonsink members, whether the sink is a member)."""
        out = []
        for e in self.edges:
            mask = 0
            for v in e:
                if v != self.sink:
                    mask |= 1 << self.index[v]
            out.append((mask, self.sink in e))
        return tuple(out)

    def degrees(self) -> tuple:
        return tuple(len(self.incident[v]) for v in self.nonsink)

    def mask_of(self, T: Iterable[Label]) -> int:
        mask = 0
        for v in T:
            if v not in self.index:
                if v == self.sink:
                    raise SinkError("vertex sets may not contain the sink")
                raise UnknownVertexError(f"unknown vertex {v!r}")
            mask |= 1 << self.index[v]
        return mask

    def labels_of(self, mask: int) -> frozenset:
        return frozenset(v for i, v in enumerate(self.nonsink) if mask >> i & 1)

    def is_star(self) -> bool:
        return all(self.sink in e for e in self.edges)


def from_edges(edges: Iterable[Iterable[Label]], sink: Label, vertices: Sequence[Label] | None = None) -> RootedHypergraph:
    """Build a hypergraph; vertices default to first-appearance order in `edges`."""
    edges = [tuple(e) for e in edges]
    if vertices is None:
        order = {}
        for e in edges:
            for v in e:
                order.setdefault(v, None)
        order.setdefault(sink, None)
        vertices = list(order)
    return RootedHypergraph(tuple(vertices), tuple(edges), sink)


def parse_hypergraph(document) -> RootedHypergraph:
    """Validate a JSON document (string or already-decoded dict)."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not valid JSON: {exc}") from None
    if not isinstance(document, dict):
        raise DocumentError("document must be a JSON object")
    for key in ("vertices", "edges", "sink"):
        if key not in document:
            raise DocumentError(f"missing field {key!r}")
    vertices, edges, sink = document["vertices"], document["edges"], document["sink"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise DocumentError("'vertices' must be an array of strings")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and all(isinstance(v, str) for v in e) for e in edges
    ):
        raise DocumentError("'edges' must be an array of arrays of strings")
    if not isinstance(sink, str):
        raise DocumentError("'sink' must be a string")
    return RootedHypergraph(tuple(vertices), tuple(tuple(e) for e in edges), sink)


def to_document(H: RootedHypergraph) -> dict:
    return {
        "vertices": list(H.vertices),
        "edges": [list(e) for e in H.edges],
        "sink": H.sink,
    }


def serialize_hypergraph(H: RootedHypergraph) -> str:
    return json.dumps(to_document(H))


def load_hypergraph(path) -> RootedHypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_hypergraph(fh.read())


@dataclass(frozen=True)
class BipartiteIncidence:
    """Incidence graph B(H): edge-nodes on the left, vertices on the right."""

    left: tuple
    right: tuple
    adjacency: tuple
    sink: Label
    neighbors: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs = {x: [] for x in self.left + self.right}
        for e, v in self.adjacency:
            nbrs[e].append(v)
            nbrs[v].append(e)
        object.__setattr__(self, "neighbors", {x: tuple(ys) for x, ys in nbrs.items()})

    @property
    def nodes(self) -> tuple:
        return self.left + self.right

    @cached_property
    def adjacency_set(self) -> frozenset:
        return frozenset(self.adjacency)

    def degree(self, node) -> int:
        return len(self.neighbors[node])


def bipartite_incidence(H: RootedHypergraph) -> BipartiteIncidence:
    cached = H.__dict__.get("_incidence")
    if cached is None:
        cached = _build_incidence(H)
        H.__dict__["_incidence"] = cached
    return cached


def _build_incidence(H):
    left = tuple(EdgeNode(k) for k in range(len(H.edges)))
    adjacency = tuple((EdgeNode(k), v) for k, e in enumerate(H.edges) for v in e)
    return BipartiteIncidence(left, H.vertices, adjacency, H.sink)


def degree(H: RootedHypergraph, v: Label) -> int:
    if v not in H.incident:
        raise UnknownVertexError(f"unknown vertex {v!r}")
    return len(H.incident[v])


def degree_in_set(H: RootedHypergraph, T: Iterable[Label], v: Label) -> int:
    """Number of edges containing `v` that are not contained in `T`."""
    T = frozenset(T)
    if v not in T:
        raise ValueError(f"{v!r} is not in the vertex set")
    H.mask_of(T)
    return sum(1 for k in H.incident[v] if not H.edge_sets[k] <= T)


def set_degrees(H: RootedHypergraph, mask: int) -> list:
    """deg_T(i) for every nonsink index i (meaningful for i in T), T given as a bitmask."""
    out = [0] * H.n
    for emask, has_sink in H.edge_masks:
        if not has_sink and emask & ~mask == 0:
            continue
        m = emask & mask
        while m:
            low = m & -m
            out[low.bit_length() - 1] += 1
            m ^= low
    return out


def check_config(H: RootedHypergraph, c: Sequence[int]) -> tuple:
    c = tuple(int(x) for x in c)
    if len(c) != H.n:
        raise ValueError(f"configuration has length {len(c)}, expected {H.n}")
    if any(x < 0 for x in c):
        raise ValueError("configuration entries must be nonnegative")
    return c
