"""Small named hypergraphs used throughout the tests and demos."""

from __future__ import annotations

from itertools import combinations

from .core import RootedHypergraph, from_edges


def running_example() -> RootedHypergraph:
    """Three triangles on four vertices, sink 4; edges e1=123, e2=124, e3=134."""
    return RootedHypergraph(("1", "2", "3", "4"), (("1", "2", "3"), ("1", "2", "4"), ("1", "3", "4")), "4")


def star_example() -> RootedHypergraph:
    """Star hypergraph with edges 123q, 12q, 13q."""
    return RootedHypergraph(
        ("1", "2", "3", "q"), (("1", "2", "3", "q"), ("1", "2", "q"), ("1", "3", "q")), "q"
    )


def single_edge() -> RootedHypergraph:
    return RootedHypergraph(("1", "2"), (("1", "2"),), "2")


def complete_hypergraph(num_vertices: int, d: int, sink: int | None = None) -> RootedHypergraph:
    """All d-subsets of {1..num_vertices}; the sink defaults to the last vertex."""
    labels = [str(i) for i in range(1, num_vertices + 1)]
    sink = labels[-1] if sink is None else str(sink)
    return RootedHypergraph(tuple(labels), tuple(combinations(labels, d)), sink)


def graph(edges, sink) -> RootedHypergraph:
    """A 2-regular hypergraph, i.e. an ordinary multigraph."""
    edges = [tuple(e) for e in edges]
    if any(len(e) != 2 for e in edges):
        raise ValueError("graph edges must have exactly two endpoints")
    return from_edges(edges, sink)
