"""Spanning trees of B(H), burning equivalence, and the parking/tree bijection.

A spanning tree of a hypergraph is a burning-equivalence class of spanning
trees of its incidence graph B(H): two trees are equivalent when, oriented
toward the sink, they use the same vertex -> edge arcs.  The bijection with
parking functions uses the Chebikin-Pylyavskyy construction on B(H) with the
breadth-first tree order determined by a total order `beta` on the nodes.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .core import (
    BipartiteIncidence,
    EdgeNode,
    RootedHypergraph,
    SizeGuardError,
    bipartite_incidence,
    check_config,
)
from .parking import burn, lifted_chips


class NotParkingError(ValueError):
    pass


class TreeError(ValueError):
    pass


@dataclass(frozen=True)
class BTree:
    """Spanning tree of B(H), rooted at the sink.

    `edges` holds incidence pairs (EdgeNode, vertex).  `parent` and `height`
    are derived by walking the tree from the sink.
    """

    edges: frozenset
    sink: object
    parent: dict = field(compare=False, repr=False, default=None)
    height: dict = field(compare=False, repr=False, default=None)

    @classmethod
    def from_edges(cls, B: BipartiteIncidence, edges) -> "BTree":
        edges = frozenset(edges)
        adj = defaultdict(list)
        for e, v in edges:
            if (e, v) not in B.adjacency_set:
                raise TreeError(f"{e}-{v} is not an edge of the incidence graph")
            adj[e].append(v)
            adj[v].append(e)
        if len(edges) != len(B.nodes) - 1:
            raise TreeError(f"a spanning tree needs {len(B.nodes) - 1} edges, got {len(edges)}")
        parent = {B.sink: None}
        height = {B.sink: 0}
        stack = [B.sink]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in parent:
                    parent[y] = x
                    height[y] = height[x] + 1
                    stack.append(y)
        if len(parent) != len(B.nodes):
            raise TreeError("edge set does not span the incidence graph")
        return cls(edges, B.sink, parent, height)

    def degree(self, node) -> int:
        return sum(1 for e, v in self.edges if node == e or node == v)


@dataclass(frozen=True)
class TreeClass:
    """Burning-equivalence class, identified by its (vertex, edge index) arcs."""

    lr: tuple

    def pairs(self) -> frozenset:
        return frozenset(self.lr)

    def sort_key(self) -> tuple:
        return tuple((str(v), k) for v, k in self.lr)

    def to_json(self) -> dict:
        return {"lr": [[str(v), str(EdgeNode(k))] for v, k in self.lr]}


class LiftedConfig(NamedTuple):
    """Chip counts on the nonsink nodes of B(H)."""

    vertices: tuple
    edges: tuple


def _check_size(B, max_size):
    if max_size is not None and len(B.nodes) > max_size:
        raise SizeGuardError(
            f"incidence graph has {len(B.nodes)} nodes, above the guard of {max_size} "
            "(raise max_size to override)"
        )


def all_spanning_trees(B: BipartiteIncidence, max_size: int | None = 14):
    """Yield every spanning tree of B once, by deletion/contraction on the edge list."""
    _check_size(B, max_size)
    nodes = B.nodes
    edges = list(B.adjacency)
    pos = {x: i for i, x in enumerate(nodes)}
    need = len(nodes) - 1

    def connected_with(chosen, rest):
        parent = list(range(len(nodes)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        comps = len(nodes)
        for e, v in list(chosen) + rest:
            a, b = find(pos[e]), find(pos[v])
            if a != b:
                parent[a] = b
                comps -= 1
        return comps == 1

    def rec(i, chosen, comp):
        if len(chosen) == need:
            yield BTree.from_edges(B, chosen)
            return
        if i == len(edges) or len(chosen) + len(edges) - i < need:
            return
        e, v = edges[i]
        a, b = comp[pos[e]], comp[pos[v]]
        if a != b:
            merged = [a if x == b else x for x in comp]
            yield from rec(i + 1, chosen + [(e, v)], merged)
            # deleting an edge is only fruitful if the rest still connects everything
            if connected_with(chosen, edges[i + 1:]):
                yield from rec(i + 1, chosen, comp)
        else:
            yield from rec(i + 1, chosen, comp)

    if len(nodes) == 1:
        yield BTree.from_edges(B, ())
        return
    yield from rec(0, [], list(range(len(nodes))))


def spanning_tree_count(B: BipartiteIncidence) -> int:
    """Kirchhoff count of spanning trees of B (no enumeration)."""
    from .digraphs import incidence_digraph, laplacian_determinant, reduced_laplacian

    return laplacian_determinant(reduced_laplacian(incidence_digraph(B)))


def tree_class_of(B: BipartiteIncidence, T: BTree) -> TreeClass:
    """Tree arcs that point from a vertex to an edge when oriented toward the sink."""
    order = {v: i for i, v in enumerate(B.right)}
    lr = []
    for v in B.right:
        if v == B.sink:
            continue
        p = T.parent[v]
        lr.append((v, p.index))
    lr.sort(key=lambda pair: (order[pair[0]], pair[1]))
    return TreeClass(tuple(lr))


def group_tree_classes(H: RootedHypergraph, max_size: int | None = 14) -> dict:
    """TreeClass -> list of member spanning trees of B(H)."""
    B = bipartite_incidence(H)
    groups = defaultdict(list)
    for T in all_spanning_trees(B, max_size):
        groups[tree_class_of(B, T)].append(T)
    return dict(groups)


def tree_classes(H: RootedHypergraph, max_size: int | None = 14) -> list:
    return sorted(group_tree_classes(H, max_size), key=TreeClass.sort_key)


def default_beta(H: RootedHypergraph) -> tuple:
    """Sink first, then nonsink vertices, then edge-nodes, all in input order."""
    return (H.sink,) + H.nonsink + tuple(EdgeNode(k) for k in range(len(H.edges)))


def _beta_rank(H, beta):
    if beta is None:
        beta = default_beta(H)
    beta = tuple(beta)
    B_nodes = set(H.vertices) | {EdgeNode(k) for k in range(len(H.edges))}
    if len(beta) != len(B_nodes) or set(beta) != B_nodes:
        raise ValueError("beta must list every node of B(H) exactly once")
    return {x: i for i, x in enumerate(beta)}


def tree_to_parking(H: RootedHypergraph, T: BTree, beta: Sequence | None = None) -> LiftedConfig:
    """Forward Chebikin-Pylyavskyy map on B(H) with the breadth-first order.

    For each nonsink node j, count the neighbours of j that precede its tree
    parent in the order (height, beta).
    """
    rank = _beta_rank(H, beta)
    B = bipartite_incidence(H)

    def key(x):
        return (T.height[x], rank[x])

    def b(j):
        pk = key(T.parent[j])
        return sum(1 for y in B.neighbors[j] if key(y) < pk)

    return LiftedConfig(tuple(b(v) for v in H.nonsink), tuple(b(e) for e in B.left))


def _inverse_cp(B, chips, rank, batched):
    """Grow the tree from the sink; returns the parent map, or None if burning stalls."""
    parent = {B.sink: None}
    height = {B.sink: 0}
    remaining = [x for x in B.nodes if x != B.sink]
    while remaining:
        chosen = {}
        for j in remaining:
            inside = [y for y in B.neighbors[j] if y in parent]
            if len(inside) >= chips[j] + 1:
                inside.sort(key=lambda y: (height[y], rank[y]))
                chosen[j] = inside[chips[j]]
        if not chosen:
            return None
        first = min(chosen, key=lambda j: (height[chosen[j]] + 1, rank[j]))
        if batched:
            h = height[chosen[first]] + 1
            batch = [j for j in chosen if height[chosen[j]] + 1 == h]
        else:
            batch = [first]
        for j in batch:
            parent[j] = chosen[j]
            height[j] = height[chosen[j]] + 1
        remaining = [x for x in remaining if x not in parent]
    return parent


def inverse_bcp(H: RootedHypergraph, lifted: dict, beta: Sequence | None = None, batched: bool = False):
    """Tree for a configuration on all nonsink nodes of B(H), or None if not parking.

    `batched=False` adds one node per step (inverse BCP); `batched=True` adds
    every eligible node of the minimal height at once (the BBB variant).
    """
    rank = _beta_rank(H, beta)
    B = bipartite_incidence(H)
    parent = _inverse_cp(B, lifted, rank, batched)
    if parent is None:
        return None
    return BTree.from_edges(B, [_pair(x, p) for x, p in parent.items() if p is not None])


def _pair(x, y):
    return (x, y) if isinstance(x, EdgeNode) else (y, x)


def parking_to_tree(H: RootedHypergraph, c: Sequence[int], beta: Sequence | None = None):
    """Tree and class assigned to an H-parking function; checks BCP == BBB."""
    c = check_config(H, c)
    chips = lifted_chips(H, c)
    one = inverse_bcp(H, chips, beta, batched=False)
    if one is None:
        raise NotParkingError(f"{c} is not an H-parking function (burning stalls)")
    batch = inverse_bcp(H, chips, beta, batched=True)
    if batch is None or batch.edges != one.edges:
        raise AssertionError("batched and single-step tree constructions disagree")
    return one, tree_class_of(bipartite_incidence(H), one)


def burn_layers(H: RootedHypergraph, c: Sequence[int]) -> list:
    """Sets of B(H) nodes marked at each step of Dhar's algorithm on the lift of c."""
    c = check_config(H, c)
    B = bipartite_incidence(H)
    return [set(layer) for layer in burn(B.neighbors, lifted_chips(H, c), H.sink)]


def class_canonical_tree(H: RootedHypergraph, K: TreeClass, beta: Sequence | None = None) -> BTree:
    """Representative of K whose lifted parking function vanishes on edge-nodes.

    Layers alternate: edge-nodes adjacent to the previous vertex layer (each
    attached to its beta-smallest neighbour there), then the vertices whose
    class arc lands in that edge layer.
    """
    rank = _beta_rank(H, beta)
    B = bipartite_incidence(H)
    arc = {}
    for v, k in K.lr:
        if v in arc or v not in H.index:
            raise TreeError(f"class has a bad or repeated arc for vertex {v!r}")
        arc[v] = EdgeNode(k)
    if set(arc) != set(H.nonsink):
        raise TreeError("class does not assign an arc to every nonsink vertex")
    for v, e in arc.items():
        if v not in H.edge_sets[e.index]:
            raise TreeError(f"arc {v}-{e} is not an incidence")

    used = {B.sink}
    layer = [B.sink]
    edges = []
    while layer:
        edge_layer = {}
        for x in layer:
            for e in B.neighbors[x]:
                if e not in used and (e not in edge_layer or rank[x] < rank[edge_layer[e]]):
                    edge_layer[e] = x
        for e, x in edge_layer.items():
            used.add(e)
            edges.append((e, x))
        layer = [v for v, e in arc.items() if e in edge_layer and v not in used]
        for v in layer:
            used.add(v)
            edges.append((arc[v], v))
    if len(used) != len(B.nodes):
        raise TreeError("class is inconsistent: some nodes are unreachable")
    return BTree.from_edges(B, edges)


def hypertree_of(H: RootedHypergraph, T: BTree) -> tuple:
    """f(e) = deg_T(e) - 1, clipped at zero, per edge occurrence."""
    deg = [0] * len(H.edges)
    for e, _ in T.edges:
        deg[e.index] += 1
    return tuple(max(d - 1, 0) for d in deg)


def tree_to_dot(H: RootedHypergraph, T: BTree, name: str = "T") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for e in range(len(H.edges)):
        lines.append(f'  "{EdgeNode(e)}" [shape=box];')
    for x, p in T.parent.items():
        if p is not None:
            lines.append(f'  "{x}" -> "{p}";')
    lines.append("}")
    return "\n".join(lines)
