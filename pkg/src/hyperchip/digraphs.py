"""Chip-firing on digraphs and the digraphs a hypergraph induces.

Covers reduced Laplacians and G-parking functions of multi-digraphs, the
digraph D_C(H) attached to a cycling C (a cyclic order on every edge), the
union of parking sets over vertex-induced cyclings, and the digraph of a star
hypergraph whose Laplacian determinant counts its parking functions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterable, Sequence

from .core import BipartiteIncidence, EdgeNode, RootedHypergraph, SizeGuardError


class DigraphError(ValueError):
    pass


@dataclass(frozen=True)
class Digraph:
    """Directed multigraph; `arcs` is a tuple of ((tail, head), multiplicity)."""

    vertices: tuple
    arcs: tuple
    sink: object

    @classmethod
    def from_arcs(cls, vertices: Sequence, arcs: Iterable, sink) -> "Digraph":
        vertices = tuple(vertices)
        known = set(vertices)
        if sink not in known:
            raise DigraphError(f"sink {sink!r} is not a vertex")
        mult = {}
        for u, v in arcs:
            if u == v:
                raise DigraphError(f"loop at {u!r}")
            if u not in known or v not in known:
                raise DigraphError(f"arc {u!r}->{v!r} leaves the vertex set")
            mult[(u, v)] = mult.get((u, v), 0) + 1
        return cls(vertices, tuple(mult.items()), sink)

    @property
    def nonsink(self) -> tuple:
        return tuple(v for v in self.vertices if v != self.sink)

    def multiplicity(self, u, v) -> int:
        return dict(self.arcs).get((u, v), 0)

    def outdeg(self, v) -> int:
        return sum(m for (a, _), m in self.arcs if a == v)

    def indeg(self, v) -> int:
        return sum(m for (_, b), m in self.arcs if b == v)

    def successors(self) -> dict:
        succ = {v: [] for v in self.vertices}
        for (u, v), m in self.arcs:
            succ[u].extend([v] * m)
        return succ

    def to_json(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "sink": str(self.sink),
            "arcs": [[str(u), str(v), m] for (u, v), m in self.arcs],
        }

    def to_dot(self, name: str = "D") -> str:
        lines = [f"digraph {name} {{"]
        for (u, v), m in self.arcs:
            label = f' [label="{m}"]' if m > 1 else ""
            lines.append(f'  "{u}" -> "{v}"{label};')
        lines.append("}")
        return "\n".join(lines)


def reduced_laplacian(D: Digraph) -> tuple:
    """Outdegree on the diagonal, minus arc multiplicities off it; sink removed."""
    idx = {v: i for i, v in enumerate(D.nonsink)}
    n = len(idx)
    L = [[0] * n for _ in range(n)]
    for (u, v), m in D.arcs:
        if u == D.sink:
            continue
        L[idx[u]][idx[u]] += m
        if v != D.sink:
            L[idx[u]][idx[v]] -= m
    return tuple(tuple(row) for row in L)


def matrix_to_json(L) -> list:
    return [[str(x) for x in row] for row in L]


def laplacian_determinant(L) -> int:
    """Exact determinant of an integer matrix by Bareiss fraction-free elimination."""
    A = [list(map(int, row)) for row in L]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _out_to_outside(D: Digraph):
    idx = {v: i for i, v in enumerate(D.nonsink)}
    out = [[] for _ in idx]
    for (u, v), m in D.arcs:
        if u != D.sink:
            out[idx[u]].append((None if v == D.sink else idx[v], m))
    return out


def is_digraph_parking(D: Digraph, b: Sequence[int]) -> bool:
    """Postnikov-Shapiro test by greedy burning.

    Repeatedly discard a vertex with more out-arcs leaving the surviving set
    than chips; b is parking iff every vertex gets discarded.
    """
    out = _out_to_outside(D)
    alive = set(range(len(out)))
    if len(b) != len(out):
        raise ValueError(f"configuration has length {len(b)}, expected {len(out)}")
    progress = True
    while alive and progress:
        progress = False
        for j in sorted(alive):
            leaving = sum(m for t, m in out[j] if t is None or t not in alive)
            if leaving > b[j]:
                alive.discard(j)
                progress = True
    return not alive


def is_digraph_parking_bruteforce(D: Digraph, b: Sequence[int]) -> bool:
    """Check every nonempty S directly: some j in S has more arcs leaving S than b_j."""
    out = _out_to_outside(D)
    n = len(out)
    for mask in range(1, 1 << n):
        if not any(
            mask >> j & 1 and sum(m for t, m in out[j] if t is None or not mask >> t & 1) > b[j]
            for j in range(n)
        ):
            return False
    return True


def is_superstable_digraph(D: Digraph, c: Sequence[int]) -> bool:
    """No nonempty S is ready to fire, i.e. c - L 1_S always has a negative entry.

    Firing subtracts columns of the reduced Laplacian.  Sending chips along
    out-arcs instead (c - L^T 1_S) is a different rule that can disagree with
    the parking test even on Eulerian digraphs.
    """
    L = reduced_laplacian(D)
    n = len(L)
    if len(c) != n:
        raise ValueError(f"configuration has length {len(c)}, expected {n}")
    for mask in range(1, 1 << n):
        if all(c[j] - sum(L[j][i] for i in range(n) if mask >> i & 1) >= 0 for j in range(n)):
            return False
    return True


def digraph_parking_enumerate(D: Digraph, max_box: int | None = 10**6) -> list:
    """All G-parking functions of D, scanning the box prod [0, outdeg-1]."""
    bounds = [D.outdeg(v) for v in D.nonsink]
    size = 1
    for x in bounds:
        size *= x
    if max_box is not None and size > max_box:
        raise SizeGuardError(f"box has {size} points, above the guard of {max_box}")
    return [b for b in product(*(range(x) for x in bounds)) if is_digraph_parking(D, b)]


def is_eulerian(D: Digraph) -> bool:
    if any(D.indeg(v) != D.outdeg(v) for v in D.vertices):
        return False
    succ = D.successors()
    pred = {v: [] for v in D.vertices}
    for u, vs in succ.items():
        for v in vs:
            pred[v].append(u)

    def reach(adj):
        start = D.vertices[0]
        seen = {start}
        stack = [start]
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(D.vertices)

    return reach(succ) and reach(pred)


def symmetric_digraph(H: RootedHypergraph) -> Digraph:
    """Both orientations of every edge of a 2-regular hypergraph (an ordinary graph)."""
    if any(len(e) != 2 for e in H.edges):
        raise DigraphError("symmetric_digraph needs every edge to have exactly two members")
    arcs = []
    for u, v in H.edges:
        arcs += [(u, v), (v, u)]
    return Digraph.from_arcs(H.vertices, arcs, H.sink)


def incidence_digraph(B: BipartiteIncidence) -> Digraph:
    arcs = []
    for e, v in B.adjacency:
        arcs += [(e, v), (v, e)]
    return Digraph.from_arcs(B.nodes, arcs, B.sink)


@dataclass(frozen=True)
class Cycling:
    """A cyclic order on each edge, stored rotated so the earliest vertex leads."""

    orders: tuple

    @classmethod
    def from_orders(cls, H: RootedHypergraph, orders: Sequence[Sequence]) -> "Cycling":
        if len(orders) != len(H.edges):
            raise ValueError(f"need one cyclic order per edge ({len(H.edges)}), got {len(orders)}")
        pos = {v: i for i, v in enumerate(H.vertices)}
        canon = []
        for k, cyc in enumerate(orders):
            cyc = tuple(cyc)
            if len(cyc) != len(H.edges[k]) or set(cyc) != H.edge_sets[k]:
                raise ValueError(f"order {cyc!r} is not a cyclic order of edge {k}")
            r = min(range(len(cyc)), key=lambda i: pos[cyc[i]])
            canon.append(cyc[r:] + cyc[:r])
        return cls(tuple(canon))

    def successor(self, k: int, v):
        cyc = self.orders[k]
        return cyc[(cyc.index(v) + 1) % len(cyc)]


def cycling_from_order(H: RootedHypergraph, order: Sequence) -> Cycling:
    """Sort each edge by a global vertex order and close it into a cycle."""
    order = tuple(order)
    if len(order) != len(H.vertices) or set(order) != set(H.vertices):
        raise ValueError("order must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    return Cycling.from_orders(H, [sorted(e, key=pos.__getitem__) for e in H.edges])


def digraph_from_cycling(H: RootedHypergraph, C: Cycling) -> Digraph:
    arcs = []
    for cyc in C.orders:
        for i, v in enumerate(cyc):
            arcs.append((v, cyc[(i + 1) % len(cyc)]))
    return Digraph.from_arcs(H.vertices, arcs, H.sink)


def vertex_induced_cyclings(H: RootedHypergraph, sink_first: bool = False, max_vertices: int | None = 8) -> dict:
    """Distinct vertex-induced cyclings, each mapped to the first order producing it."""
    if max_vertices is not None and len(H.vertices) > max_vertices:
        raise SizeGuardError(
            f"{len(H.vertices)} vertices means {factorial(len(H.vertices))} orders; guard is {max_vertices}"
        )
    if sink_first:
        orders = ((H.sink,) + p for p in permutations(H.nonsink))
    else:
        orders = permutations(H.vertices)
    out = {}
    for order in orders:
        out.setdefault(cycling_from_order(H, order), order)
    return out


def cycling_parking_sets(H: RootedHypergraph, sink_first: bool = False, max_vertices: int | None = 8) -> list:
    """[(order, cycling, parking set of D_C(H))] over distinct vertex-induced cyclings."""
    return [
        (order, C, digraph_parking_enumerate(digraph_from_cycling(H, C)))
        for C, order in vertex_induced_cyclings(H, sink_first, max_vertices).items()
    ]


def union_over_cyclings(H: RootedHypergraph, sink_first: bool = False, max_vertices: int | None = 8) -> list:
    union = set()
    for _, _, configs in cycling_parking_sets(H, sink_first, max_vertices):
        union.update(configs)
    return sorted(union)


def greedy_cycling_cover(H: RootedHypergraph, max_vertices: int | None = 8) -> list:
    """Cyclings picked greedily until their parking sets cover the union; not proven minimal."""
    sets = cycling_parking_sets(H, max_vertices=max_vertices)
    target = set()
    for _, _, configs in sets:
        target.update(configs)
    covered, chosen = set(), []
    while covered != target:
        order, C, configs = max(sets, key=lambda item: len(set(item[2]) - covered))
        chosen.append((order, C))
        covered.update(configs)
    return chosen


def star_digraph(H: RootedHypergraph) -> Digraph:
    """Arcs e -> q for every edge and v -> e for every nonsink member v of e."""
    if not H.is_star():
        raise DigraphError("star_digraph needs the sink to lie in every edge")
    nodes = tuple(EdgeNode(k) for k in range(len(H.edges))) + H.vertices
    arcs = []
    for k, e in enumerate(H.edges):
        arcs.append((EdgeNode(k), H.sink))
        arcs += [(v, EdgeNode(k)) for v in e if v != H.sink]
    return Digraph.from_arcs(nodes, arcs, H.sink)


def digraph_to_json(D: Digraph) -> str:
    return json.dumps(D.to_json())
