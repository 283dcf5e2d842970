"""Recognising and enumerating H-parking functions.

Two independent recognisers are provided: a direct scan over every nonempty
vertex subset (exponential, used as an oracle) and Dhar's burning algorithm
run on the bipartite incidence graph with zero chips on the edge-nodes.
Maximal parking functions come from acyclic orientations with unique source
at the sink; the full set is their downward closure.
"""

from __future__ import annotations

from collections import deque
from itertools import product
from typing import Sequence

from .core import RootedHypergraph, bipartite_incidence, check_config, set_degrees


class OrientationError(ValueError):
    pass


def is_parking_bruteforce(H: RootedHypergraph, c: Sequence[int]) -> bool:
    c = check_config(H, c)
    return not _first_bounded(H, c)


def _first_bounded(H, c):
    for mask in range(1, 1 << H.n):
        if _is_bounded(H, c, mask):
            return mask
    return 0


def _is_bounded(H, c, mask) -> bool:
    degs = set_degrees(H, mask)
    m = mask
    while m:
        low = m & -m
        i = low.bit_length() - 1
        if degs[i] > c[i]:
            return False
        m ^= low
    return True


def bounded_sets(H: RootedHypergraph, c: Sequence[int]) -> list:
    """Every nonempty T with deg_T(i) <= c_i for all i in T (as label frozensets)."""
    c = check_config(H, c)
    return [H.labels_of(mask) for mask in range(1, 1 << H.n) if _is_bounded(H, c, mask)]


def burn(neighbors: dict, chips: dict, sink) -> list:
    """Dhar's burning algorithm on an undirected (multi)graph.

    `neighbors` maps each node to its neighbour list (repeat a neighbour for
    parallel edges) and `chips` gives the chip count of every nonsink node.
    Returns the batches of nodes marked at each step, starting with [sink].
    """
    marked = {sink}
    layers = [[sink]]
    frontier = [sink]
    touched = {}
    while frontier:
        for x in frontier:
            for y in neighbors[x]:
                if y not in marked:
                    touched[y] = touched.get(y, 0) + 1
        batch = [y for y, k in touched.items() if y not in marked and k > chips[y]]
        for y in batch:
            marked.add(y)
            del touched[y]
        if batch:
            layers.append(batch)
        frontier = batch
    return layers


def lifted_chips(H: RootedHypergraph, c: Sequence[int]) -> dict:
    """Configuration on the nonsink nodes of B(H): c on vertices, zero on edges."""
    B = bipartite_incidence(H)
    chips = {e: 0 for e in B.left}
    chips.update(zip(H.nonsink, c))
    return chips


def is_parking_burn(H: RootedHypergraph, c: Sequence[int]) -> bool:
    c = check_config(H, c)
    B = bipartite_incidence(H)
    layers = burn(B.neighbors, lifted_chips(H, c), H.sink)
    return sum(len(layer) for layer in layers) == len(B.nodes)


def enumerate_parking_box(H: RootedHypergraph) -> list:
    """Box scan over prod [0, deg(i)-1] with the burning test."""
    return [c for c in product(*(range(d) for d in H.degrees())) if is_parking_burn(H, c)]


def downward_closure(tops) -> set:
    out = set()
    for top in tops:
        out.update(product(*(range(x + 1) for x in top)))
    return out


def enumerate_parking(H: RootedHypergraph) -> list:
    """All H-parking functions, lexicographically sorted."""
    if H.n == 0:
        return [()]
    return sorted(downward_closure(maximal_parking(H)))


def orientation_digraph(H: RootedHypergraph, orientation: Sequence) -> dict:
    """Successor lists of B(H) directed by the orientation (v_e -> e -> other members)."""
    _check_orientation(H, orientation)
    succ = {x: [] for x in bipartite_incidence(H).nodes}
    B = bipartite_incidence(H)
    for e, chosen in zip(B.left, orientation):
        for v in H.edges[e.index]:
            if v == chosen:
                succ[v].append(e)
            else:
                succ[e].append(v)
    return succ


def _check_orientation(H, orientation):
    if len(orientation) != len(H.edges):
        raise OrientationError(f"orientation has {len(orientation)} entries, expected {len(H.edges)}")
    for k, v in enumerate(orientation):
        if v not in H.edge_sets[k]:
            raise OrientationError(f"{v!r} is not a member of edge {k}")


def is_acyclic_unique_source(H: RootedHypergraph, orientation: Sequence) -> bool:
    succ = orientation_digraph(H, orientation)
    indeg = {x: 0 for x in succ}
    for ys in succ.values():
        for y in ys:
            indeg[y] += 1
    sources = [x for x, k in indeg.items() if k == 0]
    if sources != [H.sink]:
        return False
    queue = deque(sources)
    seen = 0
    while queue:
        x = queue.popleft()
        seen += 1
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    return seen == len(succ)


def enumerate_acyclic_orientations(H: RootedHypergraph) -> list:
    """Orientations (tuple of chosen vertex per edge) acyclic with unique source q."""
    return [o for o in product(*H.edges) if is_acyclic_unique_source(H, o)]


def orientation_to_config(H: RootedHypergraph, orientation: Sequence) -> tuple:
    """c_i = indegree of vertex i in the oriented B(H), minus one."""
    _check_orientation(H, orientation)
    out = []
    for v in H.nonsink:
        indeg = sum(1 for k in H.incident[v] if orientation[k] != v)
        if indeg == 0:
            raise OrientationError(f"vertex {v!r} has indegree 0; orientation has another source")
        out.append(indeg - 1)
    return tuple(out)


def maximal_parking(H: RootedHypergraph) -> list:
    return sorted({orientation_to_config(H, o) for o in enumerate_acyclic_orientations(H)})


def maximal_elements(configs) -> list:
    """Maximal elements under the coordinatewise order, sorted."""
    out = []
    # a dominating vector has a larger sum, so it is seen first
    for c in sorted(set(configs), key=lambda c: -sum(c)):
        if not any(all(x <= y for x, y in zip(c, d)) for d in out):
            out.append(c)
    return sorted(out)
