"""Chip-firing on hypergraphs with explicit firing choices.

A firing choice for a vertex v maps each edge index containing v to the
vertex of that edge which receives v's chip.  Chips sent to the sink vanish.
Results of firing are returned even when some entry is negative, so callers
and oracles can inspect failing outcomes.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterable, Mapping, Sequence

from .core import RootedHypergraph, SizeGuardError, check_config, set_degrees


class FiringChoiceError(ValueError):
    pass


def _check_choice(H: RootedHypergraph, v, choice: Mapping) -> None:
    if v not in H.index:
        raise FiringChoiceError(f"{v!r} is not a nonsink vertex")
    if set(choice) != set(H.incident[v]):
        raise FiringChoiceError(
            f"choice for {v!r} must cover exactly edges {list(H.incident[v])}, got {sorted(choice)}"
        )
    for k, target in choice.items():
        if target == v or target not in H.edge_sets[k]:
            raise FiringChoiceError(f"{v!r} cannot send its edge-{k} chip to {target!r}")


def fire_vertex(H: RootedHypergraph, c: Sequence[int], v, choice: Mapping) -> tuple:
    """Fire v once: it loses deg(v) chips and each chosen target gains one."""
    c = list(c)
    if len(c) != H.n:
        raise ValueError(f"configuration has length {len(c)}, expected {H.n}")
    _check_choice(H, v, choice)
    c[H.index[v]] -= len(H.incident[v])
    for target in choice.values():
        if target != H.sink:
            c[H.index[target]] += 1
    return tuple(c)


def is_cancellative(H: RootedHypergraph, T: Iterable, choices: Mapping) -> bool:
    """Every edge inside T must see its members' chips permuted among themselves."""
    T = frozenset(T)
    for k, members in enumerate(H.edge_sets):
        if members <= T:
            targets = [choices[v][k] for v in members]
            if set(targets) != members:
                return False
    return True


def fire_set(H: RootedHypergraph, c: Sequence[int], T: Iterable, choices: Mapping) -> tuple:
    """Fire every vertex of T at once under a cancellative joint choice."""
    T = frozenset(T)
    if set(choices) != T:
        raise FiringChoiceError("choices must be keyed by exactly the vertices of T")
    if not is_cancellative(H, T, choices):
        raise FiringChoiceError("firing choice is not cancellative")
    out = tuple(c)
    for v in H.nonsink:
        if v in T:
            out = fire_vertex(H, out, v, choices[v])
    return out


def ready_to_fire(H: RootedHypergraph, c: Sequence[int], T: Iterable) -> bool:
    """T can fire iff deg_T(i) <= c_i for all i in T."""
    c = check_config(H, c)
    mask = H.mask_of(T)
    if not mask:
        raise ValueError("T must be nonempty")
    degs = set_degrees(H, mask)
    return all(degs[i] <= c[i] for i in range(H.n) if mask >> i & 1)


def _edge_options(H, T, k):
    """All ways the members of T in edge k can pass their chips, as tuples of (v, target)."""
    members = H.edges[k]
    firing = [v for v in members if v in T]
    if not firing:
        return [()]
    if len(firing) == len(members):
        return [tuple(zip(members, p)) for p in permutations(members) if all(a != b for a, b in zip(members, p))]
    per_vertex = [[(v, t) for t in members if t != v] for v in firing]
    return list(product(*per_vertex))


def count_cancellative_choices(H: RootedHypergraph, T: Iterable) -> int:
    T = frozenset(T)
    total = 1
    for k in range(len(H.edges)):
        total *= len(_edge_options(H, T, k))
    return total


def cancellative_choices(H: RootedHypergraph, T: Iterable, max_choices: int | None = 200_000):
    """Yield every cancellative joint firing choice for T, as {v: {edge: target}}."""
    T = frozenset(T)
    H.mask_of(T)
    total = count_cancellative_choices(H, T)
    if max_choices is not None and total > max_choices:
        raise SizeGuardError(f"{total} cancellative choices, above the guard of {max_choices}")
    per_edge = [_edge_options(H, T, k) for k in range(len(H.edges))]
    ordered = [v for v in H.nonsink if v in T]
    for combo in product(*per_edge):
        choices = {v: {} for v in ordered}
        for k, option in enumerate(combo):
            for v, target in option:
                choices[v][k] = target
        yield choices


def ready_to_fire_oracle(H: RootedHypergraph, c: Sequence[int], T: Iterable, max_choices: int | None = 200_000) -> bool:
    """Fire T under every cancellative choice; ready iff no outcome goes negative."""
    c = check_config(H, c)
    T = frozenset(T)
    if not T:
        raise ValueError("T must be nonempty")
    for choices in cancellative_choices(H, T, max_choices):
        if min(fire_set(H, c, T, choices)) < 0:
            return False
    return True


def is_superstable(H: RootedHypergraph, c: Sequence[int]) -> bool:
    """No nonempty set of nonsink vertices is ready to fire."""
    c = check_config(H, c)
    return not any(ready_to_fire(H, c, H.labels_of(mask)) for mask in range(1, 1 << H.n))


def cycling_choice(H: RootedHypergraph, cycling, T: Iterable) -> dict:
    """Joint choice in which each vertex of T passes along each edge to its cyclic successor."""
    T = frozenset(T)
    return {
        v: {k: cycling.successor(k, v) for k in H.incident[v]}
        for v in H.nonsink
        if v in T
    }
