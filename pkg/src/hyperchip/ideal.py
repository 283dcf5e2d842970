"""The cut ideal of a hypergraph and its standard monomials.

Monomials are plain exponent tuples over the nonsink vertices; only
divisibility is ever needed, so no polynomial ring is modelled.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import RootedHypergraph, SizeGuardError, set_degrees


def cut_ideal_generators(H: RootedHypergraph, max_n: int | None = 16) -> dict:
    """m_T = prod_{i in T} x_i^deg_T(i) for every nonempty T, keyed by T."""
    if max_n is not None and H.n > max_n:
        raise SizeGuardError(f"{H.n} nonsink vertices give 2^{H.n}-1 generators; guard is {max_n}")
    gens = {}
    for mask in range(1, 1 << H.n):
        degs = set_degrees(H, mask)
        gens[H.labels_of(mask)] = tuple(degs[i] if mask >> i & 1 else 0 for i in range(H.n))
    return gens


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimal_generators(gens: Iterable[Sequence[int]]) -> list:
    """Antichain under divisibility generating the same ideal, sorted."""
    unique = sorted({tuple(g) for g in gens}, key=lambda g: (sum(g), g))
    out = []
    for g in unique:
        if not any(divides(h, g) for h in out):
            out.append(g)
    return sorted(out)


def is_standard_monomial(gens: Iterable[Sequence[int]], c: Sequence[int]) -> bool:
    """True iff no generator divides x^c."""
    return not any(divides(g, c) for g in gens)


def format_monomial(exponents: Sequence[int]) -> str:
    parts = [f"x{i + 1}^{a}" for i, a in enumerate(exponents) if a]
    return "*".join(parts) if parts else "1"
