from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperchip import catalog
from hyperchip.counting import (
    acyclic_count_complete_bipartite,
    enumerate_u_parking,
    is_u_parking,
    maximal_u_parking,
    rational_determinant,
    steck_count,
    steck_matrix,
    stirling2,
    u_vector_complete,
)
from hyperchip.parking import enumerate_parking, maximal_elements


def acyclic_bruteforce(m, n):
    """Orient every edge of K_{m,n} both ways and keep the acyclic results."""
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    count = 0
    for bits in product((0, 1), repeat=len(edges)):
        succ = {x: [] for x in range(m + n)}
        for (a, b), flip in zip(edges, bits):
            if flip:
                a, b = b, a
            succ[a].append(b)
        indeg = {x: 0 for x in succ}
        for ys in succ.values():
            for y in ys:
                indeg[y] += 1
        stack = [x for x in succ if indeg[x] == 0]
        seen = 0
        while stack:
            x = stack.pop()
            seen += 1
            for y in succ[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    stack.append(y)
        count += seen == m + n
    return count


def test_is_u_parking():
    assert is_u_parking((3, 5, 6, 6), (2, 4, 5, 5))
    assert is_u_parking((3, 5, 6, 6), (3, 0, 0, 0))
    assert not is_u_parking((3, 5, 6, 6), (5, 5, 5, 5))
    # u = (1, ..., n) gives classical parking functions
    assert is_u_parking((1, 2, 3), (0, 2, 0))
    assert not is_u_parking((1, 2, 3), (1, 1, 2))


@pytest.mark.parametrize("u", [(3, 2), (-1, 2), ()])
def test_bad_u(u):
    with pytest.raises(ValueError):
        is_u_parking(u, (0,) * len(u))


def test_u_vector_complete():
    assert u_vector_complete(4, 3) == (3, 5, 6, 6)
    assert u_vector_complete(5, 2) == (1, 2, 3, 4, 5)
    assert u_vector_complete(3, 3) == (2, 3, 3)
    with pytest.raises(ValueError):
        u_vector_complete(3, 5)


def test_complete_hypergraph_matches_u_parking():
    H = catalog.complete_hypergraph(4, 3)
    assert enumerate_parking(H) == enumerate_u_parking((2, 3, 3))
    assert len(enumerate_parking(H)) == 26


def test_steck_counts():
    assert steck_count((3, 5, 6, 6)) == 1203
    assert steck_count((1, 2, 3)) == 16
    assert steck_count((1,)) == 1
    assert steck_count((0, 4)) == 0
    assert len(enumerate_u_parking((3, 5, 6, 6))) == 1203


def test_steck_matrix_entries():
    D = steck_matrix((1, 2, 3))
    assert D[0] == [Fraction(1), Fraction(1, 2), Fraction(1, 6)]
    assert D[2][0] == 0 and D[1][0] == 1
    assert rational_determinant([[2, 1], [4, 2]]) == 0


def test_maximal_u_parking():
    top = maximal_u_parking((3, 5, 6, 6))
    assert len(top) == 12
    assert (2, 4, 5, 5) in top
    assert maximal_u_parking((1, 2)) == [(0, 1), (1, 0)]
    assert maximal_u_parking((2, 3, 3)) == maximal_elements(enumerate_u_parking((2, 3, 3)))
    assert maximal_u_parking((0, 3)) == []


def test_stirling():
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert stirling2(0, 0) == 1


def test_acyclic_bipartite():
    assert acyclic_count_complete_bipartite(1, 1) == 2
    assert acyclic_count_complete_bipartite(2, 2) == 14
    assert acyclic_count_complete_bipartite(3, 3) == 230
    assert acyclic_count_complete_bipartite(2, 3) == 46
    for m, n in [(1, 1), (2, 2), (2, 3), (3, 3), (1, 4)]:
        assert acyclic_count_complete_bipartite(m, n) == acyclic_bruteforce(m, n)
    with pytest.raises(ValueError):
        acyclic_count_complete_bipartite(0, 2)


# --- properties -------------------------------------------------------------

u_vectors = st.lists(st.integers(0, 6), min_size=1, max_size=4).map(sorted).map(tuple)


@given(u_vectors)
def test_steck_matches_enumeration(u):
    assert steck_count(u) == len(enumerate_u_parking(u))


@given(u_vectors)
def test_maximal_u_matches_bruteforce(u):
    assert maximal_u_parking(u) == maximal_elements(enumerate_u_parking(u))


COMPLETE_CASES = [(n, d) for n in range(1, 5) for d in range(2, n + 2)]


@pytest.mark.parametrize("n, d", COMPLETE_CASES)
def test_complete_hypergraphs_are_u_parking(n, d):
    H = catalog.complete_hypergraph(n + 1, d)
    u = u_vector_complete(n, d)
    configs = enumerate_parking(H)
    assert configs == enumerate_u_parking(u)
    assert len(configs) == steck_count(u)
    # maximal ones are the rearrangements of u - 1
    assert maximal_elements(configs) == maximal_u_parking(u)
