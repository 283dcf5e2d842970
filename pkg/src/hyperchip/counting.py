"""Vector parking functions and exact counting.

Covers u-parking functions, the u-vector describing H-parking functions of a
complete hypergraph, the Steck-determinant count n! det D evaluated over
exact rationals, and the Stirling-number count of acyclic orientations of a
complete bipartite graph.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import comb, factorial
from typing import Sequence


def check_u(u: Sequence[int]) -> tuple:
    u = tuple(int(x) for x in u)
    if not u:
        raise ValueError("u must have at least one entry")
    if any(x < 0 for x in u):
        raise ValueError("u must be nonnegative")
    if any(a > b for a, b in zip(u, u[1:])):
        raise ValueError("u must be nondecreasing")
    return u


def is_u_parking(u: Sequence[int], c: Sequence[int]) -> bool:
    u = check_u(u)
    if len(c) != len(u):
        raise ValueError("c and u must have the same length")
    return all(0 <= x < bound for x, bound in zip(sorted(c), u))


def enumerate_u_parking(u: Sequence[int]) -> list:
    """Box scan over prod [0, u_n - 1]."""
    u = check_u(u)
    return [c for c in product(range(u[-1]), repeat=len(u)) if is_u_parking(u, c)]


def u_vector_complete(n: int, d: int) -> tuple:
    """u for the complete d-uniform hypergraph on n nonsink vertices plus a sink."""
    if not 2 <= d <= n + 1:
        raise ValueError("need 2 <= d <= n+1")
    top = comb(n, d - 1)
    return tuple(top - comb(n - k, d - 1) if k <= n + 1 - d else top for k in range(1, n + 1))


def steck_matrix(u: Sequence[int]) -> list:
    """D[i][j] = u_i^(j-i+1) / (j-i+1)! when j-i+1 >= 0, else 0 (0-based i, j)."""
    u = check_u(u)
    n = len(u)
    D = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            k = j - i + 1
            if k >= 0:
                D[i][j] = Fraction(u[i] ** k, factorial(k))
    return D


def rational_determinant(M) -> Fraction:
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if A[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            A[k], A[pivot] = A[pivot], A[k]
            det = -det
        det *= A[k][k]
        for i in range(k + 1, n):
            f = A[i][k] / A[k][k]
            if f:
                for j in range(k, n):
                    A[i][j] -= f * A[k][j]
    return det


def steck_count(u: Sequence[int]) -> int:
    """Number of u-parking functions, n! det(Steck matrix)."""
    u = check_u(u)
    value = factorial(len(u)) * rational_determinant(steck_matrix(u))
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"Steck count is not a nonnegative integer: {value}")
    return int(value)


def maximal_u_parking(u: Sequence[int]) -> list:
    """Distinct permutations of u - 1 (empty when u_1 = 0)."""
    u = check_u(u)
    if u[0] == 0:
        return []
    return sorted(set(permutations(x - 1 for x in u)))


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def acyclic_count_complete_bipartite(m: int, n: int) -> int:
    """Acyclic orientations of K_{m,n}: sum_j (j-1)!^2 S(m+1,j) S(n+1,j)."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return sum(
        factorial(j - 1) ** 2 * stirling2(m + 1, j) * stirling2(n + 1, j)
        for j in range(1, min(m + 1, n + 1) + 1)
    )
