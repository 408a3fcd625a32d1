"""Independent brute-force oracles used only by the test suite.

Everything here is deliberately primitive and self-contained: plain
tuple enumeration, Pascal's triangle, and an unpruned factor-pair search
with its own division routine.  None of it shares code with the package
paths it checks.
"""

import itertools
import math


def brute_count_tuples(parts: int, target: int, cap: int) -> int:
    """Count capped tuples with the given sum by full enumeration."""
    return sum(
        1 for t in itertools.product(range(cap + 1), repeat=parts) if sum(t) == target
    )


def brute_admissible_vectors(n: int, height: int) -> list[tuple[int, ...]]:
    """All (a_0..a_{n-1}) with sum n!-1 and entries <= height, in lex order."""
    target = math.factorial(n) - 1
    return [
        t
        for t in itertools.product(range(height + 1), repeat=n)
        if sum(t) == target
    ]


def pascal_binomial(n: int, k: int) -> int:
    """C(n, k) by iterating Pascal's rule row by row."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k]


def _ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def _divides(full: list[int], g: list[int]) -> bool:
    # Synthetic division of `full` by monic g over Z; True iff remainder 0.
    gl = len(g) - 1
    r = list(full)
    for i in range(len(full) - gl - 1, -1, -1):
        c = r[i + gl]
        if c:
            for j in range(gl):
                r[i + j] -= c * g[j]
    return not any(r[:gl])


def oracle_is_irreducible_over_z(full: list[int]) -> bool:
    """Unpruned factor-pair search over the full Mignotte box.

    `full` is the ascending coefficient vector of a monic polynomial
    (last entry 1).  Tries every monic candidate g of degree m <= n/2
    with |g_i| <= C(m-1, i)*||f||_2 + C(m-1, i-1); the cofactor comes out
    of the division, so a hit is exactly a factor pair.
    """
    n = len(full) - 1
    if n == 1:
        return True
    norm = _ceil_sqrt(sum(c * c for c in full))
    for m in range(1, n // 2 + 1):
        bounds = [
            math.comb(m - 1, i) * norm + (math.comb(m - 1, i - 1) if i >= 1 else 0)
            for i in range(m)
        ]
        for cand in itertools.product(*[range(-b, b + 1) for b in bounds]):
            if _divides(full, [*cand, 1]):
                return False
    return True
