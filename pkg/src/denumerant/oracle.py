"""
Enumeration oracles for testing the closed forms.

Nothing here touches modular inverses or floor sums.
"""

from __future__ import annotations

from collections.abc import Iterable

from denumerant.errors import DomainError

#: Largest n :func:`brute_force_count` accepts unless told otherwise.
DEFAULT_CAP = 10**7

#: Up to this n the oracle runs the plain triple loop.
TRIPLE_LOOP_LIMIT = 200


def naive_two_var(a: int, b: int, n: int) -> int:
    """Solutions of ``a*y + b*z = n`` by scanning y."""
    return sum(1 for y in range(n // a + 1) if (n - a * y) % b == 0)


def _scan_two_var(lo: int, hi: int, n: int) -> int:
    # Divisibility of n - hi*j by lo depends only on j mod lo, so each hit
    # j < lo seeds the progression j, j + lo, ... up to n // hi.
    j_max = n // hi
    total = 0
    for j in range(min(lo, j_max + 1)):
        if (n - hi * j) % lo == 0:
            total += (j_max - j) // lo + 1
    return total


def brute_force_count(a: int, b: int, c: int, n: int, cap: int = DEFAULT_CAP) -> int:
    """
    Count solutions of ``a*x + b*y + c*z = n`` by enumeration.

    Small n use a full triple loop. Larger n loop over the multiplier of
    the largest coefficient and count the remaining two-term equation by
    a residue scan, which needs no closed form.
    """
    if min(a, b, c) < 1:
        raise DomainError("coefficients must be positive")
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n > cap:
        raise DomainError(f"n={n} exceeds the brute-force cap {cap}")
    if n <= TRIPLE_LOOP_LIMIT:
        return sum(
            1
            for x in range(n // a + 1)
            for y in range((n - a * x) // b + 1)
            if (n - a * x - b * y) % c == 0
        )
    big, mid, small = sorted((a, b, c), reverse=True)
    return sum(_scan_two_var(small, mid, n - big * x) for x in range(n // big + 1))


def denumerant_table(coeffs: Iterable[int], n_max: int) -> list[int]:
    """Counts for every n in ``0..n_max`` by the coin-change recurrence."""
    ways = [1] + [0] * n_max
    for coin in coeffs:
        for t in range(coin, n_max + 1):
            ways[t] += ways[t - coin]
    return ways
