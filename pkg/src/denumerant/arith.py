"""
Exact integer kernels.

Everything here works on Python ints, so there is no wraparound and no
floating point. Residues follow the ``1..m`` convention (0 maps to ``m``)
wherever the counting formula needs them.
"""

from __future__ import annotations

import math
from fractions import Fraction

from denumerant.errors import DomainError


def ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    """
    Extended Euclid.

    Returns ``(g, u, v)`` with ``g = gcd(x, y) > 0`` and ``u*x + v*y == g``.

    >>> ext_gcd(0, 5)
    (5, 0, 1)
    >>> g, u, v = ext_gcd(37, 23); (g, 37 * u + 23 * v)
    (1, 1)
    """
    if x == 0 and y == 0:
        raise DomainError("ext_gcd(0, 0) is undefined")
    old_r, r = x, y
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def residue_rep(x: int, m: int) -> int:
    """Representative of ``x mod m`` in ``1..m``."""
    if m <= 0:
        raise DomainError(f"modulus must be positive, got {m}")
    r = x % m
    return r if r else m


def mod_inverse(x: int, m: int) -> int:
    """
    Inverse of ``x`` modulo ``m``, as a representative in ``1..m``.

    For ``m == 1`` the answer is 1.
    """
    if m <= 0:
        raise DomainError(f"modulus must be positive, got {m}")
    g, u, _ = ext_gcd(x, m)
    if g != 1:
        raise DomainError(f"{x} is not invertible modulo {m} (gcd {g})")
    return residue_rep(u, m)


def floor_sum(q: int, p: int, m: int) -> int:
    """
    ``sum(p * i // m for i in range(1, q + 1))`` in O(log max(p, m)) steps.

    Euclidean descent on the lattice-point count below the line
    ``y = (p*x + r) / m``: peel off the integer parts of the slope and
    intercept, then swap axes and recurse on ``(m, p mod m)``.
    """
    if m < 1:
        raise DomainError(f"modulus must be positive, got {m}")
    if q < 0 or p < 0:
        raise DomainError(f"floor_sum needs q, p >= 0, got q={q}, p={p}")
    # sum_{i=0}^{n-1} floor((s*i + r) / m) with n=q, s=p, r=p
    n, s, r = q, p, p
    total = 0
    while n:
        if s >= m:
            total += (n - 1) * n // 2 * (s // m)
            s %= m
        if r >= m:
            total += n * (r // m)
            r %= m
        y_max = s * n + r
        if y_max < m:
            break
        # swap roles: count by rows instead of columns
        n, r = divmod(y_max, m)
        m, s = s, m
    return total


def sawtooth(x: Fraction) -> Fraction:
    """``((x))``: fractional part minus one half, and 0 at integers."""
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def sawtooth_sum(q: int, p: int, m: int) -> Fraction:
    """
    ``sum(((p*i/m)) for i in 1..q)`` as an exact rational.

    Accumulates the residues ``p*i mod m`` term by term, so it does not
    go through :func:`floor_sum`; cost is O(q).
    """
    if m < 1:
        raise DomainError(f"modulus must be positive, got {m}")
    if q < 0:
        raise DomainError(f"sawtooth_sum needs q >= 0, got {q}")
    step = p % m
    r = 0
    residue_total = 0
    fractional_terms = 0
    for _ in range(q):
        r += step
        if r >= m:
            r -= m
        if r:
            residue_total += r
            fractional_terms += 1
    return Fraction(residue_total, m) - Fraction(fractional_terms, 2)


def isqrt(s: int) -> int:
    """``floor(sqrt(s))`` for a non-negative integer, exactly."""
    if s < 0:
        raise DomainError(f"isqrt of negative number {s}")
    return math.isqrt(s)
