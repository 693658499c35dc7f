"""
Counting non-negative solutions of ``a*x + b*y + c*z = n``.

:func:`count` is the entry point for arbitrary positive coefficients. It
divides out ``gcd(a, b, c)``, reduces to pairwise-coprime coefficients and
evaluates the closed form in :func:`count_pairwise_coprime`, which costs
O(log) arithmetic operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from denumerant.arith import floor_sum, mod_inverse, residue_rep, sawtooth_sum
from denumerant.errors import DomainError


def _check_positive(**coeffs: int) -> None:
    for name, v in coeffs.items():
        if v < 1:
            raise DomainError(f"{name} must be a positive integer, got {v}")


def _check_n(n: int) -> None:
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")


def is_pairwise_coprime(a: int, b: int, c: int) -> bool:
    return gcd(a, b) == 1 and gcd(b, c) == 1 and gcd(c, a) == 1


def _require_pairwise(a: int, b: int, c: int) -> None:
    _check_positive(a=a, b=b, c=c)
    if not is_pairwise_coprime(a, b, c):
        raise DomainError(
            f"({a}, {b}, {c}) is not pairwise coprime: "
            f"gcd(a,b)={gcd(a, b)}, gcd(b,c)={gcd(b, c)}, gcd(c,a)={gcd(c, a)}"
        )


@dataclass(frozen=True)
class CoinTriple:
    """Coefficients ``(a, b, c)`` with their gcd structure."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        _check_positive(a=self.a, b=self.b, c=self.c)

    @cached_property
    def g1(self) -> int:
        return gcd(self.b, self.c)

    @cached_property
    def g2(self) -> int:
        return gcd(self.c, self.a)

    @cached_property
    def g3(self) -> int:
        return gcd(self.a, self.b)

    @cached_property
    def g(self) -> int:
        return gcd(self.a, self.b, self.c)

    @property
    def pairwise_coprime(self) -> bool:
        return self.g1 == self.g2 == self.g3 == 1

    def scaled_down(self) -> CoinTriple:
        """The triple divided by its common gcd."""
        return CoinTriple(self.a // self.g, self.b // self.g, self.c // self.g)

    def reduced(self) -> CoinTriple:
        """
        Pairwise-coprime ``(A, B, C)`` of a triple with ``g == 1``.

        ``A = a/(g2*g3)``, ``B = b/(g3*g1)``, ``C = c/(g1*g2)``.
        """
        if self.g != 1:
            raise DomainError(f"gcd(a, b, c) = {self.g}, expected 1")
        return CoinTriple(
            self.a // (self.g2 * self.g3),
            self.b // (self.g3 * self.g1),
            self.c // (self.g1 * self.g2),
        )


@dataclass(frozen=True)
class ResidueSystem:
    """
    Residue parameters of the closed form, all in the ``1..m`` convention.

    ``b1p, c1p`` live mod a; ``c2p, a2p`` mod b; ``a3p, b3p`` mod c.
    """

    b1p: int
    c1p: int
    c2p: int
    a2p: int
    a3p: int
    b3p: int
    N1: int


def residue_params(a: int, b: int, c: int, n: int) -> ResidueSystem:
    _require_pairwise(a, b, c)
    _check_n(n)
    b1p = residue_rep(-n * mod_inverse(b, a), a)
    c1p = residue_rep(b * mod_inverse(c, a), a)
    c2p = residue_rep(-n * mod_inverse(c, b), b)
    a2p = residue_rep(c * mod_inverse(a, b), b)
    a3p = residue_rep(-n * mod_inverse(a, c), c)
    b3p = residue_rep(a * mod_inverse(b, c), c)
    N1 = (
        n * (n + a + b + c)
        + c * b * b1p * (a + 1 - c1p * (b1p - 1))
        + a * c * c2p * (b + 1 - a2p * (c2p - 1))
        + b * a * a3p * (c + 1 - b3p * (a3p - 1))
    )
    return ResidueSystem(b1p, c1p, c2p, a2p, a3p, b3p, N1)


def count_pairwise_coprime(a: int, b: int, c: int, n: int) -> int:
    """Closed-form count for pairwise-coprime ``a, b, c``."""
    r = residue_params(a, b, c, n)
    head, rem = divmod(r.N1, 2 * a * b * c)
    sums = (
        floor_sum(r.b1p - 1, r.c1p, a)
        + floor_sum(r.c2p - 1, r.a2p, b)
        + floor_sum(r.a3p - 1, r.b3p, c)
    )
    # The floor sums are integers, so N1 must be a multiple of 2abc.
    if rem:
        raise AssertionError(f"N1={r.N1} not divisible by 2abc for {(a, b, c, n)}")
    result = head + sums - 2
    if result < 0:
        raise AssertionError(f"negative count {result} for {(a, b, c, n)}")
    return result


def count_sawtooth(a: int, b: int, c: int, n: int) -> int:
    """
    Same count as :func:`count_pairwise_coprime`, via sawtooth sums.

    Evaluated in exact rationals. Cost is O(a + b + c).
    """
    r = residue_params(a, b, c, n)
    value = (
        Fraction(n * (n + a + b + c), 2 * a * b * c)
        - Fraction(1, 2)
        + Fraction(r.b1p, 2 * a)
        + Fraction(r.c2p, 2 * b)
        + Fraction(r.a3p, 2 * c)
        - sawtooth_sum(r.b1p - 1, r.c1p, a)
        - sawtooth_sum(r.c2p - 1, r.a2p, b)
        - sawtooth_sum(r.a3p - 1, r.b3p, c)
    )
    if value.denominator != 1:
        raise AssertionError(f"non-integral sawtooth count {value} for {(a, b, c, n)}")
    return value.numerator


def count_two_var(a: int, b: int, n: int) -> int:
    """
    Solutions of ``a*y + b*z = n`` for coprime ``a, b`` (Popoviciu).

    ``n/(ab) - {b'n/a} - {a'n/b} + 1`` with ``b' = b^-1 mod a`` and
    ``a' = a^-1 mod b``, scaled by ``ab`` to stay in integers.
    """
    _check_positive(a=a, b=b)
    _check_n(n)
    if gcd(a, b) != 1:
        raise DomainError(f"count_two_var needs coprime coefficients, got ({a}, {b})")
    r1 = n * mod_inverse(b, a) % a
    r2 = n * mod_inverse(a, b) % b
    q, rem = divmod(n - b * r1 - a * r2, a * b)
    if rem:
        raise AssertionError(f"Popoviciu numerator not divisible for {(a, b, n)}")
    return q + 1


@dataclass(frozen=True)
class ReducedInstance:
    """``a*x + b*y + c*z = n`` rewritten with pairwise-coprime ``A, B, C``."""

    g1: int
    g2: int
    g3: int
    n1: int
    n2: int
    n3: int
    A: int
    B: int
    C: int
    N: int


def reduce_instance(a: int, b: int, c: int, n: int) -> ReducedInstance:
    """
    Reduce to an instance with pairwise-coprime coefficients and equal count.

    Requires ``gcd(a, b, c) == 1``. The reduced target ``N`` may be
    negative, in which case the count is 0.
    """
    _check_n(n)
    t = CoinTriple(a, b, c)
    red = t.reduced()
    g1, g2, g3 = t.g1, t.g2, t.g3
    n1 = n * mod_inverse(a, g1) % g1
    n2 = n * mod_inverse(b, g2) % g2
    n3 = n * mod_inverse(c, g3) % g3
    N, rem = divmod(n - a * n1 - b * n2 - c * n3, g1 * g2 * g3)
    if rem:
        raise AssertionError(f"reduction not exact for {(a, b, c, n)}")
    return ReducedInstance(g1, g2, g3, n1, n2, n3, red.a, red.b, red.c, N)


def count(a: int, b: int, c: int, n: int) -> int:
    """Number of ``(x, y, z) >= 0`` with ``a*x + b*y + c*z == n``."""
    _check_positive(a=a, b=b, c=c)
    _check_n(n)
    g = gcd(a, b, c)
    if n % g:
        return 0
    a, b, c, n = a // g, b // g, c // g, n // g
    if is_pairwise_coprime(a, b, c):
        return count_pairwise_coprime(a, b, c, n)
    r = reduce_instance(a, b, c, n)
    if r.N < 0:
        return 0
    return count_pairwise_coprime(r.A, r.B, r.C, r.N)
