"""Two-sided strict bounds on the number of solutions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from denumerant.core import _check_n, _require_pairwise


@dataclass(frozen=True)
class BoundInterval:
    """
    Open interval ``(lower, upper)`` known to contain the count.

    ``integer_floor`` and ``integer_ceil`` are the smallest and largest
    integers strictly inside it.
    """

    lower: Fraction
    upper: Fraction

    @property
    def integer_floor(self) -> int:
        return self.lower.numerator // self.lower.denominator + 1

    @property
    def integer_ceil(self) -> int:
        return -((-self.upper.numerator) // self.upper.denominator) - 1

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def __contains__(self, value: int | Fraction) -> bool:
        return self.lower < value < self.upper


def count_bounds(a: int, b: int, c: int, n: int) -> BoundInterval:
    """``n(n+a+b+c)/(2abc) -/+ (a+b+c)/2`` for pairwise-coprime ``a, b, c``."""
    _require_pairwise(a, b, c)
    _check_n(n)
    s = a + b + c
    mid = Fraction(n * (n + s), 2 * a * b * c)
    half_width = Fraction(s, 2)
    return BoundInterval(mid - half_width, mid + half_width)
