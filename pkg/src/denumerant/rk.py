"""
The inverse problem: which n have exactly k representations.

For k at or above a threshold M, the bounds pin any such n to a single
candidate ``gamma_k`` once the coefficients are pairwise coprime. Other
gcd structures reduce to that case. All square roots are integer square
roots of radicands scaled by 4, so alpha = (a+b+c)/2 never needs halves.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import gcd

from denumerant.arith import isqrt
from denumerant.core import CoinTriple, _require_pairwise, count, is_pairwise_coprime
from denumerant.errors import DomainError, PreconditionError


class Threshold(str, enum.Enum):
    """Which formula to use for the threshold M."""

    #: ``floor(((2ab-1)^2 - 4a^2) / (4b) + a) + 1`` with alpha, beta as a, b.
    THEOREM3 = "theorem3"
    #: ``floor(((2ab-1)^2 - a^2) / b + a) + 1``; larger, matches the worked example.
    SUMMARY = "summary"


class CategoryTag(str, enum.Enum):
    I = "CategoryI"
    II = "CategoryII"


class Reason(str, enum.Enum):
    GAMMA_EQUALS_DELTA = "gamma_equals_delta"
    COUNT_MISMATCH = "count_mismatch"
    COUNT_MATCH = "count_match"


class Regime(str, enum.Enum):
    PAIRWISE = "pairwise"
    SETWISE = "setwise"
    GENERAL = "general"


@dataclass(frozen=True)
class AlphaBeta:
    """``alpha = (a+b+c)/2`` kept doubled, and ``beta = 2abc``."""

    two_alpha: int
    beta: int

    @classmethod
    def of(cls, a: int, b: int, c: int) -> AlphaBeta:
        return cls(a + b + c, 2 * a * b * c)


@dataclass(frozen=True)
class Category:
    tag: CategoryTag
    reason: Reason
    gamma: int
    delta: int
    #: Count at gamma; None when gamma == delta made counting unnecessary.
    count_at_gamma: int | None = None

    def __post_init__(self) -> None:
        if (self.tag is CategoryTag.I) != (self.reason is Reason.COUNT_MATCH):
            raise ValueError(f"inconsistent category {self.tag} / {self.reason}")


@dataclass(frozen=True)
class RkResult:
    """
    ``R_k`` together with the statistics of the set.

    ``g_stat`` and ``h_stat`` (largest and smallest member) are None when
    the set is empty: they are undefined there, not zero.
    """

    k: int
    regime: Regime
    category: Category
    members: tuple[int, ...]
    #: The pairwise-coprime triple the category was decided on.
    reduced: tuple[int, int, int]
    threshold: int

    @property
    def g_stat(self) -> int | None:
        return self.members[-1] if self.members else None

    @property
    def h_stat(self) -> int | None:
        return self.members[0] if self.members else None

    @property
    def c_stat(self) -> int:
        return len(self.members)

    @property
    def s_stat(self) -> int:
        return sum(self.members)


def threshold_M(a: int, b: int, c: int, variant: Threshold | str = Threshold.THEOREM3) -> int:
    _require_pairwise(a, b, c)
    variant = Threshold(variant)
    s = a + b + c
    beta = 2 * a * b * c
    # alpha = s/2, so 2*alpha*beta = s*beta; multiply through by 4*beta.
    if variant is Threshold.THEOREM3:
        numerator = (s * beta - 1) ** 2 - s * s + 2 * beta * s
    else:
        numerator = 4 * (s * beta - 1) ** 2 - s * s + 2 * beta * s
    return numerator // (4 * beta) + 1


def _floor_root_minus_alpha(radicand4: int, s: int) -> int:
    # floor((sqrt(R) - s)/2) == floor((isqrt(R) - s)/2): between consecutive
    # integers the half-difference cannot cross an integer.
    if radicand4 < 0:
        raise DomainError("negative radicand; k is too small for this triple")
    return (isqrt(radicand4) - s) // 2


def gamma_k(a: int, b: int, c: int, k: int) -> int:
    """``floor(sqrt(beta*(k + alpha) + alpha^2) - alpha)``."""
    _require_pairwise(a, b, c)
    s, beta = a + b + c, 2 * a * b * c
    return _floor_root_minus_alpha(4 * beta * k + 2 * beta * s + s * s, s)


def delta_k(a: int, b: int, c: int, k: int) -> int:
    """``floor(sqrt(beta*(k - alpha) + alpha^2) - alpha)``."""
    _require_pairwise(a, b, c)
    s, beta = a + b + c, 2 * a * b * c
    return _floor_root_minus_alpha(4 * beta * k - 2 * beta * s + s * s, s)


def _check_threshold(a: int, b: int, c: int, k: int, threshold: Threshold | str) -> int:
    M = threshold_M(a, b, c, threshold)
    if k < M:
        raise PreconditionError(
            f"k={k} is below the threshold M={M} ({Threshold(threshold).value}) "
            f"for ({a}, {b}, {c}); uniqueness is not guaranteed there"
        )
    return M


def classify(a: int, b: int, c: int, k: int, threshold: Threshold | str = Threshold.THEOREM3) -> Category:
    """Category I iff ``gamma_k != delta_k`` and ``gamma_k`` has exactly k solutions."""
    _check_threshold(a, b, c, k, threshold)
    gamma, delta = gamma_k(a, b, c, k), delta_k(a, b, c, k)
    if gamma == delta:
        return Category(CategoryTag.II, Reason.GAMMA_EQUALS_DELTA, gamma, delta)
    found = count(a, b, c, gamma)
    if found == k:
        return Category(CategoryTag.I, Reason.COUNT_MATCH, gamma, delta, found)
    return Category(CategoryTag.II, Reason.COUNT_MISMATCH, gamma, delta, found)


def rk_pairwise(a: int, b: int, c: int, k: int, threshold: Threshold | str = Threshold.THEOREM3) -> RkResult:
    M = _check_threshold(a, b, c, k, threshold)
    cat = classify(a, b, c, k, threshold)
    members = (cat.gamma,) if cat.tag is CategoryTag.I else ()
    return RkResult(k, Regime.PAIRWISE, cat, members, (a, b, c), M)


def rk_setwise(a: int, b: int, c: int, k: int, threshold: Threshold | str = Threshold.THEOREM3) -> RkResult:
    """
    ``R_k`` when ``gcd(a, b, c) == 1``.

    A category-I k yields the ``g1*g2*g3`` numbers
    ``g1*g2*g3*gamma' + a*i1 + b*i2 + c*i3`` with ``0 <= i_j < g_j``,
    where gamma' belongs to the reduced triple. Each is rechecked.
    """
    t = CoinTriple(a, b, c)
    if t.g != 1:
        raise DomainError(f"gcd({a}, {b}, {c}) = {t.g}, expected 1")
    if t.pairwise_coprime:
        return rk_pairwise(a, b, c, k, threshold)
    red = t.reduced()
    inner = rk_pairwise(red.a, red.b, red.c, k, threshold)
    members: tuple[int, ...] = ()
    if inner.category.tag is CategoryTag.I:
        G = t.g1 * t.g2 * t.g3
        base = G * inner.category.gamma
        members = tuple(sorted(
            base + a * i1 + b * i2 + c * i3
            for i1, i2, i3 in itertools.product(range(t.g1), range(t.g2), range(t.g3))
        ))
        for n in members:
            if count(a, b, c, n) != k:
                raise AssertionError(f"member {n} of R_{k}({a}, {b}, {c}) fails recount")
    return RkResult(k, Regime.SETWISE, inner.category, members, inner.reduced, inner.threshold)


def rk_general(a: int, b: int, c: int, k: int, threshold: Threshold | str = Threshold.THEOREM3) -> RkResult:
    """``R_k`` for any positive triple: scale the ``gcd == 1`` answer by the gcd."""
    t = CoinTriple(a, b, c)
    if t.g == 1:
        return rk_setwise(a, b, c, k, threshold)
    if k < 1:
        raise PreconditionError("k must be at least 1")
    low = t.scaled_down()
    inner = rk_setwise(low.a, low.b, low.c, k, threshold)
    members = tuple(t.g * n for n in inner.members)
    return RkResult(k, Regime.GENERAL, inner.category, members, inner.reduced, inner.threshold)


solve_rk = rk_general


def _first_t_above(a: int, b: int, c: int, k: int) -> int:
    # Smallest t whose lower bound t(t+s)/beta - s/2 exceeds k, i.e.
    # 2t(t+s) > beta(2k+s). Every larger t also exceeds k.
    s, beta = a + b + c, 2 * a * b * c
    rhs = beta * (2 * k + s)
    t = max(0, isqrt(rhs // 2 + s * s) - s)
    while t > 0 and 2 * (t - 1) * (t - 1 + s) > rhs:
        t -= 1
    while 2 * t * (t + s) <= rhs:
        t += 1
    return t


def auto_t_max(a: int, b: int, c: int, k: int) -> int:
    """
    A t beyond which no n has exactly k representations.

    Derived from the lower bound on the reduced triple, then mapped back
    through the reduction offsets and the common gcd.
    """
    t = CoinTriple(a, b, c)
    if t.g > 1 and k == 0:
        raise DomainError("R_0 is infinite when gcd(a, b, c) > 1")
    low = t.scaled_down()
    red = low.reduced()
    G = low.g1 * low.g2 * low.g3
    offset = low.a * (low.g1 - 1) + low.b * (low.g2 - 1) + low.c * (low.g3 - 1)
    return t.g * (G * _first_t_above(red.a, red.b, red.c, k) + offset)


def brute_force_rk(a: int, b: int, c: int, k: int, t_max: int | None = None) -> list[int]:
    """All ``t <= t_max`` with exactly k representations, by scanning."""
    if t_max is None:
        t_max = auto_t_max(a, b, c, k)
    return [t for t in range(t_max + 1) if count(a, b, c, t) == k]
