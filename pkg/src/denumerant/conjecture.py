"""
Boundary solutions and the decomposition conjecture.

The conjecture says every solution of ``a*x + b*y + c*z = n`` equals
``s1 - s2 + s3`` for boundary solutions ``s1`` (x = 0), ``s2`` (y = 0)
and ``s3`` (z = 0). It would imply ``count <= 3 * C(Nhat, 3)`` where
``Nhat`` is the total number of boundary solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

from denumerant.bounds import BoundInterval, count_bounds
from denumerant.core import _check_n, _check_positive, count, count_two_var, is_pairwise_coprime
from denumerant.errors import SearchInconclusive

Triple = tuple[int, int, int]

#: Default cap on (s1, s3) pairs examined per target.
DEFAULT_SEARCH_CAP = 10**6


def _two_var_solutions(p: int, q: int, n: int) -> list[tuple[int, int]]:
    # All (u, v) >= 0 with p*u + q*v = n; u only matters mod q // gcd(p, q).
    step = q // gcd(p, q)
    u_max = n // p
    out = []
    for u0 in range(min(step, u_max + 1)):
        if (n - p * u0) % q == 0:
            out.extend((u, (n - p * u) // q) for u in range(u0, u_max + 1, step))
            break
    return out


@dataclass(frozen=True)
class BoundaryProfile:
    s1_list: tuple[Triple, ...]
    s2_list: tuple[Triple, ...]
    s3_list: tuple[Triple, ...]

    @property
    def N1(self) -> int:
        return len(self.s1_list)

    @property
    def N2(self) -> int:
        return len(self.s2_list)

    @property
    def N3(self) -> int:
        return len(self.s3_list)

    @property
    def Nhat(self) -> int:
        return self.N1 + self.N2 + self.N3


def boundary_profile(a: int, b: int, c: int, n: int) -> BoundaryProfile:
    """
    Enumerate the solutions with x = 0, y = 0 and z = 0 respectively.

    A solution with two zero coordinates appears in two lists. Where the
    active pair is coprime the list sizes are checked against
    :func:`count_two_var`.
    """
    _check_positive(a=a, b=b, c=c)
    _check_n(n)
    s1 = tuple((0, y, z) for y, z in _two_var_solutions(b, c, n))
    s2 = tuple((x, 0, z) for x, z in _two_var_solutions(a, c, n))
    s3 = tuple((x, y, 0) for x, y in _two_var_solutions(a, b, n))
    for (p, q), found in (((b, c), s1), ((a, c), s2), ((a, b), s3)):
        if gcd(p, q) == 1 and count_two_var(p, q, n) != len(found):
            raise AssertionError(f"boundary enumeration disagrees with count_two_var for {(p, q, n)}")
    return BoundaryProfile(s1, s2, s3)


def consequence_bound(nhat: int) -> int:
    """``3 * C(nhat, 3)``."""
    if nhat < 0:
        raise ValueError(f"nhat must be non-negative, got {nhat}")
    return 3 * comb(nhat, 3)


def all_solutions(a: int, b: int, c: int, n: int) -> list[Triple]:
    _check_positive(a=a, b=b, c=c)
    _check_n(n)
    return [
        (x, y, z)
        for x in range(n // a + 1)
        for y, z in _two_var_solutions(b, c, n - a * x)
    ]


def decomposition_search(
    a: int,
    b: int,
    c: int,
    n: int,
    target: Triple,
    cap: int = DEFAULT_SEARCH_CAP,
    profile: BoundaryProfile | None = None,
) -> tuple[Triple, Triple, Triple] | None:
    """
    Find boundary solutions with ``s1 - s2 + s3 == target``.

    Returns None when no combination works. Raises
    :class:`SearchInconclusive` if more than ``cap`` pairs ``(s1, s3)``
    would have to be tried.
    """
    x, y, z = target
    if min(target) < 0 or a * x + b * y + c * z != n:
        raise ValueError(f"{target} is not a non-negative solution of {a}x+{b}y+{c}z={n}")
    if profile is None:
        profile = boundary_profile(a, b, c, n)
    if profile.N1 * profile.N3 > cap:
        raise SearchInconclusive(
            f"{profile.N1 * profile.N3} (s1, s3) pairs exceed the search cap {cap}"
        )
    s2_set = set(profile.s2_list)
    for s1 in profile.s1_list:
        for s3 in profile.s3_list:
            s2 = (s1[0] + s3[0] - x, s1[1] + s3[1] - y, s1[2] + s3[2] - z)
            if s2 in s2_set:
                return s1, s2, s3
    return None


@dataclass(frozen=True)
class WitnessSearch:
    """Outcome of running :func:`decomposition_search` on every solution."""

    targets: int
    decomposed: int
    undecomposable: tuple[Triple, ...]


def search_all_targets(
    a: int, b: int, c: int, n: int, cap: int = DEFAULT_SEARCH_CAP
) -> WitnessSearch:
    profile = boundary_profile(a, b, c, n)
    sols = all_solutions(a, b, c, n)
    bad = tuple(
        t for t in sols if decomposition_search(a, b, c, n, t, cap, profile) is None
    )
    return WitnessSearch(len(sols), len(sols) - len(bad), bad)


@dataclass(frozen=True)
class CounterexampleReport:
    profile: BoundaryProfile
    consequence_bound: int
    #: None when the coefficients are not pairwise coprime.
    bound_interval: BoundInterval | None
    exact_count: int
    #: Populated only when the exhaustive witness search was requested.
    decomposition_witness: WitnessSearch | None = None

    @property
    def conjecture_consequence_holds(self) -> bool:
        return self.exact_count <= self.consequence_bound

    @property
    def refuted(self) -> bool:
        if not self.conjecture_consequence_holds:
            return True
        return bool(self.decomposition_witness and self.decomposition_witness.undecomposable)


def check_counterexample(
    a: int,
    b: int,
    c: int,
    n: int,
    search_witnesses: bool = False,
    cap: int = DEFAULT_SEARCH_CAP,
) -> CounterexampleReport:
    profile = boundary_profile(a, b, c, n)
    interval = count_bounds(a, b, c, n) if is_pairwise_coprime(a, b, c) else None
    witnesses = search_all_targets(a, b, c, n, cap) if search_witnesses else None
    return CounterexampleReport(
        profile,
        consequence_bound(profile.Nhat),
        interval,
        count(a, b, c, n),
        witnesses,
    )
