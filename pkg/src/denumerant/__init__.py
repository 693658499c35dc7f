"""Exact counting of non-negative solutions of ``a*x + b*y + c*z = n``."""

from denumerant.bounds import BoundInterval, count_bounds
from denumerant.core import (
    CoinTriple,
    count,
    count_pairwise_coprime,
    count_sawtooth,
    count_two_var,
    reduce_instance,
    residue_params,
)
from denumerant.errors import DomainError, PreconditionError, SearchInconclusive
from denumerant.rk import classify, rk_general, rk_pairwise, rk_setwise, solve_rk, threshold_M

__all__ = [
    "BoundInterval",
    "CoinTriple",
    "DomainError",
    "PreconditionError",
    "SearchInconclusive",
    "classify",
    "count",
    "count_bounds",
    "count_pairwise_coprime",
    "count_sawtooth",
    "count_two_var",
    "reduce_instance",
    "residue_params",
    "rk_general",
    "rk_pairwise",
    "rk_setwise",
    "solve_rk",
    "threshold_M",
]
