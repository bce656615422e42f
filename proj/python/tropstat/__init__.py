"""Zeros of random tropical polynomials, hull partitions and renewal limits."""

import json
from fractions import Fraction

from ._core import (
    compositions,
    constants,
    couple_check,
    crp_sample,
    i0_cdf,
    i_s_cdf,
    index_partition,
    ks_normal,
    lower_hull,
    ppp_sample,
    renewal_count,
    sample_zn,
    sieve_sample,
    slope_regression,
    walk_count,
    zero_count,
    zeros,
)
from . import _core


def exact_pn(composition):
    num, den = _core._exact_pn(list(composition))
    return Fraction(int(num), int(den))


def exact_pkn_row(n):
    return [Fraction(int(p), int(q)) for p, q in _core._exact_pkn_row(n)]


def exact_pkn(n, k):
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return exact_pkn_row(n)[k]


def clt_report(dist, a, n_grid, trials, seed, threads=1):
    return json.loads(_core._clt_report(dist, a, n_grid, trials, seed, threads))


__all__ = [
    "clt_report",
    "compositions",
    "constants",
    "couple_check",
    "crp_sample",
    "exact_pkn",
    "exact_pkn_row",
    "exact_pn",
    "i0_cdf",
    "i_s_cdf",
    "index_partition",
    "ks_normal",
    "lower_hull",
    "ppp_sample",
    "renewal_count",
    "sample_zn",
    "sieve_sample",
    "slope_regression",
    "walk_count",
    "zero_count",
    "zeros",
]
