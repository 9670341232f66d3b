"""Pearson codes: exact counts, codebook construction and verification,
Pearson/Euclidean detection, and a gain/offset/noise channel simulator."""

from ._pearsoncodes import (
    __version__,
    canonicalize,
    count_pearson,
    count_pearson_recursive,
    count_t_constrained,
    detect,
    enumerate_pearson,
    enumerate_t_constrained,
    mobius,
    pearson_distance,
    redundancy,
    simulate,
    totient,
    verify_codebook,
)

__all__ = [
    "__version__",
    "canonicalize",
    "count_pearson",
    "count_pearson_recursive",
    "count_t_constrained",
    "detect",
    "enumerate_pearson",
    "enumerate_t_constrained",
    "mobius",
    "pearson_distance",
    "redundancy",
    "simulate",
    "totient",
    "verify_codebook",
]
