"""Dual Stiefel-Whitney classes as polynomials in w_1, ..., w_k.

Two independent constructions of the same class: the recurrence coming
from (1 + w_1 + ... + w_k)(1 + wbar_1 + wbar_2 + ...) = 1, and the
explicit sum over exponent vectors with odd multinomial coefficient.
"""

from __future__ import annotations

from functools import lru_cache

from .combinatorics import multinomial_parity
from .f2poly import Poly, monomials_of_weighted_degree

__all__ = ["wbar_recurrence", "wbar_explicit"]


def _validate(r: int, k: int) -> None:
    if r < 1:
        raise ValueError(f"degree must be >= 1, got {r}")
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")


@lru_cache(maxsize=None)
def _wbar_rec(r: int, k: int) -> Poly:
    if r == 0:
        return Poly.one(k)
    acc = Poly.zero(k)
    for i in range(1, min(r, k) + 1):
        acc = acc + Poly.variable(k, i) * _wbar_rec(r - i, k)
    return acc


def wbar_recurrence(r: int, k: int) -> Poly:
    """wbar_r via wbar_r = sum_{i=1}^{min(r,k)} w_i * wbar_{r-i}, wbar_0 = 1."""
    _validate(r, k)
    # unroll so deep recursion never hits the interpreter limit
    for d in range(r + 1):
        _wbar_rec(d, k)
    return _wbar_rec(r, k)


def wbar_explicit(r: int, k: int) -> Poly:
    """wbar_r as the sum of W^A over weighted degree r with odd multinomial."""
    _validate(r, k)
    terms = frozenset(
        a for a in monomials_of_weighted_degree(r, k) if multinomial_parity(a)
    )
    return Poly._make(k, terms)
