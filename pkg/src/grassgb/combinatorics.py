"""Integer binomial/multinomial coefficients and their parities.

Binomial coefficients follow the falling-factorial convention, so the
upper argument may be any integer (including negative ones).  The parity
routines never build big integers: nonnegative upper arguments go through
Lucas' theorem, negative ones through the reflection identity
binom(a, b) = (-1)^b * binom(b - a - 1, b).
"""

from __future__ import annotations

import math

__all__ = [
    "binom_int",
    "binom_parity",
    "multinomial_parity",
    "p_factor",
    "p_product",
    "tuple_sum",
    "weighted_sum",
    "index_sum",
    "index_weight",
]


def binom_int(alpha: int, beta: int) -> int:
    """Exact binomial coefficient for arbitrary integer arguments."""
    if beta < 0:
        return 0
    if beta == 0:
        return 1
    num = 1
    for i in range(beta):
        num *= alpha - i
    return num // math.factorial(beta)


def binom_parity(alpha: int, beta: int) -> int:
    """binom_int(alpha, beta) mod 2, without big-integer arithmetic."""
    if beta < 0:
        return 0
    if beta == 0:
        return 1
    if alpha < 0:
        # (-1)^beta * binom(beta - alpha - 1, beta); sign is irrelevant mod 2
        alpha = beta - alpha - 1
    # Lucas: odd iff the bits of beta are a subset of the bits of alpha
    return 1 if alpha & beta == beta else 0


def tuple_sum(a: tuple[int, ...]) -> int:
    """Sum of the entries of an exponent tuple A = (a_1, ..., a_k)."""
    return sum(a)


def weighted_sum(a: tuple[int, ...]) -> int:
    """Weighted sum of A: sum of j * a_j with j = 1..k (the cohomological degree)."""
    return sum(j * x for j, x in enumerate(a, start=1))


def index_sum(m: tuple[int, ...]) -> int:
    """Sum of the entries of a multi-index M = (m_2, ..., m_k)."""
    return sum(m)


def index_weight(m: tuple[int, ...]) -> int:
    """Weighted sum of M: sum of (j - 1) * m_j with j = 2..k."""
    return sum(j * x for j, x in enumerate(m, start=1))


def _suffix_sums(entries: tuple[int, ...], length: int) -> list[int]:
    """Suffix sums padded with a trailing zero, suf[i] = sum(entries[i:])."""
    suf = [0] * (length + 1)
    for idx in range(len(entries) - 1, -1, -1):
        suf[idx] = suf[idx + 1] + entries[idx]
    return suf


def multinomial_parity(a: tuple[int, ...]) -> int:
    """Multinomial coefficient [a_1, ..., a_k] mod 2.

    Computed as the product over t = 2..k of the binomial parities of
    binom(a_{t-1} + ... + a_k, a_{t-1}); all entries must be nonnegative.
    """
    if any(x < 0 for x in a):
        raise ValueError("multinomial requires nonnegative entries")
    k = len(a)
    suf = _suffix_sums(a, k)
    for t in range(2, k + 1):
        if not binom_parity(suf[t - 2], a[t - 2]):
            return 0
    return 1


def p_factor(t: int, a: tuple[int, ...], m: tuple[int, ...]) -> int:
    """Parity of binom(sum_{j>=t-1} a_j - sum_{j>=t} m_j, a_{t-1}).

    Entries of ``a`` may be negative (shifted tuples occur in the
    recurrence bookkeeping); 2 <= t <= k is required.
    """
    k = len(a)
    if not 2 <= t <= k:
        raise ValueError(f"t must be in 2..{k}, got {t}")
    upper = sum(a[t - 2 :]) - sum(m[t - 2 :])
    return binom_parity(upper, a[t - 2])


def p_product(a: tuple[int, ...], m: tuple[int, ...]) -> int:
    """Product of p_factor(t, a, m) over t = 2..k."""
    k = len(a)
    asuf = _suffix_sums(a, k)
    msuf = _suffix_sums(m, k)
    for t in range(2, k + 1):
        if not binom_parity(asuf[t - 2] - msuf[t - 2], a[t - 2]):
            return 0
    return 1
