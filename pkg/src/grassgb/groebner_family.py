"""The structured Groebner basis {g_M : S_M <= n+1} for the relation ideal.

Every basis element is indexed by a (k-1)-tuple M = (m_2, ..., m_k) of
nonnegative integers and produced by the direct coefficient formula

    g_M = sum of W^A over nonnegative A with weighted degree n+1+S'_M
          and odd coefficient product P(A, M).

Closed forms exist for indices with m_k close to n, and a three-term
recurrence relates elements at neighboring indices; both are exposed for
cross-validation against the direct formula.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional

from .combinatorics import binom_parity, index_sum, index_weight
from .f2poly import Monomial, Poly, monomials_of_weighted_degree

__all__ = [
    "GrassmannContext",
    "GroebnerFamily",
    "g_direct",
    "g_closed_form",
    "g_recurrence_step",
    "build_family",
    "leading_term_of",
    "raised",
    "raised2",
]

MultiIndex = tuple[int, ...]


@dataclass(frozen=True)
class GrassmannContext:
    """Parameters (k, n) of the Grassmannian, with n >= k >= 2."""

    k: int
    n: int

    def __post_init__(self):
        if not self.n >= self.k >= 2:
            raise ValueError(f"need n >= k >= 2, got k={self.k}, n={self.n}")


def _check_index(ctx: GrassmannContext, m: MultiIndex) -> None:
    if len(m) != ctx.k - 1:
        raise ValueError(f"multi-index must have {ctx.k - 1} entries, got {m}")
    if any(x < 0 for x in m):
        raise ValueError(f"multi-index entries must be nonnegative: {m}")


def raised(m: MultiIndex, i: int) -> MultiIndex:
    """M^i: add 1 to the i-th coordinate; identity when i < 1."""
    if i < 1:
        return m
    out = list(m)
    out[i - 1] += 1
    return tuple(out)


def raised2(m: MultiIndex, i: int, j: int) -> MultiIndex:
    """M^{i,j}: add 1 to the i-th and j-th coordinates; M^j when i < 1."""
    if i < 1:
        return raised(m, j)
    out = list(m)
    out[i - 1] += 1
    out[j - 1] += 1
    return tuple(out)


def leading_term_of(ctx: GrassmannContext, m: MultiIndex) -> Monomial:
    """The grlex leading monomial (n+1-S_M, m_2, ..., m_k) of g_M."""
    _check_index(ctx, m)
    s = index_sum(m)
    if s > ctx.n + 1:
        raise ValueError(f"S_M = {s} exceeds n+1 = {ctx.n + 1}")
    return (ctx.n + 1 - s,) + tuple(m)


@lru_cache(maxsize=None)
def _g_direct_cached(k: int, n: int, m: MultiIndex) -> Poly:
    target = n + 1 + index_weight(m)
    # suffix sums of M, padded so msuf[k-1] = 0
    msuf = [0] * k
    for idx in range(k - 2, -1, -1):
        msuf[idx] = msuf[idx + 1] + m[idx]
    terms = []
    for a in monomials_of_weighted_degree(target, k):
        suffix = 0
        keep = True
        for t in range(k, 1, -1):
            suffix += a[t - 1]
            if not binom_parity(suffix + a[t - 2] - msuf[t - 2], a[t - 2]):
                keep = False
                break
        if keep:
            terms.append(a)
    return Poly._make(k, frozenset(terms))


def g_direct(ctx: GrassmannContext, m: MultiIndex) -> Poly:
    """g_M by the defining sum; valid for every nonnegative multi-index."""
    _check_index(ctx, m)
    return _g_direct_cached(ctx.k, ctx.n, tuple(m))


def g_closed_form(ctx: GrassmannContext, m: MultiIndex) -> Optional[Poly]:
    """g_M without enumeration, for the index shapes that admit one.

    Covered: single-monomial indices (S'_M > (k-1)n - 1 with S_M <= n+1)
    and the two-term elements with m_k = n-1.  Returns None otherwise.
    """
    _check_index(ctx, m)
    k, n = ctx.k, ctx.n
    if index_sum(m) <= n + 1 and index_weight(m) > (k - 1) * n - 1:
        return Poly.monomial(leading_term_of(ctx, m))
    if m[-1] == n - 1:
        head, mk = m[:-1], m[-1]
        wk_pow = tuple(0 for _ in range(k - 1)) + (n - 1,)
        if all(x == 0 for x in head):
            # (0,...,0,n-1): w1^2 wk^{n-1} + w2 wk^{n-1}
            t1 = list(wk_pow)
            t1[0] += 2
            t2 = list(wk_pow)
            t2[1] += 1
            return Poly(k, (tuple(t1), tuple(t2)))
        if sum(head) == 1:
            s = head.index(1) + 1  # raised coordinate, 1-based; m_{s+1} = 1
            if 1 <= s <= k - 2:
                # w1 w_{s+1} wk^{n-1} + w_{s+2} wk^{n-1}
                t1 = list(wk_pow)
                t1[0] += 1
                t1[s] += 1
                t2 = list(wk_pow)
                t2[s + 1] += 1
                return Poly(k, (tuple(t1), tuple(t2)))
    return None


def g_recurrence_step(
    ctx: GrassmannContext,
    m: MultiIndex,
    i: int,
    j: int,
    lookup: Callable[[MultiIndex], Poly],
) -> Poly:
    """Assemble g_{M^{i,j}} = w_i g_{M^j} + w_{j+1} g_{M^{i-1}} + g_{M^{i-1,j+1}}.

    The third summand is absent when j = k-1; ``lookup`` supplies the
    right-hand-side polynomials.
    """
    _check_index(ctx, m)
    k = ctx.k
    if not 1 <= i <= j <= k - 1:
        raise ValueError(f"need 1 <= i <= j <= {k - 1}, got i={i}, j={j}")
    out = Poly.variable(k, i) * lookup(raised(m, j))
    out = out + Poly.variable(k, j + 1) * lookup(raised(m, i - 1))
    if j < k - 1:
        out = out + lookup(raised2(m, i - 1, j + 1))
    return out


def _indices_up_to(k: int, bound: int) -> Iterator[MultiIndex]:
    """All (k-1)-tuples with entry sum <= bound, increasing lex-from-the-right."""
    everything = (
        m
        for m in itertools.product(range(bound + 1), repeat=k - 1)
        if sum(m) <= bound
    )
    return iter(sorted(everything, key=lambda m: m[::-1]))


class GroebnerFamily:
    """Lazy view of the basis {g_M : S_M <= n+1} with cached elements.

    Elements are computed by g_direct on first access, so reductions at
    large n only ever materialize the indices they touch.
    """

    def __init__(self, context: GrassmannContext):
        self.context = context

    def __len__(self) -> int:
        k, n = self.context.k, self.context.n
        return math.comb(n + k, k - 1)

    def multi_indices(self) -> Iterator[MultiIndex]:
        return _indices_up_to(self.context.k, self.context.n + 1)

    def element(self, m: MultiIndex) -> Poly:
        return g_direct(self.context, tuple(m))

    def leading_term(self, m: MultiIndex) -> Monomial:
        return leading_term_of(self.context, m)

    def items(self) -> Iterator[tuple[MultiIndex, Poly]]:
        for m in self.multi_indices():
            yield m, self.element(m)

    def polynomials(self) -> list[Poly]:
        return [g for _, g in self.items()]


def build_family(ctx: GrassmannContext) -> GroebnerFamily:
    """Materialize the whole family for the given context."""
    family = GroebnerFamily(ctx)
    for m in family.multi_indices():
        family.element(m)
    return family
