"""Normal-form arithmetic in the cohomology ring of the Grassmannian.

Because the leading terms of the structured basis are exactly the
monomials of exponent sum n+1, a reducible term locates its divisor in
O(k): strip the excess exponent sum from the left and read off the
multi-index.  The resulting remainder is supported on the standard
monomials (exponent sum <= n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .f2poly import Monomial, Poly, grlex_key
from .groebner_family import GrassmannContext, GroebnerFamily

__all__ = [
    "CohomologyClass",
    "normal_form",
    "is_zero",
    "cup",
    "standard_basis",
]

# maps a reducible monomial to the multi-index of the chosen divisor
DivisorChooser = Callable[[GrassmannContext, GroebnerFamily, Monomial], tuple[int, ...]]


@dataclass(frozen=True)
class CohomologyClass:
    """A polynomial in normal form: every term has exponent sum <= n."""

    context: GrassmannContext
    value: Poly

    def __post_init__(self):
        if self.value.k != self.context.k:
            raise ValueError("variable count does not match the context")
        bad = [t for t in self.value.terms if sum(t) > self.context.n]
        if bad:
            raise ValueError(f"not in normal form, offending terms: {bad}")

    def __bool__(self) -> bool:
        return bool(self.value)

    def __str__(self) -> str:
        return str(self.value)


def structured_divisor(
    ctx: GrassmannContext, family: GroebnerFamily, term: Monomial
) -> tuple[int, ...]:
    """Divisor lookup without search: decrement exponents from the left
    until the sum is n+1; the tail of the result is the multi-index."""
    excess = sum(term) - (ctx.n + 1)
    b = list(term)
    for idx in range(ctx.k):
        take = b[idx] if b[idx] < excess else excess
        b[idx] -= take
        excess -= take
        if not excess:
            break
    return tuple(b[1:])


def normal_form(
    ctx: GrassmannContext,
    f: Poly,
    family: Optional[GroebnerFamily] = None,
    choose_divisor: DivisorChooser = structured_divisor,
) -> CohomologyClass:
    """The unique remainder of f modulo the basis: f minus an ideal element,
    with no term of exponent sum > n."""
    if f.k != ctx.k:
        raise ValueError("variable count does not match the context")
    if family is None:
        family = GroebnerFamily(ctx)
    n = ctx.n
    work = set(f.terms)
    while True:
        reducible = [t for t in work if sum(t) > n]
        if not reducible:
            break
        t = max(reducible, key=grlex_key)
        m = choose_divisor(ctx, family, t)
        g = family.element(m)
        lt = family.leading_term(m)
        q = tuple(a - b for a, b in zip(t, lt))
        work.symmetric_difference_update(
            tuple(map(sum, zip(term, q))) for term in g.terms
        )
    return CohomologyClass(ctx, Poly._make(ctx.k, frozenset(work)))


def is_zero(
    ctx: GrassmannContext, f: Poly, family: Optional[GroebnerFamily] = None
) -> bool:
    """Ideal membership: True iff the normal form of f vanishes."""
    return not normal_form(ctx, f, family)


def cup(
    ctx: GrassmannContext,
    a: CohomologyClass,
    b: CohomologyClass,
    family: Optional[GroebnerFamily] = None,
) -> CohomologyClass:
    """Cup product: polynomial product followed by reduction."""
    if a.context != ctx or b.context != ctx:
        raise ValueError("cohomology classes belong to a different context")
    return normal_form(ctx, a.value * b.value, family)


def _tuples_with_sum_at_most(k: int, bound: int):
    if k == 0:
        yield ()
        return
    for head in range(bound + 1):
        for tail in _tuples_with_sum_at_most(k - 1, bound - head):
            yield (head,) + tail


def standard_basis(ctx: GrassmannContext) -> list[Monomial]:
    """All monomials of exponent sum <= n, in increasing grlex order."""
    monos = list(_tuples_with_sum_at_most(ctx.k, ctx.n))
    monos.sort(key=grlex_key)
    return monos
