"""Sparse polynomials over F2 in variables w_1 > w_2 > ... > w_k, grlex order.

A monomial is a tuple of k nonnegative exponents; a polynomial is a
frozenset of such tuples (every present monomial has coefficient 1).
Addition is symmetric difference, so the zero polynomial is the empty set.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

__all__ = [
    "Poly",
    "ParseError",
    "grlex_key",
    "grlex_compare",
    "weighted_degree",
    "monomials_of_weighted_degree",
    "parse",
    "format_poly",
]

MAX_EXPONENT = 2**31 - 1

Monomial = tuple[int, ...]


def grlex_key(mono: Monomial):
    """Sort key realizing grlex with w_1 > w_2 > ... > w_k."""
    return (sum(mono), mono)


def grlex_compare(a: Monomial, b: Monomial) -> int:
    """Three-way grlex comparison: -1 if a < b, 0 if equal, 1 if a > b."""
    if len(a) != len(b):
        raise ValueError("monomials have different variable counts")
    ka, kb = grlex_key(a), grlex_key(b)
    return (ka > kb) - (ka < kb)


def weighted_degree(mono: Monomial) -> int:
    """Cohomological degree sum j * a_j (w_j has degree j)."""
    return sum(j * a for j, a in enumerate(mono, start=1))


@lru_cache(maxsize=None)
def monomials_of_weighted_degree(d: int, k: int) -> tuple[Monomial, ...]:
    """All exponent tuples of length k with weighted degree exactly d."""
    if d < 0:
        return ()
    if k == 1:
        return ((d,),)
    out = []
    for a in range(d // k + 1):
        for rest in monomials_of_weighted_degree(d - k * a, k - 1):
            out.append(rest + (a,))
    return tuple(out)


class Poly:
    """Immutable F2 polynomial: a frozenset of exponent tuples plus k."""

    __slots__ = ("k", "terms", "_hash")

    def __init__(self, k: int, terms: Iterable[Monomial] = ()):
        if k < 1:
            raise ValueError("need at least one variable")
        seen: set[Monomial] = set()
        for t in terms:
            t = tuple(t)
            if len(t) != k:
                raise ValueError(f"monomial {t} does not have {k} exponents")
            if any(e < 0 for e in t):
                raise ValueError(f"negative exponent in {t}")
            seen.symmetric_difference_update((t,))
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "terms", frozenset(seen))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _make(cls, k: int, terms: frozenset) -> "Poly":
        # trusted fast path: terms must already be a canonical frozenset
        self = object.__new__(cls)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, k: int) -> "Poly":
        return cls._make(k, frozenset())

    @classmethod
    def one(cls, k: int) -> "Poly":
        return cls._make(k, frozenset(((0,) * k,)))

    @classmethod
    def variable(cls, k: int, j: int) -> "Poly":
        """The generator w_j, 1 <= j <= k."""
        if not 1 <= j <= k:
            raise ValueError(f"variable index {j} out of 1..{k}")
        mono = tuple(1 if i == j - 1 else 0 for i in range(k))
        return cls._make(k, frozenset((mono,)))

    @classmethod
    def monomial(cls, exponents: Iterable[int]) -> "Poly":
        exps = tuple(exponents)
        return cls(len(exps), (exps,))

    # -- basic protocol ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.k == other.k
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.k, self.terms))
            object.__setattr__(self, "_hash", h)
        return h

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"Poly(k={self.k}, {format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if self.k != other.k:
            raise ValueError(f"variable counts differ: {self.k} != {other.k}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_compatible(other)
        return Poly._make(self.k, self.terms ^ other.terms)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_compatible(other)
        out: set[Monomial] = set()
        toggle = out.symmetric_difference_update
        for a in self.terms:
            for b in other.terms:
                toggle((tuple(map(sum, zip(a, b))),))
        for t in out:
            if any(e > MAX_EXPONENT for e in t):
                raise OverflowError(f"exponent overflow in product term {t}")
        return Poly._make(self.k, frozenset(out))

    def square(self) -> "Poly":
        """Frobenius: squaring doubles every exponent over F2."""
        terms = frozenset(tuple(2 * e for e in t) for t in self.terms)
        for t in terms:
            if any(e > MAX_EXPONENT for e in t):
                raise OverflowError(f"exponent overflow in {t}")
        return Poly._make(self.k, terms)

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        result = Poly.one(self.k)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base.square()
            e >>= 1
        return result

    # -- structure ---------------------------------------------------------

    def leading_term(self) -> Monomial:
        """The grlex-maximal monomial; raises on the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=grlex_key)

    def weighted_components(self) -> dict[int, "Poly"]:
        """Split into homogeneous parts keyed by weighted degree."""
        buckets: dict[int, set[Monomial]] = {}
        for t in self.terms:
            buckets.setdefault(weighted_degree(t), set()).add(t)
        return {
            d: Poly._make(self.k, frozenset(ts)) for d, ts in sorted(buckets.items())
        }


# -- text format -----------------------------------------------------------


class ParseError(ValueError):
    """Syntax error in polynomial text, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Parser:
    def __init__(self, text: str, k: int):
        self.text = text
        self.k = k
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def read_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a number")
        return int(self.text[start : self.pos])

    def parse(self) -> Poly:
        self.skip_ws()
        if self.peek() == "0":
            mark = self.pos
            self.pos += 1
            self.skip_ws()
            if self.pos == len(self.text):
                return Poly.zero(self.k)
            self.pos = mark
            raise self.error("'0' must stand alone")
        terms = [self.parse_term()]
        self.skip_ws()
        while self.pos < len(self.text):
            if self.peek() != "+":
                raise self.error("expected '+'")
            self.pos += 1
            self.skip_ws()
            terms.append(self.parse_term())
            self.skip_ws()
        return Poly(self.k, terms)

    def parse_term(self) -> Monomial:
        if self.peek() == "1":
            self.pos += 1
            return (0,) * self.k
        exps = [0] * self.k
        self.parse_factor(exps)
        while self.peek() == "*":
            self.pos += 1
            self.parse_factor(exps)
        return tuple(exps)

    def parse_factor(self, exps: list[int]) -> None:
        if self.peek() != "w":
            raise self.error("expected a factor 'w<index>'")
        self.pos += 1
        idx_pos = self.pos
        index = self.read_int()
        if not 1 <= index <= self.k:
            self.pos = idx_pos
            raise self.error(f"variable index {index} out of 1..{self.k}")
        exp = 1
        if self.peek() == "^":
            self.pos += 1
            exp_pos = self.pos
            exp = self.read_int()
            if exp < 1:
                self.pos = exp_pos
                raise self.error("exponent must be >= 1")
            if exp > MAX_EXPONENT:
                self.pos = exp_pos
                raise self.error("exponent overflow")
        exps[index - 1] += exp
        if exps[index - 1] > MAX_EXPONENT:
            raise self.error("exponent overflow")


def parse(text: str, k: int) -> Poly:
    """Parse 'w1^2*w2 + w2^2' style text into a polynomial in k variables."""
    return _Parser(text, k).parse()


def _format_monomial(mono: Monomial) -> str:
    factors = []
    for j, e in enumerate(mono, start=1):
        if e == 1:
            factors.append(f"w{j}")
        elif e > 1:
            factors.append(f"w{j}^{e}")
    return "*".join(factors) if factors else "1"


def format_poly(f: Poly) -> str:
    """Canonical text: terms in strictly decreasing grlex order."""
    if not f.terms:
        return "0"
    ordered = sorted(f.terms, key=grlex_key, reverse=True)
    return " + ".join(_format_monomial(t) for t in ordered)
