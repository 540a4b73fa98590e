"""Sparse Laurent polynomials in one variable ``v`` with integer coefficients.

Characters of SL2 representations live here: ``ch W = sum_i dim(W_i) v^i``.
Coefficients are Python ints, so nothing overflows; ``(v + v^-1)^1000`` has
coefficients around ``2^996`` and is handled exactly.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator, Mapping

from .errors import DomainError


class LaurentPolynomial:
    """Immutable map ``exponent -> coefficient`` with zero coefficients dropped."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: dict[int, int]) -> LaurentPolynomial:
        # caller guarantees no zero coefficients and gives up ownership of `terms`
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPolynomial:
        return cls._from_clean({exponent: coefficient} if coefficient else {})

    @classmethod
    def constant(cls, c: int) -> LaurentPolynomial:
        return cls.monomial(0, c)

    # -- inspection -------------------------------------------------------

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def terms(self) -> dict[int, int]:
        """A copy of the term map."""
        return dict(self._terms)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def degree(self) -> int:
        if not self._terms:
            raise DomainError("degree of the zero polynomial")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise DomainError("valuation of the zero polynomial")
        return min(self._terms)

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())

    def leading_term(self) -> tuple[int, int] | None:
        if not self._terms:
            return None
        e = max(self._terms)
        return e, self._terms[e]

    def is_symmetric(self) -> bool:
        """True iff coeff(d) == coeff(-d) for every d."""
        t = self._terms
        return all(t.get(-e) == c for e, c in t.items())

    def to_pairs(self) -> list[tuple[int, int]]:
        """Exponent-descending ``(exponent, coefficient)`` pairs, for serialization."""
        return list(self)

    # -- arithmetic -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial._from_clean({e: -c for e, c in self._terms.items()})

    def __add__(self, other: LaurentPolynomial | int) -> LaurentPolynomial:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return LaurentPolynomial._from_clean(acc)

    __radd__ = __add__

    def __sub__(self, other: LaurentPolynomial | int) -> LaurentPolynomial:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPolynomial:
        return LaurentPolynomial.constant(other) - self

    def __mul__(self, other: LaurentPolynomial | int) -> LaurentPolynomial:
        if isinstance(other, int):
            if not other:
                return LaurentPolynomial()
            return LaurentPolynomial._from_clean({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPolynomial:
        if n < 0:
            raise DomainError("negative powers are not supported")
        result = LaurentPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self:
            if e == 0:
                parts.append(str(c))
            else:
                mono = "v" if e == 1 else f"v^{e}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def multiply(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    if len(f) < len(g):
        f, g = g, f
    acc: dict[int, int] = {}
    for eg, cg in g._terms.items():
        for ef, cf in f._terms.items():
            e = ef + eg
            acc[e] = acc.get(e, 0) + cf * cg
    return LaurentPolynomial._from_clean({e: c for e, c in acc.items() if c})


def bracket(b: int, a: int = 1) -> LaurentPolynomial:
    """The quantum integer ``[b]_x`` at ``x = v^a``.

    Returns ``v^{-a(b-1)} + v^{-a(b-3)} + ... + v^{a(b-1)}``.
    """
    if b <= 0:
        raise DomainError(f"bracket needs b >= 1, got {b}")
    if a == 0:
        raise DomainError("bracket needs a nonzero exponent scale a")
    return LaurentPolynomial._from_clean({a * k: 1 for k in range(-(b - 1), b, 2)})


def binomial_power(n: int) -> LaurentPolynomial:
    """``(v + v^-1)^n`` built directly from binomial coefficients."""
    if n < 0:
        raise DomainError(f"exponent must be nonnegative, got {n}")
    return LaurentPolynomial._from_clean({n - 2 * k: comb(n, k) for k in range(n + 1)})


def evaluate_at_one(f: LaurentPolynomial) -> int:
    return f.evaluate_at_one()


def leading_term(f: LaurentPolynomial) -> tuple[int, int] | None:
    return f.leading_term()
