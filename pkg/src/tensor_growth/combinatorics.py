"""Partitions, hooks, cores, digit expansions and the special weights used in
the growth arguments (Steinberg partitions, the super-core ``kappa``).
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Iterator, Union

from .errors import DomainError, InvariantViolation


@functools.total_ordering
class _Infinity:
    """The point at infinity of the extended naturals. Use the singleton ``INF``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"

    __str__ = __repr__

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __hash__(self) -> int:
        return hash("tensor_growth.INF")

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

ExtNat = Union[int, _Infinity]


def is_inf(x: object) -> bool:
    return x is INF


def parse_extnat(token: str | int | _Infinity) -> ExtNat:
    """Parse ``"inf"`` (any case, also ``"∞"``) or a decimal integer."""
    if token is INF or isinstance(token, int):
        return token
    t = token.strip().lower()
    if t in ("inf", "infinity", "∞"):
        return INF
    try:
        return int(t)
    except ValueError:
        raise DomainError(f"expected an integer or 'inf', got {token!r}") from None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _ensure_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise DomainError(f"p must be a prime, got {p!r}")


# --------------------------------------------------------------------------
# Mixed characteristic


class Regime(enum.Enum):
    SEMISIMPLE = "semisimple"            # (p, inf), any p
    COMPLEX_QUANTUM = "complex-quantum"  # (inf, l), l finite
    STRICTLY_MIXED = "strictly-mixed"    # p, l finite, p != l
    CLASSICAL_P = "classical-p"          # p == l finite


@dataclass(frozen=True)
class MixedCharacteristic:
    """The pair (p, l): additive order of 1 and of q^2.

    Classical characteristic p is ``(p, p)``; classical characteristic zero is
    ``(INF, INF)``.
    """

    p: ExtNat
    ell: ExtNat

    def __post_init__(self):
        if self.p is not INF:
            _ensure_prime(self.p)
        if self.ell is not INF and (not isinstance(self.ell, int) or self.ell < 2):
            raise DomainError(f"l must be an integer >= 2 or inf, got {self.ell!r}")

    @classmethod
    def classical(cls, p: ExtNat) -> MixedCharacteristic:
        return cls(p, p)

    @classmethod
    def parse(cls, p: str | ExtNat, ell: str | ExtNat | None = None) -> MixedCharacteristic:
        pp = parse_extnat(p)
        return cls(pp, pp if ell is None else parse_extnat(ell))

    @property
    def regime(self) -> Regime:
        if self.ell is INF:
            return Regime.SEMISIMPLE
        if self.p is INF:
            return Regime.COMPLEX_QUANTUM
        if self.p != self.ell:
            return Regime.STRICTLY_MIXED
        return Regime.CLASSICAL_P

    def place_value(self, i: int) -> ExtNat:
        """``p^(0) = 1`` and ``p^(i) = p^(i-1) * l`` for ``i > 0``."""
        if i == 0:
            return 1
        if self.ell is INF or (self.p is INF and i > 1):
            return INF
        if self.p is INF:
            return self.ell
        return self.p ** (i - 1) * self.ell

    def __str__(self) -> str:
        return f"({self.p},{self.ell})"


# --------------------------------------------------------------------------
# Digit expansions


def padic_digits(x: int, p: ExtNat) -> tuple[int, ...]:
    """Base-p digits of x, most significant first. For ``p = INF`` this is ``(x,)``."""
    if x <= 0:
        raise DomainError(f"digit expansion needs x >= 1, got {x}")
    if p is INF:
        return (x,)
    _ensure_prime(p)
    out = []
    while x:
        x, a = divmod(x, p)
        out.append(a)
    return tuple(reversed(out))


def mixed_expansion(x: int, mc: MixedCharacteristic) -> list[tuple[int, int]]:
    """The (p, l)-adic expansion of x as ``[(digit, place_value), ...]``, top first.

    Digit 0 lives in ``{0..l-1}``, higher digits in ``{0..p-1}``. Every place
    value returned is finite; the top digit absorbs everything above the last
    finite place.
    """
    if x <= 0:
        raise DomainError(f"digit expansion needs x >= 1, got {x}")
    out = []
    i = 0
    while x:
        nxt = mc.place_value(i + 1)
        place = mc.place_value(i)
        if nxt is INF:
            out.append((x // place, place))
            break
        out.append(((x % nxt) // place, place))
        x -= x % nxt
        i += 1
    return list(reversed(out))


def mixed_digits(x: int, mc: MixedCharacteristic) -> tuple[int, ...]:
    return tuple(a for a, _ in mixed_expansion(x, mc))


# --------------------------------------------------------------------------
# Partitions


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros given to the constructor are stripped, so GL-style weights
    such as ``(2, 1, 0)`` are accepted and become ``(2, 1)``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise DomainError(f"parts must be weakly decreasing: {parts}")
        if any((not isinstance(a, int)) or a <= 0 for a in parts):
            raise DomainError(f"parts must be positive integers: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for a in self if a > j) for j in range(self[0]))

    def padded(self, length: int) -> tuple[int, ...]:
        if len(self) > length:
            raise DomainError(f"{self} has more than {length} parts")
        return tuple(self) + (0,) * (length - len(self))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, a in enumerate(self):
            for j in range(a):
                yield i, j

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def partitions(n: int, max_rows: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order, optionally bounded."""
    if n < 0:
        return
    rows = n if max_rows is None else max_rows
    top = n if max_part is None else max_part

    def rec(rest: int, bound: int, slots: int, prefix: list[int]):
        if rest == 0:
            yield Partition(prefix)
            return
        if slots == 0:
            return
        for a in range(min(rest, bound), 0, -1):
            prefix.append(a)
            yield from rec(rest - a, a, slots - 1, prefix)
            prefix.pop()

    yield from rec(n, top, rows, [])


def hook_lengths(lam: Iterable[int]) -> list[int]:
    """Hook lengths of every cell, row by row."""
    lam = Partition(lam)
    conj = lam.conjugate()
    return [lam[i] - j + conj[j] - i - 1 for i, j in lam.cells()]


def num_standard_tableaux(lam: Iterable[int]) -> int:
    lam = Partition(lam)
    return factorial(lam.size) // prod(hook_lengths(lam))


def is_p_core(lam: Iterable[int], p: int) -> bool:
    _ensure_prime(p)
    return all(h % p for h in hook_lengths(lam))


def is_p_regular(lam: Iterable[int], p: ExtNat) -> bool:
    """No part value occurs p or more times."""
    if p is INF:
        return True
    lam = Partition(lam)
    run = 0
    prev = None
    for a in lam:
        run = run + 1 if a == prev else 1
        prev = a
        if run >= p:
            return False
    return True


# --------------------------------------------------------------------------
# Weights


def rho_vector(M: int) -> tuple[Fraction, ...]:
    """``((M-1)/2, (M-3)/2, ..., (1-M)/2)``; the GL_M lift of rho used for Steinberg weights."""
    if M < 2:
        raise DomainError(f"rho_vector needs M >= 2, got {M}")
    return tuple(Fraction(M - 1 - 2 * i, 2) for i in range(M))


def steinberg_partition(n: int, M: int, p: int, r: int) -> Partition:
    """``n/M (1,...,1) + (p^r - 1) rho`` as a partition.

    Requires M odd, M | n and ``(p^r - 1)(M - 1)/2 <= n/M``.
    """
    _ensure_prime(p)
    if M < 1 or M % 2 == 0:
        raise DomainError(f"steinberg_partition: M must be odd, got M={M}")
    if r < 1:
        raise DomainError(f"steinberg_partition: r must be positive, got r={r}")
    if n % M:
        raise DomainError(f"steinberg_partition: M={M} must divide n={n}")
    step = p ** r - 1
    if step * (M - 1) // 2 > n // M:
        raise DomainError(
            f"steinberg_partition: constraint (p^r-1)(M-1)/2 <= n/M fails "
            f"({step * (M - 1) // 2} > {n // M})"
        )
    if M == 1:
        return Partition([n] if n else [])
    parts = [n // M + step * rho for rho in rho_vector(M)]
    # M odd so every rho_i is an integer
    return Partition(int(x) for x in parts)


def kappa_partition(M: int, N: int, p: int) -> tuple[Partition, Partition, Partition]:
    """The weights ``alpha``, ``nu`` and the p-core ``kappa = alpha nu^t`` for GL(M|N).

    ``alpha_i = N + (p-1)(M-i)`` for ``1 <= i <= M`` and ``nu_j = (p-1)(N-j)``
    for ``1 <= j <= N``; nu's final zero part is dropped.
    """
    if M < 1 or N < 1:
        raise DomainError(f"kappa_partition needs M, N >= 1, got M={M}, N={N}")
    _ensure_prime(p)
    alpha = Partition(N + (p - 1) * (M - i) for i in range(1, M + 1))
    nu = Partition((p - 1) * (N - j) for j in range(1, N + 1))
    if alpha[-1] < len(nu):
        raise InvariantViolation("alpha_M must exceed the length of nu")
    kappa = Partition(tuple(alpha) + tuple(nu.conjugate()))
    return alpha, nu, kappa


def c_matrix(lam: Iterable[int], mu: Iterable[int], M: int, N: int) -> list[list[int]]:
    """``c_ij = lam_i - i + mu_j - j + M + 1`` for ``1 <= i <= M``, ``1 <= j <= N``."""
    lam = Partition(lam).padded(M)
    mu = Partition(mu).padded(N)
    return [[lam[i - 1] - i + mu[j - 1] - j + M + 1 for j in range(1, N + 1)] for i in range(1, M + 1)]
