"""Counting indecomposable summands b_n of tensor powers of the vector representation.

SL2 in any mixed characteristic is handled by greedy peeling of tilting
characters off ``(v + v^-1)^n``. Characteristic zero GL_M and GL(M|N) go
through Schur-Weyl duality: ``b_n`` is a sum of ``f^lambda`` over row- or
hook-bounded partitions, computed by path counting in Young's lattice.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod
from typing import Iterable, Sequence

from .algebra import LaurentPolynomial, binomial_power
from .combinatorics import INF, MixedCharacteristic, Partition
from .errors import DomainError, InvariantViolation
from .sl2_tilting import tilting_character, tilting_dimension, weyl_factors

log = logging.getLogger(__name__)

CHAR0 = MixedCharacteristic(INF, INF)


@dataclass(frozen=True)
class TiltingDecomposition:
    n: int
    mc: MixedCharacteristic
    multiplicities: dict[int, int]

    @property
    def b(self) -> int:
        return sum(self.multiplicities.values())

    def rows(self) -> list[tuple[int, int, int]]:
        """``(m, multiplicity, dim T(m))`` sorted by decreasing m."""
        return [(m, c, tilting_dimension(m, self.mc))
                for m, c in sorted(self.multiplicities.items(), reverse=True)]

    def total_dimension(self) -> int:
        return sum(c * tilting_dimension(m, self.mc) for m, c in self.multiplicities.items())


@dataclass
class GrowthSeries:
    """``b_0, ..., b_N`` for one representation-theoretic setting."""

    family: str
    values: list[int]
    mc: MixedCharacteristic = CHAR0
    M: int = 2
    N: int = 0
    meta: dict = field(default_factory=dict)

    @property
    def dim_v(self) -> int:
        return self.M + self.N

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def supermultiplicativity_violations(self) -> list[tuple[int, int]]:
        """Pairs ``(n, m)`` with ``n <= m`` and ``b_n b_m > b_{n+m}``."""
        b = self.values
        return [(i, j) for i in range(len(b)) for j in range(i, len(b) - i)
                if b[i] * b[j] > b[i + j]]

    def exceeds_dimension_bound(self) -> list[int]:
        d = self.dim_v
        return [n for n, x in enumerate(self.values) if x > d ** n]


# --------------------------------------------------------------------------
# SL2 peeling


def _peel_laurent(n: int, mc: MixedCharacteristic) -> dict[int, int]:
    chi = binomial_power(n).terms()
    mult: dict[int, int] = {}
    while chi:
        m = max(chi)
        if m < 0:
            break
        c = chi[m]
        if c <= 0:
            raise InvariantViolation(f"nonpositive multiplicity {c} for T({m}) at n={n}, mc={mc}")
        mult[m] = c
        for e, t in tilting_character(m, mc).terms().items():
            s = chi.get(e, 0) - c * t
            if s:
                chi[e] = s
            else:
                chi.pop(e, None)
    if chi:
        raise InvariantViolation(f"nonzero residual {LaurentPolynomial(chi)!r} at n={n}, mc={mc}")
    return mult


def weyl_multiplicities(n: int) -> dict[int, int]:
    """``[V^{(x)n} : Delta(j)]`` in characteristic zero: ballot numbers."""
    out = {}
    prev, cur = 0, 1  # C(n, k-1), C(n, k) for k = (n - j) / 2
    for k in range(n // 2 + 1):
        out[n - 2 * k] = cur - prev
        prev, cur = cur, cur * (n - k) // (k + 1)
    return out


def _peel_weyl(n: int, mc: MixedCharacteristic) -> dict[int, int]:
    # Same greedy peel, carried out on Weyl-filtration coordinates.
    d = weyl_multiplicities(n)
    mult: dict[int, int] = {}
    for m in range(n, -1, -2):
        c = d[m]
        if c < 0:
            raise InvariantViolation(f"negative multiplicity {c} for T({m}) at n={n}, mc={mc}")
        if not c:
            continue
        mult[m] = c
        for j in weyl_factors(m, mc)[1:]:
            if (m - j) % 2:
                raise InvariantViolation(f"Weyl factor {j} of T({m}) has wrong parity")
            d[j] -= c
    return mult


_ENGINES = {"laurent": _peel_laurent, "weyl": _peel_weyl}


def decompose_tensor_power(n: int, mc: MixedCharacteristic, engine: str = "laurent") -> TiltingDecomposition:
    """Multiplicities of the tilting summands T(m) of ``V_2^{(x)n}``.

    ``engine="laurent"`` peels leading terms off the full character
    ``(v + v^-1)^n``; ``engine="weyl"`` runs the same peel on Weyl-filtration
    coordinates, which is much cheaper for large n. Both give identical results.
    """
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    try:
        peel = _ENGINES[engine]
    except KeyError:
        raise DomainError(f"unknown engine {engine!r}") from None
    return TiltingDecomposition(n, mc, peel(n, mc))


def summand_weights(j_max: int, mc: MixedCharacteristic) -> list[int]:
    """``w[j]``: the number of tilting summands a single Weyl factor Delta(j) contributes
    to b_n under greedy peeling. Peeling is linear, so ``b_n = sum_j [V^n : Delta(j)] w[j]``.
    """
    w = [0] * (j_max + 1)
    for j in range(j_max + 1):
        w[j] = 1 - sum(w[i] for i in weyl_factors(j, mc)[1:])
    return w


def b_sequence_sl2(n_max: int, mc: MixedCharacteristic, engine: str = "weyl", threads: int = 1) -> GrowthSeries:
    """``b_0..b_{n_max}`` for SL2.

    ``engine`` is ``"laurent"`` or ``"weyl"`` (one full peel per n), or
    ``"weights"``, which peels each Weyl factor once and reuses the counts.
    """
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")

    if engine == "weights":
        w = summand_weights(n_max, mc)

        def one(n: int) -> int:
            return sum(c * w[j] for j, c in weyl_multiplicities(n).items())
    else:
        if engine not in _ENGINES:
            raise DomainError(f"unknown engine {engine!r}")

        def one(n: int) -> int:
            return decompose_tensor_power(n, mc, engine).b

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            values = list(ex.map(one, range(n_max + 1)))
    else:
        values = [one(n) for n in range(n_max + 1)]
    if mc.ell is INF:
        for n, b in enumerate(values):
            if b != b_closed_form_sl2_char0(n):
                raise InvariantViolation(f"b_{n} disagrees with the central binomial in the semisimple regime")
    return GrowthSeries("sl2", values, mc=mc, M=2, N=0)


def b_closed_form_sl2_char0(n: int) -> int:
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return comb(n, n // 2)


# --------------------------------------------------------------------------
# Characteristic zero via Schur-Weyl duality


def _young_lattice_count(n: int, allowed) -> int:
    """Sum over allowed lambda |- n of the number of saturated chains from the empty
    partition to lambda staying inside the allowed set (= f^lambda when the set is
    closed under taking subdiagrams)."""
    level: dict[tuple[int, ...], int] = {(): 1}
    for _ in range(n):
        nxt: dict[tuple[int, ...], int] = {}
        for lam, cnt in level.items():
            for i in range(len(lam) + 1):
                if i < len(lam) and i > 0 and lam[i - 1] == lam[i]:
                    continue
                if i == len(lam):
                    mu = lam + (1,)
                else:
                    mu = lam[:i] + (lam[i] + 1,) + lam[i + 1:]
                if allowed(mu):
                    nxt[mu] = nxt.get(mu, 0) + cnt
        level = nxt
    return sum(level.values())


def b_charzero_glm(n: int, M: int) -> int:
    """``sum f^lambda`` over lambda |- n with at most M rows."""
    if n < 0 or M < 1:
        raise DomainError(f"need n >= 0 and M >= 1, got n={n}, M={M}")
    return _young_lattice_count(n, lambda mu: len(mu) <= M)


def b_charzero_super(n: int, M: int, N: int) -> int:
    """``sum f^lambda`` over (M, N)-hook partitions of n (``lambda_{M+1} <= N``)."""
    if n < 0 or M < 0 or N < 0 or M + N < 1:
        raise DomainError(f"need n >= 0 and M + N >= 1, got n={n}, M={M}, N={N}")
    return _young_lattice_count(n, lambda mu: len(mu) <= M or mu[M] <= N)


def weyl_dimension(m: Sequence[int], M: int) -> int:
    """Dimension of the SL_M Weyl module with highest weight ``sum m_i omega_i``."""
    if M < 2 or len(m) != M - 1:
        raise DomainError(f"need M >= 2 and M - 1 fundamental-weight coordinates, got M={M}, m={m}")
    if any(x < 0 for x in m):
        raise DomainError(f"weights must be nonnegative, got {m}")
    lam = [sum(m[i:]) for i in range(M - 1)] + [0]
    num = prod(lam[i] - lam[j] + j - i for i in range(M) for j in range(i + 1, M))
    den = prod(j - i for i in range(M) for j in range(i + 1, M))
    q = Fraction(num, den)
    if q.denominator != 1:
        raise InvariantViolation(f"non-integral Weyl dimension {q}")
    return int(q)


def exterior_power_bound(a: Sequence[int], M: int) -> int:
    """``prod_i C(M, i)^{a_i}``: the dimension of ``(x)_i (Lambda^i V)^{(x) a_i}``."""
    if M < 2 or len(a) != M - 1 or any(x < 0 for x in a):
        raise DomainError(f"need M >= 2 and M - 1 nonnegative exponents, got M={M}, a={a}")
    return prod(comb(M, i) ** ai for i, ai in enumerate(a, start=1))


def restriction_inequality_check(n: int, M: int) -> bool:
    """``b_n^{M+1} <= sum_i C(n, i) b_i^M`` in characteristic zero."""
    lhs = b_charzero_glm(n, M + 1)
    rhs = sum(comb(n, i) * b_charzero_glm(i, M) for i in range(n + 1))
    return lhs <= rhs


def series_charzero_glm(n_max: int, M: int) -> GrowthSeries:
    return GrowthSeries("glm", [b_charzero_glm(n, M) for n in range(n_max + 1)], M=M, N=0)


def series_charzero_super(n_max: int, M: int, N: int) -> GrowthSeries:
    return GrowthSeries("super", [b_charzero_super(n, M, N) for n in range(n_max + 1)], M=M, N=N)


def hook_partition(lam: Iterable[int], M: int, N: int) -> bool:
    lam = Partition(lam)
    return len(lam) <= M or lam[M] <= N
