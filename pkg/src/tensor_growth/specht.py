"""Brute-force modular Schur-Weyl oracle.

``dim D_lambda`` for a p-regular partition is the rank mod p of the Gram
matrix of the polytabloid basis of the Specht module ``S^lambda``. Summing
over p-regular partitions with at most M rows gives ``b_n`` for GL_M in
characteristic p. Nothing here touches tilting characters, so it serves as
an independent check on the SL2 decomposer.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from itertools import permutations, product
from math import prod
from typing import Iterable, Iterator

from .combinatorics import Partition, hook_lengths, is_p_regular, partitions, _ensure_prime
from .errors import DomainError, ResourceError

log = logging.getLogger(__name__)

DEFAULT_SIZE_BOUND = 10


def size_bound() -> int:
    """The oracle's maximal n; ``TG_SIZE_BOUND`` overrides the default of 10."""
    raw = os.environ.get("TG_SIZE_BOUND")
    if raw is None:
        return DEFAULT_SIZE_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"TG_SIZE_BOUND must be an integer, got {raw!r}") from None
    if value > DEFAULT_SIZE_BOUND:
        log.warning("Specht oracle size bound raised to %d; Gram matrices grow like n!", value)
    return value


def _check_size(n: int) -> None:
    bound = size_bound()
    if n > bound:
        raise ResourceError(f"n={n} exceeds the Specht oracle size bound {bound} (set TG_SIZE_BOUND)")


Tableau = tuple[tuple[int, ...], ...]
Tabloid = tuple[tuple[int, ...], ...]


def standard_tableaux(lam: Iterable[int]) -> list[Tableau]:
    """All standard Young tableaux of shape lambda, built by placing 1..n one at a time."""
    lam = Partition(lam)
    n = lam.size
    out: list[Tableau] = []
    rows: list[list[int]] = [[] for _ in lam]

    def rec(k: int) -> None:
        if k > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, r in enumerate(rows):
            if len(r) < lam[i] and (i == 0 or len(rows[i - 1]) > len(r)):
                r.append(k)
                rec(k + 1)
                r.pop()

    rec(1)
    return out


def _columns(t: Tableau) -> list[tuple[int, ...]]:
    width = len(t[0]) if t else 0
    return [tuple(row[j] for row in t if j < len(row)) for j in range(width)]


def _sign(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def polytabloid(t: Tableau) -> dict[Tabloid, int]:
    """``e_t = sum_{sigma in C_t} sgn(sigma) {sigma t}`` in the tabloid basis."""
    cols = _columns(t)
    col_perms = [[(p, _sign(p)) for p in permutations(range(len(c)))] for c in cols]
    shape = [len(r) for r in t]
    vec: dict[Tabloid, int] = {}
    for choice in product(*col_perms):
        rows: list[list[int]] = [[] for _ in shape]
        sgn = 1
        for c, (perm, s) in zip(cols, choice):
            sgn *= s
            for i, k in enumerate(perm):
                rows[i].append(c[k])
        key = tuple(tuple(sorted(r)) for r in rows)
        vec[key] = vec.get(key, 0) + sgn
    return {k: v for k, v in vec.items() if v}


@dataclass(frozen=True)
class SpechtGram:
    shape: Partition
    basis: list[Tableau]
    gram: list[list[int]]

    @property
    def size(self) -> int:
        return len(self.basis)


def specht_gram(lam: Iterable[int]) -> SpechtGram:
    lam = Partition(lam)
    _check_size(lam.size)
    basis = standard_tableaux(lam)
    vecs = [polytabloid(t) for t in basis]
    f = len(basis)
    gram = [[0] * f for _ in range(f)]
    for i in range(f):
        vi = vecs[i]
        for j in range(i, f):
            vj = vecs[j]
            small, big = (vi, vj) if len(vi) <= len(vj) else (vj, vi)
            g = sum(c * big.get(k, 0) for k, c in small.items())
            gram[i][j] = gram[j][i] = g
    return SpechtGram(lam, basis, gram)


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank over F_p by Gaussian elimination."""
    a = [[x % p for x in r] for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], -1, p)
        prow = [(x * inv) % p for x in a[rank]]
        a[rank] = prow
        for i in range(len(a)):
            if i != rank and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], prow)]
        rank += 1
        if rank == len(a):
            break
    return rank


def dim_simple_symmetric(lam: Iterable[int], p: int) -> int:
    """``dim D_lambda`` over a field of characteristic p, for p-regular lambda."""
    lam = Partition(lam)
    _ensure_prime(p)
    if not is_p_regular(lam, p):
        raise DomainError(f"{list(lam)} is not {p}-regular")
    return rank_mod_p(specht_gram(lam).gram, p)


def modular_table(n: int, M: int, p: int) -> Iterator[tuple[Partition, int, int]]:
    """``(lambda, f^lambda, dim D_lambda)`` for p-regular lambda |- n with at most M rows."""
    _ensure_prime(p)
    _check_size(n)
    for lam in partitions(n, max_rows=M):
        if is_p_regular(lam, p):
            g = specht_gram(lam)
            yield lam, g.size, rank_mod_p(g.gram, p)


def b_modular_glm(n: int, M: int, p: int) -> int:
    if n < 0 or M < 1:
        raise DomainError(f"need n >= 0 and M >= 1, got n={n}, M={M}")
    return sum(d for _, _, d in modular_table(n, M, p))


def young_scalar(lam: Iterable[int]) -> int:
    """``n_lambda``, the product of all hook lengths (``e~_T e~_T = n_lambda e~_T``)."""
    return prod(hook_lengths(lam))
