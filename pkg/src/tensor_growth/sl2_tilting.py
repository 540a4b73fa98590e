"""Indecomposable tilting characters for SL2 and quantum SL2 in mixed characteristic.

With ``m + 1 = (a_n, ..., a_0)`` in the (p, l)-adic expansion and place values
``P_i``, the character is

    ch T(m) = [a_n P_n]_v * prod_{i < n, a_i != 0} [2]_{v^(a_i P_i)}

Expanding the product with ``[N]_v (v^s + v^-s) = [N+s]_v + [N-s]_v`` (valid
since the lower digits sum to less than ``P_n``) gives the Weyl filtration:
``T(m)`` has one Weyl factor ``Delta(a_n P_n + sum_i eps_i a_i P_i - 1)`` for
each sign vector ``eps``.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import product

from .algebra import LaurentPolynomial, bracket
from .combinatorics import INF, MixedCharacteristic, mixed_expansion
from .errors import DomainError


def _check_weight(m: int) -> None:
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"highest weight must be a nonnegative integer, got {m!r}")


@lru_cache(maxsize=4096)
def tilting_character(m: int, mc: MixedCharacteristic) -> LaurentPolynomial:
    _check_weight(m)
    (top, top_place), *rest = mixed_expansion(m + 1, mc)
    ch = bracket(top * top_place, 1)
    for a, place in rest:
        if a:
            ch = ch * bracket(2, a * place)
    return ch


def tilting_dimension(m: int, mc: MixedCharacteristic) -> int:
    """``dim T(m) = 2^k * a_top * P_top`` with k the number of nonzero lower digits."""
    _check_weight(m)
    (top, top_place), *rest = mixed_expansion(m + 1, mc)
    k = sum(1 for a, _ in rest if a)
    return (1 << k) * top * top_place


@lru_cache(maxsize=65536)
def weyl_factors(m: int, mc: MixedCharacteristic) -> tuple[int, ...]:
    """Highest weights of the Weyl factors of T(m), in decreasing order (first is m)."""
    _check_weight(m)
    (top, top_place), *rest = mixed_expansion(m + 1, mc)
    shifts = [a * place for a, place in rest if a]
    base = top * top_place
    out = {base + sum(e * s for e, s in zip(signs, shifts)) - 1
           for signs in product((1, -1), repeat=len(shifts))}
    return tuple(sorted(out, reverse=True))


def alpha_exponent(mc: MixedCharacteristic) -> float:
    """Exponent with ``dim T(m) <= (m+1)^alpha``: 1 if l is infinite, else ``1 + 1/log2(min(p, l))``."""
    if mc.ell is INF:
        return 1.0
    pmin = mc.ell if mc.p is INF else min(mc.p, mc.ell)
    return 1.0 + 1.0 / math.log2(pmin)
