"""Growth-rate estimates: Stirling sandwiches, the Steinberg multiplicity a(n),
the D_n dimension bound, and log-log regressions for the exponent delta in
``b_n ~ 2^n n^-delta``.

Everything asymptotic is computed in log space (natural log) with doubles;
exact big-integer versions exist for the small cases they are checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, lgamma, log, prod
from typing import Sequence

import numpy as np

from .combinatorics import MixedCharacteristic, _ensure_prime, rho_vector
from .decomposer import GrowthSeries
from .errors import DomainError
from .sl2_tilting import tilting_dimension


@dataclass(frozen=True)
class RegressionFit:
    """Least-squares line ``y = slope * x + intercept``; ``residual`` is the RMS error."""

    slope: float
    intercept: float
    residual: float
    lo: int
    hi: int
    points: int

    @property
    def delta(self) -> float:
        """``-slope``; the exponent estimate when y is ``log(b_n / dim^n)``."""
        return -self.slope


def linear_fit(xs: Sequence[float], ys: Sequence[float], lo: int, hi: int) -> RegressionFit:
    if len(xs) < 3:
        raise DomainError(f"need at least 3 points for a fit, got {len(xs)}")
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    slope, intercept = np.polyfit(x, y, 1)
    resid = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    return RegressionFit(float(slope), float(intercept), resid, lo, hi, len(xs))


# --------------------------------------------------------------------------
# Stirling


@dataclass(frozen=True)
class StirlingBounds:
    log_lower: float
    log_upper: float

    @property
    def lower(self) -> float:
        return math.exp(self.log_lower)

    @property
    def upper(self) -> float:
        return math.exp(self.log_upper)

    @property
    def log_ratio(self) -> float:
        return self.log_upper - self.log_lower


def _log_stirling_core(a: float) -> float:
    return 0.5 * log(2 * math.pi * a) + a * log(a) - a


def stirling_bounds(a: int) -> StirlingBounds:
    """``sqrt(2 pi a) (a/e)^a e^{1/(12a+1)} < a! < sqrt(2 pi a) (a/e)^a e^{1/(12a)}``, as logs."""
    if a < 1:
        raise DomainError(f"stirling_bounds needs a >= 1, got {a}")
    core = _log_stirling_core(a)
    return StirlingBounds(core + 1 / (12 * a + 1), core + 1 / (12 * a))


# --------------------------------------------------------------------------
# Steinberg multiplicity a(n)


def r_of_n(n: int, p: int) -> int:
    """Largest r with ``p^r <= sqrt(n)``."""
    if n < 1:
        raise DomainError(f"r_of_n needs n >= 1, got {n}")
    _ensure_prime(p)
    r = 0
    while p ** (2 * (r + 1)) <= n:
        r += 1
    return r


def steinberg_rows(n: int, M: int, p: int, r: int | None = None) -> list[int]:
    """``x_i = n/M + (p^r - 1) rho_i`` with ``r = r(n)`` unless given; these sum to n."""
    _ensure_prime(p)
    if M < 1 or M % 2 == 0:
        raise DomainError(f"M must be odd, got M={M}")
    if n < 1 or n % M:
        raise DomainError(f"M={M} must divide n={n} (n >= 1)")
    if r is None:
        r = r_of_n(n, p)
    step = p ** r - 1
    if step * (M - 1) // 2 > n // M:
        raise DomainError(
            f"constraint (p^r-1)(M-1)/2 <= n/M fails at n={n}, r={r}: {step * (M - 1) // 2} > {n // M}"
        )
    if M == 1:
        return [n]
    return [int(n // M + step * rho) for rho in rho_vector(M)]


def steinberg_multinomial(n: int, M: int, p: int, r: int | None = None) -> int:
    """Exact ``a(n) = n! / prod_i x_i!``."""
    xs = steinberg_rows(n, M, p, r)
    return factorial(n) // prod(factorial(x) for x in xs)


def steinberg_count_estimate(n: int, M: int, p: int, r: int | None = None) -> float:
    """``log a(n)`` from log-factorials."""
    xs = steinberg_rows(n, M, p, r)
    return lgamma(n + 1) - sum(lgamma(x + 1) for x in xs)


def steinberg_sandwich(n: int, M: int, p: int) -> tuple[float, float]:
    """Log-space lower and upper bounds on a(n) from the Stirling sandwich on each factorial."""
    xs = steinberg_rows(n, M, p)
    if min(xs) < 1:
        raise DomainError(f"the sandwich needs every x_i >= 1, got {xs}")
    core = _log_stirling_core(n) - sum(_log_stirling_core(x) for x in xs)
    lo_corr, hi_corr = sandwich_corrections(n, M, p)
    return core + lo_corr, core + hi_corr


def sandwich_corrections(n: int, M: int, p: int) -> tuple[float, float]:
    """Exponents ``1/(12n+1) - sum 1/(12 x_i)`` and ``1/(12n) - sum 1/(12 x_i + 1)``; both tend to 0."""
    xs = steinberg_rows(n, M, p)
    lower = 1 / (12 * n + 1) - sum(1 / (12 * x) for x in xs)
    upper = 1 / (12 * n) - sum(1 / (12 * x + 1) for x in xs)
    return lower, upper


def dn_bound(n: int, M: int, p: int) -> float:
    """``log(p^r A^{n/p^r})`` with ``r = r(n)`` and ``A = C(M, (M-1)/2)``."""
    if M < 3 or M % 2 == 0:
        raise DomainError(f"dn_bound needs odd M >= 3, got {M}")
    r = r_of_n(n, p)
    pr = p ** r
    return r * log(p) + (n / pr) * log(central_exterior_dimension(M))


def central_exterior_dimension(M: int) -> int:
    return comb(M, (M - 1) // 2)


# --------------------------------------------------------------------------
# delta exponents


def f_exponent(s: float) -> float:
    """``s - 1 + log2(1 + 2^s)``: growth exponent of E[(dim T(m))^s] in characteristic 2."""
    return s - 1 + math.log2(1 + 2.0 ** s)


def predicted_delta(p: int) -> float | None:
    """Square-root moment heuristic for delta: ``1/2 log_p(2p^2/(p+1))``, given for p = 2, 3 only."""
    if p not in (2, 3):
        return None
    return 0.5 * math.log(Fraction(2 * p * p, p + 1)) / math.log(p)


def moment_average(n: int, s: float, mc: MixedCharacteristic) -> float:
    """Uniform average of ``(dim T(m))^s`` over ``m in [n/2, n-1]``."""
    lo = (n + 1) // 2
    if n - 1 < lo:
        raise DomainError(f"empty range of weights for n={n}")
    if s == -1:
        total = sum(Fraction(1, tilting_dimension(m, mc)) for m in range(lo, n))
        return float(total / (n - lo))
    return math.fsum(tilting_dimension(m, mc) ** s for m in range(lo, n)) / (n - lo)


def moment_scaling_fit(s: float, p: int, n_grid: Sequence[int]) -> RegressionFit:
    """Slope of ``log E[(dim T(m))^s]`` against ``log n`` in characteristic p."""
    _ensure_prime(p)
    grid = list(n_grid)
    if len(grid) < 3:
        raise DomainError(f"moment fit needs at least 3 grid points, got {len(grid)}")
    if any(b <= a for a, b in zip(grid, grid[1:])) or grid[0] < 16:
        raise DomainError("n_grid must be increasing with every entry >= 16")
    mc = MixedCharacteristic.classical(p)
    ys = [log(moment_average(n, s, mc)) for n in grid]
    return linear_fit([log(n) for n in grid], ys, grid[0], grid[-1])


FIT_START = 16


def delta_window(n_max: int, kind: str = "full") -> tuple[int, int]:
    """Fitting window for a series ending at ``n_max``.

    ``"full"`` is ``[16, n_max]``. In positive characteristic ``log b_n`` carries
    an oscillation periodic in ``log_p n``, and only a window spanning several
    periods averages it out. ``"trailing-half"`` is ``[n_max/2, n_max]``.
    Short series fall back to their trailing half.
    """
    if kind == "trailing-half" or n_max < 2 * FIT_START:
        return max(1, n_max // 2), n_max
    if kind == "full":
        return FIT_START, n_max
    raise DomainError(f"unknown window kind {kind!r}")


def delta_estimate(
    series: GrowthSeries | Sequence[int],
    dim_v: int,
    window: tuple[int, int] | str | None = None,
) -> RegressionFit:
    """Fit ``log(b_n / dim_v^n) = -delta log n + c``; the estimate is ``fit.delta``.

    ``window`` is an explicit ``(lo, hi)`` or a kind accepted by ``delta_window``.
    """
    values = series.values if isinstance(series, GrowthSeries) else list(series)
    if dim_v < 2:
        raise DomainError(f"dim_v must be >= 2, got {dim_v}")
    if len(values) < 8:
        raise DomainError(f"series too short for a delta fit: {len(values)} < 8")
    if window is None or isinstance(window, str):
        lo, hi = delta_window(len(values) - 1, window or "full")
    else:
        lo, hi = window
    if not 1 <= lo < hi < len(values):
        raise DomainError(f"bad window [{lo}, {hi}] for a series of length {len(values)}")
    ns = range(lo, hi + 1)
    if any(values[n] <= 0 for n in ns):
        raise DomainError("delta fit needs positive values")
    ld = log(dim_v)
    ys = [log(values[n]) - n * ld for n in ns]
    return linear_fit([log(n) for n in ns], ys, lo, hi)
