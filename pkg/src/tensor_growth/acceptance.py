"""The acceptance suite: twelve end-to-end checks with tolerances and time budgets.

Each check returns ``(passed, detail)``; the runner times it and a check that
passes but overruns its budget is reported as a failure.
"""

from __future__ import annotations

import io
import math
import time
from dataclasses import dataclass
from math import comb, log
from typing import Callable

from .asymptotics import (
    delta_estimate,
    dn_bound,
    f_exponent,
    moment_scaling_fit,
    predicted_delta,
    steinberg_count_estimate,
    steinberg_multinomial,
    steinberg_rows,
)
from .combinatorics import INF, MixedCharacteristic, c_matrix, is_p_core, kappa_partition
from .counterexample import build_E, quantum_trace_condition, trace_condition
from .decomposer import (
    CHAR0,
    b_sequence_sl2,
    decompose_tensor_power,
    restriction_inequality_check,
)
from .errors import DomainError
from .report import nth_root_6
from .sl2_tilting import alpha_exponent, tilting_dimension
from .specht import b_modular_glm

GOLDEN = [1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252]
GRID_VALUES = (2, 3, 5, 7, INF)


def mc_grid() -> list[MixedCharacteristic]:
    return [MixedCharacteristic(p, l) for p in GRID_VALUES for l in GRID_VALUES]


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    budget: float | None
    check: Callable[[], tuple[bool, str]]


@dataclass(frozen=True)
class CriterionResult:
    criterion: Criterion
    passed: bool
    detail: str
    seconds: float

    @property
    def within_budget(self) -> bool:
        b = self.criterion.budget
        return b is None or self.seconds < b

    @property
    def ok(self) -> bool:
        return self.passed and self.within_budget

    def line(self) -> str:
        c = self.criterion
        budget = f" < {c.budget:g}s" if c.budget is not None else ""
        flag = "PASS" if self.ok else "FAIL"
        late = "" if self.within_budget else " [over time budget]"
        return f"{flag} {c.number:2d} {c.name} ({self.seconds:.2f}s{budget}){late}: {self.detail}"


def golden_sequence():
    got = b_sequence_sl2(10, CHAR0).values
    return got == GOLDEN, f"b_0..b_10 = {got}"


def long_run_root():
    b = decompose_tensor_power(1000, CHAR0, engine="weyl").b
    exact = b == comb(1000, 500)
    root = nth_root_6(b, 1000)
    ok = exact and 1.99255 <= float(root) <= 1.99275
    return ok, f"b_1000^(1/1000) = {root}, equals C(1000,500): {exact}"


TILTING_52 = {(2, 2): 256, (2, 3): 192, (INF, 3): 102, (2, INF): 53, (5, INF): 53, (7, INF): 53}


def tilting_table():
    got = {k: tilting_dimension(52, MixedCharacteristic(*k)) for k in TILTING_52}
    bad = {k: v for k, v in got.items() if v != TILTING_52[k]}
    if bad:
        return False, f"mismatches {bad}"
    return True, "dim T(52): " + ", ".join(f"({p},{l})={v}" for (p, l), v in got.items())


def conservation():
    checked = 0
    for mc in mc_grid():
        for n in range(41):
            dec = decompose_tensor_power(n, mc, engine="laurent")
            if dec.total_dimension() != 2 ** n:
                return False, f"dimension {dec.total_dimension()} != 2^{n} at {mc}"
            checked += 1
    return True, f"{checked} decompositions, every residual zero and every total 2^n"


def oracle_equivalence():
    for p in (2, 3, 5):
        mc = MixedCharacteristic.classical(p)
        for n in range(11):
            a = decompose_tensor_power(n, mc).b
            b = b_modular_glm(n, 2, p)
            if a != b:
                return False, f"n={n}, p={p}: decomposer {a} != Gram-rank sum {b}"
    return True, "decomposer equals the Gram-rank sum for n <= 10, p in {2,3,5}"


def bound_suite():
    for mc in mc_grid():
        alpha = alpha_exponent(mc)
        bs = b_sequence_sl2(40, mc).values
        for n, b in enumerate(bs):
            if b > 2 ** n or n * log(2) - alpha * log(n + 1) > log(b) + 1e-12:
                return False, f"b_{n}={b} outside [2^n/(n+1)^alpha, 2^n] at {mc}"
        for m in range(5001):
            if log(tilting_dimension(m, mc)) > alpha * log(m + 1) + 1e-12:
                return False, f"dim T({m}) > (m+1)^alpha at {mc}"
    for M in (1, 2, 3):
        for n in range(21):
            if not restriction_inequality_check(n, M):
                return False, f"restriction inequality fails at n={n}, M={M}"
    return True, "b_n and dim T(m) bounds hold on the 25-point grid; restriction inequality holds for M <= 3"


def kappa_identities():
    count = 0
    for p in (2, 3, 5, 7):
        for M in range(1, 5):
            for N in range(1, 5):
                alpha, nu, kappa = kappa_partition(M, N, p)
                if not is_p_core(kappa, p):
                    return False, f"kappa={list(kappa)} is not a {p}-core (M={M}, N={N})"
                c = c_matrix(alpha, nu, M, N)
                want = [[(M + N - i - j) * p + 1 for j in range(1, N + 1)] for i in range(1, M + 1)]
                if c != want:
                    return False, f"c-matrix mismatch at M={M}, N={N}, p={p}"
                count += 1
    return True, f"{count} cases: kappa is a p-core and c_ij = (M+N-i-j)p+1"


def delta_experiments():
    d0 = delta_estimate(b_sequence_sl2(1000, CHAR0, engine="weights"), 2)
    d2 = delta_estimate(b_sequence_sl2(1024, MixedCharacteristic.classical(2), engine="weights"), 2)
    d3 = delta_estimate(b_sequence_sl2(1024, MixedCharacteristic.classical(3), engine="weights"), 2)
    pred2, pred3 = predicted_delta(2), predicted_delta(3)
    ok0 = abs(d0.delta - 0.5) <= 0.03
    ok2 = 0.65 <= d2.delta <= 0.78 and abs(pred2 - d2.delta) <= 2 * d2.residual
    ok3 = abs(d3.delta - pred3) <= 0.05
    detail = (f"char 0: {d0.delta:.4f}; (2,2): {d2.delta:.4f} +/- 2*{d2.residual:.4f} vs {pred2:.4f}; "
              f"(3,3): {d3.delta:.4f} vs {pred3:.4f}")
    return ok0 and ok2 and ok3, detail


def moment_regression():
    grid = [2 ** k for k in range(4, 15)]
    parts, ok = [], True
    for s in (-1, 0, 1):
        fit = moment_scaling_fit(s, 2, grid)
        ok &= abs(fit.slope - f_exponent(s)) <= 0.05
        parts.append(f"s={s}: {fit.slope:.4f} vs {f_exponent(s):.4f}")
    return ok, "; ".join(parts)


def steinberg_asymptotics():
    exact12 = steinberg_multinomial(12, 3, 2, r=2)
    want12 = math.factorial(12) // (math.factorial(7) * math.factorial(4))
    worst = 0.0
    for p in (2, 3):
        for n in range(3, 301, 3):
            try:
                steinberg_rows(n, 3, p)
            except DomainError:
                continue
            exact = log(steinberg_multinomial(n, 3, p))
            est = steinberg_count_estimate(n, 3, p)
            if exact:
                worst = max(worst, abs(est - exact) / exact)
    root = math.exp(steinberg_count_estimate(300000, 3, 2) / 300000)
    dn_root = math.exp(dn_bound(10 ** 6, 3, 2) / 10 ** 6)
    ok = exact12 == want12 == 3960 and worst <= 1e-9 and abs(root - 3) <= 0.05 * 3 and dn_root < 1.05
    return ok, (f"a(12)={exact12}; worst log relative error {worst:.2e}; "
                f"a(3e5)^(1/n)={root:.5f}; D_n root at 1e6 = {dn_root:.5f}")


def counterexample_check():
    for m in range(2, 13):
        e = build_E(m)
        if trace_condition(e) != -2:
            return False, f"trace {trace_condition(e)} at m={m}"
        if quantum_trace_condition(e, 1) != 0:
            return False, f"quantum condition nonzero at m={m}"
    return True, "tr(E^T E^-1) = -2 exactly and the q=1 quantum condition vanishes for 2 <= m <= 12"


def determinism():
    from .cli import main

    outs = []
    for threads in ("1", "8"):
        buf = io.StringIO()
        code = main(["bn", "--nmax", "200", "--threads", threads], out=buf)
        if code != 0:
            return False, f"bn exited with {code}"
        outs.append(buf.getvalue().encode())
    return outs[0] == outs[1], f"{len(outs[0])} bytes, identical: {outs[0] == outs[1]}"


CRITERIA = [
    Criterion(1, "golden-sequence", 1.0, golden_sequence),
    Criterion(2, "long-run-root", 10.0, long_run_root),
    Criterion(3, "tilting-dimension-table", None, tilting_table),
    Criterion(4, "dimension-conservation", 60.0, conservation),
    Criterion(5, "oracle-equivalence", 120.0, oracle_equivalence),
    Criterion(6, "bound-suite", None, bound_suite),
    Criterion(7, "kappa-c-matrix", 1.0, kappa_identities),
    Criterion(8, "delta-experiments", 300.0, delta_experiments),
    Criterion(9, "moment-regression", 120.0, moment_regression),
    Criterion(10, "steinberg-asymptotics", None, steinberg_asymptotics),
    Criterion(11, "counterexample", 1.0, counterexample_check),
    Criterion(12, "determinism", None, determinism),
]


def run_criterion(c: Criterion) -> CriterionResult:
    t0 = time.perf_counter()
    try:
        passed, detail = c.check()
    except Exception as exc:  # a crash is a failure, reported rather than raised
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CriterionResult(c, passed, detail, time.perf_counter() - t0)


def run_all(numbers: list[int] | None = None) -> list[CriterionResult]:
    return [run_criterion(c) for c in CRITERIA if numbers is None or c.number in numbers]
