"""``tensor-growth``: command-line access to every pipeline in the package.

Exit codes: 0 success, 1 acceptance failure, 2 invalid input, 3 resource bound
exceeded, 4 internal invariant violated. Errors are also written to stderr as
a one-line JSON object.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Any, Sequence, TextIO

from . import __version__
from .asymptotics import (
    delta_estimate,
    delta_window,
    dn_bound,
    f_exponent,
    moment_scaling_fit,
    predicted_delta,
    r_of_n,
    steinberg_count_estimate,
    steinberg_multinomial,
    stirling_bounds,
)
from .combinatorics import INF, MixedCharacteristic, is_inf, mixed_digits, parse_extnat
from .counterexample import build_E, governing_quadratic, quantum_trace_condition, trace_condition
from .decomposer import (
    GrowthSeries,
    b_sequence_sl2,
    decompose_tensor_power,
    series_charzero_glm,
    series_charzero_super,
)
from .errors import DomainError, InvariantViolation, TensorGrowthError
from .report import emit_report, nth_root_6
from .sl2_tilting import tilting_character, tilting_dimension
from .specht import b_modular_glm, modular_table


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # route usage errors through the JSON error path
        raise DomainError(message)


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved arguments; every field is set before dispatch."""

    command: str
    family: str
    p: Any
    ell: Any
    M: int
    N: int
    n: int | None
    n_max: int
    fmt: str
    output: str | None
    threads: int
    engine: str
    extra: dict


def _extnat(token: str):
    return parse_extnat(token)


def _add_setting(sp: argparse.ArgumentParser, family: bool = True) -> None:
    if family:
        sp.add_argument("--family", choices=["sl2", "glm", "super"], default="sl2",
                        help="group: SL2 (quantum in general), GL_M, or GL(M|N)")
    sp.add_argument("--p", type=_extnat, default=INF,
                    help="characteristic of the field: a prime or 'inf' (default inf)")
    sp.add_argument("--ell", type=_extnat, default=None,
                    help="order of q^2: an integer >= 2 or 'inf' (default: same as --p)")


def _add_output(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", dest="fmt", choices=["csv", "json"], default="csv")
    sp.add_argument("--output", default=None, help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="tensor-growth",
                 description="Growth of the number of indecomposable summands in tensor powers.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("--size-bound", type=int, default=None,
                    help="largest n for the Specht Gram oracle (same as TG_SIZE_BOUND)")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("bn", help="b_0..b_N: indecomposable summands of V^(x)n",
                        description="Number b_n of indecomposable direct summands of the n-th tensor "
                                    "power of the vector representation, with the n-th root column.")
    _add_setting(sp)
    sp.add_argument("--M", type=int, default=2, help="even part of the dimension (glm, super)")
    sp.add_argument("--N", type=int, default=0, help="odd part of the dimension (super)")
    sp.add_argument("--nmax", type=int, default=10)
    sp.add_argument("--threads", type=int, default=1, help="worker threads; output is identical for any value")
    sp.add_argument("--engine", choices=["weyl", "weights", "laurent"], default="weyl",
                    help="SL2 peeling engine; all three give identical counts")
    _add_output(sp)

    sp = sub.add_parser("decompose", help="tilting multiplicities of V^(x)n for SL2",
                        description="Multiplicity of each tilting module T(m) in the n-th tensor power "
                                    "of the vector representation of (quantum) SL2, with dim T(m).")
    _add_setting(sp, family=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--engine", choices=["weyl", "laurent"], default="laurent")
    _add_output(sp)

    sp = sub.add_parser("tilting", help="digits, dimension and character of a tilting module T(m)",
                        description="Mixed-radix digits of m+1, the dimension of the SL2 tilting module "
                                    "T(m), and optionally its character as (exponent, coefficient) pairs.")
    _add_setting(sp, family=False)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--character", action="store_true", help="include the full character")
    _add_output(sp)

    sp = sub.add_parser("oracle", help="simple symmetric-group dimensions from Specht Gram ranks",
                        description="For each p-regular partition of n with at most M rows: the Specht "
                                    "dimension f^lambda and dim D_lambda as the Gram rank mod p, plus the "
                                    "total, which is b_n for GL_M in characteristic p.")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--M", type=int, default=2)
    sp.add_argument("--p", type=int, required=True)
    _add_output(sp)

    sp = sub.add_parser("asymptotics", help="Stirling, Steinberg-count and D_n bound tables",
                        description="Tables behind the lower bound on the growth rate in characteristic p: "
                                    "Stirling brackets of a!, the multinomial count a(n) of Steinberg "
                                    "summands, and the dimension bound D_n.")
    sp.add_argument("--table", choices=["stirling", "steinberg", "dn"], required=True)
    sp.add_argument("--n", type=int, nargs="+", required=True, help="sample points (a for stirling)")
    sp.add_argument("--M", type=int, default=3)
    sp.add_argument("--p", type=int, default=2)
    _add_output(sp)

    sp = sub.add_parser("delta", help="fit the exponent delta in b_n ~ dim^n n^-delta",
                        description="Least-squares fit of log(b_n/dim^n) against log n, with the "
                                    "square-root moment prediction where one exists. --series emits the "
                                    "plot data (n, b_n^(1/n), log2 b_n - n log2 dim + delta log2 n); "
                                    "--moments fits the growth of E[(dim T(m))^s].")
    _add_setting(sp)
    sp.add_argument("--M", type=int, default=2)
    sp.add_argument("--N", type=int, default=0)
    sp.add_argument("--nmax", type=int, default=1024)
    sp.add_argument("--window", choices=["full", "trailing-half"], default="full")
    sp.add_argument("--series", action="store_true", help="emit the per-n plot series instead of the fit")
    sp.add_argument("--moments", type=float, nargs="+", default=None, metavar="S",
                    help="fit moment exponents for these s (SL2 at (p,p), n = 16..nmax by doubling)")
    sp.add_argument("--threads", type=int, default=1)
    _add_output(sp)

    sp = sub.add_parser("counterexample", help="matrix E with tr(E^T E^-1) = -2",
                        description="The block matrix E defining a nonsymmetric fiber functor on the "
                                    "SL2 representation category with the vector representation sent to "
                                    "an m-dimensional space, the solved x, and the exactly verified trace.")
    sp.add_argument("--m", type=int, required=True)
    _add_output(sp)

    sp = sub.add_parser("verify", help="run the acceptance suite",
                        description="Run the acceptance checks and print one PASS/FAIL line per criterion.")
    sp.add_argument("--only", type=int, nargs="+", default=None, help="criterion numbers to run")
    return ap


def _resolve(args: argparse.Namespace) -> RunConfig:
    cmd = args.command
    family = getattr(args, "family", "sl2")
    p = getattr(args, "p", INF)
    ell = getattr(args, "ell", None)
    if ell is None:
        ell = p
    M = getattr(args, "M", 2)
    N = getattr(args, "N", 0)
    n_max = getattr(args, "nmax", 0)
    if n_max < 0:
        raise DomainError(f"--nmax must be >= 0, got {n_max}")
    threads = getattr(args, "threads", 1)
    if threads < 1:
        raise DomainError(f"--threads must be >= 1, got {threads}")
    if cmd in ("bn", "delta"):
        if family == "super" and not (is_inf(p) and is_inf(ell)):
            raise DomainError("family super is only available in characteristic 0 (--p inf)")
        if family in ("glm", "super") and ell != p:
            raise DomainError(f"family {family} has no quantum parameter: --ell must equal --p")
        if family == "glm" and M < 1:
            raise DomainError(f"--M must be >= 1, got {M}")
        if family == "super" and (M < 0 or N < 0 or M + N < 1):
            raise DomainError(f"need M, N >= 0 with M + N >= 1, got M={M}, N={N}")
        if family == "sl2" and (M, N) != (2, 0):
            raise DomainError("--M/--N do not apply to family sl2")
        if family == "glm" and N:
            raise DomainError("--N applies to family super only")
    return RunConfig(cmd, family, p, ell, M, N, getattr(args, "n", None), n_max,
                     getattr(args, "fmt", "csv"), getattr(args, "output", None), threads,
                     getattr(args, "engine", "weyl"), vars(args))


def compute_series(cfg: RunConfig, n_max: int | None = None) -> GrowthSeries:
    n_max = cfg.n_max if n_max is None else n_max
    if cfg.family == "sl2":
        engine = cfg.engine if cfg.command == "bn" else "weights"
        return b_sequence_sl2(n_max, MixedCharacteristic(cfg.p, cfg.ell), engine=engine, threads=cfg.threads)
    if cfg.family == "super":
        return series_charzero_super(n_max, cfg.M, cfg.N)
    if is_inf(cfg.p):
        return series_charzero_glm(n_max, cfg.M)
    mc = MixedCharacteristic.classical(cfg.p)
    if cfg.M == 2:
        # GL_2 and SL_2 tensor powers have the same summands.
        s = b_sequence_sl2(n_max, mc, threads=cfg.threads)
        return GrowthSeries("glm", s.values, mc=mc, M=2)
    return GrowthSeries("glm", [b_modular_glm(n, cfg.M, cfg.p) for n in range(n_max + 1)], mc=mc, M=cfg.M)


def _cmd_bn(cfg: RunConfig):
    s = compute_series(cfg)
    rows = [{"n": n, "b_n": b, "nth_root": nth_root_6(b, n)} for n, b in enumerate(s.values)]
    return rows, ["n", "b_n", "nth_root"]


def _cmd_decompose(cfg: RunConfig):
    if cfg.n is None or cfg.n < 0:
        raise DomainError("--n must be >= 0")
    dec = decompose_tensor_power(cfg.n, MixedCharacteristic(cfg.p, cfg.ell), engine=cfg.engine)
    if dec.total_dimension() != 2 ** cfg.n:
        raise InvariantViolation("summand dimensions do not add up to 2^n")
    rows = [{"m": m, "mult": c, "dim": d} for m, c, d in dec.rows()]
    return rows, ["m", "mult", "dim"]


def _cmd_tilting(cfg: RunConfig):
    m = cfg.extra["m"]
    mc = MixedCharacteristic(cfg.p, cfg.ell)
    if m < 0:
        raise DomainError(f"--m must be >= 0, got {m}")
    row = {"m": m, "p": str(cfg.p), "ell": str(cfg.ell), "digits": list(mixed_digits(m + 1, mc)),
           "dim": tilting_dimension(m, mc)}
    cols = ["m", "p", "ell", "digits", "dim"]
    if cfg.extra.get("character"):
        pairs = tilting_character(m, mc).to_pairs()
        row["character"] = [list(t) for t in pairs] if cfg.fmt == "json" else \
            " ".join(f"{e}:{c}" for e, c in pairs)
        cols.append("character")
    return [row], cols


def _cmd_oracle(cfg: RunConfig):
    n, M, p = cfg.n, cfg.M, cfg.extra["p"]
    if n is None or n < 0:
        raise DomainError("--n must be >= 0")
    rows = [{"lambda": "(" + ",".join(map(str, lam)) + ")", "f": f, "dim_D": d}
            for lam, f, d in modular_table(n, M, p)]
    rows.append({"lambda": "total", "f": sum(r["f"] for r in rows), "dim_D": sum(r["dim_D"] for r in rows)})
    return rows, ["lambda", "f", "dim_D"]


def _cmd_asymptotics(cfg: RunConfig):
    table, M, p = cfg.extra["table"], cfg.M, cfg.extra["p"]
    rows = []
    for n in cfg.extra["n"]:
        if table == "stirling":
            sb = stirling_bounds(n)
            rows.append({"a": n, "log_lower": sb.log_lower, "log_factorial": math.lgamma(n + 1),
                         "log_upper": sb.log_upper})
        elif table == "steinberg":
            la = steinberg_count_estimate(n, M, p)
            exact = steinberg_multinomial(n, M, p) if n <= 2000 else None
            rows.append({"n": n, "r": r_of_n(n, p), "a_n": exact, "log_a_n": la, "nth_root": math.exp(la / n)})
        else:
            ld = dn_bound(n, M, p)
            rows.append({"n": n, "r": r_of_n(n, p), "log_bound": ld, "nth_root": math.exp(ld / n)})
    cols = {"stirling": ["a", "log_lower", "log_factorial", "log_upper"],
            "steinberg": ["n", "r", "a_n", "log_a_n", "nth_root"],
            "dn": ["n", "r", "log_bound", "nth_root"]}[table]
    return rows, cols


def _cmd_delta(cfg: RunConfig):
    if cfg.extra.get("moments"):
        if cfg.family != "sl2" or is_inf(cfg.p) or cfg.ell != cfg.p:
            raise DomainError("--moments needs family sl2 at (p,p) with p finite")
        grid = []
        n = 16
        while n <= cfg.n_max:
            grid.append(n)
            n *= 2
        rows = []
        for s in cfg.extra["moments"]:
            fit = moment_scaling_fit(s, cfg.p, grid)
            rows.append({"s": s, "slope": fit.slope, "residual": fit.residual,
                         "f_s": f_exponent(s) if cfg.p == 2 else None})
        return rows, ["s", "slope", "residual", "f_s"]
    s = compute_series(cfg)
    fit = delta_estimate(s, s.dim_v, cfg.extra["window"])
    pred = predicted_delta(cfg.p) if cfg.family == "sl2" and not is_inf(cfg.p) and cfg.ell == cfg.p else None
    if cfg.family == "sl2" and is_inf(cfg.ell):
        pred = 0.5
    if cfg.extra.get("series"):
        l2d = math.log2(s.dim_v)
        rows = [{"n": n, "nth_root": nth_root_6(b, n),
                 "normalized_log2": math.log2(b) - n * l2d + fit.delta * math.log2(n)}
                for n, b in enumerate(s.values) if n >= 1]
        return rows, ["n", "nth_root", "normalized_log2"]
    lo, hi = delta_window(cfg.n_max, cfg.extra["window"])
    row = {"family": cfg.family, "p": str(cfg.p), "ell": str(cfg.ell), "lo": lo, "hi": hi,
           "delta": fit.delta, "residual": fit.residual, "intercept": fit.intercept, "predicted": pred}
    return [row], ["family", "p", "ell", "lo", "hi", "delta", "residual", "intercept", "predicted"]


def _format_quadratic(c2: int, c1: int, c0: int) -> str:
    terms = []
    for c, mono in ((c2, "x^2"), (c1, "x"), (c0, "")):
        if not c:
            continue
        mag = str(abs(c)) if abs(c) != 1 or not mono else ""
        sign = "-" if c < 0 else "+"
        terms.append((sign, mag + mono))
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return " ".join([head] + [f"{s} {t}" for s, t in terms[1:]]) + " = 0"


def _cmd_counterexample(cfg: RunConfig):
    m = cfg.extra["m"]
    e = build_E(m)
    c2, c1, c0 = governing_quadratic(m)
    rows = [
        {"field": "m", "value": m},
        {"field": "condition", "value": _format_quadratic(c2, c1, c0)},
        {"field": "x", "value": repr(e.x)},
        {"field": "x_float", "value": float(e.x)},
    ]
    for i, r in enumerate(e.rows()):
        rows.append({"field": f"E[{i}]", "value": " ".join(repr(v) for v in r)})
    rows.append({"field": "trace", "value": repr(trace_condition(e))})
    rows.append({"field": "quantum_trace_q1", "value": repr(quantum_trace_condition(e, 1))})
    return rows, ["field", "value"]


_COMMANDS = {
    "bn": _cmd_bn,
    "decompose": _cmd_decompose,
    "tilting": _cmd_tilting,
    "oracle": _cmd_oracle,
    "asymptotics": _cmd_asymptotics,
    "delta": _cmd_delta,
    "counterexample": _cmd_counterexample,
}


def _run_verify(cfg: RunConfig, out: TextIO) -> int:
    from .acceptance import run_all

    results = run_all(cfg.extra.get("only"))
    for r in results:
        print(r.line(), file=out, flush=True)
    passed = sum(r.ok for r in results)
    print(f"{passed}/{len(results)} criteria passed", file=out)
    return 0 if passed == len(results) else 1


def _error(exc: BaseException, code: int, kind: str, err: TextIO) -> int:
    print(json.dumps({"error": kind, "exit_code": code, "message": str(exc)}), file=err)
    return code


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    saved_bound = os.environ.get("TG_SIZE_BOUND")
    try:
        args = build_parser().parse_args(argv)
        cfg = _resolve(args)
        if args.size_bound is not None:
            os.environ["TG_SIZE_BOUND"] = str(args.size_bound)
        if cfg.command == "verify":
            return _run_verify(cfg, out)
        rows, cols = _COMMANDS[cfg.command](cfg)
        text = emit_report(rows, cfg.fmt, cols)
        if cfg.output:
            with open(cfg.output, "w", newline="") as fh:
                fh.write(text)
        else:
            out.write(text)
        return 0
    except TensorGrowthError as exc:
        return _error(exc, exc.exit_code, exc.kind, err)
    except OSError as exc:
        return _error(exc, 1, "io", err)
    except (RecursionError, MemoryError) as exc:
        return _error(exc, 3, "resource", err)
    finally:
        # main() may be called in-process; the override must not outlive the call
        if saved_bound is None:
            os.environ.pop("TG_SIZE_BOUND", None)
        else:
            os.environ["TG_SIZE_BOUND"] = saved_bound


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
