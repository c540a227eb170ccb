"""Command-line interface.

Subcommands
-----------
mdpoly      coefficient table of (1 + t + ... + t^{p-1})^d
sequence    generator counts c_e and partial sums k_e, by a chosen engine
complexity  certified growth-rate and complexity intervals
segre       complexity report with closed-form expression where known
verify      cross-check all engines and bounds over a grid
twisted     demonstrations of the twisted operator algebra

Exit codes: 0 success, 1 usage or validation error, 2 iteration guard
exceeded, 3 verification mismatch.

Iteration guards for the enumeration engines default to 10^8 and can be
set by --max-compositions / --max-carryvectors or the environment
variables FROBCX_MAX_COMPOSITIONS / FROBCX_MAX_CARRYVECTORS (flags win).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from math import comb

from .basep import Prime
from .closedform import (
    closed_form_d3,
    known_complexity_expression,
    lower_bound,
)
from .enumeration import (
    DEFAULT_MAX_CARRYVECTORS,
    DEFAULT_MAX_COMPOSITIONS,
    composition_count,
    count_basis_carryvectors,
    count_basis_enumeration,
)
from .errors import GuardExceeded
from .poincare import build_table
from .spectral import log_of_interval, perron_interval
from .transfer import ComplexityReport, TransferSystem, build_system, complexity_sequence
from .twistedop import (
    TwistedOperator,
    bracket,
    compose,
    factorization_check,
    identity_operator,
    min_kill_degree,
    QuotientRing,
    random_operator,
)

ENGINES = ("auto", "transfer", "enumerate", "carry", "closed")
FORMATS = ("table", "json", "csv")
AUTO_ENUMERATE_LIMIT = 10**6

_VERIFY_GRID = (
    (2, range(1, 6), range(1, 5)),
    (3, range(1, 6), range(1, 5)),
    (5, range(1, 5), range(1, 4)),
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad usage; 2 is reserved for guards here
    def error(self, message):
        raise _UsageError(message)


def render_json(obj) -> str:
    return json.dumps(obj, indent=2)


def decimal_places(tol: Fraction) -> int:
    """Digits after the point needed to display an interval of width tol."""
    inv = -((-tol.denominator) // tol.numerator)  # ceil(1/tol)
    return len(str(inv)) + 1


def decimal_str(x: Fraction, places: int, *, round_up: bool) -> str:
    """Fixed-point decimal rendering, rounded outward (down/up as asked)."""
    num = x.numerator * 10**places
    den = x.denominator
    n = -((-num) // den) if round_up else num // den
    sign = "-" if n < 0 else ""
    s = str(abs(n)).rjust(places + 1, "0")
    return f"{sign}{s[:-places]}.{s[-places:]}" if places else f"{sign}{s}"


def _parse_tol(text: str) -> Fraction:
    try:
        tol = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"invalid tolerance {text!r}: {exc}") from None
    if tol <= 0:
        raise _UsageError("tolerance must be positive")
    return tol


def _guard_value(flag: int | None, env_name: str, default: int) -> int:
    if flag is not None:
        return flag
    raw = os.environ.get(env_name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"{env_name} must be an integer, got {raw!r}") from None


def _prime(value: int) -> Prime:
    try:
        return Prime(value)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


# --- sequence engines -------------------------------------------------------

def _terms_enumerate(p: Prime, d: int, emax: int, guard: int) -> list[int]:
    return [0] + [
        count_basis_enumeration(p, d, e, max_compositions=guard)
        for e in range(1, emax + 1)
    ]


def _terms_carry(p: Prime, d: int, emax: int, guard: int) -> list[int]:
    table = build_table(p, d)
    out = [0]
    if emax >= 1:
        out.append(comb(d + p - 2, p - 1))
    for e in range(2, emax + 1):
        out.append(count_basis_carryvectors(p, d, e, table, max_carryvectors=guard))
    return out


def _terms_closed(p: Prime, emax: int) -> list[int]:
    out = [0]
    if emax >= 1:
        out.append(comb(p + 1, 2))
    out.extend(closed_form_d3(p, e) for e in range(2, emax + 1))
    return out


def _resolve_engine(engine: str, p: Prime, d: int, emax: int, guard: int) -> str:
    if engine == "auto":
        total = composition_count(p**emax - 1, d) if emax >= 1 else 0
        return "enumerate" if total <= min(AUTO_ENUMERATE_LIMIT, guard) else "transfer"
    if engine == "closed" and d != 3:
        raise _UsageError("engine 'closed' applies to d = 3 only")
    if engine == "carry" and d < 3:
        raise _UsageError(
            "engine 'carry' needs d >= 3; use 'transfer' or 'enumerate' for small d"
        )
    return engine


def _sequence_report(args) -> ComplexityReport:
    p = _prime(args.p)
    if args.d < 1:
        raise _UsageError("d must be >= 1")
    if args.emax < 0:
        raise _UsageError("emax must be >= 0")
    comp_guard = _guard_value(
        args.max_compositions, "FROBCX_MAX_COMPOSITIONS", DEFAULT_MAX_COMPOSITIONS
    )
    carry_guard = _guard_value(
        args.max_carryvectors, "FROBCX_MAX_CARRYVECTORS", DEFAULT_MAX_CARRYVECTORS
    )
    engine = _resolve_engine(args.engine, p, args.d, args.emax, comp_guard)
    if engine == "transfer":
        return complexity_sequence(p, args.d, args.emax)
    if engine == "enumerate":
        terms = _terms_enumerate(p, args.d, args.emax, comp_guard)
    elif engine == "carry":
        terms = _terms_carry(p, args.d, args.emax, carry_guard)
    else:
        terms = _terms_closed(p, args.emax)
    return ComplexityReport.from_terms(p, args.d, engine, terms)


def _cmd_sequence(args) -> int:
    report = _sequence_report(args)
    if args.format == "json":
        print(
            render_json(
                {
                    "p": int(report.p),
                    "d": report.d,
                    "engine": report.engine,
                    "c": [str(v) for v in report.c],
                    "k": [str(v) for v in report.k],
                }
            )
        )
    elif args.format == "csv":
        print("e,c_e,k_e")
        for e, (ce, ke) in enumerate(zip(report.c, report.k)):
            print(f"{e},{ce},{ke}")
    else:
        print(f"# p={report.p} d={report.d} engine={report.engine}")
        wc = max(len(str(report.c[-1])), 3)
        wk = max(len(str(report.k[-1])), 3)
        print(f"{'e':>3} {'c_e':>{wc}} {'k_e':>{wk}}")
        for e, (ce, ke) in enumerate(zip(report.c, report.k)):
            print(f"{e:>3} {ce:>{wc}} {ke:>{wk}}")
    return 0


# --- spectral commands ------------------------------------------------------

def _cmd_mdpoly(args) -> int:
    p = _prime(args.p)
    if args.d < 1:
        raise _UsageError("d must be >= 1")
    table = build_table(p, args.d)
    if args.format == "table":
        print(f"# p={p} d={args.d} top_degree={table.top_degree}")
        for m, c in enumerate(table.coeffs):
            print(f"{m:>3} {c}")
    else:
        print(json.dumps(list(table.coeffs)))
    return 0


def _complexity_intervals(p: Prime, d: int, tol: Fraction):
    system = build_system(p, d)
    est = perron_interval(system.matrix, tol)
    cx = log_of_interval(est.lo, est.hi, p, tol / 4)
    return est, cx


def _cmd_complexity(args) -> int:
    p = _prime(args.p)
    if args.d < 3:
        raise _UsageError("complexity needs d >= 3 (counts vanish beyond e=1 otherwise)")
    tol = _parse_tol(args.tol)
    est, cx = _complexity_intervals(p, args.d, tol)
    places = decimal_places(tol)
    rho_lo = decimal_str(est.lo, places, round_up=False)
    rho_hi = decimal_str(est.hi, places, round_up=True)
    cxf_lo = decimal_str(cx.lo, places, round_up=False)
    cxf_hi = decimal_str(cx.hi, places, round_up=True)
    if args.format == "json":
        print(
            render_json(
                {"rho_lo": rho_lo, "rho_hi": rho_hi, "cxf_lo": cxf_lo, "cxf_hi": cxf_hi}
            )
        )
    else:
        print(f"# p={p} d={args.d} tol={args.tol}")
        print(f"growth rate in [{rho_lo}, {rho_hi}]"
              f" ({est.iterations} iterations, converged={est.converged})")
        print(f"complexity  in [{cxf_lo}, {cxf_hi}]  (base-{p} log; bound {args.d - 1})")
    return 0


def _cmd_segre(args) -> int:
    p = _prime(args.p)
    if args.d < 3:
        raise _UsageError("segre reports need d >= 3")
    tol = _parse_tol(args.tol)
    est, cx = _complexity_intervals(p, args.d, tol)
    places = decimal_places(tol)
    payload = {
        "p": int(p),
        "d": args.d,
        "cxf_lo": decimal_str(cx.lo, places, round_up=False),
        "cxf_hi": decimal_str(cx.hi, places, round_up=True),
        "closed_form": known_complexity_expression(p, args.d),
    }
    if args.format == "json":
        print(render_json(payload))
    else:
        print(f"# segre p={p} d={args.d} tol={args.tol}")
        print(f"complexity in [{payload['cxf_lo']}, {payload['cxf_hi']}]")
        if payload["closed_form"]:
            print(f"closed form: {payload['closed_form']}")
        else:
            print("closed form: none known")
        print(f"growth rate in [{decimal_str(est.lo, places, round_up=False)},"
              f" {decimal_str(est.hi, places, round_up=True)}]")
    return 0


# --- verify -----------------------------------------------------------------

def _faulted(system: TransferSystem) -> TransferSystem:
    rows = [list(r) for r in system.matrix]
    rows[0][0] += 1
    return TransferSystem(
        system.p, system.d, tuple(tuple(r) for r in rows), system.x0, system.weights
    )


def _transfer_terms(system: TransferSystem | None, p: Prime, d: int, emax: int) -> list[int]:
    out = [0]
    if emax >= 1:
        out.append(comb(d + p - 2, p - 1))
    if emax >= 2:
        if system is None:
            out.extend([0] * (emax - 1))
        else:
            x = list(system.x0)
            for e in range(2, emax + 1):
                if e > 2:
                    x = [sum(u * v for u, v in zip(row, x)) for row in system.matrix]
                out.append(sum(w * v for w, v in zip(system.weights, x)))
    return out


def _cmd_verify(args) -> int:
    guard = _guard_value(
        args.max_compositions, "FROBCX_MAX_COMPOSITIONS", DEFAULT_MAX_COMPOSITIONS
    )
    points = 0
    bound_checks = 0
    for p_raw, d_range, e_range in _VERIFY_GRID:
        p = Prime(p_raw)
        for d in d_range:
            table = build_table(p, d)
            emax = max(e_range)
            system = build_system(p, d, table) if d >= 3 else None
            if system is not None and args.inject_fault:
                system = _faulted(system)
            trans = _transfer_terms(system, p, d, emax)
            for e in e_range:
                values = {
                    "enumerate": count_basis_enumeration(p, d, e, max_compositions=guard),
                    "transfer": trans[e],
                }
                if d >= 3 and e >= 2:
                    values["carry"] = count_basis_carryvectors(p, d, e, table)
                if d == 3:
                    values["closed"] = comb(p + 1, 2) if e == 1 else closed_form_d3(p, e)
                c = values["enumerate"]
                if any(v != c for v in values.values()):
                    detail = " ".join(f"{k}={v}" for k, v in sorted(values.items()))
                    print(f"MISMATCH p={p} d={d} e={e}: {detail}")
                    return 3
                upper = composition_count(p**e - 1, d)
                if c > upper:
                    print(f"BOUND VIOLATION p={p} d={d} e={e}: c={c} > {upper}")
                    return 3
                bound_checks += 1
                if d >= 3 and e >= 2:
                    lb = lower_bound(p, d, e)
                    if lb > c or (d == 3 and lb != c):
                        print(f"BOUND VIOLATION p={p} d={d} e={e}: lower={lb} c={c}")
                        return 3
                    bound_checks += 1
                points += 1
                if not args.quiet:
                    engines = "/".join(sorted(values))
                    print(f"ok p={p} d={d} e={e} c={c} [{engines}]")
    print(f"VERIFY PASS: {points} grid points, {bound_checks} bound checks")
    return 0


# --- twisted ----------------------------------------------------------------

def _format_rows(op: TwistedOperator) -> list[str]:
    return ["  [" + ", ".join(str(v) for v in row) + "]" for row in op.rows]


def _cmd_twisted_demo(args) -> int:
    p = _prime(args.p)
    if args.trunc < 1:
        raise _UsageError("N must be >= 1")
    if args.r < 1:
        raise _UsageError("r must be >= 1")
    ring = QuotientRing(p, args.trunc)
    e0 = min_kill_degree(ring)
    if args.e < e0:
        raise _UsageError(f"need e >= {e0} so that p^e >= N")
    rng = random.Random(args.seed)
    op = random_operator(ring, args.r, args.e, rng)
    print(f"# twisted demo: p={p} N={args.trunc} r={args.r} e={args.e} seed={args.seed}")
    print(f"ring F_{p}[x]/(x^{args.trunc}), min twist with p^e >= N: e0={e0}")
    print(f"A (matrix of the degree-{args.e} operator):")
    for line in _format_rows(op):
        print(line)
    ident = identity_operator(ring, args.r, args.e - e0)
    split = compose(TwistedOperator(op.rows, e0), ident)
    ok = split == op and factorization_check(op.rows, args.e, e0)
    print(f"(A,{args.e}) == (A,{e0}) o (I,{args.e - e0}): {'PASS' if ok else 'FAIL'}")
    collapsed = bracket(op.rows, e0)
    consts = all(
        v.coeffs[1:] == (0,) * (args.trunc - 1) for row in collapsed for v in row
    )
    print(f"A^[p^{e0}] collapses to constant terms: {'PASS' if consts else 'FAIL'}")
    if args.e - e0 >= 2 * e0 and e0 >= 1:
        k = (args.e - e0) // e0 - 1
        c = (args.e - e0) - k * e0
        print(f"identity chain: (I,{args.e - e0}) == (I,{e0})^o{k} o (I,{c}): "
              f"{'PASS' if ok else 'FAIL'}")
    return 0 if ok and consts else 3


# --- parser -----------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="frobcx", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("mdpoly", help="coefficient table of (1+t+...+t^(p-1))^d")
    q.add_argument("--p", type=int, required=True, help="prime characteristic")
    q.add_argument("--d", type=int, required=True, help="number of variables")
    q.add_argument("--format", choices=("json", "table"), default="json")
    q.set_defaults(func=_cmd_mdpoly)

    q = sub.add_parser("sequence", help="generator counts c_e and sums k_e")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--emax", type=int, required=True)
    q.add_argument("--engine", choices=ENGINES, default="auto")
    q.add_argument("--format", choices=FORMATS, default="table")
    q.add_argument("--max-compositions", type=int, default=None)
    q.add_argument("--max-carryvectors", type=int, default=None)
    q.set_defaults(func=_cmd_sequence)

    q = sub.add_parser("complexity", help="certified growth and complexity intervals")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--tol", default="1e-9", help="interval width target")
    q.add_argument("--format", choices=("json", "table"), default="json")
    q.set_defaults(func=_cmd_complexity)

    q = sub.add_parser("segre", help="complexity with closed form where known")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--tol", default="1e-9")
    q.add_argument("--format", choices=("json", "table"), default="json")
    q.set_defaults(func=_cmd_segre)

    q = sub.add_parser("verify", help="cross-check engines and bounds on a grid")
    q.add_argument("--quiet", action="store_true", help="summary line only")
    q.add_argument("--max-compositions", type=int, default=None)
    q.add_argument("--inject-fault", action="store_true",
                   help="perturb the transfer matrix to prove mismatches are caught")
    q.set_defaults(func=_cmd_verify)

    q = sub.add_parser("twisted", help="twisted operator demonstrations")
    tsub = q.add_subparsers(dest="twisted_command", required=True)
    t = tsub.add_parser("demo", help="factor a random operator through the identity")
    t.add_argument("--p", type=int, default=2)
    t.add_argument("--N", dest="trunc", type=int, default=4, help="truncation order")
    t.add_argument("--r", type=int, default=2, help="matrix size")
    t.add_argument("--e", type=int, default=6, help="operator twist degree")
    t.add_argument("--seed", type=int, default=0)
    t.set_defaults(func=_cmd_twisted_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
