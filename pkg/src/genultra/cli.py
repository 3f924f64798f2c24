"""Command-line front end.

Usage:
    genultra de-coeffs --alpha 1 --n 3
    genultra verify --suite dv2 --alpha 0 --n-max 8
    genultra verify --suite half --beta -1/2 --alpha 1 --n-max 5
    genultra ortho --alpha 0 --M 1 --n-max 6
    genultra special-cases
    genultra transform --alpha 1/2 --beta 1/2 --n 2 --j-max 6

Exit codes: 0 all checks pass, 1 a verification failed, 2 bad usage or
invalid parameters.  Rationals are always written as exact strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Any, Iterable, Sequence

from . import __version__
from .de_engine import (
    C_STAR_FORMS,
    MASS_SAMPLES,
    b_coeff,
    build_system,
    c_coeff,
    dv1_residual,
    dv2_residual,
    dv_general_residual,
    finite_order_report,
    hom_residual,
    is_nonneg_integer,
    rel1_residual,
    rel2_residual,
)
from .errors import GenUltraError
from .exact import DensePoly, as_rational, rational_str
from .gen_ultra import orthogonality_check
from .quad_transform import (
    MINUS_HALF,
    PLUS_HALF,
    HalfParams,
    d_star,
    e_star,
    half_de_residual,
    half_orthogonality_check,
)
from .report import jsonable
from .ultraspherical import ALPHA_GRID

SUITES = ("dv1", "dv2", "rel", "hom", "general", "half")
DEFAULT_G = (DensePoly((1,)), DensePoly((0, 1)), DensePoly((-1, 0, 5)))


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def _beta_sign(text: str) -> str:
    value = _rational(text)
    if value == Fraction(-1, 2):
        return MINUS_HALF
    if value == Fraction(1, 2):
        return PLUS_HALF
    raise argparse.ArgumentTypeError("beta must be -1/2 or +1/2")


def _poly(text: str) -> DensePoly:
    try:
        return DensePoly.from_json(text)
    except (ValueError, TypeError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a JSON array of rationals, got {text!r}")


_NEGATIVE_VALUE = re.compile(r"^[-−]\d")


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--alpha -1/2`` into ``--alpha=-1/2`` so argparse accepts it."""
    out: list[str] = []
    for token in argv:
        if (
            out
            and _NEGATIVE_VALUE.match(token)
            and out[-1].startswith("--")
            and "=" not in out[-1]
        ):
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genultra",
        description="Exact differential equations for symmetric generalized "
        "ultraspherical polynomials.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
        p.add_argument("--out", default="-", help="output path (default: standard output)")

    p = sub.add_parser("de-coeffs", help="table of the c_i coefficients")
    p.add_argument("--alpha", type=_rational, required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--i-max", type=int, default=None)
    p.add_argument("--form", choices=C_STAR_FORMS, default="series")
    output_flags(p)

    p = sub.add_parser("verify", help="run a residual suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--alpha", type=_rational, action="append", default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--M", dest="masses", type=_rational, action="append", default=None)
    p.add_argument("--beta", type=_beta_sign, action="append", default=None)
    p.add_argument("--g", type=_poly, action="append", default=None,
                   help="polynomial for the general family, as a JSON array")
    p.add_argument("--inject-fault", default=None, metavar="cK",
                   help="test hook: perturb coefficient c_K of the dv2 system")
    output_flags(p)

    p = sub.add_parser("ortho", help="exact orthogonality check")
    p.add_argument("--alpha", type=_rational, required=True)
    p.add_argument("--M", dest="mass", type=_rational, default=Fraction(0))
    p.add_argument("--N", dest="mass_plus", type=_rational, default=None)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--beta", type=_beta_sign, default=None)
    output_flags(p)

    p = sub.add_parser("special-cases", help="compare against the alpha=0 and alpha=1 equations")
    p.add_argument("--n-max", type=int, default=10)
    output_flags(p)

    p = sub.add_parser("transform", help="tables of d_j^* or e_j^*")
    p.add_argument("--alpha", type=_rational, required=True)
    p.add_argument("--beta", type=_beta_sign, required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--j-max", type=int, default=None)
    p.add_argument("--N", dest="mass_plus", type=_rational, default=None)
    output_flags(p)
    return parser


# tables


def _table(meta: dict[str, Any], coefficients: list[tuple[int, DensePoly]], var: str) -> dict:
    return {
        **meta,
        "coefficients": [{"i": i, "poly": p} for i, p in coefficients],
        "_var": var,
    }


def render_table(table: dict, fmt: str) -> str:
    var = table.pop("_var", "x")
    if fmt == "json":
        return json.dumps(jsonable(table), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["i", "degree", "coefficient"])
        for row in table["coefficients"]:
            for k, c in enumerate(row["poly"].coeffs):
                writer.writerow([row["i"], k, rational_str(c)])
        return buf.getvalue()
    lines = [
        "  ".join(f"{k}={jsonable(v)}" for k, v in table.items() if k != "coefficients")
    ]
    for row in table["coefficients"]:
        lines.append(f"  [{row['i']:>2}] {row['poly'].pretty(var)}")
    return "\n".join(lines) + "\n"


def cmd_de_coeffs(args) -> tuple[str, int]:
    alpha = args.alpha
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    finite = is_nonneg_integer(alpha)
    i_max = args.i_max
    if i_max is None:
        i_max = int(2 * alpha + 4) if finite else max(args.n, 10)
    if i_max < 0:
        raise UsageError("--i-max must be nonnegative")
    system = build_system(args.n, alpha, truncation=i_max, form=args.form)
    meta = {
        "alpha": alpha,
        "n": args.n,
        "form": args.form,
        "order": int(2 * alpha + 4) if finite else "infinite",
        "i_max": i_max,
        "classical": {
            "c2": system.classical_c2,
            "c1": system.classical_c1,
            "eigenvalue": system.eigenvalue,
        },
    }
    coeffs = list(enumerate(system.m_part))
    return render_table(_table(meta, coeffs, "x"), args.format), 0


def cmd_transform(args) -> tuple[str, int]:
    alpha, sign = args.alpha, args.beta
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    HalfParams(args.n, alpha, sign, args.mass_plus or 0)
    j_max = args.j_max
    if j_max is None:
        j_max = int(2 * alpha + 4) if is_nonneg_integer(alpha) else max(args.n, 10)
    star = d_star if sign == MINUS_HALF else e_star
    meta = {
        "alpha": alpha,
        "n": args.n,
        "beta": "-1/2" if sign == MINUS_HALF else "+1/2",
        "N": args.mass_plus,
        "form": "d_star" if sign == MINUS_HALF else "e_star",
        "j_max": j_max,
    }
    coeffs = [(j, star(j, args.n, alpha)) for j in range(j_max + 1)]
    return render_table(_table(meta, coeffs, "t"), args.format), 0


# reports


def _result(check: str, params: dict, ok: bool, detail: Any = None) -> dict:
    return {"check": check, "params": params, "pass": bool(ok), "detail": detail}


def render_report(command: str, params: dict, results: list[dict], fmt: str) -> str:
    passed = all(r["pass"] for r in results)
    doc = {
        "tool_version": __version__,
        "command": command,
        "params": params,
        "results": results,
        "pass": passed,
    }
    if fmt == "json":
        return json.dumps(jsonable(doc), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["check", "params", "pass"])
        for r in results:
            p = ";".join(f"{k}={jsonable(v)}" for k, v in r["params"].items())
            writer.writerow([r["check"], p, "true" if r["pass"] else "false"])
        return buf.getvalue()
    lines = []
    for r in results:
        p = " ".join(f"{k}={jsonable(v)}" for k, v in r["params"].items())
        lines.append(f"{'PASS' if r['pass'] else 'FAIL'}  {r['check']:<22} {p}")
    n_fail = sum(not r["pass"] for r in results)
    lines.append(f"{len(results) - n_fail}/{len(results)} passed")
    return "\n".join(lines) + "\n"


def _residual_result(check: str, params: dict, residual: DensePoly) -> dict:
    ok = residual.is_zero()
    return _result(check, params, ok, None if ok else {"residual": residual})


def _parse_fault(text: str | None) -> int | None:
    if text is None:
        return None
    m = re.fullmatch(r"c(\d+)", text)
    if not m:
        raise UsageError(f"--inject-fault expects cK, got {text!r}")
    return int(m.group(1))


def run_suite(
    suite: str,
    alphas: Iterable[Fraction],
    n_max: int,
    masses: Iterable[Fraction],
    betas: Iterable[str] = (MINUS_HALF, PLUS_HALF),
    gs: Iterable[DensePoly] = DEFAULT_G,
    fault_index: int | None = None,
) -> list[dict]:
    alphas, masses, betas, gs = list(alphas), list(masses), list(betas), list(gs)
    results = []
    for n in range(n_max + 1):
        for alpha in alphas:
            if suite == "rel":
                base = {"n": n, "alpha": alpha}
                results.append(_residual_result("rel1", base, rel1_residual(n, alpha)))
                results.append(_residual_result("rel2", base, rel2_residual(n, alpha)))
                continue
            if suite == "hom":
                first, second = hom_residual(n, alpha)
                results.append(_residual_result("hom_first", {"n": n, "alpha": alpha}, first))
                results.append(_residual_result("hom_second", {"n": n, "alpha": alpha}, second))
                continue
            for mass in masses:
                base = {"n": n, "alpha": alpha, "M": mass}
                if suite == "dv1":
                    results.append(_residual_result("dv1", base, dv1_residual(n, alpha, mass)))
                elif suite == "dv2":
                    system = None
                    if fault_index is not None:
                        system = build_system(n, alpha, truncation=max(n, fault_index))
                        bumped = system.m_part[fault_index] + 1
                        system = system.with_coefficient(fault_index, bumped)
                    results.append(
                        _residual_result("dv2", base, dv2_residual(n, alpha, mass, system))
                    )
                elif suite == "general":
                    for g in gs:
                        residual = dv_general_residual(n, alpha, mass, g)
                        results.append(
                            _residual_result("dv_general", {**base, "g": g}, residual)
                        )
                elif suite == "half":
                    for sign in betas:
                        p = HalfParams.from_source_mass(n, alpha, sign, mass)
                        params = {
                            "n": n,
                            "alpha": alpha,
                            "beta": p.beta,
                            "N": p.mass_plus,
                        }
                        results.append(_residual_result("half_de", params, half_de_residual(p)))
    return results


def cmd_verify(args) -> tuple[str, int]:
    alphas = args.alpha or list(ALPHA_GRID)
    masses = args.masses or list(MASS_SAMPLES)
    n_max = args.n_max
    if n_max is None:
        n_max = 6 if args.suite == "half" else 12
    if n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    fault = _parse_fault(args.inject_fault)
    if fault is not None and args.suite != "dv2":
        raise UsageError("--inject-fault is only available for --suite dv2")
    for a in alphas:
        if a == -1:
            raise UsageError("alpha = -1 is a pole")
        if args.suite == "half" and a == Fraction(-3, 2):
            raise UsageError("alpha = -3/2 is a pole of the plus_half transform")
    betas = args.beta or [MINUS_HALF, PLUS_HALF]
    results = run_suite(args.suite, alphas, n_max, masses, betas, args.g or DEFAULT_G, fault)
    params = {
        "suite": args.suite,
        "alpha": alphas,
        "n_max": n_max,
        "M": masses if args.suite not in ("rel", "hom") else None,
        "inject_fault": args.inject_fault,
    }
    text = render_report("verify", params, results, args.format)
    return text, 0 if all(r["pass"] for r in results) else 1


def cmd_ortho(args) -> tuple[str, int]:
    if args.alpha <= -1:
        raise UsageError(f"alpha must exceed -1, got {rational_str(args.alpha)}")
    if args.mass < 0 or (args.mass_plus is not None and args.mass_plus < 0):
        raise UsageError("masses must be nonnegative")
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    if args.beta is None:
        report = orthogonality_check(args.n_max, args.alpha, args.mass)
    else:
        if args.mass_plus is not None:
            p = HalfParams(0, args.alpha, args.beta, args.mass_plus)
        else:
            p = HalfParams.from_source_mass(0, args.alpha, args.beta, args.mass)
        report = half_orthogonality_check(p, args.n_max)
    result = _result(report.check, report.params, report.passed, report.to_dict())
    text = render_report("ortho", report.params, [result], args.format)
    return text, 0 if report.passed else 1


def _poly_from_factors(scale: Fraction, *factors: DensePoly) -> DensePoly:
    out = DensePoly.constant(scale)
    for f in factors:
        out = out * f
    return out


def special_case_tables() -> dict[int, dict[str, Any]]:
    """Hand transcriptions of the known alpha=0 and alpha=1 equations, split into M-parts."""
    one_minus_x2 = DensePoly((1, 0, -1))
    x = DensePoly.x()
    F = Fraction
    krall = {
        "m_part": {
            2: _poly_from_factors(F(6), one_minus_x2),
            3: _poly_from_factors(F(4), x, one_minus_x2),
            4: _poly_from_factors(F(-1, 2), one_minus_x2, one_minus_x2),
        },
        "eigen_m": lambda n: F(1, 2) * n * (n + 1) * (n - 1) * (n + 2),
        "eigen": lambda n: F(n * (n + 1)),
        "c2": one_minus_x2,
        "c1": _poly_from_factors(F(-2), x),
        "order": 4,
    }
    littlejohn = {
        "m_part": {
            2: _poly_from_factors(F(10), one_minus_x2),
            3: _poly_from_factors(F(40, 3), x, one_minus_x2),
            4: _poly_from_factors(F(-5, 3), one_minus_x2, DensePoly((1, 0, -3))),
            5: _poly_from_factors(F(-2, 3), x, one_minus_x2, one_minus_x2),
            6: _poly_from_factors(F(1, 36), one_minus_x2, one_minus_x2, one_minus_x2),
        },
        "eigen_m": lambda n: F(1, 36) * n * (n + 3) * (n - 1) * (n + 1) * (n + 2) * (n + 4),
        "eigen": lambda n: F(n * (n + 3)),
        "c2": one_minus_x2,
        "c1": _poly_from_factors(F(-4), x),
        "order": 6,
    }
    return {0: krall, 1: littlejohn}


def special_case_results(n_max: int = 10) -> list[dict]:
    results = []
    for alpha, ref in special_case_tables().items():
        label = "krall" if alpha == 0 else "littlejohn"
        order = ref["order"]
        for i in range(1, order + 5):
            expected = ref["m_part"].get(i, DensePoly.zero())
            got = c_coeff(i, 0, alpha)
            results.append(
                _result(f"{label}_c{i}", {"alpha": alpha, "i": i}, got == expected,
                        None if got == expected else {"got": got, "expected": expected})
            )
        for n in range(n_max + 1):
            system = build_system(n, alpha)
            got_m = c_coeff(0, n, alpha)(0)
            ok = (
                got_m == ref["eigen_m"](n)
                and system.eigenvalue == ref["eigen"](n)
                and system.classical_c2 == ref["c2"]
                and system.classical_c1 == ref["c1"]
            )
            results.append(
                _result(f"{label}_c0_and_classical", {"alpha": alpha, "n": n}, ok,
                        None if ok else {"c0": got_m, "expected": ref["eigen_m"](n)})
            )
        report = finite_order_report(alpha, order + 8)
        results.append(
            _result(f"{label}_order", {"alpha": alpha}, report.passed, report.detail)
        )
    # the b-family needs no special transcription; spot-check b_1 = -x
    results.append(_result("b1_is_minus_x", {}, b_coeff(1, 0) == DensePoly((0, -1))))
    return results


def cmd_special_cases(args) -> tuple[str, int]:
    results = special_case_results(args.n_max)
    text = render_report("special-cases", {"n_max": args.n_max}, results, args.format)
    return text, 0 if all(r["pass"] for r in results) else 1


COMMANDS = {
    "de-coeffs": cmd_de_coeffs,
    "verify": cmd_verify,
    "ortho": cmd_ortho,
    "special-cases": cmd_special_cases,
    "transform": cmd_transform,
}


def _write(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = COMMANDS[args.command](args)
    except (UsageError, GenUltraError) as exc:
        print(f"genultra {args.command}: error: {exc}", file=sys.stderr)
        return 2
    _write(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
