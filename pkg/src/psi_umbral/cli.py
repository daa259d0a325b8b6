"""Command line front end.

Subcommands: basic, expand, detect, verify, integrate, translate, table.
Parameters come either from flags or from a JSON job file (--job), never
both.  Output is text, json, or csv (--format); everything printed is
deterministic for fixed inputs.  Exit status: 0 when the requested
computation succeeded and every check it ran passed, 1 when a check
failed or the computation could not be completed, 2 for usage errors,
malformed expressions, and bad job files.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .algebra import Polynomial, format_polynomial, scalar_from_str, scalar_to_str
from .errors import (ExprParseError, JobSpecError, NotDegreeLoweringError,
                     NotShiftInvariantError, PsiUmbralError)
from .expansion import (conjugate_indicator_check, detect_psi_series,
                        expand_in_monomials, reconstruct_from_monomial_form)
from .exprparse import OperatorContext, parse_operator
from .integration import psi_integral, q_integral, r_integral
from .jobs import COMMAND_KEYS, load_job_spec
from .operators import psi_derivative
from .psi import PsiSequence, RationalFunction, validate_admissible
from .umbral import DeltaOperator, basic_sequence_solve, rodrigues_sequence, translate
from .verify import SUITE_ORDER, run_all, run_suite

DEFAULT_CAP = 16
CAP_ENV = "PSI_UMBRAL_CAP"


def _usage(message: str, pointer: str = "") -> JobSpecError:
    return JobSpecError(message, pointer=pointer)


def resolve_cap(flag_value, job_value) -> int:
    if job_value is not None:
        return job_value
    if flag_value is not None:
        if flag_value < 0:
            raise _usage("cap must be nonnegative", "--cap")
        return flag_value
    env = os.environ.get(CAP_ENV)
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise _usage("%s must be an integer, got %r" % (CAP_ENV, env))
        if value < 0:
            raise _usage("%s must be nonnegative" % CAP_ENV)
        return value
    return DEFAULT_CAP


def parse_psi_text(text: str, cap: int) -> PsiSequence:
    """Weight sequence from a flag value.

    Accepts the names "classical" and "divided_difference", the forms
    "q:3/4" and "custom:1,3,7,15", or a JSON object in the file format.
    """
    text = text.strip()
    try:
        if text.startswith("{"):
            return PsiSequence.from_json(json.loads(text), cap)
        if text == "classical":
            return PsiSequence.classical(cap)
        if text == "divided_difference":
            return PsiSequence.divided_difference(cap)
        if text.startswith("q:"):
            return PsiSequence.jackson(scalar_from_str(text[2:]), cap)
        if text.startswith("custom:"):
            values = [scalar_from_str(v) for v in text[len("custom:"):].split(",")]
            return PsiSequence.custom(values, min(cap, len(values)))
    except PsiUmbralError as exc:
        raise _usage("bad weight sequence %r: %s" % (text, exc.message), "--psi")
    except (ValueError, ZeroDivisionError, json.JSONDecodeError) as exc:
        raise _usage("bad weight sequence %r: %s" % (text, exc), "--psi")
    raise _usage("unrecognized weight sequence %r (try classical, "
                 "divided_difference, q:RAT, custom:V1,V2,... or JSON)" % text,
                 "--psi")


def _require_admissible(psi: PsiSequence, cap: int):
    report = validate_admissible(psi, cap)
    if not report.ok:
        raise _usage("weights inadmissible at cap %d: %s (n=%s)"
                     % (cap, report.reason, report.first_violation), "--psi")
    return psi


def _coeff_list(text: str, pointer: str) -> Polynomial:
    try:
        return Polynomial(tuple(scalar_from_str(v) for v in text.split(",")))
    except (ValueError, ZeroDivisionError) as exc:
        raise _usage("bad coefficient list %r: %s" % (text, exc), pointer)


def _scalar(text: str, pointer: str) -> Fraction:
    try:
        return scalar_from_str(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _usage("bad rational %r: %s" % (text, exc), pointer)


# -- parameter assembly ------------------------------------------------------

FLAG_KEYS = {
    "basic": ("op", "n", "formula"),
    "expand": ("t", "q", "lambda_samples"),
    "detect": ("op",),
    "verify": ("suite",),
    "integrate": ("kind", "q", "r_num", "r_den", "poly"),
    "translate": ("y", "poly"),
    "table": (),
}

DEFAULTS = {
    "basic": {"op": "Dpsi", "n": 8, "formula": 4},
    "expand": {"q": "Dpsi"},
    "verify": {"suite": "all"},
    "integrate": {"kind": "psi"},
    "translate": {"y": "1"},
}


def gather_params(args) -> tuple[str, dict, int, PsiSequence | None]:
    command = args.command
    params = {}
    cap_job = None
    psi = None
    if args.job is not None:
        clashing = [k for k in FLAG_KEYS[command]
                    if getattr(args, k, None) is not None]
        if args.psi is not None:
            clashing.append("psi")
        if args.cap is not None:
            clashing.append("cap")
        if clashing:
            raise _usage("--job replaces these flags: %s"
                         % ", ".join("--" + c.replace("_", "-")
                                     for c in sorted(clashing)))
        job = load_job_spec(args.job, command=command,
                            cap_default=DEFAULT_CAP)
        params.update(job.params)
        cap_job = job.cap
        psi = job.psi
    else:
        for key in FLAG_KEYS[command]:
            value = getattr(args, key, None)
            if value is not None:
                params[key] = value
    for key, value in DEFAULTS.get(command, {}).items():
        params.setdefault(key, value)
    cap = resolve_cap(args.cap, cap_job)
    if psi is None:
        psi_text = args.psi if args.psi is not None else "classical"
        psi = parse_psi_text(psi_text, cap)
    _require_admissible(psi, cap)
    return command, params, cap, psi


def _operator(params, key, cap, psi):
    text = params.get(key)
    if text is None:
        raise _usage("--%s is required" % key.replace("_", "-"), "/" + key)
    return parse_operator(text, OperatorContext(cap, psi)), text


# -- subcommand bodies -------------------------------------------------------

def run_basic(params, cap, psi):
    op, op_text = _operator(params, "op", cap, psi)
    n_max = params.get("n", 8)
    formula = params.get("formula", 4)
    if formula not in (1, 2, 3, 4):
        raise _usage("formula must be 1, 2, 3 or 4", "/formula")
    solved = basic_sequence_solve(op, psi, n_max)
    closed = None
    agreement = None
    try:
        delta = DeltaOperator.from_operator(op, psi)
        closed = rodrigues_sequence(delta, n_max, formula=formula)
    except (NotShiftInvariantError, NotDegreeLoweringError):
        pass
    if closed is not None:
        agreement = all(closed[n] == solved[n] for n in range(n_max + 1))
    rows = []
    for n in range(n_max + 1):
        row = {"n": n, "p_n": format_polynomial(solved[n])}
        if agreement is not None:
            row["closed_form_agrees"] = closed[n] == solved[n]
        rows.append(row)
    doc = {
        "command": "basic",
        "op": op_text,
        "cap": cap,
        "psi": psi.to_json(),
        "formula": formula if closed is not None else None,
        "closed_form_agrees": agreement,
        "polys": [p.to_json() for p in solved.polys],
        "rows": rows,
    }
    lines = ["basic sequence of %s (n <= %d)" % (op_text, n_max)]
    for row in rows:
        suffix = ""
        if agreement is not None:
            suffix = "   [closed form %s]" % ("ok" if row["closed_form_agrees"]
                                              else "MISMATCH")
        lines.append("  p_%-2d = %s%s" % (row["n"], row["p_n"], suffix))
    if agreement is None:
        lines.append("  (operator is not shift-invariant; triangular solve only)")
    return doc, lines, agreement is not False


def run_expand(params, cap, psi):
    t_op, t_text = _operator(params, "t", cap, psi)
    base_op, base_text = _operator(params, "q", cap, psi)
    exp = expand_in_monomials(t_op, base_op)
    back = reconstruct_from_monomial_form(exp, exp.order)
    ok = back == t_op.truncated(back.cap)
    conj = None
    if params.get("lambda_samples"):
        samples = [_scalar(s, "/lambda_samples") for s in params["lambda_samples"]]
        conj_ok, report = conjugate_indicator_check(t_op, base_op, samples)
        conj = report
        ok = ok and conj_ok
    doc = exp.to_json(base_text)
    doc.update({
        "command": "expand",
        "t": t_text,
        "cap": cap,
        "psi": psi.to_json(),
        "reconstructs": back == t_op.truncated(back.cap),
        "conjugation": conj,
        "rows": [{"n": n, "q_n": format_polynomial(q)}
                 for n, q in enumerate(exp.coeff_polys)],
    })
    lines = ["%s as a series in %s with polynomial coefficients:"
             % (t_text, base_text)]
    for row in doc["rows"]:
        lines.append("  q_%-2d = %s" % (row["n"], row["q_n"]))
    lines.append("reconstruction check: %s"
                 % ("ok" if doc["reconstructs"] else "FAILED"))
    if conj is not None:
        lines.append("eigenseries conjugation check: %s"
                     % ("ok" if conj["ok"] else "FAILED"))
    return doc, lines, ok


def run_detect(params, cap, psi):
    op, op_text = _operator(params, "op", cap, psi)
    result = detect_psi_series(op)
    doc = result.to_json()
    doc.update({"command": "detect", "op": op_text, "cap": cap})
    if result.is_series:
        weights = result.psi.values(result.psi.stored_cap)
        doc["rows"] = [{"n": n + 1, "n_psi": scalar_to_str(w)}
                       for n, w in enumerate(weights)]
        lines = ["%s is a series in a weighted derivative" % op_text,
                 "  scale applied: %s" % scalar_to_str(result.scale),
                 "  weights: %s" % ", ".join(scalar_to_str(w) for w in weights),
                 "  series coefficients: %s"
                 % ", ".join(scalar_to_str(c) for c in result.series_coeffs)]
    else:
        doc["rows"] = [{"witness_n": result.witness[0],
                        "witness_k": result.witness[1]}]
        lines = ["%s is NOT a series in any weighted derivative" % op_text,
                 "  first failing pair: n=%d, k=%d" % result.witness]
    return doc, lines, result.is_series


def run_verify(params, cap, psi):
    del psi  # the suites pick their own standard weight family
    if cap < 6:
        raise _usage("verify needs --cap at least 6 (counterexample witnesses "
                     "live at degree 4)", "--cap")
    suite = params.get("suite", "all")
    if suite == "all":
        groups = run_all(cap)
    elif suite in SUITE_ORDER:
        groups = [(suite, run_suite(suite, cap))]
    else:
        raise _usage("unknown suite %r (have: all, %s)"
                     % (suite, ", ".join(SUITE_ORDER)), "/suite")
    rows = []
    lines = []
    ok = True
    for name, results in groups:
        for r in results:
            rows.append({"suite": name, "check": r.name, "passed": r.passed})
            lines.append("%s %-12s %s" % ("PASS" if r.passed else "FAIL",
                                          name, r.name))
            ok = ok and r.passed
    lines.append("%d checks, %d failed" % (len(rows),
                                           sum(not r["passed"] for r in rows)))
    doc = {"command": "verify", "cap": cap, "suite": suite, "rows": rows,
           "passed": ok}
    return doc, lines, ok


def run_integrate(params, cap, psi):
    kind = params.get("kind", "psi")
    if "poly" not in params:
        raise _usage("--poly is required", "/poly")
    if isinstance(params["poly"], str):
        p = _coeff_list(params["poly"], "/poly")
    else:
        p = Polynomial(tuple(scalar_from_str(v) for v in params["poly"]))

    if kind == "q":
        if "q" not in params:
            raise _usage("--q is required for kind=q", "/q")
        q = _scalar(params["q"], "/q")
        integral = q_integral(q, p)
        dpsi = PsiSequence.jackson(q, cap)
    elif kind == "r":
        for key in ("q", "r_num", "r_den"):
            if key not in params:
                raise _usage("--%s is required for kind=r"
                             % key.replace("_", "-"), "/" + key)
        q = _scalar(params["q"], "/q")
        num = (_coeff_list(params["r_num"], "/r_num")
               if isinstance(params["r_num"], str)
               else Polynomial(tuple(scalar_from_str(v) for v in params["r_num"])))
        den = (_coeff_list(params["r_den"], "/r_den")
               if isinstance(params["r_den"], str)
               else Polynomial(tuple(scalar_from_str(v) for v in params["r_den"])))
        try:
            rat = RationalFunction(num, den)
        except ZeroDivisionError as exc:
            raise _usage(str(exc), "/r_den")
        integral = r_integral(rat, q, p)
        dpsi = PsiSequence.rational(rat, q, cap)
    elif kind == "psi":
        integral = psi_integral(psi, p)
        dpsi = psi
    else:
        raise _usage("kind must be q, r or psi", "/kind")

    roundtrip = psi_derivative(dpsi, integral) == p
    doc = {
        "command": "integrate",
        "kind": kind,
        "cap": cap,
        "input": p.to_json(),
        "integral": integral.to_json(),
        "derivative_roundtrip": roundtrip,
        "rows": [{"input": format_polynomial(p),
                  "integral": format_polynomial(integral),
                  "roundtrip": roundtrip}],
    }
    if kind == "psi":
        doc["psi"] = psi.to_json()
    lines = ["integral: %s" % format_polynomial(integral),
             "derivative of the integral returns the input: %s"
             % ("yes" if roundtrip else "NO")]
    return doc, lines, roundtrip


def run_translate(params, cap, psi):
    if "poly" not in params:
        raise _usage("--poly is required", "/poly")
    if isinstance(params["poly"], str):
        p = _coeff_list(params["poly"], "/poly")
    else:
        p = Polynomial(tuple(scalar_from_str(v) for v in params["poly"]))
    y = _scalar(params.get("y", "1"), "/y")
    shifted = translate(psi, y, p)
    doc = {
        "command": "translate",
        "cap": cap,
        "psi": psi.to_json(),
        "y": scalar_to_str(y),
        "input": p.to_json(),
        "result": shifted.to_json(),
        "rows": [{"input": format_polynomial(p), "y": scalar_to_str(y),
                  "result": format_polynomial(shifted)}],
    }
    lines = ["translate by y = %s: %s" % (scalar_to_str(y),
                                          format_polynomial(shifted))]
    return doc, lines, True


def run_table(params, cap, psi):
    rows = []
    for n in range(cap + 1):
        rows.append({"n": n,
                     "n_psi": scalar_to_str(psi.n_psi(n)) if n else "0",
                     "factorial": scalar_to_str(psi.factorial(n))})
    tri_max = min(cap, 10)
    triangle = [[scalar_to_str(psi.binomial(n, k)) for k in range(n + 1)]
                for n in range(tri_max + 1)]
    doc = {"command": "table", "cap": cap, "psi": psi.to_json(),
           "rows": rows, "binomials": triangle}
    lines = ["weights for %s (cap %d)" % (psi.label, cap),
             "  n   n_psi        n_psi!"]
    for row in rows:
        lines.append("  %-3d %-12s %s" % (row["n"], row["n_psi"],
                                          row["factorial"]))
    lines.append("binomial triangle (n <= %d):" % tri_max)
    for n, tri_row in enumerate(triangle):
        lines.append("  %-3d %s" % (n, "  ".join(tri_row)))
    return doc, lines, True


RUNNERS = {
    "basic": run_basic,
    "expand": run_expand,
    "detect": run_detect,
    "verify": run_verify,
    "integrate": run_integrate,
    "translate": run_translate,
    "table": run_table,
}


# -- wiring ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psi-umbral",
        description="Exact calculus of weighted derivatives, basic polynomial "
                    "sequences, and operator expansions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--cap", type=int, default=None,
                       help="operator table cap (default: $%s or %d)"
                            % (CAP_ENV, DEFAULT_CAP))
        p.add_argument("--psi", default=None,
                       help="weights: classical | divided_difference | q:RAT "
                            "| custom:V1,V2,... | JSON (default classical)")
        p.add_argument("--format", choices=("text", "json", "csv"),
                       default="text")
        p.add_argument("--job", default=None,
                       help="JSON job file supplying the parameters")

    p = sub.add_parser("basic", help="basic polynomial sequence of an operator")
    common(p)
    p.add_argument("--op", default=None, help="operator expression")
    p.add_argument("--n", type=int, default=None, help="highest index")
    p.add_argument("--formula", type=int, default=None,
                   help="closed formula for the cross-check (1-4)")

    p = sub.add_parser("expand", help="expand one operator in powers of another")
    common(p)
    p.add_argument("--t", default=None, help="operator to expand")
    p.add_argument("--q", default=None,
                   help="degree-lowering base operator (default Dpsi)")
    p.add_argument("--lambda", dest="lambda_samples", default=None,
                   help="comma list of rationals for the conjugation check")

    p = sub.add_parser("detect",
                       help="test whether an operator is a weighted-derivative series")
    common(p)
    p.add_argument("--op", default=None, help="operator expression")

    p = sub.add_parser("verify", help="run exact identity suites")
    common(p)
    p.add_argument("--suite", default=None,
                   choices=("all",) + SUITE_ORDER)

    p = sub.add_parser("integrate", help="formal antiderivative with roundtrip check")
    common(p)
    p.add_argument("--kind", default=None, choices=("q", "r", "psi"))
    p.add_argument("--q", default=None, help="ratio for kind=q or kind=r")
    p.add_argument("--r-num", dest="r_num", default=None,
                   help="numerator coefficients of the weight function")
    p.add_argument("--r-den", dest="r_den", default=None,
                   help="denominator coefficients of the weight function")
    p.add_argument("--poly", default=None, help="comma list of coefficients")

    p = sub.add_parser("translate", help="generalized shift of a polynomial")
    common(p)
    p.add_argument("--y", default=None, help="shift amount (rational)")
    p.add_argument("--poly", default=None, help="comma list of coefficients")

    p = sub.add_parser("table", help="weights, factorials and binomials")
    common(p)

    return parser


def _split_lambda(args):
    if getattr(args, "lambda_samples", None) is not None and isinstance(
            args.lambda_samples, str):
        args.lambda_samples = [s for s in args.lambda_samples.split(",") if s]


def render(doc, lines, fmt: str, stream) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2, sort_keys=True), file=stream)
    elif fmt == "csv":
        rows = doc.get("rows", [])
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()),
                                    lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        stream.write(buf.getvalue())
    else:
        for line in lines:
            print(line, file=stream)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _split_lambda(args)
    fmt = args.format
    try:
        command, params, cap, psi = gather_params(args)
        doc, lines, ok = RUNNERS[command](params, cap, psi)
    except (ExprParseError, JobSpecError) as exc:
        _report_error(exc, fmt)
        return 2
    except PsiUmbralError as exc:
        _report_error(exc, fmt)
        return 1
    render(doc, lines, fmt, sys.stdout)
    return 0 if ok else 1


def _report_error(exc: PsiUmbralError, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(exc.to_json(), indent=2, sort_keys=True),
              file=sys.stderr)
    else:
        print("error: %s" % exc, file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
