"""JSON job descriptions for the command line.

A job file is one JSON object naming a command and its parameters.  Keys
are whitelisted per command and anything unknown is rejected; every
validation error carries a JSON pointer to the offending value.  Rational
scalars travel as strings ("3/4" or "2"), weight sequences in their JSON
object form, operator expressions as strings to be parsed in context.
"""

from __future__ import annotations

import json

from .algebra import scalar_from_str
from .errors import JobSpecError
from .psi import PsiSequence, validate_admissible

COMMON_KEYS = {"command", "cap", "psi"}

COMMAND_KEYS = {
    "basic": {"op", "n", "formula"},
    "expand": {"t", "q", "lambda_samples"},
    "detect": {"op"},
    "verify": {"suite"},
    "integrate": {"kind", "q", "r_num", "r_den", "poly"},
    "translate": {"y", "poly"},
    "table": set(),
}


def _fail(message, pointer):
    raise JobSpecError(message, pointer=pointer)


def _check_scalar_str(value, pointer):
    if not isinstance(value, str):
        _fail("expected a rational string", pointer)
    try:
        scalar_from_str(value)
    except (ValueError, ZeroDivisionError):
        _fail("not a rational: %r" % (value,), pointer)
    return value


def _check_scalar_list(value, pointer):
    if not isinstance(value, list):
        _fail("expected a list of rational strings", pointer)
    for i, item in enumerate(value):
        _check_scalar_str(item, "%s/%d" % (pointer, i))
    return value


class JobSpec:
    """Validated parameters for one command invocation."""

    __slots__ = ("command", "cap", "psi", "params")

    def __init__(self, command: str, cap: int | None, psi: PsiSequence | None,
                 params: dict):
        self.command = command
        self.cap = cap
        self.psi = psi
        self.params = params


def parse_job(doc, command: str | None = None, cap_default: int = 16) -> JobSpec:
    """Validate a decoded job object; ``command`` may override or confirm."""
    if not isinstance(doc, dict):
        _fail("job spec must be a JSON object", "")
    cmd = doc.get("command", command)
    if cmd is None:
        _fail("no command named (key \"command\" missing)", "/command")
    if command is not None and cmd != command:
        _fail("job names command %r but %r was invoked" % (cmd, command),
              "/command")
    if cmd not in COMMAND_KEYS:
        _fail("unknown command %r" % (cmd,), "/command")
    allowed = COMMON_KEYS | COMMAND_KEYS[cmd]
    for key in doc:
        if key not in allowed:
            _fail("unknown key", "/%s" % key)

    cap = cap_default
    if "cap" in doc:
        cap = doc["cap"]
        if not isinstance(cap, int) or isinstance(cap, bool) or cap < 0:
            _fail("cap must be a nonnegative integer", "/cap")

    psi = None
    if "psi" in doc:
        if not isinstance(doc["psi"], dict):
            _fail("psi must be an object", "/psi")
        try:
            psi = PsiSequence.from_json(doc["psi"], cap=0)
        except Exception as exc:
            _fail("bad weight sequence: %s" % exc, "/psi")
        report = validate_admissible(psi, cap)
        if not report.ok:
            pointer = "/psi/q" if doc["psi"].get("kind") == "q" else "/psi"
            _fail("weights inadmissible at cap %d: %s (n=%s)"
                  % (cap, report.reason, report.first_violation), pointer)

    params = {}
    for key in COMMAND_KEYS[cmd]:
        if key not in doc:
            continue
        value = doc[key]
        if key in ("op", "t", "q", "suite", "kind") and cmd != "integrate":
            if not isinstance(value, str):
                _fail("expected a string", "/%s" % key)
        if cmd == "integrate" and key == "kind":
            if value not in ("q", "r", "psi"):
                _fail("kind must be \"q\", \"r\" or \"psi\"", "/kind")
        if cmd == "integrate" and key == "q":
            _check_scalar_str(value, "/q")
        if key in ("n", "formula"):
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                _fail("expected a nonnegative integer", "/%s" % key)
        if key in ("poly", "r_num", "r_den"):
            _check_scalar_list(value, "/%s" % key)
        if key == "y":
            _check_scalar_str(value, "/y")
        if key == "lambda_samples":
            _check_scalar_list(value, "/lambda_samples")
        params[key] = value
    return JobSpec(cmd, cap if "cap" in doc else None, psi, params)


def load_job_spec(path: str, command: str | None = None,
                  cap_default: int = 16) -> JobSpec:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        _fail("job file not found: %s" % path, "")
    except json.JSONDecodeError as exc:
        _fail("invalid JSON: %s" % exc, "")
    return parse_job(doc, command=command, cap_default=cap_default)
