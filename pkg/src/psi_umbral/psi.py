"""Admissible weight sequences and their combinatorics.

A weight sequence assigns to every n >= 1 a nonzero rational n_psi, with
0_psi = 0.  The weights generalize n itself: the classical choice n_psi = n
gives ordinary calculus, the Jackson choice n_psi = (1-q^n)/(1-q) gives
q-calculus, the all-ones choice gives divided differences, a rational
function R evaluated along the geometric sequence q^n covers a whole family
at once, and arbitrary nonzero values may be supplied directly.

From the weights the module derives factorials n_psi!, falling factorials
and the generalized binomial coefficients used throughout the package.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Polynomial, as_scalar, scalar_from_str, scalar_to_str
from .errors import AdmissibilityError, CapExceededError

CLASSICAL = "classical"
JACKSON = "q"
DIVIDED_DIFFERENCE = "divided_difference"
RATIONAL = "rational"
CUSTOM = "custom"


class RationalFunction:
    """Quotient of two polynomials, evaluated exactly."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    def __call__(self, x0) -> Fraction:
        d = self.den(x0)
        if d == 0:
            raise ZeroDivisionError(
                "rational function denominator vanishes at %s" % (x0,))
        return self.num(x0) / d

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def jackson_bracket(q: Fraction, n: int) -> Fraction:
    """The q-analog (1-q^n)/(1-q), computed as 1 + q + ... + q^(n-1).

    The closed sum avoids the 0/0 at q = 1, but q = 1 is rejected anyway:
    the defining quotient is undefined there and admissibility demands it.
    """
    q = as_scalar(q)
    if q == 1:
        raise AdmissibilityError("Jackson weights are undefined at q = 1", n=n)
    total = Fraction(0)
    power = Fraction(1)
    for _ in range(n):
        total += power
        power *= q
    return total


class PsiSequence:
    """One admissible weight sequence, memoized up to a cap.

    Rule-based kinds extend their cache on demand past the construction cap
    (still finite and exact); the custom kind owns exactly the values it was
    given and errors beyond them.
    """

    def __init__(self, kind: str, rule, cap: int, label: str, params: dict,
                 values=None):
        self.kind = kind
        self._rule = rule
        self.label = label
        self.params = params
        self._memo = [Fraction(0)]
        if values is not None:
            self._memo.extend(as_scalar(v) for v in values)
        self._fact = [Fraction(1)]
        self._extend_to(cap)

    # -- constructors -------------------------------------------------

    @classmethod
    def classical(cls, cap: int = 16) -> "PsiSequence":
        return cls(CLASSICAL, lambda n: Fraction(n), cap, "classical", {})

    @classmethod
    def jackson(cls, q, cap: int = 16) -> "PsiSequence":
        q = as_scalar(q)
        return cls(JACKSON, lambda n: jackson_bracket(q, n), cap,
                   "q=%s" % scalar_to_str(q), {"q": q})

    @classmethod
    def divided_difference(cls, cap: int = 16) -> "PsiSequence":
        return cls(DIVIDED_DIFFERENCE, lambda n: Fraction(1), cap,
                   "divided_difference", {})

    @classmethod
    def rational(cls, rat: RationalFunction, q, cap: int = 16) -> "PsiSequence":
        q = as_scalar(q)

        def rule(n):
            try:
                return rat(q ** n)
            except ZeroDivisionError as exc:
                raise AdmissibilityError(str(exc), n=n)

        return cls(RATIONAL, rule, cap, "rational(q=%s)" % scalar_to_str(q),
                   {"q": q, "R": rat})

    @classmethod
    def custom(cls, values, cap: int | None = None) -> "PsiSequence":
        values = [as_scalar(v) for v in values]
        if cap is None:
            cap = len(values)
        if cap > len(values):
            raise CapExceededError(
                "custom weights supply %d values but cap %d was requested"
                % (len(values), cap))
        return cls(CUSTOM, None, cap, "custom", {}, values=values)

    # -- weights ------------------------------------------------------

    def _extend_to(self, n: int):
        while len(self._memo) <= n:
            m = len(self._memo)
            if self._rule is None:
                raise CapExceededError(
                    "custom weight sequence has no value at n=%d" % m, n=m)
            value = self._rule(m)
            if value == 0:
                raise AdmissibilityError(
                    "weight vanishes at n=%d" % m, n=m, psi=self.label)
            self._memo.append(value)

    def n_psi(self, n: int) -> Fraction:
        """The weight n_psi; zero at n = 0, guaranteed nonzero for n >= 1."""
        if n < 0:
            raise ValueError("weights are indexed by naturals")
        if n == 0:
            return Fraction(0)
        self._extend_to(n)
        value = self._memo[n]
        if value == 0:
            raise AdmissibilityError(
                "weight vanishes at n=%d" % n, n=n, psi=self.label)
        return value

    def factorial(self, n: int) -> Fraction:
        """n_psi! = 1_psi * 2_psi * ... * n_psi, empty product at n = 0."""
        while len(self._fact) <= n:
            m = len(self._fact)
            self._fact.append(self._fact[-1] * self.n_psi(m))
        return self._fact[n]

    def falling(self, n: int, k: int) -> Fraction:
        """n_psi * (n-1)_psi * ... * (n-k+1)_psi, empty product at k = 0."""
        out = Fraction(1)
        for i in range(k):
            out *= self.n_psi(n - i)
        return out

    def binomial(self, n: int, k: int) -> Fraction:
        """Generalized binomial: falling(n, k) / k_psi!."""
        if k < 0 or k > n:
            return Fraction(0)
        return self.falling(n, k) / self.factorial(k)

    def values(self, n_max: int) -> list:
        return [self.n_psi(n) for n in range(1, n_max + 1)]

    @property
    def stored_cap(self) -> int:
        return len(self._memo) - 1

    def __repr__(self):
        return "PsiSequence(%s)" % self.label

    # -- serialization ------------------------------------------------

    def to_json(self):
        if self.kind == CLASSICAL:
            return {"kind": "classical"}
        if self.kind == DIVIDED_DIFFERENCE:
            return {"kind": "divided_difference"}
        if self.kind == JACKSON:
            return {"kind": "q", "q": scalar_to_str(self.params["q"])}
        if self.kind == RATIONAL:
            rat = self.params["R"]
            return {"kind": "rational",
                    "R_num": rat.num.to_json(),
                    "R_den": rat.den.to_json(),
                    "q": scalar_to_str(self.params["q"])}
        return {"kind": "custom",
                "n_psi": [scalar_to_str(v) for v in self._memo[1:]]}

    @classmethod
    def from_json(cls, data, cap: int = 16) -> "PsiSequence":
        kind = data.get("kind")
        if kind == "classical":
            return cls.classical(cap)
        if kind == "divided_difference":
            return cls.divided_difference(cap)
        if kind == "q":
            return cls.jackson(scalar_from_str(data["q"]), cap)
        if kind == "rational":
            rat = RationalFunction(Polynomial.from_json(data["R_num"]),
                                   Polynomial.from_json(data["R_den"]))
            return cls.rational(rat, scalar_from_str(data["q"]), cap)
        if kind == "custom":
            values = [scalar_from_str(v) for v in data["n_psi"]]
            return cls.custom(values, min(cap, len(values)))
        raise AdmissibilityError("unknown weight sequence kind %r" % (kind,))


class AdmissibilityReport:
    """Outcome of validating a weight sequence up to a cap."""

    def __init__(self, ok: bool, cap: int, label: str,
                 first_violation=None, reason: str = ""):
        self.ok = ok
        self.cap = cap
        self.label = label
        self.first_violation = first_violation
        self.reason = reason

    def to_json(self):
        doc = {"ok": self.ok, "cap": self.cap, "psi": self.label}
        if not self.ok:
            doc["first_violation"] = self.first_violation
            doc["reason"] = self.reason
        return doc


def validate_admissible(psi: PsiSequence, cap: int) -> AdmissibilityReport:
    """Check n_psi != 0 and defined for 1 <= n <= cap; report the first failure."""
    for n in range(1, cap + 1):
        try:
            psi.n_psi(n)
        except (AdmissibilityError, CapExceededError) as exc:
            return AdmissibilityReport(False, cap, psi.label,
                                       first_violation=n, reason=exc.message)
    return AdmissibilityReport(True, cap, psi.label)
