"""Expanding arbitrary operators in powers of a degree-lowering base.

Any linear operator T on polynomials can be written uniquely as
T = sum_n q_n * Q^n where Q lowers degree by exactly one and each q_n acts
by multiplication with a polynomial.  The coefficients fall out of a
triangular solve: apply both sides to 1, x, x^2, ... in turn.  A dual
variant replaces multiplication by x with the raising partner of Q and the
monomials with Q's basic sequence.  The generating sum P(x; lam) of the
q_n is the conjugate of T by the formal eigenfunction of Q, which is the
cross-check implemented here, order by order in lam with no truncation
leakage.

The same triangular data decides whether a given operator is a series in
SOME weighted derivative at all: read b_(n,k) off Q x^n = sum_k b_(n,k)
x^(n-k); the candidate weights are the k = 1 column, and the operator is
such a series exactly when every deeper column is the weighted-binomial
multiple of its diagonal entry.  Failures come with the first witness pair.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (NEG_INF, Polynomial, TruncatedSeries, as_scalar,
                      scalar_to_str)
from .errors import CapExceededError, NotDegreeLoweringError, NotShiftInvariantError
from .operators import GradedOperator, is_shift_invariant
from .psi import PsiSequence
from .umbral import BasicSequence, DeltaOperator, unit_normal_sequence


class OperatorExpansion:
    """Coefficient polynomials q_0..q_N of T in powers of a base operator."""

    __slots__ = ("coeff_polys", "base", "form")

    def __init__(self, coeff_polys, base: GradedOperator, form: str):
        self.coeff_polys = tuple(coeff_polys)
        self.base = base
        self.form = form

    @property
    def order(self) -> int:
        return len(self.coeff_polys) - 1

    def indicator_at(self, lam) -> Polynomial:
        """P(x; lam) = sum_n q_n(x) lam^n at an exact scalar."""
        lam = as_scalar(lam)
        out = Polynomial()
        lpow = Fraction(1)
        for q in self.coeff_polys:
            out = out + lpow * q
            lpow *= lam
        return out

    def to_json(self, base_label: str):
        return {"base": base_label,
                "coeffs": [q.to_json() for q in self.coeff_polys]}

    @classmethod
    def coeffs_from_json(cls, data) -> list:
        return [Polynomial.from_json(row) for row in data["coeffs"]]


def _base_powers_on_monomials(base: GradedOperator, cap: int) -> list:
    """table[n][m] = base^n applied to x^m, for n, m <= cap."""
    rows = [[Polynomial.monomial(m) for m in range(cap + 1)]]
    for _ in range(cap):
        rows.append([base.apply(p) for p in rows[-1]])
    return rows


def _check_lowers_by_one(base: GradedOperator, cap: int):
    if not base.image(0).is_zero:
        raise NotDegreeLoweringError("base operator does not kill constants")
    for n in range(1, cap + 1):
        if base.image(n).degree != n - 1:
            raise NotDegreeLoweringError(
                "base image of x^%d has degree %s, expected %d"
                % (n, base.image(n).degree, n - 1), n=n)


def expand_in_monomials(t: GradedOperator,
                        base: GradedOperator) -> OperatorExpansion:
    """Unique expansion T = sum q_n(x) base^n, solved on 1, x, x^2, ...

    base^m applied to x^m is a nonzero constant, which makes the system
    triangular with invertible pivots.
    """
    cap = min(t.cap, base.cap)
    _check_lowers_by_one(base, cap)
    powers = _base_powers_on_monomials(base, cap)
    qs = []
    for m in range(cap + 1):
        rem = t.image(m)
        for n in range(m):
            if not qs[n].is_zero:
                rem = rem - qs[n] * powers[n][m]
        pivot = powers[m][m].constant_term
        qs.append(rem / pivot)
    return OperatorExpansion(qs, base, "monomial")


def reconstruct_from_monomial_form(exp: OperatorExpansion,
                                   cap: int) -> GradedOperator:
    powers = _base_powers_on_monomials(exp.base, cap)
    images = []
    for m in range(cap + 1):
        img = Polynomial()
        for n in range(m + 1):
            if n < len(exp.coeff_polys) and not exp.coeff_polys[n].is_zero:
                img = img + exp.coeff_polys[n] * powers[n][m]
        images.append(img)
    return GradedOperator(images, cap)


def expand_in_basic(t: GradedOperator, delta: DeltaOperator,
                    basic: BasicSequence) -> OperatorExpansion:
    """Dual-pair expansion: T = sum q_n(R) Q^n with R the raising partner.

    Solved by applying both sides to the basic sequence.  R^j applied to
    p_k scales through the sequence with the ratio of classical to weighted
    index products, so everything stays inside the stored basis as long as
    T does not raise degree past it.
    """
    psi = delta.psi
    n_top = len(basic.polys) - 1
    shift = t.shift_bound
    s = int(shift) if shift is not NEG_INF and shift > 0 else 0
    m_eff = min(t.cap, n_top - s, delta.cap)
    if m_eff < 0:
        raise CapExceededError("basis too short for the operator's degree growth")

    def mu(k, j):
        # R^j on p_k: prod_i (k+i)/(k+i)_psi, landing on p_(k+j).
        out = Fraction(1)
        for i in range(1, j + 1):
            out *= Fraction(k + i) / psi.n_psi(k + i)
        return out

    alphas = []
    for m in range(m_eff + 1):
        image = t.apply(basic.polys[m])
        coords = basic.monomials_to_basis(image)
        # Subtract the contribution of lower-order terms already known.
        for n in range(m):
            qn = alphas[n]
            weight = psi.falling(m, n)
            if weight == 0:
                continue
            # q_n(R) applied to p_(m-n)
            for j, a in enumerate(qn):
                if a != 0:
                    idx = m - n + j
                    coords_len_needed = idx + 1
                    if coords_len_needed > len(coords):
                        coords.extend(Fraction(0)
                                      for _ in range(coords_len_needed - len(coords)))
                    coords[idx] -= weight * a * mu(m - n, j)
        mfact = psi.factorial(m)
        alpha_m = [c / (mfact * mu(0, j)) for j, c in enumerate(coords)]
        while alpha_m and alpha_m[-1] == 0:
            alpha_m.pop()
        alphas.append(alpha_m)
    return OperatorExpansion([Polynomial(a) for a in alphas], delta.op, "dual")


def apply_dual_form(exp: OperatorExpansion, delta: DeltaOperator,
                    basic: BasicSequence, p: Polynomial) -> Polynomial:
    """Apply sum q_n(R) Q^n to p through basis coordinates."""
    psi = delta.psi
    coords = basic.monomials_to_basis(p)
    out_coords = [Fraction(0)] * len(basic.polys)
    for n, qn in enumerate(exp.coeff_polys):
        if qn.is_zero:
            continue
        for k, c in enumerate(coords):
            if c == 0 or k - n < 0:
                continue
            lowered = c * psi.falling(k, n)
            if lowered == 0:
                continue
            base_idx = k - n
            for j, a in enumerate(qn.coeffs):
                if a != 0:
                    idx = base_idx + j
                    if idx >= len(out_coords):
                        raise CapExceededError("dual application leaves the basis")
                    out_coords[idx] += lowered * a * _mu_ratio(psi, base_idx, j)
    out = Polynomial()
    for idx, c in enumerate(out_coords):
        if c != 0:
            out = out + c * basic.polys[idx]
    return out


def _mu_ratio(psi: PsiSequence, k: int, j: int) -> Fraction:
    out = Fraction(1)
    for i in range(1, j + 1):
        out *= Fraction(k + i) / psi.n_psi(k + i)
    return out


def conjugate_indicator_check(t: GradedOperator, base: GradedOperator,
                              lambda_samples=()):
    """Verify P(x; lam) = Phi^(-1) (T Phi) order by order in lam.

    Phi is the formal eigenfunction of the base operator, represented by
    its unit-normalized sequence r_n, so T Phi and the division by Phi are
    computed in the ring of lam-polynomials with polynomial coefficients.
    Exact through every order the tables support; the optional scalar
    samples are evaluated on the verified truncations for the report.
    """
    cap = min(t.cap, base.cap)
    expansion = expand_in_monomials(t.truncated(cap), base.truncated(cap))
    table = unit_normal_sequence(base, cap)
    applied = [t.apply(r) for r in table]
    # Triangular division by Phi = sum lam^n r_n (r_0 = 1).
    conj = []
    for n in range(cap + 1):
        c = applied[n]
        for j in range(1, n + 1):
            c = c - table[j] * conj[n - j]
        conj.append(c)
    mismatches = [n for n in range(cap + 1)
                  if conj[n] != expansion.coeff_polys[n]]
    ok = not mismatches
    samples = []
    for lam in lambda_samples:
        lam = as_scalar(lam)
        left = Polynomial()
        lpow = Fraction(1)
        for c in conj:
            left = left + lpow * c
            lpow *= lam
        right = expansion.indicator_at(lam)
        samples.append({"lambda": scalar_to_str(lam),
                        "match": left == right,
                        "value": left.to_json()})
    report = {"ok": ok, "order": cap, "mismatched_orders": mismatches,
              "samples": samples}
    return ok, report


def first_expansion_coeffs(t: GradedOperator,
                           delta: DeltaOperator) -> TruncatedSeries:
    """Scalar coefficients of a shift-invariant T in powers of a delta operator.

    a_n is the constant term of T applied to the n-th basic polynomial,
    divided by n_psi!.
    """
    if not is_shift_invariant(t, delta.psi):
        raise NotShiftInvariantError(
            "first-expansion coefficients need a shift-invariant operator")
    cap = min(t.cap, delta.cap)
    basic = delta.basic(cap)
    return TruncatedSeries(
        tuple(t.apply(basic.polys[n]).constant_term / delta.psi.factorial(n)
              for n in range(cap + 1)), cap)


class DetectionResult:
    """Outcome of testing whether an operator is a weighted-derivative series."""

    __slots__ = ("is_series", "psi", "series_coeffs", "scale", "witness")

    def __init__(self, is_series, psi, series_coeffs, scale, witness):
        self.is_series = is_series
        self.psi = psi
        self.series_coeffs = series_coeffs
        self.scale = scale
        self.witness = witness

    def to_json(self):
        doc = {"is_series": self.is_series,
               "scale": scalar_to_str(self.scale)}
        if self.is_series:
            doc["n_psi"] = [scalar_to_str(v)
                            for v in self.psi.values(self.psi.stored_cap)]
            doc["series"] = [scalar_to_str(c) for c in self.series_coeffs]
        else:
            doc["witness"] = {"n": self.witness[0], "k": self.witness[1]}
        return doc


def detect_psi_series(op: GradedOperator) -> DetectionResult:
    """Decide whether op = d + sum_(k>=2) c_k d^k for SOME admissible weights.

    The operator is first normalized so its action on x is exactly 1 (the
    applied scale is reported).  The k = 1 column of the coefficient table
    proposes the weights; the verdict is the column criterion
    b_(n,k) = binom(n, k) * b_(k,k), with the first failing (n, k) as witness.
    """
    cap = op.cap
    _check_lowers_by_one(op, cap)
    b11 = op.image(1).constant_term
    scale = Fraction(1) / b11
    b = {}
    for n in range(1, cap + 1):
        img = scale * op.image(n)
        for k in range(1, n + 1):
            b[(n, k)] = img.coefficient(n - k)
        if b[(n, 1)] == 0:
            raise NotDegreeLoweringError(
                "scaled image of x^%d has no x^%d term" % (n, n - 1), n=n)
    weights = [b[(n, 1)] for n in range(1, cap + 1)]
    psi = PsiSequence.custom(weights)
    for n in range(2, cap + 1):
        for k in range(2, n + 1):
            if b[(n, k)] != psi.binomial(n, k) * b[(k, k)]:
                return DetectionResult(False, None, None, scale, (n, k))
    coeffs = [Fraction(0), Fraction(1)]
    coeffs.extend(b[(k, k)] / psi.factorial(k) for k in range(2, cap + 1))
    return DetectionResult(True, psi, coeffs, scale, None)
