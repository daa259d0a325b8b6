"""Delta operators and their basic polynomial sequences.

A delta operator here is a degree-lowering operator that commutes with the
weighted derivative and sends x to a nonzero constant.  Each one factors
uniquely as (weighted derivative) o S with S invertible, owns a unique
basic sequence p_0 = 1, p_n(0) = 0, Q p_n = n_psi p_(n-1), and that
sequence can be produced two independent ways: a direct triangular solve,
and closed formulas built from Pincherle derivatives and inverse powers of
the S factor.  Having both is the point; they must agree exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import NEG_INF, Polynomial, TruncatedSeries, as_scalar
from .errors import (CapExceededError, NonInvertibleError,
                     NotDegreeLoweringError, NotShiftInvariantError)
from .operators import (GradedOperator, apply_psi_series, is_shift_invariant,
                        psi_derivative, psi_raise, shift_invariant_coefficients)
from .psi import PsiSequence


def translate(psi: PsiSequence, y, p: Polynomial) -> Polynomial:
    """Generalized shift of p by y: sum_k (y^k / k_psi!) (d_psi)^k p.

    For p = x^n this is the weighted binomial expansion
    sum_k binom_psi(n, k) x^(n-k) y^k.
    """
    y = as_scalar(y)
    out = Polynomial()
    current = p
    ypow = Fraction(1)
    k = 0
    while not current.is_zero:
        out = out + (ypow / psi.factorial(k)) * current
        current = psi_derivative(psi, current)
        ypow *= y
        k += 1
    return out


def _require_degree_lowering(op: GradedOperator, n_max: int):
    if not op.image(0).is_zero:
        raise NotDegreeLoweringError("operator does not kill constants")
    for n in range(1, n_max + 1):
        if op.image(n).degree != n - 1:
            raise NotDegreeLoweringError(
                "image of x^%d has degree %s, expected %d"
                % (n, op.image(n).degree, n - 1), n=n)


class BasicSequence:
    """The polynomials p_0..p_n attached to a degree-lowering operator."""

    __slots__ = ("polys", "psi", "op")

    def __init__(self, polys, psi: PsiSequence, op: GradedOperator):
        self.polys = tuple(polys)
        self.psi = psi
        self.op = op

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, n: int) -> Polynomial:
        return self.polys[n]

    def to_json(self):
        return [p.to_json() for p in self.polys]

    def monomials_to_basis(self, p: Polynomial):
        """Coordinates of p in the p_n basis (triangular back-substitution)."""
        deg = p.degree
        n = 0 if deg is NEG_INF else int(deg)
        if n >= len(self.polys):
            raise CapExceededError(
                "basis holds %d polynomials, degree %d requested"
                % (len(self.polys), n))
        rem = p
        coords = [Fraction(0)] * (n + 1)
        for k in range(n, -1, -1):
            c = rem.coefficient(k) / self.polys[k].leading_coefficient
            coords[k] = c
            if c != 0:
                rem = rem - c * self.polys[k]
        assert rem.is_zero
        return coords


def basic_sequence_solve(op: GradedOperator, psi: PsiSequence,
                         n_max: int) -> BasicSequence:
    """Triangular solve for p_0 = 1, p_n(0) = 0, op p_n = n_psi p_(n-1).

    Works for any operator that lowers degree by exactly one; shift
    invariance is not needed here.
    """
    if n_max > op.cap:
        raise CapExceededError("n_max %d beyond operator cap %d"
                               % (n_max, op.cap), cap=op.cap)
    _require_degree_lowering(op, n_max)
    polys = [Polynomial.one()]
    for n in range(1, n_max + 1):
        target = psi.n_psi(n) * polys[n - 1]
        c = [Fraction(0)] * (n + 1)
        # Determine c_n, ..., c_1 by matching x^(n-1) down to x^0.
        for i in range(n - 1, -1, -1):
            acc = Fraction(0)
            for j in range(i + 2, n + 1):
                if c[j] != 0:
                    acc += c[j] * op.image(j).coefficient(i)
            lead = op.image(i + 1).coefficient(i)
            c[i + 1] = (target.coefficient(i) - acc) / lead
        polys.append(Polynomial(c))
    return BasicSequence(polys, psi, op)


class DeltaOperator:
    """A shift-invariant degree-lowering operator with its series data.

    ``indicator`` holds the coefficients a_k of the operator as a series in
    the weighted derivative (a_0 = 0, a_1 != 0); ``s_series`` is that series
    divided by its variable, the coefficients of the invertible factor S.
    """

    __slots__ = ("op", "psi", "indicator")

    def __init__(self, op: GradedOperator, psi: PsiSequence,
                 indicator: TruncatedSeries):
        self.op = op
        self.psi = psi
        self.indicator = indicator

    @classmethod
    def from_operator(cls, op: GradedOperator, psi: PsiSequence) -> "DeltaOperator":
        if not is_shift_invariant(op, psi):
            raise NotShiftInvariantError(
                "delta operators must commute with the weighted derivative")
        _require_degree_lowering(op, op.cap)
        const = op.image(1).constant_term
        if const == 0:
            raise NotDegreeLoweringError("image of x must be a nonzero constant")
        indicator = shift_invariant_coefficients(op, psi)
        assert indicator.constant_term == 0
        return cls(op, psi, indicator)

    @classmethod
    def from_indicator(cls, coeffs, psi: PsiSequence, cap: int) -> "DeltaOperator":
        from .operators import operator_from_series
        series = TruncatedSeries(tuple(coeffs), cap)
        if series.constant_term != 0:
            raise NotDegreeLoweringError("indicator must have zero constant term")
        if series.cap < 1 or series.coefficient(1) == 0:
            raise NonInvertibleError("indicator needs a nonzero linear term")
        op = operator_from_series(series.coeffs, psi, cap)
        return cls(op, psi, series)

    @property
    def cap(self) -> int:
        return self.op.cap

    @property
    def s_series(self) -> TruncatedSeries:
        """Series of the invertible factor S in op = (weighted derivative) o S."""
        return TruncatedSeries(self.indicator.coeffs[1:], self.cap - 1)

    def s_operator(self) -> GradedOperator:
        from .operators import operator_from_series
        return operator_from_series(self.s_series.coeffs, self.psi, self.cap)

    def basic(self, n_max: int) -> BasicSequence:
        return basic_sequence_solve(self.op, self.psi, n_max)


def rodrigues_sequence(delta: DeltaOperator, n_max: int,
                       formula: int = 4) -> BasicSequence:
    """Basic sequence by one of four closed formulas (1..4).

    With S the invertible factor, q' the Pincherle derivative of the
    operator (the derivative of its indicator series) and X the weighted
    raising operator:

      1: p_n = q'(D) S^(-n-1) x^n
      2: p_n = S^(-n) x^n - (n_psi/n) (S^(-n))' x^(n-1)
      3: p_n = (n_psi/n) X S^(-n) x^(n-1)
      4: p_n = (n_psi/n) X (q'(D))^(-1) p_(n-1), from p_0 = 1

    All series arithmetic happens on indicator coefficients; the requested
    n_max must leave one spare order below the cap.
    """
    if formula not in (1, 2, 3, 4):
        raise ValueError("formula must be 1, 2, 3 or 4")
    if n_max > delta.cap - 1:
        raise CapExceededError("n_max %d needs cap at least %d"
                               % (n_max, n_max + 1), cap=delta.cap)
    psi = delta.psi
    s_inv = delta.s_series.inverse()
    q_prime = delta.indicator.differentiated()
    q_prime_inv = q_prime.inverse() if formula == 4 else None
    polys = [Polynomial.one()]
    for n in range(1, n_max + 1):
        xn = Polynomial.monomial(n)
        xn1 = Polynomial.monomial(n - 1)
        ratio = psi.n_psi(n) / Fraction(n)
        if formula == 1:
            series = q_prime * s_inv.power(n + 1)
            p = apply_psi_series(series.coeffs, psi, xn)
        elif formula == 2:
            w = s_inv.power(n)
            p = (apply_psi_series(w.coeffs, psi, xn)
                 - ratio * apply_psi_series(w.differentiated().coeffs, psi, xn1))
        elif formula == 3:
            w = s_inv.power(n)
            p = ratio * psi_raise(psi, apply_psi_series(w.coeffs, psi, xn1))
        else:
            inner = apply_psi_series(q_prime_inv.coeffs, psi, polys[n - 1])
            p = ratio * psi_raise(psi, inner)
        polys.append(p)
    return BasicSequence(polys, psi, delta.op)


def dual_raise_operator(basic: BasicSequence) -> GradedOperator:
    """Operator sending p_n to ((n+1)/(n+1)_psi) p_(n+1), tabulated on monomials.

    Forms a commutation pair with the operator that produced the sequence,
    the same way the weighted raising operator pairs with the weighted
    derivative.  The table loses one degree: raising the top basis element
    would need p beyond the stored sequence.
    """
    n_top = len(basic.polys) - 1
    if n_top < 1:
        raise CapExceededError("need at least p_0 and p_1 to build the dual raise")
    psi = basic.psi

    def rule(n):
        coords = basic.monomials_to_basis(Polynomial.monomial(n))
        out = Polynomial()
        for k, c in enumerate(coords):
            if c != 0:
                lift = Fraction(k + 1) / psi.n_psi(k + 1)
                out = out + c * lift * basic.polys[k + 1]
        return out

    return GradedOperator.from_monomial_rule(rule, n_top - 1)


def sheffer_sequence(delta: DeltaOperator, s_op: GradedOperator,
                     n_max: int) -> list:
    """Sequence s_n = S^(-1) p_n for an invertible shift-invariant S.

    Satisfies the same lowering recurrence as the basic sequence but with
    shifted initial data; the binomial-type identity picks up basic
    polynomials on the translated argument.
    """
    if not is_shift_invariant(s_op, delta.psi):
        raise NotShiftInvariantError(
            "the Sheffer factor must commute with the weighted derivative")
    series = shift_invariant_coefficients(s_op, delta.psi)
    if series.constant_term == 0:
        raise NonInvertibleError("the Sheffer factor must be invertible")
    inv = series.inverse()
    basic = delta.basic(n_max)
    return [apply_psi_series(inv.coeffs, delta.psi, p) for p in basic.polys]


def unit_normal_sequence(op: GradedOperator, n_max: int) -> list:
    """Solve op r_n = r_(n-1), r_0 = 1, r_n(0) = 0 (all weights 1).

    The normalization-free core of any basic sequence: p_n / n_psi!
    equals r_n no matter which admissible weights the sequence used.
    """
    ones = PsiSequence.divided_difference(max(n_max, 1))
    return list(basic_sequence_solve(op, ones, n_max).polys)


def eigenfunction_series(op: GradedOperator, lam,
                         cap: int) -> tuple[TruncatedSeries, list]:
    """Formal eigenfunction Phi with op Phi = lam Phi, Phi(0) = 1.

    Returns the series in x at the given scalar, together with the table of
    unit-normalized polynomials r_n whose generating sum it is:
    Phi = sum_n lam^n r_n(x).
    """
    lam = as_scalar(lam)
    table = unit_normal_sequence(op, cap)
    coeffs = [Fraction(0)] * (cap + 1)
    lpow = Fraction(1)
    for n, r in enumerate(table):
        for i, c in enumerate(r.coeffs):
            if c != 0:
                coeffs[i] += lpow * c
        lpow *= lam
    return TruncatedSeries(coeffs, cap), table
