"""Linear operators on polynomials, stored by their action on monomials.

A graded operator at cap c is the table of images T(x^n) for n = 0..c.
That is the whole representation: applying T to a polynomial is a linear
combination of table rows, and composing operators re-applies one table to
the rows of another.  Compositions with a degree-raising inner operator
shrink the usable cap (the outer table runs out of rows), so ``compose``
computes the largest cap on which the result is trustworthy and the result
carries that cap.

Closed-form actions (weighted derivative, weighted raising operator and
friends) are also provided directly on polynomials, with no cap at all;
the operator tables are built from the same formulas.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import NEG_INF, Polynomial, TruncatedSeries, as_scalar
from .errors import (AdmissibilityError, CapExceededError, NonInvertibleError,
                     NotShiftInvariantError)
from .psi import PsiSequence

# -- closed-form actions on polynomials -------------------------------


def psi_derivative(psi: PsiSequence, p: Polynomial) -> Polynomial:
    """Send x^n to n_psi x^(n-1)."""
    return Polynomial(tuple(psi.n_psi(i + 1) * p.coefficient(i + 1)
                            for i in range(len(p.coeffs) - 1))
                      ) if len(p.coeffs) > 1 else Polynomial()

def psi_raise(psi: PsiSequence, p: Polynomial) -> Polynomial:
    """Send x^n to ((n+1)/(n+1)_psi) x^(n+1); partner of the weighted derivative."""
    if p.is_zero:
        return p
    out = [Fraction(0)]
    for i, c in enumerate(p.coeffs):
        out.append(c * Fraction(i + 1) / psi.n_psi(i + 1))
    return Polynomial(out)

def divided_difference(p: Polynomial) -> Polynomial:
    """Send x^n to x^(n-1), constants to zero: (p(x) - p(0))/x."""
    return Polynomial(p.coeffs[1:])

def weight_multiplier(psi: PsiSequence, p: Polynomial) -> Polynomial:
    """Diagonal action x^m -> (m+1)_psi x^m.

    Composed with the divided difference it reproduces the weighted
    derivative, which is the factorization the Leibniz rules exploit.
    """
    return Polynomial(tuple(psi.n_psi(i + 1) * c for i, c in enumerate(p.coeffs)))

def apply_psi_series(coeffs, psi: PsiSequence, p: Polynomial) -> Polynomial:
    """Apply sum_k c_k * (psi-derivative)^k to p; finite because p is."""
    out = Polynomial()
    current = p
    for k, c in enumerate(coeffs):
        if current.is_zero:
            break
        if c != 0:
            out = out + as_scalar(c) * current
        current = psi_derivative(psi, current)
    return out


# -- the graded table ---------------------------------------------------


class GradedOperator:
    """Images of x^0..x^cap under a linear operator."""

    __slots__ = ("_images", "_cap")

    def __init__(self, images, cap: int | None = None):
        images = tuple(images)
        if cap is None:
            cap = len(images) - 1
        if cap < 0 or cap != len(images) - 1:
            raise ValueError("cap must match the image table length")
        self._images = images
        self._cap = cap

    @classmethod
    def from_monomial_rule(cls, rule, cap: int) -> "GradedOperator":
        return cls(tuple(rule(n) for n in range(cap + 1)), cap)

    @classmethod
    def identity(cls, cap: int) -> "GradedOperator":
        return cls.from_monomial_rule(lambda n: Polynomial.monomial(n), cap)

    @classmethod
    def zero(cls, cap: int) -> "GradedOperator":
        return cls.from_monomial_rule(lambda n: Polynomial.zero(), cap)

    @classmethod
    def scalar(cls, c, cap: int) -> "GradedOperator":
        c = as_scalar(c)
        return cls.from_monomial_rule(lambda n: Polynomial.monomial(n, c), cap)

    @property
    def cap(self) -> int:
        return self._cap

    @property
    def images(self) -> tuple:
        return self._images

    def image(self, n: int) -> Polynomial:
        if n > self._cap:
            raise CapExceededError(
                "operator table stops at degree %d, image of x^%d requested"
                % (self._cap, n), cap=self._cap, requested=n)
        return self._images[n]

    @property
    def shift_bound(self):
        """Max degree growth over the table; NEG_INF if the operator is zero."""
        best = NEG_INF
        for n, img in enumerate(self._images):
            d = img.degree
            if d is not NEG_INF and d - n > best:
                best = d - n
        return best

    @property
    def drop(self) -> int:
        """How far below its source degree an image reaches (0 for diagonal).

        The image of x^n may contain terms down to degree n - drop; used to
        bound which table rows can leak into a given output degree.
        """
        worst = 0
        for n, img in enumerate(self._images):
            low = img.min_degree()
            if low is not NEG_INF and n - low > worst:
                worst = n - low
        return worst

    @property
    def is_zero(self) -> bool:
        return all(img.is_zero for img in self._images)

    def apply(self, p: Polynomial) -> Polynomial:
        if p.degree is not NEG_INF and p.degree > self._cap:
            raise CapExceededError(
                "polynomial degree %d exceeds operator cap %d"
                % (p.degree, self._cap), cap=self._cap)
        out = Polynomial()
        for n, c in enumerate(p.coeffs):
            if c != 0:
                out = out + c * self._images[n]
        return out

    __call__ = apply

    def compose(self, inner: "GradedOperator") -> "GradedOperator":
        """self after inner, on the largest cap where self's table suffices."""
        eff = -1
        for n in range(inner.cap + 1):
            d = inner._images[n].degree
            if d is not NEG_INF and d > self._cap:
                break
            eff = n
        if eff < 0:
            raise CapExceededError(
                "composition has no usable cap (outer table too short)",
                outer_cap=self._cap, inner_cap=inner.cap)
        return GradedOperator(
            tuple(self.apply(inner._images[n]) for n in range(eff + 1)), eff)

    def __add__(self, other):
        if not isinstance(other, GradedOperator):
            return NotImplemented
        cap = min(self._cap, other._cap)
        return GradedOperator(tuple(self._images[n] + other._images[n]
                                    for n in range(cap + 1)), cap)

    def __sub__(self, other):
        if not isinstance(other, GradedOperator):
            return NotImplemented
        cap = min(self._cap, other._cap)
        return GradedOperator(tuple(self._images[n] - other._images[n]
                                    for n in range(cap + 1)), cap)

    def __neg__(self):
        return GradedOperator(tuple(-img for img in self._images), self._cap)

    def __mul__(self, other):
        if isinstance(other, GradedOperator):
            return self.compose(other)
        c = as_scalar(other)
        return GradedOperator(tuple(c * img for img in self._images), self._cap)

    def __rmul__(self, other):
        # scalar * operator; operator * operator resolves through __mul__
        c = as_scalar(other)
        return GradedOperator(tuple(c * img for img in self._images), self._cap)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative operator power")
        out = GradedOperator.identity(self._cap)
        for _ in range(k):
            out = out.compose(self)
        return out

    def commutator(self, other: "GradedOperator") -> "GradedOperator":
        return self.compose(other) - other.compose(self)

    def truncated(self, cap: int) -> "GradedOperator":
        if cap > self._cap:
            raise CapExceededError("cannot extend an operator table",
                                   cap=self._cap, requested=cap)
        return GradedOperator(self._images[: cap + 1], cap)

    def __eq__(self, other):
        if isinstance(other, GradedOperator):
            cap = min(self._cap, other._cap)
            return self._images[: cap + 1] == other._images[: cap + 1]
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return "GradedOperator(cap=%d)" % self._cap


# -- named operator tables ---------------------------------------------


def derivative_op(cap: int) -> GradedOperator:
    return GradedOperator.from_monomial_rule(
        lambda n: Polynomial.monomial(n - 1, n) if n else Polynomial(), cap)

def multiply_x_op(cap: int) -> GradedOperator:
    return GradedOperator.from_monomial_rule(
        lambda n: Polynomial.monomial(n + 1), cap)

def dilation_op(q, cap: int) -> GradedOperator:
    q = as_scalar(q)
    return GradedOperator.from_monomial_rule(
        lambda n: Polynomial.monomial(n, q ** n), cap)

def divided_difference_op(cap: int) -> GradedOperator:
    return GradedOperator.from_monomial_rule(
        lambda n: Polynomial.monomial(n - 1) if n else Polynomial(), cap)

def jackson_derivative_op(q, cap: int) -> GradedOperator:
    return psi_derivative_op(PsiSequence.jackson(q, cap), cap)

def psi_derivative_op(psi: PsiSequence, cap: int) -> GradedOperator:
    return GradedOperator.from_monomial_rule(
        lambda n: Polynomial.monomial(n - 1, psi.n_psi(n)) if n else Polynomial(),
        cap)

def psi_raise_op(psi: PsiSequence, cap: int) -> GradedOperator:
    return GradedOperator.from_monomial_rule(
        lambda n: Polynomial.monomial(n + 1,
                                      Fraction(n + 1) / psi.n_psi(n + 1)), cap)

def weight_op(psi: PsiSequence, cap: int) -> GradedOperator:
    return GradedOperator.from_monomial_rule(
        lambda n: Polynomial.monomial(n, psi.n_psi(n + 1)), cap)

def translation_op(psi: PsiSequence, y, cap: int) -> GradedOperator:
    """The generalized shift: x^n -> sum_k binom_psi(n, k) y^k x^(n-k)."""
    y = as_scalar(y)

    def rule(n):
        coeffs = [Fraction(0)] * (n + 1)
        ypow = Fraction(1)
        for k in range(n + 1):
            coeffs[n - k] = psi.binomial(n, k) * ypow
            ypow *= y
        return Polynomial(coeffs)

    return GradedOperator.from_monomial_rule(rule, cap)

def forward_difference_op(psi: PsiSequence, cap: int) -> GradedOperator:
    """Unit translation minus the identity."""
    return translation_op(psi, 1, cap) - GradedOperator.identity(cap)

def operator_from_series(coeffs, psi: PsiSequence, cap: int) -> GradedOperator:
    """Materialize sum_k c_k * (psi-derivative)^k as a graded table."""
    cs = [as_scalar(c) for c in coeffs]

    def rule(n):
        out = [Fraction(0)] * (n + 1)
        for k in range(min(n, len(cs) - 1) + 1):
            if cs[k] != 0:
                out[n - k] += cs[k] * psi.falling(n, k)
        return Polynomial(out)

    return GradedOperator.from_monomial_rule(rule, cap)


# -- shift invariance and inversion -------------------------------------


def is_shift_invariant(op: GradedOperator, psi: PsiSequence) -> bool:
    """Does op commute with the weighted derivative, as far as the caps see?"""
    d = psi_derivative_op(psi, op.cap)
    return op.commutator(d).is_zero

def shift_invariant_coefficients(op: GradedOperator,
                                 psi: PsiSequence) -> TruncatedSeries:
    """Coefficients c_k with op = sum_k c_k (psi-derivative)^k.

    Triangular readout: c_k is the constant term of op(x^k) divided by
    k_psi!.  Only meaningful when op actually commutes with the weighted
    derivative; callers check that separately.
    """
    return TruncatedSeries(
        tuple(op.image(k).constant_term / psi.factorial(k)
              for k in range(op.cap + 1)), op.cap)

def invert_shift_invariant(op: GradedOperator, psi: PsiSequence) -> GradedOperator:
    """Two-sided inverse of an invertible shift-invariant operator.

    Requires op(1) != 0; the inverse is the reciprocal series in the
    weighted derivative, checked against op by composition.
    """
    if not is_shift_invariant(op, psi):
        raise NotShiftInvariantError(
            "operator does not commute with the weighted derivative")
    series = shift_invariant_coefficients(op, psi)
    if series.constant_term == 0:
        raise NonInvertibleError("operator kills constants; not invertible")
    inv = operator_from_series(series.inverse().coeffs, psi, op.cap)
    check = op.compose(inv)
    assert check == GradedOperator.identity(check.cap), "inversion failed to verify"
    return inv

def pincherle_derivative(op: GradedOperator, psi: PsiSequence) -> GradedOperator:
    """Commutator of op with the weighted raising operator."""
    s = op.shift_bound
    extra = int(s) + 1 if s is not NEG_INF and s > 0 else 1
    xr = psi_raise_op(psi, op.cap + extra)
    return op.commutator(xr)
