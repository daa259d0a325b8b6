from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from psi_umbral.algebra import Polynomial
from psi_umbral.errors import (CapExceededError, NonInvertibleError,
                               NotShiftInvariantError)
from psi_umbral.operators import (GradedOperator, derivative_op, dilation_op,
                                  divided_difference, divided_difference_op,
                                  forward_difference_op, invert_shift_invariant,
                                  is_shift_invariant, jackson_derivative_op,
                                  multiply_x_op, operator_from_series,
                                  pincherle_derivative, psi_derivative,
                                  psi_derivative_op, psi_raise, psi_raise_op,
                                  shift_invariant_coefficients, translation_op,
                                  weight_multiplier, weight_op)
from psi_umbral.psi import PsiSequence


def rationals():
    return st.builds(Fraction, st.integers(min_value=-9, max_value=9),
                     st.integers(min_value=1, max_value=4))


def polynomials(max_deg=6):
    return st.builds(Polynomial, st.lists(rationals(), max_size=max_deg + 1))


def test_weighted_derivative_golden():
    psi = PsiSequence.jackson(2, 8)
    assert psi_derivative(psi, Polynomial.monomial(3)) == Polynomial.monomial(2, 7)
    assert psi_derivative(psi, Polynomial.one()).is_zero


def test_raise_then_lower_is_congruent():
    psi = PsiSequence.jackson(Fraction(1, 2), 10)
    p = Polynomial((1, 2, 3))
    # lower(raise(x^n)) = ((n+1)/(n+1)_psi) * (n+1)_psi x^n = (n+1) x^n
    lifted = psi_raise(psi, p)
    dropped = psi_derivative(psi, lifted)
    assert dropped == Polynomial(tuple((i + 1) * c for i, c in enumerate(p.coeffs)))


def test_divided_difference_action():
    p = Polynomial((5, 1, 2))
    assert divided_difference(p) == Polynomial((1, 2))
    assert divided_difference(Polynomial.one()).is_zero


def test_weight_multiplier_factorization():
    psi = PsiSequence.jackson(3, 8)
    p = Polynomial((2, 0, 1, 4))
    assert weight_multiplier(psi, divided_difference(p)) == psi_derivative(psi, p)


# -- graded tables ----------------------------------------------------------

def test_apply_beyond_cap_errors():
    d = derivative_op(3)
    with pytest.raises(CapExceededError):
        d.apply(Polynomial.monomial(4))


def test_compose_keeps_cap_for_lowering_inner():
    d = derivative_op(8)
    dd = d * d
    assert dd.cap == 8
    assert dd.image(5) == Polynomial.monomial(3, 20)


def test_compose_shrinks_cap_for_raising_inner():
    d = derivative_op(8)
    x = multiply_x_op(8)
    dx = d * x     # inner raises degree, outer table loses a row
    assert dx.cap == 7
    xd = x * d
    assert xd.cap == 8
    # commutator [D, X] = identity on the common cap
    comm = d.commutator(x)
    assert comm == GradedOperator.identity(comm.cap)
    assert comm.cap == 7


def test_composition_shrinks_then_exhausts_the_table():
    x = multiply_x_op(2)
    xxx = (x * x) * x
    # each raise eats one table row; cap 2 supports exactly three
    assert xxx.cap == 0
    assert xxx.image(0) == Polynomial.monomial(3)
    with pytest.raises(CapExceededError):
        xxx * x


def test_noncommutativity_witness():
    d = derivative_op(6)
    x = multiply_x_op(6)
    assert d * x != x * d


def test_shift_bound_and_drop():
    x = multiply_x_op(4)
    assert x.shift_bound == 1
    assert x.drop == 0
    d = derivative_op(4)
    assert d.shift_bound == -1
    # drop counts source degree minus lowest output term: n - (n-1)
    assert d.drop == 1


def test_operator_from_series_matches_composition():
    psi = PsiSequence.jackson(2, 10)
    d = psi_derivative_op(psi, 10)
    series = operator_from_series([0, 1, 0, 1], psi, 10)
    assert series == d + d * d * d


def test_ghw_commutation_all_kinds():
    for psi in (PsiSequence.classical(10), PsiSequence.jackson(Fraction(1, 2), 10),
                PsiSequence.divided_difference(10)):
        comm = psi_derivative_op(psi, 10).commutator(psi_raise_op(psi, 10))
        assert comm == GradedOperator.identity(comm.cap)


def test_translation_matches_binomial_row():
    psi = PsiSequence.jackson(0, 8)
    e = translation_op(psi, 1, 8)
    assert e.image(2) == Polynomial((1, 1, 1))


def test_forward_difference_kills_constants():
    psi = PsiSequence.classical(8)
    delta = forward_difference_op(psi, 8)
    assert delta.image(0).is_zero
    assert delta.image(1) == Polynomial.one()


def test_dilation_is_not_shift_invariant():
    # scaling the argument rescales the derivative: the commutator with the
    # Jackson derivative shows the 1 - q defect already on x
    q = Fraction(2)
    psi = PsiSequence.jackson(q, 8)
    assert not is_shift_invariant(dilation_op(q, 8), psi)
    assert is_shift_invariant(forward_difference_op(psi, 8), psi)


def test_shift_invariant_coefficients_readout():
    psi = PsiSequence.classical(10)
    delta = forward_difference_op(psi, 10)
    series = shift_invariant_coefficients(delta, psi)
    fact = 1
    for k in range(1, 10):
        fact *= k
        assert series.coefficient(k) == Fraction(1, fact)


def test_invert_shift_invariant_golden():
    # (id + D)^(-1) has the alternating geometric series in D
    psi = PsiSequence.classical(8)
    s = GradedOperator.identity(8) + psi_derivative_op(psi, 8)
    inv = invert_shift_invariant(s, psi)
    series = shift_invariant_coefficients(inv, psi)
    assert series.coeffs == tuple(Fraction((-1) ** k) for k in range(9))


def test_invert_rejects_non_invertible():
    psi = PsiSequence.classical(8)
    with pytest.raises(NonInvertibleError):
        invert_shift_invariant(psi_derivative_op(psi, 8), psi)
    with pytest.raises(NotShiftInvariantError):
        invert_shift_invariant(dilation_op(2, 8), PsiSequence.jackson(2, 8))


def test_pincherle_derivative_classical():
    # [D^2, X] = 2D when the raising partner is plain multiplication
    psi = PsiSequence.classical(8)
    d = derivative_op(10)
    pd = pincherle_derivative(d * d, psi)
    assert pd == (Fraction(2) * derivative_op(10)).truncated(pd.cap)


def test_pincherle_of_derivative_is_identity():
    for psi in (PsiSequence.classical(8), PsiSequence.jackson(3, 8)):
        pd = pincherle_derivative(psi_derivative_op(psi, 8), psi)
        assert pd == GradedOperator.identity(pd.cap)


def test_weighted_derivative_factors():
    psi = PsiSequence.jackson(Fraction(1, 2), 8)
    prod = weight_op(psi, 7) * divided_difference_op(8)
    assert prod == psi_derivative_op(psi, 8).truncated(prod.cap)


def test_jackson_derivative_is_difference_quotient():
    # (f(qx) - f(x)) / (qx - x) on monomials
    q = Fraction(3)
    op = jackson_derivative_op(q, 6)
    for n in range(1, 7):
        bracket = sum(q ** i for i in range(n))
        assert op.image(n) == Polynomial.monomial(n - 1, bracket)


@given(polynomials(), polynomials())
@settings(max_examples=40)
def test_graded_operator_linearity(p, q):
    psi = PsiSequence.jackson(Fraction(1, 2), 12)
    op = translation_op(psi, Fraction(1, 3), 12)
    assert op.apply(p + q) == op.apply(p) + op.apply(q)


@given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=6))
@settings(max_examples=30)
def test_translation_composes_additively_classical(a, b):
    # classical translations compose: E^a E^b = E^(a+b)
    psi = PsiSequence.classical(14)
    ea = translation_op(psi, a, 14)
    eb = translation_op(psi, b, 14)
    eab = translation_op(psi, a + b, 14)
    assert ea * eb == eab.truncated((ea * eb).cap)
