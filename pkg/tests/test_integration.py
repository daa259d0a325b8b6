from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from psi_umbral.algebra import Polynomial
from psi_umbral.errors import AdmissibilityError
from psi_umbral.integration import psi_integral, q_integral, r_integral
from psi_umbral.operators import psi_derivative
from psi_umbral.psi import PsiSequence, RationalFunction, jackson_bracket


def test_q_integral_golden():
    # integrating x^2 at q = 2 divides by the bracket 1 + 2 + 4
    got = q_integral(2, Polynomial((0, 0, 1)))
    assert got == Polynomial((0, 0, 0, Fraction(1, 7)))


def test_q_integral_rejects_q_one():
    with pytest.raises(AdmissibilityError):
        q_integral(1, Polynomial.x())


def test_q_integral_rejects_vanishing_bracket():
    # at q = -1 the bracket of 2 is zero, so x has no antiderivative
    assert jackson_bracket(-1, 2) == 0
    with pytest.raises(AdmissibilityError):
        q_integral(-1, Polynomial.x())
    # constants are still fine: they only need the bracket of 1
    assert q_integral(-1, Polynomial.one()) == Polynomial.x()


def test_psi_integral_with_square_weights():
    psi = PsiSequence.custom([Fraction(n * n) for n in range(1, 8)])
    got = psi_integral(psi, Polynomial((0, 0, 1)))
    assert got == Polynomial((0, 0, 0, Fraction(1, 9)))


def test_r_integral_matches_q_integral():
    q = Fraction(2)
    rat = RationalFunction(Polynomial((1, -1)), Polynomial((1 - q,)))
    p = Polynomial((3, 0, -2, 1))
    assert r_integral(rat, q, p) == q_integral(q, p)


def test_r_integral_rejects_vanishing_weight():
    q = Fraction(2)
    # R has a root at q^2, so x^1 cannot be lifted
    rat = RationalFunction(Polynomial((-q ** 2, 1)), Polynomial.one())
    with pytest.raises(AdmissibilityError):
        r_integral(rat, q, Polynomial.x())


def test_r_integral_rejects_undefined_weight():
    q = Fraction(2)
    rat = RationalFunction(Polynomial.one(), Polynomial((-q ** 3, 1)))
    with pytest.raises(AdmissibilityError):
        r_integral(rat, q, Polynomial((0, 0, 1)))


def _poly_strategy():
    coeff = st.integers(min_value=-9, max_value=9).map(Fraction)
    return st.lists(coeff, min_size=0, max_size=8).map(Polynomial)


@given(_poly_strategy())
@settings(max_examples=60)
def test_integral_is_a_right_inverse(p):
    for psi in (PsiSequence.classical(12), PsiSequence.jackson(2, 12),
                PsiSequence.custom([Fraction(n * n) for n in range(1, 12)])):
        assert psi_derivative(psi, psi_integral(psi, p)) == p


@given(_poly_strategy())
@settings(max_examples=60)
def test_integral_after_derivative_loses_the_constant(p):
    psi = PsiSequence.jackson(Fraction(1, 2), 12)
    back = psi_integral(psi, psi_derivative(psi, p))
    assert back == p - Polynomial((p.constant_term,))


@given(_poly_strategy())
@settings(max_examples=40)
def test_q_route_is_a_right_inverse(p):
    q = Fraction(1, 3)
    psi = PsiSequence.jackson(q, 12)
    assert psi_derivative(psi, q_integral(q, p)) == p
