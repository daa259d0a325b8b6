"""Exponential slices, and the one deliberate float crossing.

Everything in the package kernel is exact rational arithmetic.  The final
two tests here cross-check residue-class slices against the classical
root-of-unity averaging trick evaluated in complex floats; that comparison
lives only in this file and tolerates 1e-12.
"""

import cmath
from fractions import Fraction

import pytest

from psi_umbral.algebra import Polynomial, TruncatedSeries
from psi_umbral.operators import psi_derivative
from psi_umbral.psi import PsiSequence
from psi_umbral.special import (cos_psi_series, exp_psi_series,
                                psi_hyperbolic, sin_psi_series)


def test_divided_difference_exponential_is_geometric():
    psi = PsiSequence.divided_difference(10)
    assert exp_psi_series(psi, 10) == TruncatedSeries([1] * 11, 10)


def test_q_zero_exponential_is_geometric():
    psi = PsiSequence.jackson(0, 10)
    assert exp_psi_series(psi, 10) == TruncatedSeries([1] * 11, 10)


def test_classical_exponential_coefficients():
    psi = PsiSequence.classical(8)
    e = exp_psi_series(psi, 8)
    fact = 1
    for k in range(1, 9):
        fact *= k
        assert e.coefficient(k) == Fraction(1, fact)


def test_slices_partition_the_exponential():
    psi = PsiSequence.jackson(2, 12)
    e = exp_psi_series(psi, 12)
    for m in range(1, 6):
        total = TruncatedSeries.zero(12)
        for j in range(m):
            total = total + psi_hyperbolic(psi, m, j, 12)
        assert total == e


def test_slices_rotate_under_the_derivative():
    psi = PsiSequence.jackson(Fraction(1, 2), 12)
    m = 3
    for j in range(m):
        sliced = psi_hyperbolic(psi, m, j, 12).as_polynomial()
        want = psi_hyperbolic(psi, m, (j - 1) % m, 11)
        got = TruncatedSeries.from_polynomial(psi_derivative(psi, sliced), 11)
        assert got == want


def test_cos_sin_derivative_cycle():
    psi = PsiSequence.classical(12)
    s = sin_psi_series(psi, 12).as_polynomial()
    c = cos_psi_series(psi, 12).as_polynomial()
    ds = TruncatedSeries.from_polynomial(psi_derivative(psi, s), 11)
    dc = TruncatedSeries.from_polynomial(psi_derivative(psi, c), 11)
    assert ds == cos_psi_series(psi, 11)
    assert dc == -sin_psi_series(psi, 11)


def test_slice_argument_validation():
    psi = PsiSequence.classical(4)
    with pytest.raises(ValueError):
        psi_hyperbolic(psi, 0, 0, 4)
    with pytest.raises(ValueError):
        psi_hyperbolic(psi, 3, 3, 4)
    with pytest.raises(ValueError):
        psi_hyperbolic(psi, 3, -1, 4)


def _float_eval(series: TruncatedSeries, z: complex) -> complex:
    acc = 0j
    for c in reversed(series.coeffs):
        acc = acc * z + float(c)
    return acc


def _root_of_unity_average(psi, m, j, alpha, cap):
    e = exp_psi_series(psi, cap)
    total = 0j
    for k in range(m):
        omega_k = cmath.exp(2j * cmath.pi * k / m)
        total += cmath.exp(-2j * cmath.pi * k * j / m) * _float_eval(e, omega_k * alpha)
    return total / m


@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("kind", ["classical", "jackson"])
def test_slices_match_root_of_unity_average(m, kind):
    cap = 30
    psi = (PsiSequence.classical(cap) if kind == "classical"
           else PsiSequence.jackson(Fraction(1, 2), cap))
    alpha = 0.5
    for j in range(m):
        exact = psi_hyperbolic(psi, m, j, cap)
        want = float(exact.as_polynomial()(Fraction(1, 2)))
        got = _root_of_unity_average(psi, m, j, alpha, cap)
        assert abs(got.imag) < 1e-12
        assert abs(got.real - want) < 1e-12
