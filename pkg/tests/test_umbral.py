from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from psi_umbral.algebra import Polynomial, TruncatedSeries
from psi_umbral.errors import (CapExceededError, NotDegreeLoweringError,
                               NotShiftInvariantError)
from psi_umbral.operators import (GradedOperator, derivative_op,
                                  forward_difference_op, is_shift_invariant,
                                  multiply_x_op, psi_derivative_op,
                                  translation_op)
from psi_umbral.psi import PsiSequence
from psi_umbral.umbral import (DeltaOperator, basic_sequence_solve,
                               dual_raise_operator, eigenfunction_series,
                               rodrigues_sequence, sheffer_sequence, translate,
                               unit_normal_sequence)

CAP = 16


def classical():
    return PsiSequence.classical(CAP)


def test_translate_monomial_golden():
    psi = PsiSequence.jackson(0, 8)
    assert translate(psi, Fraction(1), Polynomial.monomial(2)) == Polynomial((1, 1, 1))
    # classical shift is the Taylor shift
    p = Polynomial((0, 0, 1))
    assert translate(classical(), 1, p) == Polynomial((1, 2, 1))


def test_translate_at_zero_is_identity():
    psi = PsiSequence.jackson(2, 8)
    p = Polynomial((3, 1, 4, 1))
    assert translate(psi, 0, p) == p


def test_falling_factorials_from_forward_difference():
    psi = classical()
    delta = forward_difference_op(psi, CAP)
    seq = basic_sequence_solve(delta, psi, 4)
    assert seq[2] == Polynomial((0, -1, 1))
    assert seq[3] == Polynomial((0, 2, -3, 1))
    assert seq[4] == Polynomial((0, -6, 11, -6, 1))


def test_basic_sequence_defining_relations():
    psi = PsiSequence.jackson(Fraction(1, 2), CAP)
    delta = forward_difference_op(psi, CAP)
    seq = basic_sequence_solve(delta, psi, 8)
    assert seq[0] == Polynomial.one()
    for n in range(1, 9):
        assert seq[n].constant_term == 0
        assert delta.apply(seq[n]) == psi.n_psi(n) * seq[n - 1]


def test_basic_sequence_monomials_for_derivative():
    psi = PsiSequence.jackson(2, CAP)
    d = psi_derivative_op(psi, CAP)
    seq = basic_sequence_solve(d, psi, 5)
    for n in range(6):
        assert seq[n] == Polynomial.monomial(n)


def test_basic_sequence_rejects_non_lowering():
    psi = classical()
    with pytest.raises(NotDegreeLoweringError):
        basic_sequence_solve(multiply_x_op(CAP), psi, 3)
    with pytest.raises(NotDegreeLoweringError):
        basic_sequence_solve(GradedOperator.identity(CAP), psi, 3)


def test_basic_sequence_works_without_shift_invariance():
    # derivative plus a leak two degrees down: lowers degree by one but the
    # leak is not expressible as a series in D, so no shift invariance
    def rule(n):
        if n == 0:
            return Polynomial()
        img = Polynomial.monomial(n - 1, n)
        if n >= 2:
            img = img + Polynomial.monomial(n - 2)
        return img

    psi = classical()
    op = GradedOperator.from_monomial_rule(rule, CAP)
    assert not is_shift_invariant(op, psi)
    seq = basic_sequence_solve(op, psi, 5)
    for n in range(1, 6):
        assert seq[n].constant_term == 0
        assert op.apply(seq[n]) == psi.n_psi(n) * seq[n - 1]


def test_monomials_to_basis_roundtrip():
    psi = classical()
    delta = forward_difference_op(psi, CAP)
    seq = basic_sequence_solve(delta, psi, 6)
    p = Polynomial((1, -2, 0, 5, 1))
    coords = seq.monomials_to_basis(p)
    rebuilt = Polynomial()
    for k, c in enumerate(coords):
        rebuilt = rebuilt + c * seq[k]
    assert rebuilt == p


def test_delta_operator_requires_shift_invariance():
    psi = PsiSequence.jackson(2, CAP)
    x2d = (multiply_x_op(CAP + 2) * multiply_x_op(CAP + 2)) * derivative_op(CAP + 2)
    with pytest.raises(NotShiftInvariantError):
        DeltaOperator.from_operator(x2d.truncated(CAP), psi)


def test_delta_operator_indicator_of_difference():
    psi = classical()
    delta = DeltaOperator.from_operator(forward_difference_op(psi, CAP), psi)
    fact = 1
    for k in range(1, 8):
        fact *= k
        assert delta.indicator.coefficient(k) == Fraction(1, fact)
    assert delta.indicator.constant_term == 0
    # S-series is the indicator shifted down by one
    assert delta.s_series.coefficient(0) == 1


def test_s_factorization():
    # op = (weighted derivative) composed with S
    psi = PsiSequence.jackson(Fraction(1, 2), CAP)
    delta = DeltaOperator.from_operator(forward_difference_op(psi, CAP), psi)
    d = psi_derivative_op(psi, CAP)
    prod = d * delta.s_operator()
    assert prod == delta.op.truncated(prod.cap)


def test_rodrigues_formulas_agree_with_solve():
    psi = PsiSequence.jackson(2, CAP)
    for coeffs in ([0, 1], [0, 1, 1], [0, 1, 0, Fraction(1, 3)]):
        delta = DeltaOperator.from_indicator(coeffs, psi, CAP)
        reference = delta.basic(6)
        for formula in (1, 2, 3, 4):
            got = rodrigues_sequence(delta, 6, formula=formula)
            assert list(got) == list(reference)


def test_rodrigues_needs_headroom():
    psi = classical()
    delta = DeltaOperator.from_indicator([0, 1], psi, 4)
    with pytest.raises(CapExceededError):
        rodrigues_sequence(delta, 4)


def test_binomial_identity_for_difference_basis():
    psi = PsiSequence.jackson(2, CAP)
    delta = forward_difference_op(psi, CAP)
    seq = basic_sequence_solve(delta, psi, 6)
    for n in range(7):
        for y in (Fraction(1), Fraction(-1), Fraction(2, 3)):
            lhs = translate(psi, y, seq[n])
            rhs = Polynomial()
            for k in range(n + 1):
                rhs = rhs + psi.binomial(n, k) * seq[n - k](y) * seq[k]
            assert lhs == rhs


def test_dual_raise_forms_commutation_pair():
    psi = PsiSequence.jackson(Fraction(1, 2), CAP)
    delta = forward_difference_op(psi, CAP)
    seq = basic_sequence_solve(delta, psi, CAP)
    dual = dual_raise_operator(seq)
    # raising then lowering along the sequence: [Q, R] = id
    comm = delta.commutator(dual)
    assert comm == GradedOperator.identity(comm.cap)
    # and R sends p_n to the weighted lift of p_(n+1)
    for n in range(4):
        lift = Fraction(n + 1) / psi.n_psi(n + 1)
        assert dual.apply(seq[n]) == lift * seq[n + 1]


def test_sheffer_sequence_translated_monomials():
    psi = classical()
    c = Fraction(3, 2)
    delta = DeltaOperator.from_operator(derivative_op(CAP), psi)
    s_op = translation_op(psi, c, CAP)
    seq = sheffer_sequence(delta, s_op, 6)
    for n in range(7):
        assert seq[n] == Polynomial((-c, 1)) ** n


def test_sheffer_lowering_recurrence():
    psi = PsiSequence.jackson(2, CAP)
    delta = DeltaOperator.from_operator(forward_difference_op(psi, CAP), psi)
    s_op = GradedOperator.identity(CAP) + psi_derivative_op(psi, CAP)
    seq = sheffer_sequence(delta, s_op, 6)
    for n in range(1, 7):
        assert delta.op.apply(seq[n]) == psi.n_psi(n) * seq[n - 1]


def test_unit_normal_sequence_is_normalization_invariant():
    # p_n / n_psi! is the same no matter which weights produced p_n
    delta_cl = forward_difference_op(PsiSequence.classical(CAP), CAP)
    for psi in (PsiSequence.classical(CAP), PsiSequence.jackson(2, CAP),
                PsiSequence.jackson(Fraction(1, 2), CAP)):
        seq = basic_sequence_solve(delta_cl, psi, 6)
        units = unit_normal_sequence(delta_cl, 6)
        for n in range(7):
            assert seq[n] * (Fraction(1) / psi.factorial(n)) == units[n]


def test_eigenfunction_series():
    psi = classical()
    delta = forward_difference_op(psi, CAP)
    lam = Fraction(1, 2)
    phi, table = eigenfunction_series(delta, lam, 10)
    assert phi.constant_term == 1
    assert len(table) == 11
    # op Phi = lam Phi exactly, once the dropped top table entry is restored
    applied = delta.apply(phi.as_polynomial())
    want = lam * (phi.as_polynomial() - lam ** 10 * table[10])
    assert applied == want


@given(st.integers(min_value=1, max_value=5))
@settings(max_examples=20)
def test_basic_solve_matches_rodrigues_for_random_tails(k):
    # indicator z + z^(k+1)/(k+1) is a valid delta indicator
    psi = PsiSequence.jackson(Fraction(1, 2), 12)
    coeffs = [Fraction(0), Fraction(1)] + [Fraction(0)] * (k - 1) + [Fraction(1, k + 1)]
    delta = DeltaOperator.from_indicator(coeffs, psi, 12)
    assert list(rodrigues_sequence(delta, 5)) == list(delta.basic(5))
