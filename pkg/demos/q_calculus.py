#!/usr/bin/env python3
"""A tour of the q-calculus corner of the library.

    python3 demos/q_calculus.py

Shows the Jackson derivative as a weighted derivative, its binomials,
exact q-integration, and operator detection at work.
"""

from fractions import Fraction

from psi_umbral import (OperatorContext, Polynomial, PsiSequence,
                        detect_psi_series, format_polynomial, parse_operator,
                        psi_derivative, psi_integral, q_integral)

CAP = 12
Q = Fraction(1, 2)


def main():
    psi = PsiSequence.jackson(Q, CAP)

    print("Jackson weights [n]_q for q = %s:" % Q)
    print("  " + ", ".join(str(psi.n_psi(n)) for n in range(1, 9)))

    print()
    print("q-binomial triangle (rows n = 0..5):")
    for n in range(6):
        print("  " + "  ".join(str(psi.binomial(n, k)) for k in range(n + 1)))

    print()
    print("Integration inverts the derivative exactly:")
    p = Polynomial((Fraction(3), Fraction(0), Fraction(-2), Fraction(1)))
    integrated = q_integral(Q, p)
    print("  p            = %s" % format_polynomial(p))
    print("  integral(p)  = %s" % format_polynomial(integrated))
    assert psi_derivative(psi, integrated) == p
    assert psi_integral(psi, p) == integrated
    print("  derivative(integral(p)) == p, and the weighted route agrees")

    print()
    print("Detection recovers weights from a disguised operator:")
    op = parse_operator("D * X * D", OperatorContext(CAP))
    result = detect_psi_series(op)
    assert result.is_series
    weights = result.psi.values(6)
    print("  D X D acts like a weighted derivative with weights "
          + ", ".join(str(w) for w in weights) + ", ...")
    print("  (the perfect squares)")


if __name__ == "__main__":
    main()
