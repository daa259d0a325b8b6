#!/usr/bin/env python3
"""The substitution product and the distributions it builds.

    python3 demos/star_product_poisson.py

The star product substitutes the raising operator for the left factor's
variable, which makes it noncommutative; the payoff is that exponential
identities and product-type weight families come out exactly.
"""

from fractions import Fraction

from psi_umbral import (Polynomial, PsiSequence, format_polynomial,
                        poisson_weights, star_mul)

CAP = 14


def main():
    psi = PsiSequence.jackson(Fraction(2), CAP)
    x = Polynomial.monomial(1)

    print("The product is noncommutative (q = 2):")
    sq = star_mul(x, x, psi).as_polynomial()
    print("  x * x       = %s" % format_polynomial(sq))
    one_left = star_mul(Polynomial.one(), x, psi).as_polynomial()
    print("  1 * x       = %s" % format_polynomial(one_left))

    print()
    print("Product-type weights over the rate lam = 1 (classical case):")
    cl = PsiSequence.classical(CAP)
    ws, norm = poisson_weights(cl, Fraction(1), 5, CAP)
    for m, w in enumerate(ws):
        print("  w_%d = %s + O(x^%d)"
              % (m, format_polynomial(w.as_polynomial().truncated(4)), 5))
    print("  normalizer = %s (identically one)"
          % format_polynomial(norm.as_polynomial()))

    print()
    print("Same construction with q = 2 weights still sums to one:")
    ws, norm = poisson_weights(psi, Fraction(1), 5, CAP)
    assert norm.as_polynomial() == Polynomial((Fraction(1),))
    total = ws[0]
    for w in ws[1:]:
        total = total + w
    print("  w_0 + ... + w_5 = %s + O(x^6)"
          % format_polynomial(total.as_polynomial().truncated(5)))


if __name__ == "__main__":
    main()
