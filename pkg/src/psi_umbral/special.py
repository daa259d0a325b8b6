"""Weighted exponential-type series and their residue-class slices.

The weighted exponential has coefficients 1/k_psi!.  Keeping only the
indices in one residue class mod m yields the m-th order hyperbolic
family, whose members sum back to the exponential and pass into each
other under the weighted derivative (index class drops by one, cyclically,
once the weights act).  The divided-difference exponential is the
geometric series, the classical one is exp.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import TruncatedSeries
from .psi import PsiSequence


def exp_psi_series(psi: PsiSequence, cap: int) -> TruncatedSeries:
    """Coefficients 1/k_psi! up to the cap."""
    return TruncatedSeries(
        tuple(Fraction(1) / psi.factorial(k) for k in range(cap + 1)), cap)


def psi_hyperbolic(psi: PsiSequence, m: int, j: int, cap: int) -> TruncatedSeries:
    """The slice of the weighted exponential with indices = j (mod m)."""
    if m < 1:
        raise ValueError("residue modulus must be positive")
    if not 0 <= j < m:
        raise ValueError("residue class out of range")
    return TruncatedSeries(
        tuple(Fraction(1) / psi.factorial(k) if k % m == j else Fraction(0)
              for k in range(cap + 1)), cap)


def cos_psi_series(psi: PsiSequence, cap: int) -> TruncatedSeries:
    """Alternating even slice: class 0 minus class 2 of the mod-4 partition."""
    return psi_hyperbolic(psi, 4, 0, cap) - psi_hyperbolic(psi, 4, 2, cap)


def sin_psi_series(psi: PsiSequence, cap: int) -> TruncatedSeries:
    """Alternating odd slice: class 1 minus class 3 of the mod-4 partition."""
    return psi_hyperbolic(psi, 4, 1, cap) - psi_hyperbolic(psi, 4, 3, cap)
