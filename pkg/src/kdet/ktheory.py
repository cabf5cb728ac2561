"""Borel's ranks of K_n(A) and the spectrum of the weight operator.

The operator acts on K_n(A) (x) C as the scalar (1 - n)/2; its spectrum is
that eigenvalue with multiplicity rank K_n(A).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .number_field import Signature

N_MAX_CAP = 10**6


def borel_rank(n: int, sig: Signature) -> int:
    if n < 0:
        raise DomainError(f"K-group index must be nonnegative, got {n}")
    if n == 0:
        return 1
    if n == 1:
        return sig.r1 + sig.r2 - 1
    if n % 4 == 1:
        return sig.r1 + sig.r2
    if n % 4 == 3:
        return sig.r2
    return 0


def eigenvalue(n: int) -> Fraction:
    return Fraction(1 - n, 2)


@dataclass(frozen=True)
class SpectrumSlice:
    n: int
    eigenvalue: Fraction
    multiplicity: int

    def to_dict(self):
        return {"n": self.n, "eigenvalue": str(self.eigenvalue), "rank": self.multiplicity}


def spectrum(sig: Signature, n_max: int) -> list[SpectrumSlice]:
    """Slices n = 0..n_max, zero-multiplicity ones included."""
    if n_max < 0 or n_max > N_MAX_CAP:
        raise DomainError(f"n_max must lie in 0..{N_MAX_CAP}, got {n_max}")
    return [SpectrumSlice(n, eigenvalue(n), borel_rank(n, sig)) for n in range(n_max + 1)]
