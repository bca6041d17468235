"""Super Gromov-Witten numbers of a point and constant-map invariants.

The k-point number of a point is, up to the sign (-1)^(k-3) and the
normalisation 2^(k-3), the sum over all weak compositions (i_4, .., i_k)
of k - 3 of the integrals of prod_j ((f^*)^(k-j) psi_j)^(i_j), attached to
the kappa-power 5 - 2k.  Compositions whose prefix sums exceed the
dimension of the corresponding forgetful image integrate to zero and are
pruned; the unpruned sum is kept available for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import DomainError
from .exact import rational_to_str
from .taut import integrate_monomial


@dataclass(frozen=True)
class Invariant:
    """Either zero, or an exact rational coefficient times kappa^kappa_exp."""

    coeff: Fraction
    kappa_exp: int

    def __post_init__(self):
        if self.coeff == 0 and self.kappa_exp != 0:
            object.__setattr__(self, "kappa_exp", 0)

    @classmethod
    def zero(cls) -> "Invariant":
        return cls(Fraction(0), 0)

    @classmethod
    def of(cls, coeff, kappa_exp: int) -> "Invariant":
        c = Fraction(coeff)
        return cls.zero() if c == 0 else cls(c, kappa_exp)

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return f"{rational_to_str(self.coeff)} * kappa^{self.kappa_exp}"

    def to_json(self) -> dict:
        if self.is_zero:
            return {"zero": True}
        return {"coefficient": rational_to_str(self.coeff), "kappa_exponent": self.kappa_exp}


def compositions(total: int, parts: int, pruned: bool = True) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts.

    With ``pruned`` set, branches whose running prefix sum over the first
    j parts exceeds j are dropped; those monomials integrate to zero.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return

    def rec(prefix: tuple[int, ...], remaining: int, slot: int):
        if slot == parts:
            if remaining == 0:
                yield prefix
            return
        for value in range(remaining + 1):
            if pruned and sum(prefix) + value > slot + 1:
                continue
            if slot == parts - 1 and value != remaining:
                continue
            yield from rec(prefix + (value,), remaining - value, slot + 1)

    yield from rec((), total, 0)


def point_sum(k: int, pruned: bool = True) -> Fraction:
    """Sum of the composition integrals entering the k-point number."""
    total = Fraction(0)
    for comp in compositions(k - 3, k - 3, pruned=pruned):
        total += integrate_monomial(k, comp)
    return total


def sgw_point(k: int) -> Invariant:
    """k-point super Gromov-Witten number of a point, k >= 3."""
    if k < 3:
        raise DomainError("k must be >= 3")
    total = point_sum(k)
    coeff = Fraction((-1) ** (k - 3), 2 ** (k - 3)) * total
    return Invariant.of(coeff, 5 - 2 * k)


def mapping_to_point(n: int, classes: Sequence[int]) -> Invariant:
    """Degree-zero k-point invariant of P^n with hyperplane-power insertions.

    Equals the point number scaled by the integral of the cup product of
    the insertions, which is one when the powers add up to n and zero
    otherwise.
    """
    k = len(classes)
    if n < 1:
        raise DomainError("n must be >= 1")
    if k < 3:
        raise DomainError("k must be >= 3")
    for a in classes:
        if not 0 <= a <= n:
            raise DomainError(f"class exponent {a} outside [0, {n}]")
    if sum(classes) != n:
        return Invariant.zero()
    return sgw_point(k)
