"""Exact sparse multivariate polynomial and rational-function arithmetic.

Scalars are arbitrary-precision rationals (``fractions.Fraction``).  A
polynomial lives in Q[tau_0, .., tau_n, lam] where ``lam`` is nilpotent of
order two: every product discards terms with lam-exponent >= 2.  Monomials
are exponent tuples of length ``num_tau + 1`` (the last slot is the
lam-exponent); zero coefficients are never stored, so two polynomials are
equal iff their term maps are equal.

The fixed monomial order is graded lexicographic with
tau_0 < tau_1 < ... < tau_n < lam.  Serialisation (`Poly.__str__`) lists
terms in descending order under this order, which makes the text form
canonical and suitable for golden tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError, DomainError

Rational = Fraction


def rational_from_str(text: str) -> Fraction:
    """Parse "p/q" or "p" (lowest terms not required on input)."""
    return Fraction(text.strip())


def rational_to_str(value: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is one."""
    return str(value)


def _monomial_key(mono: tuple[int, ...]) -> tuple:
    # graded lex, lam most significant among equal-degree monomials
    return (sum(mono), mono[::-1])


class Poly:
    """Sparse polynomial in tau_0..tau_n and the nilpotent lam."""

    __slots__ = ("num_tau", "terms")

    def __init__(self, num_tau: int, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        self.num_tau = num_tau
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != num_tau + 1:
                    raise DimensionError(f"exponent tuple {mono} needs length {num_tau + 1}")
                if mono[-1] >= 2:
                    continue
                c = Fraction(coeff)
                if c:
                    clean[tuple(mono)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, num_tau: int) -> "Poly":
        return cls(num_tau)

    @classmethod
    def const(cls, num_tau: int, value) -> "Poly":
        return cls(num_tau, {(0,) * (num_tau + 1): Fraction(value)})

    @classmethod
    def one(cls, num_tau: int) -> "Poly":
        return cls.const(num_tau, 1)

    @classmethod
    def tau(cls, num_tau: int, index: int) -> "Poly":
        if not 0 <= index < num_tau:
            raise DomainError(f"tau index {index} out of range for {num_tau} variables")
        exp = [0] * (num_tau + 1)
        exp[index] = 1
        return cls(num_tau, {tuple(exp): Fraction(1)})

    @classmethod
    def lam(cls, num_tau: int) -> "Poly":
        exp = [0] * num_tau + [1]
        return cls(num_tau, {tuple(exp): Fraction(1)})

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_lambda_free(self) -> bool:
        return all(mono[-1] == 0 for mono in self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.num_tau == other.num_tau
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic ---------------------------------------------------
    def _check(self, other: "Poly") -> None:
        if self.num_tau != other.num_tau:
            raise DimensionError(f"mixed variable counts {self.num_tau} vs {other.num_tau}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono, Fraction(0)) + coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        return self._raw(self.num_tau, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return self._raw(self.num_tau, {m: -c for m, c in self.terms.items()})

    def scale(self, value) -> "Poly":
        c = Fraction(value)
        if not c:
            return Poly(self.num_tau)
        return self._raw(self.num_tau, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                if ma[-1] + mb[-1] >= 2:
                    continue
                mono = tuple(x + y for x, y in zip(ma, mb))
                acc = out.get(mono, Fraction(0)) + ca * cb
                if acc:
                    out[mono] = acc
                else:
                    out.pop(mono, None)
        return self._raw(self.num_tau, out)

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise DomainError("negative polynomial power")
        result = Poly.one(self.num_tau)
        for _ in range(exponent):
            result = result * self
        return result

    @classmethod
    def _raw(cls, num_tau: int, terms: dict) -> "Poly":
        poly = cls.__new__(cls)
        poly.num_tau = num_tau
        poly.terms = terms
        return poly

    # -- structure ----------------------------------------------------
    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def leading_monomial(self) -> tuple[int, ...]:
        if not self.terms:
            raise DomainError("zero polynomial has no leading monomial")
        return max(self.terms, key=_monomial_key)

    def leading_coeff(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def lambda_parts(self) -> tuple["Poly", "Poly"]:
        """Split p = p0 + lam*p1 into the lam-free polynomials (p0, p1)."""
        p0: dict[tuple[int, ...], Fraction] = {}
        p1: dict[tuple[int, ...], Fraction] = {}
        for mono, coeff in self.terms.items():
            if mono[-1] == 0:
                p0[mono] = coeff
            else:
                p1[mono[:-1] + (0,)] = coeff
        return self._raw(self.num_tau, p0), self._raw(self.num_tau, p1)

    def lambda_coefficient(self) -> "Poly":
        return self.lambda_parts()[1]

    def content(self) -> Fraction:
        """gcd of numerators over lcm of denominators, signed by the leading coefficient."""
        if not self.terms:
            return Fraction(0)
        num_gcd = 0
        den_lcm = 1
        for coeff in self.terms.values():
            num_gcd = gcd(num_gcd, abs(coeff.numerator))
            den_lcm = den_lcm * coeff.denominator // gcd(den_lcm, coeff.denominator)
        result = Fraction(num_gcd, den_lcm)
        return -result if self.leading_coeff() < 0 else result

    # -- evaluation ---------------------------------------------------
    def eval(self, tau_values: Sequence, lambda_value=0) -> Fraction:
        values = [Fraction(v) for v in tau_values]
        if len(values) != self.num_tau:
            raise DimensionError(f"expected {self.num_tau} tau values, got {len(values)}")
        lam = Fraction(lambda_value)
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            term = coeff
            for value, exp in zip(values, mono):
                if exp:
                    term *= value**exp
            if mono[-1]:
                term *= lam
            total += term
        return total

    # -- rendering ----------------------------------------------------
    def _var_name(self, index: int) -> str:
        return "lam" if index == self.num_tau else f"tau{index}"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, key=_monomial_key, reverse=True):
            coeff = self.terms[mono]
            factors = [
                self._var_name(i) + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(mono)
                if e
            ]
            if not factors:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(coeff))] + factors)
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self.num_tau}, {self})"


@dataclass(frozen=True)
class LinForm:
    """Homogeneous degree-one form: sum of tau coefficients plus a lam part."""

    taus: tuple[tuple[int, Fraction], ...]
    lam: Fraction = Fraction(0)

    @classmethod
    def make(cls, taus: Mapping[int, object] | None = None, lam=0) -> "LinForm":
        entries = []
        for index, coeff in sorted((taus or {}).items()):
            c = Fraction(coeff)
            if c:
                entries.append((index, c))
        return cls(tuple(entries), Fraction(lam))

    @classmethod
    def zero(cls) -> "LinForm":
        return cls((), Fraction(0))

    def is_zero(self) -> bool:
        return not self.taus and not self.lam

    def has_lambda(self) -> bool:
        return bool(self.lam)

    def to_poly(self, num_tau: int) -> Poly:
        terms: dict[tuple[int, ...], Fraction] = {}
        for index, coeff in self.taus:
            exp = [0] * (num_tau + 1)
            exp[index] = 1
            terms[tuple(exp)] = coeff
        if self.lam:
            terms[(0,) * num_tau + (1,)] = self.lam
        return Poly(num_tau, terms)

    def eval_tau(self, tau_values: Sequence[Fraction]) -> Fraction:
        """Value of the tau part; the lam coefficient is carried separately."""
        return sum((coeff * tau_values[index] for index, coeff in self.taus), Fraction(0))

    def __str__(self) -> str:
        parts = [f"{coeff}*tau{index}" for index, coeff in self.taus]
        if self.lam:
            parts.append(f"{self.lam}*lam")
        return " + ".join(parts) if parts else "0"


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_eval(p: Poly, tau_values: Sequence, lambda_value=0) -> Fraction:
    return p.eval(tau_values, lambda_value)


def complete_homogeneous(c: int, weights: Iterable[LinForm], num_tau: int) -> Poly:
    """Complete homogeneous symmetric polynomial h_c of the given weights.

    h_c is the sum over all size-c multisets of weights of the product of
    their elements; h_0 = 1.  Computed by the one-pass recurrence
    h_c(w_1..w_m) = h_c(w_1..w_{m-1}) + w_m * h_{c-1}(w_1..w_m), with
    lam-truncation applied by the underlying polynomial product.
    """
    if c < 0:
        raise DomainError("h_c needs c >= 0")
    h = [Poly.one(num_tau)] + [Poly.zero(num_tau) for _ in range(c)]
    for weight in weights:
        w = weight.to_poly(num_tau)
        for j in range(1, c + 1):
            h[j] = h[j] + w * h[j - 1]
    return h[c]


class RatFunc:
    """Quotient of two polynomials; the denominator is lam-free and nonzero.

    Canonical form: a zero numerator forces denominator one; when the
    numerator is a constant multiple of the denominator the quotient
    collapses to that constant; otherwise the denominator is scaled to
    integer coefficients with content one and positive leading coefficient.
    Full multivariate gcd reduction is not performed.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if num.num_tau != den.num_tau:
            raise DimensionError("numerator and denominator variable counts differ")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not den.is_lambda_free():
            raise DomainError("denominator must be lam-free; expand nilpotents first")
        if num.is_zero():
            self.num = Poly.zero(num.num_tau)
            self.den = Poly.one(num.num_tau)
            return
        ratio = self._constant_ratio(num, den)
        if ratio is not None:
            self.num = Poly.const(num.num_tau, ratio)
            self.den = Poly.one(num.num_tau)
            return
        scale = den.content()
        self.num = num.scale(1 / scale)
        self.den = den.scale(1 / scale)

    @staticmethod
    def _constant_ratio(num: Poly, den: Poly) -> Fraction | None:
        candidate = num.leading_coeff() / den.leading_coeff()
        if num == den.scale(candidate):
            return candidate
        return None

    @classmethod
    def from_const(cls, num_tau: int, value) -> "RatFunc":
        return cls(Poly.const(num_tau, value), Poly.one(num_tau))

    @property
    def num_tau(self) -> int:
        return self.num.num_tau

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def constant_value(self) -> Fraction | None:
        """The constant this quotient equals, or None if non-constant."""
        if self.num.is_zero():
            return Fraction(0)
        if not self.num.is_lambda_free():
            return None
        return self._constant_ratio(self.num, self.den)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if not self.num.is_lambda_free():
            raise DomainError("cannot invert a lam-bearing numerator")
        return RatFunc(self.den, self.num)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatFunc) and self.num * other.den == other.num * self.den

    def __str__(self) -> str:
        if self.den == Poly.one(self.num_tau):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def ratfunc_add(a: RatFunc, b: RatFunc) -> RatFunc:
    return a + b


def ratfunc_mul(a: RatFunc, b: RatFunc) -> RatFunc:
    return a * b


def ratfunc_neg(a: RatFunc) -> RatFunc:
    return -a
