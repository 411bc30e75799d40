"""Frobenius on 2-torsion: charpoly mod 2 from the factorization pattern."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from lcurve.curve import HyperellipticCurve
from lcurve.errors import InputError, ZeroPolynomial
from lcurve.polynomial import FactorizationPattern, FqPolynomial, factorization_pattern
from lcurve.zeta import DEFAULT_BUDGET, LPolynomial, l_polynomial


@dataclass(frozen=True)
class F2Polynomial:
    """Polynomial over F_2 packed into an int; bit i is the coefficient of t^i."""

    bits: int

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("bit vector must be non-negative")

    @classmethod
    def from_list(cls, coeffs: Iterable[int]) -> F2Polynomial:
        bits = 0
        for i, c in enumerate(coeffs):
            if int(c) & 1:
                bits |= 1 << i
        return cls(bits)

    @classmethod
    def from_hex(cls, text: str) -> F2Polynomial:
        return cls(int(text, 16))

    @classmethod
    def monomial(cls, k: int) -> F2Polynomial:
        return cls(1 << k)

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(max(self.degree + 1, 0))]

    def to_hex(self) -> str:
        return format(self.bits, "x")

    def __add__(self, other: F2Polynomial) -> F2Polynomial:
        return F2Polynomial(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: F2Polynomial) -> F2Polynomial:
        a, b, out = self.bits, other.bits, 0
        while b:
            if b & 1:
                out ^= a
            a <<= 1
            b >>= 1
        return F2Polynomial(out)

    def __pow__(self, e: int) -> F2Polynomial:
        out, base = F2Polynomial(1), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __divmod__(self, other: F2Polynomial) -> tuple[F2Polynomial, F2Polynomial]:
        if other.bits == 0:
            raise ZeroDivisionError("division by the zero polynomial")
        r, db = self.bits, other.degree
        q = 0
        while r and r.bit_length() - 1 >= db:
            shift = r.bit_length() - 1 - db
            q |= 1 << shift
            r ^= other.bits << shift
        return F2Polynomial(q), F2Polynomial(r)

    def is_palindromic(self, n: int) -> bool:
        """Bit i equals bit n - i for all i."""
        return all(((self.bits >> i) & 1) == ((self.bits >> (n - i)) & 1) for i in range(n + 1))

    def __str__(self):
        if not self.bits:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            if (self.bits >> i) & 1:
                terms.append("1" if i == 0 else "t" if i == 1 else f"t^{i}")
        return " + ".join(terms)


T_MINUS_1 = F2Polynomial(0b11)  # t + 1 = t - 1 over F_2


def charpoly_from_pattern(pattern: FactorizationPattern | Sequence[tuple[int, int]]) -> F2Polynomial:
    """(t - 1)^{-1} prod (t^{d_i} - 1)^{m_i} over F_2, for odd total degree."""
    entries = pattern.entries if isinstance(pattern, FactorizationPattern) else pattern
    prod = F2Polynomial(1)
    for d, m in entries:
        prod = prod * (F2Polynomial((1 << d) | 1) ** m)
    quo, rem = divmod(prod, T_MINUS_1)
    # the product has the root t = 1 whenever the total degree is >= 1
    assert rem.bits == 0, "t - 1 does not divide the product"
    return quo


def frobenius_charpoly_mod2(f: FqPolynomial) -> F2Polynomial:
    if f.is_zero():
        raise ZeroPolynomial("charpoly of the zero polynomial")
    n = f.degree
    if n < 3 or n % 2 == 0:
        raise InputError(f"degree must be odd and >= 3 for the charpoly, got {n}")
    out = charpoly_from_pattern(factorization_pattern(f))
    assert out.degree == n - 1
    return out


def lpoly_mod2(lp: LPolynomial) -> F2Polynomial:
    return F2Polynomial.from_list(c & 1 for c in lp.coeffs)


@dataclass(frozen=True)
class CongruenceReport:
    predicted: F2Polynomial
    counted: F2Polynomial
    match: bool

    def to_json(self) -> dict:
        return {
            "predicted": self.predicted.to_list(),
            "counted": self.counted.to_list(),
            "match": self.match,
        }


def check_mod2_congruence(curve: HyperellipticCurve, budget: int = DEFAULT_BUDGET) -> CongruenceReport:
    lp = l_polynomial(curve, budget)
    predicted = frobenius_charpoly_mod2(curve.f)
    counted = lpoly_mod2(lp)
    # mod 2, P and its reversal agree because q is odd
    assert counted.is_palindromic(2 * lp.g), "L-polynomial mod 2 is not palindromic"
    return CongruenceReport(predicted, counted, predicted == counted)
