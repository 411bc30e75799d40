"""Dense univariate polynomials over the fields in :mod:`lcurve.finite_field`.

The low-level routines work on little-endian lists of field indices (no
trailing zeros; ``[]`` is the zero polynomial) and take the field as first
argument.  :class:`FqPolynomial` wraps them in an immutable value type.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence, Union

from lcurve.errors import (
    ConstantPolynomial,
    DivisionByZero,
    FieldMismatch,
    InputError,
    ZeroPolynomial,
)
from lcurve.finite_field import FieldElement, _Field

Coeffs = list  # list[int] of field indices


def strip(a: Sequence[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: Sequence[int]) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(a) - 1


def poly_add(K: _Field, a: Coeffs, b: Coeffs) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = K.add(out[i], c)
    return strip(out)


def poly_neg(K: _Field, a: Coeffs) -> Coeffs:
    return [K.neg(c) for c in a]


def poly_sub(K: _Field, a: Coeffs, b: Coeffs) -> Coeffs:
    return poly_add(K, a, poly_neg(K, b))


def poly_scale(K: _Field, a: Coeffs, c: int) -> Coeffs:
    if c == 0:
        return []
    return [K.mul(x, c) for x in a]


def poly_mul(K: _Field, a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    add, mul = K.add, K.mul
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = add(out[i + j], mul(x, y))
    return strip(out)


def poly_divrem(K: _Field, a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], list(a)
    rem = list(a)
    lc_inv = K.inv(b[-1])
    quo = [0] * (len(a) - db)
    add, mul, neg = K.add, K.mul, K.neg
    for k in range(len(a) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        c = mul(c, lc_inv)
        quo[k - db] = c
        nc = neg(c)
        for i, y in enumerate(b):
            if y:
                rem[k - db + i] = add(rem[k - db + i], mul(nc, y))
    return strip(quo), strip(rem[:db])


def poly_rem(K: _Field, a: Coeffs, b: Coeffs) -> Coeffs:
    return poly_divrem(K, a, b)[1]


def poly_exquo(K: _Field, a: Coeffs, b: Coeffs) -> Coeffs:
    q, r = poly_divrem(K, a, b)
    assert not r, "inexact polynomial division"
    return q


def poly_monic(K: _Field, a: Coeffs) -> Coeffs:
    if not a or a[-1] == 1:
        return list(a)
    return poly_scale(K, a, K.inv(a[-1]))


def poly_gcd(K: _Field, a: Coeffs, b: Coeffs) -> Coeffs:
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = strip(a), strip(b)
    while b:
        a, b = b, poly_rem(K, a, b)
    return poly_monic(K, a)


def poly_derivative(K: _Field, a: Coeffs) -> Coeffs:
    # i * c as repeated addition of c is wasteful; multiply by the residue i mod p
    return strip([K.mul(c, i % K.p) if c else 0 for i, c in enumerate(a)][1:])


def poly_eval(K: _Field, a: Coeffs, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = K.add(K.mul(acc, x), c)
    return acc


def poly_powmod(K: _Field, a: Coeffs, e: int, m: Coeffs) -> Coeffs:
    if e < 0:
        raise InputError("negative exponent")
    result = [1]
    base = poly_rem(K, a, m)
    while e:
        if e & 1:
            result = poly_rem(K, poly_mul(K, result, base), m)
        e >>= 1
        if e:
            base = poly_rem(K, poly_mul(K, base, base), m)
    return poly_rem(K, result, m)


def _frobenius_x(K: _Field, f: Coeffs, k: int) -> list[Coeffs]:
    """[x^{q^1}, ..., x^{q^k}] mod f."""
    out = []
    h = [0, 1]
    for _ in range(k):
        h = poly_powmod(K, h, K.order, f)
        out.append(h)
    return out


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_coeffs(K: _Field, f: Coeffs) -> bool:
    """Rabin's test on a coefficient list."""
    f = strip(f)
    if not f:
        raise ZeroPolynomial("irreducibility of the zero polynomial")
    n = len(f) - 1
    if n == 0:
        raise ConstantPolynomial("irreducibility of a constant")
    f = poly_monic(K, f)
    if n == 1:
        return True
    if f[0] == 0:
        return False
    frob = _frobenius_x(K, f, n)
    x = [0, 1]
    if frob[n - 1] != x:
        return False
    for r in _prime_factors(n):
        h = frob[n // r - 1]
        if len(poly_gcd(K, poly_sub(K, h, x), f)) != 1:
            return False
    return True


def _pth_root_poly(K: _Field, a: Coeffs) -> Coeffs:
    p = K.p
    return strip([K.pth_root(c) for c in a[::p]])


def squarefree_decomposition(K: _Field, f: Coeffs) -> list[tuple[Coeffs, int]]:
    """Monic squarefree parts with multiplicities: f = lc * prod(g_i^{m_i})."""
    f = poly_monic(K, strip(f))
    if not f:
        raise ZeroPolynomial("square-free decomposition of zero")
    out: list[tuple[Coeffs, int]] = []
    mult = 1
    while len(f) > 1:
        c = poly_gcd(K, f, poly_derivative(K, f))
        w = poly_exquo(K, f, c)
        i = 1
        while len(w) > 1:
            y = poly_gcd(K, w, c)
            fac = poly_exquo(K, w, y)
            if len(fac) > 1:
                out.append((fac, i * mult))
            w = y
            c = poly_exquo(K, c, y)
            i += 1
        # what is left is a p-th power
        f = _pth_root_poly(K, c) if len(c) > 1 else [1]
        mult *= K.p
    return out


def distinct_degree_counts(K: _Field, g: Coeffs) -> list[tuple[int, int]]:
    """For squarefree monic g: [(d, number of irreducible factors of degree d)]."""
    g = poly_monic(K, g)
    out = []
    x = [0, 1]
    h = x
    d = 1
    while len(g) - 1 >= 2 * d:
        h = poly_powmod(K, h, K.order, g)
        t = poly_gcd(K, poly_sub(K, h, x), g)
        if len(t) > 1:
            out.append((d, (len(t) - 1) // d))
            g = poly_exquo(K, g, t)
            h = poly_rem(K, h, g)
        d += 1
    if len(g) > 1:
        out.append((len(g) - 1, 1))
    return out


@dataclass(frozen=True)
class FactorizationPattern:
    """Multiset of (degree, multiplicity) over the irreducible factors."""

    entries: tuple[tuple[int, int], ...]

    @property
    def total_degree(self) -> int:
        return sum(d * m for d, m in self.entries)

    def aggregated(self) -> list[tuple[int, int]]:
        """[(d, sum of multiplicities of degree-d factors)], sorted by d.

        This is all the Frobenius charpoly formula depends on, since
        prod (t^d - 1)^{m_i} groups by d.
        """
        acc: dict[int, int] = {}
        for d, m in self.entries:
            acc[d] = acc.get(d, 0) + m
        return sorted(acc.items())

    def is_squarefree(self) -> bool:
        return all(m == 1 for _, m in self.entries)


def pattern_of_coeffs(K: _Field, f: Coeffs) -> FactorizationPattern:
    f = strip(f)
    if not f:
        raise ZeroPolynomial("factorization pattern of zero")
    if len(f) == 1:
        raise ConstantPolynomial("factorization pattern of a constant")
    entries = []
    for part, m in squarefree_decomposition(K, f):
        for d, count in distinct_degree_counts(K, part):
            entries.extend([(d, m)] * count)
    return FactorizationPattern(tuple(sorted(entries)))


# -- choosing irreducibles ---------------------------------------------------


@dataclass(frozen=True)
class LexFirst:
    def describe(self):
        return "LexFirst"


@dataclass(frozen=True)
class Seeded:
    seed: int

    def describe(self):
        return {"seed": self.seed}


Strategy = Union[LexFirst, Seeded]


def lex_first_irreducible(K: _Field, d: int) -> tuple[int, ...]:
    """Monic irreducible of degree d that is smallest as a base-q number."""
    if d < 1:
        raise InputError("degree must be >= 1")
    q = K.order
    if d == 1:
        return (0, 1)
    # constant term 0 means x | f; start at 1
    for n in range(1, q**d):
        coeffs = []
        r = n
        for _ in range(d):
            r, c = divmod(r, q)
            coeffs.append(c)
        if coeffs[0] == 0:
            continue
        coeffs.append(1)
        if is_irreducible_coeffs(K, coeffs):
            return tuple(coeffs)
    raise AssertionError("no irreducible found")  # cannot happen


def seeded_irreducible(K: _Field, d: int, seed: int) -> tuple[int, ...]:
    rng = random.Random(seed)
    while True:
        coeffs = [rng.randrange(K.order) for _ in range(d)] + [1]
        if is_irreducible_coeffs(K, coeffs):
            return tuple(coeffs)


# -- value type --------------------------------------------------------------


@dataclass(frozen=True)
class FqPolynomial:
    """Polynomial with coefficients in ``field``; ``coeffs`` are field indices."""

    field: _Field
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(strip(self.coeffs)))

    @classmethod
    def from_elements(cls, field: _Field, elems: Sequence) -> FqPolynomial:
        return cls(field, tuple(field(e).value if isinstance(e, FieldElement) else int(e) for e in elems))

    @classmethod
    def from_ints(cls, field: _Field, ints: Sequence[int]) -> FqPolynomial:
        """Integer coefficients reduced mod p (constants of the field)."""
        return cls(field, tuple(int(c) % field.p for c in ints))

    @classmethod
    def x(cls, field: _Field) -> FqPolynomial:
        return cls(field, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> FieldElement:
        return FieldElement(self.field, self.coeffs[i] if i < len(self.coeffs) else 0)

    @property
    def elements(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.coeffs]

    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return FieldElement(self.field, self.coeffs[-1])

    def _check(self, other) -> FqPolynomial:
        if isinstance(other, FieldElement):
            other = FqPolynomial(other.field, (other.value,))
        elif isinstance(other, int):
            other = FqPolynomial(self.field, (other % self.field.p,))
        if not isinstance(other, FqPolynomial):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{other.field} vs {self.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FqPolynomial(self.field, poly_add(self.field, list(self.coeffs), list(other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return FqPolynomial(self.field, poly_sub(self.field, list(self.coeffs), list(other.coeffs)))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return FqPolynomial(self.field, poly_neg(self.field, list(self.coeffs)))

    def __mul__(self, other):
        other = self._check(other)
        return FqPolynomial(self.field, poly_mul(self.field, list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = FqPolynomial(self.field, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        return divrem(self, other)

    def __floordiv__(self, other):
        return divrem(self, other)[0]

    def __mod__(self, other):
        return divrem(self, other)[1]

    def __call__(self, x) -> FieldElement:
        return evaluate(self, x)

    def monic(self) -> FqPolynomial:
        return FqPolynomial(self.field, poly_monic(self.field, list(self.coeffs)))

    def __repr__(self):
        return f"FqPolynomial({list(self.coeffs)} over {self.field!r})"


def _same(a: FqPolynomial, b: FqPolynomial):
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    return a.field


def add(a: FqPolynomial, b: FqPolynomial) -> FqPolynomial:
    return a + b


def mul(a: FqPolynomial, b: FqPolynomial) -> FqPolynomial:
    return a * b


def divrem(a: FqPolynomial, b: FqPolynomial) -> tuple[FqPolynomial, FqPolynomial]:
    K = _same(a, b)
    q, r = poly_divrem(K, list(a.coeffs), list(b.coeffs))
    return FqPolynomial(K, q), FqPolynomial(K, r)


def gcd(a: FqPolynomial, b: FqPolynomial) -> FqPolynomial:
    K = _same(a, b)
    return FqPolynomial(K, poly_gcd(K, list(a.coeffs), list(b.coeffs)))


def derivative(a: FqPolynomial) -> FqPolynomial:
    return FqPolynomial(a.field, poly_derivative(a.field, list(a.coeffs)))


def evaluate(a: FqPolynomial, x) -> FieldElement:
    K = a.field
    xv = K(x).value if isinstance(x, FieldElement) else int(x) % K.p
    return FieldElement(K, poly_eval(K, list(a.coeffs), xv))


def powmod(a: FqPolynomial, e: int, m: FqPolynomial) -> FqPolynomial:
    K = _same(a, m)
    return FqPolynomial(K, poly_powmod(K, list(a.coeffs), e, list(m.coeffs)))


def is_separable(f: FqPolynomial) -> bool:
    if f.is_zero():
        raise ZeroPolynomial("separability of the zero polynomial")
    return gcd(f, derivative(f)).degree == 0


def is_irreducible(f: FqPolynomial) -> bool:
    return is_irreducible_coeffs(f.field, list(f.coeffs))


def factorization_pattern(f: FqPolynomial) -> FactorizationPattern:
    return pattern_of_coeffs(f.field, list(f.coeffs))


def irreducible_poly(field: _Field, d: int, strategy: Strategy = LexFirst()) -> FqPolynomial:
    if isinstance(strategy, Seeded):
        return FqPolynomial(field, seeded_irreducible(field, d, strategy.seed))
    return FqPolynomial(field, lex_first_irreducible(field, d))
