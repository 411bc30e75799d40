"""Finite fields F_p, F_q = F_p[u]/(h) and relative extensions F_q[v]/(k).

Every field element is stored as a non-negative integer *index*: the
little-endian digit vector of the element in the power basis, read as a
number in base ``sub.order``.  For F_q this is the residue vector read as a
base-p number, which is also the order used for lexicographic comparisons.

Besides scalar arithmetic on indices, each field offers a vectorised
numpy path (``vmul``/``vadd`` on arrays of prime residues of shape
``(..., *field.shape)``) used by the point counting kernel.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import gmpy2
import numpy as np

from lcurve.errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    InputError,
    NotPrime,
    ReducibleModulus,
)

# scalar ops go through lookup tables for fields at most this large
TABLE_LIMIT = 1024
MAX_PRIME = 2**31


class SquareClass(enum.Enum):
    ZERO = "Zero"
    SQUARE = "Square"
    NONSQUARE = "NonSquare"


class _Field:
    p: int
    order: int
    shape: tuple[int, ...]

    zero = 0
    one = 1

    # -- scalar arithmetic on indices -------------------------------------

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.pow(a, self.order - 2)

    def pth_root(self, a: int) -> int:
        """The unique b with b^p = a (Frobenius is bijective)."""
        return self.pow(a, self.order // self.p)

    def square_class(self, a: int) -> SquareClass:
        if a == 0:
            return SquareClass.ZERO
        if self.pow(a, (self.order - 1) // 2) == 1:
            return SquareClass.SQUARE
        return SquareClass.NONSQUARE

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field} is not {self}")
            return value
        value = int(value)
        if not 0 <= value < self.order:
            raise InputError(f"index {value} out of range for a field of order {self.order}")
        return FieldElement(self, value)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, i) for i in range(self.order)]

    # -- vectorised arithmetic on residue arrays --------------------------

    @property
    def degree(self) -> int:
        """Absolute degree over F_p."""
        return int(np.prod(self.shape, dtype=np.int64)) if self.shape else 1

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a + b) % self.p

    def vsub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a - b) % self.p

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def vpow(self, a: np.ndarray, e: int) -> np.ndarray:
        result = np.zeros_like(a)
        result[(Ellipsis,) + (0,) * len(self.shape)] = 1
        while e:
            if e & 1:
                result = self.vmul(result, a)
            e >>= 1
            if e:
                a = self.vmul(a, a)
        return result

    @cached_property
    def _weights(self) -> np.ndarray:
        return np.array([self.p**i for i in range(self.degree)], dtype=np.int64)

    def residues(self, a: int) -> np.ndarray:
        """Residue array of shape ``self.shape`` for the index ``a``."""
        return self.residues_of(np.array([a], dtype=np.int64))[0]

    def residues_of(self, idx: np.ndarray) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        out = np.empty(idx.shape + (self.degree,), dtype=np.int64)
        rest = idx.copy()
        for i in range(self.degree):
            rest, out[..., i] = np.divmod(rest, self.p)
        return out.reshape(idx.shape + self.shape)

    def encode(self, arr: np.ndarray) -> np.ndarray:
        """Inverse of :meth:`residues_of`."""
        flat = arr.reshape(arr.shape[: arr.ndim - len(self.shape)] + (self.degree,))
        return flat @ self._weights


class PrimeField(_Field):
    """F_p with residues as indices; used as the ground of every tower."""

    def __init__(self, p: int):
        self.p = p
        self.order = p
        self.shape = ()

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F_p", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def pow(self, a, e):
        if a == 0 and e < 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, e, self.p)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, -1, self.p)

    def pth_root(self, a):
        return a

    def vmul(self, a, b):
        return a * b % self.p

    def residues_of(self, idx):
        return np.asarray(idx, dtype=np.int64)

    def encode(self, arr):
        return arr


def _at(k: int, *index) -> tuple:
    """Index tuple addressing axes just before ``k`` trailing sub-field axes."""
    return (Ellipsis, *index) + (slice(None),) * k


class _TowerField(_Field):
    """sub[x] / (reduction), reduction monic of degree n over ``sub``."""

    def _setup(self, sub: _Field, reduction: Sequence[int]):
        self.ground = sub
        self.n = len(reduction) - 1
        self.reduction = tuple(reduction)
        self.p = sub.p
        self.order = sub.order**self.n
        self.shape = (self.n,) + sub.shape
        self._tables = None
        # x^n = -(r_0 + ... + r_{n-1} x^{n-1})
        self._tail = [sub.neg(c) for c in self.reduction[:-1]]

    # digits

    def split(self, a: int) -> list[int]:
        q = self.ground.order
        out = []
        for _ in range(self.n):
            a, d = divmod(a, q)
            out.append(d)
        return out

    def join(self, digits: Sequence[int]) -> int:
        q = self.ground.order
        a = 0
        for d in reversed(digits):
            a = a * q + d
        return a

    # scalar ops

    def _table(self):
        if self._tables is None and self.order <= TABLE_LIMIT:
            elems = self.residues_of(np.arange(self.order))
            a = elems[:, None]
            b = elems[None, :]
            self._tables = (
                self.encode(self.vadd(a, b)).tolist(),
                self.encode(self.vmul(a, b)).tolist(),
                self.encode(self.vsub(np.zeros_like(elems), elems)).tolist(),
            )
        return self._tables

    def add(self, a, b):
        t = self._table()
        if t is not None:
            return t[0][a][b]
        s = self.ground
        return self.join([s.add(x, y) for x, y in zip(self.split(a), self.split(b))])

    def neg(self, a):
        t = self._table()
        if t is not None:
            return t[2][a]
        s = self.ground
        return self.join([s.neg(x) for x in self.split(a)])

    def mul(self, a, b):
        t = self._table()
        if t is not None:
            return t[1][a][b]
        return self._mul_digits(a, b)

    def _mul_digits(self, a: int, b: int) -> int:
        s = self.ground
        n = self.n
        da, db = self.split(a), self.split(b)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                if y:
                    prod[i + j] = s.add(prod[i + j], s.mul(x, y))
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c:
                for i, r in enumerate(self._tail):
                    if r:
                        prod[k - n + i] = s.add(prod[k - n + i], s.mul(c, r))
        return self.join(prod[:n])

    # vectorised ops

    @cached_property
    def _reduction_residues(self) -> np.ndarray:
        return np.stack([self.ground.residues(c) for c in self.reduction[:-1]])

    def vmul(self, a, b):
        k = len(self.ground.shape)
        n = self.n
        p = self.p
        prod = self.ground.vmul(np.expand_dims(a, -(k + 1)), np.expand_dims(b, -(k + 2)))
        lead = prod.shape[: prod.ndim - k - 2]
        c = np.zeros(lead + (2 * n - 1,) + self.ground.shape, dtype=np.int64)
        for i in range(n):
            c[_at(k, slice(i, i + n))] += prod[_at(k, i)]
        c %= p
        red = self._reduction_residues
        for l in range(2 * n - 2, n - 1, -1):
            top = np.expand_dims(c[_at(k, l)], -(k + 1))
            c[_at(k, slice(l - n, l))] = (c[_at(k, slice(l - n, l))] - self.ground.vmul(top, red)) % p
        return c[_at(k, slice(0, n))]


class FieldSpec(_TowerField):
    """F_q = F_p[u]/(modulus), q = p^f.  ``modulus`` is ``None`` when f = 1.

    Construction validates p (odd prime) and the modulus (monic, degree f,
    irreducible over F_p).  Use :func:`field_make` to get a deterministic
    default modulus.
    """

    def __init__(self, p: int, f: int = 1, modulus: Sequence[int] | None = None):
        p, f = int(p), int(f)
        if p == 2:
            raise EvenCharacteristic("characteristic 2 is not supported; p must be odd")
        if p < 2 or p >= MAX_PRIME or not gmpy2.is_prime(p):
            raise NotPrime(f"{p} is not a prime below 2^31")
        if f < 1:
            raise InputError(f"extension degree must be >= 1, got {f}")
        prime = PrimeField(p)
        if modulus is not None and len(modulus) == 0:
            modulus = None
        if f == 1:
            if modulus is not None and (len(modulus) != 2 or modulus[1] % p != 1):
                raise InputError("a prime field takes no modulus (or a monic linear one)")
            modulus = None
        else:
            if modulus is None:
                from lcurve.polynomial import lex_first_irreducible

                modulus = lex_first_irreducible(prime, f)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != f + 1 or modulus[-1] != 1:
                raise InputError(f"modulus must be monic of degree {f}")
            from lcurve.polynomial import is_irreducible_coeffs

            if not is_irreducible_coeffs(prime, list(modulus)):
                raise ReducibleModulus(f"modulus {list(modulus)} is reducible over F_{p}")
        self.f = f
        self.modulus = modulus
        self._setup(prime, modulus if modulus is not None else (0, 1))
        if f == 1:
            # F_p fast path
            for name in ("add", "sub", "neg", "mul", "pow", "inv", "pth_root", "vmul"):
                setattr(self, name, getattr(prime, name))

    @property
    def q(self) -> int:
        return self.order

    @property
    def key(self) -> tuple:
        return (self.p, self.f, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and other.key == self.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.f == 1:
            return f"FieldSpec(p={self.p})"
        return f"FieldSpec(p={self.p}, f={self.f}, modulus={list(self.modulus)})"

    def gen(self) -> FieldElement:
        """The class of u in F_p[u]/(modulus)."""
        if self.f == 1:
            raise InputError("a prime field has no generator symbol u")
        return FieldElement(self, self.p)

    def from_residues(self, residues: Sequence[int]) -> FieldElement:
        residues = [int(r) % self.p for r in residues]
        if len(residues) > self.f:
            raise InputError(f"expected at most {self.f} residues, got {len(residues)}")
        return FieldElement(self, self._join_residues(residues))

    def _join_residues(self, residues: Sequence[int]) -> int:
        a = 0
        for r in reversed(residues):
            a = a * self.p + r
        return a


class ExtensionSpec(_TowerField):
    """F_{q^m} = base[v]/(rel_modulus) as a relative extension of ``base``.

    ``rel_modulus`` is a little-endian sequence of base-field indices (or
    elements) describing a monic irreducible polynomial of degree m.
    """

    def __init__(self, base: FieldSpec, m: int, rel_modulus: Sequence | None = None):
        m = int(m)
        if m < 1:
            raise InputError(f"relative degree must be >= 1, got {m}")
        from lcurve.polynomial import is_irreducible_coeffs, lex_first_irreducible

        if rel_modulus is None:
            rel_modulus = lex_first_irreducible(base, m)
        else:
            rel_modulus = tuple(base(c).value for c in rel_modulus)
            if len(rel_modulus) != m + 1 or rel_modulus[-1] != 1:
                raise InputError(f"relative modulus must be monic of degree {m}")
            if not is_irreducible_coeffs(base, list(rel_modulus)):
                raise ReducibleModulus("relative modulus is reducible over the base field")
        self.base = base
        self.m = m
        self.rel_modulus = tuple(rel_modulus)
        self._setup(base, self.rel_modulus)

    @property
    def key(self) -> tuple:
        return (self.base.key, self.m, self.rel_modulus)

    def __eq__(self, other):
        return isinstance(other, ExtensionSpec) and other.key == self.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"ExtensionSpec({self.base!r}, m={self.m}, rel_modulus={list(self.rel_modulus)})"


@dataclass(frozen=True)
class FieldElement:
    field: _Field
    value: int

    @property
    def coeffs(self) -> list:
        """Power-basis coordinates, little-endian.

        Residues for F_q, base-field elements for a relative extension.
        """
        f = self.field
        if isinstance(f, ExtensionSpec):
            return [FieldElement(f.base, d) for d in f.split(self.value)]
        if isinstance(f, FieldSpec):
            return [int(r) for r in f.residues(self.value)] if f.f > 1 else [self.value]
        return [self.value]

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field} vs {self.field}")
            return other.value
        if isinstance(other, int):
            # a constant's index is its residue at every level of the tower
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(b)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, int(e)))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FieldElement({self.coeffs})"


def field_make(p: int, f: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    return _field_make(int(p), int(f), tuple(modulus) if modulus else None)


_FIELD_CACHE: dict = {}


def _field_make(p, f, modulus):
    key = (p, f, modulus)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FieldSpec(p, f, modulus)
    return _FIELD_CACHE[key]


_EXT_CACHE: dict = {}


def extension(base: FieldSpec, m: int) -> ExtensionSpec:
    """F_{q^m} over ``base`` with the lex-first relative modulus (memoised)."""
    key = (base.key, m)
    if key not in _EXT_CACHE:
        _EXT_CACHE[key] = ExtensionSpec(base, m)
    return _EXT_CACHE[key]


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e


def is_square(a: FieldElement) -> SquareClass:
    return a.field.square_class(a.value)


def embed(a: FieldElement, ext: ExtensionSpec) -> FieldElement:
    """Constant-coefficient embedding F_q -> F_q[v]/(k)."""
    if a.field != ext.base:
        raise FieldMismatch(f"{a.field} is not the base of {ext}")
    # index of a constant is the base index itself
    return FieldElement(ext, a.value)
