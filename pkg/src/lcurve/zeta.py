"""Point counts, L-polynomials and the passage between them.

Convention: P(t) = prod_i (1 - alpha_i t) = sum_k a_k t^k, and
s_m = sum_i alpha_i^m = q^m + 1 - #C(F_{q^m}).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from lcurve.curve import HyperellipticCurve
from lcurve.errors import (
    BudgetExceeded,
    InputError,
    InvalidLPolynomial,
    NonIntegralCoefficient,
    WeilBoundViolated,
)
from lcurve.finite_field import _Field, extension

DEFAULT_BUDGET = 10**8
# fields up to this order get a precomputed table of squares
SQUARE_TABLE_LIMIT = 1 << 22
CHUNK = 1 << 16


@dataclass(frozen=True)
class LPolynomial:
    q: int
    g: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        a, g, q = self.coeffs, self.g, self.q
        if g < 1:
            raise InvalidLPolynomial(f"genus must be >= 1, got {g}")
        if len(a) != 2 * g + 1:
            raise InvalidLPolynomial(f"expected {2 * g + 1} coefficients, got {len(a)}")
        if a[0] != 1:
            raise InvalidLPolynomial("constant coefficient must be 1")
        for i in range(g + 1):
            if a[g + i] != q**i * a[g - i]:
                raise InvalidLPolynomial(f"symmetry a_{g + i} = q^{i} a_{g - i} fails")

    def __call__(self, t: int) -> int:
        return sum(c * t**i for i, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"q": self.q, "g": self.g, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> LPolynomial:
        try:
            return cls(int(obj["q"]), int(obj["g"]), tuple(int(c) for c in obj["coeffs"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed L-polynomial: {exc}") from None


def weil_ok(q: int, g: int, m: int, count: int) -> bool:
    """|N_m - q^m - 1| <= 2g q^{m/2}, tested exactly by squaring."""
    dev = count - q**m - 1
    return dev * dev <= 4 * g * g * q**m


# -- counting ---------------------------------------------------------------


def _count_field(curve: HyperellipticCurve, m: int) -> _Field:
    return curve.spec if m == 1 else extension(curve.spec, m)


def _square_table(L: _Field, chunk: int) -> np.ndarray:
    table = np.zeros(L.order, dtype=bool)
    for start in range(0, L.order, chunk):
        x = L.residues_of(np.arange(start, min(start + chunk, L.order)))
        table[L.encode(L.vmul(x, x))] = True
    return table


def point_count(
    curve: HyperellipticCurve,
    m: int = 1,
    budget: int = DEFAULT_BUDGET,
    chunk: int = CHUNK,
) -> int:
    """#C(F_{q^m}) by enumerating x in F_{q^m}.

    Each x contributes 1 + chi(f(x)) affine points; the point at infinity
    adds one more.  ``chunk`` only controls memory use.
    """
    if m < 1:
        raise InputError(f"m must be >= 1, got {m}")
    Q = curve.q**m
    if Q > budget:
        raise BudgetExceeded(Q, budget)
    L = _count_field(curve, m)
    # constants of F_q keep their index inside F_q[v]/(k)
    coeffs = L.residues_of(np.array(curve.f.coeffs, dtype=np.int64))
    squares = _square_table(L, chunk) if Q <= SQUARE_TABLE_LIMIT else None
    half = (Q - 1) // 2
    total = 1
    for start in range(0, Q, chunk):
        x = L.residues_of(np.arange(start, min(start + chunk, Q)))
        acc = np.broadcast_to(coeffs[-1], x.shape).copy()
        for c in coeffs[-2::-1]:
            acc = L.vadd(L.vmul(acc, x), c)
        values = L.encode(acc)
        zero = values == 0
        if squares is not None:
            sq = squares[values]
        else:
            power = L.encode(L.vpow(acc, half))
            sq = power == 1
        # w = 1 at zeros, 2 at nonzero squares, 0 otherwise
        total += int(np.count_nonzero(zero)) + 2 * int(np.count_nonzero(sq & ~zero))
    return total


def count_vector(curve: HyperellipticCurve, ms: Sequence[int], budget: int = DEFAULT_BUDGET) -> list[int]:
    need = curve.q ** max(ms)
    if need > budget:
        raise BudgetExceeded(need, budget)
    return [point_count(curve, m, budget) for m in ms]


# -- counts <-> L-polynomial --------------------------------------------------


def lpoly_from_counts(q: int, g: int, counts: Sequence[int]) -> LPolynomial:
    counts = [int(n) for n in counts]
    if len(counts) != g:
        raise InputError(f"need exactly {g} counts, got {len(counts)}")
    for m, n in enumerate(counts, 1):
        if not weil_ok(q, g, m, n):
            raise WeilBoundViolated(f"N_{m} = {n} is outside the Weil interval for q={q}, g={g}")
    s = [0] + [q**m + 1 - n for m, n in enumerate(counts, 1)]
    a = [1] + [0] * (2 * g)
    for k in range(1, g + 1):
        num = -(s[k] + sum(a[i] * s[k - i] for i in range(1, k)))
        if num % k:
            raise NonIntegralCoefficient(f"a_{k} = {num}/{k} is not an integer")
        a[k] = num // k
    for i in range(1, g + 1):
        a[g + i] = q**i * a[g - i]
    return LPolynomial(q, g, tuple(a))


def power_sums(lp: LPolynomial, n: int) -> list[int]:
    """[s_1, ..., s_n] for the inverse roots of ``lp``."""
    a, g2 = lp.coeffs, 2 * lp.g
    s = [0] * (n + 1)
    for k in range(1, n + 1):
        if k <= g2:
            s[k] = -(k * a[k] + sum(a[i] * s[k - i] for i in range(1, k)))
        else:
            s[k] = -sum(a[i] * s[k - i] for i in range(1, g2 + 1))
    return s[1:]


def predict_counts(lp: LPolynomial, m: int) -> int:
    if m < 1:
        raise InputError(f"m must be >= 1, got {m}")
    return lp.q**m + 1 - power_sums(lp, m)[-1]


def reverse_to_frobenius(lp: LPolynomial) -> list[int]:
    """Coefficients b_i = a_{2g-i} of t^{2g} P(1/t), monic of degree 2g."""
    return list(reversed(lp.coeffs))


@lru_cache(maxsize=1024)
def _l_polynomial(curve: HyperellipticCurve, budget: int) -> tuple[LPolynomial, tuple[int, ...]]:
    g = curve.genus
    counts = count_vector(curve, range(1, g + 1), budget)
    return lpoly_from_counts(curve.q, g, counts), tuple(counts)


def l_polynomial(curve: HyperellipticCurve, budget: int = DEFAULT_BUDGET) -> LPolynomial:
    return _l_polynomial(curve, budget)[0]


def l_polynomial_with_counts(curve: HyperellipticCurve, budget: int = DEFAULT_BUDGET):
    """(LPolynomial, counts N_1..N_g used to build it)."""
    return _l_polynomial(curve, budget)
