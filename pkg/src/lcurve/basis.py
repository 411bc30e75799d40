"""The g+1 witness curves C_0..C_g and the rank certificate built from them.

C_d : y^2 = f_d(x) f_{2g+1-d}(x), with f_0 = 1 and f_k monic irreducible of
degree k.  Mod 2, (t - 1) P_{C_d}(t) is t^{2g+1} + t^{2g+1-d} + t^d + 1
(just t^{2g+1} + 1 for d = 0), and these are independent over F_2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from lcurve.curve import HyperellipticCurve, curve_make
from lcurve.errors import CongruenceFailed, InputError, OutOfRange, VerificationFailed
from lcurve.finite_field import FieldSpec
from lcurve.linalg import rank_chain, rank_f2
from lcurve.mod2 import T_MINUS_1, F2Polynomial, frobenius_charpoly_mod2, lpoly_mod2
from lcurve.polynomial import FqPolynomial, LexFirst, Strategy, irreducible_poly
from lcurve.zeta import DEFAULT_BUDGET, LPolynomial, l_polynomial


@dataclass(frozen=True)
class BasisFamily:
    spec: FieldSpec
    g: int
    strategy: Strategy
    irreducibles: tuple[FqPolynomial, ...]  # f_1 .. f_{2g+1}
    curves: tuple[HyperellipticCurve, ...]  # C_0 .. C_g

    @property
    def q(self) -> int:
        return self.spec.order

    def factor(self, d: int) -> FqPolynomial:
        if d == 0:
            return FqPolynomial(self.spec, (1,))
        return self.irreducibles[d - 1]


def build_family(spec: FieldSpec, g: int, strategy: Strategy = LexFirst()) -> BasisFamily:
    if g < 1:
        raise InputError(f"genus must be >= 1, got {g}")
    # f_1 .. f_g and f_{g+1} .. f_{2g+1} are all used
    irreducibles = tuple(irreducible_poly(spec, d, strategy) for d in range(1, 2 * g + 2))
    one = FqPolynomial(spec, (1,))
    curves = []
    for d in range(g + 1):
        fd = one if d == 0 else irreducibles[d - 1]
        rhs = fd * irreducibles[2 * g - d]
        curves.append(curve_make(spec, rhs))
    return BasisFamily(spec, g, strategy, irreducibles, tuple(curves))


def expected_congruence(g: int, d: int) -> F2Polynomial:
    """(t - 1) P_{C_d}(t) mod 2."""
    if not 0 <= d <= g:
        raise OutOfRange(f"d must lie in 0..{g}, got {d}")
    top = 2 * g + 1
    if d == 0:
        return F2Polynomial((1 << top) | 1)
    return F2Polynomial((1 << top) | (1 << (top - d)) | (1 << d) | 1)


@dataclass
class CurveRecord:
    d: int
    curve: HyperellipticCurve
    lpoly: LPolynomial
    counted_times_t1: F2Polynomial
    predicted_times_t1: F2Polynomial
    expected: F2Polynomial

    @property
    def congruence_ok(self) -> bool:
        return self.counted_times_t1 == self.expected == self.predicted_times_t1


@dataclass
class BasisCertificate:
    spec: FieldSpec
    g: int
    strategy: Strategy
    records: list[CurveRecord]
    matrix: list[list[int]]
    rank_mod2: int
    rank_rational: int

    @property
    def q(self) -> int:
        return self.spec.order

    @property
    def theorem_ok(self) -> bool:
        return self.rank_rational == self.g + 1

    @property
    def all_congruences_ok(self) -> bool:
        return all(r.congruence_ok for r in self.records)

    def summary(self) -> str:
        status = "OK" if self.theorem_ok and self.all_congruences_ok else "FAIL"
        return f"q={self.q} g={self.g} rank={self.rank_rational}/{self.g + 1} {status}"

    def to_json(self) -> dict:
        from lcurve.serialize import curve_to_json, f2_to_json, field_to_json

        return {
            "q": self.q,
            "g": self.g,
            "field": field_to_json(self.spec),
            "strategy": self.strategy.describe(),
            "curves": [
                {
                    "d": r.d,
                    **curve_to_json(r.curve),
                    "lpoly": r.lpoly.to_json(),
                    "expected_congruence": f2_to_json(r.expected),
                    "counted_congruence": f2_to_json(r.counted_times_t1),
                    "predicted_congruence": f2_to_json(r.predicted_times_t1),
                    "congruence_ok": r.congruence_ok,
                }
                for r in self.records
            ],
            "matrix": [[str(x) for x in row] for row in self.matrix],
            "rank_mod2": self.rank_mod2,
            "rank_rational": self.rank_rational,
            "theorem_ok": self.theorem_ok,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


def verify_family(family: BasisFamily, budget: int = DEFAULT_BUDGET, strict: bool = True) -> BasisCertificate:
    """Count, check the congruences, and rank the L-polynomial matrix.

    With ``strict`` a failed congruence raises :class:`CongruenceFailed`;
    otherwise it is only recorded in the certificate.
    """
    g = family.g
    records = []
    for d, curve in enumerate(family.curves):
        lp = l_polynomial(curve, budget)
        rec = CurveRecord(
            d=d,
            curve=curve,
            lpoly=lp,
            counted_times_t1=T_MINUS_1 * lpoly_mod2(lp),
            predicted_times_t1=T_MINUS_1 * frobenius_charpoly_mod2(curve.f),
            expected=expected_congruence(g, d),
        )
        if strict and not rec.congruence_ok:
            raise CongruenceFailed(
                f"C_{d}: counted {rec.counted_times_t1}, predicted {rec.predicted_times_t1}, "
                f"expected {rec.expected}"
            )
        records.append(rec)
    matrix = [list(r.lpoly.coeffs) for r in records]
    ranks = rank_chain(matrix)
    if ranks["rank_rational"] > g + 1:
        raise VerificationFailed("rank exceeds g + 1, impossible for L-polynomials")
    return BasisCertificate(
        spec=family.spec,
        g=g,
        strategy=family.strategy,
        records=records,
        matrix=matrix,
        rank_mod2=ranks["rank_mod2"],
        rank_rational=ranks["rank_rational"],
    )


def verify_theorem(
    spec: FieldSpec, g: int, strategy: Strategy = LexFirst(), budget: int = DEFAULT_BUDGET
) -> BasisCertificate:
    return verify_family(build_family(spec, g, strategy), budget)


def congruence_rank(g: int) -> int:
    """F_2-rank of the g+1 expected congruence polynomials (no counting)."""
    return rank_f2([expected_congruence(g, d).bits for d in range(g + 1)])
