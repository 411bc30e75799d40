import random

import pytest

import lcurve.zeta as zeta
from lcurve.curve import curve_make
from lcurve.errors import BudgetExceeded, InvalidLPolynomial, NonIntegralCoefficient, WeilBoundViolated
from lcurve.finite_field import extension, field_make
from lcurve.polynomial import FqPolynomial, is_separable
from lcurve.zeta import (
    LPolynomial,
    l_polynomial,
    lpoly_from_counts,
    point_count,
    predict_counts,
    reverse_to_frobenius,
    weil_ok,
)

from oracles import count_points_pairs, count_points_prime, lpoly_by_power_series

F3 = field_make(3)


def curve(coeffs, field=F3):
    return curve_make(field, FqPolynomial.from_ints(field, coeffs))


def random_curve(field, g, rng):
    while True:
        f = FqPolynomial(field, tuple(rng.randrange(field.order) for _ in range(2 * g + 1)) + (1,))
        if is_separable(f):
            return curve_make(field, f)


# frozen by the double-loop oracle: f(0)=f(1)=f(2)=1 and f = x^3 - x vanishes on F_3
def test_known_counts_against_oracle():
    assert count_points_prime([1, -1 % 3, 0, 1], 3) == 7
    assert count_points_prime([0, -1 % 3, 0, 1], 3) == 4
    assert point_count(curve([1, -1, 0, 1]), 1) == 7
    assert point_count(curve([0, -1, 0, 1]), 1) == 4


def test_count_over_f9_example():
    C = curve([1, -1, 0, 1])
    E = extension(F3, 2)
    assert count_points_pairs(E, list(C.f.coeffs)) == 7
    assert point_count(C, 2) == 7


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_prime_field_counts_match_double_loop(p):
    rng = random.Random(p)
    F = field_make(p)
    for g in (1, 2, 3):
        for _ in range(5):
            C = random_curve(F, g, rng)
            assert point_count(C, 1) == count_points_prime(list(C.f.coeffs), p)


@pytest.mark.parametrize("p, f, m", [(3, 1, 2), (3, 1, 3), (3, 1, 4), (3, 2, 1), (3, 2, 2), (5, 1, 2),
                                     (5, 2, 1), (3, 3, 1), (7, 1, 2)])
def test_extension_counts_match_scalar_pairs(p, f, m):
    F = field_make(p, f)
    L = F if m == 1 else extension(F, m)
    rng = random.Random(p * 100 + f * 10 + m)
    for g in (1, 2):
        C = random_curve(F, g, rng)
        assert point_count(C, m) == count_points_pairs(L, list(C.f.coeffs))


def test_euler_path_matches_table_path(monkeypatch):
    rng = random.Random(4)
    cases = [(random_curve(field_make(5, 2), 2, rng), 2), (random_curve(F3, 3, rng), 5)]
    expected = [point_count(C, m) for C, m in cases]
    monkeypatch.setattr(zeta, "SQUARE_TABLE_LIMIT", 0)
    assert [point_count(C, m) for C, m in cases] == expected


def test_count_independent_of_partition():
    rng = random.Random(5)
    C = random_curve(field_make(3, 2), 2, rng)
    assert point_count(C, 3, chunk=7) == point_count(C, 3, chunk=1000) == point_count(C, 3)


def test_budget_exceeded_reports_requirement():
    C = curve([1, -1, 0, 1])
    with pytest.raises(BudgetExceeded) as info:
        point_count(C, 5, budget=100)
    assert info.value.required == 243
    with pytest.raises(BudgetExceeded):
        l_polynomial(random_curve(F3, 2, random.Random(0)), budget=5)


def test_counts_are_at_least_one():
    rng = random.Random(6)
    for _ in range(20):
        assert point_count(random_curve(field_make(7), 1, rng), 1) >= 1


@pytest.mark.parametrize("q, g, counts, expected", [
    (3, 1, [7], [1, 3, 3]),
    (3, 2, [4, 10], [1, 0, 0, 0, 9]),
])
def test_lpoly_from_counts_examples(q, g, counts, expected):
    assert list(lpoly_from_counts(q, g, counts).coeffs) == expected
    assert lpoly_by_power_series(q, g, counts) == expected[: g + 1]


def test_lpoly_from_counts_errors():
    with pytest.raises(WeilBoundViolated):
        lpoly_from_counts(3, 1, [100])
    # s_1 = 0, s_2 = 1: a_2 = -1/2
    with pytest.raises(NonIntegralCoefficient):
        lpoly_from_counts(3, 2, [4, 9])


def test_newton_matches_power_series_oracle():
    rng = random.Random(7)
    for field, g in [(F3, 3), (field_make(5), 3), (field_make(3, 2), 2), (field_make(7), 2)]:
        for _ in range(5):
            C = random_curve(field, g, rng)
            counts = [point_count(C, m) for m in range(1, g + 1)]
            lp = lpoly_from_counts(C.q, g, counts)
            assert list(lp.coeffs[: g + 1]) == lpoly_by_power_series(C.q, g, counts)


def test_l_polynomial_examples():
    assert l_polynomial(curve([1, -1, 0, 1])).coeffs == (1, 3, 3)
    assert l_polynomial(curve([0, -1, 0, 1])).coeffs == (1, 0, 3)


def test_reverse_to_frobenius():
    lp = LPolynomial(3, 1, (1, 3, 3))
    assert reverse_to_frobenius(lp) == [3, 3, 1]
    rev = reverse_to_frobenius(lp)
    assert [b % 2 for b in rev] == [a % 2 for a in lp.coeffs]
    assert list(reversed(rev)) == list(lp.coeffs)


def test_predict_counts_examples():
    lp = LPolynomial(3, 1, (1, 3, 3))
    assert predict_counts(lp, 1) == 7
    assert predict_counts(lp, 2) == 7
    assert predict_counts(LPolynomial(3, 1, (1, 0, 3)), 1) == 4


@pytest.mark.parametrize("field, g", [(F3, 1), (F3, 2), (F3, 3), (field_make(5), 2), (field_make(3, 2), 2),
                                      (field_make(7), 1), (field_make(5, 2), 1)])
def test_round_trip_counts_beyond_genus(field, g):
    rng = random.Random(field.order * 10 + g)
    for _ in range(4):
        C = random_curve(field, g, rng)
        lp = l_polynomial(C)
        for m in range(1, 2 * g + 1):
            n = point_count(C, m)
            assert predict_counts(lp, m) == n
            assert weil_ok(C.q, g, m, n)
        assert lp(1) > 0


def test_lpolynomial_invariants_enforced():
    with pytest.raises(InvalidLPolynomial):
        LPolynomial(3, 1, (2, 3, 3))
    with pytest.raises(InvalidLPolynomial):
        LPolynomial(3, 1, (1, 3, 4))
    with pytest.raises(InvalidLPolynomial):
        LPolynomial(3, 2, (1, 3, 3))


def test_json_round_trip():
    lp = LPolynomial(25, 2, (1, -4, 2, -100, 625))
    obj = lp.to_json()
    assert obj == {"q": 25, "g": 2, "coeffs": ["1", "-4", "2", "-100", "625"]}
    assert LPolynomial.from_json(obj) == lp


def test_deterministic():
    C = curve([1, 2, 0, 1, 1, 1, 0, 1])
    first = l_polynomial(C).coeffs
    zeta._l_polynomial.cache_clear()
    assert l_polynomial(C).coeffs == first
