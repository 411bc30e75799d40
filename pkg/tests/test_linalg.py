import random

from hypothesis import given, settings
from hypothesis import strategies as st

from lcurve.linalg import rank_chain, rank_f2, rank_q, to_bitrows

from oracles import rank_by_minors


def test_identity():
    eye = [[int(i == j) for j in range(3)] for i in range(3)]
    assert rank_q(eye) == 3
    assert rank_chain(eye) == {"rank_mod2": 3, "rank_rational": 3}


def test_proportional_rows():
    assert rank_q([[1, 3, 3], [2, 6, 6]]) == 1


def test_even_diagonal_drops_mod_2():
    assert rank_chain([[2, 0], [0, 2]]) == {"rank_mod2": 0, "rank_rational": 2}


def test_f2_examples():
    g = 2
    top = 2 * g + 1
    rows = [(1 << top) | 1] + [(1 << top) | (1 << (top - i)) | (1 << i) | 1 for i in range(1, g + 1)]
    assert rank_f2(rows) == 3
    assert rank_f2([0, 0, 0]) == 0
    assert rank_f2([0b11]) == 1


def test_zero_column_skipped():
    assert rank_q([[0, 1, 2], [0, 2, 4], [0, 0, 1]]) == 2


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 7).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=150, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_rank_invariant_under_permutation_and_sign(m, rnd):
    rows = [list(r) for r in m]
    base = rank_chain(rows)
    rnd.shuffle(rows)
    i = rnd.randrange(len(rows))
    rows[i] = [-x for x in rows[i]]
    assert rank_chain(rows) == base


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_rank_matches_minor_oracle(m):
    assert rank_q(m) == rank_by_minors(m)
    assert rank_f2(to_bitrows(m)) == rank_by_minors(m, modulus=2)


def test_low_rank_constructions():
    rng = random.Random(3)
    for _ in range(50):
        k = rng.randint(1, 3)
        basis = [[rng.randint(-9, 9) for _ in range(7)] for _ in range(k)]
        rows = []
        for _ in range(5):
            coef = [rng.randint(-3, 3) for _ in basis]
            rows.append([sum(c * b[j] for c, b in zip(coef, basis)) for j in range(7)])
        assert rank_q(rows) == rank_by_minors(rows) <= k
