"""Exact ranks over Q (fraction-free elimination) and over F_2 (bitsets)."""

from __future__ import annotations

from typing import Sequence


def rank_q(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q via Bareiss fraction-free elimination.

    Pivot is the first row (from the current one down) with a nonzero entry
    in the current column.  All divisions are exact.
    """
    a = [[int(x) for x in row] for row in rows]
    if not a:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((r for r in range(rank, n_rows) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        piv_row = a[rank]
        pv = piv_row[col]
        for r in range(rank + 1, n_rows):
            row = a[r]
            lead = row[col]
            for c in range(col + 1, n_cols):
                row[c] = (pv * row[c] - lead * piv_row[c]) // prev
            row[col] = 0
        prev = pv
        rank += 1
    return rank


def rank_f2(rows: Sequence[int]) -> int:
    """Rank over F_2 of rows given as int bitsets."""
    basis: list[int] = []
    for v in rows:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def to_bitrows(rows: Sequence[Sequence[int]]) -> list[int]:
    """Reduce an integer matrix mod 2, packing each row into an int."""
    out = []
    for row in rows:
        bits = 0
        for i, x in enumerate(row):
            if int(x) & 1:
                bits |= 1 << i
        out.append(bits)
    return out


def rank_chain(rows: Sequence[Sequence[int]]) -> dict[str, int]:
    """Both ranks; a rank drop mod 2 is possible, a rise is not."""
    r2 = rank_f2(to_bitrows(rows))
    rq = rank_q(rows)
    assert r2 <= rq, f"rank mod 2 ({r2}) exceeds rational rank ({rq})"
    return {"rank_mod2": r2, "rank_rational": rq}
