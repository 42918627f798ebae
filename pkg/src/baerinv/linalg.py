"""Exact integer rank by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from math import gcd


def integer_rank(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix given as a list of equal-length rows.

    One-step Bareiss elimination: every intermediate entry stays an integer
    and the divisions by the previous pivot are exact.
    """
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    if any(len(r) != ncols for r in m):
        raise ValueError("ragged matrix")
    nrows = len(m)
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nrows):
            f = m[i][col]
            row_i, row_r = m[i], m[rank]
            for j in range(col + 1, ncols):
                num = p * row_i[j] - f * row_r[j]
                q, r = divmod(num, prev)
                assert r == 0
                row_i[j] = q
            row_i[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def sparse_integer_rank(rows) -> int:
    """Rank over Q of sparse integer rows given as ``{column: value}`` mappings.

    Rows are reduced one at a time against stored echelon rows by integer
    cross-multiplication (``b*r - a*p``), then divided by their content, so
    no fractions appear. Column labels only need to be sortable.
    """
    pivots = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            lead = min(r)
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = r
                break
            a, b = r[lead], p[lead]
            merged = {c: b * v for c, v in r.items()}
            for c, v in p.items():
                merged[c] = merged.get(c, 0) - a * v
            r = {c: v for c, v in merged.items() if v}
            g = 0
            for v in r.values():
                g = gcd(g, v)
            if g > 1:
                r = {c: v // g for c, v in r.items()}
    return len(pivots)
