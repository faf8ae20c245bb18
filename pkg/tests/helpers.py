"""Shared test oracles, kept independent of the library implementation."""


def pascal_rows(limit: int) -> list[list[int]]:
    """Rows 0..limit of Pascal's triangle, built by addition only.

    The library computes binomials via math.comb; tests go through this
    table instead so the q = 1 checks have an independent route.
    """
    rows = [[1]]
    for n in range(1, limit + 1):
        prev = rows[-1]
        row = [1]
        for k in range(1, n):
            row.append(prev[k - 1] + prev[k])
        row.append(1)
        rows.append(row)
    return rows


def binom(rows: list[list[int]], n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return rows[n][k]
