"""q-analogs and the Gaussian binomial coefficient [n; k]_q.

Four independent construction routes are kept deliberately separate so
they can check each other:

* ``gauss_product``     quotient of (q^j - 1) products, via exact division
* ``gauss_qfactorial``  [n]_q! / ([k]_q! [n-k]_q!)
* ``gauss_recur1``      [n;k] = [n-1;k-1] + q^k [n-1;k]
* ``gauss_recur2``      [n;k] = q^(n-k) [n-1;k-1] + [n-1;k]

``gauss()`` is the canonical memoized accessor (recurrence 1 under a
write-once table) and is what the rest of the package consumes.

Convention: gauss(n, k) is the zero polynomial for k < 0 or k > n, so
the recurrences and identity sums hold uniformly at the boundary.
Negative n is a hard NegativeIndex error, never zero.
"""

from __future__ import annotations

import threading

from .errors import DomainError, NegativeIndex
from .poly import ONE, Polynomial, ZERO, monomial

__all__ = [
    "q_integer",
    "q_factorial",
    "gauss_product",
    "gauss_qfactorial",
    "gauss_recur1",
    "gauss_recur2",
    "QBinomTable",
    "gauss",
    "check_symmetry",
    "check_absorption",
]


def q_integer(n: int) -> Polynomial:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise NegativeIndex(f"q_integer needs n >= 0, got {n}")
    return Polynomial((1,) * n)


def q_factorial(n: int) -> Polynomial:
    """[n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1."""
    if n < 0:
        raise NegativeIndex(f"q_factorial needs n >= 0, got {n}")
    out = ONE
    for j in range(2, n + 1):
        out = out * q_integer(j)
    return out


def _q_pow_minus_one(j: int) -> Polynomial:
    # q^j - 1, j >= 1
    return Polynomial((-1,) + (0,) * (j - 1) + (1,))


def _check_nk(n: int, k: int) -> bool:
    # shared domain handling: True when the value is nonzero by convention
    if n < 0:
        raise NegativeIndex(f"gauss needs n >= 0, got {n}")
    return 0 <= k <= n


def gauss_product(n: int, k: int) -> Polynomial:
    """(q^n - 1)...(q^(n-k+1) - 1) / ((q^k - 1)...(q - 1)).

    The quotient is computed by one exact division; an InexactDivision
    escaping here means the implementation is broken and is allowed to
    propagate.
    """
    if not _check_nk(n, k):
        return ZERO
    num = ONE
    den = ONE
    for j in range(1, k + 1):
        num = num * _q_pow_minus_one(n - k + j)
        den = den * _q_pow_minus_one(j)
    return num.exact_div(den)


def gauss_qfactorial(n: int, k: int) -> Polynomial:
    """[n]_q! / ([k]_q! [n-k]_q!)."""
    if not _check_nk(n, k):
        return ZERO
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k))


def gauss_recur1(n: int, k: int) -> Polynomial:
    """Bottom-up [n;k] = [n-1;k-1] + q^k [n-1;k], bases [i;0] = [i;i] = 1."""
    if not _check_nk(n, k):
        return ZERO
    prev: list[Polynomial] = [ONE]
    for i in range(1, n + 1):
        cur: list[Polynomial] = []
        for j in range(min(i, k) + 1):
            if j == 0 or j == i:
                cur.append(ONE)
            else:
                cur.append(prev[j - 1] + prev[j].shift(j))
        prev = cur
    return prev[k]


def gauss_recur2(n: int, k: int) -> Polynomial:
    """Bottom-up [n;k] = q^(n-k) [n-1;k-1] + [n-1;k]."""
    if not _check_nk(n, k):
        return ZERO
    prev: list[Polynomial] = [ONE]
    for i in range(1, n + 1):
        cur: list[Polynomial] = []
        for j in range(min(i, k) + 1):
            if j == 0 or j == i:
                cur.append(ONE)
            else:
                cur.append(prev[j - 1].shift(i - j) + prev[j])
        prev = cur
    return prev[k]


class QBinomTable:
    """Write-once memo of Gaussian binomials filled by recurrence 1.

    Concurrent readers need no lock; inserts go through one lock and
    ``setdefault``, so an entry is never replaced.  Racing fills of the
    same key are benign because both threads compute identical values.
    """

    def __init__(self) -> None:
        self._memo: dict[tuple[int, int], Polynomial] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._memo)

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self._memo

    def gauss(self, n: int, k: int) -> Polynomial:
        if not _check_nk(n, k):
            return ZERO
        memo = self._memo
        hit = memo.get((n, k))
        if hit is not None:
            return hit
        for i in range(n + 1):
            for j in range(min(i, k) + 1):
                if (i, j) in memo:
                    continue
                if j == 0 or j == i:
                    value = ONE
                else:
                    value = memo[(i - 1, j - 1)] + memo[(i - 1, j)].shift(j)
                with self._lock:
                    memo.setdefault((i, j), value)
        return memo[(n, k)]


_DEFAULT_TABLE = QBinomTable()


def gauss(n: int, k: int, table: QBinomTable | None = None) -> Polynomial:
    """Canonical accessor: memoized recurrence-1 value of [n; k]_q.

    Uses a shared process-wide table unless one is passed explicitly.
    """
    return (_DEFAULT_TABLE if table is None else table).gauss(n, k)


def check_symmetry(n: int, k: int) -> bool:
    """[n;k]_q = [n;n-k]_q."""
    return gauss(n, k) == gauss(n, n - k)


def check_absorption(n: int, k: int) -> bool:
    """[n;k]_q (1 - q^k) = (1 - q^n) [n-1;k-1]_q, for 1 <= k <= n-1.

    Cross-multiplied form of the absorption rule, so the check stays in
    the polynomial ring instead of introducing rational functions.  Note
    the cofactor: pairing [n-1;k-1] with 1 - q^(n-k) instead only holds
    at n = 2k; that factor belongs to the companion rule with [n-1;k].
    """
    if not (1 <= k <= n - 1):
        raise DomainError(f"absorption needs 1 <= k <= n-1, got (n={n}, k={k})")
    lhs = gauss(n, k) * (ONE - monomial(1, k))
    rhs = (ONE - monomial(1, n)) * gauss(n - 1, k - 1)
    return lhs == rhs
