"""GF(q) kernels behind the subspace counting oracle.

Two interchangeable backends fill an int64 key array with one entry per
k x n matrix over GF(q): the key encodes the matrix's reduced row
echelon form (base-q digits, row major) when the matrix has full rank,
and is -1 otherwise.  Counting distinct nonnegative keys then counts
the k-dimensional subspaces of GF(q)^n, since RREF is a canonical form
for the row space.

The default backend compiles the scalar kernel with numba's @njit.
Setting the environment variable QLATTICE_NO_NUMBA to any nonempty
value before import selects a vectorized pure numpy fallback that runs
a batched Gauss-Jordan over chunks of matrices.  Both backends are
exercised by the tests; benchmarks/bench_subspaces.py compares their
speed.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import DomainError

NUMBA_ENV_FLAG = "QLATTICE_NO_NUMBA"

HAS_NUMBA = False
if not os.environ.get(NUMBA_ENV_FLAG):
    try:
        import numba  # noqa: F401  # probe only; njit imported lazily

        HAS_NUMBA = True
    except ImportError:
        HAS_NUMBA = False


def active_backend() -> str:
    return "numba" if HAS_NUMBA else "numpy"


def field_tables(q: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """(add, mul, inv, neg) int64 lookup tables for GF(q), q in {2, 3, 4}.

    GF(4) is F2[a]/(a^2 + a + 1) with elements coded 0, 1, a -> 2,
    a+1 -> 3; addition is XOR and every element is its own negative.
    inv[0] is a dummy 0, never consulted: pivots are nonzero.
    """
    if q in (2, 4):
        add = np.array([[x ^ y for y in range(q)] for x in range(q)], np.int64)
        neg = np.arange(q, dtype=np.int64)
        if q == 2:
            mul = np.array([[0, 0], [0, 1]], np.int64)
            inv = np.array([0, 1], np.int64)
        else:
            mul = np.array(
                [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]], np.int64
            )
            inv = np.array([0, 1, 3, 2], np.int64)
    elif q == 3:
        add = np.array([[(x + y) % 3 for y in range(3)] for x in range(3)], np.int64)
        mul = np.array([[(x * y) % 3 for y in range(3)] for x in range(3)], np.int64)
        inv = np.array([0, 1, 2], np.int64)
        neg = np.array([0, 2, 1], np.int64)
    else:
        raise DomainError(f"no field tables for q = {q}")
    return add, mul, inv, neg


def _rref_fill(k, n, q, total, add_t, mul_t, inv_t, neg_t, out):  # pragma: no cover
    # Scalar kernel: base-q decode plus in-place Gauss-Jordan, one matrix
    # at a time.  Kept nopython-compatible and only ever executed through
    # numba; the numpy backend below is the interpreted-mode path.
    m = np.empty((k, n), np.int64)
    for idx in range(total):
        rem = idx
        for i in range(k):
            for j in range(n):
                m[i, j] = rem % q
                rem //= q
        rank = 0
        for c in range(n):
            piv = -1
            for i in range(rank, k):
                if m[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            # rows at or below `rank` are zero left of column c, so row
            # operations may start at c
            if piv != rank:
                for j in range(c, n):
                    t = m[rank, j]
                    m[rank, j] = m[piv, j]
                    m[piv, j] = t
            iv = inv_t[m[rank, c]]
            if iv != 1:
                for j in range(c, n):
                    m[rank, j] = mul_t[m[rank, j], iv]
            for i in range(k):
                if i != rank and m[i, c] != 0:
                    f = neg_t[m[i, c]]
                    for j in range(c, n):
                        m[i, j] = add_t[m[i, j], mul_t[f, m[rank, j]]]
            rank += 1
            if rank == k:
                break
        if rank == k:
            key = np.int64(0)
            pw = np.int64(1)
            for i in range(k):
                for j in range(n):
                    key += m[i, j] * pw
                    pw *= q
            out[idx] = key
        else:
            out[idx] = -1


_NUMBA_KERNEL = None


def _numba_kernel():
    global _NUMBA_KERNEL
    if _NUMBA_KERNEL is None:
        from numba import njit

        _NUMBA_KERNEL = njit(cache=True)(_rref_fill)
    return _NUMBA_KERNEL


def _rref_fill_numpy(k, n, q, total, add_t, mul_t, inv_t, neg_t, out, chunk=1 << 15):
    """Vectorized fallback: batched Gauss-Jordan over chunks of matrices.

    Ranks diverge across a batch, so the per-matrix insertion row is an
    array and every row operation is a gather/scatter through the field
    lookup tables.
    """
    pows = q ** np.arange(k * n, dtype=np.int64)
    kidx = np.arange(k, dtype=np.int64)
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        idx = np.arange(start, stop, dtype=np.int64)
        batch = idx.size
        m = ((idx[:, None] // pows[None, :]) % q).reshape(batch, k, n)
        rank = np.zeros(batch, dtype=np.int64)
        for c in range(n):
            elig = (kidx[None, :] >= rank[:, None]) & (m[:, :, c] != 0)
            has = elig.any(axis=1)
            if not has.any():
                continue
            b = np.nonzero(has)[0]
            piv = np.argmax(elig[b], axis=1)  # first eligible row
            rb = rank[b]
            tmp = m[b, rb].copy()
            m[b, rb] = m[b, piv]
            m[b, piv] = tmp
            iv = inv_t[m[b, rb, c]]
            m[b, rb] = mul_t[m[b, rb], iv[:, None]]
            f = neg_t[m[b, :, c]]
            f[np.arange(b.size), rb] = 0  # pivot row eliminates the others
            m[b] = add_t[m[b], mul_t[f[:, :, None], m[b, rb][:, None, :]]]
            rank[b] = rb + 1
        keys = (m.reshape(batch, -1) * pows[None, :]).sum(axis=1)
        out[start:stop] = np.where(rank == k, keys, np.int64(-1))


def count_distinct_rref(n: int, k: int, q: int, backend: str | None = None) -> int:
    """Distinct full-rank RREFs among all k x n matrices over GF(q).

    backend: None picks numba when available, else numpy; pass "numba"
    or "numpy" to force one (tests and the benchmark do).
    """
    if backend is None:
        backend = active_backend()
    add_t, mul_t, inv_t, neg_t = field_tables(q)
    total = q ** (k * n)
    out = np.empty(total, dtype=np.int64)
    if backend == "numba":
        if not HAS_NUMBA:
            raise DomainError(
                "numba backend requested but numba is unavailable "
                f"(is {NUMBA_ENV_FLAG} set?)"
            )
        _numba_kernel()(k, n, q, total, add_t, mul_t, inv_t, neg_t, out)
    elif backend == "numpy":
        _rref_fill_numpy(k, n, q, total, add_t, mul_t, inv_t, neg_t, out)
    else:
        raise DomainError(f"unknown backend {backend!r}")
    keys = out[out >= 0]
    return int(np.unique(keys).size)
