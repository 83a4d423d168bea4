"""Gaussian elimination over GF(p) for small prime p.

Everything here works on plain integer numpy arrays and reduces mod p after
each step.  The batched routines eliminate a stack of independent systems in
lock-step, which is what the decodability oracle needs: one system per
receiver, all of the same shape.
"""

from __future__ import annotations

import numpy as np

from .field import PrimeField


def _dtype(p: int):
    # products stay below p**2 before reduction
    return np.int16 if p <= 181 else np.int64


def _inverse_table(p: int) -> np.ndarray:
    table = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        table[a] = pow(a, -1, p)
    return table


def _eliminate(A: np.ndarray, p: int, pivot_rows: int) -> np.ndarray:
    """Batched forward elimination in place; returns per-system ranks.

    Only rows ``[0:pivot_rows)`` may serve as pivots; rows after that are
    reduced against them but never chosen.
    """
    B, m, n = A.shape
    inv = _inverse_table(p).astype(A.dtype)
    rank = np.zeros(B, dtype=np.int64)
    rows = np.arange(m)
    batch = np.arange(B)
    for c in range(n):
        col = A[:, :, c]
        cand = (col != 0) & (rows[None, :] >= rank[:, None]) & (rows[None, :] < pivot_rows)
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = np.argmax(cand, axis=1)
        b = batch[has]
        dst, src = rank[has], piv[has]
        swap = A[b, src].copy()
        A[b, src] = A[b, dst]
        A[b, dst] = swap
        pivrow = (A[b, dst] * inv[A[b, dst, c]][:, None]) % p
        A[b, dst] = pivrow
        factor = A[b, :, c].copy()
        factor[rows[None, :] <= dst[:, None]] = 0
        A[b] = (A[b] - factor[:, :, None] * pivrow[:, None, :]) % p
        rank[has] += 1
    return rank


def rank_mod_p(A: np.ndarray, p: int) -> np.ndarray | int:
    """Rank over GF(p) of a matrix, or of each matrix in a (B, m, n) stack."""
    A = np.asarray(A)
    single = A.ndim == 2
    work = (A[None] if single else A).astype(_dtype(p)) % p
    ranks = _eliminate(work, p, work.shape[1])
    return int(ranks[0]) if single else ranks


def _pack_bits(A: np.ndarray) -> np.ndarray:
    """(..., n) 0/1 array -> (..., ceil(n/64)) uint64 words, bit c of word c//64."""
    n = A.shape[-1]
    words = -(-n // 64)
    padded = np.zeros(A.shape[:-1] + (words * 64,), dtype=np.uint8)
    padded[..., :n] = A & 1
    bytes_ = np.packbits(padded, axis=-1, bitorder="little")
    return bytes_.view("<u8").reshape(A.shape[:-1] + (words,))


def _eliminate_gf2(A: np.ndarray, n: int, pivot_rows: int) -> None:
    """Batched GF(2) forward elimination on bit-packed rows, in place."""
    B, m, _ = A.shape
    rank = np.zeros(B, dtype=np.int64)
    rows = np.arange(m)
    batch = np.arange(B)
    one = np.uint64(1)
    for c in range(n):
        w, s = divmod(c, 64)
        bit = ((A[:, :, w] >> np.uint64(s)) & one).astype(bool)
        cand = bit & (rows[None, :] >= rank[:, None]) & (rows[None, :] < pivot_rows)
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = batch[has]
        dst, src = rank[has], np.argmax(cand[has], axis=1)
        swap = A[b, src].copy()
        A[b, src] = A[b, dst]
        A[b, dst] = swap
        bit[b, src], bit[b, dst] = bit[b, dst], True
        hit = bit[b] & (rows[None, :] > dst[:, None])
        A[b] ^= np.where(hit[:, :, None], A[b, dst][:, None, :], np.uint64(0))
        rank[has] += 1


def outside_rowspan(basis: np.ndarray, target: np.ndarray, p: int) -> np.ndarray:
    """For each system b, whether ``target[b]`` lies outside the row span of ``basis[b]``.

    ``basis`` has shape (B, m, n) and ``target`` (B, n).
    """
    B, m, n = basis.shape
    stacked = np.concatenate([basis, target[:, None, :]], axis=1)
    if p == 2:
        work = _pack_bits(stacked.astype(np.uint8))
        _eliminate_gf2(work, n, m)
        return (work[:, m, :] != 0).any(axis=1)
    work = stacked.astype(_dtype(p)) % p
    _eliminate(work, p, m)
    return (work[:, m, :] != 0).any(axis=1)


def solve_mod_p(A: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution x of A x = b over GF(p), or None if inconsistent."""
    F = PrimeField(p)
    A = np.asarray(A, dtype=np.int64) % p
    m, n = A.shape
    aug = np.concatenate([A, (np.asarray(b, dtype=np.int64) % p)[:, None]], axis=1)
    pivots = []
    r = 0
    for c in range(n):
        nz = np.flatnonzero(aug[r:, c])
        if nz.size == 0:
            continue
        s = r + nz[0]
        aug[[r, s]] = aug[[s, r]]
        aug[r] = (aug[r] * F.inv(int(aug[r, c]))) % p
        for i in np.flatnonzero(aug[:, c]):
            if i != r:
                aug[i] = (aug[i] - aug[i, c] * aug[r]) % p
        pivots.append(c)
        r += 1
        if r == m:
            break
    if np.any(aug[r:, n] != 0):
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = aug[i, n]
    return x
