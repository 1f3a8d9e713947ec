"""Pure-Python/numpy reference kernels.  Same signatures as the compiled ones."""
import numpy as np


def rref(M, add, sub, mul, inv):
    """Reduced row echelon form over a table field.

    Returns (R, pivots) with R a fresh (rank, n) uint8 array.
    """
    A = np.array(M, dtype=np.uint8, copy=True, order="C")
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = mul[inv[A[r, c]], A[r]]
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            A[hit] = sub[A[hit], mul[col[hit][:, None], A[r][None, :]]]
        pivots.append(c)
        r += 1
    return A[:r].copy(), pivots


def _reduce(v, basis, piv, rank, sub, mul):
    for k in range(rank):
        c = v[piv[k]]
        if c:
            v = sub[v, mul[c, basis[k]]]
    return v


def exists_subset_rank_le(M, t, target, add, sub, mul, inv):
    """Is there a set of t columns of M whose rank is at most target?"""
    M = np.asarray(M, dtype=np.uint8)
    R, N = M.shape
    if t < 0 or t > N or target < 0:
        return False
    if t == 0 or target >= min(R, t):
        return True
    cols = [M[:, c].copy() for c in range(N)]
    basis = [None] * R
    piv = [0] * R

    def in_span_count(start, rank):
        cnt = 0
        for c in range(start, N):
            if not _reduce(cols[c], basis, piv, rank, sub, mul).any():
                cnt += 1
        return cnt

    def rec(start, depth, rank):
        need = t - depth
        if need == 0:
            return True
        if rank == target:
            return in_span_count(start, rank) >= need
        for c in range(start, N - need + 1):
            v = _reduce(cols[c], basis, piv, rank, sub, mul)
            nz = np.flatnonzero(v)
            if nz.size:
                p = int(nz[0])
                basis[rank] = mul[inv[v[p]], v]
                piv[rank] = p
                if rec(c + 1, depth + 1, rank + 1):
                    return True
            elif rec(c + 1, depth + 1, rank):
                return True
        return False

    return rec(0, 0, 0)
