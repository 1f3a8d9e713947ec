# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for table-driven GF(q) linear algebra."""
import numpy as np
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

ctypedef unsigned char u8


def rref(M, add, sub, mul, inv):
    cdef u8[:, ::1] A = np.array(M, dtype=np.uint8, copy=True, order="C")
    cdef const u8[:, ::1] S = np.ascontiguousarray(sub, dtype=np.uint8)
    cdef const u8[:, ::1] X = np.ascontiguousarray(mul, dtype=np.uint8)
    cdef const u8[::1] I = np.ascontiguousarray(inv, dtype=np.uint8)
    cdef Py_ssize_t rows = A.shape[0], n = A.shape[1]
    cdef Py_ssize_t r = 0, c, i, j
    cdef u8 f, tmp
    cdef const u8* xrow
    pivots = []
    for c in range(n):
        if r == rows:
            break
        i = r
        while i < rows and A[i, c] == 0:
            i += 1
        if i == rows:
            continue
        if i != r:
            for j in range(c, n):
                tmp = A[r, j]
                A[r, j] = A[i, j]
                A[i, j] = tmp
        f = I[A[r, c]]
        if f != 1:
            for j in range(c, n):
                A[r, j] = X[f, A[r, j]]
        for i in range(rows):
            if i == r:
                continue
            f = A[i, c]
            if f == 0:
                continue
            xrow = &X[f, 0]
            for j in range(c, n):
                if A[r, j]:
                    A[i, j] = S[A[i, j], xrow[A[r, j]]]
        pivots.append(c)
        r += 1
    return np.asarray(A[:r]).copy(), pivots


cdef struct Ctx:
    int R
    int N
    int t
    int target
    const u8* cols  # N * R, column-major copy of M
    u8* basis      # R * R
    int* piv
    u8* scratch    # R
    const u8* S
    const u8* X
    const u8* I
    int q


cdef inline int reduce_into(Ctx* ctx, int c, int rank) noexcept nogil:
    """Reduce column c against the first `rank` basis vectors into scratch.

    Returns the first nonzero index of the result, or -1.
    """
    cdef int R = ctx.R, k, j, q = ctx.q
    cdef u8* v = ctx.scratch
    cdef u8* b
    cdef u8 f
    memcpy(v, ctx.cols + c * R, R)
    for k in range(rank):
        f = v[ctx.piv[k]]
        if f:
            b = ctx.basis + k * R
            for j in range(R):
                if b[j]:
                    v[j] = ctx.S[v[j] * q + ctx.X[f * q + b[j]]]
    for j in range(R):
        if v[j]:
            return j
    return -1


cdef int rec(Ctx* ctx, int start, int depth, int rank) noexcept nogil:
    cdef int need = ctx.t - depth, c, p, j, cnt
    cdef u8 f
    cdef u8* b
    if need == 0:
        return 1
    if rank == ctx.target:
        cnt = 0
        for c in range(start, ctx.N):
            if reduce_into(ctx, c, rank) < 0:
                cnt += 1
                if cnt >= need:
                    return 1
        return 0
    for c in range(start, ctx.N - need + 1):
        p = reduce_into(ctx, c, rank)
        if p >= 0:
            f = ctx.I[ctx.scratch[p]]
            b = ctx.basis + rank * ctx.R
            for j in range(ctx.R):
                b[j] = ctx.X[f * ctx.q + ctx.scratch[j]]
            ctx.piv[rank] = p
            if rec(ctx, c + 1, depth + 1, rank + 1):
                return 1
        else:
            if rec(ctx, c + 1, depth + 1, rank):
                return 1
    return 0


def exists_subset_rank_le(M, int t, int target, add, sub, mul, inv):
    """Is there a set of t columns of M whose rank is at most target?"""
    A = np.asarray(M, dtype=np.uint8)
    cdef int R = A.shape[0], N = A.shape[1]
    if t < 0 or t > N or target < 0:
        return False
    if t == 0 or target >= min(R, t):
        return True
    cdef const u8[:, ::1] colsT = np.ascontiguousarray(A.T)
    cdef const u8[:, ::1] S = np.ascontiguousarray(sub, dtype=np.uint8)
    cdef const u8[:, ::1] X = np.ascontiguousarray(mul, dtype=np.uint8)
    cdef const u8[::1] I = np.ascontiguousarray(inv, dtype=np.uint8)
    cdef Ctx ctx
    cdef int res
    ctx.R = R
    ctx.N = N
    ctx.t = t
    ctx.target = target
    ctx.q = S.shape[0]
    ctx.cols = &colsT[0, 0]
    ctx.S = &S[0, 0]
    ctx.X = &X[0, 0]
    ctx.I = &I[0]
    ctx.basis = <u8*> malloc(R * R)
    ctx.piv = <int*> malloc(R * sizeof(int))
    ctx.scratch = <u8*> malloc(R)
    if ctx.basis == NULL or ctx.piv == NULL or ctx.scratch == NULL:
        free(ctx.basis)
        free(ctx.piv)
        free(ctx.scratch)
        raise MemoryError()
    try:
        with nogil:
            res = rec(&ctx, 0, 0, 0)
    finally:
        free(ctx.basis)
        free(ctx.piv)
        free(ctx.scratch)
    return bool(res)
