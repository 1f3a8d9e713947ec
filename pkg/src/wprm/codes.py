"""Linear codes over GF(q) in canonical RREF form, plus the exact GHW oracle."""
import os
from fractions import Fraction
from math import inf

import numpy as np

from . import kernels
from .errors import BudgetError, DomainError, PreconditionError
from .field import field

DEFAULT_GHW_BUDGET = 2 ** 24
DEFAULT_ENUM_BUDGET = 10 ** 7


def ghw_budget():
    v = os.environ.get("WPRM_BUDGET")
    return int(float(v)) if v else DEFAULT_GHW_BUDGET


def _as_matrix(rows, n=None):
    M = np.asarray(rows, dtype=np.int64)
    if M.size == 0:
        if n is None:
            n = M.shape[1] if M.ndim == 2 else 0
        return np.zeros((0, n), dtype=np.uint8)
    if M.ndim == 1:
        M = M[None, :]
    return M.astype(np.uint8)


def matrix_rank(F, M):
    M = np.asarray(M, dtype=np.uint8)
    if M.size == 0:
        return 0
    R, _ = kernels.rref(M, F)
    return len(R)


def rank_certificate(F, M, seed=0, tries=3):
    """Rank of a wide matrix: a column sample with full row rank certifies it.

    Returns (rank, how) with how in {"sample", "full"}.
    """
    M = np.asarray(M, dtype=np.uint8)
    k, n = M.shape
    if k == 0:
        return 0, "full"
    rng = np.random.default_rng(seed)
    size = min(n, 4 * k + 16)
    if size < n:
        for _ in range(tries):
            cols = np.sort(rng.choice(n, size=size, replace=False))
            if matrix_rank(F, M[:, cols]) == k:
                return k, "sample"
    return matrix_rank(F, M), "full"


def field_matmul(F, A, B):
    """A @ B over GF(q) with table arithmetic."""
    A = np.asarray(A, dtype=np.uint8)
    B = np.asarray(B, dtype=np.uint8)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.uint8)
    if F.e == 1:
        if A.shape[1] == 0:
            return out
        return ((A.astype(np.int64) @ B.astype(np.int64)) % F.p).astype(np.uint8)
    if F.p == 2 and A.shape[0] * A.shape[1] * B.shape[1] <= 1 << 22:
        # characteristic 2: addition of encodings is xor
        if A.shape[1] == 0:
            return out
        return np.bitwise_xor.reduce(F.mul_table[A[:, :, None], B[None, :, :]], axis=1)
    for j in range(A.shape[1]):
        out = F.add_table[out, F.mul_table[A[:, j, None], B[None, j, :]]]
    return out


class LinearCode:
    """Row space over GF(q), stored by its reduced row echelon basis."""

    def __init__(self, q, gen, pivots, n, tag=None):
        self.q = q
        self.gen = gen
        self.pivots = list(pivots)
        self.n = n
        self.tag = tag
        gen.setflags(write=False)

    @classmethod
    def from_rows(cls, q, rows, n=None, tag=None):
        F = field(q)
        M = _as_matrix(rows, n)
        if n is None:
            n = M.shape[1]
        if M.shape[1] != n:
            raise DomainError(f"rows have length {M.shape[1]}, expected {n}")
        if M.shape[0] == 0:
            return cls(q, np.zeros((0, n), dtype=np.uint8), [], n, tag)
        R, piv = kernels.rref(M, F)
        return cls(q, np.ascontiguousarray(R), piv, n, tag)

    @classmethod
    def zero(cls, q, n):
        return cls(q, np.zeros((0, n), dtype=np.uint8), [], n)

    @classmethod
    def full(cls, q, n):
        return cls(q, np.eye(n, dtype=np.uint8), list(range(n)), n)

    @property
    def F(self):
        return field(self.q)

    @property
    def k(self):
        return self.gen.shape[0]

    def __eq__(self, other):
        return (isinstance(other, LinearCode) and self.q == other.q and self.n == other.n
                and np.array_equal(self.gen, other.gen))

    def __hash__(self):
        return hash((self.q, self.n, self.gen.tobytes()))

    def __repr__(self):
        return f"LinearCode(q={self.q}, n={self.n}, k={self.k})"

    def params(self):
        return (self.n, self.k)

    def reduce(self, V):
        """Residues of the rows of V modulo the code (zero rows = members)."""
        F = self.F
        V = _as_matrix(V, self.n)
        if self.k == 0 or len(V) == 0:
            return V.copy()
        coef = V[:, self.pivots]
        return F.sub_table[V, field_matmul(F, coef, self.gen)]

    def contains(self, V):
        V = _as_matrix(V, self.n)
        return not self.reduce(V).any()

    def contains_code(self, other):
        return other.k == 0 or self.contains(other.gen)

    def to_json(self):
        return {"q": self.q, "n": self.n, "k": self.k, "generator": self.gen.astype(int).tolist()}


def canonicalize(q, rows, n=None):
    return LinearCode.from_rows(q, rows, n)


def dual(C):
    """Nullspace of the generator matrix, in RREF."""
    q, n, k = C.q, C.n, C.k
    F = C.F
    if k == 0:
        return LinearCode.full(q, n)
    free = [j for j in range(n) if j not in set(C.pivots)]
    if not free:
        return LinearCode.zero(q, n)
    H = np.zeros((len(free), n), dtype=np.uint8)
    H[np.arange(len(free)), free] = 1
    H[:, C.pivots] = F.neg_table[C.gen[:, free].T]
    return LinearCode.from_rows(q, H, n)


def code_sum(*codes):
    q, n = codes[0].q, codes[0].n
    for C in codes:
        if C.n != n or C.q != q:
            raise DomainError("codes of different length or field")
    return LinearCode.from_rows(q, np.vstack([C.gen for C in codes]), n)


def intersection(C1, C2):
    if C1.n != C2.n:
        raise DomainError("length mismatch")
    return dual(code_sum(dual(C1), dual(C2)))


def hull(C):
    return intersection(C, dual(C))


def star(F, A, B):
    """Coordinatewise product of two stacks of vectors."""
    return F.mul_table[np.asarray(A, dtype=np.uint8), np.asarray(B, dtype=np.uint8)]


def schur_product(C1, C2):
    if C1.n != C2.n:
        raise DomainError("length mismatch")
    q, n, F = C1.q, C1.n, C1.F
    if C1.k == 0 or C2.k == 0:
        return LinearCode.zero(q, n)
    basis = np.zeros((0, n), dtype=np.uint8)
    for i in range(C1.k):
        prods = F.mul_table[C1.gen[i][None, :], C2.gen[i:] if C1 is C2 else C2.gen]
        basis, _ = kernels.rref(np.vstack([basis, prods]), F)
        if len(basis) == n:
            break
    return LinearCode.from_rows(q, basis, n)


def support_and_degeneracy(C):
    supp = np.flatnonzero(C.gen.any(axis=0)) if C.k else np.zeros(0, dtype=np.int64)
    return [int(j) for j in supp], len(supp) < C.n


def puncture(C, keep):
    keep = list(keep)
    return LinearCode.from_rows(C.q, C.gen[:, keep], len(keep))


# distances

def _codewords(C, chunk=1 << 16):
    """Yield the codewords of C in chunks (includes zero)."""
    F, k = C.F, C.k
    total = C.q ** k
    for s in range(0, total, chunk):
        idx = np.arange(s, min(total, s + chunk), dtype=np.int64)
        W = np.zeros((len(idx), C.n), dtype=np.uint8)
        for j in range(k):
            coef = ((idx // C.q ** j) % C.q).astype(np.uint8)
            W = F.add_table[W, F.mul_table[coef[:, None], C.gen[j][None, :]]]
        yield W


def min_distance(C, budget=DEFAULT_ENUM_BUDGET):
    if C.k == 0:
        raise DomainError("the zero code has no minimum distance")
    enum_cost = C.q ** C.k
    subset_cost = 2 ** C.n
    if subset_cost < enum_cost and subset_cost <= ghw_budget():
        return ghw(C, 1)
    if enum_cost > budget:
        if subset_cost <= ghw_budget():
            return ghw(C, 1)
        raise BudgetError(f"q^k = {enum_cost} exceeds the enumeration budget {budget}")
    best = C.n
    for W in _codewords(C):
        wt = (W != 0).sum(axis=1)
        wt = wt[wt > 0]
        if wt.size:
            best = min(best, int(wt.min()))
    return best


def ghw_mds(n, k, r):
    if not 1 <= r <= k <= n:
        raise DomainError(f"need 1 <= r <= k <= n, got r={r}, k={k}, n={n}")
    return n - k + r


class _Oracle:
    """dim of the subcode supported on some s coordinates, via subset-rank search."""

    def __init__(self, C, impl=None):
        self.C = C
        self.F = C.F
        self.impl = impl
        H = dual(C)
        if H.k < C.k:
            self.mode, self.M = "H", H.gen
        else:
            self.mode, self.M = "G", C.gen

    def exists(self, s, r):
        """Is there a subcode of dim >= r supported inside some s coordinates?"""
        n, k = self.C.n, self.C.k
        if self.mode == "H":
            return kernels.exists_subset_rank_le(self.M, s, s - r, self.F, self.impl)
        return kernels.exists_subset_rank_le(self.M, n - s, k - r, self.F, self.impl)


def _check_budget(C, budget):
    budget = ghw_budget() if budget is None else budget
    if 2 ** C.n > budget:
        raise BudgetError(f"2^n = 2^{C.n} exceeds the GHW budget {budget}")


def ghw(C, r, budget=None, impl=None):
    if not 1 <= r <= C.k:
        raise DomainError(f"r={r} out of range 1..{C.k}")
    _check_budget(C, budget)
    O = _Oracle(C, impl)
    s = r
    while not O.exists(s, r):
        s += 1
    return s


def weight_hierarchy(C, budget=None, impl=None):
    """(d_1, ..., d_k); empty for the zero code."""
    if C.k == 0:
        return ()
    _check_budget(C, budget)
    O = _Oracle(C, impl)
    out = []
    s = 0
    for r in range(1, C.k + 1):
        s = max(s + 1, r)
        while not O.exists(s, r):
            s += 1
        out.append(s)
    return tuple(out)


def hierarchy_value(h, r):
    """d_r with d_0 = 0 and d_r = inf beyond the dimension."""
    if r <= 0:
        return 0
    return h[r - 1] if r <= len(h) else inf


def delta_metric(C, d1=None):
    if C.k == 0:
        raise DomainError("delta is undefined for the zero code")
    if d1 is None:
        d1 = min_distance(C)
    return Fraction(C.k + d1, C.n)


# subfield subcodes

def subfield_coordinates(q, qprime):
    """Table T[a] = coordinates (in GF(q') encodings) of a in the basis 1, xi, ..., xi^(t-1)."""
    F = field(q)
    K = field(qprime)
    if F.p != K.p or F.e % K.e:
        raise PreconditionError(f"GF({qprime}) is not a subfield of GF({q})")
    t = F.e // K.e
    emb = F.subfield_embedding(qprime)
    basis = [F.xi_pow(i) for i in range(t)]
    T = np.zeros((q, t), dtype=np.uint8)
    seen = np.zeros(q, dtype=bool)
    grid = np.indices((qprime,) * t).reshape(t, -1).T
    for c in grid:
        a = 0
        for ci, b in zip(c, basis):
            a = F.add(a, F.mul(int(emb[ci]), b))
        T[a] = c
        seen[a] = True
    if not seen.all():
        raise PreconditionError("power basis does not span the extension")
    return T, emb


def subfield_subcode(C, qprime):
    """C intersected with GF(q')^n, returned as a code over GF(q')."""
    if qprime == C.q:
        return C
    T, emb = subfield_coordinates(C.q, qprime)
    H = dual(C).gen
    t = T.shape[1]
    if len(H) == 0:
        return LinearCode.full(qprime, C.n)
    rows = np.vstack([T[H][:, :, i] for i in range(t)])
    return dual(LinearCode.from_rows(qprime, rows, C.n))


def lift(C, q):
    """Embed a code over a subfield into GF(q)."""
    if C.q == q:
        return C
    emb = field(q).subfield_embedding(C.q)
    return LinearCode.from_rows(q, emb[C.gen], C.n)
