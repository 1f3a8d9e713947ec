"""Weighted monomials: enumeration, denumerants and vanishing-ideal classes."""
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConsistencyError, DomainError
from .field import field
from .space import as_weights


@lru_cache(maxsize=4096)
def denumerant(d, w):
    """Number of alpha >= 0 with sum(w_i alpha_i) = d."""
    w = as_weights(w).w
    if d < 0:
        return 0
    ways = [1] + [0] * d
    for wi in w:
        for s in range(wi, d + 1):
            ways[s] += ways[s - wi]
    return ways[d]


def wdeg(alpha, w):
    return sum(a * x for a, x in zip(alpha, w))


def _enum(d, w):
    if len(w) == 1:
        return [(d // w[0],)] if d % w[0] == 0 else []
    out = []
    for a in range(d // w[0], -1, -1):
        for rest in _enum(d - a * w[0], w[1:]):
            out.append((a,) + rest)
    return out


@lru_cache(maxsize=1024)
def _enumerate_cached(d, w):
    if d < 0:
        return ()
    return tuple(_enum(d, w))


def enumerate_monomials(d, w):
    """All exponent vectors of weighted degree d, lexicographically descending."""
    return list(_enumerate_cached(d, as_weights(w).w))


def monomial_key(alpha, w):
    """Sort key for the degree-lex order with x_0 < ... < x_m."""
    return (wdeg(alpha, w),) + tuple(reversed(tuple(alpha)))


def monomial_compare(alpha, beta, w):
    ka, kb = monomial_key(alpha, w), monomial_key(beta, w)
    return (ka > kb) - (ka < kb)


def affine_reduce(alpha, q):
    """Reduce positive exponents into [1, q-1]; zeros stay zero."""
    return tuple(0 if a == 0 else (a - 1) % (q - 1) + 1 for a in alpha)


def equivalent_mod_ideal(alpha, beta, q, w):
    """x^alpha - x^beta vanishes on P(w)(F_q)?"""
    if len(alpha) != len(beta):
        raise DomainError("exponent vectors of different lengths")
    if wdeg(alpha, w) != wdeg(beta, w):
        return False
    for a, b in zip(alpha, beta):
        if (a == 0) != (b == 0) or (a - b) % (q - 1):
            return False
    return True


@dataclass
class MonomialSet:
    d: int
    w: tuple
    q: int
    flavor: str
    members: list

    def __len__(self):
        return len(self.members)

    def to_json(self):
        return [list(a) for a in self.members]


def full_monomials(d, w, q=None):
    w = as_weights(w).w
    return MonomialSet(d, w, q, "full", enumerate_monomials(d, w))


def reduced_monomials(d, w, q, points=None, check=True):
    """Class minima of the degree-d monomials modulo the vanishing ideal.

    With check=True the class count is compared with the rank of the
    evaluation matrix at `points` (canonical representatives by default).
    """
    w = as_weights(w).w
    best = {}
    for a in enumerate_monomials(d, w):
        k = affine_reduce(a, q)
        if k not in best or monomial_key(a, w) < monomial_key(best[k], w):
            best[k] = a
    members = sorted(best.values(), key=lambda a: monomial_key(a, w))
    if check and members:
        from .codes import matrix_rank
        from .space import canonical_points
        P = canonical_points(q, w) if points is None else points
        r = matrix_rank(field(q), evaluate_monomials(q, members, P))
        if r != len(members):
            raise ConsistencyError(
                f"reduced monomial count {len(members)} differs from evaluation rank {r}",
                classes=len(members), rank=r)
    return MonomialSet(d, w, q, "reduced", members)


def congruence_monomials(d, w0, wtail, q=None):
    """Affine exponents with sum w_i a_i <= d and congruent to d mod w0."""
    wt = as_weights(wtail).w
    if d < 0:
        return MonomialSet(d, (w0,) + wt, q, "affine-congruence", [])
    out = []
    for D in range(d, -1, -1):
        if (d - D) % w0 == 0:
            out.extend(enumerate_monomials(D, wt))
    out.sort(key=lambda a: monomial_key(a, wt))
    return MonomialSet(d, (w0,) + wt, q, "affine-congruence", out)


def plain_affine_monomials(d, wtail):
    """Affine exponents of weighted degree at most d (the plain WRM basis)."""
    return congruence_monomials(d, 1, wtail).members


def evaluate_monomials(q, exps, points, chunk=16):
    """Evaluation matrix: row i is x^{exps[i]} at every point, 0**0 = 1."""
    F = field(q)
    E = np.asarray(exps, dtype=np.int64)
    P = np.asarray(points)
    n = P.shape[0]
    if E.size == 0:
        return np.zeros((0, n), dtype=np.uint8)
    if E.ndim == 1:
        E = E[None, :]
    Z = (P == 0)
    Lz = np.where(Z, 0, F.log_table[P]).astype(np.int64)
    Er = np.where(E > 0, (E - 1) % (q - 1) + 1, 0)
    out = np.empty((len(E), n), dtype=np.uint8)
    Zi = Z.astype(np.int64)
    for s in range(0, len(E), chunk):
        e = Er[s:s + chunk]
        expo = (e @ Lz.T) % (q - 1)
        dead = ((e > 0).astype(np.int64) @ Zi.T) > 0
        vals = F.exp_table[expo]
        vals[dead] = 0
        out[s:s + chunk] = vals
    return out


# class-level enumeration used by the fast code builders

def _semigroup_rows(ws, nmax):
    """Boolean table T[mask, N]: N in the numerical semigroup of the masked weights."""
    k = len(ws)
    T = np.zeros((1 << k, nmax + 1), dtype=bool)
    for mask in range(1 << k):
        gens = [ws[j] for j in range(k) if mask >> j & 1]
        row = T[mask]
        row[0] = True
        for N in range(1, nmax + 1):
            for g in gens:
                if g <= N and row[N - g]:
                    row[N] = True
                    break
    return T


@lru_cache(maxsize=256)
def _semigroup_table(ws, cap):
    return _semigroup_rows(ws, cap)


def _table(ws, nmax):
    cap = 64
    while cap < nmax:
        cap *= 2
    return _semigroup_table(tuple(ws), cap)


@lru_cache(maxsize=64)
def _residue_grid(q, k):
    """All vectors with entries 0 or 1..q-1, with support masks and a flag array."""
    grid = np.indices((q,) * k).reshape(k, -1).T.astype(np.int64)
    mask = ((grid > 0) * (1 << np.arange(k))).sum(axis=1)
    return grid, mask


def projective_classes(d, w, q):
    """Affine-reduced exponent vectors of the ideal classes present in degree d.

    A reduced vector r (entries 0 or in [1, q-1]) is present when some
    alpha with the same support and alpha = r mod (q-1) has weighted degree
    d, i.e. (d - <w, r>)/(q-1) lies in the semigroup of the supported weights.
    Rows are returned in monomial order of the reduced vectors.
    """
    w = as_weights(w).w
    if d < 0:
        return np.zeros((0, len(w)), dtype=np.int64)
    grid, mask = _residue_grid(q, len(w))
    b = grid @ np.asarray(w, dtype=np.int64)
    rem = d - b
    ok = (rem >= 0) & (rem % (q - 1) == 0)
    N = np.where(ok, rem // (q - 1), 0)
    T = _table(w, int(N.max()) if N.size else 0)
    ok &= T[mask, N]
    return grid[ok]


@lru_cache(maxsize=256)
def _congruence_table(wt, w0, q, cap):
    """U[mask, N, rho]: some semigroup element s <= N has (q-1)s = rho mod w0."""
    T = _semigroup_table(wt, cap)
    k = len(wt)
    U = np.zeros((1 << k, cap + 1, w0), dtype=bool)
    for mask in range(1 << k):
        cur = np.zeros(w0, dtype=bool)
        for N in range(cap + 1):
            if T[mask, N]:
                cur[((q - 1) * N) % w0] = True
            U[mask, N] = cur
    return U


def congruence_classes(d, w0, wtail, q):
    """Affine-reduced exponents present in the congruence-restricted affine set."""
    wt = as_weights(wtail).w
    if d < 0:
        return np.zeros((0, len(wt)), dtype=np.int64)
    grid, mask = _residue_grid(q, len(wt))
    b = grid @ np.asarray(wt, dtype=np.int64)
    rem = d - b
    ok = rem >= 0
    N = np.where(ok, rem // (q - 1), 0)
    cap = 64
    nmax = int(N.max()) if N.size else 0
    while cap < nmax:
        cap *= 2
    U = _congruence_table(wt, w0, q, cap)
    rho = np.where(ok, rem % w0, 0)
    ok &= U[mask, N, rho]
    return grid[ok]


def plain_affine_classes(d, wtail, q):
    return congruence_classes(d, 1, wtail, q)
