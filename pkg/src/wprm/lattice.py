"""Lattice points of weighted simplices, sumsets and integer decomposition checks."""
from dataclasses import dataclass

import numpy as np

from .codes import LinearCode, rank_certificate, schur_product
from .construct import build_wprm
from .errors import DomainError, PreconditionError
from .field import field
from .monomials import denumerant, enumerate_monomials, evaluate_monomials, monomial_key
from .space import as_weights, canonical_points


@dataclass
class SimplexLatticeSet:
    d: int
    w: tuple
    points: frozenset

    def __len__(self):
        return len(self.points)


def simplex_points(d, w):
    w = as_weights(w).w
    return SimplexLatticeSet(d, w, frozenset(enumerate_monomials(d, w)))


def _sorted(S, w):
    return sorted(S, key=lambda a: monomial_key(a, w))


def sumset(A, B):
    if A.w != B.w:
        raise DomainError("sumset of simplices with different weights")
    pts = frozenset(tuple(x + y for x, y in zip(a, b)) for a in A.points for b in B.points)
    return SimplexLatticeSet(A.d + B.d, A.w, pts)


def idp_pair_check(d1, d2, w):
    w = as_weights(w).w
    if d1 < 0 or d2 < 0:
        raise DomainError("degrees must be nonnegative")
    S = sumset(simplex_points(d1, w), simplex_points(d2, w))
    missing = set(enumerate_monomials(d1 + d2, w)) - S.points
    return {"w": list(w), "d1": d1, "d2": d2, "holds": not missing,
            "witnesses": [list(a) for a in _sorted(missing, w)]}


def idp_check(delta, w, ell_max=None):
    """Integer decomposition of P_delta for dilations 2..ell_max."""
    W = as_weights(w)
    if delta % W.lcm:
        raise PreconditionError(f"P_{delta} is not integral: lcm(w) = {W.lcm} does not divide {delta}")
    if ell_max is None:
        ell_max = W.m - 1
    base = simplex_points(delta, W.w)
    S = base
    for ell in range(2, ell_max + 1):
        S = sumset(S, base)
        missing = set(enumerate_monomials(ell * delta, W.w)) - S.points
        if missing:
            return {"holds": False, "ell": ell, "ell_max": ell_max,
                    "witnesses": [list(a) for a in _sorted(missing, W.w)]}
    return {"holds": True, "ell": None, "ell_max": ell_max, "witnesses": []}


def schur_closure_predicate(w, d1, d2, idp_verified=False):
    """'guaranteed' when the closure result applies, else 'unknown'."""
    W = as_weights(w)
    s = len(set(W.w))
    step = max(1, s - 2) * W.lcm
    if d1 % step == 0 and d2 % step == 0:
        return "guaranteed"
    if idp_verified and d1 % W.lcm == 0 and d2 % W.lcm == 0:
        return "guaranteed"
    return "unknown"


def schur_check(q, w, d1, d2, seed=0, direct=None):
    """Compare WPRM_{d1} * WPRM_{d2} with WPRM_{d1+d2} by rank.

    The product is spanned by evaluations of the sumset monomials, so only
    ranks of monomial evaluation matrices are needed. With direct=True (the
    default for short codes) the generic Schur product is cross-checked.
    """
    w = as_weights(w).w
    F = field(q)
    P = canonical_points(q, w)
    n = len(P)
    if direct is None:
        direct = n <= 2000
    S = sumset(simplex_points(d1, w), simplex_points(d2, w))
    full = enumerate_monomials(d1 + d2, w)
    prod_rows = evaluate_monomials(q, _sorted(S.points, w), P)
    full_rows = evaluate_monomials(q, full, P)
    r_prod, how_p = rank_certificate(F, prod_rows, seed)
    r_full, how_f = rank_certificate(F, full_rows, seed)
    missing = _sorted(set(full) - S.points, w)
    rep = {"q": q, "w": list(w), "d1": d1, "d2": d2, "n": n,
           "product_dim": r_prod, "full_dim": r_full, "codim": r_full - r_prod,
           "equal": r_full == r_prod, "witnesses": [list(a) for a in missing],
           "rank_method": [how_p, how_f]}
    if missing and r_full > r_prod:
        ext = np.vstack([prod_rows, evaluate_monomials(q, missing, P)])
        rep["witnesses_complete"] = rank_certificate(F, ext, seed)[0] == r_full
    if direct:
        A = build_wprm(q, w, d1, points=P).code
        B = A if d1 == d2 else build_wprm(q, w, d2, points=P).code
        C = schur_product(A, B)
        rep["direct_dim"] = C.k
        rep["direct_agrees"] = C == LinearCode.from_rows(q, prod_rows, n) and C.k == r_prod
    return rep


def den_check(d, w):
    return len(simplex_points(d, w)) == denumerant(d, as_weights(w).w)
