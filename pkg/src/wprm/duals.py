"""Monomial descriptions of WPRM duals, bad monomials, PRM duals and hulls."""
from dataclasses import dataclass, field as dc_field
from math import gcd

import numpy as np

from .codes import LinearCode, dual, hull
from .construct import build_wprm, wprm_rows
from .errors import DomainError, PreconditionError
from .field import field, monomial_grid_sum
from .monomials import (affine_reduce, enumerate_monomials, evaluate_monomials,
                        projective_classes, reduced_monomials, wdeg)
from .space import as_weights, canonical_points, count_points, orbit_gcd, standard_points


@dataclass
class DstarResult:
    d: int
    dstar: int = None
    reason: str = ""
    cap: int = 0
    trace: list = dc_field(default_factory=list)

    @property
    def found(self):
        return self.dstar is not None

    def to_json(self):
        return {"d": self.d, "dstar": self.dstar, "reason": self.reason, "cap": self.cap}


def _full_degree(q, w, d):
    return len(projective_classes(d, w, q)) == count_points(q, len(w) - 1)


def validate_dstar(q, w, d, dstar):
    """(full, congruent) for the two defining conditions."""
    w = as_weights(w)
    full = _full_degree(q, w.w, dstar)
    if full:
        full = build_wprm(q, w.w, dstar).k == count_points(q, w.m)
    cong = (d + dstar) % (gcd(d, w.lcm) * (q - 1)) == 0
    return full, cong


def find_dstar(q, w, d, cap=None):
    w = as_weights(w)
    if d < 1:
        raise DomainError("need d >= 1")
    if cap is None:
        cap = 2 * (w.m + 1) * w.lcm * (q - 1)
    if d % gcd(q - 1, w.lcm):
        return DstarResult(d, None, "congruence obstruction: gcd(q-1, lcm(w)) does not divide d", cap)
    mod = gcd(d, w.lcm) * (q - 1)
    for ds in range(1, cap + 1):
        if (d + ds) % mod == 0 and _full_degree(q, w.w, ds):
            full, cong = validate_dstar(q, w.w, d, ds)
            if full and cong:
                return DstarResult(d, ds, "found", cap)
    return DstarResult(d, None, "cap exhausted", cap)


def _class_minima(q, w, d):
    M = reduced_monomials(d, w, q, check=False).members
    return M, {affine_reduce(a, q): a for a in M}


def bad_monomials(q, w, d, dstar):
    w = as_weights(w).w
    full, cong = validate_dstar(q, w, d, dstar)
    if not (full and cong):
        raise PreconditionError(f"d*={dstar} is not valid for d={d} (full={full}, congruence={cong})")
    Md, _ = _class_minima(q, w, d)
    Ms, _ = _class_minima(q, w, dstar)
    out = set()
    for a in Md:
        for b in Ms:
            c = tuple(x + y for x, y in zip(a, b))
            if all(x > 0 and x % (q - 1) == 0 for x in c):
                out.add(c)
    return sorted(out)


def orthogonality_sum(q, w, alpha, d, dstar, points=None):
    """Point sum of x^alpha, also obtained as the affine grid sum over (q-1)."""
    w = as_weights(w)
    F = field(q)
    if wdeg(alpha, w.w) != d + dstar:
        raise PreconditionError("alpha must have degree d + d*")
    if (d + dstar) % (gcd(d, w.lcm) * (q - 1)):
        raise PreconditionError("d + d* is not divisible by gcd(d, lcm(w))(q-1)")
    P = canonical_points(q, w.w) if points is None else points
    direct = F.sum(evaluate_monomials(q, [alpha], P)[0])
    grid = monomial_grid_sum(F, alpha)
    via_grid = F.div(grid, (q - 1) % F.p) if (q - 1) % F.p else None
    return direct, via_grid


def dual_monomial_description(q, w, d, dstar=None, candidates=None):
    w = as_weights(w).w
    F = field(q)
    if dstar is None:
        res = find_dstar(q, w, d)
        if not res.found:
            raise PreconditionError(f"no valid d* for d={d}: {res.reason}")
        dstar = res.dstar
    P = canonical_points(q, w)
    n = len(P)
    Md, _ = _class_minima(q, w, d)
    Ms, keys = _class_minima(q, w, dstar)
    B = bad_monomials(q, w, d, dstar)
    excluded = set()
    for c in B:
        for a in Md:
            if all(x <= y for x, y in zip(a, c)):
                r = tuple(y - x for x, y in zip(a, c))
                excluded.add(keys[affine_reduce(r, q)])
    gens = [b for b in Ms if b not in excluded]
    primal = build_wprm(q, w, d, points=P).code
    D = dual(primal)
    span = LinearCode.from_rows(q, evaluate_monomials(q, gens, P), n) if gens else LinearCode.zero(q, n)
    if not D.contains_code(span):
        raise AssertionError("monomial subspan is not orthogonal to the code")
    rep = {"q": q, "w": list(w), "d": d, "dstar": dstar, "B": [list(c) for c in B],
           "k": primal.k, "dual_dim": D.k, "span_dim": span.k,
           "excluded": sorted(list(e) for e in excluded)}
    if len(B) == 1:
        c = B[0]
        rep["divides_all"] = all(all(x <= y for x, y in zip(a, c)) for a in Md)
        rep["excluded_size_ok"] = len(excluded) == primal.k
    rep["complete"] = span == D
    resid = span.reduce(D.gen)
    R = LinearCode.from_rows(q, resid, n)
    rep["residual_dim"] = R.k
    rep["residual"] = R.gen.astype(int).tolist()
    if candidates:
        rep["candidates"] = []
        for terms in candidates:
            v = np.zeros(n, dtype=np.uint8)
            for coef, alpha in terms:
                ev = evaluate_monomials(q, [alpha], P)[0]
                v = F.add_table[v, F.mul_table[coef % q if F.e == 1 else coef, ev]]
            rep["candidates"].append({"in_dual": D.contains(v), "in_span": span.contains(v)})
    rep["span"] = span
    rep["dual"] = D
    return rep


def extra_binomial(q):
    """x0^116 x1^4 x2^4 - x1^28 x2^20 as (coef, exponent) terms."""
    F = field(q)
    return [(1, (116, 4, 4)), (F.neg(1), (0, 28, 20))]


# PRM duals

def prm_code(q, m, d, points):
    return LinearCode.from_rows(q, wprm_rows(q, (1,) * (m + 1), d, points), len(points))


def scaled_points(q, w, P, shifts):
    """Per-point orbit shifts lambda_Q^{s_Q} . Q of a representative set."""
    F = field(q)
    w = as_weights(w).w
    P = np.asarray(P)
    nz = P != 0
    g = np.array([orbit_gcd(tuple(p), w) for p in P], dtype=np.int64)
    e = np.asarray(w, dtype=np.int64)[None, :] // g[:, None]
    L = np.where(nz, F.log_table[P], 0)
    s = np.asarray(shifts, dtype=np.int64)[:, None]
    return np.where(nz, F.exp_table[(L + s * e) % (q - 1)], 0).astype(np.uint8)


def prm_dual_structure(q, m, d, points=None):
    if m < 2 or not 1 <= d <= m * (q - 1):
        raise DomainError(f"need m >= 2 and 1 <= d <= m(q-1), got m={m}, d={d}")
    P = canonical_points(q, (1,) * (m + 1)) if points is None else points
    n = len(P)
    dp = m * (q - 1) - d
    C = prm_code(q, m, d, P)
    target = prm_code(q, m, dp, P)
    branch = "plain"
    if d % (q - 1) == 0:
        branch = "plus-ones"
        target = LinearCode.from_rows(q, np.vstack([target.gen, np.ones((1, n), dtype=np.uint8)]), n)
    return {"q": q, "m": m, "d": d, "dperp": dp, "branch": branch, "equal": dual(C) == target}


# hull

def max_total_degree(d, w):
    M = enumerate_monomials(d, w)
    return max(sum(a) for a in M) if M else None


def hull_check(q, w, d):
    w = as_weights(w).w
    m = len(w) - 1
    bad = [i for i in range(m) if gcd(w[i], q - 1) != 1]
    if bad:
        raise PreconditionError(f"gcd(w_{bad[0]}, q-1) = gcd({w[bad[0]]}, {q - 1}) != 1")
    D = max_total_degree(d, w)
    if D is None or not 2 * D < q - 1:
        return {"applicable": False, "D": D, "reason": "2D < q-1 fails"}
    P = standard_points(q, w)
    C = build_wprm(q, w, d, points=P).code
    H = hull(C)
    pred = C.k - 1 if d % w[m] == 0 else C.k
    Dl = dual(C)
    outside = [a for a in enumerate_monomials(d, w)
               if not Dl.contains(evaluate_monomials(q, [a], P))]
    expect = [tuple([0] * m + [d // w[m]])] if d % w[m] == 0 else []
    return {"applicable": True, "q": q, "w": list(w), "d": d, "D": D, "k": C.k,
            "predicted": pred, "hull_dim": H.k, "agree": pred == H.k,
            "outside": [list(a) for a in outside], "unique_ok": outside == expect}
