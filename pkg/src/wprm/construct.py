"""WPRM, WRM and WPRS codes, weight reductions and the recursive decomposition."""
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm

import numpy as np

from .codes import (LinearCode, code_sum, dual, min_distance, puncture, star,
                    subfield_subcode, support_and_degeneracy, weight_hierarchy)
from .errors import DomainError, LambdaFieldError, PreconditionError, StructureError
from .field import field
from .monomials import (congruence_classes, denumerant, enumerate_monomials,
                        evaluate_monomials, projective_classes)
from .space import (RadicalScalar, _affine_grid, as_weights, canonical_points, count_points,
                    delorme_reduce, enumerate_points, orbit_gcd, standard_points,
                    structured_representatives)


@dataclass
class WprmCode:
    q: int
    w: tuple
    d: int
    layout: str
    points: np.ndarray
    code: LinearCode

    @property
    def n(self):
        return self.code.n

    @property
    def k(self):
        return self.code.k

    @property
    def nondegenerate(self):
        return is_nondegenerate(self.w, self.d)

    def to_json(self):
        out = self.code.to_json()
        out.update({"w": list(self.w), "d": self.d, "layout": self.layout,
                    "nondegenerate": self.nondegenerate})
        return out


def _points(q, w, layout):
    if layout == "canonical":
        return canonical_points(q, w)
    if layout == "standard":
        return standard_points(q, w)
    if layout == "structured":
        return structured_representatives(q, w).points
    raise DomainError(f"unknown layout {layout!r}")


def wprm_rows(q, w, d, points):
    """Evaluation rows of one monomial per ideal class of degree d."""
    w = as_weights(w).w
    n = len(points)
    if d < 0:
        return np.zeros((0, n), dtype=np.uint8)
    if denumerant(d, w) <= q ** len(w):
        seen = {}
        for a in enumerate_monomials(d, w):
            key = tuple(0 if x == 0 else (x - 1) % (q - 1) + 1 for x in a)
            seen.setdefault(key, a)
        exps = list(seen.values())
    else:
        exps = projective_classes(d, w, q)
    if len(exps) == 0:
        return np.zeros((0, n), dtype=np.uint8)
    return evaluate_monomials(q, exps, points)


def build_wprm(q, w, d, layout="canonical", points=None):
    w = as_weights(w).w
    if points is None:
        points = _points(q, w, layout)
    else:
        layout = "custom"
    C = LinearCode.from_rows(q, wprm_rows(q, w, d, points), len(points))
    return WprmCode(q, w, d, layout, points, C)


def affine_points(q, m):
    return _affine_grid(q, m)


def build_wrm_congruence(q, w0, wtail, d, points=None):
    """Affine code of monomials with degree <= d and congruent to d mod w0."""
    wt = as_weights(wtail).w
    if points is None:
        points = affine_points(q, len(wt))
    n = len(points)
    if d < 0:
        return LinearCode.zero(q, n)
    exps = congruence_classes(d, w0, wt, q)
    return LinearCode.from_rows(q, evaluate_monomials(q, exps, points), n)


def build_wrm(q, wtail, d, points=None):
    return build_wrm_congruence(q, 1, wtail, d, points)


def is_nondegenerate(w, d):
    return d % as_weights(w).lcm == 0


def zero_columns_predicted(q, w, d, points):
    """Indices of coordinate points [0:..:1:..:0] with w_i not dividing d."""
    w = as_weights(w).w
    P = np.asarray(points)
    nz = P != 0
    out = []
    for j in np.flatnonzero(nz.sum(axis=1) == 1):
        i = int(np.flatnonzero(nz[j])[0])
        if d % w[i]:
            out.append(int(j))
    return out


def zero_columns_exact(q, w, d, points):
    """Indices of points Q with d outside the semigroup of the weights on supp(Q)."""
    w = as_weights(w).w
    P = np.asarray(points)
    nz = P != 0
    out = []
    for j in range(len(P)):
        ws = tuple(w[i] for i in np.flatnonzero(nz[j]))
        if d < 0 or denumerant(d, ws) == 0:
            out.append(j)
    return out


# weight reductions

def transform_gcd(q, w, d, layout="canonical"):
    w = as_weights(w)
    gam = w.gcd
    C = build_wprm(q, w.w, d, layout)
    if d % gam:
        return {"gamma": gam, "applies": True, "zero": True, "equal": C.k == 0, "k": C.k}
    red = tuple(x // gam for x in w.w)
    R = build_wprm(q, red, d // gam, points=C.points)
    return {"gamma": gam, "applies": True, "zero": False, "reduced": [list(red), d // gam],
            "equal": C.code == R.code, "k": C.k}


def transform_delorme(q, w, d, index=0, points=None):
    """Check WPRM_d(w) = ev(x_i^alpha_i) * WPRM_{d_0}(reduced) at phi(P)."""
    w = as_weights(w).w
    red = delorme_reduce(w, d, index)
    F = field(q)
    P = canonical_points(q, w) if points is None else np.asarray(points)
    C = build_wprm(q, w, d, points=P)
    e = [0] * len(w)
    e[index] = red.alpha0
    mult = evaluate_monomials(q, [e], P)[0]
    phiP = red.point_map(F, P)
    R = build_wprm(q, red.weights, red.d0, points=phiP)
    rows = star(F, mult[None, :], R.code.gen) if R.k else R.code.gen
    prod = LinearCode.from_rows(q, rows, len(P))
    return {"gamma": red.gamma, "alpha0": red.alpha0, "d0": red.d0,
            "weights": list(red.weights), "multiplier": mult.astype(int).tolist(),
            "k": C.k, "k_reduced": R.k, "equal": C.code == prod,
            "reduced_code": R}


def transform_delorme_nondivisible(q, w, d):
    w = as_weights(w).w
    wt = w[1:]
    gam = reduce(gcd, wt)
    if gam == 1 or d % gam == 0:
        return {"applies": False, "gamma": gam}
    if gcd(w[0], q - 1) != 1:
        raise PreconditionError(f"need gcd(w_0, q-1) = 1, got gcd({w[0]}, {q - 1})")
    red = delorme_reduce(w, d, 0)
    S = structured_representatives(q, w)
    C = build_wprm(q, w, d, points=S.points).code
    A = S.affine_points()
    nb = S.n - len(A)
    U1 = build_wrm_congruence(q, w[0], wt, d - w[0], A)
    U2 = build_wrm_congruence(q, w[0], tuple(x // gam for x in wt), red.d0, A)
    pad = lambda U: LinearCode.from_rows(q, np.hstack([U.gen, np.zeros((U.k, nb), dtype=np.uint8)]), S.n)
    return {"applies": True, "gamma": gam, "alpha0": red.alpha0, "d0": red.d0, "k": C.k,
            "first_equal": C == pad(U1), "second_equal": C == pad(U2)}


# recursion

def lambda_vectors(q, d, base_gcd):
    """Residue and field parts of Lambda(i)_Q = lambda_Q^{(i-1)d}, i = 1..q-1.

    Returns (r, a) of shape (q-1, nb): the entry is in GF(q) iff r == 0.
    """
    F = field(q)
    g = np.asarray(base_gcd, dtype=np.int64)
    k = (np.arange(q - 1, dtype=np.int64) * d)[:, None]
    r = k % g[None, :]
    a = F.exp_table[(k // g[None, :]) % (q - 1)]
    return r, a


def _apply_lambda(F, r, a, V, what):
    """Rows Lambda(i) * v for every row v of V; returns (q-1, k, nb)."""
    bad = (r[:, None, :] != 0) & (V[None, :, :] != 0)
    if bad.any():
        i, j, c = map(int, np.argwhere(bad)[0])
        raise LambdaFieldError(
            f"{what}: Lambda({i + 1}) entry at base point {c} is outside the base field "
            f"but multiplies a nonzero coordinate")
    out = F.mul_table[a[:, None, :], V[None, :, :]]
    out[np.broadcast_to(r[:, None, :] != 0, out.shape)] = 0
    return out


@dataclass
class Decomposition:
    q: int
    w: tuple
    d: int
    dims: dict
    equal: bool
    routes_agree: bool
    additive: bool
    diagnostics: dict = dc_field(default_factory=dict)

    @property
    def ok(self):
        return self.equal and self.routes_agree and self.additive

    def to_json(self):
        return {"q": self.q, "w": list(self.w), "d": self.d, "dims": self.dims,
                "equal": self.equal, "routes_agree": self.routes_agree,
                "additive": self.additive, "diagnostics": self.diagnostics}


def _setup(q, w, d):
    w = as_weights(w).w
    if gcd(w[0], q - 1) != 1:
        raise PreconditionError(f"recursion needs gcd(w_0, q-1) = 1, got gcd({w[0]}, {q - 1}) = {gcd(w[0], q - 1)}")
    S = structured_representatives(q, w)
    A = S.affine_points()
    base = S.points[S.blocks["infinity"][0]:, 1:]
    return w, S, A, base


def recursive_decomposition(q, w, d):
    F = field(q)
    w, S, A, base = _setup(q, w, d)
    nb, qm = len(base), len(A)
    U = build_wrm_congruence(q, w[0], w[1:], d - w[0], A)
    Vrows = wprm_rows(q, w[1:], d, base)
    V = LinearCode.from_rows(q, Vrows, nb)
    r, a = lambda_vectors(q, d, S.base_gcd)
    out_of_field = int((r != 0).sum())

    def lift(Vm):
        L = _apply_lambda(F, r, a, Vm, "primal")
        origin = Vm[:, :1] if d == 0 else np.zeros((len(Vm), 1), dtype=np.uint8)
        return np.hstack([np.concatenate(list(L), axis=1), origin, Vm])

    rows = [np.hstack([U.gen, np.zeros((U.k, nb), dtype=np.uint8)])]
    if V.k:
        rows.append(lift(V.gen))
    assembled = LinearCode.from_rows(q, np.vstack(rows), S.n)
    direct = build_wprm(q, w, d, points=S.points).code

    # second route: tail monomials evaluated at the shifted representatives
    agree = True
    if len(Vrows):
        exps = projective_classes(d, w[1:], q) if d >= 0 else np.zeros((0, len(w) - 1))
        exps = np.hstack([np.zeros((len(exps), 1), dtype=np.int64), exps])
        agree = np.array_equal(evaluate_monomials(q, exps, S.points),
                               lift(evaluate_monomials(q, exps[:, 1:], base)))
    dims = {"n": S.n, "k": direct.k, "wrm": U.k, "tail": V.k}
    return Decomposition(q, w, d, dims, assembled == direct, agree, direct.k == U.k + V.k,
                         {"lambda_out_of_field": out_of_field, "lambda_used_out_of_field": 0})


def dual_recursive(q, w, d):
    """Assemble {(u^t, v^t - u^t_Lambda)} and compare with the nullspace dual."""
    F = field(q)
    w, S, A, base = _setup(q, w, d)
    nb, qm = len(base), len(A)
    U = build_wrm_congruence(q, w[0], w[1:], d - w[0], A)
    V = LinearCode.from_rows(q, wprm_rows(q, w[1:], d, base), nb)
    Ud, Vd = dual(U), dual(V)
    r, a = lambda_vectors(q, d, S.base_gcd)

    # entries outside GF(q) sit where every tail codeword vanishes, so e_Q lies in
    # the tail dual and the entry never constrains the assembled set
    free = ~V.gen.any(axis=0) if V.k else np.ones(nb, dtype=bool)
    need = (r != 0) & ~free[None, :]
    if need.any():
        i, c = map(int, np.argwhere(need)[0])
        raise LambdaFieldError(f"dual: Lambda({i + 1}) entry at base point {c} is outside the base field")
    absorbed = int(((r != 0) & free[None, :]).sum())
    blocks = Ud.gen[:, :qm - 1].reshape(Ud.k, q - 1, nb).transpose(1, 0, 2)
    L = F.mul_table[a[:, None, :], blocks]
    L[np.broadcast_to(r[:, None, :] != 0, L.shape)] = 0
    uL = np.zeros((Ud.k, nb), dtype=np.uint8)
    for i in range(q - 1):
        uL = F.add_table[uL, L[i]]
    if d == 0:
        uL[:, 0] = F.add_table[uL[:, 0], Ud.gen[:, qm - 1]]
    rows = [np.hstack([Ud.gen, F.neg_table[uL]]),
            np.hstack([np.zeros((Vd.k, qm), dtype=np.uint8), Vd.gen])]
    assembled = LinearCode.from_rows(q, np.vstack(rows), S.n)
    primal = build_wprm(q, w, d, points=S.points).code
    target = dual(primal)
    orth = True
    if primal.k and assembled.k:
        from .codes import field_matmul
        orth = not field_matmul(F, primal.gen, assembled.gen.T).any()
    dims = {"n": S.n, "k_dual": target.k, "wrm_dual": Ud.k, "tail_dual": Vd.k}
    return Decomposition(q, w, d, dims, assembled == target, orth,
                         target.k == Ud.k + Vd.k,
                         {"lambda_absorbed": absorbed, "orthogonal": orth})


def ssc_degrees(q, qprime, w, count):
    step = (q - 1) * as_weights(w).lcm
    if step % (qprime - 1):
        raise PreconditionError("(q-1) lcm(w) must be divisible by q'-1")
    step //= qprime - 1
    return [l * step for l in range(1, count + 1)]


def ssc_recursive(q, qprime, w, d):
    """Subfield-subcode version of the recursion, with dimension additivity."""
    w, S, A, base = _setup(q, w, d)
    F = field(q)
    L = as_weights(w).lcm
    if ((q - 1) * L) % (qprime - 1) or d % ((q - 1) * L // (qprime - 1)) or d <= 0:
        raise PreconditionError(f"d={d} is not a positive multiple of (q-1)lcm(w)/(q'-1)")
    r, a = lambda_vectors(q, d, S.base_gcd)
    in_sub = bool((r == 0).all()) and all(F.is_in_subfield(int(x), qprime) for x in np.unique(a))
    nb = len(base)
    U = build_wrm_congruence(q, w[0], w[1:], d - w[0], A)
    V = LinearCode.from_rows(q, wprm_rows(q, w[1:], d, base), nb)
    C = build_wprm(q, w, d, points=S.points).code
    Us, Vs, Cs = subfield_subcode(U, qprime), subfield_subcode(V, qprime), subfield_subcode(C, qprime)
    rows = [np.hstack([Us.gen, np.zeros((Us.k, nb), dtype=np.uint8)])]
    if Vs.k:
        emb = F.subfield_embedding(qprime)
        Vq = emb[Vs.gen]
        Lq = _apply_lambda(F, r, a, Vq, "subfield")
        lifted = np.hstack([np.concatenate(list(Lq), axis=1),
                            Vq[:, :1] if d == 0 else np.zeros((Vs.k, 1), dtype=np.uint8), Vq])
        back = np.zeros(q, dtype=np.uint8)
        back[emb] = np.arange(qprime, dtype=np.uint8)
        if not np.isin(lifted, emb).all():
            raise LambdaFieldError("lifted subfield vector left the subfield")
        rows.append(back[lifted])
    assembled = LinearCode.from_rows(qprime, np.vstack(rows), S.n)
    return {"q": q, "qprime": qprime, "w": list(w), "d": d, "lambda_in_subfield": in_sub,
            "dims": {"k": Cs.k, "wrm": Us.k, "tail": Vs.k},
            "equal": assembled == Cs, "additive": Cs.k == Us.k + Vs.k}


def representative_covariance(q, w, d, shifts=None):
    """Shift every point by lambda_Q^{s_Q} and compare evaluations row by row."""
    F = field(q)
    w = as_weights(w).w
    P = canonical_points(q, w)
    n = len(P)
    s = np.ones(n, dtype=np.int64) if shifts is None else np.asarray(shifts, dtype=np.int64)
    nz = P != 0
    g = np.array([orbit_gcd(tuple(p), w) for p in P], dtype=np.int64)
    e = np.asarray(w, dtype=np.int64)[None, :] // g[:, None]
    L = np.where(nz, F.log_table[P], 0)
    P2 = np.where(nz, F.exp_table[(L + s[:, None] * e) % (q - 1)], 0).astype(np.uint8)
    E1 = evaluate_monomials(q, enumerate_monomials(d, w), P) if d >= 0 else np.zeros((0, n), np.uint8)
    E2 = evaluate_monomials(q, enumerate_monomials(d, w), P2) if d >= 0 else np.zeros((0, n), np.uint8)
    diag = [RadicalScalar.lam_power(q, int(g[j]), int(s[j]) * d) for j in range(n)]
    ok = True
    for j in range(n):
        col = E1[:, j]
        if col.any():
            c = diag[j].value()
            ok &= np.array_equal(F.mul_table[c, col], E2[:, j])
        else:
            ok &= not E2[:, j].any()
    return {"equal": bool(ok), "diagonal": [x.to_json() for x in diag],
            "points": P2.astype(int).tolist()}


# WPRS

@dataclass
class WprsParams:
    q: int
    w0: int
    w1: int
    d: int
    delta: int
    rho: int
    eps: int
    case: str
    predicted_d1: int

    def to_json(self):
        return dict(self.__dict__)


def wprs_params(q, w0, w1, d):
    if gcd(w0, w1) != 1:
        raise PreconditionError(f"weights ({w0}, {w1}) are not coprime")
    if d < 0:
        raise DomainError("degree must be nonnegative")
    delta = denumerant(d, (w0, w1)) - 1
    rho = d % (w0 * w1)
    a, b = d % w0 == 0, d % w1 == 0
    case = "both-divide" if a and b else ("one-divides" if a or b else "neither-divides")
    eps = denumerant(rho, (w0, w1)) if case == "neither-divides" else 0
    pred = max(q - (d - 1) // (w0 * w1) - eps, 1)
    return WprsParams(q, w0, w1, d, delta, rho, eps, case, pred)


def rs_code(q, delta, xs, n=None):
    """Evaluate 1, x, ..., x^delta at the given field elements."""
    xs = np.asarray(xs, dtype=np.uint8)
    if delta < 0:
        return LinearCode.zero(q, len(xs))
    F = field(q)
    rows = [F.pow_array(xs, j) for j in range(min(delta, q - 1) + 1)]
    return LinearCode.from_rows(q, np.array(rows), len(xs))


def prs_code(q, delta, points):
    """Evaluate all degree-delta monomials of P^1 at the given representatives."""
    if delta < 0:
        return LinearCode.zero(q, len(points))
    return LinearCode.from_rows(q, wprm_rows(q, (1, 1), delta, points), len(points))


def _psi(F, P, w0, w1):
    out = np.array(P, dtype=np.uint8, copy=True)
    out[:, 0] = F.pow_array(P[:, 0], w1)
    out[:, 1] = F.pow_array(P[:, 1], w0)
    return out


def wprs_check(q, w0, w1, d):
    """Case fingerprints, distance and dual structure for WPRS_d(w0, w1)."""
    F = field(q)
    par = wprs_params(q, w0, w1, d)
    P = canonical_points(q, (w0, w1))
    C = build_wprm(q, (w0, w1), d, points=P).code
    D = dual(C)
    n = len(P)
    supp, _ = support_and_degeneracy(C)
    zeros = [j for j in range(n) if j not in set(supp)]
    expect_zeros = {"both-divide": 0, "one-divides": 1, "neither-divides": 2}[par.case]
    rep = {"params": par.to_json(), "n": n, "k": C.k, "zero_coords": zeros}
    # the zero code (den(d) = 0) vanishes everywhere; the fingerprint is vacuous
    checks = {"zero_pattern": len(zeros) == expect_zeros or C.k == 0}
    d1 = min_distance(C) if C.k else None
    rep["d1"] = d1
    checks["distance"] = d1 == par.predicted_d1 if C.k else True
    nprime = n - len(zeros)
    kprime = min(par.delta + 1, nprime) if par.delta >= 0 else 0
    checks["dimension"] = C.k == kprime
    if par.case == "both-divide":
        psiP = _psi(F, P, w0, w1)
        keys = set()
        for p in psiP:
            i = int(np.flatnonzero(p)[0])
            inv = F.inv(int(p[i]))
            keys.add(tuple(F.mul(inv, int(x)) for x in p))
        if len(keys) != n:
            raise StructureError("psi does not map representatives to distinct points of P^1")
        checks["primal_equals_prs"] = C == prs_code(q, par.delta, psiP)
        checks["dual_equals_prs"] = D == prs_code(q, q - 1 - par.delta, psiP)
    else:
        keep = [j for j in range(n) if j not in set(zeros)]
        Cp = puncture(C, keep)
        Dp = puncture(D, keep)
        hC = weight_hierarchy(Cp) if Cp.k else ()
        hD = weight_hierarchy(Dp) if Dp.k else ()
        checks["primal_mds"] = all(hC[r - 1] == nprime - Cp.k + r for r in range(1, Cp.k + 1))
        checks["dual_dim"] = D.k == n - C.k
        unit = np.zeros((len(zeros), n), dtype=np.uint8)
        unit[np.arange(len(zeros)), zeros] = 1
        checks["dual_units"] = D.contains(unit) if zeros else True
        checks["dual_punctured_mds"] = (Dp.k == nprime - Cp.k and
                                        all(hD[r - 1] == nprime - Dp.k + r for r in range(1, Dp.k + 1)))
        # the RS index that fits the computed dual dimension
        rep["dual_rs_index"] = nprime - Cp.k - 1
        rep["stated_dual_rs_index"] = q - 1 - par.delta
    rep["checks"] = checks
    rep["ok"] = all(checks.values())
    return rep


# Delta comparison

def compare_delta(q, w, d):
    w = as_weights(w).w
    m = len(w) - 1
    wt = w[1:]
    if w[0] != 1 or w[1] != min(wt) or d % w[1] or not d < q:
        raise PreconditionError("need w_0 = 1, w_1 = min(w'), w_1 | d and d < q")
    A = build_wrm(q, wt, d)
    C = build_wprm(q, w, d).code
    dA, dC = min_distance(A), min_distance(C)
    DA, DC = Fraction(A.k + dA, A.n), Fraction(C.k + dC, C.n)
    den = denumerant(d, w)
    suff = den <= q ** (m - 1) * (d // w[1] - 1)
    pm1 = count_points(q, m - 1)
    exact = pm1 * den < q ** (m - 1) * (1 + pm1 * (d // w[1] - 1))
    return {"q": q, "w": list(w), "d": d, "den": den, "k_wrm": A.k, "k_wprm": C.k,
            "d1_wrm": dA, "d1_wprm": dC, "delta_wrm": str(DA), "delta_wprm": str(DC),
            "sufficient": suff, "criterion": exact, "comparison": DA < DC}
