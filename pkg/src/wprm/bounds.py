"""Lower and upper bounds on generalized Hamming weights of WPRM codes."""
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import permutations, product
from math import ceil, gcd, inf

from .codes import LinearCode, hierarchy_value, weight_hierarchy
from .construct import build_wprm, build_wrm, build_wrm_congruence, wprs_params
from .errors import DomainError, PreconditionError
from .monomials import denumerant
from .space import as_weights, count_points

PROVIDERS = ("exact", "plain-wrm", "recursive", "footprint")


def _inf_json(x):
    return None if x == inf else x


@dataclass
class BoundInstance:
    q: int
    w: tuple
    d: int
    r: int
    dims: dict
    hierarchies: dict
    providers: dict
    Y: list
    table: dict
    value: float

    def to_json(self):
        return {
            "q": self.q, "w": list(self.w), "d": self.d, "r": self.r, "dims": self.dims,
            "hierarchies": {k: list(v) for k, v in self.hierarchies.items()},
            "providers": self.providers, "Y": [list(y) for y in self.Y],
            "B": [[a1, a2, _inf_json(v)] for (a1, a2), v in sorted(self.table.items())],
            "value": _inf_json(self.value),
        }


def e_threshold(q, w):
    w = as_weights(w).w
    return (q - 1) * max(w[0], min(w[1:]))


def footprint_min_distance(q, wtail, d):
    """min of prod(q - e_i) over reduced exponents e with sum w_i e_i <= d."""
    wt = as_weights(wtail).w
    if d < 0:
        return inf
    best = None
    for e in product(range(q), repeat=len(wt)):
        if sum(a * b for a, b in zip(e, wt)) <= d:
            v = 1
            for x in e:
                v *= q - x
            best = v if best is None else min(best, v)
    return best


def _mds_hierarchy(n, k):
    return tuple(n - k + r for r in range(1, k + 1))


def wprs_hierarchy(q, w0, w1, d):
    """Closed-form hierarchy: an MDS code padded with the vanishing coordinates."""
    g = gcd(w0, w1)
    if d % g:
        return ()
    w0, w1, d = w0 // g, w1 // g, d // g
    par = wprs_params(q, w0, w1, d)
    zeros = {"both-divide": 0, "one-divides": 1, "neither-divides": 2}[par.case]
    n = q + 1 - zeros
    k = min(par.delta + 1, n)
    return _mds_hierarchy(n, k)


@lru_cache(maxsize=4096)
def _components(q, w, d, provider):
    w0, wt = w[0], w[1:]
    A = build_wrm_congruence(q, w0, wt, d)
    U = build_wrm_congruence(q, w0, wt, d - w0)
    V = build_wprm(q, wt, d).code
    t = e_threshold(q, w)
    E = build_wrm(q, wt, d - t) if d > t else LinearCode.zero(q, q ** len(wt))
    dims = {"A": A.k, "U": U.k, "V": V.k, "E": E.k}
    prov = {"A": "exact", "U": "exact", "V": "exact", "E": "exact"}
    if provider == "footprint":
        f = lambda dd: () if dd < 0 else (footprint_min_distance(q, wt, dd),)
        hs = {"A": f(d) if A.k else (), "U": f(d - w0) if U.k else (),
              "E": f(d - t) if E.k else ()}
        hs = {k: v[:1] for k, v in hs.items()}
        hs["V"] = weight_hierarchy(V)[:1] if V.k else ()
        prov.update(A="footprint", U="footprint", E="footprint")
        return dims, hs, prov
    hs = {"A": weight_hierarchy(A), "U": weight_hierarchy(U), "E": weight_hierarchy(E)}
    if provider == "plain-wrm":
        hs["A"] = weight_hierarchy(build_wrm(q, wt, d))[:A.k]
        hs["U"] = weight_hierarchy(build_wrm(q, wt, d - w0))[:U.k] if d >= w0 else ()
        prov.update(A="plain-wrm", U="plain-wrm")
    if provider == "recursive":
        hs["V"] = recursive_hierarchy(q, wt, d)
        prov["V"] = "recursive"
    else:
        hs["V"] = weight_hierarchy(V)
    return dims, hs, prov


def recursive_hierarchy(q, w, d):
    """Lower bounds for the hierarchy of WPRM_d(w) by re-applying the bound down the chain."""
    w = as_weights(w).w
    if d < 0:
        return ()
    if len(w) == 1:
        return (1,) if d % w[0] == 0 else ()
    if len(w) == 2:
        return wprs_hierarchy(q, w[0], w[1], d)
    if gcd(w[0], q - 1) != 1 or d < 1:
        C = build_wprm(q, w, d).code
        return weight_hierarchy(C)
    k = build_wprm(q, w, d).k
    return tuple(lower_bound(q, w, d, r, "recursive").value for r in range(1, k + 1))


def feasible_set(r, dims):
    out = []
    for a1 in range(r + 1):
        for a2 in range(r + 1):
            if (r - dims["A"] <= a1 <= dims["E"] and r - dims["V"] <= a2 <= dims["U"]
                    and a1 + a2 <= r):
                out.append((a1, a2))
    return out


def _ceil_div(x, m):
    return inf if x == inf else ceil(x / m)


def b_value(q, r, a1, a2, hs):
    d = hierarchy_value
    left = max(d(hs["A"], r - a1), d(hs["U"], a2))
    right = max(_ceil_div(d(hs["E"], a1), q - 1), d(hs["V"], r - a2))
    return left + right


def lower_bound(q, w, d, r, provider="exact"):
    w = as_weights(w).w
    if provider not in PROVIDERS:
        raise DomainError(f"unknown provider {provider!r}")
    if len(w) < 2:
        raise PreconditionError("the bound needs at least two weights")
    if gcd(w[0], q - 1) != 1:
        raise PreconditionError(f"need gcd(w_0, q-1) = 1, got gcd({w[0]}, {q - 1}) = {gcd(w[0], q - 1)}")
    if d < 1:
        raise PreconditionError("the bound needs d >= 1")
    if provider == "footprint" and r != 1:
        raise PreconditionError("the footprint provider only covers r = 1")
    dims, hs, prov = _components(q, w, d, provider)
    k = dims["U"] + dims["V"]
    if not 1 <= r <= k:
        raise DomainError(f"r={r} out of range 1..{k}")
    Y = feasible_set(r, dims)
    table = {y: b_value(q, r, y[0], y[1], hs) for y in Y}
    value = min(table.values()) if table else inf
    return BoundInstance(q, w, d, r, dims, hs, prov, Y, table, value)


def lower_bound_hierarchy(q, w, d, provider="exact"):
    w = as_weights(w).w
    dims, _, _ = _components(q, w, d, provider)
    k = dims["U"] + dims["V"]
    return tuple(lower_bound(q, w, d, r, provider).value for r in range(1, k + 1))


def min_distance_bound(q, w, d):
    """Three-term minimum for d_1; terms of zero-dimensional codes are dropped."""
    w = as_weights(w).w
    if gcd(w[0], q - 1) != 1:
        raise PreconditionError(f"need gcd(w_0, q-1) = 1, got gcd({w[0]}, {q - 1})")
    dims, hs, _ = _components(q, w, d, "exact")
    d1 = lambda h: hierarchy_value(h, 1)
    terms = [d1(hs["U"]), d1(hs["E"]), d1(hs["A"]) + d1(hs["V"])]
    return min(terms)


def upper_bound_components(q, w, d, r):
    w = as_weights(w).w
    if gcd(w[0], q - 1) != 1:
        raise PreconditionError(f"need gcd(w_0, q-1) = 1, got gcd({w[0]}, {q - 1})")
    dims, hs, _ = _components(q, w, d, "exact")
    if not 1 <= r <= max(dims["U"], dims["V"]):
        raise DomainError(f"r={r} exceeds both component dimensions")
    return min(hierarchy_value(hs["U"], r), q * hierarchy_value(hs["V"], r))


def lowdeg_split(d, w, r):
    """(i, j) with r = sum_{a<i} den(d - w_a; w(a)) + j and 0 <= j < den(d - w_i; w(i))."""
    w = as_weights(w).w
    acc = 0
    for i in range(len(w)):
        c = denumerant(d - w[i], w[i:])
        if acc <= r < acc + c:
            return i, r - acc
        acc += c
    if r == acc:
        return len(w), 0
    raise DomainError(f"r={r} exceeds den(d; w) = {acc}")


def _affine_tail_hierarchy(q, wi, tail, dd):
    if dd < 0:
        return ()
    if not tail:
        return (1,) if dd % wi == 0 else ()
    return weight_hierarchy(build_wrm_congruence(q, wi, tail, dd))


def upper_bound_lowdeg(q, w, d, r):
    w = as_weights(w).w
    m = len(w) - 1
    if not 1 <= d <= min(w) * q:
        raise PreconditionError(f"need 1 <= d <= min(w) q = {min(w) * q}")
    if not 1 <= r <= denumerant(d, w):
        raise DomainError(f"r={r} out of range 1..{denumerant(d, w)}")
    i, j = lowdeg_split(d, w, r)
    if i == m + 1:
        return count_points(q, m)
    if gcd(w[i], q - 1) != 1:
        raise PreconditionError(f"gcd(w_{i}, q-1) = gcd({w[i]}, {q - 1}) != 1 at the decomposed index i={i}")
    pim1 = count_points(q, i - 1) if i >= 1 else 0
    h = _affine_tail_hierarchy(q, w[i], w[i + 1:], d - w[i])
    return q ** (m - i + 1) * pim1 + hierarchy_value(h, j)


def admissible_orderings(q, w):
    w = as_weights(w).w
    seen = []
    for p in permutations(w):
        if gcd(p[0], q - 1) == 1 and p not in seen:
            seen.append(p)
    return seen


def best_over_orderings(q, w, d, provider="exact"):
    w = as_weights(w).w
    orders = admissible_orderings(q, w)
    if not orders:
        raise PreconditionError(f"no ordering of {w} has a first weight coprime to q-1 = {q - 1}")
    traces = {p: lower_bound_hierarchy(q, p, d, provider) for p in orders}
    vals = list(traces.values())
    best = tuple(max(v[r] for v in vals) for r in range(len(vals[0])))
    return best, traces
