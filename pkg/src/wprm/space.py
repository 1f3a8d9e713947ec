"""Weighted projective spaces over GF(q): weights, orbits and representatives.

Points are stored as rows of a uint8 array of field encodings.
"""
from dataclasses import dataclass, field as dc_field
from functools import lru_cache, reduce
from itertools import product
from math import gcd, lcm

import numpy as np

from .errors import DomainError, LambdaFieldError, PreconditionError, StructureError
from .field import field


@dataclass(frozen=True)
class WeightVector:
    w: tuple

    def __post_init__(self):
        w = tuple(int(x) for x in self.w)
        if not w or min(w) < 1:
            raise DomainError(f"weights must be positive integers, got {self.w}")
        object.__setattr__(self, "w", w)

    @property
    def m(self):
        return len(self.w) - 1

    @property
    def gcd(self):
        return reduce(gcd, self.w)

    @property
    def lcm(self):
        return reduce(lcm, self.w)

    @property
    def well_formed(self):
        if len(self.w) == 1:
            return self.w[0] == 1
        return all(reduce(gcd, self.w[:i] + self.w[i + 1:]) == 1 for i in range(len(self.w)))

    @property
    def tail(self):
        return WeightVector(self.w[1:])

    def suffix(self, a):
        return WeightVector(self.w[a:])

    def __iter__(self):
        return iter(self.w)

    def __len__(self):
        return len(self.w)

    def __getitem__(self, i):
        return self.w[i]


def as_weights(w):
    return w if isinstance(w, WeightVector) else WeightVector(tuple(w))


def count_points(q, m):
    if q < 2 or m < 0:
        raise DomainError("need q >= 2 and m >= 0")
    return (q ** (m + 1) - 1) // (q - 1)


def support(Q):
    return tuple(i for i, x in enumerate(Q) if x)


def orbit_gcd(Q, w):
    s = support(Q)
    if not s:
        raise DomainError("the zero vector is not a projective point")
    return reduce(gcd, (w[i] for i in s))


def orbit(F, Q, w):
    """The q-1 GF(q)-representatives lambda^i . Q, i = 0..q-2, of the point [Q]."""
    w = as_weights(w)
    Q = tuple(int(x) for x in Q)
    g = orbit_gcd(Q, w)
    out = []
    for i in range(F.q - 1):
        out.append(tuple(F.mul(x, F.xi_pow(i * w[j] // g)) if x else 0 for j, x in enumerate(Q)))
    return out


# canonical enumeration

def _affine_grid(q, k):
    """All of GF(q)^k in lexicographic order, shape (q**k, k)."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.uint8)
    g = np.indices((q,) * k, dtype=np.int64).reshape(k, -1).T
    return g.astype(np.uint8)


def _orbit_min_keys(F, V, w):
    """Lexicographic-minimum orbit key for each nonzero row of V."""
    q, k = F.q, V.shape[1]
    L = F.log_table[V]
    nz = V != 0
    mask = (nz * (1 << np.arange(k))).sum(axis=1)
    gtab = np.zeros(1 << k, dtype=np.int64)
    for s in range(1, 1 << k):
        gtab[s] = reduce(gcd, (w[j] for j in range(k) if s >> j & 1))
    g = gtab[mask]
    e = np.asarray(w, dtype=np.int64)[None, :] // np.maximum(g, 1)[:, None]
    place = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    best = None
    Lz = np.where(nz, L, 0)
    for i in range(q - 1):
        vals = np.where(nz, F.exp_table[(Lz + i * e) % (q - 1)], 0).astype(np.int64)
        key = vals @ place
        best = key if best is None else np.minimum(best, key)
    return best


def _decode_keys(keys, q, k):
    out = np.zeros((len(keys), k), dtype=np.uint8)
    r = np.array(keys, dtype=np.int64)
    for j in range(k - 1, -1, -1):
        out[:, j] = r % q
        r //= q
    return out


def orbit_partition(q, w):
    """(canonical keys, orbit sizes) from bucketing every nonzero vector."""
    F = field(q)
    w = as_weights(w).w
    V = _affine_grid(q, len(w))[1:]
    keys = _orbit_min_keys(F, V, w)
    return np.unique(keys, return_counts=True)


@lru_cache(maxsize=512)
def _canonical_points_cached(q, w):
    F = field(q)
    k = len(w)
    if k == 1:
        return np.ones((1, 1), dtype=np.uint8)
    if gcd(w[0], q - 1) == 1:
        # [{1} x A^m] u [{0} x P(w')], and both pieces are already lexmin
        tail = _canonical_points_cached(q, w[1:])
        top = np.hstack([np.zeros((len(tail), 1), dtype=np.uint8), tail])
        aff = _affine_grid(q, k - 1)
        bottom = np.hstack([np.ones((len(aff), 1), dtype=np.uint8), aff])
        return np.vstack([top, bottom])
    keys, _ = orbit_partition(q, w)
    return _decode_keys(keys, q, k)


def canonical_points(q, w, brute=False):
    """Lexicographically minimal representative of every point, sorted."""
    w = as_weights(w).w
    if brute:
        keys, counts = orbit_partition(q, w)
        return _decode_keys(keys, q, len(w))
    P = _canonical_points_cached(q, w)
    return P.copy()


def standard_points(q, w):
    """Representatives whose leftmost nonzero coordinate is 1."""
    w = as_weights(w).w
    bad = [i for i in range(len(w) - 1) if gcd(w[i], q - 1) != 1]
    if bad:
        raise PreconditionError(
            f"standard representatives need gcd(w_i, q-1) = 1 for i < m; fails at i={bad[0]} "
            f"(w_i={w[bad[0]]}, q-1={q - 1})")
    k = len(w)
    rows = []
    for lead in range(k):
        rest = _affine_grid(q, k - lead - 1)
        block = np.zeros((len(rest), k), dtype=np.uint8)
        block[:, lead] = 1
        block[:, lead + 1:] = rest
        rows.append(block)
    P = np.vstack(rows[::-1])
    order = np.lexsort(P.T[::-1])
    return P[order]


@dataclass
class RepresentativeSet:
    q: int
    w: tuple
    layout: str
    points: np.ndarray
    blocks: dict = dc_field(default=None)
    base_gcd: np.ndarray = dc_field(default=None)

    @property
    def n(self):
        return len(self.points)

    @property
    def m(self):
        return len(self.w) - 1

    def affine_points(self):
        """For structured layouts: the A^m part in block order, origin last."""
        if self.layout != "structured":
            raise PreconditionError("affine order only exists for structured layouts")
        qm = self.q ** self.m
        return self.points[:qm, 1:]

    def to_json(self):
        out = {"q": self.q, "w": list(self.w), "layout": self.layout,
               "points": self.points.astype(int).tolist()}
        if self.blocks is not None:
            out["blocks"] = self.blocks
        if self.base_gcd is not None:
            out["base_orbit_gcd"] = [int(x) for x in self.base_gcd]
        return out


def enumerate_points(q, w, layout="canonical"):
    w = as_weights(w).w
    if layout == "canonical":
        P = canonical_points(q, w)
    elif layout == "standard":
        P = standard_points(q, w)
    elif layout == "structured":
        return structured_representatives(q, w)
    else:
        raise DomainError(f"unknown layout {layout!r}")
    return RepresentativeSet(q, w, layout, P)


@lru_cache(maxsize=512)
def _structured_cached(q, w):
    F = field(q)
    m = len(w) - 1
    if m < 1:
        raise StructureError("structured layout needs at least two weights")
    if gcd(w[0], q - 1) != 1:
        raise StructureError(
            f"structured layout needs gcd(w_0, q-1) = 1, but gcd({w[0]}, {q - 1}) = {gcd(w[0], q - 1)}")
    tail = w[1:]
    base = canonical_points(q, tail)
    nb = len(base)
    nz = base != 0
    g = np.array([reduce(gcd, (tail[j] for j in range(m) if nz[r, j])) for r in range(nb)], dtype=np.int64)
    e = np.asarray(tail, dtype=np.int64)[None, :] // g[:, None]
    L = np.where(nz, F.log_table[base], 0)
    rows = []
    for i in range(1, q):
        shifted = np.where(nz, F.exp_table[(L + (i - 1) * e) % (q - 1)], 0).astype(np.uint8)
        rows.append(np.hstack([np.ones((nb, 1), dtype=np.uint8), shifted]))
    origin = np.zeros((1, m + 1), dtype=np.uint8)
    origin[0, 0] = 1
    rows.append(origin)
    rows.append(np.hstack([np.zeros((nb, 1), dtype=np.uint8), base]))
    P = np.vstack(rows)
    blocks = {
        "affine": [[(i - 1) * nb, i * nb] for i in range(1, q)],
        "origin": [(q - 1) * nb, (q - 1) * nb + 1],
        "infinity": [(q - 1) * nb + 1, (q - 1) * nb + 1 + nb],
    }
    return P, blocks, g


def structured_representatives(q, w):
    w = as_weights(w).w
    P, blocks, g = _structured_cached(q, w)
    return RepresentativeSet(q, w, "structured", P.copy(), blocks, g.copy())


# weight reductions

def gcd_reduce(w, d):
    """(w/gamma, d/gamma), or None when gamma does not divide d (zero space)."""
    w = as_weights(w)
    gam = w.gcd
    if d % gam:
        return None
    return tuple(x // gam for x in w.w), d // gam


@dataclass(frozen=True)
class DelormeReduction:
    index: int
    gamma: int
    alpha0: int
    d0: int
    weights: tuple

    def point_map(self, F, P):
        """phi: raise the distinguished coordinate to the power gamma."""
        P = np.array(P, dtype=np.uint8, copy=True)
        P[:, self.index] = F.pow_array(P[:, self.index], self.gamma)
        return P


def delorme_reduce(w, d, index=0):
    w = as_weights(w).w
    others = w[:index] + w[index + 1:]
    if not others:
        raise PreconditionError("Delorme reduction needs at least two weights")
    gam = reduce(gcd, others)
    if gcd(w[index], gam) != 1:
        raise PreconditionError(
            f"Delorme reduction needs gcd(w_{index}, gamma) = 1, got gcd({w[index]}, {gam}) = {gcd(w[index], gam)}")
    a0 = next(a for a in range(gam) if (d - a * w[index]) % gam == 0)
    d0 = (d - a0 * w[index]) // gam
    red = tuple(x if i == index else x // gam for i, x in enumerate(w))
    return DelormeReduction(index, gam, a0, d0, red)


# symbolic radicals

@dataclass(frozen=True)
class RadicalScalar:
    """lambda**r * a where lambda**g = xi; r in [0, g)."""

    q: int
    g: int
    r: int
    a: int

    def __post_init__(self):
        if not 0 <= self.r < self.g:
            raise DomainError("residue out of range")

    @classmethod
    def lam_power(cls, q, g, k):
        """lambda**k for a root lambda of x**g - xi."""
        F = field(q)
        return cls(q, g, k % g, F.xi_pow(k // g))

    @property
    def in_base_field(self):
        return self.r == 0 or self.a == 0

    def __mul__(self, other):
        F = field(self.q)
        if isinstance(other, RadicalScalar):
            if other.g != self.g or other.q != self.q:
                raise DomainError("radicals over different roots")
            s = self.r + other.r
            a = F.mul(F.mul(self.a, other.a), F.xi_pow(s // self.g))
            return RadicalScalar(self.q, self.g, s % self.g, a)
        return RadicalScalar(self.q, self.g, self.r, F.mul(self.a, int(other)))

    def value(self):
        """The field element, or LambdaFieldError if not in GF(q)."""
        if self.a == 0:
            return 0
        if self.r:
            raise LambdaFieldError(f"lambda^{self.r} * {self.a} (lambda^{self.g} = xi) is not in GF({self.q})")
        return self.a

    def to_json(self):
        return {"g": self.g, "r": self.r, "a": self.a}
