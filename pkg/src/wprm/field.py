"""Finite fields GF(p^e) with q <= 256 backed by lookup tables.

Elements are plain integers in [0, q).  For e > 1 the integer packs the
coefficient vector of the power basis in base p, least significant
coefficient first.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import DomainError

MAX_Q = 256


def _is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def factor_prime_power(q):
    """Return (p, e) with q = p**e, or raise DomainError."""
    if q < 2:
        raise DomainError(f"q={q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise DomainError(f"q={q} is not a prime power")
    return p, e


# polynomials over GF(p) are coefficient lists, constant term first

def _poly_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _is_irreducible(f, p):
    deg = len(f) - 1
    for k in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=k):
            if not _poly_mod(f, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p, e):
    """Lexicographically smallest monic irreducible of degree e over GF(p).

    Coefficient vectors are compared from the constant term upward.
    """
    for low in product(range(p), repeat=e):
        f = list(low) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise DomainError(f"no irreducible of degree {e} over GF({p})")


class GF:
    """Table-driven finite field.  Use :func:`field` to get a cached instance."""

    def __init__(self, q):
        if q > MAX_Q:
            raise DomainError(f"q={q} exceeds the supported maximum {MAX_Q}")
        p, e = factor_prime_power(q)
        self.p, self.e, self.q = p, e, q
        self.modulus = smallest_irreducible(p, e)
        # digit matrix: row a = coefficient vector of element a
        digits = np.zeros((q, e), dtype=np.int64)
        for a in range(q):
            x = a
            for i in range(e):
                digits[a, i] = x % p
                x //= p
        self.digits = digits
        weights = p ** np.arange(e, dtype=np.int64)
        self.add_table = (((digits[:, None, :] + digits[None, :, :]) % p) @ weights).astype(np.uint8)
        self.sub_table = (((digits[:, None, :] - digits[None, :, :]) % p) @ weights).astype(np.uint8)
        self.neg_table = self.sub_table[0].copy()
        self.mul_table = self._build_mul()
        self.xi = self._find_primitive()
        self.exp_table, self.log_table = self._build_exp_log()
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            inv[a] = self.exp_table[(-int(self.log_table[a])) % (q - 1)]
        self.inv_table = inv
        for t in (self.add_table, self.sub_table, self.neg_table, self.mul_table, self.inv_table):
            t.flags.writeable = False

    def _poly_mul_enc(self, a, b):
        p, e = self.p, self.e
        da, db = self.digits[a], self.digits[b]
        prod = [0] * (2 * e - 1)
        for i in range(e):
            if da[i]:
                for j in range(e):
                    prod[i + j] = (prod[i + j] + int(da[i]) * int(db[j])) % p
        r = _poly_mod(prod, list(self.modulus), p)
        return sum(c * p ** i for i, c in enumerate(r))

    def _build_mul(self):
        q = self.q
        mt = np.zeros((q, q), dtype=np.uint8)
        if self.e == 1:
            a = np.arange(q)
            return (np.outer(a, a) % q).astype(np.uint8)
        for a in range(1, q):
            for b in range(a, q):
                mt[a, b] = mt[b, a] = self._poly_mul_enc(a, b)
        return mt

    def _order(self, a):
        k, x = 1, a
        while x != 1:
            x = int(self.mul_table[x, a])
            k += 1
        return k

    def _find_primitive(self):
        for a in range(1, self.q):
            if self._order(a) == self.q - 1:
                return a
        raise DomainError("no primitive element")  # unreachable for a field

    def _build_exp_log(self):
        q = self.q
        exp = np.zeros(2 * (q - 1), dtype=np.uint8)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = int(self.mul_table[x, self.xi])
        exp[q - 1:] = exp[: q - 1]
        return exp, log

    # scalar arithmetic

    def add(self, a, b):
        return int(self.add_table[a, b])

    def sub(self, a, b):
        return int(self.sub_table[a, b])

    def neg(self, a):
        return int(self.neg_table[a])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def inv(self, a):
        if a == 0:
            raise DomainError("inverse of zero")
        return int(self.inv_table[a])

    def div(self, a, b):
        if b == 0:
            raise DomainError("division by zero")
        return int(self.mul_table[a, self.inv_table[b]])

    def pow(self, a, k):
        """a**k with 0**0 = 1; negative k goes through the inverse."""
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise DomainError("negative power of zero")
            return 0
        return int(self.exp_table[(int(self.log_table[a]) * k) % (self.q - 1)])

    def xi_pow(self, k):
        return int(self.exp_table[k % (self.q - 1)])

    # vectorised helpers

    def pow_array(self, a, k):
        """Elementwise a**k for an integer array a and scalar k >= 0."""
        a = np.asarray(a)
        out = self.exp_table[(self.log_table[a] * k) % (self.q - 1)]
        if k == 0:
            return np.ones_like(out)
        return np.where(a == 0, 0, out).astype(np.uint8)

    def dot(self, u, v):
        """Inner product of two encoded vectors."""
        prods = self.mul_table[np.asarray(u), np.asarray(v)]
        acc = 0
        for x in prods.ravel():
            acc = self.add_table[acc, x]
        return int(acc)

    def sum(self, values):
        acc = 0
        for x in np.asarray(values).ravel():
            acc = self.add_table[acc, x]
        return int(acc)

    def elements(self):
        return range(self.q)

    def to_dict(self):
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus), "xi": self.xi}

    # subfields

    def is_in_subfield(self, a, qprime):
        return self.pow(a, qprime) == a

    def subfield_embedding(self, qprime):
        """Array mapping GF(qprime) encodings to their images in this field.

        The generator of the small modulus is sent to its smallest root here,
        which fixes a deterministic embedding.
        """
        sub = field(qprime)
        if sub.p != self.p or self.e % sub.e:
            raise DomainError(f"GF({qprime}) is not a subfield of GF({self.q})")
        if sub.e == 1:
            return np.arange(qprime, dtype=np.uint8)
        # find the smallest root of sub.modulus in this field
        for r in range(self.q):
            acc = 0
            for c in reversed(sub.modulus):
                acc = self.add(self.mul(acc, r), int(c) % self.p)
            if acc == 0:
                break
        emb = np.zeros(qprime, dtype=np.uint8)
        for a in range(qprime):
            acc = 0
            for i in reversed(range(sub.e)):
                acc = self.add(self.mul(acc, r), int(sub.digits[a, i]))
            emb[a] = acc
        return emb

    def __repr__(self):
        return f"GF({self.q})"

    def __reduce__(self):
        return (field, (self.q,))


@lru_cache(maxsize=None)
def field(q):
    """Cached field of order q."""
    return GF(q)


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(q) with operator support.  Mostly for interactive use."""

    F: GF
    enc: int

    def __post_init__(self):
        if not 0 <= self.enc < self.F.q:
            raise DomainError(f"encoding {self.enc} outside GF({self.F.q})")

    def _wrap(self, x):
        return FieldElement(self.F, x)

    def _other(self, b):
        return b.enc if isinstance(b, FieldElement) else int(b) % self.F.p

    def __add__(self, b):
        return self._wrap(self.F.add(self.enc, self._other(b)))

    def __sub__(self, b):
        return self._wrap(self.F.sub(self.enc, self._other(b)))

    def __mul__(self, b):
        return self._wrap(self.F.mul(self.enc, self._other(b)))

    def __truediv__(self, b):
        return self._wrap(self.F.div(self.enc, self._other(b)))

    def __neg__(self):
        return self._wrap(self.F.neg(self.enc))

    def __pow__(self, k):
        return self._wrap(self.F.pow(self.enc, k))

    def inv(self):
        return self._wrap(self.F.inv(self.enc))

    def __int__(self):
        return self.enc

    def __repr__(self):
        return f"{self.enc}@GF({self.F.q})"


def field_arithmetic(F, a, b=None, op="add", k=None):
    """Dispatch helper mirroring the operation table: add/sub/mul/div/neg/inv/pow."""
    if op == "add":
        return F.add(a, b)
    if op == "sub":
        return F.sub(a, b)
    if op == "mul":
        return F.mul(a, b)
    if op == "div":
        return F.div(a, b)
    if op == "neg":
        return F.neg(a)
    if op == "inv":
        return F.inv(a)
    if op == "pow":
        return F.pow(a, k)
    raise DomainError(f"unknown op {op!r}")


def primitive_element(F):
    return F.xi


def power_sum(F, gamma):
    """Sum of z**gamma over all z in GF(q), with 0**0 = 1."""
    if gamma < 0:
        raise DomainError("gamma must be nonnegative")
    if gamma > 0 and gamma % (F.q - 1) == 0:
        return F.neg(1)
    return 0


def monomial_grid_sum(F, exponents):
    """Sum of a monomial over the whole affine grid, factor by factor."""
    acc = 1
    for g in exponents:
        acc = F.mul(acc, power_sum(F, g))
    return acc
