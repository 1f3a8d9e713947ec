from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from wprm.errors import DomainError, PreconditionError, StructureError
from wprm.field import field
from wprm.space import (RadicalScalar, WeightVector, canonical_points, count_points,
                        delorme_reduce, enumerate_points, gcd_reduce, orbit, orbit_partition,
                        standard_points, structured_representatives)


def _key(F, Q, w):
    return min(orbit(F, Q, w))


@pytest.mark.parametrize("q,m,n", [(3, 2, 13), (5, 2, 31), (4, 2, 21)])
def test_count_points(q, m, n):
    assert count_points(q, m) == n


def test_weight_vector():
    W = WeightVector((2, 4, 6))
    assert (W.gcd, W.lcm, W.m, W.well_formed) == (2, 12, 2, False)
    assert WeightVector((1, 2, 3)).well_formed
    assert W.tail.w == (4, 6) and W.suffix(2).w == (6,)
    with pytest.raises(DomainError):
        WeightVector((1, 0))


def test_orbit_of_axis_point():
    assert set(orbit(field(3), (1, 0), (2, 3))) == {(1, 0), (2, 0)}


def test_orbit_of_11_contains_1_minus1():
    # [1:1] = [1:-1] on P(2,3) over GF(3)
    O = set(orbit(field(3), (1, 1), (2, 3)))
    assert (1, 2) in O and len(O) == 2
    assert (2, 2) not in O


def test_orbit_of_01():
    assert set(orbit(field(3), (0, 1), (2, 3))) == {(0, 1), (0, 2)}


def test_orbit_zero_rejected():
    with pytest.raises(DomainError):
        orbit(field(3), (0, 0), (1, 1))


def test_p23_same_points_as_listed_set():
    F, w = field(3), (2, 3)
    ours = {tuple(int(x) for x in p) for p in enumerate_points(3, w).points}
    assert len(ours) == 4
    listed = [(1, 0), (0, 1), (1, 1), (2, 2)]
    assert {_key(F, Q, w) for Q in listed} == {_key(F, Q, w) for Q in ours}


def test_p1_over_gf2():
    P = enumerate_points(2, (1, 1)).points
    assert {tuple(map(int, p)) for p in P} == {(1, 0), (0, 1), (1, 1)}


def test_311_count():
    assert enumerate_points(3, (3, 1, 1)).n == 13


def test_structured_311_blocks():
    S = structured_representatives(3, (3, 1, 1))
    b = S.blocks
    sizes = [e - s for s, e in b["affine"]] + [b["origin"][1] - b["origin"][0],
                                               b["infinity"][1] - b["infinity"][0]]
    assert sizes == [4, 4, 1, 4]
    F = field(3)
    keys = {_key(F, tuple(map(int, p)), (3, 1, 1)) for p in S.points}
    assert len(keys) == 13


def test_structured_123_valid():
    assert structured_representatives(3, (1, 2, 3)).n == 13


def test_structured_gcd_obstruction():
    with pytest.raises(StructureError, match="gcd"):
        structured_representatives(3, (2, 3))


@pytest.mark.parametrize("q,w", [(3, (3, 1, 1)), (4, (1, 2, 3)), (5, (3, 2, 2)), (3, (1, 1, 1, 2))])
def test_cone_property(q, w):
    S = structured_representatives(q, w)
    m = len(w) - 1
    seen = set()
    for s, e in S.blocks["affine"]:
        blk = {tuple(map(int, p)) for p in S.points[s:e]}
        assert all(p[0] == 1 for p in blk)
        assert not (seen & blk)
        seen |= blk
    tails = {p[1:] for p in seen}
    assert tails == {v for v in product(range(q), repeat=m) if any(v)}
    o = S.points[S.blocks["origin"][0]]
    assert tuple(map(int, o)) == (1,) + (0,) * m


@pytest.mark.parametrize("w,d,out", [((2, 4, 6), 8, ((1, 2, 3), 4)), ((2, 4, 6), 7, None),
                                     ((1, 2, 3), 5, ((1, 2, 3), 5))])
def test_gcd_reduce(w, d, out):
    assert gcd_reduce(w, d) == out


def test_delorme_identity():
    r = delorme_reduce((3, 1, 1), 3)
    assert (r.gamma, r.alpha0, r.d0, r.weights) == (1, 0, 3, (3, 1, 1))


@pytest.mark.parametrize("d,a0,d0", [(6, 0, 2), (8, 1, 2)])
def test_delorme_236(d, a0, d0):
    r = delorme_reduce((2, 3, 6), d)
    assert (r.gamma, r.alpha0, r.d0, r.weights) == (3, a0, d0, (2, 1, 2))
    assert d == r.alpha0 * 2 + r.d0 * 3


def test_delorme_precondition():
    with pytest.raises(PreconditionError):
        delorme_reduce((2, 4, 6), 4)


@pytest.mark.parametrize("q,w", [(3, (2, 3, 6)), (4, (2, 3, 6)), (5, (3, 2, 2)), (7, (1, 2, 4))])
def test_delorme_point_map_bijective(q, w):
    F = field(q)
    r = delorme_reduce(w, 0)
    P = canonical_points(q, w)
    img = r.point_map(F, P)
    keys = {_key(F, tuple(map(int, p)), r.weights) for p in img}
    assert len(keys) == count_points(q, len(w) - 1)


def test_standard_points_leading_one():
    P = standard_points(7, (1, 1, 2))
    for p in P:
        nz = np.flatnonzero(p)
        if nz[0] < 2:
            assert p[nz[0]] == 1
    assert len(P) == 57


@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9]), st.lists(st.integers(1, 7), min_size=1, max_size=4))
def test_orbit_partition(q, w):
    if q ** len(w) > 5000:
        w = w[:3]
    keys, sizes = orbit_partition(q, tuple(w))
    assert len(keys) == count_points(q, len(w) - 1)
    assert (sizes == q - 1).all()
    P = canonical_points(q, tuple(w))
    assert len(P) == len(keys)


@given(st.sampled_from([3, 5, 7, 9]), st.integers(1, 4), st.data())
def test_radical_scalar(q, g, data):
    F = field(q)
    xs = [RadicalScalar(q, g, data.draw(st.integers(0, g - 1)), data.draw(st.integers(0, q - 1)))
          for _ in range(3)]
    a, b, c = xs
    assert (a * b) * c == a * (b * c)
    u, v = RadicalScalar(q, g, 0, xs[0].a), RadicalScalar(q, g, 0, xs[1].a)
    assert (u * v).value() == F.mul(u.a, v.a)
    lam = RadicalScalar.lam_power(q, g, 1)
    acc = RadicalScalar.lam_power(q, g, 0)
    for _ in range(g):
        acc = acc * lam
    assert acc.value() == F.xi
