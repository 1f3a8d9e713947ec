from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from wprm.codes import LinearCode, matrix_rank
from wprm.construct import affine_points
from wprm.errors import ConsistencyError, DomainError
from wprm.field import field
from wprm.monomials import (affine_reduce, congruence_classes, congruence_monomials, denumerant,
                            enumerate_monomials, equivalent_mod_ideal, evaluate_monomials,
                            full_monomials, monomial_compare, plain_affine_monomials,
                            projective_classes, reduced_monomials, wdeg)
from wprm.space import canonical_points, delorme_reduce, standard_points

weights = st.lists(st.integers(1, 15), min_size=1, max_size=4).map(tuple)


@pytest.mark.parametrize("d,w,n", [(0, (2, 5, 7), 1), (3, (3, 1, 1), 5), (6, (2, 3), 2)])
def test_denumerant(d, w, n):
    assert denumerant(d, w) == n


def test_enumerate_examples():
    assert enumerate_monomials(2, (1, 1, 2)) == [(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 1)]
    assert enumerate_monomials(1, (1, 1, 2)) == [(1, 0, 0), (0, 1, 0)]
    assert enumerate_monomials(5, (2, 3)) == [(1, 1)]


def test_equivalence_examples():
    assert equivalent_mod_ideal((3, 1), (1, 3), 3, (1, 1))
    assert not equivalent_mod_ideal((3, 1), (1, 1), 3, (1, 1))
    # same support and congruent exponents, but degrees 568 and 576
    assert not equivalent_mod_ideal((260, 4, 4), (8, 84, 20), 5, (2, 5, 7))
    with pytest.raises(DomainError):
        equivalent_mod_ideal((1, 2), (1, 2, 3), 3, (1, 1))


def test_reduced_low_degree_is_full():
    q, w = 7, (1, 2, 3)
    for d in range(0, min(w) * (q - 1)):
        assert reduced_monomials(d, w, q).members == sorted(
            enumerate_monomials(d, w), key=lambda a: (wdeg(a, w),) + tuple(reversed(a)))


def test_reduced_p1_degree4_rank_oracle():
    q, w = 3, (1, 1)
    M = reduced_monomials(4, w, q)
    r = matrix_rank(field(q), evaluate_monomials(q, enumerate_monomials(4, w), canonical_points(q, w)))
    assert len(M) == r == 4


def test_reduced_full_degree_280():
    M = reduced_monomials(280, (2, 5, 7), 5)
    assert len(M) == 31


def test_rank_guard_raises_on_bad_points():
    # evaluating at two copies of one point drops the rank below the class count
    P = np.array([[1, 0], [1, 0]], dtype=np.uint8)
    with pytest.raises(ConsistencyError) as e:
        reduced_monomials(2, (1, 1), 3, points=P)
    assert e.value.data == {"classes": 3, "rank": 1}


@pytest.mark.parametrize("q,a,out", [(3, (3, 1), (1, 1)), (3, (2, 0), (2, 0)), (5, (84,), (4,))])
def test_affine_reduce(q, a, out):
    assert affine_reduce(a, q) == out
    X = affine_points(q, len(a))
    assert np.array_equal(evaluate_monomials(q, [a], X), evaluate_monomials(q, [out], X))


def test_congruence_examples():
    M = congruence_monomials(3, 3, (1, 1))
    assert sorted(M.members) == sorted([(0, 0)] + enumerate_monomials(3, (1, 1)))
    assert LinearCode.from_rows(3, evaluate_monomials(3, M.members, affine_points(3, 2))).k == 5
    M0 = congruence_monomials(0, 3, (1, 1))
    assert M0.members == [(0, 0)]
    # d = w0 (q-1) with gcd(w0, q-1) = 1: dimension den(d; w)
    q, w0, wt = 4, 2, (1, 3)
    d = w0 * (q - 1)
    C = LinearCode.from_rows(q, evaluate_monomials(q, congruence_monomials(d, w0, wt).members,
                                                   affine_points(q, 2)))
    assert C.k == denumerant(d, (w0,) + wt)


def test_compare_examples():
    assert monomial_compare((1, 0), (0, 1), (1, 1)) == -1
    assert monomial_compare((1, 2), (1, 2), (1, 1)) == 0
    assert monomial_compare((2, 0, 0), (0, 1, 0), (1, 2, 3)) == -1


def test_full_flavor():
    S = full_monomials(7, (1, 2, 3))
    assert S.flavor == "full" and len(S) == denumerant(7, (1, 2, 3))


@pytest.mark.parametrize("q", [3, 4, 5])
def test_projective_classes_brute(q):
    for w in [(1, 1, 2), (2, 3), (3, 1, 1), (1, 2, 3)]:
        for d in range(0, 16):
            brute = {affine_reduce(a, q) for a in enumerate_monomials(d, w)}
            fast = {tuple(map(int, r)) for r in projective_classes(d, w, q)}
            assert fast == brute


@pytest.mark.parametrize("q", [3, 4, 5])
def test_congruence_classes_brute(q):
    for w0, wt in [(3, (1, 1)), (2, (1, 3)), (1, (2, 2))]:
        for d in range(0, 14):
            brute = {affine_reduce(a, q) for a in congruence_monomials(d, w0, wt).members}
            fast = {tuple(map(int, r)) for r in congruence_classes(d, w0, wt, q)}
            assert fast == brute


@given(st.integers(0, 60), weights)
def test_enumeration_count(d, w):
    M = enumerate_monomials(d, w)
    assert len(M) == denumerant(d, w)
    assert all(wdeg(a, w) == d for a in M)


@given(st.sampled_from([2, 3, 4, 5]), st.lists(st.integers(1, 4), min_size=2, max_size=3).map(tuple),
       st.integers(0, 14), st.sampled_from(["canonical", "standard"]))
def test_rank_guard(q, w, d, layout):
    from math import gcd
    if layout == "standard" and any(gcd(x, q - 1) != 1 for x in w[:-1]):
        layout = "canonical"
    P = canonical_points(q, w) if layout == "canonical" else standard_points(q, w)
    M = reduced_monomials(d, w, q, points=P)
    r = matrix_rank(field(q), evaluate_monomials(q, enumerate_monomials(d, w), P)) if d >= 0 else 0
    assert len(M) == r


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_affine_reduce_exhaustive(q):
    for m in (1, 2):
        X = affine_points(q, m)
        for a in product(range(0, 2 * q + 2), repeat=m):
            r = affine_reduce(a, q)
            assert affine_reduce(r, q) == r
            assert np.array_equal(evaluate_monomials(q, [a], X), evaluate_monomials(q, [r], X))


@given(st.integers(0, 20), st.lists(st.integers(1, 5), min_size=1, max_size=3).map(tuple))
def test_congruence_mod_one_is_plain(d, wt):
    plain = sorted(a for D in range(d + 1) for a in enumerate_monomials(D, wt))
    assert sorted(plain_affine_monomials(d, wt)) == plain


@pytest.mark.parametrize("q,w0,wt,d", [(3, 1, (2, 2), 6), (4, 1, (2, 4), 9), (5, 3, (2, 4), 11),
                                       (4, 2, (3, 3), 12), (3, 1, (3, 6), 7)])
def test_delorme_congruence_codes(q, w0, wt, d):
    red = delorme_reduce((w0,) + wt, d)
    X = affine_points(q, len(wt))
    A = LinearCode.from_rows(q, evaluate_monomials(q, congruence_monomials(d, w0, wt).members, X), len(X))
    B = LinearCode.from_rows(q, evaluate_monomials(q, congruence_monomials(red.d0, w0, red.weights[1:]).members, X),
                             len(X))
    assert A == B
