from math import gcd, inf

import pytest
from hypothesis import given, assume, strategies as st

from wprm.bounds import (b_value, best_over_orderings, e_threshold, feasible_set, footprint_min_distance,
                         lower_bound, lower_bound_hierarchy, lowdeg_split, min_distance_bound,
                         upper_bound_components, upper_bound_lowdeg)
from wprm.codes import weight_hierarchy
from wprm.construct import build_wprm, build_wrm, build_wrm_congruence
from wprm.errors import DomainError, PreconditionError
from wprm.monomials import denumerant

EXACT_311_3 = (3, 6, 9, 12, 13)


def test_ex_complete_r3():
    b = lower_bound(3, (3, 1, 1), 3, 3)
    assert b.Y == [(0, 0), (0, 1)]
    assert b.table == {(0, 0): 9, (0, 1): 11}
    assert b.value == 9


def test_ex_complete_hierarchy():
    assert lower_bound_hierarchy(3, (3, 1, 1), 3) == EXACT_311_3


def test_ex_complete_Y_small_r():
    for r in (1, 2, 3):
        assert lower_bound(3, (3, 1, 1), 3, r).Y == [(0, 0), (0, 1)]


def test_Y_r4_by_definition():
    # dims A=5, U=1, V=4, E=0; at r=4 the three inequalities admit (0,0) and (0,1)
    b = lower_bound(3, (3, 1, 1), 3, 4)
    assert b.dims == {"A": 5, "U": 1, "V": 4, "E": 0}
    assert b.Y == [(0, 0), (0, 1)]
    assert b.value == 12


@pytest.mark.xfail(strict=True, reason="the stated r=4 set {(0,1)} contradicts the defining inequalities")
def test_Y_r4_stated_value():
    assert lower_bound(3, (3, 1, 1), 3, 4).Y == [(0, 1)]


def test_bound_instance_json():
    js = lower_bound(3, (3, 1, 1), 3, 3, provider="exact").to_json()
    assert js["value"] == 9 and js["providers"]["V"] == "exact"
    assert [0, 0, 9] in js["B"]


def test_lower_bound_preconditions():
    with pytest.raises(PreconditionError):
        lower_bound(3, (2, 1, 1), 4, 1)
    with pytest.raises(DomainError):
        lower_bound(3, (3, 1, 1), 3, 6)
    with pytest.raises(DomainError):
        lower_bound(3, (3, 1, 1), 3, 1, provider="oracle")
    with pytest.raises(PreconditionError):
        lower_bound(3, (3, 1, 1), 3, 2, provider="footprint")


def test_conventions():
    hs = {"A": (2, 4), "U": (), "V": (3,), "E": ()}
    # d_0 = 0 and beyond-dimension entries are infinite
    assert b_value(3, 1, 0, 0, hs) == 2 + 3
    assert b_value(3, 1, 0, 1, hs) == inf
    assert b_value(3, 2, 1, 0, hs) == inf
    assert feasible_set(2, {"A": 1, "U": 0, "V": 2, "E": 1}) == [(1, 0)]


def test_e_threshold():
    assert e_threshold(3, (3, 1, 1)) == 6
    assert e_threshold(5, (1, 2, 3)) == 8


@pytest.mark.parametrize("d,expect", [(3, 3), (6, 2), (1, 9)])
def test_min_distance_bound(d, expect):
    assert min_distance_bound(3, (3, 1, 1), d) == expect


def test_min_distance_bound_drops_zero_component():
    # d = 1 < w_0: the congruence component WRM_{d-w_0} is the zero code
    assert build_wrm_congruence(3, 3, (1, 1), 1 - 3).k == 0
    assert min_distance_bound(3, (3, 1, 1), 1) <= weight_hierarchy(build_wprm(3, (3, 1, 1), 1).code)[0]


def test_upper_bound_components():
    assert upper_bound_components(3, (3, 1, 1), 3, 3) == 9
    U = weight_hierarchy(build_wrm_congruence(3, 3, (1, 1), 0))
    assert upper_bound_components(3, (3, 1, 1), 3, 1) <= U[0]
    # r=2 exceeds dim U = 1: only the tail term q d_2(PRS_3) = 6 remains
    assert upper_bound_components(3, (3, 1, 1), 3, 2) == 6
    with pytest.raises(DomainError):
        upper_bound_components(3, (3, 1, 1), 3, 5)


def test_lowdeg_r1():
    # min(w) = 1 and gcd(w_0, q-1) = 1: the bound is d_1(WRM_{d-w_0}(w_0; w'))
    assert lowdeg_split(2, (1, 1, 2), 1) == (0, 1)
    h = weight_hierarchy(build_wrm_congruence(3, 1, (1, 2), 1))
    assert upper_bound_lowdeg(3, (1, 1, 2), 2, 1) == h[0]


def test_lowdeg_top_branch():
    r = denumerant(2, (1, 1, 2))
    assert lowdeg_split(2, (1, 1, 2), r) == (3, 0)
    assert upper_bound_lowdeg(3, (1, 1, 2), 2, r) == 13


def test_lowdeg_311_cross_check():
    assert upper_bound_lowdeg(3, (3, 1, 1), 3, 3) >= EXACT_311_3[2]


def test_lowdeg_preconditions():
    with pytest.raises(PreconditionError):
        upper_bound_lowdeg(3, (1, 1, 2), 4, 1)
    with pytest.raises(PreconditionError, match="i=1"):
        upper_bound_lowdeg(3, (2, 2, 1), 2, 1)
    with pytest.raises(DomainError):
        lowdeg_split(2, (1, 1, 2), 7)


def test_orderings_q3():
    best, traces = best_over_orderings(3, (2, 3, 5), 20)
    assert traces[(3, 2, 5)] == (2, 3, 4, 5, 6, 8, 9, 10, 12)
    assert traces[(5, 2, 3)] == (1, 2, 3, 5, 6, 7, 9, 11, 12)
    assert best == (2, 3, 4, 5, 6, 8, 9, 11, 12)


def test_sharp_q4():
    h = (2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 19, 20, 21)
    assert lower_bound_hierarchy(4, (2, 3, 5), 30) == h


def test_no_ordering_q31():
    with pytest.raises(PreconditionError, match="no ordering"):
        best_over_orderings(31, (2, 3, 5), 30)


def test_footprint_examples():
    assert footprint_min_distance(3, (1, 1), 0) == 9
    assert footprint_min_distance(4, (1, 2), 0) == 16
    assert footprint_min_distance(3, (1, 1), 3) == 2
    assert footprint_min_distance(3, (1, 1), 3) <= weight_hierarchy(build_wrm(3, (1, 1), 3))[0]


def test_plain_wrm_provider_family():
    for d in range(1, 10):
        exact = weight_hierarchy(build_wprm(3, (3, 1, 1), d).code)
        plain = lower_bound_hierarchy(3, (3, 1, 1), d, provider="plain-wrm")
        assert all(a <= b for a, b in zip(plain, exact))


def test_delorme_dominance():
    red = lower_bound_hierarchy(3, (3, 1, 1), 6)
    raw = lower_bound_hierarchy(3, (3, 2, 2), 12)
    assert red == (2, 3, 5, 6, 8, 9, 11, 12, 13)
    assert raw == (1, 2, 3, 4, 6, 8, 10, 12, 13)
    assert all(a >= b for a, b in zip(red, raw))


def test_recursive_provider_is_lower_bound():
    exact = weight_hierarchy(build_wprm(2, (1, 1, 2, 3), 4).code)
    rec = lower_bound_hierarchy(2, (1, 1, 2, 3), 4, provider="recursive")
    assert all(a <= b for a, b in zip(rec, exact))


@given(st.sampled_from([2, 3, 4]), st.lists(st.integers(1, 4), min_size=1, max_size=2), st.integers(0, 10))
def test_footprint_lower_bounds_exact(q, wt, d):
    assert footprint_min_distance(q, tuple(wt), d) <= weight_hierarchy(build_wrm(q, tuple(wt), d))[0]


@given(st.sampled_from([2, 3, 4]), st.lists(st.integers(1, 4), min_size=3, max_size=3).map(tuple),
       st.integers(1, 14))
def test_sandwich(q, w, d):
    assume(gcd(w[0], q - 1) == 1)
    C = build_wprm(q, w, d).code
    assume(C.k > 0)
    exact = weight_hierarchy(C)
    low = lower_bound_hierarchy(q, w, d)
    assert all(a <= b for a, b in zip(low, exact))
    for r in range(1, C.k + 1):
        try:
            up = upper_bound_components(q, w, d, r)
        except DomainError:
            continue
        assert exact[r - 1] <= up
    if d <= min(w) * q:
        for r in range(1, min(C.k, denumerant(d, w)) + 1):
            try:
                assert exact[r - 1] <= upper_bound_lowdeg(q, w, d, r)
            except PreconditionError:
                pass
    assert min_distance_bound(q, w, d) <= exact[0]
