import pytest
from hypothesis import given, strategies as st

from wprm.errors import DomainError, PreconditionError
from wprm.lattice import (den_check, idp_check, idp_pair_check, schur_check, schur_closure_predicate,
                          simplex_points, sumset)
from wprm.monomials import denumerant, enumerate_monomials

weights = st.lists(st.integers(1, 5), min_size=2, max_size=4).map(tuple)


def test_pair_example():
    rep = idp_pair_check(1, 1, (1, 1, 2))
    assert not rep["holds"] and rep["witnesses"] == [[0, 0, 1]]


def test_ogata_witness():
    rep = idp_check(30, (1, 6, 10, 15))
    assert not rep["holds"] and rep["ell"] == 2
    assert rep["witnesses"] == [[1, 4, 2, 1]]


def test_idp_holds():
    rep = idp_check(2, (1, 1, 2), ell_max=3)
    assert rep["holds"] and rep["ell_max"] == 3 and rep["witnesses"] == []
    assert idp_check(2, (1, 1, 2))["ell_max"] == 1


def test_idp_precondition():
    with pytest.raises(PreconditionError, match="lcm"):
        idp_check(3, (1, 1, 2))


def test_sumset_weight_mismatch():
    with pytest.raises(DomainError):
        sumset(simplex_points(1, (1, 1)), simplex_points(1, (1, 2)))
    with pytest.raises(DomainError):
        idp_pair_check(-1, 1, (1, 1))


def test_predicate():
    assert schur_closure_predicate((1, 1, 2), 2, 4) == "guaranteed"
    assert schur_closure_predicate((1, 1, 2), 1, 1) == "unknown"
    assert schur_closure_predicate((1, 2, 3, 5), 60, 120) == "guaranteed"
    assert schur_closure_predicate((1, 2, 3, 5), 30, 30) == "unknown"
    assert schur_closure_predicate((1, 2, 3, 5), 6, 6) == "unknown"
    assert schur_closure_predicate((1, 2, 3, 5), 30, 30, idp_verified=True) == "guaranteed"


def test_schur_small_direct():
    rep = schur_check(5, (1, 1, 2), 1, 1)
    assert rep["direct_agrees"] and not rep["equal"] and rep["codim"] == 1
    assert rep["witnesses"] == [[0, 0, 1]] and rep["witnesses_complete"]
    rep = schur_check(5, (1, 1, 2), 2, 2)
    assert rep["equal"] and rep["direct_agrees"]


def test_schur_ogata_large_field():
    rep = schur_check(67, (1, 6, 10, 15), 30, 30)
    assert rep["n"] == 305320
    assert rep["product_dim"] == 80 and rep["full_dim"] == 81 and rep["codim"] == 1
    assert rep["witnesses"] == [[1, 4, 2, 1]] and rep["witnesses_complete"]


@given(st.integers(0, 12), weights)
def test_den_check(d, w):
    assert den_check(d, w)


@given(st.integers(0, 6), st.integers(0, 6), weights)
def test_sumset_inside_and_degree(d1, d2, w):
    S = sumset(simplex_points(d1, w), simplex_points(d2, w))
    assert S.points <= set(enumerate_monomials(d1 + d2, w))
    assert len(S) <= denumerant(d1 + d2, w)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(1, 4))
def test_standard_simplex_is_normal(d1, d2, m):
    assert idp_pair_check(d1, d2, (1,) * (m + 1))["holds"]


@given(st.integers(1, 3), st.integers(1, 3), st.lists(st.integers(1, 4), min_size=2, max_size=3).map(tuple))
def test_guaranteed_implies_equality(a, b, w):
    from math import lcm
    L = lcm(*w)
    d1, d2 = a * L, b * L
    if schur_closure_predicate(w, d1, d2) == "guaranteed":
        assert idp_pair_check(d1, d2, w)["holds"]
